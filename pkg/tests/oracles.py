"""Independent brute-force models used as test oracles."""

from itertools import permutations, product
from math import sqrt

import numpy as np

from mckayquiver.cyclotomic import Cyclo
from mckayquiver.partitions import MultiPartition, Partition as P


# -- brute-force model of G(r,1,n) as pairs (permutation, colors) -----------------

def elements(r, n):
    return [(perm, cols) for perm in permutations(range(n)) for cols in product(range(r), repeat=n)]


def multiply(g, h, r):
    # matrix of (perm, cols) sends e_i to zeta^cols[i] e_perm[i]
    gp, gc = g
    hp, hc = h
    return tuple(gp[hp[i]] for i in range(len(hp))), tuple((hc[i] + gc[hp[i]]) % r for i in range(len(hp)))


def inverse(g, r):
    p, c = g
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv), tuple((-c[inv[j]]) % r for j in range(len(p)))


def cycle_data(g, r):
    p, c = g
    seen, comps = set(), [[] for _ in range(r)]
    for start in range(len(p)):
        if start in seen:
            continue
        i, length, color = start, 0, 0
        while i not in seen:
            seen.add(i)
            color += c[i]
            i = p[i]
            length += 1
        comps[color % r].append(length)
    return MultiPartition([P(sorted(x, reverse=True)) for x in comps])


def trace(g, r):
    p, c = g
    return Cyclo.from_exponents(r, [sum(1 for i in range(len(p)) if p[i] == i and c[i] == k) for k in range(r)])


def conjugacy_classes(r, n):
    elems = elements(r, n)
    left, classes = set(elems), []
    while left:
        x = next(iter(left))
        cls = {multiply(multiply(g, x, r), inverse(g, r), r) for g in elems}
        classes.append(cls)
        left -= cls
    return classes


# -- Young's orthogonal form, floating point ----------------------------------------

def syt(lam):
    n = sum(lam)
    out = []

    def rec(filled, k, tab):
        if k == n:
            out.append(dict(tab))
            return
        for i, row in enumerate(lam):
            j = filled[i]
            if j < row and (i == 0 or filled[i - 1] > j):
                filled[i] += 1
                tab[k] = (i, j)
                rec(filled, k + 1, tab)
                filled[i] -= 1
                del tab[k]

    rec([0] * len(lam), 0, {})
    return out


def orthogonal_generators(lam):
    tabs = syt(lam)
    index = {tuple(sorted(t.items())): i for i, t in enumerate(tabs)}
    n, d = sum(lam), len(tabs)
    gens = []
    for k in range(n - 1):
        m = np.zeros((d, d))
        for i, t in enumerate(tabs):
            (r1, c1), (r2, c2) = t[k], t[k + 1]
            a = (c2 - r2) - (c1 - r1)
            m[i, i] = 1 / a
            if abs(a) > 1:
                s = dict(t)
                s[k], s[k + 1] = t[k + 1], t[k]
                m[index[tuple(sorted(s.items()))], i] = sqrt(1 - 1 / a**2)
        gens.append(m)
    return gens


def cycle_rep_word(rho):
    word, start = [], 0
    for l in rho:
        word += list(range(start, start + l - 1))
        start += l
    return word


def orthogonal_form_trace(lam, rho):
    gens = orthogonal_generators(tuple(lam))
    m = np.eye(len(syt(tuple(lam))))
    for k in cycle_rep_word(rho):
        m = m @ gens[k]
    return float(np.trace(m))
