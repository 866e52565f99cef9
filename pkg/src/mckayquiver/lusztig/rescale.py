"""Match relation sets that differ by a rescaling of arrows.

If another arrow basis has P_X = lam_X * X for each arrow X, a relation
sum c_k P_Xk P_Yk becomes sum c_k lam_Xk lam_Yk Xk Yk.  Given relations in
both bases (one relation per vertex pair), :func:`solve_rescaling` looks for
nonzero rationals lam_X making every pair of relations proportional.  The
multiplicative equations are solved exactly: prime exponents over Q and signs
over GF(2).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import gcd
from typing import Sequence

from ..linalg import rref

__all__ = ["apply_rescaling", "arrow_ratios", "solve_rescaling", "translate_relation"]


def _factor(n: int) -> dict[int, int]:
    out, p = {}, 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _valuation(q: Fraction) -> dict[int, int]:
    out = dict(_factor(q.numerator))
    for p, e in _factor(q.denominator).items():
        out[p] = out.get(p, 0) - e
    return out


class _GF2:
    """Minimal field of two elements for the sign system."""

    __slots__ = ("v",)

    def __init__(self, v):
        self.v = int(v) & 1

    def __add__(self, o):
        return _GF2(self.v ^ o.v)

    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, o):
        return _GF2(self.v & o.v)

    def __rtruediv__(self, one):
        if not self.v:
            raise ZeroDivisionError
        return _GF2(1)

    def __truediv__(self, o):
        if not o.v:
            raise ZeroDivisionError
        return self

    def __bool__(self):
        return bool(self.v)


def _solve(rows, rhs, nvars, zero, one):
    """Particular solution (free variables 0) of rows x = rhs, or None."""
    return _solve_with(rows, rhs, nvars, zero, {})


def _solve_with(rows, rhs, nvars, zero, free_values):
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, piv = rref(aug, nvars + 1)
    if nvars in piv:
        return None
    x = [zero] * nvars
    for f, v in free_values.items():
        x[f] = v
    for row, p in zip(red, piv):
        x[p] = row[nvars] - sum((row[f] * v for f, v in free_values.items()), zero)
    return x


def _integer_solution(rows, rhs, nvars, max_tries=4096):
    """Integer solution found by trying free variables modulo the denominators."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, piv = rref(aug, nvars + 1)
    if nvars in piv:
        return None
    free = [c for c in range(nvars) if c not in piv]
    den = 1
    for row in red:
        for x in row:
            den = den * x.denominator // gcd(den, x.denominator)
    for k, values in enumerate(product(range(den), repeat=len(free))):
        if k >= max_tries:
            break
        sol = _solve_with(rows, rhs, nvars, Fraction(0), {f: Fraction(v) for f, v in zip(free, values)})
        if all(x.denominator == 1 for x in sol):
            return sol
    return None


def solve_rescaling(
    names: Sequence[str],
    pairs: Sequence[tuple[Sequence[tuple[str, str]], Sequence[Fraction], Sequence[Fraction]]],
) -> dict[str, Fraction] | None:
    """Find lam with target_k * lam_X lam_Y proportional to ours_k in every pair.

    ``pairs`` holds (paths, ours, target) with paths as (second, first)
    arrow names and rational coefficient rows.  Returns None if the zero
    patterns differ or no rational rescaling exists.
    """
    idx = {nm: i for i, nm in enumerate(names)}
    eqs = []  # (exponent count per arrow, rational ratio)
    for paths, ours, target in pairs:
        support = [k for k, c in enumerate(ours) if c]
        if support != [k for k, c in enumerate(target) if c]:
            return None
        ref = support[0]
        for k in support[1:]:
            counts = [0] * len(names)
            for nm in paths[k]:
                counts[idx[nm]] += 1
            for nm in paths[ref]:
                counts[idx[nm]] -= 1
            # lam-product ratio = (ours_k / ours_ref) * (target_ref / target_k)
            eqs.append((counts, Fraction(ours[k]) / ours[ref] * Fraction(target[ref]) / target[k]))
    if not eqs:
        return {nm: Fraction(1) for nm in names}
    primes = sorted({p for _, q in eqs for p in _valuation(abs(q))})
    nv = len(names)
    exps = {}
    rows_q = [[Fraction(c) for c in counts] for counts, _ in eqs]
    for p in primes:
        sol = _integer_solution(rows_q, [Fraction(_valuation(abs(q)).get(p, 0)) for _, q in eqs], nv)
        if sol is None:
            return None
        exps[p] = sol
    rows_2 = [[_GF2(c % 2) for c in counts] for counts, _ in eqs]
    signs = _solve(rows_2, [_GF2(q < 0) for _, q in eqs], nv, _GF2(0), _GF2(1))
    if signs is None:
        return None
    lam = {}
    for i, nm in enumerate(names):
        v = Fraction(-1 if signs[i].v else 1)
        for p in primes:
            v *= Fraction(p) ** int(exps[p][i])
        lam[nm] = v
    # exact confirmation
    for counts, q in eqs:
        prod = Fraction(1)
        for i, c in enumerate(counts):
            prod *= lam[names[i]] ** c
        if prod != q:
            return None
    return lam


def apply_rescaling(paths, target, lam) -> list[Fraction]:
    """Coefficients of a target-basis relation rewritten in our arrows."""
    return [Fraction(c) * lam[x] * lam[y] for c, (x, y) in zip(target, paths)]


def arrow_ratios(ours, theirs) -> dict[str, tuple[str, object]]:
    """For two arrow bases with one arrow per vertex pair, map each of their
    names to (our name, lam) with our arrow = lam * their arrow."""
    out = {}
    for t in theirs.arrows:
        (o,) = ours.arrows_between(t.src, t.dst)
        lam = None
        for u, v in zip(o.entries(), t.entries()):
            for a, b in zip(u, v):
                if b:
                    lam = a / b
                    break
            if lam is not None:
                break
        if lam is None or any(a != lam * b for u, v in zip(o.entries(), t.entries()) for a, b in zip(u, v)):
            raise ValueError(f"arrow {t.name} is not a multiple of {o.name}")
        out[t.name] = (o.name, lam)
    return out


def translate_relation(row, paths, ratios, our_paths):
    """Rewrite a relation over their paths as a row over our paths.

    Their path X.Y equals (ours X.Y) / (lam_X lam_Y).
    """
    zero = next(iter(ratios.values()))[1] * 0
    out = [zero] * len(our_paths)
    for c, (x, y) in zip(row, paths):
        if c:
            (ox, lx), (oy, ly) = ratios[x], ratios[y]
            k = our_paths.index((ox, oy))
            out[k] = out[k] + c / (lx * ly)
    return out
