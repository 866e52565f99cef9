"""Exact arithmetic in cyclotomic fields Q(zeta_m).

Elements are stored in the power basis ``1, z, ..., z^(phi(m)-1)`` of
``Q[x]/Phi_m(x)``, so two elements of the same order are equal exactly when
their coefficient tuples agree.  Elements of different orders interoperate by
embedding both into the field of order ``lcm(m, m')``.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence, Union

__all__ = [
    "Cyclo",
    "cyclotomic_polynomial",
    "euler_phi",
    "lcm",
    "zeta",
]

Scalar = Union["Cyclo", int, Fraction]


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    if m < 1:
        raise ValueError(f"order must be positive, got {m}")
    result, k, p = m, m, 2
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            result -= result // p
        p += 1
    if k > 1:
        result -= result // k
    return result


def _mobius(m: int) -> int:
    k, p, sign = m, 2, 1
    while p * p <= k:
        if k % p == 0:
            k //= p
            if k % p == 0:
                return 0
            sign = -sign
        p += 1
    if k > 1:
        sign = -sign
    return sign


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # coefficient lists are lowest degree first; den is monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, lowest degree first."""
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Power-basis coordinates of z^j for j = 0 .. m-1 (all integral)."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(m):
        rows.append(tuple(cur))
        # multiply by x and reduce with x^deg = -sum phi_i x^i
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * phi[i] for i, c in enumerate(cur)]
    return tuple(rows)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


class Cyclo:
    """An element of Q(zeta_order) in the power basis modulo Phi_order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable = ()):
        order = int(order)
        deg = euler_phi(order)
        cs = [_frac(c) for c in coeffs]
        if len(cs) > deg:
            # reduce an arbitrary polynomial in z modulo Phi_order
            table = _power_table(order)
            red = [Fraction(0)] * deg
            for j, c in enumerate(cs):
                if c:
                    for i, t in enumerate(table[j % order]):
                        if t:
                            red[i] += c * t
            cs = red
        else:
            cs = cs + [Fraction(0)] * (deg - len(cs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclo is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def rational(cls, q, order: int = 1) -> "Cyclo":
        return cls(order, [_frac(q)])

    @classmethod
    def zeta(cls, order: int, k: int = 1) -> "Cyclo":
        return cls(order, _power_table(order)[k % order])

    @classmethod
    def from_exponents(cls, order: int, exps: Sequence[int]) -> "Cyclo":
        """Element sum_k exps[k] * z^k for a length-``order`` integer vector."""
        deg = euler_phi(order)
        table = _power_table(order)
        acc = [0] * deg
        for k, e in enumerate(exps):
            if e:
                for i, t in enumerate(table[k % order]):
                    if t:
                        acc[i] += e * t
        return cls(order, acc)

    # -- coercion -----------------------------------------------------
    def embed(self, target: int) -> "Cyclo":
        """Image under z_order -> z_target^(target/order)."""
        if target % self.order:
            raise ValueError(f"cannot embed order {self.order} into order {target}")
        if target == self.order:
            return self
        step = target // self.order
        table = _power_table(target)
        acc = [Fraction(0)] * euler_phi(target)
        for k, c in enumerate(self.coeffs):
            if c:
                for i, t in enumerate(table[(k * step) % target]):
                    if t:
                        acc[i] += c * t
        return Cyclo(target, acc)

    def _coerce(self, other) -> tuple["Cyclo", "Cyclo"]:
        if not isinstance(other, Cyclo):
            other = Cyclo(self.order, [_frac(other)])
        if other.order == self.order:
            return self, other
        m = lcm(self.order, other.order)
        return self.embed(m), other.embed(m)

    # -- field operations ----------------------------------------------
    def __add__(self, other):
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return Cyclo(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.order, [-x for x in self.coeffs])

    def __sub__(self, other):
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return Cyclo(a.order, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclo(self.order, [x * other for x in self.coeffs])
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        m = a.order
        deg = len(a.coeffs)
        if deg == 1:
            return Cyclo(m, [a.coeffs[0] * b.coeffs[0]])
        prod = [Fraction(0)] * (2 * deg - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return Cyclo(m, prod)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclo":
        if not self:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        m = self.order
        if len(self.coeffs) == 1:
            return Cyclo(m, [1 / self.coeffs[0]])
        # extended Euclid in Q[x]: find s with s*a = 1 mod Phi_m
        phi = [Fraction(c) for c in cyclotomic_polynomial(m)]
        r0, r1 = phi, _trim(list(self.coeffs))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1 or r1[0] == 0:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _trim(_poly_sub(s0, _poly_mul(q, s1)))
        inv_lead = 1 / r1[0]
        return Cyclo(m, [c * inv_lead for c in s1])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Cyclo(self.order, [x / other for x in self.coeffs])
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclo(self.order, [1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "Cyclo":
        """Complex conjugate, i.e. the automorphism z -> z^-1."""
        m = self.order
        if len(self.coeffs) == 1:
            return self
        table = _power_table(m)
        acc = [Fraction(0)] * len(self.coeffs)
        for k, c in enumerate(self.coeffs):
            if c:
                for i, t in enumerate(table[(-k) % m]):
                    if t:
                        acc[i] += c * t
        return Cyclo(m, acc)

    def galois(self, j: int) -> "Cyclo":
        """Automorphism z -> z^j for j coprime to the order."""
        m = self.order
        if gcd(j, m) != 1:
            raise ValueError(f"{j} is not a unit modulo {m}")
        table = _power_table(m)
        acc = [Fraction(0)] * len(self.coeffs)
        for k, c in enumerate(self.coeffs):
            if c:
                for i, t in enumerate(table[(j * k) % m]):
                    if t:
                        acc[i] += c * t
        return Cyclo(m, acc)

    # -- predicates / conversion ----------------------------------------
    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, Cyclo):
            if other.order == self.order:
                return self.coeffs == other.coeffs
            a, b = self._coerce(other)
            return a.coeffs == b.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        # the normalized trace does not depend on the ambient order, so
        # equal elements of different orders hash alike
        return hash(self.normalized_trace())

    def normalized_trace(self) -> Fraction:
        """Average of the Galois conjugates; rational and order independent."""
        m = self.order
        total = Fraction(0)
        for k, c in enumerate(self.coeffs):
            if c:
                e = m // gcd(k, m)
                total += c * Fraction(_mobius(e), euler_phi(e))
        return total

    def key(self) -> tuple:
        """Hashable exact key; only comparable between equal orders."""
        return (self.order, self.coeffs)

    def to_complex(self) -> complex:
        """Numeric value for display only."""
        z = cmath.exp(2j * cmath.pi / self.order)
        return sum(complex(c) * z**k for k, c in enumerate(self.coeffs))

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "Cyclo":
        order = int(data["order"])
        coeffs = [Fraction(s) for s in data["coeffs"]]
        if len(coeffs) != euler_phi(order):
            raise ValueError("coefficient count does not match phi(order)")
        return cls(order, coeffs)

    def __repr__(self):
        return f"Cyclo({self.order}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mon = f"z{self.order}" if k == 1 else f"z{self.order}^{k}"
                if c == 1:
                    terms.append(mon)
                elif c == -1:
                    terms.append("-" + mon)
                else:
                    terms.append(f"{c}*{mon}")
        if not terms:
            return "0"
        return "+".join(terms).replace("+-", "-")


def zeta(order: int, k: int = 1) -> Cyclo:
    return Cyclo.zeta(order, k)


def _trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _poly_divmod(num, den):
    num = _trim(list(num))
    den = _trim(list(den))
    if len(num) < len(den):
        return [Fraction(0)], num
    q = [Fraction(0)] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1] / lead
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    return q, _trim(num[: len(den) - 1] or [Fraction(0)])
