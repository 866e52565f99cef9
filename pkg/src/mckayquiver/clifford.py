"""Shift action on multipartitions and the labels of Irrep(G(r,p,n)).

With d = r/p, the quotient G(r,1,n)/G(r,p,n) is cyclic of order p and acts
on multipartitions by shifting components in steps of d.  An orbit has
length b and stabilizer order u = p/b.  Each orbit contributes u irreducibles
of G(r,p,n), labelled ``([rep], t)`` for t = 0..u-1, where ``rep`` is the
orbit minimum under ``MultiPartition.sort_key``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import MultiPartition, enumerate_multipartitions, multipartition_dim, parse_multipartition

__all__ = [
    "HIrrep",
    "OrbitClass",
    "fundamental_domain",
    "irreps_grpn",
    "orbit_of",
    "parse_hirrep",
    "shift",
]


def shift(lam: MultiPartition, i: int) -> MultiPartition:
    """Rotate components to the right by i: component k moves to k+i mod r."""
    r = len(lam)
    i %= r
    if i == 0:
        return lam
    return MultiPartition(lam[-i:] + lam[:-i])


def _check_rp(r: int, p: int) -> None:
    if r < 1 or p < 1 or r % p:
        raise ValueError(f"p must be a positive divisor of r (r={r}, p={p})")


@dataclass(frozen=True)
class OrbitClass:
    rep: MultiPartition
    r: int
    p: int
    b: int

    @property
    def d(self) -> int:
        return self.r // self.p

    @property
    def u(self) -> int:
        return self.p // self.b

    def members(self) -> list[MultiPartition]:
        """The b distinct shifts of the representative, by 0, d, ..., (b-1)d."""
        return [shift(self.rep, k * self.d) for k in range(self.b)]

    def text(self) -> str:
        return self.rep.text()


def orbit_of(lam: MultiPartition, p: int) -> OrbitClass:
    r = len(lam)
    _check_rp(r, p)
    d = r // p
    shifts = [shift(lam, k * d) for k in range(p)]
    distinct = set(shifts)
    rep = min(distinct, key=MultiPartition.sort_key)
    return OrbitClass(rep, r, p, len(distinct))


@dataclass(frozen=True)
class HIrrep:
    orbit: OrbitClass
    t: int = 0

    def __post_init__(self):
        if not 0 <= self.t < self.orbit.u:
            raise ValueError(f"label t={self.t} out of range for u={self.orbit.u}")

    @property
    def dim(self) -> int:
        return multipartition_dim(self.orbit.rep) // self.orbit.u

    def text(self) -> str:
        if self.orbit.u == 1:
            return self.orbit.text()
        return f"{self.orbit.text()}@{self.t}"

    def __str__(self):
        return self.text()


def parse_hirrep(text: str, p: int) -> HIrrep:
    """Read ``[1|1|1]@2``; the diagram may be any member of its orbit."""
    body, _, t = text.strip().partition("@")
    orbit = orbit_of(parse_multipartition(body), p)
    return HIrrep(orbit, int(t) if t else 0)


@lru_cache(maxsize=None)
def _irreps_cached(r: int, p: int, n: int) -> tuple[HIrrep, ...]:
    seen = {}
    for lam in enumerate_multipartitions(r, n):
        orb = orbit_of(lam, p)
        seen.setdefault(orb.rep, orb)
    orbits = sorted(seen.values(), key=lambda o: o.rep.sort_key())
    return tuple(HIrrep(o, t) for o in orbits for t in range(o.u))


def irreps_grpn(r: int, p: int, n: int) -> list[HIrrep]:
    _check_rp(r, p)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return list(_irreps_cached(r, p, n))


def fundamental_domain(h: HIrrep) -> range:
    """1-indexed components of ``h.orbit.rep`` whose cells may move.

    The representative is invariant under a shift by b*d, so it splits into
    u consecutive blocks of b*d components; label t owns block t.
    """
    width = h.orbit.b * h.orbit.d
    return range(h.t * width + 1, (h.t + 1) * width + 1)
