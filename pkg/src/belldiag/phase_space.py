"""Discrete phase space Z_d x Z_d: subgroups, cosets, striations.

Points of the phase space index the Weyl operators. The order-d subgroups
play the role of lines through the origin; shifting a subgroup gives a
coset, and the d parallel cosets of one subgroup partition the phase
space into a striation. For prime d there are exactly d+1 subgroups and
all of them are cyclic. For composite d all order-d subgroups are
enumerated, including non-cyclic ones such as Z_2 x Z_2 inside Z_4^2.

Uniform mixtures of the Bell projectors along one coset (subgroup states)
are separable and sit on the boundary of the PPT set, which makes the
coset structure the organizing principle behind the fast entanglement
criteria in :mod:`belldiag.detection`.

Points are (k, l) tuples. Orderings are canonical everywhere so that
enumeration output, coset indices, and CLI listings are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DimensionTooSmallError, NonPrimeDimensionError
from .weyl import CoefficientMatrix, bell_projector

Point = tuple[int, int]


@dataclass(frozen=True)
class Subgroup:
    """An order-d subgroup of Z_d x Z_d, elements sorted, containing (0,0)."""

    d: int
    elements: tuple[Point, ...]

    def __contains__(self, point) -> bool:
        return tuple(point) in self.elements


@dataclass(frozen=True)
class Coset:
    """A shifted subgroup. The shift is the lexicographically smallest element."""

    base: Subgroup
    shift: Point
    elements: tuple[Point, ...]

    def __contains__(self, point) -> bool:
        return tuple(point) in self.elements


@dataclass(frozen=True)
class Striation:
    """The d parallel cosets of one subgroup, partitioning the phase space."""

    generator: Subgroup
    cosets: tuple[Coset, ...]


def _check_dim(d: int) -> None:
    if d < 2:
        raise DimensionTooSmallError(f"need d >= 2, got {d}")


def _span(d: int, g1: Point, g2: Point) -> frozenset[Point]:
    """All Z_d-combinations a*g1 + b*g2 of two generators."""
    pts = set()
    for a in range(d):
        x1 = (a * g1[0]) % d
        y1 = (a * g1[1]) % d
        for b in range(d):
            pts.add(((x1 + b * g2[0]) % d, (y1 + b * g2[1]) % d))
    return frozenset(pts)


@lru_cache(maxsize=16)
def enumerate_subgroups(d: int) -> tuple[Subgroup, ...]:
    """All distinct order-d subgroups of Z_d x Z_d.

    Brute force over one- and two-generator sets (every subgroup of a
    rank-2 abelian group needs at most two generators), keeping the spans
    with exactly d elements. Deduplicated and sorted by element lists, so
    the output order is canonical. For prime d this yields the d+1 cyclic
    subgroups; for composite d every order-d subgroup is included, cyclic
    or not.
    """
    _check_dim(d)
    points = [(k, l) for k in range(d) for l in range(d)]
    seen: set[frozenset[Point]] = set()
    for i, g1 in enumerate(points):
        for g2 in points[i:]:
            s = _span(d, g1, g2)
            if len(s) == d:
                seen.add(s)
    groups = sorted(tuple(sorted(s)) for s in seen)
    return tuple(Subgroup(d=d, elements=g) for g in groups)


def striation(s: Subgroup) -> Striation:
    """Partition the phase space into the d parallel cosets of a subgroup."""
    d = s.d
    seen: dict[tuple[Point, ...], None] = {}
    for i in range(d):
        for j in range(d):
            elems = tuple(sorted(((k + i) % d, (l + j) % d) for k, l in s.elements))
            seen.setdefault(elems, None)
    cosets = sorted(seen, key=lambda e: e[0])
    return Striation(
        generator=s,
        cosets=tuple(Coset(base=s, shift=e[0], elements=e) for e in cosets),
    )


@lru_cache(maxsize=16)
def all_cosets(d: int) -> tuple[Coset, ...]:
    """Union of all striations' cosets, deduplicated, in canonical order.

    Order: subgroups as enumerated, then each striation's cosets by their
    canonical representative. The position in this tuple is the coset
    index used by the CLI.
    """
    _check_dim(d)
    out: list[Coset] = []
    seen: set[tuple[Point, ...]] = set()
    for s in enumerate_subgroups(d):
        for coset in striation(s).cosets:
            if coset.elements not in seen:
                seen.add(coset.elements)
                out.append(coset)
    return tuple(out)


def subgroup_state(ell: Coset) -> CoefficientMatrix:
    """Uniform Bell mixture along one coset, c = 1/d on the coset, 0 off it."""
    d = ell.base.d
    c = np.zeros((d, d))
    for k, l in ell.elements:
        c[k, l] = 1.0 / d
    return CoefficientMatrix(c)


def striation_projectors(s: Subgroup) -> list[np.ndarray]:
    """The d orthogonal rank-d projectors onto one striation's coset subspaces.

    Each projector sums the Bell projectors over one coset; together they
    resolve the identity and form a projective measurement.
    """
    d = s.d
    return [
        sum(bell_projector(d, p) for p in coset.elements)
        for coset in striation(s).cosets
    ]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


@lru_cache(maxsize=4)
def coset_preserving_maps(d: int) -> tuple[np.ndarray, ...]:
    """All affine maps x -> Ax + b of the phase space, for prime d.

    These are the symmetries that send cosets to cosets (lines to lines in
    the affine plane). Each map is returned as a flat index permutation
    perm with perm[k*d + l] giving the flat index of the image of (k, l).
    There are |GL(2,d)| * d^2 maps, 432 of them for d=3 and 24 for d=2.
    The order is lexicographic in the matrix entries and shift.
    """
    if not _is_prime(d):
        raise NonPrimeDimensionError(
            f"coset-preserving maps require a prime dimension, got {d}"
        )
    k, l = np.divmod(np.arange(d * d), d)
    perms = []
    for a in range(d):
        for b in range(d):
            for c in range(d):
                for e in range(d):
                    if (a * e - b * c) % d == 0:
                        continue
                    for s1 in range(d):
                        for s2 in range(d):
                            img_k = (a * k + b * l + s1) % d
                            img_l = (c * k + e * l + s2) % d
                            perm = img_k * d + img_l
                            perm.flags.writeable = False
                            perms.append(perm)
    return tuple(perms)
