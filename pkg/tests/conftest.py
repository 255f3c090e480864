"""Shared test helpers."""

import numpy as np

from belldiag.weyl import CoefficientMatrix


def rand_coeffs(rng, d):
    """One coefficient matrix drawn flat on the simplex."""
    e = rng.exponential(size=d * d)
    return CoefficientMatrix((e / e.sum()).reshape(d, d))


def match_multisets(a, b, tol):
    """Greedy nearest-neighbor matching of two complex value multisets.

    Returns the largest matched distance. Robust against ordering
    ambiguities of near-degenerate values, unlike a lexicographic sort.
    """
    a = list(np.asarray(a, dtype=complex))
    b = list(np.asarray(b, dtype=complex))
    assert len(a) == len(b)
    worst = 0.0
    for x in a:
        dist = [abs(x - y) for y in b]
        j = int(np.argmin(dist))
        worst = max(worst, dist[j])
        del b[j]
    assert worst <= tol, f"multiset mismatch, worst distance {worst:.3e} > {tol:.0e}"
    return worst
