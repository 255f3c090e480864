"""Print the phase-space structure behind the fast criteria.

The d x d grid of Weyl indices carries order-d subgroups (lines through
the origin). Shifting a subgroup gives a coset; the d parallel cosets of
one subgroup partition the grid. For d=3 the four striations are the
horizontal, vertical, diagonal, and anti-diagonal line families.

Run: python3 demos/02_striations.py
"""

from belldiag.detection import ppt_det_qutrit, realignment_fast
from belldiag.phase_space import all_cosets, enumerate_subgroups, striation, subgroup_state

for d in (2, 3, 4, 5):
    subs = enumerate_subgroups(d)
    print(f"d={d}: {len(subs)} subgroups, {len(all_cosets(d))} cosets")

print("\nstriations of the d=3 grid (coset index: points)")
index_of = {c.elements: i for i, c in enumerate(all_cosets(3))}
for s in enumerate_subgroups(3):
    print(f"  subgroup {s.elements}")
    for coset in striation(s).cosets:
        print(f"    {index_of[coset.elements]:>2}: {coset.elements}")

# Subgroup states spread 1/3 over one coset. They are separable and sit
# exactly on both detection thresholds, so neither criterion may fire.
print("\nsubgroup states sit on the detection boundary")
for ell in all_cosets(3)[:4]:
    cm = subgroup_state(ell)
    value, detected = realignment_fast(cm)
    lhs, rhs, is_npt = ppt_det_qutrit(cm)
    print(
        f"  coset {index_of[ell.elements]:>2}: bloch 1-norm = {value:.6f} "
        f"(threshold 3), cubic lhs - rhs = {lhs - rhs:+.2e}, "
        f"detected = {detected}, npt = {is_npt}"
    )
