"""Detect bound entanglement with the realignment criterion and a witness.

The one-parameter family below keeps a positive partial transpose up to
x = 2/15 while the realignment criterion already fires for any x > 0, so
the window (0, 2/15] is PPT entangled: entangled but undistillable. The
cubic PPT margin also induces a state-tailored witness kappa whose
expectation value is negative exactly on NPT states.

Run: python3 demos/04_witness_bound_entanglement.py
"""

import numpy as np

from belldiag.detection import classify, witness_kappa, witness_value
from belldiag.weyl import CoefficientMatrix


def family(x):
    return CoefficientMatrix(
        np.array(
            [
                [1 / 3 - x, 1 / 3 - x, 1 / 3 - x],
                [2 * x, 0.0, 0.0],
                [x, 0.0, 0.0],
            ]
        )
    )


print("x        bloch 1-norm  ppt margin   label")
for x in (0.0, 0.02, 0.05, 0.1, 2 / 15, 0.14, 0.2, 1 / 3):
    rec = classify(family(x))
    print(
        f"{x:<8.4f} {rec.realignment_value:<13.6f} "
        f"{rec.ppt_value:+.6f}    {rec.label}"
    )

# The witness built from an NPT state certifies that state: its
# expectation value there is negative. On separable states it stays
# non-negative (shown here on the subgroup states and white noise).
npt_state = family(0.2)
kappa = witness_kappa(npt_state)
print(f"\nwitness value on the x=0.2 state: {witness_value(npt_state, kappa):+.6f}")

mixed = CoefficientMatrix(np.full((3, 3), 1 / 9))
print(f"witness value on white noise:     {witness_value(mixed, kappa):+.6f}")

boundary = family(0.0)
print(f"witness value on the x=0 state:   {witness_value(boundary, kappa):+.6f}")
