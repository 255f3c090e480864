"""Walk through the Weyl operators and the Bell basis they generate.

Run: python3 demos/01_bell_basis.py
"""

import numpy as np

from belldiag.weyl import (
    CoefficientMatrix,
    bell_state,
    density_from_coefficients,
    weyl_operator,
)

d = 3
omega = np.exp(2j * np.pi / d)

print(f"Weyl operators for d={d}")
print("W(0,1) is the cyclic shift:")
print(np.real_if_close(np.round(weyl_operator(d, (0, 1)), 12)))
print("W(1,0) is the phase (clock) operator:")
print(np.round(weyl_operator(d, (1, 0)), 3))

# The composition rule: W(i,j) W(k,l) = omega^(j*k) W(i+k, j+l).
lhs = weyl_operator(d, (1, 1)) @ weyl_operator(d, (1, 2))
rhs = omega ** (1 * 1) * weyl_operator(d, (2, 0))
print(f"\ncomposition residual |W11 W12 - w^1 W20| = {np.max(np.abs(lhs - rhs)):.2e}")

print("\nBell basis orthonormality <O_kl|O_mn> = delta:")
states = [bell_state(d, (k, l)) for k in range(d) for l in range(d)]
gram = np.array([[abs(u.conj() @ v) for v in states] for u in states])
print(f"max |gram - identity| = {np.max(np.abs(gram - np.eye(d * d))):.2e}")

# A Bell-diagonal state is fixed by its d x d coefficient matrix. The
# density matrix is the corresponding mixture of Bell projectors, and
# the coefficients come back as Bell-basis expectation values.
c = np.array([[0.3, 0.1, 0.0], [0.2, 0.0, 0.1], [0.1, 0.1, 0.1]])
cm = CoefficientMatrix(c)
rho = density_from_coefficients(cm)
print(f"\nrho for a sample coefficient matrix: trace = {np.trace(rho).real:.6f}")
recovered = np.array(
    [
        [(bell_state(d, (k, l)).conj() @ rho @ bell_state(d, (k, l))).real for l in range(d)]
        for k in range(d)
    ]
)
print(f"recovered coefficients match: {np.allclose(recovered, c, atol=1e-12)}")
