"""
Rank strata of the complexified Albert algebra
==============================================

The 3x3 octonion-hermitian matrices stratify by the generic norm and
the Freudenthal adjoint: rank 3 (norm != 0), rank 2 (norm = 0 but
adjoint != 0), rank 1 (adjoint = 0 but element != 0), rank 0.
"""

import numpy as np

from orbitkit.jordan import (
    AlbertElement, albert_rank, freudenthal_adjoint, generic_norm,
)

rng = np.random.default_rng(2)

A = AlbertElement("C", rng.standard_normal(3), rng.standard_normal((3, 8)))
print(f"generic element   nu = {generic_norm(A).real:+.6f}        rank {albert_rank(A)}")

# shifting by a root of the characteristic cubic nu(A - t I) produces a
# norm-zero element, and its Freudenthal adjoint drops one rank further
T = np.sum(A.alpha)
S = np.sum(freudenthal_adjoint(A).alpha)
roots = np.roots([-1.0, T, -S, generic_norm(A)])
lam = roots[np.argmin(np.abs(roots.imag))].real

B = A - AlbertElement.identity("C").scale(lam)
print(f"shifted by root   nu = {abs(generic_norm(B)):.2e}      rank {albert_rank(B)}")

C = freudenthal_adjoint(B)
print(f"its adjoint       nu = {abs(generic_norm(C)):.2e}      rank {albert_rank(C)}")

D = AlbertElement.zero("C")
print(f"zero element      nu = {generic_norm(D).real:+.6f}        rank {albert_rank(D)}")
