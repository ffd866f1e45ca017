"""The four classical hermitian matrix Lie algebras as certified block spaces.

Families and their ambient models:

  sp(l, R)   real 2l x 2l      [[A, B], [C, -A^T]],  B, C symmetric
  u(p, q)    complex (p+q)^2   [[A, B*], [B, D]],    A* = -A, D* = -D
  so*(2n)    complex 2n x 2n   [[A, -conj(B)], [B, conj(A)]], A^T = -A, B* = B
  so(2, q)   real (q+2)^2      [[A, B^T], [B, D]],   A in so(2), D in so(q)

Each descriptor carries the compatible complex structure J_V on the defining
representation (where one exists), the H-element z, and the chart p -> p+ that
realizes the symmetric part as the family's complex model space.  Membership
is always decided by the block equations above.
"""

from dataclasses import dataclass, field

import numpy as np

FAMILIES = ("sp", "u", "sostar", "so2q")

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class LieAlgebraDescriptor:
    family: str
    params: tuple
    N: int                  # ambient matrix size
    base: str               # ambient scalar field tag: "R" or "C"
    r: int                  # split rank
    dim: int                # real dimension of the algebra
    J_V: object = None      # ndarray or None (so(2,q) has no ambient J_V)
    G: object = None        # indefinite metric, where the model uses one
    z: object = None        # H-element
    pplus_shape: tuple = ()

    def __repr__(self):
        return f"<{self.name()} descriptor>"

    def name(self):
        if self.family == "sp":
            return f"sp({self.params[0]},R)"
        if self.family == "u":
            return f"u({self.params[0]},{self.params[1]})"
        if self.family == "sostar":
            return f"so*({2 * self.params[0]})"
        return f"so(2,{self.params[0]})"


@dataclass(frozen=True)
class LieElement:
    desc: LieAlgebraDescriptor
    matrix: np.ndarray


@dataclass(frozen=True)
class PPlusElement:
    family: str
    value: np.ndarray       # symmetric lxl / q x p / antisymmetric n x n / vector in C^q


def make_algebra(family, params):
    """Build the descriptor for sp(l,R), u(p,q), so*(2n) or so(2,q)."""
    if family == "sp":
        (l,) = _ints(params, 1)
        if l < 1:
            raise ValueError("sp(l,R) needs l >= 1")
        J = np.block([[np.zeros((l, l)), -np.eye(l)], [np.eye(l), np.zeros((l, l))]])
        return LieAlgebraDescriptor(
            family, (l,), 2 * l, "R", l, 2 * l * l + l,
            J_V=J, z=0.5 * J, pplus_shape=(l, l))
    if family == "u":
        p, q = _ints(params, 2)
        if p < 1 or q < 1:
            raise ValueError("u(p,q) needs p, q >= 1")
        G = np.diag([1.0] * p + [-1.0] * q)
        J = 1j * G
        return LieAlgebraDescriptor(
            family, (p, q), p + q, "C", min(p, q), (p + q) ** 2,
            J_V=J, G=G, z=0.5 * J, pplus_shape=(q, p))
    if family == "sostar":
        (n,) = _ints(params, 1)
        if n < 1:
            raise ValueError("so*(2n) needs n >= 1")
        Z = np.zeros((n, n))
        J = np.block([[Z, -np.eye(n)], [np.eye(n), Z]]).astype(complex)
        return LieAlgebraDescriptor(
            family, (n,), 2 * n, "C", n // 2, n * (2 * n - 1),
            J_V=J, z=0.5 * J, pplus_shape=(n, n))
    if family == "so2q":
        (q,) = _ints(params, 1)
        if q < 2:
            raise ValueError("so(2,q) needs q >= 2")
        G = np.diag([1.0, 1.0] + [-1.0] * q)
        z = np.zeros((q + 2, q + 2))
        z[0, 1], z[1, 0] = 1.0, -1.0
        return LieAlgebraDescriptor(
            family, (q,), q + 2, "R", 2, (q + 2) * (q + 1) // 2,
            G=G, z=z, pplus_shape=(q,))
    raise ValueError(f"unknown family {family!r}")


def _ints(params, n):
    t = tuple(int(v) for v in (params if hasattr(params, "__len__") else (params,)))
    if len(t) != n:
        raise ValueError(f"expected {n} parameter(s), got {t}")
    return t


def _split_blocks(desc, M):
    if desc.family == "sp":
        l = desc.params[0]
        return M[:l, :l], M[:l, l:], M[l:, :l], M[l:, l:]
    if desc.family == "u":
        p, q = desc.params
        return M[:p, :p], M[:p, p:], M[p:, :p], M[p:, p:]
    if desc.family == "sostar":
        n = desc.params[0]
        return M[:n, :n], M[:n, n:], M[n:, :n], M[n:, n:]
    q = desc.params[0]
    return M[:2, :2], M[:2, 2:], M[2:, :2], M[2:, 2:]


def membership_residual(desc, M):
    """Max violation of the family's defining block equations."""
    M = np.asarray(M)
    if M.shape != (desc.N, desc.N):
        raise ValueError(f"expected {desc.N} x {desc.N} matrix, got {M.shape}")
    imag_part = 0.0
    if desc.base == "R" and np.iscomplexobj(M):
        imag_part = np.abs(M.imag).max()
        M = M.real
    TL, TR, BL, BR = _split_blocks(desc, M)
    if imag_part > 0:
        return max(imag_part, membership_residual(desc, M))
    if desc.family == "sp":
        return max(np.abs(BR + TL.T).max(), np.abs(TR - TR.T).max(),
                   np.abs(BL - BL.T).max())
    if desc.family == "u":
        return max(np.abs(TL + TL.conj().T).max(), np.abs(BR + BR.conj().T).max(),
                   np.abs(TR - BL.conj().T).max())
    if desc.family == "sostar":
        return max(np.abs(TL + TL.T).max(), np.abs(TR + BL.conj()).max(),
                   np.abs(BR - TL.conj()).max(), np.abs(BL - BL.conj().T).max())
    return max(np.abs(TL + TL.T).max(), np.abs(BR + BR.T).max(),
               np.abs(TR - BL.T).max())


def contains(desc, M, tol=DEFAULT_TOL):
    """True iff M satisfies the block equations to tolerance."""
    M = np.asarray(M)
    scale = max(1.0, np.abs(M).max())
    return membership_residual(desc, M) <= tol * scale


def _require_member(desc, M, tol=1e-8):
    if not contains(desc, M, tol):
        raise ValueError(f"matrix is not in {desc.name()} "
                         f"(block residual {membership_residual(desc, M):.3e})")


def cartan_split(desc, X, check=True):
    """(x_k, x_p) with x_k + x_p = X, x_k in k, x_p in p."""
    X = np.asarray(X)
    if check:
        _require_member(desc, X)
    if desc.base == "C":
        X = X.astype(complex)
    else:
        X = X.real.astype(float) if np.iscomplexobj(X) else X.astype(float)
    TL, TR, BL, BR = _split_blocks(desc, X)
    if desc.family == "sp":
        Ak, Bk = (TL - TL.T) / 2, (TR - BL) / 2
        Ap, Bp = (TL + TL.T) / 2, (TR + BL) / 2
        Xk = np.block([[Ak, Bk], [-Bk, Ak]])
        Xp = np.block([[Ap, Bp], [Bp, -Ap]])
        return Xk, Xp
    if desc.family == "u":
        Xk = np.zeros_like(X)
        p = desc.params[0]
        Xk[:p, :p], Xk[p:, p:] = TL, BR
        return Xk, X - Xk
    if desc.family == "sostar":
        Ak, Bk = TL.real, BL.real
        Ap, Bp = 1j * TL.imag, 1j * BL.imag
        Xk = np.block([[Ak, -Bk], [Bk, Ak]]).astype(complex)
        Xp = np.block([[Ap, Bp], [Bp, -Ap]])
        return Xk, Xp
    Xk = np.zeros_like(X)
    Xk[:2, :2], Xk[2:, 2:] = TL, BR
    return Xk, X - Xk


def proj_p(desc, X, check=True):
    return cartan_split(desc, X, check=check)[1]


def proj_k(desc, X, check=True):
    return cartan_split(desc, X, check=check)[0]


def bracket(X, Y):
    """Matrix commutator XY - YX."""
    return X @ Y - Y @ X


def ad_z(desc, X):
    """[z, X]; on p this is the complex structure J_z."""
    return bracket(desc.z, X)


def b_x_form(desc, X, tol=1e-8):
    """The hermitian matrix -J_V X together with its rank and signature.

    Quaternionic counts (so*) are the complex ones halved.  Not defined for
    so(2,q), whose model carries no ambient J_V.
    """
    if desc.family == "so2q":
        raise ValueError("b_x_form is not supported for so(2,q)")
    M = -desc.J_V @ np.asarray(X)
    herm_gap = np.abs(M - M.conj().T).max()
    if herm_gap > 1e-9 * max(1.0, np.abs(M).max()):
        raise ValueError(f"form matrix failed the hermitian check ({herm_gap:.2e})")
    M = (M + M.conj().T) / 2
    ev = np.linalg.eigvalsh(M)
    thr = tol * max(1.0, np.abs(ev).max())
    rank = int(np.sum(np.abs(ev) > thr))
    sig = int(np.sum(ev > thr) - np.sum(ev < -thr))
    if desc.family == "sostar":
        if rank % 2 or sig % 2:
            raise ValueError("odd rank/signature contradicts the quaternionic structure")
        rank, sig = rank // 2, sig // 2
    return M, rank, sig


# --- the p <-> p+ chart -----------------------------------------------------
#
# Each chart is complex-linear for the complex structure ad_z on p and is
# normalized so that the elements e^s + f^s built from the standard triples
# land on the canonical rank-s model matrices.

def to_p_plus(desc, Xp):
    """Model coordinates of an element of p."""
    Xp = np.asarray(Xp)
    if desc.family == "sp":
        l = desc.params[0]
        A, B = Xp[:l, :l], Xp[:l, l:]
        return PPlusElement("sp", 1j * A - B)
    if desc.family == "u":
        p = desc.params[0]
        B = Xp[p:, :p]
        return PPlusElement("u", -B.conj())
    if desc.family == "sostar":
        n = desc.params[0]
        A, B = Xp[:n, :n], Xp[n:, :n]
        V = A / 1j
        W = -(B / 1j)
        return PPlusElement("sostar", -V + 1j * W)
    q = desc.params[0]
    B = Xp[2:, :2]
    x, y = B[:, 0], B[:, 1]
    R = np.ones(q)
    R[0] = -1.0
    return PPlusElement("so2q", R * (x - 1j * y))


def from_p_plus(desc, w):
    """Inverse chart: the real p-element with the given model coordinates."""
    val = w.value if isinstance(w, PPlusElement) else np.asarray(w)
    if desc.family == "sp":
        l = desc.params[0]
        A, B = val.imag, -val.real
        Z = np.block([[A, B], [B, -A]])
        return Z
    if desc.family == "u":
        p, q = desc.params
        B = -val.conj()
        X = np.zeros((p + q, p + q), dtype=complex)
        X[p:, :p] = B
        X[:p, p:] = B.conj().T
        return X
    if desc.family == "sostar":
        n = desc.params[0]
        V, W = -val.real, val.imag
        A, B = 1j * V, -1j * W
        return np.block([[A, B], [B, -A]])
    q = desc.params[0]
    R = np.ones(q)
    R[0] = -1.0
    u = R * val
    B = np.stack([u.real, -u.imag], axis=1)
    X = np.zeros((q + 2, q + 2))
    X[2:, :2] = B
    X[:2, 2:] = B.T
    return X


def pplus_coords(desc, w):
    """Flatten a p+ model element to its free complex coordinates."""
    val = w.value if isinstance(w, PPlusElement) else np.asarray(w)
    if desc.family == "sp":
        l = desc.params[0]
        iu = np.triu_indices(l)
        return val[iu]
    if desc.family == "u":
        return val.reshape(-1)
    if desc.family == "sostar":
        n = desc.params[0]
        iu = np.triu_indices(n, k=1)
        return val[iu]
    return val.reshape(-1)


def pplus_unflatten(desc, coords):
    """Inverse of pplus_coords."""
    coords = np.asarray(coords, dtype=complex)
    if desc.family == "sp":
        l = desc.params[0]
        M = np.zeros((l, l), dtype=complex)
        iu = np.triu_indices(l)
        M[iu] = coords
        M = M + np.triu(M, k=1).T
        return PPlusElement("sp", M)
    if desc.family == "u":
        return PPlusElement("u", coords.reshape(desc.pplus_shape))
    if desc.family == "sostar":
        n = desc.params[0]
        M = np.zeros((n, n), dtype=complex)
        iu = np.triu_indices(n, k=1)
        M[iu] = coords
        M = M - M.T
        return PPlusElement("sostar", M)
    return PPlusElement("so2q", coords)


def pplus_dim(desc):
    if desc.family == "sp":
        l = desc.params[0]
        return l * (l + 1) // 2
    if desc.family == "u":
        p, q = desc.params
        return p * q
    if desc.family == "sostar":
        n = desc.params[0]
        return n * (n - 1) // 2
    return desc.params[0]


# --- real bases -------------------------------------------------------------

def basis(desc):
    """An ordered real basis of the algebra as a list of ambient matrices."""
    out = []
    if desc.family == "sp":
        l = desc.params[0]
        Z = np.zeros((l, l))
        for i in range(l):
            for j in range(l):
                A = np.zeros((l, l))
                A[i, j] = 1.0
                out.append(np.block([[A, Z], [Z, -A.T]]))
        for i in range(l):
            for j in range(i, l):
                S = np.zeros((l, l))
                S[i, j] = S[j, i] = 1.0
                out.append(np.block([[Z, S], [Z, Z]]))
        for i in range(l):
            for j in range(i, l):
                S = np.zeros((l, l))
                S[i, j] = S[j, i] = 1.0
                out.append(np.block([[Z, Z], [S, Z]]))
    elif desc.family == "u":
        p, q = desc.params
        n = p + q
        for (lo, hi) in ((0, p), (p, n)):
            for i in range(lo, hi):
                M = np.zeros((n, n), dtype=complex)
                M[i, i] = 1j
                out.append(M)
            for i in range(lo, hi):
                for j in range(i + 1, hi):
                    M = np.zeros((n, n), dtype=complex)
                    M[i, j], M[j, i] = 1.0, -1.0
                    out.append(M)
                    M = np.zeros((n, n), dtype=complex)
                    M[i, j] = M[j, i] = 1j
                    out.append(M)
        for i in range(p, n):
            for j in range(p):
                for v in (1.0, 1j):
                    M = np.zeros((n, n), dtype=complex)
                    M[i, j] = v
                    M[j, i] = np.conj(v)
                    out.append(M)
    elif desc.family == "sostar":
        n = desc.params[0]
        Z = np.zeros((n, n))
        for i in range(n):
            for j in range(i + 1, n):
                A = np.zeros((n, n))
                A[i, j], A[j, i] = 1.0, -1.0
                out.append(np.block([[A, Z], [Z, A]]).astype(complex))
                out.append(np.block([[1j * A, Z], [Z, -1j * A]]))
        for i in range(n):
            for j in range(i, n):
                S = np.zeros((n, n))
                S[i, j] = S[j, i] = 1.0
                out.append(np.block([[Z, -S], [S, Z]]).astype(complex))
                if i != j:
                    A = np.zeros((n, n))
                    A[i, j], A[j, i] = 1.0, -1.0
                    out.append(np.block([[Z, 1j * A], [1j * A, Z]]))
    else:
        q = desc.params[0]
        n = q + 2
        M = np.zeros((n, n))
        M[0, 1], M[1, 0] = 1.0, -1.0
        out.append(M)
        for i in range(2, n):
            for j in range(i + 1, n):
                M = np.zeros((n, n))
                M[i, j], M[j, i] = 1.0, -1.0
                out.append(M)
        for i in range(2, n):
            for j in range(2):
                M = np.zeros((n, n))
                M[i, j] = M[j, i] = 1.0
                out.append(M)
    assert len(out) == desc.dim
    return out


def random_element(desc, rng, scale=1.0):
    """Random algebra element with independent N(0, scale^2) basis coefficients."""
    B = basis(desc)
    c = rng.standard_normal(len(B)) * scale
    M = sum(ci * Bi for ci, Bi in zip(c, B))
    return M


def frobenius(M):
    return float(np.linalg.norm(np.asarray(M)))
