import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from orbitkit.classify import random_conjugate
from orbitkit.jordan import (
    AlbertElement, albert_rank, freudenthal_adjoint, fundamental_invariant,
    generic_norm, jordan_product, jordan_rank_classical,
)
from orbitkit.liealg import PPlusElement, make_algebra, proj_p, to_p_plus
from orbitkit.triples import ks_element, orbit_rep

coeff = st.floats(min_value=-4, max_value=4, allow_nan=False, allow_infinity=False)
albert_coords = st.lists(coeff, min_size=27, max_size=27)


def from_coords(v, field="C"):
    v = np.asarray(v, dtype=float)
    if field == "C":
        # reuse the 27 reals for both parts, shifted, to keep the strategy small
        alpha = v[:3] + 1j * v[3:6]
        a = (v[3:27] + 1j * v[:24]).reshape(3, 8)
    else:
        alpha = v[:3]
        a = v[3:27].reshape(3, 8)
    return AlbertElement(field, alpha, a)


def rand_albert(rng, field="C"):
    alpha = rng.standard_normal(3)
    a = rng.standard_normal((3, 8))
    if field == "C":
        alpha = alpha + 1j * rng.standard_normal(3)
        a = a + 1j * rng.standard_normal((3, 8))
    return AlbertElement(field, alpha, a)


def rank2_sample(rng):
    # subtract a root of the generic characteristic cubic: nu drops to zero
    # while the adjoint stays nonzero
    A = rand_albert(rng)
    T = A.alpha.sum()
    S = freudenthal_adjoint(A).alpha.sum()
    lam = np.roots([-1.0, T, -S, generic_norm(A)])[0]
    return A - AlbertElement.identity().scale(lam)


# ---------------------------------------------------------------- element

def test_albert_element_validation():
    with pytest.raises(ValueError):
        AlbertElement("H", np.zeros(3), np.zeros((3, 8)))
    with pytest.raises(ValueError):
        AlbertElement("R", np.zeros(2), np.zeros((3, 8)))
    with pytest.raises(ValueError):
        AlbertElement("R", np.zeros(3), np.zeros((3, 4)))


def test_grid_roundtrip():
    rng = np.random.default_rng(1)
    for field in ("R", "C"):
        A = rand_albert(rng, field)
        B = AlbertElement.from_grid(field, A.grid())
        assert np.array_equal(A.alpha, B.alpha) and np.array_equal(A.a, B.a)
    bad = A.grid()
    bad[0, 1, 3] += 1.0  # breaks hermiticity against entry (1, 0)
    with pytest.raises(ValueError):
        AlbertElement.from_grid("C", bad)


def test_json_roundtrip():
    rng = np.random.default_rng(2)
    for field in ("R", "C"):
        A = rand_albert(rng, field)
        B = AlbertElement.from_json(A.to_json())
        assert B.field == field
        assert np.allclose(A.alpha, B.alpha) and np.allclose(A.a, B.a)


# ---------------------------------------------------------------- product

def test_identity_law():
    rng = np.random.default_rng(3)
    for field in ("R", "C"):
        I = AlbertElement.identity(field)
        A = rand_albert(rng, field)
        P = jordan_product(A, I)
        assert np.allclose(P.alpha, A.alpha) and np.allclose(P.a, A.a)


def test_orthogonal_idempotents():
    e1 = AlbertElement.diagonal("C", 1, 0, 0)
    e2 = AlbertElement.diagonal("C", 0, 1, 0)
    assert jordan_product(e1, e2).norm() == 0.0
    assert jordan_product(e1, e1).norm() == 1.0


def test_field_mismatch():
    with pytest.raises(ValueError):
        jordan_product(AlbertElement.identity("R"), AlbertElement.identity("C"))


@settings(max_examples=40, deadline=None)
@given(albert_coords, albert_coords)
def test_commutative_exact(u, v):
    x, y = from_coords(u), from_coords(v)
    p, q = jordan_product(x, y), jordan_product(y, x)
    assert np.array_equal(p.alpha, q.alpha) and np.array_equal(p.a, q.a)


@settings(max_examples=40, deadline=None)
@given(albert_coords, albert_coords)
def test_jordan_identity(u, v):
    x, y = from_coords(u), from_coords(v)
    x2 = jordan_product(x, x)
    lhs = jordan_product(x2, jordan_product(x, y))
    rhs = jordan_product(x, jordan_product(x2, y))
    assert (lhs - rhs).norm() <= 1e-10 * max(1.0, lhs.norm())


def test_product_of_real_symmetric_matches_matrices():
    # scalar octonion parts embed the ordinary symmetric 3x3 algebra
    rng = np.random.default_rng(5)
    def emb(M):
        a = np.zeros((3, 8))
        a[:, 0] = [M[1, 2], M[2, 0], M[0, 1]]
        return AlbertElement("R", np.diag(M), a)
    M = rng.standard_normal((3, 3)); M = M + M.T
    N = rng.standard_normal((3, 3)); N = N + N.T
    P = jordan_product(emb(M), emb(N))
    Q = 0.5 * (M @ N + N @ M)
    assert np.allclose(P.alpha, np.diag(Q))
    assert np.allclose(P.a[:, 0], [Q[1, 2], Q[2, 0], Q[0, 1]])
    assert not np.any(P.a[:, 1:])


# ---------------------------------------------------------------- norm

def test_norm_identity_and_rank_two_diagonal():
    assert generic_norm(AlbertElement.identity("C")) == 1.0
    assert generic_norm(AlbertElement.diagonal("C", 1, 1, 0)) == 0.0
    assert generic_norm(AlbertElement.diagonal("R", 2, 3, 4)) == 24.0


def test_norm_matches_determinant_on_scalar_embeddings():
    rng = np.random.default_rng(7)
    # real symmetric: a_i real scalars
    M = rng.standard_normal((3, 3)); M = M + M.T
    a = np.zeros((3, 8)); a[:, 0] = [M[1, 2], M[2, 0], M[0, 1]]
    A = AlbertElement("R", np.diag(M), a)
    assert generic_norm(A) == pytest.approx(np.linalg.det(M))
    # complex hermitian: a_i in span{e_0, e_1}
    z = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    H = np.array([
        [1.7, z[2], z[1].conjugate()],
        [z[2].conjugate(), -0.4, z[0]],
        [z[1], z[0].conjugate(), 0.9],
    ])
    a = np.zeros((3, 8))
    a[:, 0], a[:, 1] = z.real, z.imag
    B = AlbertElement("R", np.diag(H).real, a)
    assert generic_norm(B) == pytest.approx(np.linalg.det(H).real)


@settings(max_examples=40, deadline=None)
@given(albert_coords)
def test_norm_cyclic_symmetry(v):
    A = from_coords(v)
    B = AlbertElement(A.field, np.roll(A.alpha, -1), np.roll(A.a, -1, axis=0))
    assert generic_norm(A) == pytest.approx(generic_norm(B), abs=1e-10)


def test_norm_homogeneity_exact():
    rng = np.random.default_rng(11)
    A = rand_albert(rng)
    assert generic_norm(A.scale(2.0)) == 8 * generic_norm(A)
    assert generic_norm(A.scale(0.5)) == 0.125 * generic_norm(A)
    # with integer entries even lambda = 3 is exact float arithmetic
    B = AlbertElement("C", rng.integers(-5, 6, 3).astype(float),
                      rng.integers(-5, 6, (3, 8)).astype(float))
    assert generic_norm(B.scale(3.0)) == 27 * generic_norm(B)


# ---------------------------------------------------------------- adjoint

def test_adjoint_oracle_identity():
    # A o A# = nu(A) I pins the entry formulas
    rng = np.random.default_rng(13)
    for field in ("R", "C"):
        for _ in range(20):
            A = rand_albert(rng, field)
            sharp = freudenthal_adjoint(A)
            diff = jordan_product(A, sharp) - AlbertElement.identity(field).scale(generic_norm(A))
            assert diff.norm() <= 1e-10 * max(1.0, A.norm() ** 3)
            back = freudenthal_adjoint(sharp) - A.scale(generic_norm(A))
            assert back.norm() <= 1e-10 * max(1.0, A.norm() ** 4)


def test_adjoint_on_diagonal_idempotents():
    sharp = freudenthal_adjoint(AlbertElement.diagonal("C", 1, 1, 0))
    assert np.allclose(sharp.alpha, [0, 0, 1]) and not np.any(sharp.a)
    assert freudenthal_adjoint(AlbertElement.diagonal("C", 1, 0, 0)).norm() == 0.0


# ---------------------------------------------------------------- rank

def test_albert_rank_ladder():
    assert albert_rank(AlbertElement.zero()) == 0
    assert albert_rank(AlbertElement.diagonal("C", 1, 0, 0)) == 1
    assert albert_rank(AlbertElement.diagonal("C", 1, 1, 0)) == 2
    assert albert_rank(AlbertElement.identity("C")) == 3
    with pytest.raises(ValueError):
        albert_rank(AlbertElement.identity("R"))


def test_albert_rank_generic_strata():
    rng = np.random.default_rng(17)
    for _ in range(20):
        assert albert_rank(rand_albert(rng)) == 3
        B = rank2_sample(rng)
        assert abs(generic_norm(B)) <= 1e-9 * max(1.0, B.norm() ** 3)
        assert albert_rank(B) == 2
        C = freudenthal_adjoint(B)
        assert albert_rank(C) == 1
        assert freudenthal_adjoint(C).norm() <= 1e-8 * max(1.0, C.norm() ** 2)


def test_albert_rank_semicontinuous():
    rng = np.random.default_rng(19)
    for A in (AlbertElement.diagonal("C", 1, 0, 0), rank2_sample(rng)):
        base = albert_rank(A)
        for _ in range(10):
            delta = rand_albert(rng).scale(1e-8)
            assert albert_rank(A + delta) >= base


# ------------------------------------------------- classical model ranks

FAMS = (("sp", 3), ("u", (2, 2)), ("sostar", 6), ("so2q", 5))


@pytest.mark.parametrize("fam,params", FAMS)
def test_rank_stratum_correspondence(fam, params):
    desc = make_algebra(fam, params)
    rng = np.random.default_rng(23)
    for s in range(desc.r + 1):
        X = orbit_rep(desc, s, 0)
        for _ in range(10):
            Y = random_conjugate(desc, X, rng=rng)
            w = to_p_plus(desc, proj_p(desc, Y, check=False))
            assert jordan_rank_classical(w) == s


def test_rank_of_ks_ladder():
    for fam, params in FAMS:
        desc = make_algebra(fam, params)
        for s in range(desc.r + 1):
            assert jordan_rank_classical(ks_element(desc, s)) == s


def test_rank_classical_validation():
    with pytest.raises(ValueError):
        jordan_rank_classical(np.eye(2))
    # not antisymmetric: odd rank must be flagged, not halved silently
    with pytest.raises(ArithmeticError):
        jordan_rank_classical(PPlusElement("sostar", np.diag([1.0, 0.0, 0.0, 0.0])))


# ------------------------------------------------- relative invariants

def test_invariant_identity_patterns():
    l = 3
    assert fundamental_invariant("sp", PPlusElement("sp", np.eye(l))) == 1.0
    assert fundamental_invariant("u", PPlusElement("u", np.eye(2))) == 1.0
    J = np.kron(np.eye(2), np.array([[0.0, 1.0], [-1.0, 0.0]]))
    assert fundamental_invariant("sostar", PPlusElement("sostar", J)) == 1.0
    assert fundamental_invariant("albert", AlbertElement.identity()) == 1.0


def test_invariant_quadric_point():
    w = np.zeros(4, dtype=complex)
    w[0], w[1] = 1j, 1.0
    assert fundamental_invariant("so2q", PPlusElement("so2q", w)) == 0.0
    w[2] = 2.0
    assert fundamental_invariant("so2q", PPlusElement("so2q", w)) == 4.0


def test_invariant_vanishes_iff_submaximal():
    rng = np.random.default_rng(29)
    for fam, params in (("sp", 3), ("u", (2, 2)), ("sostar", 8), ("so2q", 5)):
        desc = make_algebra(fam, params)
        for s in range(desc.r + 1):
            w = ks_element(desc, s)
            val = fundamental_invariant(fam, w)
            if s < desc.r:
                assert val == 0.0  # exact on the model representatives
            else:
                assert abs(val) > 1e-6
        for s in range(desc.r + 1):
            X = random_conjugate(desc, orbit_rep(desc, s, 0), rng=rng)
            w = to_p_plus(desc, proj_p(desc, X, check=False))
            val = fundamental_invariant(fam, w)
            nrm = max(1.0, float(np.linalg.norm(np.atleast_1d(w.value))))
            if s < desc.r:
                assert abs(val) <= 1e-8 * nrm ** desc.r
            else:
                assert abs(val) > 1e-8 * nrm ** desc.r


def test_invariant_unsupported_families():
    with pytest.raises(ValueError):
        fundamental_invariant("u", PPlusElement("u", np.ones((1, 2))))
    odd = np.zeros((3, 3))
    odd[0, 1], odd[1, 0] = 1.0, -1.0
    with pytest.raises(ValueError):
        fundamental_invariant("sostar", PPlusElement("sostar", odd))
    with pytest.raises(ValueError):
        fundamental_invariant("sp", PPlusElement("u", np.eye(2)))
    with pytest.raises(ValueError):
        fundamental_invariant("albert", PPlusElement("sp", np.eye(2)))
    with pytest.raises(ValueError):
        fundamental_invariant("e8", PPlusElement("e8", np.eye(2)))
