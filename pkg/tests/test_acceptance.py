"""End-to-end acceptance battery at desk scale.

Each test pins one headline property of the library: exact triple relations,
classification invariance under conjugation, positivity of the orbit form,
closure order, the reduction histograms for compact and indefinite sources,
invariant-theory dimensions, polarization vanishing, the one-variable model
family, Jordan-rank stratification, and the rank-one nilcone chain.
Tolerances and runtime budgets are fixed here and nowhere else.
"""

import time

import numpy as np
import pytest

from orbitkit import dualpair as dp
from orbitkit import jordan as jd
from orbitkit.classify import (
    admissible_types, classify_nilpotent, in_closure, random_conjugate,
)
from orbitkit.cli import run_verify_suite
from orbitkit.liealg import (
    b_x_form, frobenius, make_algebra, proj_p, random_element, to_p_plus,
)
from orbitkit.poisson import (
    ContractionModel, PoissonContext, contraction_bracket, disc_model_bracket,
    half_trace, lie_poisson_bracket, model_metric_and_curvature,
    pplus_bracket_matrix, stereographic_to_disc,
)
from orbitkit.triples import check_triple, ks_element, orbit_rep, standard_triples

SIZES = (("sp", (4,)), ("u", (3, 3)), ("sostar", (4,)), ("so2q", (6,)))
DESCS = [make_algebra(f, p) for f, p in SIZES]
IDS = [d.name() for d in DESCS]


def _commutator(a, b):
    return a @ b - b @ a


def test_triple_relations_exact_and_fast():
    t0 = time.perf_counter()
    for desc in DESCS:
        trips = standard_triples(desc)
        assert len(trips) == desc.r
        for e, f, h in trips:
            flags = check_triple(desc, e, f, h, tol=0.0)
            assert flags.sl2 and flags.invariant and flags.h1
        for i in range(desc.r):
            for j in range(i + 1, desc.r):
                for A in trips[i]:
                    for B in trips[j]:
                        assert not np.any(_commutator(A, B))
    assert time.perf_counter() - t0 < 1.0


def test_classification_invariance_all_types():
    t0 = time.perf_counter()
    for desc in DESCS:
        rng = np.random.default_rng(11)
        types = admissible_types(desc)
        assert len(types) == (desc.r + 1) * (desc.r + 2) // 2
        for t, u in types:
            X = orbit_rep(desc, t, u)
            for _ in range(100):
                Y = random_conjugate(desc, X, rng=rng)
                assert classify_nilpotent(desc, Y, tol=1e-8) == (t, u)
    assert time.perf_counter() - t0 < 20.0


@pytest.mark.parametrize("desc", DESCS[:3], ids=IDS[:3])
def test_holomorphic_iff_nonnegative_form(desc):
    rng = np.random.default_rng(13)
    for s in range(1, desc.r + 1):
        X = orbit_rep(desc, s, 0)
        for _ in range(100):
            Y = random_conjugate(desc, X, rng=rng)
            M, _, _ = b_x_form(desc, Y)
            ev = np.linalg.eigvalsh(M)
            assert ev.min() >= -1e-8 * np.abs(ev).max()
    X = orbit_rep(desc, 1, 1)
    for _ in range(100):
        Y = random_conjugate(desc, X, rng=rng)
        M, _, _ = b_x_form(desc, Y)
        ev = np.linalg.eigvalsh(M)
        scale = np.abs(ev).max()
        assert ev.min() < -1e-8 * scale and ev.max() > 1e-8 * scale


def test_closure_order_and_model_ranks():
    for desc in DESCS:
        for s in range(desc.r + 1):
            X = orbit_rep(desc, s, 0)
            for sp in range(desc.r + 1):
                assert bool(in_closure(desc, X, sp)) == (sp >= s)
        for s in range(desc.r + 1):
            assert jd.jordan_rank_classical(ks_element(desc, s)) == s
    desc = make_algebra("so2q", 6)
    rng = np.random.default_rng(17)
    X = orbit_rep(desc, 1, 0)
    for _ in range(100):
        Y = random_conjugate(desc, X, rng=rng)
        w = to_p_plus(desc, proj_p(desc, Y, check=False)).value
        assert abs(np.sum(w * w)) <= 1e-9


def test_compact_reduction_histograms():
    t0 = time.perf_counter()
    for case, params, r in (("o-sp", (4,), 4), ("u-u", (2, 2), 2),
                            ("sp-sostar", (3,), 1)):
        supports = {}
        for s in range(1, r + 2):
            cfg = dp.make_dual_pair(case, s, 0, params)
            hist = dp.reduce_and_classify(cfg, 500, seed=23)
            assert all(u == 0 for (_, u) in hist)
            assert all(t <= min(r, s) for (t, _) in hist)
            assert (min(r, s), 0) in hist
            supports[s] = set(hist)
        assert supports[r + 1] == supports[r]
    assert time.perf_counter() - t0 < 30.0


def test_indefinite_source_covers_nilcone():
    cfg = dp.make_dual_pair("o-sp", 1, 1, (1,))
    hist = dp.reduce_and_classify(cfg, 200, seed=29)
    assert (1, 0) in hist and (0, 1) in hist


def test_invariant_quadratics_dimensions():
    cfg = dp.make_dual_pair("o-sp", 2, 0, (2,))
    assert dp.invariant_quadratics_dim(cfg) == 10 == cfg.target.dim
    assert np.linalg.matrix_rank(dp.moment_quadratic_forms(cfg), tol=1e-8) == 10
    cfg = dp.make_dual_pair("u-u", 1, 0, (2, 1))
    assert dp.invariant_quadratics_dim(cfg) == 9 == cfg.target.dim
    assert np.linalg.matrix_rank(dp.moment_quadratic_forms(cfg), tol=1e-8) == 9


@pytest.mark.parametrize("desc", DESCS, ids=IDS)
def test_polarization_brackets_vanish(desc):
    ctx = PoissonContext(desc)
    rng = np.random.default_rng(31)
    for _ in range(200):
        xi = random_element(desc, rng)
        B1, _ = pplus_bracket_matrix(ctx, xi)
        assert np.abs(B1).max() <= 1e-12


def test_one_variable_model_family():
    # bracket table at the documented doubled scale
    ctx = PoissonContext(make_algebra("sp", 1))
    E = np.array([[0.0, 1.0], [0.0, 0.0]])
    F = np.array([[0.0, 0.0], [1.0, 0.0]])
    d = [-(E - F), E + F, np.diag([1.0, -1.0])]
    rng = np.random.default_rng(37)
    for _ in range(25):
        xi = random_element(ctx.desc, rng)
        x = [half_trace(dk, xi) for dk in d]
        assert abs(lie_poisson_bracket(ctx, d[1], d[2], xi) - 2 * x[0]) <= 1e-12
        assert abs(lie_poisson_bracket(ctx, d[0], d[2], xi) - 2 * x[1]) <= 1e-12
        assert abs(lie_poisson_bracket(ctx, d[0], d[1], xi) + 2 * x[2]) <= 1e-12

    assert model_metric_and_curvature(ContractionModel(1.0), 0.0)[1] == -1.0
    for z in (0.25, 1.0, 3.0):
        assert model_metric_and_curvature(ContractionModel(0.0), z)[1] == 0.0

    m = ContractionModel(1.0)
    h = 1e-20
    for _ in range(100):
        x1, x2 = rng.uniform(-3, 3, size=2)
        y1, y2 = stereographic_to_disc(m, x1, x2)
        d11 = stereographic_to_disc(m, x1 + 1j * h, x2)[0].imag / h
        d12 = stereographic_to_disc(m, x1, x2 + 1j * h)[0].imag / h
        d21 = stereographic_to_disc(m, x1 + 1j * h, x2)[1].imag / h
        d22 = stereographic_to_disc(m, x1, x2 + 1j * h)[1].imag / h
        det = d11 * d22 - d12 * d21
        pulled = det * contraction_bracket(m, x1, x2)
        assert abs(pulled - disc_model_bracket(1.0, y1, y2)) <= 1e-9


def test_jordan_rank_stratification():
    for desc in DESCS:
        rng = np.random.default_rng(41)
        for s in range(desc.r + 1):
            X = orbit_rep(desc, s, 0)
            for _ in range(200):
                Y = random_conjugate(desc, X, rng=rng)
                w = to_p_plus(desc, proj_p(desc, Y, check=False))
                assert jd.jordan_rank_classical(w) == s

    assert jd.generic_norm(jd.AlbertElement.identity("C")) == 1.0
    rng = np.random.default_rng(43)
    A = jd.AlbertElement("C", rng.integers(-5, 6, 3).astype(float),
                         rng.integers(-5, 6, (3, 8)).astype(float))
    assert jd.generic_norm(A.scale(2.0)) == 8 * jd.generic_norm(A)
    assert jd.generic_norm(A.scale(3.0)) == 27 * jd.generic_norm(A)
    assert jd.generic_norm(A.scale(0.5)) == 0.125 * jd.generic_norm(A)

    # the relative invariant is exactly zero on sub-maximal representatives
    assert jd.generic_norm(jd.AlbertElement.diagonal("C", 1, 1, 0)) == 0.0
    for (fam, params), desc in zip(SIZES, DESCS):
        for s in range(desc.r):
            assert jd.fundamental_invariant(fam, ks_element(desc, s)) == 0.0
        assert abs(jd.fundamental_invariant(fam, ks_element(desc, desc.r))) > 1e-9


def test_rank_one_source_nilcone_chain():
    cfg = dp.make_dual_pair("sp-so2q", 1, 0, (6,))
    for alpha in dp.sample_sp1_nilcone(cfg, 200, seed=47):
        mg = dp.mu_g(cfg, alpha)
        assert frobenius(mg @ mg @ mg) <= 1e-9 * frobenius(mg) ** 3
    a1, a2 = dp.canonical_alphas(cfg)
    trips = standard_triples(cfg.target)
    assert np.array_equal(dp.mu_g(cfg, a1), trips[0][0])
    assert np.array_equal(dp.mu_g(cfg, a2), trips[1][0])


def test_full_verification_budget():
    t0 = time.perf_counter()
    code, report = run_verify_suite("all", seed=1)
    assert time.perf_counter() - t0 <= 60.0
    assert code == 0 and report["passed"]
