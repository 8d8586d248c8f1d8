"""Acceptance criteria: one test per criterion, one printed line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the PASS lines and
timings on the terminal.
"""

import itertools
import random
import time
from contextlib import contextmanager
from fractions import Fraction

import numpy as np

from ginv import (
    StarMatrix,
    core_ep_inverse,
    core_inverse,
    dual_v_core,
    group_inverse,
    inverse_along,
    mp_inverse,
    rank,
    w_core,
)
from ginv.cli import main as cli_main
from ginv.domains import COMPLEX_FLOAT, GAUSSIAN_RATIONAL, GaussianRational
from ginv.matrix import pinv, rel_diff

from conftest import assert_w_core_equations, gm


@contextmanager
def criterion(name, budget=None):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"[FAIL] {name}")
        raise
    elapsed = time.perf_counter() - t0
    if budget is not None:
        assert elapsed < budget, f"{name}: {elapsed:.1f}s exceeds {budget}s budget"
    print(f"[PASS] {name} ({elapsed:.2f}s)")


def _rand_rank_np(rng, n, r):
    if r == 0:
        return np.zeros((n, n), dtype=complex)
    x = rng.standard_normal((n, r)) + 1j * rng.standard_normal((n, r))
    y = rng.standard_normal((r, n)) + 1j * rng.standard_normal((r, n))
    return x @ y


def test_ac1_paper_example_reproduction():
    with criterion("AC1 paper example, every route, zero residuals", budget=1.0):
        a = gm([[0, 1], [0, 0]])
        w = gm([[3, 6], [1, 0]])
        expected = gm([[1, 0], [0, 0]])
        for route in ("all", "mary_13", "core_of_aw", "projection_unit", "rank_formula", "as_bc"):
            res = w_core(a, w, route=route)
            assert res.exists and res.value == expected, route
            assert res.certificate.ok
            assert all(v == 0.0 for v in res.certificate.residuals.values()), route
        assert_w_core_equations(a, w, expected)
        assert group_inverse(a) is None
        assert core_inverse(a) is None


def test_ac2_family_invariance():
    with criterion("AC2 25-member w-family all give the same inverse", budget=1.0):
        a = gm([[0, 1], [0, 0]])
        expected = gm([[1, 0], [0, 0]])
        for x, y in itertools.product(range(5), repeat=2):
            w = gm([[x, y], [1, 0]])
            res = w_core(a, w)
            assert res.exists and res.value == expected, (x, y)


def test_ac3_construction_not_idempotent():
    with criterion("AC3 w-core of the w-core inverse fails", budget=1.0):
        a = gm([[0, 1], [0, 0]])
        w = gm([[0, 0], [1, 0]])
        res = w_core(a, w)
        assert res.exists and res.value == gm([[1, 0], [0, 0]])
        b = res.value
        assert (b @ w @ b).is_zero()  # so x (bw) b = b is unsolvable
        again = w_core(b, w)
        assert not again.exists


def test_ac4_exhaustive_theorem_suite():
    rings = ["zmod:2", "zmod:3", "zmod:4", "zmod:5", "zmod:6", "zmod:8", "zmod:9", "zmod:12", "mat:2:gf2"]
    with criterion("AC4 full catalog on 9 finite rings, zero counterexamples", budget=600.0):
        for spec in rings:
            code = cli_main(["verify", "--ring", spec, "--all"])
            assert code == 0, f"verify --all failed on {spec}"


def test_ac5_route_coherence_float():
    with criterion("AC5 1000 random float pairs: routes agree / co-fail", budget=30.0):
        rng = np.random.default_rng(20240817)
        algebraic = ("mary_13", "core_of_aw", "projection_unit", "section3_unit", "as_along", "as_bc")
        n_exist = 0
        for i in range(1000):
            ra = int(rng.integers(0, 5))
            rw = int(rng.integers(0, 5))
            a = StarMatrix.from_numpy(_rand_rank_np(rng, 4, ra))
            w = StarMatrix.from_numpy(_rand_rank_np(rng, 4, rw))
            exists = rank(a) == rank(a @ w @ a)
            res = w_core(a, w)  # route=all cross-checks internally
            assert res.exists == exists, i
            if exists:
                n_exist += 1
                assert res.certificate.ok
                assert all(v <= 1e-6 for v in res.certificate.residuals.values()), i
            else:
                for route in algebraic:
                    rr = w_core(a, w, route=route)
                    assert not rr.exists, (i, route)
        assert 200 < n_exist < 900  # the profile really mixes both cases


def test_ac6_section4_formula_identity():
    with criterion("AC6 A(AWA)+AA+ equals W^{||A} A+ when existing", budget=30.0):
        rng = np.random.default_rng(424242)
        checked = 0
        for i in range(1000):
            ra = int(rng.integers(0, 5))
            rw = int(rng.integers(0, 5))
            a = StarMatrix.from_numpy(_rand_rank_np(rng, 4, ra))
            w = StarMatrix.from_numpy(_rand_rank_np(rng, 4, rw))
            awa = a @ w @ a
            if rank(a) != rank(awa):
                continue
            checked += 1
            lhs = a @ pinv(awa) @ a @ pinv(a)
            along = inverse_along(w, a)
            assert along.exists, i
            rhs = along.value @ pinv(a)
            assert rel_diff(lhs, rhs) <= 1e-6, i
        assert checked > 200


def test_ac7_special_case_collapses():
    with criterion("AC7 w=a and w=a* collapses on 400 random matrices", budget=60.0):
        rng = np.random.default_rng(7777)
        for _ in range(200):
            r = int(rng.integers(1, 5))
            s = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
            c = rng.standard_normal((r, r)) + 1j * rng.standard_normal((r, r))
            c += 3 * np.eye(r)  # keep the invertible block well conditioned
            blk = np.zeros((4, 4), dtype=complex)
            blk[:r, :r] = c
            a = StarMatrix.from_numpy(s @ blk @ np.linalg.inv(s))
            acore = w_core(a, a)
            assert acore.exists
            gi = group_inverse(a)
            core = core_inverse(a)
            assert rel_diff(acore.value, gi @ core) <= 1e-6
            assert rel_diff(core, a @ acore.value) <= 1e-6
        for _ in range(200):
            r = int(rng.integers(0, 5))
            a = StarMatrix.from_numpy(_rand_rank_np(rng, 4, r))
            mp = pinv(a)
            wc = w_core(a, a.adjoint())
            assert wc.exists
            assert rel_diff(wc.value, mp.adjoint() @ mp) <= 1e-6
            dv = dual_v_core(a, a.adjoint())
            assert dv.exists
            assert rel_diff(dv.value, mp @ mp.adjoint()) <= 1e-6


def test_ac8_pseudo_core_consistency():
    with criterion("AC8 engineered Drazin index: pseudo-core identities", budget=60.0):
        rng = np.random.default_rng(880)
        for n in (1, 2, 3):
            for _ in range(20):
                k = 5 - n
                s = rng.standard_normal((5, 5)) + 1j * rng.standard_normal((5, 5))
                c = rng.standard_normal((k, k)) + 1j * rng.standard_normal((k, k))
                c += 3 * np.eye(k)
                blk = np.zeros((5, 5), dtype=complex)
                blk[:k, :k] = c
                for j in range(n - 1):  # nilpotent Jordan block of index n
                    blk[k + j, k + j + 1] = 1.0
                a = StarMatrix.from_numpy(s @ blk @ np.linalg.inv(s))
                cep = core_ep_inverse(a)
                assert cep.index == n
                an = a.pow(n)
                core_an = core_inverse(an)
                assert core_an is not None
                assert rel_diff(cep.value, a.pow(n - 1) @ core_an) <= 1e-6
                acore_an = w_core(an, a)
                assert acore_an.exists
                assert rel_diff(cep.value, an @ acore_an.value) <= 1e-6


def test_ac9_scaling_law_exact():
    with criterion("AC9 exact scaling law on 100 Gaussian-rational instances", budget=60.0):
        rng = random.Random(99)
        lams = (GaussianRational(2), GaussianRational(-1), GaussianRational(3, 4))
        one = GaussianRational(1)
        found = 0
        while found < 100:
            n = rng.choice((2, 3))
            a = gm(
                [
                    [GaussianRational(rng.randint(-2, 2), rng.randint(-1, 1)) for _ in range(n)]
                    for _ in range(n)
                ]
            )
            w = gm(
                [
                    [GaussianRational(rng.randint(-2, 2), rng.randint(-1, 1)) for _ in range(n)]
                    for _ in range(n)
                ]
            )
            if a.is_zero() or rank(a) != rank(a @ w @ a):
                continue
            found += 1
            base = w_core(a, w)
            assert base.exists
            for lam in lams:
                scaled = w_core(a.scale(lam), w)
                assert scaled.exists
                assert scaled.value == base.value.scale(one / lam)
