"""Green preorders, inverse along an element, (b,c)-inverses, Jacobson pairs."""

import random
from fractions import Fraction

import pytest

from ginv import (
    PreconditionFailed,
    StarMatrix,
    bc_inverse,
    green_leq,
    group_formula_along,
    group_inverse,
    inverse_along,
    inverse_along_via_unit,
    jacobson_partner,
    mp_inverse,
    one_along_a,
)
from ginv.domains import GAUSSIAN_RATIONAL, RATIONAL
from ginv.matrix import inverse, left_nullspace
from ginv.regular import inner_inverse

from conftest import cm, gm, lists, mul_lists, qm


def test_green_reflexive():
    a = qm([[0, 1], [0, 0]])
    for rel in ("L", "R", "H"):
        assert green_leq(a, a, rel)


def test_green_everything_below_identity():
    a = qm([[0, 1], [0, 0]])
    i2 = StarMatrix.identity(2, RATIONAL)
    for rel in ("L", "R", "H"):
        assert green_leq(a, i2, rel)


def test_green_rank_obstruction():
    i2 = StarMatrix.identity(2, RATIONAL)
    b = qm([[0, 1], [0, 0]])
    assert not green_leq(i2, b, "L")
    assert not green_leq(i2, b, "R")


def test_inverse_along_identity_gives_inverse():
    a = qm([[2, 1], [1, 1]])
    res = inverse_along(a, StarMatrix.identity(2, RATIONAL))
    assert res.exists and res.value == inverse(a)


def test_inverse_along_self_gives_group_inverse():
    a = qm([[1, 0], [0, 0]])
    res = inverse_along(a, a)
    assert res.exists and res.value == group_inverse(a)


def test_inverse_along_adjoint_gives_mp():
    a = gm([[0, 1], [0, 0]])
    res = inverse_along(a, a.adjoint())
    assert res.exists and res.value == mp_inverse(a)


def test_inverse_along_zero_convention():
    # a^{||0} = 0: the zero element is invertible along zero with inverse 0
    a = qm([[1, 2], [3, 4]])
    res = inverse_along(a, StarMatrix.zeros(2, 2, RATIONAL))
    assert res.exists and res.value.is_zero()


def test_inverse_along_not_exists():
    n = qm([[0, 1], [0, 0]])
    # d a d = n^3 = 0 but d = n != 0, so d is not below dad
    res = inverse_along(n, n)
    assert not res.exists
    i2 = StarMatrix.identity(2, RATIONAL)
    assert not inverse_along(i2, n).exists  # 1^{||n} needs n group invertible


def test_inverse_along_is_outer_inverse():
    rng = random.Random(41)
    for _ in range(10):
        a = qm([[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)])
        d = qm([[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)])
        res = inverse_along(a, d)
        if res.exists:
            b = res.value
            assert b @ a @ b == b


def test_inverse_along_via_unit_examples():
    e = qm([[1, 0], [0, 0]])
    assert inverse_along_via_unit(e, e, e) == e
    z = StarMatrix.zeros(2, 2, RATIONAL)
    assert inverse_along_via_unit(qm([[1, 2], [3, 4]]), z, z) == z
    a = qm([[2, 1], [1, 1]])
    i2 = StarMatrix.identity(2, RATIONAL)
    assert inverse_along_via_unit(a, i2, i2) == inverse(a)


def test_inverse_along_via_unit_agrees_with_solve_route():
    rng = random.Random(43)
    for _ in range(10):
        a = qm([[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)])
        d = qm([[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)])
        res = inverse_along(a, d)
        via = inverse_along_via_unit(a, d, inner_inverse(d))
        assert res.exists == (via is not None)
        if res.exists:
            assert via == res.value


def test_inverse_along_via_unit_float():
    import numpy as np

    from ginv.matrix import rel_diff

    rng = np.random.default_rng(8)
    a = cm((rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))).tolist())
    x = rng.standard_normal((3, 2)) + 1j * rng.standard_normal((3, 2))
    d = cm((x @ x.conj().T).tolist())  # rank-2 Hermitian
    res = inverse_along(a, d)
    via = inverse_along_via_unit(a, d, inner_inverse(d))
    assert res.exists == (via is not None)
    if res.exists:
        assert rel_diff(via, res.value) < 1e-6


def test_one_along_a():
    e = qm([[1, 0], [0, 0]])
    assert one_along_a(e) == e  # a a^# = e for an idempotent
    a = qm([[2, 1], [1, 1]])
    assert one_along_a(a) == StarMatrix.identity(2, RATIONAL)
    assert one_along_a(qm([[0, 1], [0, 0]])) is None


def test_group_formula_along():
    a = gm([[0, 1], [0, 0]])
    w = gm([[3, 6], [1, 0]])
    got = group_formula_along(w, a)
    assert got is not None
    # cross-check against the definition-based route
    assert got == inverse_along(w, a).value
    # w = identity on a group-invertible element reduces to a a^#
    e = qm([[1, 0], [0, 0]])
    assert group_formula_along(StarMatrix.identity(2, RATIONAL), e) == one_along_a(e)
    inv_a = qm([[2, 1], [1, 1]])
    assert group_formula_along(inv_a, inv_a) == inverse(inv_a) @ inverse(inv_a) @ inv_a


def test_bc_inverse_star_pair_is_mp():
    a = gm([[0, 1], [0, 0]])
    y = bc_inverse(a, a.adjoint(), a.adjoint())
    assert y == mp_inverse(a)


def test_bc_inverse_self_pair_is_group():
    e = qm([[1, 0], [0, 0]])
    assert bc_inverse(e, e, e) == group_inverse(e)


def test_bc_inverse_identity_pair():
    a = qm([[2, 1], [1, 1]])
    i2 = StarMatrix.identity(2, RATIONAL)
    assert bc_inverse(a, i2, i2) == inverse(a)


def test_bc_inverse_not_exists():
    a = qm([[0, 1], [0, 0]])
    assert bc_inverse(a, a, a) is None  # rank(a a a) = 0 < rank a


def test_jacobson_scalar_example():
    a, b = qm([[2]]), qm([[3]])
    alpha_inv = qm([[Fraction(-1, 5)]])
    beta_inv = jacobson_partner(a, b, alpha_inv)
    assert beta_inv == qm([[Fraction(-1, 5)]])


def test_jacobson_nilpotent_example():
    n = qm([[0, 1], [0, 0]])
    i2 = StarMatrix.identity(2, RATIONAL)
    assert jacobson_partner(n, n, i2) == i2  # ab = 0 so alpha = 1, beta^{-1} = 1 + n^2


def test_jacobson_precondition():
    a = qm([[0, 1], [0, 0]])
    b = qm([[0, 0], [1, 0]])
    # 1 - ab = diag(0, 1) is singular; the claimed inverse must be rejected
    with pytest.raises(PreconditionFailed):
        jacobson_partner(a, b, StarMatrix.identity(2, RATIONAL))


def test_jacobson_symmetry_random():
    rng = random.Random(47)
    i2 = StarMatrix.identity(2, RATIONAL)
    for _ in range(20):
        a = qm([[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)])
        b = qm([[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)])
        alpha_inv = inverse(i2 - a @ b)
        beta_inv = inverse(i2 - b @ a)
        assert (alpha_inv is None) == (beta_inv is None)
        if alpha_inv is not None:
            assert jacobson_partner(a, b, alpha_inv) == beta_inv


def test_green_lemma_nullspace_inclusion():
    # a <=_R b implies left annihilators of b annihilate a
    rng = random.Random(53)
    for _ in range(10):
        b = qm([[rng.randint(-2, 2) for _ in range(3)] for _ in range(3)])
        y = qm([[rng.randint(-2, 2) for _ in range(3)] for _ in range(3)])
        a = b @ y  # a <=_R b by construction
        lns = left_nullspace(b)
        assert (lns @ a).is_zero()
