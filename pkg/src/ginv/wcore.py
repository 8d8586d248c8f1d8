"""The w-core inverse and the dual v-core inverse, by independent routes.

An element a is w-core invertible when some x satisfies awx^2 = x,
xawa = a, (awx)* = awx; then x is unique, awxa = a and xawx = x follow,
and wx is a {1,2,3}-inverse of a.  Routes implemented:

  mary_13          w^{||a} a^{(1,3)}
  core_of_aw       core inverse of aw (requires a in awS)
  projection_unit  u^{-1}(1-p) with p = 1 - (aw)(aw)_core, u = p + aw
  rank_formula     A (AWA)^+ A A^+           (rank(A) = rank(AWA) criterion)
  section3_unit    t^{-1} a a*  with t = a a* a w + 1 - a a^-
  as_along         inverse of aw along a a*  (needs a MP-invertible)
  as_bc            (a, a*)-inverse of aw

All successful routes must agree; disagreement is an internal fault, never
a normal result.  In ComplexFloat the rank criterion alone decides
existence and algebraic-route hiccups at borderline rank become warnings.
Over GF(p) the rank criterion is necessary but not sufficient (a {1,3}-
inverse can be missing), so the algebraic path is authoritative there.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .along import bc_inverse, inverse_along
from .classical import core_ep_inverse, core_inverse, dual_core_inverse, group_inverse
from .equations import InverseResult, certify
from .errors import PreconditionFailed, RouteDisagreement, ShapeMismatch
from .matrix import (
    DEFAULT_TOL,
    StarMatrix,
    ToleranceThresholds,
    inverse,
    is_projection,
    rank,
    rel_diff,
    solve_left,
    solve_right,
)
from .regular import (
    canonical_one_four,
    canonical_one_three,
    inner_inverse,
    mp_inverse,
)

W_CORE_ROUTES = (
    "mary_13",
    "core_of_aw",
    "projection_unit",
    "rank_formula",
    "section3_unit",
    "as_along",
    "as_bc",
)

DUAL_V_CORE_ROUTES = (
    "mary_14",
    "dual_core_of_va",
    "group_va",
    "group_av",
    "rank_formula",
    "section3_unit",
)

# domains where the conjugate involution is definite: a* a = 0 forces a = 0,
# so {1,3}/{1,4}/MP inverses always exist and the rank criterion
# rank(A) = rank(AWA) is equivalent to w-core existence
_DEFINITE_KINDS = ("rational", "gaussian_rational", "complex_float")


def _check_pair(a: StarMatrix, w: StarMatrix):
    if not (a.is_square() and a.shape == w.shape):
        raise ShapeMismatch("w-core inverses need square, same-size inputs")
    if a.domain != w.domain:
        raise ShapeMismatch("inputs must share a domain")


def _bound(a: StarMatrix, tol: ToleranceThresholds) -> float:
    return 0.0 if a.domain.exact else tol.residual_rel_tol


def _value_bound(a: StarMatrix, tol: ToleranceThresholds) -> float:
    # comparisons between independently computed route values accumulate the
    # squared conditioning of product words (e.g. aa* (aw) aa*): allow two
    # extra orders, which is exactly the acceptance-level 1e-6 at defaults
    return 0.0 if a.domain.exact else 100.0 * tol.residual_rel_tol


class _RouteOutcome:
    __slots__ = ("value", "witnesses", "reason", "degraded")

    def __init__(self, value=None, witnesses=None, reason=None, degraded=False):
        self.value = value
        self.witnesses = witnesses or {}
        self.reason = reason
        self.degraded = degraded  # float: built through an ill-conditioned solve


def _route_mary_13(a, w, tol):
    along = inverse_along(w, a, tol)
    if not along.exists:
        return _RouteOutcome(reason="w is not invertible along a")
    x13 = canonical_one_three(a, tol)
    if x13 is None:
        return _RouteOutcome(reason="a has no {1,3}-inverse")
    degraded = bool(along.certificate and along.certificate.warnings)
    return _RouteOutcome(
        along.value @ x13,
        {"w_along_a": along.value, "one_three": x13},
        degraded=degraded,
    )


def _route_core_of_aw(a, w, tol):
    aw = a @ w
    if solve_right(aw, a, tol) is None:
        return _RouteOutcome(reason="a is not in awS")
    core = core_inverse(aw, tol)
    if core is None:
        return _RouteOutcome(reason="aw has no core inverse")
    return _RouteOutcome(core)


def _route_projection_unit(a, w, tol):
    aw = a @ w
    core = core_inverse(aw, tol)
    if core is None:
        return _RouteOutcome(reason="aw has no core inverse")
    ident = StarMatrix.identity(a.rows, a.domain)
    p = ident - aw @ core
    bound = _bound(a, tol)
    if not is_projection(p, tol):
        if a.domain.exact:
            raise RouteDisagreement("1 - (aw)(aw)_core is not a projection")
        return _RouteOutcome(reason="projection construction lost precision")
    if rel_diff(p @ a, StarMatrix.zeros(a.rows, a.cols, a.domain)) > bound:
        return _RouteOutcome(reason="projection criterion fails: pa != 0")
    u = p + aw
    u_inv = inverse(u, tol)
    if u_inv is None:
        return _RouteOutcome(reason="p + aw is not invertible")
    return _RouteOutcome(u_inv @ (ident - p), {"projection": p, "unit": u})


def _route_rank_formula(a, w, tol):
    if a.domain.kind not in _DEFINITE_KINDS:
        return None  # inapplicable
    awa = a @ w @ a
    if rank(a, tol) != rank(awa, tol):
        return _RouteOutcome(reason="rank(A) != rank(AWA)")
    mp_awa = mp_inverse(awa, tol)
    mp_a = mp_inverse(a, tol)
    if mp_awa is None or mp_a is None:
        raise RouteDisagreement("MP inverse missing over a definite domain")
    return _RouteOutcome(a @ mp_awa @ a @ mp_a)


def _route_section3_unit(a, w, tol, a_inner=None):
    if a.domain.kind not in _DEFINITE_KINDS:
        return None  # unit criterion characterizes the intersection only
    if a_inner is None:
        a_inner = inner_inverse(a, tol)
    ident = StarMatrix.identity(a.rows, a.domain)
    t = a @ a.adjoint() @ a @ w + ident - a @ a_inner
    t_inv = inverse(t, tol)
    if t_inv is None:
        return _RouteOutcome(reason="a a* a w + 1 - a a^- is not invertible")
    return _RouteOutcome(t_inv @ a @ a.adjoint(), {"section3_unit": t})


def _route_as_along(a, w, tol):
    if mp_inverse(a, tol) is None:
        return None  # hypothesis a in S^dagger unmet
    res = inverse_along(a @ w, a @ a.adjoint(), tol)
    if not res.exists:
        return _RouteOutcome(reason="aw is not invertible along aa*")
    if res.certificate is not None and not res.certificate.ok:
        return _RouteOutcome(reason="inverse along aa* lost precision")
    degraded = bool(res.certificate and res.certificate.warnings)
    return _RouteOutcome(res.value, degraded=degraded)


def _route_as_bc(a, w, tol):
    if a.domain.kind == "integer_mod":
        return None  # needs rank machinery
    y = bc_inverse(a @ w, a, a.adjoint(), tol)
    if y is None:
        return _RouteOutcome(reason="aw is not (a, a*)-invertible")
    return _RouteOutcome(y)


_W_ROUTE_FUNCS = {
    "mary_13": _route_mary_13,
    "core_of_aw": _route_core_of_aw,
    "projection_unit": _route_projection_unit,
    "rank_formula": _route_rank_formula,
    "section3_unit": _route_section3_unit,
    "as_along": _route_as_along,
    "as_bc": _route_as_bc,
}


def w_core_exists(a: StarMatrix, w: StarMatrix, tol: ToleranceThresholds = DEFAULT_TOL) -> bool:
    """Existence test; rank path and algebraic path must agree where both apply."""
    _check_pair(a, w)
    algebraic = None
    if a.domain.exact:
        algebraic = (
            inverse_along(w, a, tol).exists and canonical_one_three(a, tol) is not None
        )
    if a.domain.kind in _DEFINITE_KINDS:
        by_rank = rank(a, tol) == rank(a @ w @ a, tol)
        if algebraic is not None and by_rank != algebraic:
            raise RouteDisagreement(
                "rank criterion and algebraic criterion disagree on existence"
            )
        return by_rank
    return bool(algebraic)


def w_core(
    a: StarMatrix,
    w: StarMatrix,
    route: str = "all",
    tol: ToleranceThresholds = DEFAULT_TOL,
    a_inner: StarMatrix | None = None,
) -> InverseResult:
    """The w-core inverse of a, certified against its defining equations."""
    _check_pair(a, w)
    if route != "all" and route not in W_CORE_ROUTES:
        raise PreconditionFailed(f"unknown w-core route {route!r}")
    exact = a.domain.exact

    def run(name):
        fn = _W_ROUTE_FUNCS[name]
        if name == "section3_unit":
            return fn(a, w, tol, a_inner)
        return fn(a, w, tol)

    if route != "all":
        # float existence is the rank criterion's call even for single routes;
        # unit-style routes cannot tell singular from condition 1/eps
        if not exact and rank(a, tol) != rank(a @ w @ a, tol):
            return InverseResult(False, reason="rank(A) != rank(AWA)")
        out = run(route)
        if out is None:
            return InverseResult(False, reason=f"route {route} not applicable here")
        if out.value is None:
            return InverseResult(False, reason=out.reason)
        cert = certify("w-core", {"a": a, "w": w, "x": out.value}, tol, route=route)
        cert.witnesses.update(out.witnesses)
        return InverseResult(cert.ok, value=out.value, certificate=cert)

    # existence first: rank criterion in float, Mary criterion in exact domains
    if not exact:
        if rank(a, tol) != rank(a @ w @ a, tol):
            return InverseResult(False, reason="rank(A) != rank(AWA)")
    else:
        if not inverse_along(w, a, tol).exists:
            return InverseResult(False, reason="w is not invertible along a")
        if canonical_one_three(a, tol) is None:
            return InverseResult(False, reason="a has no {1,3}-inverse")
        if a.domain.kind in _DEFINITE_KINDS and rank(a, tol) != rank(a @ w @ a, tol):
            raise RouteDisagreement("algebraic existence but rank criterion fails")

    values: dict[str, StarMatrix] = {}
    degraded: dict[str, StarMatrix] = {}
    witnesses: dict = {}
    warnings: list[str] = []
    for name in W_CORE_ROUTES:
        out = run(name)
        if out is None:
            continue
        if out.value is None:
            if exact:
                raise RouteDisagreement(f"route {name} failed while others exist: {out.reason}")
            warnings.append(f"route {name} failed near tolerance: {out.reason}")
            continue
        if out.degraded:
            # value built through an ill-conditioned solve: keep it out of
            # the agreement set, the remaining routes carry the answer
            warnings.append(f"route {name} degraded by conditioning; excluded")
            degraded[name] = out.value
            witnesses.update(out.witnesses)
            continue
        values[name] = out.value
        witnesses.update(out.witnesses)
    if not values:
        if degraded:
            values = dict(list(degraded.items())[:1])
            warnings.append("all routes degraded; using the first value unchecked")
        else:
            raise RouteDisagreement("existence asserted but every route failed")
    names = list(values)
    bound = _value_bound(a, tol)
    first = values[names[0]]
    for other in names[1:]:
        if rel_diff(first, values[other]) > bound:
            raise RouteDisagreement(
                f"routes {names[0]} and {other} disagree on the w-core inverse"
            )
    cert = certify("w-core", {"a": a, "w": w, "x": first}, tol, route="all")
    cert.witnesses.update(witnesses)
    cert.warnings.extend(warnings)
    if exact and not cert.ok:
        raise RouteDisagreement("exact w-core value failed its defining equations")
    return InverseResult(True, value=first, certificate=cert)


def w_core_via_projection(
    a: StarMatrix, w: StarMatrix, tol: ToleranceThresholds = DEFAULT_TOL
) -> InverseResult:
    """Projection + unit criterion route, exposed on its own."""
    return w_core(a, w, route="projection_unit", tol=tol)


def wcore_as_along(
    a: StarMatrix, w: StarMatrix, tol: ToleranceThresholds = DEFAULT_TOL
) -> StarMatrix | None:
    """Inverse of aw along aa*; equals the w-core inverse when a is MP-invertible."""
    _check_pair(a, w)
    if mp_inverse(a, tol) is None:
        raise PreconditionFailed("theorem hypothesis: a must be MP-invertible")
    res = inverse_along(a @ w, a @ a.adjoint(), tol)
    if not res.exists:
        return None
    ref = w_core(a, w, tol=tol)
    if not ref.exists or rel_diff(res.value, ref.value) > _value_bound(a, tol):
        raise RouteDisagreement("(aw)^{||aa*} disagrees with the w-core inverse")
    return res.value


def wcore_as_bc(
    a: StarMatrix, w: StarMatrix, tol: ToleranceThresholds = DEFAULT_TOL
) -> StarMatrix | None:
    """(a, a*)-inverse of aw; equals the w-core inverse when either exists."""
    _check_pair(a, w)
    y = bc_inverse(a @ w, a, a.adjoint(), tol)
    if y is None:
        ref = w_core(a, w, tol=tol)
        if ref.exists:
            if a.domain.exact:
                raise RouteDisagreement(
                    "w-core exists but the (a, a*)-inverse of aw does not"
                )
            return None  # float borderline; the route=all path warns instead
        return None
    ref = w_core(a, w, tol=tol)
    if not ref.exists or rel_diff(y, ref.value) > _value_bound(a, tol):
        raise RouteDisagreement("(a, a*)-inverse of aw disagrees with the w-core inverse")
    return y


# ---------------------------------------------------------------------------
# dual v-core


def _d_route_mary_14(a, v, tol):
    along = inverse_along(v, a, tol)
    if not along.exists:
        return _RouteOutcome(reason="v is not invertible along a")
    x14 = canonical_one_four(a, tol)
    if x14 is None:
        return _RouteOutcome(reason="a has no {1,4}-inverse")
    degraded = bool(along.certificate and along.certificate.warnings)
    return _RouteOutcome(
        x14 @ along.value, {"v_along_a": along.value, "one_four": x14}, degraded=degraded
    )


def _d_route_dual_core_of_va(a, v, tol):
    va = v @ a
    if solve_left(va, a, tol) is None:
        return _RouteOutcome(reason="a is not in Sva")
    dc = dual_core_inverse(va, tol)
    if dc is None:
        return _RouteOutcome(reason="va has no dual-core inverse")
    return _RouteOutcome(dc)


def _d_route_group_va(a, v, tol):
    x14 = canonical_one_four(a, tol)
    if x14 is None:
        return _RouteOutcome(reason="a has no {1,4}-inverse")
    g = group_inverse(v @ a, tol)
    if g is None:
        return _RouteOutcome(reason="va has no group inverse")
    return _RouteOutcome(x14 @ a @ g)


def _d_route_group_av(a, v, tol):
    x14 = canonical_one_four(a, tol)
    if x14 is None:
        return _RouteOutcome(reason="a has no {1,4}-inverse")
    g = group_inverse(a @ v, tol)
    if g is None:
        return _RouteOutcome(reason="av has no group inverse")
    return _RouteOutcome(x14 @ g @ a)


def _d_route_rank_formula(a, v, tol):
    if a.domain.kind not in _DEFINITE_KINDS:
        return None
    ava = a @ v @ a
    if rank(a, tol) != rank(ava, tol):
        return _RouteOutcome(reason="rank(A) != rank(AVA)")
    mp_ava = mp_inverse(ava, tol)
    mp_a = mp_inverse(a, tol)
    return _RouteOutcome(mp_a @ a @ mp_ava @ a)


def _d_route_section3_unit(a, v, tol):
    if a.domain.kind not in _DEFINITE_KINDS:
        return None
    a_inner = inner_inverse(a, tol)
    ident = StarMatrix.identity(a.rows, a.domain)
    s = v @ a @ a.adjoint() @ a + ident - a_inner @ a
    s_inv = inverse(s, tol)
    if s_inv is None:
        return _RouteOutcome(reason="v a a* a + 1 - a^- a is not invertible")
    return _RouteOutcome(a.adjoint() @ a @ s_inv, {"section3_unit_dual": s})


_D_ROUTE_FUNCS = {
    "mary_14": _d_route_mary_14,
    "dual_core_of_va": _d_route_dual_core_of_va,
    "group_va": _d_route_group_va,
    "group_av": _d_route_group_av,
    "rank_formula": _d_route_rank_formula,
    "section3_unit": _d_route_section3_unit,
}


def dual_v_core(
    a: StarMatrix,
    v: StarMatrix,
    route: str = "all",
    tol: ToleranceThresholds = DEFAULT_TOL,
) -> InverseResult:
    """The dual v-core inverse of a: y with y^2 v a = y, a v a y = a, (yva)* = yva."""
    _check_pair(a, v)
    if route != "all" and route not in DUAL_V_CORE_ROUTES:
        raise PreconditionFailed(f"unknown dual-v-core route {route!r}")
    exact = a.domain.exact

    if route != "all":
        if not exact and rank(a, tol) != rank(a @ v @ a, tol):
            return InverseResult(False, reason="rank(A) != rank(AVA)")
        out = _D_ROUTE_FUNCS[route](a, v, tol)
        if out is None:
            return InverseResult(False, reason=f"route {route} not applicable here")
        if out.value is None:
            return InverseResult(False, reason=out.reason)
        cert = certify("dual-v-core", {"a": a, "v": v, "x": out.value}, tol, route=route)
        cert.witnesses.update(out.witnesses)
        return InverseResult(cert.ok, value=out.value, certificate=cert)

    if not exact:
        if rank(a, tol) != rank(a @ v @ a, tol):
            return InverseResult(False, reason="rank(A) != rank(AVA)")
    else:
        if not inverse_along(v, a, tol).exists:
            return InverseResult(False, reason="v is not invertible along a")
        if canonical_one_four(a, tol) is None:
            return InverseResult(False, reason="a has no {1,4}-inverse")

    values: dict[str, StarMatrix] = {}
    degraded: dict[str, StarMatrix] = {}
    witnesses: dict = {}
    warnings: list[str] = []
    for name in DUAL_V_CORE_ROUTES:
        out = _D_ROUTE_FUNCS[name](a, v, tol)
        if out is None:
            continue
        if out.value is None:
            if exact:
                raise RouteDisagreement(f"route {name} failed while others exist: {out.reason}")
            warnings.append(f"route {name} failed near tolerance: {out.reason}")
            continue
        if out.degraded:
            warnings.append(f"route {name} degraded by conditioning; excluded")
            degraded[name] = out.value
            witnesses.update(out.witnesses)
            continue
        values[name] = out.value
        witnesses.update(out.witnesses)
    if not values:
        if degraded:
            values = dict(list(degraded.items())[:1])
            warnings.append("all routes degraded; using the first value unchecked")
        else:
            raise RouteDisagreement("existence asserted but every dual route failed")
    names = list(values)
    bound = _value_bound(a, tol)
    first = values[names[0]]
    for other in names[1:]:
        if rel_diff(first, values[other]) > bound:
            raise RouteDisagreement(
                f"dual routes {names[0]} and {other} disagree on the value"
            )
    cert = certify("dual-v-core", {"a": a, "v": v, "x": first}, tol, route="all")
    cert.witnesses.update(witnesses)
    cert.warnings.extend(warnings)
    if exact and not cert.ok:
        raise RouteDisagreement("exact dual v-core value failed its defining equations")
    return InverseResult(True, value=first, certificate=cert)


# ---------------------------------------------------------------------------
# derived results


def star_duality_check(
    a: StarMatrix, w: StarMatrix, tol: ToleranceThresholds = DEFAULT_TOL
) -> bool:
    """(a_w)* = (a*)_{w*,dual}: existence and values must match across the star."""
    r1 = w_core(a, w, tol=tol)
    r2 = dual_v_core(a.adjoint(), w.adjoint(), tol=tol)
    if r1.exists != r2.exists:
        return False
    if not r1.exists:
        return True
    return rel_diff(r1.value.adjoint(), r2.value) <= _value_bound(a, tol)


def w_core_of_w_core(
    a: StarMatrix, w: StarMatrix, tol: ToleranceThresholds = DEFAULT_TOL
) -> StarMatrix:
    """Core inverse of a_w, which always exists and equals (aw)^2 a_w."""
    res = w_core(a, w, tol=tol)
    if not res.exists:
        raise PreconditionFailed("a is not w-core invertible")
    c = core_inverse(res.value, tol)
    if c is None:
        raise RouteDisagreement("the w-core inverse lost core invertibility")
    expected = (a @ w).pow(2) @ res.value
    if rel_diff(c, expected) > _value_bound(a, tol):
        raise RouteDisagreement("(a_w)_core does not equal (aw)^2 a_w")
    return c


def ideal_form_membership(
    a: StarMatrix, w: StarMatrix, n: int, tol: ToleranceThresholds = DEFAULT_TOL
) -> bool:
    """a in S[(aw)*]^n a  and  a in S(aw)^{n-1} a, for n >= 2."""
    if n < 2:
        raise PreconditionFailed("the ideal-form test is stated for n >= 2")
    aw = a @ w
    e1 = aw.adjoint().pow(n) @ a
    e2 = aw.pow(n - 1) @ a
    return solve_left(e1, a, tol) is not None and solve_left(e2, a, tol) is not None


def special_cases(
    a: StarMatrix, which: str, tol: ToleranceThresholds = DEFAULT_TOL
) -> InverseResult:
    """Collapses of the w-core inverse for w in {a, a*} and the pseudo-core power form."""
    if which == "a_core":
        res = w_core(a, a, tol=tol)
        core = core_inverse(a, tol)
        if res.exists != (core is not None):
            raise RouteDisagreement("a-core and core invertibility disagree")
        if res.exists:
            bound = _value_bound(a, tol)
            if rel_diff(core, a @ res.value) > bound:
                raise RouteDisagreement("a_core does not satisfy core = a * a_a")
            g = group_inverse(a, tol)
            if rel_diff(res.value, g @ core) > bound:
                raise RouteDisagreement("a_a does not equal a^# a_core")
        return res
    if which == "astar_core":
        res = w_core(a, a.adjoint(), tol=tol)
        mp = mp_inverse(a, tol)
        if res.exists != (mp is not None):
            raise RouteDisagreement("a*-core and MP invertibility disagree")
        if res.exists and rel_diff(res.value, mp.adjoint() @ mp) > _value_bound(a, tol):
            raise RouteDisagreement("a*-core inverse does not equal (a+)* a+")
        return res
    if which == "dual_astar_core":
        res = dual_v_core(a, a.adjoint(), tol=tol)
        mp = mp_inverse(a, tol)
        if res.exists != (mp is not None):
            raise RouteDisagreement("dual a*-core and MP invertibility disagree")
        if res.exists and rel_diff(res.value, mp @ mp.adjoint()) > _value_bound(a, tol):
            raise RouteDisagreement("dual a*-core inverse does not equal a+ (a+)*")
        return res
    if which == "pseudo_power":
        cep = core_ep_inverse(a, tol)
        if cep is None:
            return InverseResult(False, reason="a is not pseudo-core invertible")
        n = cep.index
        an = a.pow(n)
        core_an = core_inverse(an, tol)
        acore_an = w_core(an, a, tol=tol)
        if core_an is None or not acore_an.exists:
            raise RouteDisagreement("a^n lost (a-)core invertibility at the pseudo-core index")
        bound = _value_bound(a, tol)
        if rel_diff(cep.value, a.pow(n - 1) @ core_an) > bound:
            raise RouteDisagreement("pseudo-core does not equal a^{n-1} (a^n)_core")
        if rel_diff(cep.value, an @ acore_an.value) > bound:
            raise RouteDisagreement("pseudo-core does not equal a^n (a^n)_a")
        return InverseResult(True, value=cep.value, index=n)
    raise PreconditionFailed(f"unknown special case {which!r}")


@dataclass
class UnitReport:
    """Invertibility of the ring-theoretic unit expressions and formula agreement."""

    hypothesis_met: bool  # v invertible along a
    units: dict[str, bool] = dc_field(default_factory=dict)
    exists_w_core: bool = False
    exists_dual_v_core: bool = False
    exists_dual_w_core: bool = False
    values: dict[str, StarMatrix] = dc_field(default_factory=dict)
    notes: list[str] = dc_field(default_factory=list)


def section3_units(
    a: StarMatrix,
    w: StarMatrix,
    v: StarMatrix,
    a_inner: StarMatrix | None = None,
    tol: ToleranceThresholds = DEFAULT_TOL,
) -> UnitReport:
    """Evaluate the ring-theoretic unit criteria and assert their biconditionals.

    The joint (w, v) criteria require the hypothesis v invertible along a;
    when it fails the report degrades to the one direction that survives
    (joint existence must then be false).  The single-w criteria need no
    hypothesis beyond regularity of a.
    """
    _check_pair(a, w)
    _check_pair(a, v)
    if a_inner is None:
        a_inner = inner_inverse(a, tol)
    ident = StarMatrix.identity(a.rows, a.domain)
    astar = a.adjoint()
    aa_in = a @ a_inner
    in_a = a_inner @ a
    hypothesis = inverse_along(v, a, tol).exists

    report = UnitReport(hypothesis_met=hypothesis)
    report.exists_w_core = w_core_exists(a, w, tol)
    report.exists_dual_v_core = dual_v_core(a, v, tol=tol).exists
    report.exists_dual_w_core = dual_v_core(a, w, tol=tol).exists

    units: dict[str, StarMatrix] = {
        "u_wv": a @ w @ a @ v @ a @ astar + ident - aa_in,
        "r_wv": a @ v @ a @ w @ a @ astar + ident - aa_in,
        "s_wv": w @ a @ v @ a @ astar @ a + ident - in_a,
        "t_wv": v @ a @ w @ a @ astar @ a + ident - in_a,
        "u_w": a @ w @ a @ astar + ident - aa_in,
        "r_w": astar @ a @ w @ a + ident - in_a,
        "s_w": w @ a @ astar @ a + ident - in_a,
        "t_w": a @ astar @ a @ w + ident - aa_in,
    }
    inverses = {name: inverse(m, tol) for name, m in units.items()}
    report.units = {name: inv is not None for name, inv in inverses.items()}

    joint_wv = report.exists_w_core and report.exists_dual_v_core
    joint_ww = report.exists_w_core and report.exists_dual_w_core
    wv_names = ("u_wv", "r_wv", "s_wv", "t_wv")
    w_names = ("u_w", "r_w", "s_w", "t_w")

    if hypothesis:
        for name in wv_names:
            if report.units[name] != joint_wv:
                raise RouteDisagreement(
                    f"unit {name} invertibility does not match joint existence"
                )
    else:
        if joint_wv:
            raise RouteDisagreement(
                "joint existence implies v invertible along a, but hypothesis failed"
            )
        report.notes.append("hypothesis v in R^(||a) unmet; joint criteria skipped")
    for name in w_names:
        if report.units[name] != joint_ww:
            raise RouteDisagreement(
                f"unit {name} invertibility does not match w/dual-w existence"
            )

    bound = _value_bound(a, tol)
    if joint_wv and hypothesis:
        u_inv, s_inv, t_inv = inverses["u_wv"], inverses["s_wv"], inverses["t_wv"]
        middle = (u_inv @ a @ w @ a @ v @ a).adjoint()
        val_w = a @ v @ a @ astar @ a @ s_inv @ middle
        val_v = middle @ a @ w @ a @ astar @ a @ t_inv
        ref_w = w_core(a, w, tol=tol).value
        ref_v = dual_v_core(a, v, tol=tol).value
        if rel_diff(val_w, ref_w) > bound or rel_diff(val_v, ref_v) > bound:
            raise RouteDisagreement("joint unit formulas disagree with direct values")
        report.values["w_core_wv"] = val_w
        report.values["dual_v_core_wv"] = val_v
    if joint_ww:
        t_inv, s_inv = inverses["t_w"], inverses["s_w"]
        val_w = t_inv @ a @ astar
        val_dw = astar @ a @ s_inv
        ref_w = w_core(a, w, tol=tol).value
        ref_dw = dual_v_core(a, w, tol=tol).value
        if rel_diff(val_w, ref_w) > bound or rel_diff(val_dw, ref_dw) > bound:
            raise RouteDisagreement("single-w unit formulas disagree with direct values")
        report.values["w_core_w"] = val_w
        report.values["dual_w_core_w"] = val_dw
    return report
