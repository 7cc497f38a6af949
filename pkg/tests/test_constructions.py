"""Construction families: hypothesis checking, self-duality, lambda."""

import pytest

from tgrs.field import embed, make_field
from tgrs.analysis import (classify, recover_lambda, self_dual_matrix,
                           self_dual_structural)
from tgrs.constructions import (ConstructionError, build, build_t31,
                                build_t33, build_t35, build_t36)


def assert_self_dual_with_lambda(result):
    code = result.code
    assert code.n == 2 * code.k
    assert self_dual_matrix(code)
    if code.k >= 3:
        res = self_dual_structural(code)
        assert res.self_dual and res.structural
    assert recover_lambda(code) == result.predicted_lambda
    two = code.ctx.element(2)
    assert (two + code.a * code.eta).is_zero()


# -- T31 -------------------------------------------------------------------------

def test_t31_basic_instance():
    result = build_t31(p=3, t=1, l=1, b=1, c=1)
    code = result.code
    assert (code.n, code.k) == (6, 3)
    assert_self_dual_with_lambda(result)
    # eta * b = 2 by definition
    base = result.base_field
    b = base.element(1)
    assert code.eta == embed(base, code.ctx, base.element(2) / b)
    # lambda is -b
    assert result.predicted_lambda == embed(base, code.ctx, -b)


def test_t31_weights_follow_power_law():
    # u_i = -b^{-1} alpha_i^{2-2lp}
    result = build_t31(p=3, t=1, l=1, b=2, c=1)
    code = result.code
    base = result.base_field
    minus_b_inv = embed(base, code.ctx, -base.element(2).inverse())
    for ui, ai in zip(code.u, code.alpha):
        assert ui == minus_b_inv * ai ** (2 - code.n)


def test_t31_sum_of_roots_is_minus_b():
    result = build_t31(p=5, t=1, l=1, b=3, c=2)
    base = result.base_field
    assert result.code.a == embed(base, result.code.ctx, base.element(-3))
    assert_self_dual_with_lambda(result)


def test_t31_nontrivial_base_field():
    result = build_t31(p=3, t=2, l=1, b="(1,1)", c="(2,1)")
    assert result.code.n == 6
    assert_self_dual_with_lambda(result)


def test_t31_refusals():
    with pytest.raises(ConstructionError) as err:
        build_t31(p=4, t=1, l=1)
    assert err.value.hypothesis == "p_odd_prime"
    with pytest.raises(ConstructionError) as err:
        build_t31(p=3, t=1, l=1, b=0, c=1)
    assert err.value.hypothesis == "b_nonzero"
    with pytest.raises(ConstructionError) as err:
        build_t31(p=3, t=1, l=1, b=1, c=0)
    assert err.value.hypothesis == "c_nonzero"
    with pytest.raises(ConstructionError) as err:
        build_t31(p=5, t=1, l=2, b=1, c=1)  # splitting degree 30
    assert err.value.hypothesis == "splitting_degree_cap"


def test_t31_deterministic():
    a = build_t31(p=3, t=1, l=1, b=1, c=1)
    b = build_t31(p=3, t=1, l=1, b=1, c=1)
    assert a.code.to_spec() == b.code.to_spec()


# -- T33 -------------------------------------------------------------------------

def test_t33_p5_builds_self_dual():
    result = build_t33(p=5)
    code = result.code
    assert (code.n, code.k) == (10, 5)
    assert code.eta == code.ctx.element(-2)
    assert result.predicted_lambda == code.ctx.one()
    assert_self_dual_with_lambda(result)
    assert code.a == code.ctx.one()


def test_t33_multipliers_are_derivative_square_roots():
    result = build_t33(p=5)
    code = result.code
    p = 5
    for vi, ai in zip(code.v, code.alpha):
        assert vi == (ai ** (p - 1) + ai).inverse()
        assert vi * vi == recover_lambda(code) * vi * vi  # lambda = 1


def test_t33_refusals():
    with pytest.raises(ConstructionError) as err:
        build_t33(p=3)
    assert err.value.hypothesis == "p_prime_gt_3"
    with pytest.raises(ConstructionError) as err:
        build_t33(p=7)  # the gcd side condition fails for 7
    assert err.value.hypothesis == "gcd_m_prime_side_poly"
    with pytest.raises(ConstructionError) as err:
        build_t33(p=11)  # splitting field has order 11^38
    assert err.value.hypothesis == "field_size_ceiling"
    with pytest.raises(ConstructionError) as err:
        build_t33(p=5, s=2)
    assert err.value.hypothesis == "splitting_degree_mismatch"


# -- T35 -------------------------------------------------------------------------

def test_t35_small_instance():
    result = build_t35(q_prime=13, b=3, n=4)
    code = result.code
    assert (code.n, code.k) == (4, 2)
    assert result.predicted_lambda == code.ctx.one()
    assert_self_dual_with_lambda(result)


def test_t35_weights_equal_v_squared():
    result = build_t35(q_prime=5, b=1, n=6)
    for ui, vi in zip(result.code.u, result.code.v):
        assert vi * vi == ui


def test_t35_extension_base_field():
    result = build_t35(q_prime=9, b=1, n=4)
    assert result.base_field.order == 9
    assert_self_dual_with_lambda(result)


def test_t35_refusals():
    with pytest.raises(ConstructionError) as err:
        build_t35(q_prime=13, b=0, n=4)
    assert err.value.hypothesis == "b_nonzero"
    with pytest.raises(ConstructionError) as err:
        build_t35(q_prime=13, b=1, n=5)
    assert err.value.hypothesis == "n_even"
    with pytest.raises(ConstructionError) as err:
        build_t35(q_prime=3, b=1, n=6)  # 3 | 6
    assert err.value.hypothesis == "gcd_q_n"
    with pytest.raises(ConstructionError) as err:
        build_t35(q_prime=3, b=1, n=8)  # repeated root at b(1-n)/n
    assert err.value.hypothesis == "alpha_avoids_critical_root"
    with pytest.raises(ConstructionError) as err:
        build_t35(q_prime=49, b=1, n=6)  # giant splitting field
    assert err.value.hypothesis == "field_size_ceiling"


# -- T36 -------------------------------------------------------------------------

def test_t36_reference_mds_instance():
    result = build_t36(q=89, beta=1, n=10, j=0)
    code = result.code
    base = result.base_field
    assert (code.n, code.k) == (10, 5)
    expected_alpha = [embed(base, code.ctx, base.element(pow(64, i, 89)))
                      for i in range(1, 11)]
    assert list(code.alpha) == expected_alpha
    assert code.eta == code.ctx.element(2)
    assert classify(code).verdict == "MDS"
    # lambda = (n+1) * beta^(n+1) = 11
    assert result.predicted_lambda == code.ctx.element(11)
    assert_self_dual_with_lambda(result)


def test_t36_reference_nmds_instance():
    result = build_t36(q=61, beta=1, n=14, j=0)
    code = result.code
    cls = classify(code)
    assert cls.verdict == "NMDS"
    assert cls.witness is not None
    target = -code.eta.inverse()
    total = code.ctx.zero()
    for pos in (2, 5, 9, 11, 12, 13, 14):
        total = total + code.alpha[pos - 1]
    assert total == target
    assert_self_dual_with_lambda(result)


def test_t36_anchor_shift_relabels_roots():
    base_run = build_t36(q=61, beta=1, n=14, j=0)
    shifted = build_t36(q=61, beta=1, n=14, j=3)
    assert_self_dual_with_lambda(shifted)
    base_field = base_run.base_field
    gamma = base_field.element(16)
    # both alpha sets live in {beta * gamma^i}; the shifted set omits gamma^3
    all_points = {(base_field.one() * gamma ** i).coeffs for i in range(15)}
    set0 = {a.coeffs[:1] for a in base_run.code.alpha}
    set3 = {a.coeffs[:1] for a in shifted.code.alpha}
    assert set0 == {c[:1] for c in all_points} - {(gamma ** 0).coeffs[:1]}
    assert set3 == {c[:1] for c in all_points} - {(gamma ** 3).coeffs[:1]}
    # eta follows the anchor
    anchor = gamma ** 3
    assert shifted.code.eta == embed(base_field, shifted.code.ctx,
                                     base_field.element(2) / anchor)


def test_t36_beta_scaling():
    result = build_t36(q=13, beta=2, n=2, j=0)
    assert_self_dual_with_lambda(result)
    base = result.base_field
    assert result.predicted_lambda == embed(
        base, result.code.ctx, base.element(3) * base.element(2) ** 3)


def test_t36_prime_power_base():
    result = build_t36(q=27, beta=1, n=12, j=0)
    assert result.base_field.order == 27
    assert_self_dual_with_lambda(result)


def test_t36_refusals():
    with pytest.raises(ConstructionError) as err:
        build_t36(q=13, beta=1, n=10)
    assert err.value.hypothesis == "n_plus_1_divides_q_minus_1"
    assert "11" in err.value.detail and "12" in err.value.detail
    with pytest.raises(ConstructionError) as err:
        build_t36(q=13, beta=0, n=2)
    assert err.value.hypothesis == "beta_nonzero"
    with pytest.raises(ConstructionError) as err:
        build_t36(q=89, beta=1, n=9)
    assert err.value.hypothesis == "n_even"
    with pytest.raises(ConstructionError) as err:
        build_t36(q=89, beta=1, n=10, j=11)
    assert err.value.hypothesis == "j_range"


def test_t36_deterministic():
    a = build_t36(q=89, beta=1, n=10, j=0)
    b = build_t36(q=89, beta=1, n=10, j=0)
    assert a.code.to_spec() == b.code.to_spec()


# -- dispatch -----------------------------------------------------------------------

def test_build_dispatch_and_spec_dict():
    result = build("T36", q=89, beta=1, n=10, j=0)
    doc = result.spec_dict()
    assert doc["family"] == "T36" and doc["schema"] == 1
    assert doc["q"] == 89 and doc["n"] == 10
    with pytest.raises(ConstructionError) as err:
        build("T99")
    assert err.value.hypothesis == "unknown_family"


def test_provenance_block():
    result = build("T31", p=3, t=1, l=1, b=1, c=1)
    prov = result.provenance()
    assert prov["family"] == "T31"
    assert prov["conditions_checked"]
    assert prov["predicted_lambda"]
    assert prov["base_field"] == "3"
