import math

import pytest

from circulant_energy.asymptotics import (
    AsymptoticReport,
    InternalConsistencyError,
    asymptotic_report,
    ir_closed,
    ir_double_sum,
    ir_quadrature,
    lebesgue_constant,
    log_lower_bound,
    sign_change_points,
)
from circulant_energy.energy import energy
from circulant_energy.spectrum import DomainError, GraphSpec, partial_cosine_sum

PI = math.pi
I1 = 4 / PI
I2 = 3 * math.sqrt(3) / PI
I3 = (16 * math.sqrt(2) - 3 * math.sqrt(3)) / (3 * PI)

# mpmath (40 digits) adaptive quadrature of |u(r, t)| and |D_r(t)| on the sign intervals
MP_IR = {4: 1.9857591602416278177, 5: 2.0877910007664962038, 6: 2.1701084933807804817,
         7: 2.2385554954267445344, 8: 2.2973598276459244498}
MP_LEBESGUE = {1: 1.4359911241769174324, 2: 1.6421884352221211369, 4: 1.8800805991023553999,
               8: 2.1377308625481906515}


def test_sign_change_points_examples():
    assert sign_change_points(1) == pytest.approx([PI / 2], abs=1e-15)
    assert sign_change_points(2) == pytest.approx([PI / 3], abs=1e-15)
    assert sign_change_points(3) == pytest.approx([PI / 4, 2 * PI / 3, 3 * PI / 4], abs=1e-15)


def test_sign_change_points_are_zeros_and_alternate():
    for r in range(1, 65):
        pts = sign_change_points(r)
        assert len(pts) == 2 * ((r + 1) // 2) - 1  # for even r the zero at pi is excluded
        assert all(0 < p < PI for p in pts)
        assert pts == sorted(pts)
        for p in pts:
            assert abs(partial_cosine_sum(r, p)) <= 1e-9 * r
        edges = [0.0, *pts, PI]
        signs = [math.copysign(1.0, partial_cosine_sum(r, 0.5 * (a + b))) for a, b in zip(edges, edges[1:])]
        assert signs[0] == 1.0
        assert all(s1 == -s0 for s0, s1 in zip(signs, signs[1:])), r


@pytest.mark.parametrize("r, expected", [(1, I1), (2, I2), (3, I3)])
def test_exact_constants_all_routes(r, expected):
    assert ir_closed(r) == pytest.approx(expected, abs=1e-12)
    assert ir_double_sum(r) == pytest.approx(expected, abs=1e-12)
    assert ir_quadrature(r) == pytest.approx(expected, abs=1e-10)


@pytest.mark.parametrize("r", sorted(MP_IR))
def test_against_mpmath_quadrature(r):
    assert ir_closed(r) == pytest.approx(MP_IR[r], abs=1e-12)
    assert ir_quadrature(r) == pytest.approx(MP_IR[r], abs=1e-10)


@pytest.mark.parametrize("r, approx", [(4, 1.985), (5, 2.087), (6, 2.170)])
def test_approximate_constants(r, approx):
    assert abs(ir_closed(r) - approx) < 5e-3


def test_quadrature_node_count():
    with pytest.raises(ValueError):
        ir_quadrature(3, nodes_per_interval=8)
    # converged already at 16 nodes per interval for small r
    assert ir_quadrature(5, 16) == pytest.approx(ir_quadrature(5, 64), abs=1e-10)


def test_triple_agreement():
    for r in range(1, 65):
        q, d, c = ir_quadrature(r), ir_double_sum(r), ir_closed(r)
        assert abs(q - d) < 1e-8, r
        assert abs(d - c) < 1e-12, r


def test_threshold_crossing():
    assert all(ir_closed(r) < 2 for r in (1, 2, 3, 4))
    assert all(ir_closed(r) > 2 for r in range(5, 65))


def test_lebesgue_values():
    assert lebesgue_constant(1) == pytest.approx(1 / 3 + 2 * math.sqrt(3) / PI, abs=1e-12)
    for r, v in MP_LEBESGUE.items():
        assert lebesgue_constant(r) == pytest.approx(v, abs=1e-11)
    assert lebesgue_constant(8) > lebesgue_constant(4)


def test_lebesgue_increasing():
    values = [lebesgue_constant(r) for r in range(1, 65)]
    assert all(b > a for a, b in zip(values, values[1:]))


def test_sandwich_and_log_bound():
    for r in range(1, 65):
        ir, lr = ir_closed(r), lebesgue_constant(r)
        assert lr - 1 <= ir <= lr + 1
        assert ir > log_lower_bound(r) > 0
    assert log_lower_bound(1) == pytest.approx(4 * math.log(2) / PI**3)
    assert log_lower_bound(1) == pytest.approx(0.0894, abs=5e-5)


def test_report_examples():
    rep = asymptotic_report(4)
    assert rep.ir == pytest.approx(1.985, abs=5e-3) and rep.ir < 2
    rep = asymptotic_report(5)
    assert rep.ir == pytest.approx(2.087, abs=5e-3) and rep.ir > 2
    rep = asymptotic_report(1)
    assert rep.ir > rep.lower_bound_log
    lo, hi = rep.bound_interval
    assert lo <= 4 / PI <= hi


def test_report_detects_inconsistency():
    bad = AsymptoticReport(r=3, ir_quadrature=1.0, ir_double_sum=I3, ir_closed=I3,
                           lebesgue=lebesgue_constant(3), lower_bound_log=log_lower_bound(3))
    assert bad.violations()


def test_report_raises_on_inconsistency(monkeypatch):
    import circulant_energy.asymptotics as asym

    monkeypatch.setattr(asym, "ir_quadrature", lambda r, n=64: 0.0)
    with pytest.raises(InternalConsistencyError):
        asym.asymptotic_report(2)


@pytest.mark.parametrize("fn", [sign_change_points, ir_closed, ir_double_sum, ir_quadrature, lebesgue_constant])
def test_rejects_bad_r(fn):
    with pytest.raises(DomainError):
        fn(0)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_ratio_near_limit_at_large_n(r):
    N = 10**5
    assert abs(energy(GraphSpec(r, N)).ratio - ir_closed(r)) < 0.01
