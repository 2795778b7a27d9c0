"""Chart normalization, the quiver-side chart, the symbolic closure check."""

import random

import pytest

from d4vgit.charts import (
    ChartError, chart_closure_check, chart_equivalent, from_quiver_chart,
    normalize, normalize_rep, to_quiver_chart,
)
from d4vgit.gitcore import GroupElement, act
from d4vgit.linalg import Mat2
from d4vgit.mckay import base_point
from d4vgit.quiver import build_rep
from d4vgit.sampling import rand_chart_point, rand_nonzero_scalar, rand_z_point
from d4vgit.scalars import QI
from d4vgit.stability import semistable_theta


def test_already_normalized_gives_identity():
    p = rand_chart_point(random.Random(0))
    c = normalize(p, 1)
    assert c.normalizer.is_identity()
    assert c.validate()


def test_normalize_base_point():
    p = base_point(x=(1, 3))
    v = semistable_theta(p)
    assert v.is_stable
    c = normalize(p, v.witness_index + 1)
    assert c.validate()
    q = act(c.normalizer, p)
    i = c.index - 1
    assert q.x.a == QI.one() and q.x.b.is_zero()
    assert q.alpha[i] == QI.one()
    assert q.B[i][0] == QI.one() and q.B[i][1].is_zero()


def test_normalize_other_chart_indices():
    rng = random.Random(8)
    from d4vgit.quiver import build_rep, form_contraction
    done = 0
    for _ in range(10):
        p = rand_chart_point(rng)
        for idx in (2, 3):
            spanning = (p.alpha[idx - 1]
                        * form_contraction(p.B[idx - 1], p.x)(p.x))
            if spanning.is_zero():
                continue
            c = normalize(p, idx)
            assert c.validate()
            hat = to_quiver_chart(c)
            assert from_quiver_chart(hat) == c
            assert hat == normalize_rep(build_rep(p), idx)
            done += 1
    assert done >= 5


def test_normalize_all_witnessing_indices():
    rng = random.Random(1)
    for _ in range(15):
        p = rand_z_point(rng)
        v = semistable_theta(p)
        if not v.is_stable:
            continue
        c = normalize(p, v.witness_index + 1)
        assert c.validate()
        # 4r = omega in the written chart relations
        assert c.r * 4 == c.omega


def test_normalize_wrong_index_errors():
    # chart point with p2 = 0 (q2 nonzero keeps it stable): index 2 is not a
    # witnessing index, so normalize(p, 2) must refuse
    from fractions import Fraction
    from d4vgit.equations import residuals
    from d4vgit.gitcore import PointHV
    half = QI.scalar(Fraction(1, 2))
    p = PointHV.make(
        (1, 2, -1), 1,
        ((1, 0, -half), (0, -1, 0), (1, 0, half)),
        (1, 0))
    assert residuals(p).is_zero()
    v = semistable_theta(p)
    assert v.is_stable
    c1 = normalize(p, 1)
    assert c1.validate()
    with pytest.raises(ChartError):
        normalize(p, 2)


def test_not_in_chart_error():
    p = base_point(x=(0, 0))
    with pytest.raises(ChartError):
        normalize(p, 1)


def test_residual_torus_action_preserves_chart_class():
    rng = random.Random(3)
    for _ in range(15):
        p = rand_chart_point(rng)
        c1 = normalize(p, 1)
        h = GroupElement.make(
            (1, rand_nonzero_scalar(rng), rand_nonzero_scalar(rng)),
            Mat2.identity())
        c2 = normalize(act(h, p), 1)
        scales = chart_equivalent(c1, c2)
        assert scales is not None
        tj, tk = scales
        assert c2.alpha_j == tj.inverse() ** 2 * c1.alpha_j
        # torus invariants coincide
        assert c1.torus_invariants() == c2.torus_invariants()


def test_hat_roundtrip_exact():
    rng = random.Random(4)
    for _ in range(100):
        p = rand_chart_point(rng)
        c = normalize(p, 1)
        hat = to_quiver_chart(c)
        back = from_quiver_chart(hat)
        assert back == c
        assert to_quiver_chart(back) == hat


def test_hat_system_collapse():
    """Given the first hat relation and any bh, the derived qh values satisfy
    the middle relation and the omega relation collapses exactly."""
    rng = random.Random(5)
    for _ in range(40):
        a2 = rand_nonzero_scalar(rng)
        p2 = rand_nonzero_scalar(rng)
        p3 = rand_nonzero_scalar(rng)
        a3 = -(QI.one() + a2 * p2 * p2) / (p3 * p3)
        if a3.is_zero():
            continue
        bh = rand_nonzero_scalar(rng)
        q2 = bh * a3 * p3
        q3 = -(bh * a2 * p2)
        # middle central-vertex equation
        assert (a2 * p2 * q2 + a3 * p3 * q3).is_zero()
        # third equation collapses to omega-hat = bh^2 a2 a3
        wh = bh * bh * a2 * a3
        assert (a2 * q2 * q2 + a3 * q3 * q3 + wh).is_zero()


def test_quiver_side_normalization_matches():
    rng = random.Random(6)
    for _ in range(20):
        p = rand_z_point(rng)
        v = semistable_theta(p)
        if not v.is_stable:
            continue
        idx = v.witness_index + 1
        hat_geo = to_quiver_chart(normalize(p, idx))
        hat_rep = normalize_rep(build_rep(p), idx)
        assert hat_geo == hat_rep


def test_chart_compatibility_between_indices():
    """Points stable at two indices give hat data whose underlying normalized
    representations agree after re-normalization at the other index."""
    rng = random.Random(7)
    tested = 0
    for _ in range(60):
        p = rand_z_point(rng)
        v = semistable_theta(p)
        if not v.is_stable:
            continue
        from d4vgit.quiver import form_contraction
        witnesses = [i for i in range(3)
                     if not (p.alpha[i]
                             * form_contraction(p.B[i], p.x)(p.x)).is_zero()]
        if len(witnesses) < 2:
            continue
        tested += 1
        i1, i2 = witnesses[:2]
        rep = build_rep(p)
        hat1 = normalize_rep(rep, i1 + 1)
        hat2 = normalize_rep(rep, i2 + 1)
        geo1 = to_quiver_chart(normalize(p, i1 + 1))
        geo2 = to_quiver_chart(normalize(p, i2 + 1))
        assert hat1 == geo1 and hat2 == geo2
        if tested >= 5:
            break
    assert tested >= 1


class TestClosure:
    def test_full_sweep(self):
        report = chart_closure_check()
        assert len(report.components) == 24
        assert report.ok, report.failing()

    def test_b1_pairing_component_identically_zero(self):
        """The (1,1) entry of the second equation vanishes identically after
        substitution: 2 r1 = omega/2 in chart variables (no division needed)."""
        report = chart_closure_check()
        comp = {c.label: c for c in report.components}
        assert comp["E2[0,0]"].quotient == "0"
        assert comp["E2[0,0]"].remainder_zero

    def test_e2_diagonal_quotient_is_omega_related(self):
        report = chart_closure_check()
        comp = {c.label: c for c in report.components}
        # alpha2-pairing diagonal: quotient is -omega/2 in chart variables
        assert comp["E2[1,1]"].remainder_zero
        assert "a2*a3" in comp["E2[1,1]"].quotient.replace(" ", "")

    def test_deterministic(self):
        r1 = chart_closure_check()
        r2 = chart_closure_check()
        assert [(c.label, c.quotient, c.remainder_zero) for c in r1.components] \
            == [(c.label, c.quotient, c.remainder_zero) for c in r2.components]
