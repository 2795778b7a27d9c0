"""Stability oracles, destabilization certificates, cross-checks."""

import random

import pytest

from d4vgit.equations import ContractViolation, witness_E1_not_E2
from d4vgit.gitcore import MINUS_THETA, THETA, PointHV, act
from d4vgit.mckay import base_point
from d4vgit.quiver import build_rep, form_contraction, king_stable
from d4vgit.sampling import (
    engineered_unstable_points, rand_chart_point, rand_group_element,
    rand_z_point,
)
from d4vgit.scalars import QI
from d4vgit.stability import (
    infinite_stabilizer_detected, off_z_minus_theta_flags,
    semistable_minus_theta, semistable_theta, unstable_subset_certificates,
    verify_certificate,
)


class TestMinusTheta:
    def test_base_point_stable(self):
        v = semistable_minus_theta(base_point(x=(3, 1)))
        assert v.is_stable
        assert v.witness_value is not None and not v.witness_value.is_zero()

    def test_alpha_zero_certified(self):
        # a Z-point with a2 = 0
        rng = random.Random(0)
        found = [p for d, p in engineered_unstable_points(rng)
                 if d == "{a_j=a_k=0, p2=0}"]
        p = found[0]
        assert p.alpha[0].is_zero()
        v = semistable_minus_theta(p)
        assert not v.is_stable
        assert v.certificate.name.startswith("-lambda")
        assert verify_certificate(p, v.certificate, MINUS_THETA, v.adapting)

    def test_beta_zero_certified(self):
        rng = random.Random(1)
        found = [p for d, p in engineered_unstable_points(rng)
                 if d == "{p1=p2=p3=0}"]
        p = found[0]
        assert all(not a.is_zero() for a in p.alpha) and p.beta.is_zero()
        v = semistable_minus_theta(p)
        assert not v.is_stable and v.certificate.name == "-mu"
        assert verify_certificate(p, v.certificate, MINUS_THETA, v.adapting)

    def test_off_z_contract_violation(self):
        w = witness_E1_not_E2()
        with pytest.raises(ContractViolation):
            semistable_minus_theta(w)

    def test_off_z_strictly_semistable_flags(self):
        flags = off_z_minus_theta_flags(witness_E1_not_E2())
        assert flags["semi_invariant_nonvanishing"]
        assert flags["infinite_stabilizer_detected"]
        assert flags["strictly_semistable_behavior"]

    def test_infinite_stabilizer_not_detected_on_open_locus(self):
        assert not infinite_stabilizer_detected(base_point())


class TestTheta:
    def test_x_zero_unstable(self):
        p = base_point(x=(0, 0))
        v = semistable_theta(p)
        assert not v.is_stable and v.subset == "{x=0}"
        assert verify_certificate(p, v.certificate, THETA)

    def test_base_point_generic_x_stable(self):
        v = semistable_theta(base_point(x=(1, 3)))
        assert v.is_stable
        assert v.witness_index is not None

    def test_chart_point_stable(self):
        p = rand_chart_point(random.Random(2))
        v = semistable_theta(p)
        assert v.is_stable and v.witness_index == 0

    def test_matches_king_on_samples(self):
        rng = random.Random(3)
        for _ in range(60):
            p = rand_z_point(rng)
            assert semistable_theta(p).is_stable == king_stable(build_rep(p))

    def test_oracle_consistency_500_points(self):
        rng = random.Random(9)
        for _ in range(500):
            p = rand_z_point(rng)
            v = semistable_theta(p)
            assert v.is_stable == king_stable(build_rep(p))

    def test_engineered_families_unstable_with_certificates(self):
        rng = random.Random(4)
        for desc, p in engineered_unstable_points(rng):
            v = semistable_theta(p)
            assert not v.is_stable, desc
            assert verify_certificate(p, v.certificate, THETA, v.adapting), desc
            assert not king_stable(build_rep(p)), desc

    def test_translated_engineered_families(self):
        rng = random.Random(5)
        for desc, p in engineered_unstable_points(rng):
            h = rand_group_element(rng)
            q = act(h, p)
            v = semistable_theta(q)
            assert not v.is_stable, desc
            assert verify_certificate(q, v.certificate, THETA, v.adapting), desc

    def test_off_z_contract_violation(self):
        with pytest.raises(ContractViolation):
            semistable_theta(PointHV.make((1, 1, 1), 1,
                                          ((1, 0, 0), (0, 1, 0), (0, 0, 1)),
                                          (1, 0)))

    def test_verdict_g_invariant(self):
        rng = random.Random(6)
        for _ in range(20):
            p = rand_z_point(rng)
            h = rand_group_element(rng)
            assert (semistable_theta(p).is_stable
                    == semistable_theta(act(h, p)).is_stable)


class TestSubsetCertificates:
    def test_eleven_families_verified(self):
        certs = unstable_subset_certificates()
        assert len(certs) == 11
        descriptions = [c[0] for c in certs]
        assert "{a1=a2=a3=0}" in descriptions
        assert "{p1=p2=p3=0}" in descriptions

    def test_named_rows(self):
        certs = dict((c[0], c[2]) for c in unstable_subset_certificates())
        assert certs["{a1=a2=a3=0}"].name == "mu"
        assert certs["{p1=p2=p3=0}"].name == "2mu+sum lambda"
        assert certs["{a2=a3=0, p1=0}"].name == "mu+lambda1"


class TestZBranchIdentities:
    """The two constraint patterns the equations force at degenerate legs."""

    def test_b1_zero_forces_beta_products(self):
        rng = random.Random(7)
        count = 0
        for desc, p in engineered_unstable_points(rng):
            if not all(c.is_zero() for c in p.B[0]):
                continue
            count += 1
            a1, a2, a3 = p.alpha
            assert (p.beta * a2 * p.B[1][0]).is_zero()
            assert (p.beta * a3 * p.B[2][0]).is_zero()
        assert count >= 1

    def test_b1x_zero_with_r1_nonzero(self):
        rng = random.Random(8)
        x = (QI.one(), QI.zero())
        for desc, p in engineered_unstable_points(rng):
            if p.x.is_zero():
                continue
            c = form_contraction(p.B[0], p.x)
            if not c.is_zero() or p.B[0][2].is_zero():
                continue
            a1, a2, a3 = p.alpha
            p2, p3 = p.B[1][0], p.B[2][0]
            assert (a1 * p2).is_zero() and (a1 * p3).is_zero()
            assert (a2 * p2).is_zero() and (a3 * p3).is_zero()
        del x
