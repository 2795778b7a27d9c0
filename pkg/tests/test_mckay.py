"""The base point, its quaternion stabilizer, and orbit connection."""

import random

import pytest

from d4vgit.equations import ContractViolation, det_b, residuals, in_Zo
from d4vgit.gitcore import PointHV, act
from d4vgit.linalg import Mat2
from d4vgit.mckay import (
    base_point, canonicalize, connect, point_field, quaternion_rep, stabilizer,
)
from d4vgit.sampling import rand_group_element
from d4vgit.scalars import QI, ExtensionLimitError, adjoin_sqrt


class TestBasePoint:
    def test_residuals_zero(self):
        assert residuals(base_point()).is_zero()

    def test_open_locus_and_determinant(self):
        b = base_point()
        assert in_Zo(b)
        a1, a2, a3 = b.alpha
        assert det_b(b) * 2 == b.beta ** 3 * a1 * a2 * a3

    def test_exact_coordinates(self):
        b = base_point()
        assert b.alpha == (QI.scalar(-2), QI.scalar(2), QI.scalar(-2))
        assert b.beta == QI.one()
        assert b.B == ((QI.zero(), QI.scalar(2), QI.zero()),
                       (QI.one(), QI.zero(), QI.one()),
                       (QI.one(), QI.zero(), QI.scalar(-1)))

    def test_quaternion_rep_fixes_form_lines(self):
        """Each group element of the quaternion representation scales each
        form line: Sym^2 of its GL2 part is diagonal in the B-adapted basis."""
        b = base_point()
        for name, h in quaternion_rep():
            q = act(h, b)
            assert q.alpha == b.alpha and q.beta == b.beta and q.B == b.B, name

    def test_quaternion_relations(self):
        elems = dict(quaternion_rep())
        i, j, k = elems["i"], elems["j"], elems["k"]
        minus_one = elems["-1"]
        assert i.compose(i).g == minus_one.g
        assert j.compose(j).g == minus_one.g
        assert i.compose(j).g == k.g
        assert j.compose(i).g == k.g.scale(QI.scalar(-1))


class TestStabilizer:
    def test_order_eight_quaternion(self):
        stab = stabilizer(base_point())
        assert stab.order() == 8
        assert stab.is_quaternion()
        profile = stab.order_profile()
        assert profile == {1: 1, 2: 1, 4: 6}

    def test_multiplication_table_closure(self):
        stab = stabilizer(base_point())
        table = stab.multiplication_table()
        assert all(entry is not None for row in table for entry in row)
        assert stab.verify()

    def test_relaxed_order_sixteen(self):
        relaxed = stabilizer(base_point(), fix_beta=False)
        assert relaxed.order() == 16
        assert not relaxed.is_abelian()

    def test_double_cover_signature(self):
        """Every stabilizer element squares into the center {+-identity}."""
        stab = stabilizer(base_point())
        center = (Mat2.identity(), Mat2.identity().scale(QI.scalar(-1)))
        for h in stab.elements:
            assert h.g * h.g in center

    def test_conjugate_stabilizer(self):
        rng = random.Random(0)
        b = base_point()
        h = rand_group_element(rng)
        moved = act(h, b)
        stab = stabilizer(moved)
        assert stab.order() == 8 and stab.is_quaternion()
        # element-wise conjugation of the base stabilizer
        base_stab = stabilizer(b)
        for s in base_stab.elements:
            conj = h.compose(s).compose(h.inverse())
            assert stab.index_of(conj) is not None

    def test_contract_violation_off_open_locus(self):
        p = PointHV.make((0, 0, 0), 0, ((0, 0, 0),) * 3, (0, 0))
        with pytest.raises(ContractViolation):
            stabilizer(p)


class TestConnect:
    def test_roundtrip_orbit(self):
        rng = random.Random(1)
        b = base_point()
        for _ in range(5):
            h = rand_group_element(rng)
            q = act(h, b)
            found = connect(b, q)
            assert found is not None
            moved = act(found, b)
            assert (moved.alpha == q.alpha and moved.beta == q.beta
                    and moved.B == q.B)

    def test_self_connect_is_stabilizer_element(self):
        b = base_point()
        h = connect(b, b)
        assert h is not None
        assert stabilizer(b).index_of(h) is not None

    def test_connect_two_independent_samples(self):
        rng = random.Random(2)
        b = base_point()
        p = act(rand_group_element(rng), b)
        q = act(rand_group_element(rng), b)
        found = connect(p, q)
        assert found is not None
        moved = act(found, p)
        assert (moved.alpha == q.alpha and moved.beta == q.beta
                and moved.B == q.B)

    def test_canonicalize_transports_to_base(self):
        rng = random.Random(3)
        b = base_point()
        p = act(rand_group_element(rng), b)
        canon = canonicalize(p)
        moved = act(canon.transport, p)
        assert moved.alpha == b.alpha and moved.beta == b.beta and moved.B == b.B

    def test_depth_exhaustion_reports_none(self):
        rng = random.Random(4)
        b = base_point()
        p = act(rand_group_element(rng), b)
        # depth cap zero: the square-root adjunctions are forbidden, so the
        # canonicalization must give up rather than claim non-existence
        try:
            result = connect(b, p, max_depth=0)
        except ExtensionLimitError:
            result = None
        if result is not None:
            moved = act(result, b)
            assert moved.B == p.B


def test_point_field_tracks_towers():
    b = base_point()
    assert point_field(b).is_base
    field, s = adjoin_sqrt(QI, 2)
    lifted = PointHV.make([field.lift(a) * s * s for a in b.alpha],
                          b.beta, b.B, (0, 0))
    assert point_field(lifted).depth == 1
