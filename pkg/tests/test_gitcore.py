"""Group action conventions, the weight table anchor, pairings, JSON I/O."""

import json
import random

from d4vgit.gitcore import (
    LAMBDA, MU, THETA, MINUS_THETA, Cocharacter, GroupElement,
    act, coordinate_weights, group_from_json, group_to_json, pair,
    point_from_json, point_to_json, weight_table,
)
from d4vgit.linalg import Mat2
from d4vgit.sampling import rand_group_element, rand_point_hv
from d4vgit.scalars import QI
from d4vgit.suites import REFERENCE_WEIGHT_TABLE


def test_identity_acts_trivially():
    rng = random.Random(0)
    p = rand_point_hv(rng)
    q = act(GroupElement.identity(), p)
    assert q.alpha == p.alpha and q.beta == p.beta and q.B == p.B and q.x == p.x


def test_lambda1_action():
    rng = random.Random(1)
    p = rand_point_hv(rng)
    t = QI.scalar(3)
    h = GroupElement.make((t, 1, 1), Mat2.identity())
    q = act(h, p)
    tinv2 = t.inverse() ** 2
    assert q.alpha[0] == tinv2 * p.alpha[0]
    assert q.alpha[1] == p.alpha[1] and q.alpha[2] == p.alpha[2]
    assert q.beta == t * p.beta
    assert q.B[0] == tuple(t * c for c in p.B[0])
    assert q.B[1] == p.B[1] and q.B[2] == p.B[2]


def test_mu_action():
    rng = random.Random(2)
    p = rand_point_hv(rng)
    t = QI.scalar(2)
    h = GroupElement.make((1, 1, 1), Mat2.diagonal(QI.one(), t))
    q = act(h, p)
    for i in range(3):
        assert q.alpha[i] == t * p.alpha[i]
    assert q.beta == t.inverse() ** 2 * p.beta
    for i in range(3):
        pi, qi, ri = p.B[i]
        assert q.B[i] == (pi, qi / t, ri / (t * t))


def test_group_law_on_action():
    rng = random.Random(3)
    for _ in range(100):
        h1 = rand_group_element(rng)
        h2 = rand_group_element(rng)
        p = rand_point_hv(rng)
        lhs = act(h1, act(h2, p))
        rhs = act(h1.compose(h2), p)
        assert lhs.alpha == rhs.alpha and lhs.beta == rhs.beta
        assert lhs.B == rhs.B and lhs.x == rhs.x


def test_inverse_composition():
    rng = random.Random(4)
    for _ in range(20):
        h = rand_group_element(rng)
        assert h.compose(h.inverse()).is_identity()


def test_weight_table_matches_reference():
    assert weight_table() == REFERENCE_WEIGHT_TABLE


def test_weight_table_primitive_rows_verbatim():
    # the four generating rows of the reference torus table
    table = weight_table()
    assert table["lambda1"] == (-2, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0)
    assert table["lambda2"] == (0, -2, 0, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0)
    assert table["lambda3"] == (0, 0, -2, 1, 0, 0, 0, 0, 0, 0, 1, 1, 1)
    assert table["mu"] == (1, 1, 1, -2, 0, -1, -2, 0, -1, -2, 0, -1, -2)
    assert table["2mu+lambda1+lambda2+lambda3"] == (
        0, 0, 0, -1, 1, -1, -3, 1, -1, -3, 1, -1, -3)


def test_weight_table_linearity():
    row_mu = coordinate_weights(MU)
    row_l1 = coordinate_weights(LAMBDA[0])
    row_sum = coordinate_weights(MU + LAMBDA[0])
    assert row_sum == tuple(a + b for a, b in zip(row_mu, row_l1))


def test_pairings():
    assert pair(THETA, LAMBDA[0]) == 1
    assert pair(THETA, MU) == 1
    assert pair(MINUS_THETA, LAMBDA[0]) == -1
    assert pair(THETA, Cocharacter((1, 1, 1), (1, 1))) == 5


def test_point_json_roundtrip_bit_exact():
    rng = random.Random(5)
    for _ in range(10):
        p = rand_point_hv(rng)
        blob = json.dumps(point_to_json(p), sort_keys=True)
        q = point_from_json(json.loads(blob))
        assert q.alpha == p.alpha and q.beta == p.beta
        assert q.B == p.B and q.x == p.x
        assert json.dumps(point_to_json(q), sort_keys=True) == blob


def test_group_json_roundtrip():
    rng = random.Random(6)
    h = rand_group_element(rng)
    blob = group_to_json(h)
    h2 = group_from_json(blob)
    assert h2.t == h.t and h2.g == h.g
