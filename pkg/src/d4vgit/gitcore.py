"""GIT data in fixed coordinates: points of H x V, the group, its action.

Coordinates.  A point of H x V is (a1, a2, a3, beta, B1, B2, B3, x) where
each B_i is a triple (p, q, r) of coefficients of the quadratic form
    Q_i(v) = p*v1^2 + q*v1*v2 + r*v2^2
on V in the fixed basis, the a_i and beta are scalars after trivializing all
line bundles, and x is a vector of V.  The group is (C*)^3 x GL_2 acting by

    a_i  ->  det(g) * t_i^-2 * a_i
    beta ->  t1 t2 t3 * det(g)^-2 * beta
    B_i  ->  t_i * (B_i o Sym^2(g)^-1)
    x    ->  g x

These formulas reproduce the reference torus weight table exactly (see
weight_table), which is the convention anchor for the whole package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import Mat2, Vec2
from .scalars import QI, Scalar, as_scalar, scalar_from_json, scalar_to_json


Triple = tuple  # (p, q, r) of Scalar


def _triple(t):
    p, q, r = t
    return (as_scalar(p), as_scalar(q), as_scalar(r))


@dataclass(frozen=True)
class PointHV:
    """A point (a1, a2, a3, beta, B, x) of H x V."""

    alpha: tuple          # (a1, a2, a3)
    beta: Scalar
    B: tuple              # (B1, B2, B3), each a (p, q, r) triple
    x: Vec2

    @staticmethod
    def make(alpha, beta, B, x=(0, 0)):
        alpha = tuple(as_scalar(a) for a in alpha)
        beta = as_scalar(beta)
        B = tuple(_triple(b) for b in B)
        if not isinstance(x, Vec2):
            x = Vec2(*x)
        return PointHV(alpha, beta, B, x)

    def with_x(self, x):
        if not isinstance(x, Vec2):
            x = Vec2(*x)
        return PointHV(self.alpha, self.beta, self.B, x)

    def coords(self):
        """The 13 H-coordinates in table order: a1 a2 a3 beta B1 B2 B3."""
        flat = list(self.alpha) + [self.beta]
        for b in self.B:
            flat.extend(b)
        return tuple(flat)


@dataclass(frozen=True)
class GroupElement:
    """(t1, t2, t3, g) with all t_i nonzero and g invertible."""

    t: tuple              # (t1, t2, t3)
    g: Mat2

    @staticmethod
    def make(t, g):
        t = tuple(as_scalar(s) for s in t)
        if any(s.is_zero() for s in t):
            raise ValueError("torus coordinates must be nonzero")
        if g.det().is_zero():
            raise ValueError("GL2 part must be invertible")
        return GroupElement(t, g)

    @staticmethod
    def identity():
        return GroupElement.make((1, 1, 1), Mat2.identity())

    def compose(self, other: "GroupElement") -> "GroupElement":
        return GroupElement.make(
            tuple(a * b for a, b in zip(self.t, other.t)), self.g * other.g
        )

    def inverse(self) -> "GroupElement":
        return GroupElement.make(tuple(s.inverse() for s in self.t), self.g.inverse())

    def is_identity(self):
        return (all(s == QI.one() for s in self.t)
                and self.g == Mat2.identity())


def transform_form(triple, g: Mat2):
    """Coefficients of Q o g for Q the quadratic form with the given triple."""
    p, q, r = triple
    a, b, c, d = g.a, g.b, g.c, g.d
    return (
        p * a * a + q * a * c + r * c * c,
        (p * a * b) * 2 + q * (a * d + b * c) + (r * c * d) * 2,
        p * b * b + q * b * d + r * d * d,
    )


def act(h: GroupElement, p: PointHV) -> PointHV:
    """The group action on H x V; act(h1, act(h2, p)) == act(h1*h2, p)."""
    det = h.g.det()
    det_inv = det.inverse()
    ginv = h.g.inverse()
    alpha = tuple(det * ti.inverse() ** 2 * a for ti, a in zip(h.t, p.alpha))
    beta = h.t[0] * h.t[1] * h.t[2] * det_inv * det_inv * p.beta
    B = tuple(
        tuple(ti * c for c in transform_form(b, ginv))
        for ti, b in zip(h.t, p.B)
    )
    x = h.g * p.x
    return PointHV(alpha, beta, B, x)


# -- characters and cocharacters ---------------------------------------------

@dataclass(frozen=True)
class Character:
    """(theta1, theta2, theta3, theta4): exponents of L1, L2, L3, det V."""

    theta: tuple

    def __iter__(self):
        return iter(self.theta)


THETA = Character((1, 1, 1, 1))
MINUS_THETA = Character((-1, -1, -1, -1))


@dataclass(frozen=True)
class Cocharacter:
    """(a1, a2, a3; w1, w2): torus exponents for the three lines and for the
    diagonal torus of GL(V) in a chosen basis."""

    a: tuple              # (a1, a2, a3)
    w: tuple              # (w1, w2)
    name: str = ""

    def group_element(self, s: Scalar) -> GroupElement:
        """The group element at parameter value s (s nonzero)."""
        t = tuple(s ** k for k in self.a)
        g = Mat2.diagonal(s ** self.w[0], s ** self.w[1])
        return GroupElement.make(t, g)

    def __add__(self, other):
        return Cocharacter(
            tuple(u + v for u, v in zip(self.a, other.a)),
            tuple(u + v for u, v in zip(self.w, other.w)),
        )

    def scaled(self, k: int):
        return Cocharacter(tuple(k * u for u in self.a), tuple(k * u for u in self.w))


LAMBDA = (
    Cocharacter((1, 0, 0), (0, 0), "lambda1"),
    Cocharacter((0, 1, 0), (0, 0), "lambda2"),
    Cocharacter((0, 0, 1), (0, 0), "lambda3"),
)
MU = Cocharacter((0, 0, 0), (0, 1), "mu")


def pair(chi: Character, lam: Cocharacter) -> int:
    """Pairing <chi, lam> = theta1 a1 + theta2 a2 + theta3 a3 + theta4 (w1+w2)."""
    t1, t2, t3, t4 = chi.theta
    return t1 * lam.a[0] + t2 * lam.a[1] + t3 * lam.a[2] + t4 * (lam.w[0] + lam.w[1])


# -- weights ------------------------------------------------------------------

def _log2_rational(x: Scalar) -> int:
    """x must be an exact power of 2 in Q; returns the exponent."""
    re, im = x.payload
    if im != 0:
        raise ValueError("not a rational power of 2")
    f = Fraction(re)
    n, d = f.numerator, f.denominator
    if n < 0:
        raise ValueError("not a positive power of 2")
    e = 0
    while d > 1:
        if d % 2:
            raise ValueError("not a power of 2")
        d //= 2
        e -= 1
    while n > 1:
        if n % 2:
            raise ValueError("not a power of 2")
        n //= 2
        e += 1
    return e


_GENERIC_POINT = None


def _generic_point():
    # all 13 coordinates distinct powers of 3, so weights separate cleanly
    global _GENERIC_POINT
    if _GENERIC_POINT is None:
        vals = [QI.scalar(3) ** k for k in range(1, 14)]
        _GENERIC_POINT = PointHV.make(
            vals[0:3], vals[3],
            (vals[4:7], vals[7:10], vals[10:13]),
            (1, 1),
        )
    return _GENERIC_POINT


def coordinate_weights(lam: Cocharacter):
    """Weights of the 13 H-coordinates under the 1-parameter subgroup lam,
    computed directly from the action formulas (evaluated at parameter 2)."""
    p = _generic_point()
    h = lam.group_element(QI.scalar(2))
    q = act(h, p)
    base = p.coords()
    moved = q.coords()
    return tuple(_log2_rational(m / b) for m, b in zip(moved, base))


def x_weights(lam: Cocharacter):
    """Weights of the two V-coordinates under lam (diagonal basis)."""
    return lam.w


WEIGHT_TABLE_ROWS = (
    ("lambda1", LAMBDA[0]),
    ("lambda2", LAMBDA[1]),
    ("lambda3", LAMBDA[2]),
    ("mu", MU),
    ("mu+lambda1", MU + LAMBDA[0]),
    ("mu+lambda1+lambda2", MU + LAMBDA[0] + LAMBDA[1]),
    ("2mu+lambda1+lambda2+lambda3", MU.scaled(2) + LAMBDA[0] + LAMBDA[1] + LAMBDA[2]),
)


def weight_table():
    """All seven reference rows of coordinate weights, keyed by row name.

    Each row is the 13-tuple of weights of (a1, a2, a3, beta, B1, B2, B3)
    with each B_i contributing its (p, q, r) weights in order.
    """
    return {name: coordinate_weights(lam) for name, lam in WEIGHT_TABLE_ROWS}


# -- JSON ---------------------------------------------------------------------

def point_to_json(p: PointHV) -> dict:
    return {
        "alpha": [scalar_to_json(a) for a in p.alpha],
        "beta": scalar_to_json(p.beta),
        "B": [[scalar_to_json(c) for c in b] for b in p.B],
        "x": [scalar_to_json(p.x.a), scalar_to_json(p.x.b)],
    }


def point_from_json(data: dict) -> PointHV:
    alpha = tuple(scalar_from_json(a) for a in data["alpha"])
    beta = scalar_from_json(data["beta"])
    B = tuple(tuple(scalar_from_json(c) for c in b) for b in data["B"])
    x = Vec2(scalar_from_json(data["x"][0]), scalar_from_json(data["x"][1]))
    return PointHV(alpha, beta, B, x)


def group_to_json(h: GroupElement) -> dict:
    return {
        "t": [scalar_to_json(s) for s in h.t],
        "g": [[scalar_to_json(h.g.a), scalar_to_json(h.g.b)],
              [scalar_to_json(h.g.c), scalar_to_json(h.g.d)]],
    }


def group_from_json(data: dict) -> GroupElement:
    t = tuple(scalar_from_json(s) for s in data["t"])
    g = data["g"]
    return GroupElement.make(
        t,
        Mat2(scalar_from_json(g[0][0]), scalar_from_json(g[0][1]),
             scalar_from_json(g[1][0]), scalar_from_json(g[1][1])),
    )
