"""The framed affine-D4 quiver: representations from points of H x V,
preprojective relations, King stability.

Dimension vector (1; 2; 1, 1, 1): a framing line, the central V, and three
leg lines.  From a point (a, beta, B, x) we set

    E0 = x
    D0 = (omega/4) * (x, -)      with (x, -)(v) = x1 v2 - x2 v1
    D_i = B_i(x, -)              (half-polarization of the form triple)
    E_i = a_i * iota(D_i)        with iota(a, b) = (-b, a)

The omega/4 coefficient is the unique one making the central relation equal
the first defining equation contracted at x (exactly); see equations.py.
"""

from __future__ import annotations

from dataclasses import dataclass

from .equations import omega
from .gitcore import PointHV
from .linalg import Mat2, Vec2
from .scalars import QI, Scalar


@dataclass(frozen=True)
class Covector:
    """A linear functional on V, stored as the coefficient pair (a, b)."""

    a: Scalar
    b: Scalar

    def __call__(self, v: Vec2) -> Scalar:
        return self.a * v.a + self.b * v.b

    def is_zero(self):
        return self.a.is_zero() and self.b.is_zero()

    def dual_vector(self) -> Vec2:
        """The fixed identification V^* (x) det V = V: (a, b) -> (-b, a)."""
        return Vec2(-self.b, self.a)


@dataclass(frozen=True)
class QuiverRep:
    """The eight linear maps of the framed quiver."""

    E0: Vec2
    D0: Covector
    D: tuple              # (D1, D2, D3) covectors V -> L_i
    E: tuple              # (E1, E2, E3) vectors L_i -> V


def form_contraction(triple, x: Vec2) -> Covector:
    """B(x, -) for the quadratic form triple (p, q, r)."""
    p, q, r = triple
    return Covector(p * x.a + (q * x.b) / 2, (q * x.a) / 2 + r * x.b)


def build_rep(p: PointHV) -> QuiverRep:
    """The representation attached to a point of H x V (defined everywhere)."""
    x = p.x
    om4 = omega(p) / 4
    D0 = Covector(-om4 * x.b, om4 * x.a)
    D = tuple(form_contraction(b, x) for b in p.B)
    E = tuple(Dc.dual_vector().scale(a) for a, Dc in zip(p.alpha, D))
    return QuiverRep(x, D0, D, E)


def preprojective_residual(rep: QuiverRep):
    """(leg residuals D_i E_i for i = 1, 2, 3; central 2x2 residual).

    The central residual is sum_i E_i D_i - E0 D0; it is trace-free for every
    representation built from a point of H x V, and vanishes exactly on Z x V.
    """
    legs = tuple(Dc(Ev) for Dc, Ev in zip(rep.D, rep.E))
    central = Mat2(QI.zero(), QI.zero(), QI.zero(), QI.zero())
    for Dc, Ev in zip(rep.D, rep.E):
        central = central + Mat2(Ev.a * Dc.a, Ev.a * Dc.b, Ev.b * Dc.a, Ev.b * Dc.b)
    central = central - Mat2(
        rep.E0.a * rep.D0.a, rep.E0.a * rep.D0.b,
        rep.E0.b * rep.D0.a, rep.E0.b * rep.D0.b,
    )
    return legs, central


def preprojective_holds(rep: QuiverRep) -> bool:
    legs, central = preprojective_residual(rep)
    return all(s.is_zero() for s in legs) and central.is_zero()


def king_stable(rep: QuiverRep) -> bool:
    """Stability = generated from the framing vertex: every D_i nonzero and
    V spanned by E0 together with the image of some E_i."""
    if any(Dc.is_zero() for Dc in rep.D):
        return False
    return any(not rep.E0.wedge(Ev).is_zero() for Ev in rep.E)


def central_quadratic(rep: QuiverRep, v: Vec2) -> Scalar:
    """v ^ (M v) for the central residual M: the quadratic form that matches
    the first equation's residual contracted at x.v (tested exactly)."""
    _, central = preprojective_residual(rep)
    mv = central * v
    return v.wedge(mv)
