"""Chart normalization on the plus-theta side and the chart isomorphism with
the quiver moduli.

A stable point with witness index i is moved to the normal form

    x = (1, 0),   a_i = 1,   B_i = (1, 0, r)

by a unique group element up to the residual torus GL(L_j) x GL(L_k).  In
this normal form membership in Z collapses to one relation: with
omega = a_j a_k beta^2 the coordinates satisfy

    4 r = omega,   r_j = -r p_j,   r_k = -r p_k,
    q_j = beta a_k p_k,   q_k = -beta a_j p_j,
    1 + a_j p_j^2 + a_k p_k^2 = 0,

and chart_closure_check verifies symbolically that these substitutions
reduce every one of the 24 residual components of the defining equations to
a multiple of N = 1 + a_j p_j^2 + a_k p_k^2.

The quiver-side chart fixes E0 = (1,0), D_i = (1,0), E_i = (0,1); writing
D_m = (ph_m, qh_m) and E_m = ah_m (-qh_m, ph_m) for the other two legs and
D0 = (0, wh) gives hat coordinates related to the chart coordinates by

    ah = a,  ph = p,  qh = q/2,  bh = beta/2,  wh = omega/4 = bh^2 ah_j ah_k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .equations import E1_LABELS, E2_LABELS, E3_LABELS, residual_entries
from .gitcore import GroupElement, PointHV, act
from .linalg import Mat2, Vec2
from .poly import Poly
from .quiver import QuiverRep, form_contraction
from .scalars import QI, Scalar
from .stability import semistable_theta


class ChartError(Exception):
    pass


def _cyclic(i):
    """0-based successor pair of a 0-based chart index."""
    return (i + 1) % 3, (i + 2) % 3


@dataclass(frozen=True)
class ChartPoint:
    index: int                      # 1, 2 or 3
    alpha_j: Scalar
    alpha_k: Scalar
    beta: Scalar
    p_j: Scalar
    q_j: Scalar
    p_k: Scalar
    q_k: Scalar
    r: Scalar
    r_j: Scalar
    r_k: Scalar
    normalizer: Optional[GroupElement] = field(default=None, compare=False)

    @property
    def omega(self):
        return self.alpha_j * self.alpha_k * self.beta * self.beta

    def validate(self):
        om = self.omega
        checks = (
            ("4r = omega", self.r * 4 == om),
            ("r_j = -r p_j", self.r_j == -self.r * self.p_j),
            ("r_k = -r p_k", self.r_k == -self.r * self.p_k),
            ("q_j = beta a_k p_k", self.q_j == self.beta * self.alpha_k * self.p_k),
            ("q_k = -beta a_j p_j", self.q_k == -self.beta * self.alpha_j * self.p_j),
            ("1 + a_j p_j^2 + a_k p_k^2 = 0",
             (QI.one() + self.alpha_j * self.p_j ** 2
              + self.alpha_k * self.p_k ** 2).is_zero()),
            ("(p_j, q_j) != 0", not (self.p_j.is_zero() and self.q_j.is_zero())),
            ("(p_k, q_k) != 0", not (self.p_k.is_zero() and self.q_k.is_zero())),
        )
        for name, ok in checks:
            if not ok:
                raise ChartError("chart invariant failed: %s" % name)
        return True

    def to_point(self) -> PointHV:
        """The normalized PointHV this chart point describes."""
        i = self.index - 1
        j, k = _cyclic(i)
        alpha = [None, None, None]
        B = [None, None, None]
        alpha[i] = QI.one()
        alpha[j] = self.alpha_j
        alpha[k] = self.alpha_k
        B[i] = (QI.one(), QI.zero(), self.r)
        B[j] = (self.p_j, self.q_j, self.r_j)
        B[k] = (self.p_k, self.q_k, self.r_k)
        return PointHV.make(alpha, self.beta, B, (1, 0))

    def torus_invariants(self):
        """Functions invariant under the residual GL(L_j) x GL(L_k) torus."""
        return (self.alpha_j * self.p_j ** 2,
                self.alpha_k * self.p_k ** 2,
                self.omega)


def normalize(p: PointHV, index: int) -> ChartPoint:
    """Normal form of a theta-stable Z-point in the chart of the given index.

    Preconditions: p lies on Z and is stable with witnessing index `index`
    (a_i B_i(x,x) != 0).  The normalizing element is unique given the gauge
    x = (1,0), a_i = 1, B_i = (1,0,r); all steps are rational, so no field
    extension is ever needed here.
    """
    i = index - 1
    verdict = semistable_theta(p)
    if not verdict.is_stable:
        raise ChartError("point is not stable; cannot normalize")
    spanning = p.alpha[i] * form_contraction(p.B[i], p.x)(p.x)
    if spanning.is_zero():
        raise ChartError("index %d is not a witnessing index for this point"
                         % index)
    # step 1: move x to e1
    x = p.x
    if not x.a.is_zero():
        g0 = Mat2(x.a, QI.zero(), x.b, QI.one()).inverse()
    else:
        g0 = Mat2(QI.zero(), QI.one(), x.b, QI.zero()).inverse()
    h0 = GroupElement.make((1, 1, 1), g0)
    q0 = act(h0, p)
    # step 2: shear and scale, fixing e1
    pi, qi, ri = q0.B[i]
    ai = q0.alpha[i]
    b = qi / (pi * 2)
    d = (ai * pi * pi).inverse()
    g1 = Mat2(QI.one(), b, QI.zero(), d)
    t = [QI.one(), QI.one(), QI.one()]
    t[i] = pi.inverse()
    h1 = GroupElement.make(tuple(t), g1)
    h = h1.compose(h0)
    q = act(h, p)
    j, k = _cyclic(i)
    chart = ChartPoint(
        index=index,
        alpha_j=q.alpha[j], alpha_k=q.alpha[k], beta=q.beta,
        p_j=q.B[j][0], q_j=q.B[j][1], p_k=q.B[k][0], q_k=q.B[k][1],
        r=q.B[i][2], r_j=q.B[j][2], r_k=q.B[k][2],
        normalizer=h,
    )
    chart.validate()
    return chart


def chart_equivalent(c1: ChartPoint, c2: ChartPoint):
    """The residual torus element (t_j, t_k) carrying c1 to c2, or None."""
    if c1.index != c2.index:
        return None

    def leg_scale(p1, q1, p2, q2):
        if not p1.is_zero():
            return p2 / p1
        if not q1.is_zero():
            return q2 / q1
        return None

    tj = leg_scale(c1.p_j, c1.q_j, c2.p_j, c2.q_j)
    tk = leg_scale(c1.p_k, c1.q_k, c2.p_k, c2.q_k)
    if tj is None or tk is None or tj.is_zero() or tk.is_zero():
        return None
    ok = (
        c2.alpha_j == tj.inverse() ** 2 * c1.alpha_j
        and c2.alpha_k == tk.inverse() ** 2 * c1.alpha_k
        and c2.beta == tj * tk * c1.beta
        and c2.p_j == tj * c1.p_j and c2.q_j == tj * c1.q_j
        and c2.r_j == tj * c1.r_j
        and c2.p_k == tk * c1.p_k and c2.q_k == tk * c1.q_k
        and c2.r_k == tk * c1.r_k
        and c2.r == c1.r
    )
    return (tj, tk) if ok else None


# -- quiver-side chart ---------------------------------------------------------


@dataclass(frozen=True)
class HatChart:
    """Normalized quiver-side chart data."""

    index: int
    alpha_j: Scalar
    alpha_k: Scalar
    beta: Scalar            # bh
    p_j: Scalar
    q_j: Scalar
    p_k: Scalar
    q_k: Scalar

    @property
    def omega(self):
        return self.beta * self.beta * self.alpha_j * self.alpha_k

    def validate(self):
        one = QI.one()
        checks = (
            ("ah_j ph_j^2 + ah_k ph_k^2 + 1 = 0",
             (self.alpha_j * self.p_j ** 2 + self.alpha_k * self.p_k ** 2
              + one).is_zero()),
            ("ah_j ph_j qh_j + ah_k ph_k qh_k = 0",
             (self.alpha_j * self.p_j * self.q_j
              + self.alpha_k * self.p_k * self.q_k).is_zero()),
            ("ah_j qh_j^2 + ah_k qh_k^2 + wh = 0",
             (self.alpha_j * self.q_j ** 2 + self.alpha_k * self.q_k ** 2
              + self.omega).is_zero()),
            ("qh_j = bh ah_k ph_k", self.q_j == self.beta * self.alpha_k * self.p_k),
            ("qh_k = -bh ah_j ph_j", self.q_k == -self.beta * self.alpha_j * self.p_j),
        )
        for name, ok in checks:
            if not ok:
                raise ChartError("hat invariant failed: %s" % name)
        return True


def to_quiver_chart(c: ChartPoint) -> HatChart:
    c.validate()
    hat = HatChart(
        index=c.index,
        alpha_j=c.alpha_j, alpha_k=c.alpha_k,
        beta=c.beta / 2,
        p_j=c.p_j, q_j=c.q_j / 2,
        p_k=c.p_k, q_k=c.q_k / 2,
    )
    hat.validate()
    return hat


def from_quiver_chart(hat: HatChart) -> ChartPoint:
    hat.validate()
    r = hat.omega                     # r = omega/4 and omega = 4*omega_hat
    c = ChartPoint(
        index=hat.index,
        alpha_j=hat.alpha_j, alpha_k=hat.alpha_k,
        beta=hat.beta * 2,
        p_j=hat.p_j, q_j=hat.q_j * 2,
        p_k=hat.p_k, q_k=hat.q_k * 2,
        r=r, r_j=-r * hat.p_j, r_k=-r * hat.p_k,
    )
    c.validate()
    return c


def normalize_rep(rep: QuiverRep, index: int):
    """Quiver-side normalization E0 = (1,0), D_i = (1,0), E_i = (0,1).

    Requires the rep to be generated through index i (D_i(E0) != 0 and
    E0, E_i independent) and to satisfy the leg relations.  Returns a
    HatChart; the transport is unique modulo the two leg scalings.
    """
    i = index - 1
    j, k = _cyclic(i)
    u, w = rep.E0, rep.E[i]
    M = Mat2(u.a, w.a, u.b, w.b)
    if M.det().is_zero():
        raise ChartError("E0 and E_%d do not span V" % index)
    du = rep.D[i](u)
    if du.is_zero():
        raise ChartError("D_%d(E0) = 0; rep not in chart %d" % (index, index))
    if not rep.D[i](w).is_zero():
        raise ChartError("leg relation D_%d E_%d != 0" % (index, index))
    ti = du.inverse()
    ghat = Mat2.diagonal(QI.one(), ti) * M.inverse()
    ginv = ghat.inverse()

    def move_cov(cov):
        return (cov(Vec2(ginv.a, ginv.c)), cov(Vec2(ginv.b, ginv.d)))

    d0 = move_cov(rep.D0)
    if not d0[0].is_zero():
        raise ChartError("framing relation D0 E0 != 0")
    hats = {}
    for m in (j, k):
        dm = move_cov(rep.D[m])
        em = ghat * rep.E[m]
        # E_m = ah_m * (-qh_m, ph_m)
        ph, qh = dm
        if not ph.is_zero():
            ah = em.b / ph
        elif not qh.is_zero():
            ah = -em.a / qh
        else:
            raise ChartError("leg %d vanishes; rep not stable" % (m + 1))
        if not (em.a == -ah * qh and em.b == ah * ph):
            raise ChartError("leg %d is not of the dual form" % (m + 1))
        hats[m] = (ah, ph, qh)
    hat = HatChart(
        index=index,
        alpha_j=hats[j][0], alpha_k=hats[k][0],
        beta=_solve_beta_hat(hats[j], hats[k]),
        p_j=hats[j][1], q_j=hats[j][2],
        p_k=hats[k][1], q_k=hats[k][2],
    )
    hat.validate()
    if d0[1] != hat.omega:
        raise ChartError("framing map disagrees with the collapsed relation")
    return hat


def _solve_beta_hat(leg_j, leg_k):
    """bh with (qh_j, qh_k) = bh (ah_k ph_k, -ah_j ph_j)."""
    ah_j, ph_j, qh_j = leg_j
    ah_k, ph_k, qh_k = leg_k
    if not (ah_k * ph_k).is_zero():
        return qh_j / (ah_k * ph_k)
    if not (ah_j * ph_j).is_zero():
        return -qh_k / (ah_j * ph_j)
    raise ChartError("central relation degenerate: both ah ph vanish")


# -- symbolic closure ----------------------------------------------------------


CHART_VARIABLES = ("a2", "a3", "b", "p2", "p3", "q2", "q3", "r1", "r2", "r3")


@dataclass(frozen=True)
class ClosureComponent:
    label: str
    quotient: str
    remainder_zero: bool


@dataclass(frozen=True)
class ClosureReport:
    components: tuple

    @property
    def ok(self):
        return all(c.remainder_zero for c in self.components)

    def failing(self):
        return [c.label for c in self.components if not c.remainder_zero]


def chart_closure_check() -> ClosureReport:
    """Verify symbolically that the chart relations imply every remaining
    component of the three defining equations.

    Each of the 24 residual components, after substituting
    r1 = omega/4, r2 = -r1 p2, r3 = -r1 p3, q2 = b a3 p3, q3 = -b a2 p2,
    must reduce to a polynomial multiple of N = 1 + a2 p2^2 + a3 p3^2.
    Deterministic and exact; no randomness involved.
    """
    V = CHART_VARIABLES
    gen = Poly.ring(V)
    one = Poly.constant(1, V)
    alpha = (one, gen["a2"], gen["a3"])
    beta = gen["b"]
    B = ((one, Poly.constant(0, V), gen["r1"]),
         (gen["p2"], gen["q2"], gen["r2"]),
         (gen["p3"], gen["q3"], gen["r3"]))
    e1, e2, e3 = residual_entries(alpha, beta, B)

    omega = gen["a2"] * gen["a3"] * beta * beta
    r1 = omega / 4
    subst = {
        "r1": r1,
        "r2": -(r1 * gen["p2"]),
        "r3": -(r1 * gen["p3"]),
        "q2": beta * gen["a3"] * gen["p3"],
        "q3": -(beta * gen["a2"] * gen["p2"]),
    }
    N = one + gen["a2"] * gen["p2"] ** 2 + gen["a3"] * gen["p3"] ** 2

    components = []
    for labels, entries in ((E1_LABELS, e1), (E2_LABELS, e2), (E3_LABELS, e3)):
        for label, entry in zip(labels, entries):
            reduced = entry.substitute(subst)
            quotient, remainder = reduced.divide_by(N)
            components.append(ClosureComponent(
                label=label,
                quotient=str(quotient),
                remainder_zero=remainder.is_zero(),
            ))
    return ClosureReport(tuple(components))
