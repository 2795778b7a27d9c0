"""The defining equations of the variety Z and their residuals.

A point (a1, a2, a3, beta, B, x) lies on Z x V iff all stored residual
entries vanish:

  e1 (6 entries)  the symmetric form  sum_i a_i <B_i, .><B_i, .>  minus
                  (omega/2) J on Sym^2 V,
  e2 (9 entries)  a_j * j_pairing(B_i, B_j) - (omega/2) delta_ij,
  e3 (9 entries)  wedge(B_j, B_k) - beta a_i (r_i, -q_i/2, p_i)  cyclically,

with omega = a1 a2 a3 beta^2.  The residual code is written over generic
ring elements so the chart module can evaluate the same formulas on
polynomials.

Convention anchors (all exactly verified by the test suite): the pairing
j_pairing(B1, B1) = 2 r1 for B1 = (1, 0, r1); the wedge values
B1 ^ B2 = (-r1 q2, r1 p2 - r2, q2) = beta a3 (r3, -q3/2, p3) at chart
points; and on the invertible locus 2 det B = beta^3 a1 a2 a3.  (These pins
force the remaining normalizations: r = omega/4 in chart coordinates and
the omega/4 coefficient in the quiver map.)
"""

from __future__ import annotations

from dataclasses import dataclass

from .gitcore import PointHV
from .linalg import Mat3
from .scalars import QI, Scalar


class ContractViolation(Exception):
    """An operation was called outside its stated precondition."""


def omega(p: PointHV) -> Scalar:
    """omega = a1 a2 a3 beta^2 (transforms as a section of (det V)^-1)."""
    a1, a2, a3 = p.alpha
    return a1 * a2 * a3 * p.beta * p.beta


def j_pairing(u, v):
    """The pairing on quadratic-form triples: pu*rv + ru*pv - qu*qv/2.

    Normalized so that j_pairing((1,0,r), (1,0,r)) = 2r; this is the
    polarized discriminant and is equivariant for the form action.
    """
    pu, qu, ru = u
    pv, qv, rv = v
    return pu * rv + ru * pv - (qu * qv) / 2


def wedge(u, v):
    """Coordinates of u ^ v in Sym^2 V: the signed 2x2 minors
    (m_qr, -m_pr, m_pq) of the two coefficient triples."""
    pu, qu, ru = u
    pv, qv, rv = v
    return (qu * rv - ru * qv, -(pu * rv - ru * pv), pu * qv - qu * pv)


_CYCLIC = ((0, 1, 2), (1, 2, 0), (2, 0, 1))


def residual_entries(alpha, beta, B):
    """(e1, e2, e3) entry lists over any commutative ring with halving.

    e1 is the 6 upper-triangle entries (m <= n) of the symmetric form on
    Sym^2 V; e2 and e3 are row-major 3x3.
    """
    om = alpha[0] * alpha[1] * alpha[2] * beta * beta
    # functional vectors (p, q/2, r) and the invariant pairing on Sym^2 V
    btil = [(b[0], b[1] / 2, b[2]) for b in B]
    j_gram = ((0, 0, 1), (0, -1, 0), (1, 0, 0))   # entry (1,1) carries 1/2

    e1 = []
    for m in range(3):
        for n in range(m, 3):
            s = alpha[0] * btil[0][m] * btil[0][n]
            s = s + alpha[1] * btil[1][m] * btil[1][n]
            s = s + alpha[2] * btil[2][m] * btil[2][n]
            gram = j_gram[m][n]
            if gram == 1:
                s = s - om / 2
            elif gram == -1:
                s = s + om / 4
            e1.append(s)

    e2 = []
    for i in range(3):
        for j in range(3):
            s = alpha[j] * j_pairing(B[i], B[j])
            if i == j:
                s = s - om / 2
            e2.append(s)

    e3 = []
    for i, j, k in _CYCLIC:
        w = wedge(B[j], B[k])
        pi, qi, ri = B[i]
        rhs = (beta * alpha[i] * ri,
               -(beta * alpha[i] * qi) / 2,
               beta * alpha[i] * pi)
        e3.extend(w[c] - rhs[c] for c in range(3))

    return e1, e2, e3


E1_LABELS = tuple("E1[%d,%d]" % (m, n) for m in range(3) for n in range(m, 3))
E2_LABELS = tuple("E2[%d,%d]" % (i, j) for i in range(3) for j in range(3))
E3_LABELS = tuple("E3[%d].%s" % (i, c) for i in range(3) for c in ("p", "q", "r"))


@dataclass(frozen=True)
class EquationResidual:
    e1: tuple
    e2: tuple
    e3: tuple

    def is_zero(self):
        return self.e1_zero() and self.e2_zero() and self.e3_zero()

    def e1_zero(self):
        return all(x.is_zero() for x in self.e1)

    def e2_zero(self):
        return all(x.is_zero() for x in self.e2)

    def e3_zero(self):
        return all(x.is_zero() for x in self.e3)

    def nonzero_components(self):
        out = []
        for labels, entries in ((E1_LABELS, self.e1), (E2_LABELS, self.e2),
                                (E3_LABELS, self.e3)):
            out.extend(lab for lab, val in zip(labels, entries) if not val.is_zero())
        return out


def residuals(p: PointHV) -> EquationResidual:
    """Exact residuals of the three equations at p; all zero iff p in Z x V."""
    e1, e2, e3 = residual_entries(p.alpha, p.beta, p.B)
    return EquationResidual(tuple(e1), tuple(e2), tuple(e3))


def on_Z(p: PointHV) -> bool:
    return residuals(p).is_zero()


def det_b(p: PointHV) -> Scalar:
    """Determinant of the 3x3 matrix of stored B-coefficient rows."""
    return Mat3(p.B).det()


def in_Zo(p: PointHV) -> bool:
    """Membership in the open locus where B is invertible.

    Precondition: p lies on Z.  On Z the condition a1 a2 a3 beta != 0 is
    equivalent to det B != 0, and 2 det B = beta^3 a1 a2 a3 holds exactly.
    """
    if not on_Z(p):
        raise ContractViolation("in_Zo called off Z")
    a1, a2, a3 = p.alpha
    open_locus = not (a1 * a2 * a3 * p.beta).is_zero()
    if open_locus:
        d = det_b(p)
        if d.is_zero():
            raise AssertionError("det B vanished on the open locus")
        if d + d != p.beta ** 3 * a1 * a2 * a3:
            raise AssertionError("determinant identity 2 det B = beta^3 a1 a2 a3 failed")
    return open_locus


def semi_invariant_minus_theta(p: PointHV) -> Scalar:
    """a1^2 a2^2 a3^2 beta^2 det B: semi-invariant of weight -theta,
    nonvanishing exactly on the open locus (within Z)."""
    a1, a2, a3 = p.alpha
    return (a1 * a2 * a3) ** 2 * p.beta ** 2 * det_b(p)


def f_pairing(p: PointHV, i: int, j: int) -> Scalar:
    """f_ij = j_pairing(B_i, B_j), a (det V)^-2-valued pairing of legs."""
    return j_pairing(p.B[i], p.B[j])


def witness_semi_invariant(p: PointHV) -> Scalar:
    """(a1 a2 a3)^2 (a1 a2 f_12^2)^5: semi-invariant of weight -4*theta.

    Nonvanishing at the rank-one beta = 0 points where the second equation
    fails but the first holds.
    """
    a1, a2, a3 = p.alpha
    f = f_pairing(p, 0, 1)
    return (a1 * a2 * a3) ** 2 * (a1 * a2 * f * f) ** 5


def witness_E1_not_E2() -> PointHV:
    """beta = 0, all a_i nonzero, B = l (x) m of rank one with l isotropic
    for A but m not isotropic for the j-pairing: e1 = e3 = 0, e2 != 0."""
    i = QI.i()
    one = QI.one()
    m = (QI.zero(), one, QI.zero())           # v1*v2: j_pairing(m, m) = -1/2
    ell = (one, i, QI.zero())                 # 1 + i^2 + 0 = 0
    B = tuple(tuple(li * c for c in m) for li in ell)
    return PointHV.make((1, 1, 1), 0, B, (1, 1))


def witness_E2_not_E1() -> PointHV:
    """beta = 0, all a_i nonzero, B = l (x) m with m = x^2 isotropic for the
    j-pairing but l not isotropic for A: e2 = e3 = 0, e1 != 0."""
    one = QI.one()
    m = (one, QI.zero(), QI.zero())           # v1^2: j_pairing(m, m) = 0
    ell = (one, one, one)                     # 1 + 1 + 1 != 0
    B = tuple(tuple(li * c for c in m) for li in ell)
    return PointHV.make((1, 1, 1), 0, B, (1, 1))
