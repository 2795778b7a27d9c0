"""Semistability oracles for the two stability conditions, with mechanical
one-parameter-subgroup certificates for every unstable verdict.

The oracles are the closed-form criteria: for -theta, stability on Z x V is
exactly the open locus where B is invertible; for +theta it is the spanning
condition (every B_i(x, -) nonzero and some a_i B_i(x, x) nonzero).  The
1-PS machinery cross-checks the verdicts: an unstable certificate is a
cocharacter, expressed in a basis adapted to x, such that every coordinate
carrying positive weight vanishes at the point and which pairs positively
with the character.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .equations import ContractViolation, in_Zo, on_Z, semi_invariant_minus_theta
from .gitcore import (
    LAMBDA, MU, THETA, MINUS_THETA,
    Character, Cocharacter, GroupElement, PointHV,
    act, coordinate_weights, pair, x_weights,
)
from .linalg import Mat2, Vec2
from .quiver import form_contraction
from .scalars import QI, Scalar


STABLE = "stable"
UNSTABLE = "unstable"


@dataclass(frozen=True)
class StabilityVerdict:
    status: str
    character: Character
    # unstable: destabilizing data
    certificate: Optional[Cocharacter] = None
    adapting: Optional[GroupElement] = None        # moves the point to the adapted basis
    subset: str = ""
    # stable: witnessing data
    witness_index: Optional[int] = None            # condition-(iii) index, theta side
    witness_value: Optional[Scalar] = None         # nonvanishing semi-invariant, -theta side

    @property
    def is_stable(self):
        return self.status == STABLE


def _spanning_values(p: PointHV):
    """a_i * B_i(x, x) for i = 1, 2, 3 (the spanning determinants)."""
    out = []
    for a, b in zip(p.alpha, p.B):
        out.append(a * form_contraction(b, p.x)(p.x))
    return out


def _adapting_element(x: Vec2) -> GroupElement:
    """h with act(h, p).x == (1, 0); requires x nonzero."""
    if not x.a.is_zero():
        g = Mat2(x.a, QI.zero(), x.b, QI.one())
    else:
        g = Mat2(QI.zero(), QI.one(), x.b, QI.zero())
    return GroupElement.make((1, 1, 1), g.inverse())


def verify_certificate(p: PointHV, cert: Cocharacter, chi: Character,
                       adapting: Optional[GroupElement] = None) -> bool:
    """Mechanical re-verification: positive pairing with chi, and every
    positively weighted coordinate (including x) vanishes at the point."""
    if pair(chi, cert) <= 0:
        return False
    q = act(adapting, p) if adapting is not None else p
    weights = coordinate_weights(cert)
    coords = q.coords()
    for w, c in zip(weights, coords):
        if w > 0 and not c.is_zero():
            return False
    wx = x_weights(cert)
    for w, c in zip(wx, (q.x.a, q.x.b)):
        if w > 0 and not c.is_zero():
            return False
    return True


# -- the unstable subset families (plus-theta side) ---------------------------


def unstable_subset_certificates():
    """The destabilized subsets of the reference weight rows, with a
    certificate cocharacter per subset (coordinates in the adapted basis).

    Each certificate is re-verified mechanically against the weight table:
    its positive-weight coordinates lie in the subset's vanishing list.
    """
    out = []
    names = ("a1", "a2", "a3", "beta",
             "p1", "q1", "r1", "p2", "q2", "r2", "p3", "q3", "r3")
    for i in range(3):
        lam = LAMBDA[i]
        subset = ("beta", "p%d" % (i + 1), "q%d" % (i + 1), "r%d" % (i + 1))
        out.append(("{beta=0, B%d=0}" % (i + 1), subset, lam))
    out.append(("{a1=a2=a3=0}", ("a1", "a2", "a3"), MU))
    for i in range(3):
        j, k = [m for m in range(3) if m != i]
        subset = ("a%d" % (j + 1), "a%d" % (k + 1), "p%d" % (i + 1))
        out.append(("{a%d=a%d=0, p%d=0}" % (j + 1, k + 1, i + 1), subset,
                    Cocharacter(LAMBDA[i].a, (0, 1), "mu+lambda%d" % (i + 1))))
    for k in range(3):
        i, j = [m for m in range(3) if m != k]
        subset = ("a%d" % (k + 1), "p%d" % (i + 1), "p%d" % (j + 1))
        lam = Cocharacter(
            tuple(LAMBDA[i].a[m] + LAMBDA[j].a[m] for m in range(3)), (0, 1),
            "mu+lambda%d+lambda%d" % (i + 1, j + 1))
        out.append(("{a%d=0, p%d=p%d=0}" % (k + 1, i + 1, j + 1), subset, lam))
    out.append(("{p1=p2=p3=0}", ("p1", "p2", "p3"),
                Cocharacter((1, 1, 1), (0, 2), "2mu+sum lambda")))
    # mechanical re-verification against the weight rows
    for desc, subset, lam in out:
        weights = coordinate_weights(lam)
        positive = {names[m] for m, w in enumerate(weights) if w > 0}
        if not positive <= set(subset):
            raise AssertionError("certificate %s has stray positive weights %s"
                                 % (desc, positive - set(subset)))
    return out


_COORD_INDEX = {n: i for i, n in enumerate(
    ("a1", "a2", "a3", "beta",
     "p1", "q1", "r1", "p2", "q2", "r2", "p3", "q3", "r3"))}

_SUBSET_CERTIFICATES = None


def _subset_certificates_cached():
    global _SUBSET_CERTIFICATES
    if _SUBSET_CERTIFICATES is None:
        _SUBSET_CERTIFICATES = unstable_subset_certificates()
    return _SUBSET_CERTIFICATES


def _find_subset_certificate(adapted: PointHV):
    coords = adapted.coords()
    for desc, subset, lam in _subset_certificates_cached():
        if all(coords[_COORD_INDEX[n]].is_zero() for n in subset):
            return desc, lam
    return None


# -- plus-theta oracle ---------------------------------------------------------


def semistable_theta(p: PointHV) -> StabilityVerdict:
    """Stability for the character (1,1,1,1) on Z x V.

    Stable iff every B_i(x,-) is nonzero and V is spanned by x and the image
    of some a_i (B_i^x)^dual; no strictly semistable points exist.
    """
    if not on_Z(p):
        raise ContractViolation("semistable_theta called off Z")
    if p.x.is_zero():
        cert = Cocharacter((1, 1, 1), (1, 1), "diagonal")
        v = StabilityVerdict(UNSTABLE, THETA, certificate=cert,
                             adapting=GroupElement.identity(), subset="{x=0}")
        assert verify_certificate(p, cert, THETA)
        return v
    contractions = [form_contraction(b, p.x) for b in p.B]
    spanning = _spanning_values(p)
    all_contr = all(not c.is_zero() for c in contractions)
    if all_contr:
        for i, s in enumerate(spanning):
            if not s.is_zero():
                return StabilityVerdict(STABLE, THETA, witness_index=i,
                                        witness_value=s)
    h = _adapting_element(p.x)
    adapted = act(h, p)
    found = _find_subset_certificate(adapted)
    if found is None:
        raise AssertionError("unstable point matched no destabilized subset")
    desc, cert = found
    verdict = StabilityVerdict(UNSTABLE, THETA, certificate=cert, adapting=h,
                               subset=desc)
    assert verify_certificate(p, cert, THETA, adapting=h)
    return verdict


# -- minus-theta oracle --------------------------------------------------------


def _isotropic_adapting(p: PointHV) -> GroupElement:
    """For a Z-point with beta = 0, all a_i nonzero and B not all zero: the
    nonzero forms B_i are multiples of a single rank-one form l^2; returns h
    such that every B-triple of act(h, p) has the shape (*, 0, 0)."""
    for b in p.B:
        if any(not c.is_zero() for c in b):
            pm, qm, rm = b
            break
    else:
        raise AssertionError("no nonzero form")
    if not pm.is_zero():
        l1, l2 = pm, qm / 2              # (l1^2, 2 l1 l2, l2^2) up to scale
    else:
        l1, l2 = QI.zero(), QI.one()     # rank one with p = 0 forces q = 0
    # K has columns u, w with l(u) = 1, l(w) = 0; then act with g = K^-1
    # turns the form l^2 into a multiple of v1^2.
    if not l1.is_zero():
        K = Mat2(l1.inverse(), -l2 / l1, QI.zero(), QI.one())
    else:
        K = Mat2(QI.zero(), QI.one(), l2.inverse(), QI.zero())
    return GroupElement.make((1, 1, 1), K.inverse())


def semistable_minus_theta(p: PointHV) -> StabilityVerdict:
    """Stability for the character (-1,-1,-1,-1) on Z x V: stable exactly on
    the open locus where B is invertible, witnessed by the nonvanishing
    semi-invariant a^2 beta^2 det B; no strictly semistable points."""
    if not on_Z(p):
        raise ContractViolation("semistable_minus_theta called off Z")
    if in_Zo(p):
        return StabilityVerdict(STABLE, MINUS_THETA,
                                witness_value=semi_invariant_minus_theta(p))
    for i, a in enumerate(p.alpha):
        if a.is_zero():
            cert = Cocharacter(tuple(-1 if m == i else 0 for m in range(3)),
                               (0, 0), "-lambda%d" % (i + 1))
            v = StabilityVerdict(UNSTABLE, MINUS_THETA, certificate=cert,
                                 adapting=GroupElement.identity(),
                                 subset="{a%d=0}" % (i + 1))
            assert verify_certificate(p, cert, MINUS_THETA)
            return v
    # all a_i nonzero, beta = 0: B has rank <= 1 with isotropic image
    cert = Cocharacter((0, 0, 0), (0, -1), "-mu")
    if all(c.is_zero() for b in p.B for c in b):
        h = GroupElement.identity()
    else:
        h = _isotropic_adapting(p)
    verdict = StabilityVerdict(UNSTABLE, MINUS_THETA, certificate=cert,
                               adapting=h, subset="{beta=0}")
    assert verify_certificate(p, cert, MINUS_THETA, adapting=h)
    return verdict


# -- off-Z reporting -------------------------------------------------------------


def _fixes_h_part(h: GroupElement, p: PointHV) -> bool:
    q = act(h, p)
    return q.alpha == p.alpha and q.beta == p.beta and q.B == p.B


def infinite_stabilizer_detected(p: PointHV) -> bool:
    """True when an explicit positive-dimensional family fixing the H-part
    of p is found (beta = 0 points whose forms share a line)."""
    if not p.beta.is_zero():
        return False
    nonzero = [b for b in p.B if any(not c.is_zero() for c in b)]
    if not nonzero:
        return True                      # the full torus of GL(V) fixes it
    pm, qm, rm = nonzero[0]
    from .equations import j_pairing
    families = []
    if j_pairing(nonzero[0], nonzero[0]).is_zero():
        # rank-one form (l1 v1 + l2 v2)^2: unipotent family along its kernel
        l1, l2 = (pm, qm / 2) if not pm.is_zero() else (QI.zero(), QI.one())

        def shear(s, l1=l1, l2=l2):
            return Mat2(QI.one() - s * l2 * l1, -(s * l2 * l2),
                        s * l1 * l1, QI.one() + s * l1 * l2)

        families.append(shear)
    elif pm.is_zero() and rm.is_zero():
        # split nondegenerate form v1 v2: its special orthogonal torus
        families.append(lambda s: Mat2(s, QI.zero(), QI.zero(), s.inverse()))
    for fam in families:
        h2 = GroupElement.make((1, 1, 1), fam(QI.scalar(2)))
        h3 = GroupElement.make((1, 1, 1), fam(QI.scalar(3)))
        if _fixes_h_part(h2, p) and _fixes_h_part(h3, p):
            return True
    return False


def off_z_minus_theta_flags(p: PointHV) -> dict:
    """Report flags for points off Z: whether a nonvanishing semi-invariant
    of negative-character weight certifies semistability, and whether an
    infinite stabilizer is detected (the strictly-semistable signature)."""
    from .equations import semi_invariant_minus_theta, witness_semi_invariant
    semi = (not semi_invariant_minus_theta(p).is_zero()
            or not witness_semi_invariant(p).is_zero())
    return {
        "semi_invariant_nonvanishing": semi,
        "infinite_stabilizer_detected": infinite_stabilizer_detected(p),
        "strictly_semistable_behavior": semi and infinite_stabilizer_detected(p),
    }
