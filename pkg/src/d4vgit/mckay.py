"""The representation-theoretic base point of the open locus, stabilizer
enumeration, and orbit connection.

The base point b* is built from the 2-dimensional irreducible representation
of the quaternion group: the three forms are the character projections of
Sym^2 V (lines spanned by e1 e2, e1^2 + e2^2, e1^2 - e2^2) and the scalars
are solved exactly from the defining equations.  Its stabilizer inside the
full group has order exactly 8 with quaternion signature; relaxing the
constraint that fixes the signs of (alpha, beta) jointly doubles it to 16.
"""

from __future__ import annotations

from dataclasses import dataclass

from .equations import ContractViolation, in_Zo, omega, residuals, wedge
from .gitcore import GroupElement, PointHV, act, transform_form
from .linalg import Mat2, Mat3
from .scalars import (
    DEFAULT_TOWER_DEPTH, ExtensionLimitError, Field, QI, adjoin_sqrt,
)


class DegeneratePointError(Exception):
    pass


# -- the base point ------------------------------------------------------------


_CHARACTER_FORMS = ((0, 2, 0), (1, 0, 1), (1, 0, -1))


def base_point(x=(0, 0)) -> PointHV:
    """The rational base point of the open locus.

    The forms are fixed as the three character projections of Sym^2 V for
    the quaternion 2-dimensional irrep; (a1, a2, a3) are then solved exactly
    and linearly from the third equation at beta = 1, and the full residual
    evaluation re-checks the solution.
    """
    one = QI.one()
    B = tuple(tuple(QI.scalar(c) for c in b) for b in _CHARACTER_FORMS)
    beta = one
    # E3 component i reads  wedge(B_j, B_k) = beta a_i (r_i, -q_i/2, p_i);
    # each line determines a_i by one division.
    alpha = []
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        w = wedge(B[j], B[k])
        pi, qi, ri = B[i]
        target = (ri, -qi / 2, pi)
        ai = None
        for wc, tc in zip(w, target):
            if not tc.is_zero():
                ai = wc / (beta * tc)
                break
        if ai is None:
            raise AssertionError("degenerate character form")
        alpha.append(ai)
    p = PointHV.make(alpha, beta, B, x)
    if not residuals(p).is_zero():
        raise AssertionError("base point failed residual check")
    return p


def quaternion_rep():
    """The eight group elements realizing the quaternion group inside the
    stabilizer of the base point: pairs (name, GroupElement)."""
    i = QI.i()
    one = QI.one()
    zero = QI.zero()
    rho = {
        "1": Mat2.identity(),
        "i": Mat2(i, zero, zero, -i),
        "j": Mat2(zero, one, -one, zero),
        "k": Mat2(zero, i, i, zero),
    }
    torus = {
        "1": (one, one, one),
        "i": (one, -one, -one),
        "j": (-one, one, -one),
        "k": (-one, -one, one),
    }
    out = []
    for name in ("1", "i", "j", "k"):
        for sign, prefix in ((one, ""), (-one, "-")):
            out.append((prefix + name,
                        GroupElement.make(torus[name], rho[name].scale(sign))))
    return out


# -- finite subgroups ----------------------------------------------------------


@dataclass
class FiniteSubgroup:
    """A finite list of group elements closed under product and inverse."""

    elements: list

    def __post_init__(self):
        self.verify()

    def order(self):
        return len(self.elements)

    def index_of(self, h: GroupElement):
        for idx, e in enumerate(self.elements):
            if e.t == h.t and e.g == h.g:
                return idx
        return None

    def verify(self):
        ident = self.index_of(GroupElement.identity())
        if ident is None:
            raise AssertionError("identity missing")
        for a in self.elements:
            if self.index_of(a.inverse()) is None:
                raise AssertionError("inverse missing")
            for b in self.elements:
                if self.index_of(a.compose(b)) is None:
                    raise AssertionError("not closed under product")
        return True

    def multiplication_table(self):
        return [[self.index_of(a.compose(b)) for b in self.elements]
                for a in self.elements]

    def element_orders(self):
        orders = []
        ident = GroupElement.identity()
        for a in self.elements:
            n = 1
            cur = a
            while not (cur.t == ident.t and cur.g == ident.g):
                cur = cur.compose(a)
                n += 1
                if n > len(self.elements) + 1:
                    raise AssertionError("element order exceeds group order")
            orders.append(n)
        return orders

    def order_profile(self):
        prof = {}
        for n in self.element_orders():
            prof[n] = prof.get(n, 0) + 1
        return prof

    def is_abelian(self):
        return all(a.compose(b).t == b.compose(a).t and
                   a.compose(b).g == b.compose(a).g
                   for a in self.elements for b in self.elements)

    def is_quaternion(self):
        """Order 8, non-abelian, with exactly one element of order 2."""
        return (self.order() == 8 and not self.is_abelian()
                and self.order_profile().get(2, 0) == 1)


# -- stabilizer enumeration ------------------------------------------------------


def point_field(p: PointHV) -> Field:
    field = QI
    for c in list(p.coords()) + [p.x.a, p.x.b]:
        if c.field.depth > field.depth:
            field = c.field
    return field


def _form_matrix_on_lines(B, pattern, field):
    """The 3x3 matrix acting on coefficient triples with the B-triples as
    eigenvectors and the given eigenvalues."""
    C = Mat3([[B[j][i] for j in range(3)] for i in range(3)])   # columns = triples
    if C.det().is_zero():
        raise DegeneratePointError("B-lines are not independent")
    D = Mat3([[pattern[0], 0, 0], [0, pattern[1], 0], [0, 0, pattern[2]]])
    Cinv = C.adjugate() * C.det().inverse()
    return C * D * Cinv


def _recover_from_form_action(M: Mat3, field: Field):
    """g with transform_form(., g) given by the matrix M, or None.

    The columns of M are the images of the basis triples, so the entries of
    g are pinned by square roots and ratios of M-entries.
    """
    m = M.rows
    # M = [[a^2, ac, c^2], [2ab, ad+bc, 2cd], [b^2, bd, d^2]] for g = (a b / c d)
    a2, c2 = m[0][0], m[0][2]
    b2, d2 = m[2][0], m[2][2]
    if not a2.is_zero():
        a = field.sqrt(field.lift(a2) if a2.field != field else a2)
        if a is None:
            return None
        b = m[1][0] / (a * 2)
        c = m[0][1] / a
        d = (m[1][1] - b * c) / a
    elif not b2.is_zero():
        b = field.sqrt(field.lift(b2) if b2.field != field else b2)
        if b is None:
            return None
        a = field.zero()
        c = m[1][1] / b          # M[1][1] = ad + bc = bc when a = 0
        if c.is_zero():
            return None
        d = m[1][2] / (c * 2)
    else:
        return None
    g = Mat2(a, b, c, d)
    # exact verification on the basis triples
    for idx, basis in enumerate(((1, 0, 0), (0, 1, 0), (0, 0, 1))):
        image = transform_form(tuple(QI.scalar(v) for v in basis), g)
        for row in range(3):
            if image[row] != M[row, idx]:
                return None
    return g


_EVEN_PATTERNS = ((1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1))
_ODD_PATTERNS = ((-1, -1, -1), (-1, 1, 1), (1, -1, 1), (1, 1, -1))


def stabilizer(p: PointHV, fix_beta: bool = True) -> FiniteSubgroup:
    """The stabilizer of the H-part (alpha, beta, B) of a point of the open
    locus.

    The three B-lines span, so the form action of any stabilizing g is
    diagonal in the B-adapted basis with eigenvalues +-1 of even sign
    pattern; each pattern determines g up to sign by exact square-root
    recovery.  With fix_beta=False the constraint pinning the joint sign of
    (alpha, beta) is dropped, which admits the odd patterns as well and
    doubles the group (the double cover of (Z/2)^3 rather than of (Z/2)^2).
    """
    if not in_Zo(p):
        raise ContractViolation("stabilizer requires a point of the open locus")
    field = point_field(p)
    flipped = PointHV(tuple(-a for a in p.alpha), -p.beta, p.B, p.x)
    elements = []
    patterns = list(_EVEN_PATTERNS) + (list(_ODD_PATTERNS) if not fix_beta else [])
    for pattern in patterns:
        # eigenvalues of the inverse-side form action; t_i = 1/c_i = c_i
        M = _form_matrix_on_lines(p.B, pattern, field)
        ginv = _recover_from_form_action(M, field)
        if ginv is None:
            continue
        for sign in (1, -1):
            gi = ginv if sign == 1 else ginv.scale(QI.scalar(-1))
            t = tuple(QI.scalar(c) for c in pattern)
            h = GroupElement.make(t, gi.inverse())
            moved = act(h, p)
            same_h = (moved.alpha == p.alpha and moved.beta == p.beta
                      and moved.B == p.B)
            flip_h = (moved.alpha == flipped.alpha and moved.beta == flipped.beta
                      and moved.B == flipped.B)
            if same_h or (not fix_beta and flip_h):
                elements.append(h)
    group = FiniteSubgroup(elements)
    return group


# -- orbit connection ------------------------------------------------------------


@dataclass
class Canonicalization:
    transport: GroupElement      # act(transport, p) has the base-point H-part
    field: Field


def _sqrt_or_adjoin(field, value, max_depth):
    root = field.sqrt(field.lift(value) if value.field != field else value)
    if root is not None:
        return field, root
    return adjoin_sqrt(field, value, max_depth=max_depth)


def _split_first_form(p: PointHV, field, max_depth):
    """Group element g (as the GL2 part) moving the first form to the line of
    e1 e2: the two root directions of the form go to the basis directions."""
    p1, q1, r1 = p.B[0]
    if p1.is_zero():
        if q1.is_zero():
            raise DegeneratePointError("first form is degenerate")
        col1 = (QI.one(), QI.zero())
        col2 = (-r1 / q1, QI.one())
    else:
        disc = q1 * q1 - p1 * r1 * 4
        field, root = _sqrt_or_adjoin(field, disc, max_depth)
        p1l = field.lift(p1) if p1.field != field else p1
        q1l = field.lift(q1) if q1.field != field else q1
        s1 = (-q1l + root) / (p1l * 2)
        s2 = (-q1l - root) / (p1l * 2)
        if s1 == s2:
            raise DegeneratePointError("first form is degenerate")
        col1 = (s1, field.one())
        col2 = (s2, field.one())
    g = Mat2(col1[0], col2[0], col1[1], col2[1])
    return field, GroupElement.make((1, 1, 1), g.inverse())


def canonicalize(p: PointHV, max_depth: int = DEFAULT_TOWER_DEPTH) -> Canonicalization:
    """Transport of the H-part of a point of the open locus to the base
    point, over at most two square-root extensions."""
    if not in_Zo(p):
        raise ContractViolation("canonicalize requires a point of the open locus")
    field = point_field(p)
    target = base_point()
    # 1. split the first form into the product of the basis directions
    field, h1 = _split_first_form(p, field, max_depth)
    q1 = act(h1, p)
    # 2. balance the second form (q-coefficient already zero by orthogonality)
    p2, q2, r2 = q1.B[1]
    if not q2.is_zero():
        raise AssertionError("second form not orthogonal to the first")
    if p2.is_zero() or r2.is_zero():
        raise DegeneratePointError("second form degenerate after splitting")
    field, u = _sqrt_or_adjoin(field, p2 / r2, max_depth)
    h2 = GroupElement.make((1, 1, 1), Mat2.diagonal(u, field.one()))
    q2pt = act(h2, q1)
    # 3. torus-scale the three forms to the exact base values
    t = []
    for b, bstar in zip(q2pt.B, target.B):
        scale = None
        for c, cstar in zip(b, bstar):
            if not cstar.is_zero():
                scale = cstar / c
                break
        t.append(scale)
    h3 = GroupElement.make(tuple(t), Mat2.identity())
    q3 = act(h3, q2pt)
    if q3.B != target.B:
        raise AssertionError("form scaling failed to reach the base forms")
    # 4. the residual scalar family fixes B; solve it for (alpha, beta).
    # beta*omega = beta^3 a1 a2 a3 = 2 det B = 8 exactly once B = B*.
    om = omega(q3)
    if q3.beta * om != QI.scalar(8):
        raise AssertionError("determinant identity failed in canonical form")
    field, sigma = _sqrt_or_adjoin(field, om / 8, max_depth)
    h4 = GroupElement.make((sigma ** 2, sigma ** 2, sigma ** 2),
                           Mat2.diagonal(sigma, sigma))
    q4 = act(h4, q3)
    transport = h4.compose(h3.compose(h2.compose(h1)))
    if not (q4.alpha == target.alpha and q4.beta == target.beta
            and q4.B == target.B):
        raise AssertionError("canonical form mismatch")
    return Canonicalization(transport=transport, field=field)


def connect(p: PointHV, q: PointHV, max_depth: int = DEFAULT_TOWER_DEPTH):
    """A group element carrying the H-part of p exactly to the H-part of q.

    Works through the canonical form of each point; reports None only when a
    square-root extension would exceed the tower depth cap, never as a claim
    of non-existence.
    """
    try:
        cp = canonicalize(p, max_depth=max_depth)
        cq = canonicalize(q, max_depth=max_depth)
    except ExtensionLimitError:
        return None
    h = cq.transport.inverse().compose(cp.transport)
    moved = act(h, p)
    if not (moved.alpha == q.alpha and moved.beta == q.beta and moved.B == q.B):
        raise AssertionError("connect verification failed")
    return h
