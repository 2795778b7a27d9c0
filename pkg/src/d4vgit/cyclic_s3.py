"""Small self-contained verifiers: the cyclic-group toric construction and
the S3 presentation.

For the cyclic group of order n the minimal data is one map of torus weight
-n together with the two coordinates of weights (1, n-1); the redundant
presentation uses all nontrivial characters U_1 ... U_{n-1} with the maps

    B_i : U_1 (x) U_i -> U_{i+1}  (i < n-1),      B_{n-1} : U_1 (x) U_{n-1} -> C

plus the two singularity coordinates x in U_1 and y in U_{n-1}.  The
resulting torus weight matrix (one column per coordinate, rows indexed by
the characters) is

    B_1 = -2 e_1 + e_2,  B_i = -e_1 - e_i + e_{i+1},  B_{n-1} = -e_1 - e_{n-1},
    x = e_1,  y = e_{n-1}.

GIT quotients of the coordinate space by this torus are computed exactly
through the quotient-lattice fan.

The S3 part stores a map B: Sym^2 U -> U + C in basis coordinates on
(u1^2, u1u2, u2^2) and verifies the isometry relation
B^dual o (b, 1) o B = (det B) J against the same pairing normalization used
by the main construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .linalg import Mat2, Mat3, sym_square
from .scalars import (
    DEFAULT_TOWER_DEPTH, ExtensionLimitError, QI, Scalar, adjoin_sqrt,
    as_scalar, lower,
)


class WallError(Exception):
    """The requested character lies on a GIT wall."""


class DegenerateS3Point(Exception):
    pass


# -- exact rational linear algebra --------------------------------------------


def solve_exact(columns, target):
    """Solve sum_j c_j columns[j] = target exactly over Q; None if
    inconsistent, else one solution (free variables set to zero)."""
    k = len(target)
    m = len(columns)
    aug = [[Fraction(columns[j][i]) for j in range(m)] + [Fraction(target[i])]
           for i in range(k)]
    pivots = []
    row = 0
    for col in range(m):
        piv = next((r for r in range(row, k) if aug[r][col] != 0), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [v * inv for v in aug[row]]
        for r in range(k):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
        if row == k:
            break
    for r in range(row, k):
        if aug[r][m] != 0:
            return None
    sol = [Fraction(0)] * m
    for r, col in enumerate(pivots):
        sol[col] = aug[r][m]
    return sol


def in_cone(weights, chi):
    """Exact membership of chi in the rational cone spanned by the weight
    vectors (brute force over independent subsets)."""
    chi = tuple(Fraction(c) for c in chi)
    if all(c == 0 for c in chi):
        return True
    k = len(chi)
    cols = [tuple(Fraction(c) for c in w) for w in weights]
    from itertools import combinations
    for size in range(1, min(k, len(cols)) + 1):
        for subset in combinations(range(len(cols)), size):
            sol = solve_exact([cols[j] for j in subset], chi)
            if sol is not None and all(c >= 0 for c in sol):
                # confirm exactly (solve_exact can return any solution)
                check = [sum(sol[j] * cols[subset[j]][i] for j in range(size))
                         for i in range(k)]
                if all(a == b for a, b in zip(check, chi)):
                    return True
    return False


def smith_normal_form(A):
    """(U, diag) with U unimodular and U*A*V diagonal (V not tracked).

    A is a list of rows of integers, size N x k.  Returns U as a list of N
    rows and the list of diagonal entries.
    """
    A = [list(map(int, row)) for row in A]
    n = len(A)
    k = len(A[0]) if n else 0
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_op(i, j, f):
        A[i] = [a - f * b for a, b in zip(A[i], A[j])]
        U[i] = [a - f * b for a, b in zip(U[i], U[j])]

    def row_swap(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def col_op(i, j, f):
        for row in A:
            row[i] -= f * row[j]

    def col_swap(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(n, k):
        # find a nonzero pivot
        piv = None
        for i in range(t, n):
            for j in range(t, k):
                if A[i][j] != 0:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        row_swap(t, piv[0])
        col_swap(t, piv[1])
        while True:
            # clear the pivot column, then the pivot row
            progress = False
            for i in range(t + 1, n):
                if A[i][t] != 0:
                    f = A[i][t] // A[t][t]
                    row_op(i, t, f)
                    if A[i][t] != 0:
                        row_swap(t, i)
                    progress = True
            for j in range(t + 1, k):
                if A[t][j] != 0:
                    f = A[t][j] // A[t][t]
                    col_op(j, t, f)
                    if A[t][j] != 0:
                        col_swap(t, j)
                    progress = True
            if not progress:
                break
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    diag = [A[i][i] for i in range(min(n, k))]
    return U, diag


def _primitive(v):
    g = gcd(abs(v[0]), abs(v[1]))
    if g == 0:
        return v
    return (v[0] // g, v[1] // g)


# -- toric GIT problems ---------------------------------------------------------


@dataclass(frozen=True)
class ToricGITProblem:
    """A torus (C*)^k acting on C^N by the columns of an integer matrix."""

    weights: tuple          # k rows, each of length N

    @property
    def k(self):
        return len(self.weights)

    @property
    def n_coords(self):
        return len(self.weights[0])

    def column(self, j):
        return tuple(row[j] for row in self.weights)

    def columns(self):
        return [self.column(j) for j in range(self.n_coords)]


def an_minimal_problem(n: int) -> ToricGITProblem:
    """C^3 with the single-character weights (-n, 1, n-1)."""
    return ToricGITProblem(((-n, 1, n - 1),))


def an_redundant_problem(n: int) -> ToricGITProblem:
    """The redundant presentation: (C*)^(n-1) acting on C^(n+1).

    Generators are the nontrivial characters U_1 ... U_{n-1} of the cyclic
    group; the isomorphisms supplying the map coordinates are

        B_i : U_i (x) U_i  ->  U_{i-1} (x) U_{i+1}     (U_0 = U_n = C),

    the direct cyclic analogue of the a_i-maps of the main construction, so
    the weight of B_i is the i-th column of the (negated) extended Cartan
    pattern e_{i-1} - 2 e_i + e_{i+1}.  The two singularity coordinates sit
    in U_1 and U_{n-1}.  The resulting weight matrix is Gale-dual to the ray
    presentation of the minimal resolution, so the character (1,...,1) gives
    the resolution and -(1,...,1) the orbifold chart with its order-n
    stabilizer.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    k = n - 1
    cols = []
    for i in range(1, n):                      # maps B_1 ... B_{n-1}
        w = [0] * k
        w[i - 1] -= 2
        if i - 2 >= 0:
            w[i - 2] += 1
        if i <= n - 2:
            w[i] += 1
        cols.append(tuple(w))
    x = [0] * k
    x[0] = 1
    cols.append(tuple(x))
    y = [0] * k
    y[k - 1] = 1
    cols.append(tuple(y))
    rows = tuple(tuple(c[i] for c in cols) for i in range(k))
    return ToricGITProblem(rows)


def an_semistable(problem: ToricGITProblem, chi, point) -> bool:
    """A point is semistable for chi iff chi lies in the rational cone
    spanned by the weights of its nonzero coordinates."""
    chi = tuple(chi)
    support = [problem.column(j) for j, c in enumerate(point) if c != 0]
    if all(c == 0 for c in chi):
        return True
    return in_cone(support, chi)


def on_wall(problem: ToricGITProblem, chi) -> tuple:
    """A violated-inequality witness if chi lies on a GIT wall (the cone of
    fewer than k independent weights), else None."""
    chi = tuple(Fraction(c) for c in chi)
    if all(c == 0 for c in chi):
        return ("zero character",)
    cols = problem.columns()
    from itertools import combinations
    for size in range(1, problem.k):
        for subset in combinations(range(len(cols)), size):
            sol = solve_exact([cols[j] for j in subset], chi)
            if sol is None or any(c < 0 for c in sol):
                continue
            check = [sum(sol[j] * Fraction(cols[subset[j]][i]) for j in range(size))
                     for i in range(problem.k)]
            if all(a == b for a, b in zip(check, chi)):
                return tuple(subset)
    return None


@dataclass(frozen=True)
class FanData:
    rays: tuple             # primitive ray generators in Z^2
    maximal_cones: tuple    # pairs of ray indices
    multiplicities: tuple   # |det| per maximal cone
    normalized_rays: tuple  # rays in the (i, 1) normal form when smooth

    @property
    def interior_ray_count(self):
        """Rays with other rays strictly on both sides."""
        count = 0
        for i, r in enumerate(self.rays):
            signs = set()
            for j, s in enumerate(self.rays):
                if i == j:
                    continue
                cross = r[0] * s[1] - r[1] * s[0]
                if cross > 0:
                    signs.add(1)
                elif cross < 0:
                    signs.add(-1)
            if signs == {1, -1}:
                count += 1
        return count


def an_quotient_fan(n: int, chi) -> FanData:
    """The quotient fan of the redundant presentation at the character chi.

    chi may be a single integer (replicated across the torus factors) or a
    full (n-1)-tuple.  Wall characters raise WallError naming a violating
    weight subset.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    problem = an_redundant_problem(n)
    if isinstance(chi, int):
        chi = (chi,) * problem.k
    chi = tuple(chi)
    if len(chi) != problem.k:
        raise ValueError("character has wrong rank")
    wall = on_wall(problem, chi)
    if wall is not None:
        raise WallError("character %r lies on a wall (weight subset %r)"
                        % (chi, wall))
    N = problem.n_coords
    k = problem.k
    # quotient lattice map: rows k.. of the Smith transform of the
    # transposed weight matrix
    A = [[problem.weights[i][j] for i in range(k)] for j in range(N)]
    U, diag = smith_normal_form(A)
    if any(d != 1 for d in diag[:k]):
        raise AssertionError("weight matrix is not primitive")
    rays_raw = [tuple(U[r][j] for r in range(k, N)) for j in range(N)]
    if any(len(r) != 2 for r in rays_raw):
        raise AssertionError("quotient lattice is not rank 2")
    cols = problem.columns()
    from itertools import combinations
    cones = []
    for a, b in combinations(range(N), 2):
        complement = [cols[j] for j in range(N) if j not in (a, b)]
        va, vb = rays_raw[a], rays_raw[b]
        if va[0] * vb[1] - va[1] * vb[0] == 0:
            continue
        if in_cone(complement, chi):
            cones.append((a, b))
    if not cones:
        raise AssertionError("character admits no two-dimensional cones")
    # collect the rays that actually appear, primitivized
    used = sorted({j for c in cones for j in c})
    prim = {j: _primitive(rays_raw[j]) for j in used}
    ray_list = []
    ray_index = {}
    for j in used:
        v = prim[j]
        if v not in ray_index:
            ray_index[v] = len(ray_list)
            ray_list.append(v)
    max_cones = sorted({tuple(sorted((ray_index[prim[a]], ray_index[prim[b]])))
                        for a, b in cones})
    mults = tuple(abs(ray_list[a][0] * ray_list[b][1]
                      - ray_list[a][1] * ray_list[b][0])
                  for a, b in max_cones)
    normal = _normalize_rays(ray_list, max_cones)
    return FanData(tuple(ray_list), tuple(max_cones), mults, normal)


def _normalize_rays(rays, cones):
    """Present the rays as (i, 1) with smallest i equal to 0, when some cone
    is unimodular; otherwise return the raw rays."""
    for a, b in cones:
        for (p, q) in ((rays[a], rays[b]), (rays[b], rays[a])):
            m = _solve_unimodular(p, q)
            if m is None:
                continue
            imgs = [(m[0][0] * r[0] + m[0][1] * r[1],
                     m[1][0] * r[0] + m[1][1] * r[1]) for r in rays]
            if all(w[1] == 1 for w in imgs):
                shift = min(w[0] for w in imgs)
                return tuple(sorted((w[0] - shift, 1) for w in imgs))
    return tuple(sorted(rays))


def _solve_unimodular(p, q):
    """Integer M with M p = (0, 1) and M q = (1, 1), if unimodular:
    M = T [p q]^-1 with T = [[0,1],[1,1]]."""
    det = p[0] * q[1] - p[1] * q[0]
    if abs(det) != 1:
        return None
    inv = ((q[1] * det, -q[0] * det), (-p[1] * det, p[0] * det))
    T = ((0, 1), (1, 1))
    M = tuple(tuple(sum(T[i][l] * inv[l][j] for l in range(2)) for j in range(2))
              for i in range(2))
    if (M[0][0] * p[0] + M[0][1] * p[1], M[1][0] * p[0] + M[1][1] * p[1]) != (0, 1):
        return None
    if (M[0][0] * q[0] + M[0][1] * q[1], M[1][0] * q[0] + M[1][1] * q[1]) != (1, 1):
        return None
    return M


# -- the S3 example --------------------------------------------------------------


J_GRAM = ((0, 0, 1), (0, Fraction(-1, 2), 0), (1, 0, 0))


@dataclass(frozen=True)
class S3Point:
    """A map B: Sym^2 U -> U + C in basis coordinates on (u1^2, u1u2, u2^2).

    BU holds the six coefficients of the U-component (two rows); bC the
    three of the C-component, from which the inner product b on U is
    derived.
    """

    BU: tuple               # two rows of three Scalars
    bC: tuple               # three Scalars

    @staticmethod
    def make(BU, bC):
        BU = tuple(tuple(as_scalar(c) for c in row) for row in BU)
        bC = tuple(as_scalar(c) for c in bC)
        return S3Point(BU, bC)

    def matrix(self) -> Mat3:
        return Mat3([self.BU[0], self.BU[1], self.bC])

    def det(self) -> Scalar:
        return self.matrix().det()

    def b_matrix(self) -> Mat2:
        """The symmetric inner product on U induced by the C-component."""
        return Mat2(self.bC[0], self.bC[1], self.bC[1], self.bC[2])


def s3_base_point() -> S3Point:
    """Built from the standard 2-dimensional irrep: the U-component swaps
    the outer basis lines and the C-component is the invariant u1u2-line."""
    return S3Point.make(((0, 0, 2), (2, 0, 0)), (0, -2, 0))


def s3_residual(p: S3Point):
    """The six entries of B^dual o (b, 1) o B - (det B) J (upper triangle)."""
    rows = (p.BU[0], p.BU[1], p.bC)
    mb = p.b_matrix()
    det = p.det()
    out = []
    for m in range(3):
        for n in range(m, 3):
            u = (rows[0][m], rows[1][m])
            v = (rows[0][n], rows[1][n])
            s = (mb.a * u[0] * v[0] + mb.b * u[0] * v[1]
                 + mb.c * u[1] * v[0] + mb.d * u[1] * v[1])
            s = s + rows[2][m] * rows[2][n]
            gram = J_GRAM[m][n]
            if gram != 0:
                s = s - det * gram
            out.append(s)
    return tuple(out)


def s3_on_z(p: S3Point) -> bool:
    return all(e.is_zero() for e in s3_residual(p))


def s3_act(g: Mat2, p: S3Point) -> S3Point:
    """The GL(U)-action: B -> (g + 1) o B o Sym^2(g)^-1."""
    s_inv = sym_square(g.inverse())
    bu0 = tuple(sum((p.BU[0][m] * s_inv[m, n] for m in range(3)), QI.zero())
                for n in range(3))
    bu1 = tuple(sum((p.BU[1][m] * s_inv[m, n] for m in range(3)), QI.zero())
                for n in range(3))
    new0 = tuple(g.a * a + g.b * b for a, b in zip(bu0, bu1))
    new1 = tuple(g.c * a + g.d * b for a, b in zip(bu0, bu1))
    bc = tuple(sum((p.bC[m] * s_inv[m, n] for m in range(3)), QI.zero())
               for n in range(3))
    return S3Point((new0, new1), bc)


@dataclass
class S3Subgroup:
    elements: list

    def order(self):
        return len(self.elements)

    def _index(self, g):
        for i, e in enumerate(self.elements):
            if e == g:
                return i
        return None

    def verify(self):
        if self._index(Mat2.identity()) is None:
            raise AssertionError("identity missing")
        for a in self.elements:
            for b in self.elements:
                if self._index(a * b) is None:
                    raise AssertionError("not closed")
        return True

    def order_profile(self):
        prof = {}
        ident = Mat2.identity()
        for a in self.elements:
            n, cur = 1, a
            while cur != ident:
                cur = cur * a
                n += 1
            prof[n] = prof.get(n, 0) + 1
        return prof

    def is_abelian(self):
        return all((a * b) == (b * a) for a in self.elements for b in self.elements)


def _rational_cbrt(x: Scalar):
    """Exact cube root of a base-level rational Scalar, or None."""
    if not x.field.is_base:
        return None
    re, im = x.payload
    if im != 0:
        return None
    f = Fraction(re)
    sign = 1 if f >= 0 else -1
    n, d = abs(f.numerator), f.denominator

    def icbrt(m):
        if m == 0:
            return 0
        r = round(m ** (1.0 / 3.0))
        for c in (r - 1, r, r + 1):
            if c >= 0 and c ** 3 == m:
                return c
        return None

    rn, rd = icbrt(n), icbrt(d)
    if rn is None or rd is None:
        return None
    return QI.scalar(Fraction(sign * rn, rd))


def s3_stabilizer(p: S3Point, max_depth: int = DEFAULT_TOWER_DEPTH) -> S3Subgroup:
    """The stabilizer of a nondegenerate S3 point inside GL(U).

    Splits the inner product into its two isotropic directions (one square
    root), conjugates the torus/reflection candidates back, and keeps the
    elements that fix the point exactly.  At the base point the result has
    order 6 with the S3 profile: two elements of order 3 and three of
    order 2.
    """
    if not s3_on_z(p):
        raise DegenerateS3Point("point does not satisfy the defining relation")
    if p.det().is_zero():
        raise DegenerateS3Point("det B = 0")
    mb = p.b_matrix()
    if mb.det().is_zero():
        raise DegenerateS3Point("inner product degenerate")
    # split Q_b: poly coefficients (bC0, 2 bC1, bC2)
    pq = p.bC[0]
    qq = p.bC[1] * 2
    rq = p.bC[2]
    field = QI
    for c in list(p.bC) + list(p.BU[0]) + list(p.BU[1]):
        if c.field.depth > field.depth:
            field = c.field
    if pq.is_zero():
        cols = ((QI.one(), QI.zero()), (-rq / qq, QI.one()))
    else:
        disc = qq * qq - pq * rq * 4
        root = field.sqrt(disc)
        if root is None:
            field, root = adjoin_sqrt(field, disc, max_depth=max_depth)
        s1 = (-field.lift(qq) + root) / (field.lift(pq) * 2)
        s2 = (-field.lift(qq) - root) / (field.lift(pq) * 2)
        cols = ((s1, field.one()), (s2, field.one()))
    T = Mat2(cols[0][0], cols[1][0], cols[0][1], cols[1][1])
    split = s3_act(T.inverse(), p)
    # shape: rows proportional to (0,0,*) and (*,0,0) in one order or the other
    if split.BU[0][0].is_zero() and split.BU[1][2].is_zero():
        pass
    elif split.BU[0][2].is_zero() and split.BU[1][0].is_zero():
        swap = Mat2(QI.zero(), QI.one(), QI.one(), QI.zero())
        T = T * swap
        split = s3_act(T.inverse(), p)
    else:
        raise DegenerateS3Point("point is not in the split normal form orbit")
    x3 = split.BU[0][2]
    y1 = split.BU[1][0]
    if x3.is_zero() or y1.is_zero():
        raise DegenerateS3Point("split form degenerate")
    # cube roots of unity (adjoined on demand)
    try:
        field2, root3 = adjoin_sqrt(field, field.scalar(-3), max_depth=max_depth)
    except ExtensionLimitError:
        field2, root3 = None, None
    candidates = [Mat2.identity()]
    if root3 is not None:
        zeta = (field2.scalar(-1) + root3) / 2
        for z in (zeta, zeta * zeta):
            candidates.append(Mat2.diagonal(z * z, z))
    ratio = lower(x3 / y1)
    w0 = _rational_cbrt(ratio) if ratio.field.is_base else None
    if w0 is not None and not w0.is_zero():
        ws = [w0]
        if root3 is not None:
            zeta = (field2.scalar(-1) + root3) / 2
            ws += [field2.lift(w0) * zeta, field2.lift(w0) * zeta * zeta]
        for w in ws:
            candidates.append(Mat2(w.field.zero(), w, w.inverse(), w.field.zero()))
    elements = []
    for cand in candidates:
        g = T * cand * T.inverse()
        moved = s3_act(g, p)
        if moved.BU == p.BU and moved.bC == p.bC:
            elements.append(g)
    group = S3Subgroup(elements)
    group.verify()
    return group
