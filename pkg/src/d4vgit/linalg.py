"""Tiny exact linear algebra: 2-vectors, 2x2 and 3x3 matrices of Scalars."""

from __future__ import annotations

from .scalars import QI, as_scalar


class Vec2:
    __slots__ = ("a", "b")

    def __init__(self, a, b):
        self.a = as_scalar(a)
        self.b = as_scalar(b)

    def __iter__(self):
        yield self.a
        yield self.b

    def __eq__(self, other):
        return isinstance(other, Vec2) and self.a == other.a and self.b == other.b

    def __add__(self, other):
        return Vec2(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return Vec2(self.a - other.a, self.b - other.b)

    def scale(self, c):
        return Vec2(self.a * c, self.b * c)

    def is_zero(self):
        return self.a.is_zero() and self.b.is_zero()

    def wedge(self, other):
        """Signed area a1*b2 - a2*b1."""
        return self.a * other.b - self.b * other.a

    def __repr__(self):
        return "Vec2(%r, %r)" % (self.a, self.b)


class Mat2:
    """2x2 matrix, row-major entries (a b / c d)."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        self.a = as_scalar(a)
        self.b = as_scalar(b)
        self.c = as_scalar(c)
        self.d = as_scalar(d)

    @staticmethod
    def identity():
        return Mat2(1, 0, 0, 1)

    @staticmethod
    def diagonal(u, v):
        return Mat2(u, 0, 0, v)

    def rows(self):
        return (self.a, self.b), (self.c, self.d)

    def __eq__(self, other):
        return (isinstance(other, Mat2) and self.a == other.a and self.b == other.b
                and self.c == other.c and self.d == other.d)

    def __add__(self, other):
        return Mat2(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other):
        return Mat2(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __mul__(self, other):
        if isinstance(other, Mat2):
            return Mat2(
                self.a * other.a + self.b * other.c,
                self.a * other.b + self.b * other.d,
                self.c * other.a + self.d * other.c,
                self.c * other.b + self.d * other.d,
            )
        if isinstance(other, Vec2):
            return Vec2(self.a * other.a + self.b * other.b,
                        self.c * other.a + self.d * other.b)
        return Mat2(self.a * other, self.b * other, self.c * other, self.d * other)

    def scale(self, c):
        return Mat2(self.a * c, self.b * c, self.c * c, self.d * c)

    def det(self):
        return self.a * self.d - self.b * self.c

    def adjugate(self):
        return Mat2(self.d, -self.b, -self.c, self.a)

    def inverse(self):
        dt = self.det()
        if dt.is_zero():
            raise ZeroDivisionError("singular 2x2 matrix")
        inv = dt.inverse()
        return Mat2(self.d * inv, -self.b * inv, -self.c * inv, self.a * inv)

    def trace(self):
        return self.a + self.d

    def is_zero(self):
        return all(x.is_zero() for x in (self.a, self.b, self.c, self.d))

    def __repr__(self):
        return "Mat2(%r, %r, %r, %r)" % (self.a, self.b, self.c, self.d)


class Mat3:
    """3x3 matrix stored as a tuple of 3 row tuples of Scalars."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(as_scalar(x) for x in r) for r in rows)
        if len(self.rows) != 3 or any(len(r) != 3 for r in self.rows):
            raise ValueError("Mat3 needs 3x3 entries")

    @staticmethod
    def identity():
        return Mat3([[1, 0, 0], [0, 1, 0], [0, 0, 1]])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, Mat3) and self.rows == other.rows

    def __add__(self, other):
        return Mat3([[self[i, j] + other[i, j] for j in range(3)] for i in range(3)])

    def __sub__(self, other):
        return Mat3([[self[i, j] - other[i, j] for j in range(3)] for i in range(3)])

    def __mul__(self, other):
        if isinstance(other, Mat3):
            return Mat3([[sum((self[i, k] * other[k, j] for k in range(3)), QI.zero())
                          for j in range(3)] for i in range(3)])
        return Mat3([[self[i, j] * other for j in range(3)] for i in range(3)])

    def apply(self, triple):
        return tuple(sum((self[i, k] * triple[k] for k in range(3)), QI.zero())
                     for i in range(3))

    def det(self):
        r = self.rows
        return (r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
                - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
                + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]))

    def adjugate(self):
        r = self.rows
        cof = [[None] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(3):
                a, b = [k for k in range(3) if k != i]
                c, d = [k for k in range(3) if k != j]
                minor = r[a][c] * r[b][d] - r[a][d] * r[b][c]
                cof[i][j] = minor if (i + j) % 2 == 0 else -minor
        return Mat3([[cof[j][i] for j in range(3)] for i in range(3)])

    def is_zero(self):
        return all(x.is_zero() for r in self.rows for x in r)

    def __repr__(self):
        return "Mat3(%r)" % (self.rows,)


def sym_square(g: Mat2) -> Mat3:
    """Induced action of g on Sym^2 V in the ordered basis (e1^2, e1e2, e2^2).

    Functorial (sym_square(gh) == sym_square(g)*sym_square(h)) and
    det(sym_square(g)) == det(g)^3.
    """
    a, b, c, d = g.a, g.b, g.c, g.d
    return Mat3([
        [a * a, a * b, b * b],
        [a * c * 2, a * d + b * c, b * d * 2],
        [c * c, c * d, d * d],
    ])
