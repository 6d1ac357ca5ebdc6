"""The complexified Cayley algebra: 8-dimensional composition algebra over Q(i).

The multiplication table is frozen below.  It was produced once by
Cayley-Dickson doubling (a,b)(c,d) = (ac - d~b, da + bc~) applied twice
starting from the 2-dimensional algebra, with the basis ordered by doubling
position (tests regenerate the table independently from the recursion).
"""

from __future__ import annotations

from .rationals import ONE, ZERO, Scalar, sc

# TABLE[i][j] = (sign, k) with e_i e_j = sign * e_k
TABLE = (
    ((+1, 0), (+1, 1), (+1, 2), (+1, 3), (+1, 4), (+1, 5), (+1, 6), (+1, 7)),
    ((+1, 1), (-1, 0), (+1, 3), (-1, 2), (+1, 5), (-1, 4), (-1, 7), (+1, 6)),
    ((+1, 2), (-1, 3), (-1, 0), (+1, 1), (+1, 6), (+1, 7), (-1, 4), (-1, 5)),
    ((+1, 3), (+1, 2), (-1, 1), (-1, 0), (+1, 7), (-1, 6), (+1, 5), (-1, 4)),
    ((+1, 4), (-1, 5), (-1, 6), (-1, 7), (-1, 0), (+1, 1), (+1, 2), (+1, 3)),
    ((+1, 5), (+1, 4), (-1, 7), (+1, 6), (-1, 1), (-1, 0), (-1, 3), (+1, 2)),
    ((+1, 6), (+1, 7), (+1, 4), (-1, 5), (-1, 2), (+1, 3), (-1, 0), (-1, 1)),
    ((+1, 7), (-1, 6), (+1, 5), (+1, 4), (-1, 3), (-1, 2), (+1, 1), (-1, 0)),
)


class Octonion:
    """Element of the Cayley algebra with Scalar coefficients over e0..e7."""

    __slots__ = ("c",)

    def __init__(self, coefficients):
        c = tuple(coefficients)
        if len(c) != 8:
            raise ValueError("octonion needs 8 coefficients")
        self.c = tuple(v if type(v) is Scalar else Scalar(v) for v in c)

    @staticmethod
    def zero() -> "Octonion":
        return _OZERO

    @staticmethod
    def one() -> "Octonion":
        return _OONE

    @staticmethod
    def basis(i: int) -> "Octonion":
        return _BASIS[i]

    def __add__(self, o: "Octonion") -> "Octonion":
        return Octonion([a + b for a, b in zip(self.c, o.c)])

    def __sub__(self, o: "Octonion") -> "Octonion":
        return Octonion([a - b for a, b in zip(self.c, o.c)])

    def __neg__(self) -> "Octonion":
        return Octonion([-a for a in self.c])

    def scale(self, s: Scalar) -> "Octonion":
        return Octonion([s * a for a in self.c])

    def __mul__(self, o: "Octonion") -> "Octonion":
        out = [ZERO] * 8
        for i, a in enumerate(self.c):
            if not (a.re or a.im):
                continue
            row = TABLE[i]
            for j, b in enumerate(o.c):
                if not (b.re or b.im):
                    continue
                sign, k = row[j]
                p = a * b
                out[k] = out[k] + p if sign > 0 else out[k] - p
        return Octonion(out)

    def conj(self) -> "Octonion":
        c = self.c
        return Octonion((c[0],) + tuple(-v for v in c[1:]))

    def re(self) -> Scalar:
        return self.c[0]

    def norm(self) -> Scalar:
        n = ZERO
        for v in self.c:
            n = n + v * v
        return n

    def inner(self, o: "Octonion") -> Scalar:
        t = ZERO
        for a, b in zip(self.c, o.c):
            t = t + a * b
        return t

    def is_zero(self) -> bool:
        return not any(v.re or v.im for v in self.c)

    def __eq__(self, o):
        if not isinstance(o, Octonion):
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        return "Octonion(%s)" % ", ".join(v.to_str() for v in self.c)

    def to_json(self):
        return [v.to_str() for v in self.c]

    @staticmethod
    def from_json(data) -> "Octonion":
        return Octonion([Scalar.from_str(s) for s in data])


_OZERO = Octonion([ZERO] * 8)
_OONE = Octonion([ONE] + [ZERO] * 7)
_BASIS = tuple(Octonion([ONE if k == i else ZERO for k in range(8)]) for i in range(8))


def oct_mul(x: Octonion, y: Octonion) -> Octonion:
    return x * y


def oct_conj(x: Octonion) -> Octonion:
    return x.conj()


def oct_norm(x: Octonion) -> Scalar:
    return x.norm()


def oct_re(x: Octonion) -> Scalar:
    return x.re()


def cayley_dickson_product(x, y, dim=8):
    """Independent recursive doubling oracle over plain coefficient lists.

    (a,b)(c,d) = (ac - d~b, da + bc~); used by the tests to certify TABLE.
    """
    if dim == 1:
        return [x[0] * y[0]]
    h = dim // 2

    def conj(z, n):
        return [z[0]] + [-v for v in z[1:]]

    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]
    ac = cayley_dickson_product(a, c, h)
    db = cayley_dickson_product(conj(d, h), b, h)
    da = cayley_dickson_product(d, a, h)
    bc = cayley_dickson_product(b, conj(c, h), h)
    return [p - q for p, q in zip(ac, db)] + [p + q for p, q in zip(da, bc)]
