"""Exact Gaussian-rational scalars: a + b*i with a, b arbitrary-precision rationals.

Every exact computation in the package closes over this field.  gmpy2.mpq is
used as the rational backend when available (roughly 10x faster than
fractions.Fraction); the Fraction fallback keeps behaviour identical.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover
    from fractions import Fraction as Rat

R0 = Rat(0)
R1 = Rat(1)


def _fmt_rat(q) -> str:
    # always "num/den", den > 0, lowest terms (the backend normalizes)
    return "%d/%d" % (q.numerator, q.denominator)


class Scalar:
    """Immutable element of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is type(R0) else Rat(re)
        self.im = im if type(im) is type(R0) else Rat(im)

    # fast internal constructor: both args already Rat
    @staticmethod
    def _mk(re, im):
        s = object.__new__(Scalar)
        s.re = re
        s.im = im
        return s

    def __add__(self, o):
        if type(o) is not Scalar:
            o = Scalar(o)
        return Scalar._mk(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, o):
        if type(o) is not Scalar:
            o = Scalar(o)
        return Scalar._mk(self.re - o.re, self.im - o.im)

    def __rsub__(self, o):
        return Scalar(o).__sub__(self)

    def __neg__(self):
        return Scalar._mk(-self.re, -self.im)

    def __mul__(self, o):
        if type(o) is not Scalar:
            o = Scalar(o)
        a, b, c, d = self.re, self.im, o.re, o.im
        if b or d:
            return Scalar._mk(a * c - b * d, a * d + b * c)
        return Scalar._mk(a * c, R0)

    __rmul__ = __mul__

    def __truediv__(self, o):
        if type(o) is not Scalar:
            o = Scalar(o)
        c, d = o.re, o.im
        if d:
            n = c * c + d * d
            if not n:
                raise ZeroDivisionError("scalar division by zero")
            a, b = self.re, self.im
            return Scalar._mk((a * c + b * d) / n, (b * c - a * d) / n)
        if not c:
            raise ZeroDivisionError("scalar division by zero")
        return Scalar._mk(self.re / c, self.im / c)

    def __rtruediv__(self, o):
        return Scalar(o).__truediv__(self)

    def inv(self):
        return ONE / self

    def conj(self):
        return Scalar._mk(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, o):
        if type(o) is not Scalar:
            if isinstance(o, (int, type(R0))):
                return self.re == o and not self.im
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def is_real(self) -> bool:
        return not self.im

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return "Scalar(%s)" % self.to_str()

    def to_str(self) -> str:
        """Serialize as "a/b" or "a/b+c/d*i" (lowest terms, den > 0, no spaces)."""
        if not self.im:
            return _fmt_rat(self.re)
        sign = "+" if self.im >= 0 else "-"
        return _fmt_rat(self.re) + sign + _fmt_rat(abs(self.im)) + "*i"

    @staticmethod
    def from_str(s: str) -> "Scalar":
        s = s.strip()
        if s.endswith("*i"):
            body = s[:-2]
            # split at the sign separating the two rationals: the real part may
            # itself start with '-', so search from index 1 onward
            k = max(body.rfind("+", 1), body.rfind("-", 1))
            # a '-' directly after '/' or inside a numerator cannot happen in
            # canonical form: the split sign always follows the denominator
            re_part, sign, im_part = body[:k], body[k], body[k + 1:]
            im = Rat(im_part)
            return Scalar(Rat(re_part), -im if sign == "-" else im)
        return Scalar(Rat(s), R0)


ZERO = Scalar(0)
ONE = Scalar(1)
IUNIT = Scalar(0, 1)


def sc(num, den=1) -> Scalar:
    """Real rational scalar num/den."""
    return Scalar(Rat(num, den), R0)
