"""Exact rational quaternions.

Components are :class:`fractions.Fraction`, which keeps numerator and
denominator in lowest terms with a positive denominator, so equality of
two quaternions is plain structural equality.
"""

from fractions import Fraction

__all__ = [
    "Quaternion",
    "ZERO",
    "ONE",
    "I",
    "J",
    "K",
    "quat_inv",
    "quat_conjugate_by",
    "parse_rational",
    "format_rational",
]


def parse_rational(text):
    """Parse ``"num/den"`` (or an int/Fraction) into a Fraction."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if not isinstance(text, str):
        raise TypeError(f"expected a rational string, got {type(text).__name__}")
    return Fraction(text.strip())


def format_rational(x):
    # Fraction.__str__ already omits a unit denominator
    return str(Fraction(x))


class Quaternion:
    """The element ``a + b*i + c*j + d*k`` with rational components."""

    __slots__ = ("a", "b", "c", "d", "_hash")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.c = Fraction(c)
        self.d = Fraction(d)
        self._hash = None

    @classmethod
    def _raw(cls, a, b, c, d):
        # skips the Fraction() coercion on hot paths; callers pass Fractions
        q = object.__new__(cls)
        q.a, q.b, q.c, q.d = a, b, c, d
        q._hash = None
        return q

    @property
    def components(self):
        return (self.a, self.b, self.c, self.d)

    def is_zero(self):
        return not (self.a or self.b or self.c or self.d)

    def is_central(self):
        """True for rational scalars, the center of the quaternions."""
        return not (self.b or self.c or self.d)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, Quaternion):
            return (self.a == other.a and self.b == other.b
                    and self.c == other.c and self.d == other.d)
        if isinstance(other, (int, Fraction)):
            return self.is_central() and self.a == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.a, self.b, self.c, self.d))
        return self._hash

    @staticmethod
    def _coerce(x):
        if isinstance(x, Quaternion):
            return x
        if isinstance(x, (int, Fraction)):
            return Quaternion(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quaternion._raw(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Quaternion._raw(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Quaternion._raw(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        return Quaternion._raw(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self

    def conjugate(self):
        """Quaternion conjugate ``a - bi - cj - dk`` (not similarity conjugation)."""
        return Quaternion._raw(self.a, -self.b, -self.c, -self.d)

    def norm(self):
        """Reduced norm ``a^2 + b^2 + c^2 + d^2``."""
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def trace(self):
        return 2 * self.a

    def inverse(self):
        return quat_inv(self)

    def __truediv__(self, other):
        # right division: self * other^-1
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * quat_inv(o)

    def to_json(self):
        return [format_rational(x) for x in self.components]

    @classmethod
    def from_json(cls, data):
        if len(data) != 4:
            raise ValueError(f"a quaternion needs 4 components, got {len(data)}")
        return cls(*(parse_rational(x) for x in data))

    def __repr__(self):
        return f"Quaternion({', '.join(repr(str(x)) for x in self.components)})"

    def __str__(self):
        if self.is_zero():
            return "0"
        out = []
        for coeff, unit in zip(self.components, ("", "i", "j", "k")):
            if not coeff:
                continue
            mag = abs(coeff)
            body = str(mag) if (not unit or mag != 1) else ""
            if "/" in body and unit:
                body = f"({body})"
            sign = "-" if coeff < 0 else "+"
            out.append((sign, body + unit))
        text = "".join(f"{s}{b}" for s, b in out)
        return text[1:] if text.startswith("+") else text


ZERO = Quaternion(0)
ONE = Quaternion(1)
I = Quaternion(0, 1, 0, 0)
J = Quaternion(0, 0, 1, 0)
K = Quaternion(0, 0, 0, 1)


def quat_inv(x):
    """Two-sided inverse; raises ZeroDivisionError on zero."""
    n = x.norm()
    if not n:
        raise ZeroDivisionError("division by zero: quaternion 0 has no inverse")
    return Quaternion._raw(x.a / n, -x.b / n, -x.c / n, -x.d / n)


def quat_conjugate_by(x, c):
    """Return ``c * x * c^-1``."""
    return c * x * quat_inv(c)
