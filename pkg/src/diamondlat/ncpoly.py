"""Polynomials in a central variable ``t`` with quaternion coefficients.

An :class:`NCPoly` stores ``p_0 + p_1 t + ... + p_k t^k`` as the tuple
``(p_0, ..., p_k)`` with ``p_k != 0``; the zero polynomial is ``()``.
Because ``t`` commutes with everything, products are plain convolutions
with the order of coefficient factors preserved.

Divisibility is on the right throughout: ``d`` right-divides ``p`` when
``p = s*d``.  Monic polynomials correspond to left ideals ``R[t]p``;
:func:`gcrd` generates ``R[t]p + R[t]q`` and :func:`lclm` generates
``R[t]p ∩ R[t]q``.
"""

from itertools import combinations

from .exactnum import ONE, ZERO, Quaternion, quat_inv

__all__ = [
    "NCPoly",
    "poly_mul",
    "eval_right",
    "right_divide",
    "divides_right",
    "gcrd",
    "lclm",
    "lclm_linear",
    "wedderburn",
    "linear",
]


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return tuple(coeffs)


class NCPoly:
    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        cs = []
        for c in coeffs:
            if not isinstance(c, Quaternion):
                c = Quaternion(c)
            cs.append(c)
        self.coeffs = _trim(cs)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs):
        p = object.__new__(cls)
        p.coeffs = _trim(coeffs)
        p._hash = None
        return p

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lead(self):
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == ONE

    def monic(self):
        """Left-multiply by the inverse of the leading coefficient."""
        if not self.coeffs:
            raise ValueError("cannot monicize the zero polynomial")
        lc = self.coeffs[-1]
        if lc == ONE:
            return self
        inv = quat_inv(lc)
        return NCPoly._raw(inv * c for c in self.coeffs)

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return NCPoly._raw(self[k] + other[k] for k in range(n))

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return NCPoly._raw(self[k] - other[k] for k in range(n))

    def __neg__(self):
        return NCPoly._raw(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            return poly_mul(self, other)
        if isinstance(other, Quaternion):
            return NCPoly._raw(c * other for c in self.coeffs)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Quaternion):
            return NCPoly._raw(other * c for c in self.coeffs)
        return NotImplemented

    def __call__(self, alpha):
        return eval_right(self, alpha)

    def to_json(self):
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, data):
        return cls(Quaternion.from_json(c) for c in data)

    def __repr__(self):
        return f"NCPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not mono:
                terms.append(str(c))
            elif c == ONE:
                terms.append(mono)
            elif c == -ONE:
                terms.append("-" + mono)
            else:
                cs = str(c)
                simple = c.is_central() or sum(1 for x in c.components if x) == 1
                terms.append(f"{cs}{mono}" if simple and "/" not in cs else f"({cs}){mono}")
        text = terms[0]
        for term in terms[1:]:
            text += term if term.startswith("-") else "+" + term
        return text


T = NCPoly((ZERO, ONE))
UNIT = NCPoly((ONE,))


def linear(alpha):
    """The monic linear polynomial ``t - alpha``."""
    return NCPoly._raw((-alpha, ONE))


def poly_mul(p, q):
    if not p.coeffs or not q.coeffs:
        return NCPoly._raw(())
    out = [ZERO] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a.is_zero():
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] = out[i + j] + a * b
    return NCPoly._raw(out)


def eval_right(p, alpha):
    """``p_0 + p_1 alpha + ... + p_k alpha^k`` (powers on the right)."""
    acc = ZERO
    for c in reversed(p.coeffs):
        acc = acc * alpha + c
    return acc


def right_divide(p, d):
    """Return ``(quotient, remainder)`` with ``p = quotient*d + remainder``.

    ``d`` must be monic; ``deg remainder < deg d``.
    """
    if not d.is_monic():
        raise ValueError("right_divide needs a monic, nonzero divisor")
    m = d.degree
    rem = list(p.coeffs)
    if len(rem) <= m:
        return NCPoly._raw(()), p
    quot = [ZERO] * (len(rem) - m)
    dc = d.coeffs
    for k in range(len(rem) - 1, m - 1, -1):
        c = rem[k]
        if c.is_zero():
            continue
        shift = k - m
        quot[shift] = c
        # subtract c t^shift * d
        for i in range(m + 1):
            rem[shift + i] = rem[shift + i] - c * dc[i]
    return NCPoly._raw(quot), NCPoly._raw(rem[:m])


def divides_right(d, p):
    """True iff ``d`` (monic) right-divides ``p``."""
    return right_divide(p, d)[1].is_zero()


def exact_quotient(r, q):
    """The unique ``s`` with ``r = s*q``; ValueError if ``q`` does not divide."""
    s, rem = right_divide(r, q)
    if not rem.is_zero():
        raise ValueError(f"{q} does not right-divide {r}")
    return s


def _rem_any(p, d):
    # remainder of p by a possibly non-monic d; left scaling keeps the ideal R[t]d
    return right_divide(p, d.monic())


def gcrd(p, q):
    """Monic greatest common right divisor by the right Euclidean algorithm."""
    if p.is_zero() and q.is_zero():
        raise ValueError("gcrd(0, 0) is undefined")
    a, b = p, q
    while not b.is_zero():
        a, b = b, _rem_any(a, b)[1]
    return a.monic()


def _euclid_cofactors(p, q):
    # returns (g, s, u) where the sequence ended with s*p + u*q = 0 (s nonzero)
    r0, r1 = p, q
    s0, s1 = UNIT, NCPoly._raw(())
    u0, u1 = NCPoly._raw(()), UNIT
    while not r1.is_zero():
        lc_inv = quat_inv(r1.lead())
        quot, rem = right_divide(r0, r1.monic())
        # r0 = quot * monic(r1) + rem = (quot*lc_inv) * r1 + rem
        qq = quot * lc_inv
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - poly_mul(qq, s1)
        u0, u1 = u1, u0 - poly_mul(qq, u1)
    return r0, s1, u1


def lclm(p, q):
    """Monic least common left multiple of monic ``p`` and ``q``.

    The extended right Euclidean algorithm carries left cofactors with
    ``s_i p + u_i q = r_i``; at termination ``s p = -u q`` is the least
    common left multiple.
    """
    if not (p.is_monic() and q.is_monic()):
        raise ValueError("lclm needs monic, nonzero arguments")
    if p.degree == 0:
        return q
    if q.degree == 0:
        return p
    _, s, _ = _euclid_cofactors(p, q)
    return poly_mul(s, p).monic()


def lclm_linear(p, alpha):
    """``lclm(p, t - alpha)`` for monic ``p`` via a single conjugation step."""
    if not p.is_monic():
        raise ValueError("lclm_linear needs a monic polynomial")
    c = eval_right(p, alpha)
    if c.is_zero():
        return p
    return poly_mul(linear(c * alpha * quat_inv(c)), p)


def wedderburn(elements):
    """Minimal monic polynomial vanishing on every element of ``elements``.

    Folds :func:`lclm_linear` over the set; elements that are already
    zeros of the running polynomial contribute nothing.
    """
    f = UNIT
    for s in elements:
        f = lclm_linear(f, s)
    return f


def subset_wedderburn(elements):
    """Map every index subset ``T`` (frozenset) to ``f_T``, sharing prefixes."""
    elements = list(elements)
    out = {frozenset(): UNIT}
    n = len(elements)
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            key = frozenset(combo)
            parent = out[frozenset(combo[:-1])]
            out[key] = lclm_linear(parent, elements[combo[-1]])
    return out
