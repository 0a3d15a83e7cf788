"""Exact rational-function arithmetic in the deformation parameter q.

Every coefficient in the engine is a ``QScalar``: a quotient of two
integer-coefficient polynomials in q, kept in a canonical form so that
equality (and in particular "is exactly zero") is a tuple comparison.
Canonical form: numerator and denominator are coprime primitive integer
polynomials, the denominator has a positive leading coefficient, and the
pair shares no integer content.

Negative powers of q are ordinary fractions (q^-2 == 1/q^2); there is no
separate Laurent representation.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

# A polynomial is a tuple of ints, index = power of q, no trailing zeros.
# The zero polynomial is the empty tuple.

_PZERO = ()
_PONE = (1,)


def _ptrim(c: list) -> tuple:
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _ptrim(out)


def _pneg(a):
    return tuple(-x for x in a)


def _psub(a, b):
    return _padd(a, _pneg(b))


def _pmul(a, b):
    if not a or not b:
        return _PZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _ptrim(out)


def _pshift(a, k):
    """Multiply by q**k (k >= 0)."""
    if not a:
        return _PZERO
    return tuple([0] * k) + a


def _content(a) -> int:
    g = 0
    for x in a:
        g = math.gcd(g, abs(x))
        if g == 1:
            break
    return g or 1


def _pprim(a):
    """Primitive part, sign-normalized so the leading coefficient is > 0."""
    if not a:
        return _PZERO, 0
    c = _content(a)
    if a[-1] < 0:
        c = -c
    return tuple(x // c for x in a), c


def _prem(a, b):
    """Pseudo-remainder of a by b over Z (b nonzero)."""
    r = list(a)
    lb = b[-1]
    e = len(b) - 1
    while True:
        while r and r[-1] == 0:
            r.pop()
        dr = len(r) - 1
        if not r or dr < e:
            break
        top = r[-1]
        r = [lb * x for x in r]
        for i, y in enumerate(b):
            r[dr - e + i] -= top * y
        r.pop()
    return tuple(r)


def _pdivmod_frac(a, b):
    """Division with remainder over Q; a, b int tuples, b != 0."""
    r = [Fraction(x) for x in a]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lb = Fraction(b[-1])
    db = len(b) - 1
    while len(r) - 1 >= db and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db or not r:
            break
        k = len(r) - 1 - db
        f = r[-1] / lb
        q[k] = f
        for i, y in enumerate(b):
            r[k + i] -= f * Fraction(y)
        r.pop()
    return q, r


def _pgcd(a, b):
    """Primitive-PRS gcd over Z (primitive, positive leading coefficient)."""
    a, _ = _pprim(a)
    b, _ = _pprim(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        if not r:
            a = b
            break
        r, _ = _pprim(r)
        a, b = b, r
    a, _ = _pprim(a)
    return a


def _pdiv_exact(a, b):
    """Exact polynomial division a / b over Z (raises if not exact)."""
    r = list(a)
    lb = b[-1]
    db = len(b) - 1
    out = [0] * max(len(a) - db, 0)
    while True:
        while r and r[-1] == 0:
            r.pop()
        if not r:
            break
        dr = len(r) - 1
        if dr < db:
            raise ArithmeticError("inexact polynomial division")
        f, rem = divmod(r[-1], lb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        out[dr - db] = f
        for i, y in enumerate(b):
            r[dr - db + i] -= f * y
    return _ptrim(out)


def _pval(a) -> int:
    """Index of the lowest nonzero coefficient."""
    for i, x in enumerate(a):
        if x:
            return i
    return 0


def _is_monomial(a) -> bool:
    return sum(1 for x in a if x) == 1


def _peval(a, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _prev(a):
    """Coefficient reversal: q**deg * a(1/q)."""
    return _ptrim(list(reversed(a)))


class QScalar:
    """Element of Q(q): num/den with integer-polynomial num, den."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=_PONE, _canonical=False):
        if _canonical:
            self.num = num
            self.den = den
            return
        num = _ptrim(list(num))
        den = _ptrim(list(den))
        if not den:
            raise ZeroDivisionError("zero denominator polynomial")
        if not num:
            self.num = _PZERO
            self.den = _PONE
            return
        if len(num) > 1 and len(den) > 1:
            # strip common q-powers first; most denominators are monomials
            v = min(_pval(num), _pval(den))
            if v:
                num = num[v:]
                den = den[v:]
            if len(den) > 1 and len(num) > 1 and not (
                _is_monomial(num) or _is_monomial(den)
            ):
                g = _pgcd(num, den)
                if len(g) > 1:
                    num = _pdiv_exact(num, g)
                    den = _pdiv_exact(den, g)
        num, cn = _pprim(num)
        den, cd = _pprim(den)
        c = Fraction(cn, cd)
        self.num = tuple(x * c.numerator for x in num)
        self.den = tuple(x * c.denominator for x in den)

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_int(n: int) -> "QScalar":
        return _small_int(n)

    @staticmethod
    def from_fraction(f: Fraction) -> "QScalar":
        return QScalar((f.numerator,), (f.denominator,))

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == _PONE and self.den == _PONE

    def __bool__(self):
        return bool(self.num)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return QScalar(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return QScalar(_pneg(self.num), self.den, _canonical=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return QScalar(
            _psub(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.num == _PONE and self.den == _PONE:
            return other
        if other.num == _PONE and other.den == _PONE:
            return self
        if not self.num or not other.num:
            return ZERO
        return QScalar(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero scalar")
        return QScalar(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if n == 0:
            return ONE
        base = self if n > 0 else ONE / self
        out = ONE
        for _ in range(abs(n)):
            out = out * base
        return out

    def inv(self) -> "QScalar":
        return ONE / self

    # -- equality / hashing -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = _coerce(other)
        if not isinstance(other, QScalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- evaluation ----------------------------------------------------

    def eval_at(self, q0) -> Fraction:
        """Exact value at a rational point q0 (raises at a pole)."""
        q0 = Fraction(q0)
        d = _peval(self.den, q0)
        if d == 0:
            raise ZeroDivisionError(f"pole at q = {q0}")
        return _peval(self.num, q0) / d

    def limit_q1(self) -> Fraction:
        """Value at q = 1 after cancelling common (q - 1) factors."""
        num, den = self.num, self.den
        if not num:
            return Fraction(0)
        qm1 = (-1, 1)
        while _peval(num, Fraction(1)) == 0 and _peval(den, Fraction(1)) == 0:
            num = _pdiv_exact(num, qm1)
            den = _pdiv_exact(den, qm1)
        d = _peval(den, Fraction(1))
        if d == 0:
            raise ZeroDivisionError("pole at q = 1")
        return _peval(num, Fraction(1)) / d

    def subs_q_inverse(self) -> "QScalar":
        """The image under q -> 1/q (used by the |q| = 1 star modes)."""
        m, n = len(self.num) - 1, len(self.den) - 1
        num, den = _prev(self.num), _prev(self.den)
        if m >= n:
            den = _pshift(den, m - n)
        else:
            num = _pshift(num, n - m)
        return QScalar(num, den)

    # -- printing -------------------------------------------------------

    def __repr__(self):
        return f"QScalar({self!s})"

    def __str__(self):
        from .expr_io import format_scalar

        return format_scalar(self)


def _coerce(x):
    if isinstance(x, QScalar):
        return x
    if isinstance(x, int):
        return _small_int(x)
    if isinstance(x, Fraction):
        return QScalar.from_fraction(x)
    return None


@lru_cache(maxsize=512)
def _small_int(n: int) -> QScalar:
    return QScalar((n,) if n else _PZERO, _PONE)


ZERO = QScalar(_PZERO, _PONE, _canonical=True)
ONE = QScalar(_PONE, _PONE, _canonical=True)
Q = QScalar((0, 1), _PONE, _canonical=True)
QINV = QScalar(_PONE, (0, 1), _canonical=True)
LAMBDA = Q - QINV  # q - 1/q


def qpow(k: int) -> QScalar:
    """q**k for any integer k."""
    if k >= 0:
        return QScalar(_pshift(_PONE, k), _PONE, _canonical=True)
    return QScalar(_PONE, _pshift(_PONE, -k), _canonical=True)


def qnum(n: int) -> QScalar:
    """The symmetric q-number [n] = (q^n - q^-n)/(q - q^-1); [0]=0, [1]=1."""
    if n < 0:
        raise ValueError("qnum requires n >= 0")
    # (q^n - q^-n)/(q - q^-1) = (q^{2n} - 1)/(q^{n-1}(q^2 - 1))
    if n == 0:
        return ZERO
    num = _psub(_pshift(_PONE, 2 * n), _PONE)
    den = _pshift(_psub(_pshift(_PONE, 2), _PONE), n - 1)
    return QScalar(num, den)


def qs_arith(a: QScalar, b: QScalar, op: str) -> QScalar:
    """Four-function field arithmetic; op in { add, sub, mul, div }."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def qs_eval(a: QScalar, q0) -> Fraction:
    return a.eval_at(q0)


def qs_limit_q1(a: QScalar) -> Fraction:
    return a.limit_q1()
