"""Exact constructible reals.

A :class:`CReal` is an expression tree over arbitrary-precision rationals with
nodes ``add``, ``sub``, ``mul``, ``div`` and ``sqrt``.  Signs are decided by
outward-rounded fixed-point interval evaluation first; when the interval
straddles zero the value is reduced to a normal form in a tower of quadratic
extensions, ``a + b*sqrt(r)`` with ``a``, ``b``, ``r`` living strictly below
``sqrt(r)``, where the sign is exact by recursive squaring.
"""
from __future__ import annotations

import contextlib
import contextvars
import math
import weakref
from fractions import Fraction
from typing import Iterator, Union

from .errors import DepthLimitExceeded, DivisionByZero, NegativeRadicand

DEFAULT_DEPTH_LIMIT = 16
_depth_limit: contextvars.ContextVar[int] = contextvars.ContextVar(
    "euclid_depth_limit", default=DEFAULT_DEPTH_LIMIT
)


def get_depth_limit() -> int:
    return _depth_limit.get()


@contextlib.contextmanager
def depth_limit(limit: int) -> Iterator[None]:
    """Temporarily change the sqrt-nesting limit for the current context."""
    if limit < 0:
        raise ValueError("depth limit must be nonnegative")
    token = _depth_limit.set(limit)
    try:
        yield
    finally:
        _depth_limit.reset(token)


# ---------------------------------------------------------------------------
# fixed-point intervals: (lo, hi) integers meaning [lo / 2**p, hi / 2**p]

_PRECISIONS = (64, 256)


def _iv_rational(q: Fraction, p: int) -> tuple[int, int]:
    n = q.numerator << p
    d = q.denominator
    return n // d, -((-n) // d)


def _iv_add(x, y):
    return x[0] + y[0], x[1] + y[1]


def _iv_mul(x, y, p):
    prods = (x[0] * y[0], x[0] * y[1], x[1] * y[0], x[1] * y[1])
    return min(prods) >> p, -((-max(prods)) >> p)


def _iv_div(x, y, p):
    if y[0] <= 0 <= y[1]:
        return None
    lo = hi = None
    for a in x:
        for b in y:
            n = a << p
            f = n // b
            c = -((-n) // b)
            lo = f if lo is None else min(lo, f)
            hi = c if hi is None else max(hi, c)
    return lo, hi


def _iv_sqrt(x, p):
    lo = math.isqrt(max(x[0], 0) << p)
    v = max(x[1], 0) << p
    hi = math.isqrt(v)
    if hi * hi < v:
        hi += 1
    return lo, hi


def _iv_sign(iv) -> int | None:
    if iv is None:
        return None
    if iv[0] > 0:
        return 1
    if iv[1] < 0:
        return -1
    return None


# ---------------------------------------------------------------------------
# normal forms: Fraction | Quad

NF = Union[Fraction, "Quad"]
_ZERO = Fraction(0)
_ONE = Fraction(1)


class Rad:
    """``sqrt(radicand)`` for a positive normal-form radicand; interned by key."""

    __slots__ = ("radicand", "depth", "key", "_iv", "__weakref__")

    def __init__(self, radicand: NF, depth: int, key: tuple):
        self.radicand = radicand
        self.depth = depth
        self.key = key
        self._iv: dict[int, tuple[int, int]] = {}

    def interval(self, p: int) -> tuple[int, int]:
        iv = self._iv.get(p)
        if iv is None:
            iv = _iv_sqrt(_nf_interval(self.radicand, p), p)
            self._iv[p] = iv
        return iv


_RADS: "weakref.WeakValueDictionary[tuple, Rad]" = weakref.WeakValueDictionary()


def _rad(radicand: NF) -> Rad:
    key = (_nf_depth(radicand) + 1, _nf_key(radicand))
    r = _RADS.get(key)
    if r is None:
        r = Rad(radicand, key[0], key)
        r = _RADS.setdefault(key, r)
    return r


class Quad:
    """``a + b*sqrt(rad)`` with ``a`` and ``b`` built only from radicals below ``rad``."""

    __slots__ = ("a", "b", "rad", "_key", "_depth", "_sign", "_iv")

    def __init__(self, a: NF, b: NF, rad: Rad):
        self.a = a
        self.b = b
        self.rad = rad
        self._key = None
        self._depth = None
        self._sign = None
        self._iv: dict[int, tuple[int, int]] = {}


def _nf_key(x: NF) -> tuple:
    if type(x) is Fraction:
        return (0, x.numerator, x.denominator)
    k = x._key
    if k is None:
        k = x._key = (1, x.rad.key, _nf_key(x.a), _nf_key(x.b))
    return k


def _nf_depth(x: NF) -> int:
    if type(x) is Fraction:
        return 0
    d = x._depth
    if d is None:
        d = x._depth = max(x.rad.depth, _nf_depth(x.a), _nf_depth(x.b))
    return d


def _below(x: NF, rad: Rad) -> bool:
    return type(x) is Fraction or (x.rad is not rad and x.rad.key < rad.key)


def _mk(a: NF, b: NF, rad: Rad) -> NF:
    """``a + b*sqrt(rad)`` for arbitrary canonical ``a`` and ``b``."""
    if type(b) is Fraction and not b:
        return a
    if not _below(b, rad):
        return _add(a, _mul(b, Quad(_ZERO, _ONE, rad)))
    if not _below(a, rad):
        return _add(a, Quad(_ZERO, b, rad))
    return Quad(a, b, rad)


def _above(x: Quad, y: NF) -> bool:
    """True when the top radical of ``x`` ranks strictly above everything in ``y``."""
    if type(y) is Fraction:
        return True
    return x.rad is not y.rad and x.rad.key > y.rad.key


def _add(x: NF, y: NF) -> NF:
    tx, ty = type(x) is Fraction, type(y) is Fraction
    if tx and ty:
        return x + y
    if tx:
        if not x:
            return y
        return Quad(_add(x, y.a), y.b, y.rad)
    if ty:
        if not y:
            return x
        return Quad(_add(x.a, y), x.b, x.rad)
    if x.rad is y.rad:
        return _mk(_add(x.a, y.a), _add(x.b, y.b), x.rad)
    if _above(x, y):
        return Quad(_add(x.a, y), x.b, x.rad)
    return Quad(_add(x, y.a), y.b, y.rad)


def _neg(x: NF) -> NF:
    if type(x) is Fraction:
        return -x
    return Quad(_neg(x.a), _neg(x.b), x.rad)


def _sub(x: NF, y: NF) -> NF:
    return _add(x, _neg(y))


def _mul(x: NF, y: NF) -> NF:
    tx, ty = type(x) is Fraction, type(y) is Fraction
    if tx and ty:
        return x * y
    if tx or ty:
        q, z = (x, y) if tx else (y, x)
        if not q:
            return _ZERO
        if q == 1:
            return z
        return Quad(_mul(q, z.a), _mul(q, z.b), z.rad)
    if x.rad is y.rad:
        r = x.rad.radicand
        a = _add(_mul(x.a, y.a), _mul(_mul(x.b, y.b), r))
        b = _add(_mul(x.a, y.b), _mul(x.b, y.a))
        return _mk(a, b, x.rad)
    if _above(x, y):
        return _mk(_mul(x.a, y), _mul(x.b, y), x.rad)
    return _mk(_mul(x, y.a), _mul(x, y.b), y.rad)


def _inv(x: NF) -> NF:
    # caller guarantees sign(x) != 0
    if type(x) is Fraction:
        return 1 / x
    a, b, r = x.a, x.b, x.rad.radicand
    norm = _sub(_mul(a, a), _mul(_mul(b, b), r))
    if _nf_sign(norm) != 0:
        return _mul(Quad(a, _neg(b), x.rad), _inv(norm))
    # sqrt(r) == a/b inside the lower field; x is then 2a
    return _inv(_mul(Fraction(2), a))


def _nf_interval(x: NF, p: int) -> tuple[int, int]:
    if type(x) is Fraction:
        return _iv_rational(x, p)
    iv = x._iv.get(p)
    if iv is None:
        iv = _iv_add(_nf_interval(x.a, p), _iv_mul(_nf_interval(x.b, p), x.rad.interval(p), p))
        x._iv[p] = iv
    return iv


def _nf_sign(x: NF) -> int:
    if type(x) is Fraction:
        return (x > 0) - (x < 0)
    s = x._sign
    if s is not None:
        return s
    s = _iv_sign(_nf_interval(x, _PRECISIONS[0]))
    if s is None:
        sa, sb = _nf_sign(x.a), _nf_sign(x.b)
        if sb == 0:
            s = sa
        elif sa == 0 or sa == sb:
            s = sb
        else:
            # |a| against |b|*sqrt(r): compare squares one level down
            s = sa * _nf_sign(_sub(_mul(x.a, x.a), _mul(_mul(x.b, x.b), x.rad.radicand)))
    x._sign = s
    return s


_SMALL_PRIMES = [p for p in range(2, 1000) if all(p % d for d in range(2, math.isqrt(p) + 1))]


def _odd_primes(n: int) -> tuple[int, tuple[int, ...]]:
    """Write ``n > 0`` as ``k*k*prod(primes)`` with distinct primes, ascending."""
    k = 1
    primes: list[int] = []
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        k *= p ** (e // 2)
        if e % 2:
            primes.append(p)
    if n > 1:
        if n < _SMALL_PRIMES[-1] ** 2:
            primes.append(n)
        else:
            from sympy import factorint  # large cofactors only

            for p, e in factorint(n).items():
                k *= p ** (e // 2)
                if e % 2:
                    primes.append(p)
    return k, tuple(sorted(primes))


_KNOWN_PRIMES: set[int] = set()


def _prime_root(p: int) -> Quad:
    _KNOWN_PRIMES.add(p)
    return Quad(_ZERO, _ONE, _rad(Fraction(p)))


def _square_free_parts(q: Fraction) -> tuple[Fraction, tuple[int, ...]]:
    kn, pn = _odd_primes(q.numerator)
    kd, pd = _odd_primes(q.denominator)
    # sqrt(n/d) = kn*sqrt(pn)*sqrt(pd) / (kd*pd); n and d share no prime
    return Fraction(kn, kd * math.prod(pd)), tuple(sorted(pn + pd))


def _rational_sqrt_nf(q: Fraction, known_below: float | None = None) -> NF | None:
    """sqrt(q) for q > 0 as a product of prime radicals.

    With ``known_below``, only already known primes below it may appear; None if that fails.
    """
    if known_below is None:
        coeff, primes = _square_free_parts(q)
    else:
        parts = []
        for n in (q.numerator, q.denominator):
            k, odd = 1, []
            for p in sorted(_KNOWN_PRIMES):
                if p >= known_below:
                    break
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                k *= p ** (e // 2)
                if e % 2:
                    odd.append(p)
            r = math.isqrt(n)
            if r * r != n:
                return None
            parts.append((k * r, odd))
        (kn, pn), (kd, pd) = parts
        coeff = Fraction(kn, kd * math.prod(pd))
        primes = tuple(sorted(pn + pd))
    out: NF = coeff
    for p in primes:
        out = _mul(out, _prime_root(p))
    return out


def _nf_sqrt(x: NF) -> NF:
    s = _nf_sign(x)
    if s < 0:
        raise NegativeRadicand("square root of a negative value")
    if s == 0:
        return _ZERO
    if type(x) is Fraction:
        return _rational_sqrt_nf(x)
    c = _content(x)
    if c != 1:
        # pull the rational content out so equal radicals up to scale coincide
        return _mul(_nf_sqrt(c), _nf_sqrt(_mul(1 / c, x)))
    y = _field_sqrt(x, None, {})
    if y is not None:
        return y
    # denest sqrt(a + b*sqrt(r)) when a^2 - b^2 r is a square e^2 one level down:
    # then it equals sqrt((a+e)/2) + sgn(b)*sqrt((a-e)/2)
    level = x.rad.depth
    if _nf_depth(x.a) >= level or _nf_depth(x.b) >= level:
        return Quad(_ZERO, _ONE, _rad(x))
    d = _sub(_mul(x.a, x.a), _mul(_mul(x.b, x.b), x.rad.radicand))
    if _nf_sign(d) >= 0:
        e = _nf_sqrt(d)
        if _nf_depth(e) < level:
            u = _nf_sqrt(_mul(Fraction(1, 2), _add(x.a, e)))
            v = _nf_sqrt(_mul(Fraction(1, 2), _sub(x.a, e)))
            out = _add(u, v if _nf_sign(x.b) > 0 else _neg(v))
            if _nf_depth(out) <= level:
                return out
    return Quad(_ZERO, _ONE, _rad(x))


def _prime_bound(below: Rad) -> float:
    """Primes whose radicals sort below ``below``: all of them above depth one."""
    return float(below.radicand) if below.depth == 1 else math.inf


def _field_sqrt(x: NF, below: Rad | None, memo: dict) -> NF | None:
    """Square root of x inside the field x already lives in, or None if it is not a square there.

    For x = a + b*sqrt(r): y = p + q*sqrt(r) squares to x iff e^2 = a^2 - b^2 r,
    p^2 = (a + e)/2 and q = b/(2p), all one radical lower.
    """
    if type(x) is Fraction:
        if x < 0:
            return None
        if not x:
            return x
        if below is None:
            return _rational_sqrt_nf(x)
        return _rational_sqrt_nf(x, _prime_bound(below))
    key = (_nf_key(x), below.key if below is not None else None)
    if key in memo:
        return memo[key]
    memo[key] = None
    d = _sub(_mul(x.a, x.a), _mul(_mul(x.b, x.b), x.rad.radicand))
    if _nf_sign(d) < 0:
        return None
    e = _field_sqrt(d, x.rad, memo)
    if e is None:
        return None
    for e_ in ((e, _neg(e)) if _nf_sign(e) else (e,)):
        t = _mul(Fraction(1, 2), _add(x.a, e_))
        if _nf_sign(t) <= 0:
            continue
        p = _field_sqrt(t, x.rad, memo)
        if p is None:
            continue
        q = _mul(x.b, _inv(_mul(Fraction(2), p)))
        y = _add(p, _mk(_ZERO, q, x.rad))
        if _nf_sign(y) < 0:
            y = _neg(y)
        memo[key] = y
        return y
    return None


def _leaves(x: NF, out: list[Fraction]) -> None:
    if type(x) is Fraction:
        if x:
            out.append(x)
        return
    _leaves(x.a, out)
    _leaves(x.b, out)


def _content(x: NF) -> Fraction:
    """Positive rational c with x/c having coprime integer coefficients."""
    leaves: list[Fraction] = []
    _leaves(x, leaves)
    num = 0
    den = 1
    for q in leaves:
        num = math.gcd(num, q.numerator)
        den = den * q.denominator // math.gcd(den, q.denominator)
    return Fraction(num, den)


def _rational_sqrt(q: Fraction) -> Fraction | None:
    n, d = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


def _terms(x: NF, roots: tuple[str, ...], out: list) -> None:
    if type(x) is Fraction:
        if x:
            out.append((x, roots))
        return
    _terms(x.a, roots, out)
    _terms(x.b, roots + (f"sqrt({_render_sum(x.rad.radicand)})",), out)


def _render_term(c: Fraction, roots: tuple[str, ...]) -> str:
    c = abs(c)
    body = "*".join(roots)
    if not body:
        return str(c)
    if c.numerator != 1:
        body = f"{c.numerator}*{body}"
    if c.denominator != 1:
        body = f"{body}/{c.denominator}"
    return body


def _render_sum(x: NF) -> str:
    out: list = []
    _terms(x, (), out)
    if not out:
        return "0"
    first, *rest = out
    text = ("-" if first[0] < 0 else "") + _render_term(*first)
    for c, roots in rest:
        text += (" - " if c < 0 else " + ") + _render_term(c, roots)
    return text


def _nf_render(x: NF) -> str:
    text = _render_sum(x)
    if type(x) is not Fraction and (" + " in text or " - " in text):
        return f"({text})"
    return text


# ---------------------------------------------------------------------------
# public value type

Number = Union["CReal", int, Fraction]


def _coerce(v) -> "CReal":
    if isinstance(v, CReal):
        return v
    if isinstance(v, (int, Fraction)):
        return CReal(v)
    return NotImplemented


class CReal:
    """Immutable exact constructible real.

    ``op`` is one of ``"q"`` (rational literal), ``"add"``, ``"sub"``,
    ``"mul"``, ``"div"``, ``"sqrt"``; ``args`` holds the operands.
    Operations on two rational literals fold to a literal; ``depth`` bounds the
    radical nesting depth of the value.
    """

    __slots__ = ("op", "args", "depth", "_q", "_nf", "_iv")

    def __init__(self, value: int | Fraction | str = 0):
        q = Fraction(value)
        self.op = "q"
        self.args = (q,)
        self.depth = 0
        self._q = q
        self._nf = q
        self._iv: dict[int, tuple[int, int] | None] = {}

    @classmethod
    def _node(cls, op: str, args: tuple, depth: int) -> "CReal":
        obj = object.__new__(cls)
        obj.op = op
        obj.args = args
        obj.depth = depth
        obj._q = None
        obj._nf = None
        obj._iv = {}
        return obj

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: Number) -> "CReal":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self._q is not None and other._q is not None:
            return CReal(self._q + other._q)
        if other._q == 0:
            return self
        if self._q == 0:
            return other
        return CReal._node("add", (self, other), max(self.depth, other.depth))

    def __radd__(self, other: Number) -> "CReal":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + self

    def __sub__(self, other: Number) -> "CReal":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self._q is not None and other._q is not None:
            return CReal(self._q - other._q)
        if other._q == 0:
            return self
        return CReal._node("sub", (self, other), max(self.depth, other.depth))

    def __rsub__(self, other: Number) -> "CReal":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other: Number) -> "CReal":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self._q is not None and other._q is not None:
            return CReal(self._q * other._q)
        if other._q == 1:
            return self
        if self._q == 1:
            return other
        if self._q == 0 or other._q == 0:
            return CReal(0)
        return CReal._node("mul", (self, other), max(self.depth, other.depth))

    def __rmul__(self, other: Number) -> "CReal":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self

    def __truediv__(self, other: Number) -> "CReal":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if other.sign() == 0:
            raise DivisionByZero("division by an exact zero")
        if self._q is not None and other._q is not None:
            return CReal(self._q / other._q)
        if other._q == 1:
            return self
        return CReal._node("div", (self, other), max(self.depth, other.depth))

    def __rtruediv__(self, other: Number) -> "CReal":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __neg__(self) -> "CReal":
        if self._q is not None:
            return CReal(-self._q)
        return CReal(0) - self

    def __pos__(self) -> "CReal":
        return self

    def __abs__(self) -> "CReal":
        return -self if self.sign() < 0 else self

    def sqrt(self) -> "CReal":
        return sqrt(self)

    # -- exact evaluation -----------------------------------------------------

    @property
    def normal_form(self) -> NF:
        nf = self._nf
        if nf is None:
            a = [x.normal_form for x in self.args]
            if self.op == "add":
                nf = _add(a[0], a[1])
            elif self.op == "sub":
                nf = _sub(a[0], a[1])
            elif self.op == "mul":
                nf = _mul(a[0], a[1])
            elif self.op == "div":
                nf = _mul(a[0], _inv(a[1]))
            else:
                nf = _nf_sqrt(a[0])
            if type(nf) is not Fraction and _nf_sign(nf) == 0:
                nf = _ZERO
            self._nf = nf
            if type(nf) is Fraction:
                self._q = nf
        return nf

    def interval(self, p: int) -> tuple[int, int] | None:
        """Outward-rounded enclosure ``[lo, hi] / 2**p``, or None if a divisor straddles 0."""
        if p in self._iv:
            return self._iv[p]
        if self._nf is not None:
            iv = _nf_interval(self._nf, p)
        else:
            ivs = [x.interval(p) for x in self.args]
            if any(i is None for i in ivs):
                iv = None
            elif self.op == "add":
                iv = _iv_add(ivs[0], ivs[1])
            elif self.op == "sub":
                iv = (ivs[0][0] - ivs[1][1], ivs[0][1] - ivs[1][0])
            elif self.op == "mul":
                iv = _iv_mul(ivs[0], ivs[1], p)
            elif self.op == "div":
                iv = _iv_div(ivs[0], ivs[1], p)
            else:
                iv = _iv_sqrt(ivs[0], p)
        self._iv[p] = iv
        return iv

    def sign(self) -> int:
        if self._q is not None:
            return (self._q > 0) - (self._q < 0)
        if self._nf is None:
            for p in _PRECISIONS:
                s = _iv_sign(self.interval(p))
                if s is not None:
                    return s
        return _nf_sign(self.normal_form)

    def is_zero(self) -> bool:
        return self.sign() == 0

    def is_rational(self) -> bool:
        return type(self.normal_form) is Fraction

    def as_fraction(self) -> Fraction:
        nf = self.normal_form
        if type(nf) is not Fraction:
            raise ValueError(f"{self.expr()} is not rational")
        return nf

    # -- comparisons ----------------------------------------------------------

    def _cmp(self, other) -> int:
        other = _coerce(other)
        if other is NotImplemented:
            raise TypeError(f"cannot compare CReal with {type(other).__name__}")
        if self._q is not None and other._q is not None:
            return (self._q > other._q) - (self._q < other._q)
        return (self - other).sign()

    def __eq__(self, other) -> bool:
        if _coerce(other) is NotImplemented:
            return NotImplemented
        return self._cmp(other) == 0

    def __ne__(self, other) -> bool:
        if _coerce(other) is NotImplemented:
            return NotImplemented
        return self._cmp(other) != 0

    def __lt__(self, other) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other) -> bool:
        return self._cmp(other) >= 0

    __hash__ = None  # equality is by value; values have no canonical hash

    def __bool__(self) -> bool:
        return self.sign() != 0

    # -- rendering --------------------------------------------------------------

    def expr(self) -> str:
        """Exact value as a parenthesized term string, e.g. ``(1/2 + sqrt(3)/2)``."""
        return _nf_render(self.normal_form)

    def to_decimal(self, digits: int = 6) -> str:
        """Round to nearest (ties away from zero) with ``digits`` places after the point.

        The result is approximate by construction and meant for display only.
        """
        if digits < 0:
            raise ValueError("digits must be nonnegative")
        scale = 10**digits
        n = _round_scaled(self, scale)
        sgn = "-" if n < 0 else ""
        whole, frac = divmod(abs(n), scale)
        if digits == 0:
            return f"{sgn}{whole}"
        return f"{sgn}{whole}.{frac:0{digits}d}"

    def __float__(self) -> float:
        if self._q is not None:
            return float(self._q)
        p = _PRECISIONS[0]
        iv = self.interval(p)
        if iv is None:
            iv = _nf_interval(self.normal_form, p)
        return float(Fraction(iv[0] + iv[1], 2 << p))

    def __repr__(self) -> str:
        return f"CReal({self.expr()})"

    def __str__(self) -> str:
        return self.expr()


def _round_half_away(v: Fraction) -> int:
    if v >= 0:
        return math.floor(v + Fraction(1, 2))
    return -math.floor(-v + Fraction(1, 2))


def _round_scaled(x: CReal, scale: int) -> int:
    if x._q is not None:
        return _round_half_away(x._q * scale)
    nf = x.normal_form
    for p in (64, 128, 256):
        lo, hi = _nf_interval(nf, p)
        a = _round_half_away(Fraction(lo * scale, 1 << p))
        b = _round_half_away(Fraction(hi * scale, 1 << p))
        if a == b:
            return a
    # interval still straddles a rounding boundary: decide it exactly
    lo, _ = _nf_interval(nf, 256)
    a = _round_half_away(Fraction(lo * scale, 1 << 256))
    boundary = Fraction(2 * a + 1, 2)
    s = (x * scale - CReal(boundary)).sign()
    if s > 0 or (s == 0 and boundary > 0):
        return a + 1
    return a


def sqrt(x: Number) -> CReal:
    """Exact nonnegative square root; enforces the sqrt-nesting limit.

    The depth of the result is the radical nesting depth of its exact value,
    so ``sqrt(a*a)`` folds back to a rational-depth term instead of growing.
    """
    x = _coerce(x)
    if x is NotImplemented:
        raise TypeError("sqrt expects a CReal, int or Fraction")
    s = x.sign()
    if s < 0:
        raise NegativeRadicand(f"sqrt of negative value {x.expr()}")
    if s == 0:
        return CReal(0)
    nf = _nf_sqrt(x.normal_form)
    if type(nf) is Fraction:
        return CReal(nf)
    depth = _nf_depth(nf)
    limit = get_depth_limit()
    if depth > limit:
        raise DepthLimitExceeded(depth, limit)
    out = CReal._node("sqrt", (x,), depth)
    out._nf = nf
    return out


def sign(x: Number) -> int:
    return _coerce(x).sign()


def as_creal(v: Number | str) -> CReal:
    if isinstance(v, str):
        return CReal(Fraction(v))
    out = _coerce(v)
    if out is NotImplemented:
        raise TypeError(f"cannot convert {type(v).__name__} to CReal")
    return out


ZERO = CReal(0)
ONE = CReal(1)
