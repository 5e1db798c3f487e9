"""Exact arithmetic in Q[x] and Q(x).

Polynomials are dense tuples of :class:`fractions.Fraction` in ascending
powers of ``x``. Rational functions are kept in a canonical reduced form
(gcd(num, den) = 1, den monic), so structural equality is value equality and
both types can be used directly as dictionary keys.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import BothZero, ZeroDenominator, ZeroInput, ZeroToNegativePower

_ZERO = Fraction(0)
_ONE = Fraction(1)

# below this many coefficients the schoolbook product beats packing
_KRONECKER_MIN = 24


def _as_fraction(c) -> Fraction:
    return c if type(c) is Fraction else Fraction(c)


def _strip(cs: list) -> tuple:
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    return tuple(cs[:n])


def _int_conv_naive(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _pack(cs: list[int], bits: int) -> int:
    acc = 0
    for c in reversed(cs):
        acc = (acc << bits) | c
    return acc


def _unpack(v: int, bits: int, count: int) -> list[int]:
    nbytes = bits // 8
    raw = v.to_bytes(nbytes * count, "little")
    return [int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") for i in range(count)]


def _int_conv(a: list[int], b: list[int]) -> list[int]:
    """Integer convolution; Kronecker substitution for long inputs."""
    if min(len(a), len(b)) < _KRONECKER_MIN:
        return _int_conv_naive(a, b)
    ap = [c if c > 0 else 0 for c in a]
    an = [-c if c < 0 else 0 for c in a]
    bp = [c if c > 0 else 0 for c in b]
    bn = [-c if c < 0 else 0 for c in b]
    biggest = max(map(abs, a)) * max(map(abs, b)) * 2 * min(len(a), len(b))
    bits = (biggest.bit_length() + 8) // 8 * 8
    Ap, An, Bp, Bn = (_pack(v, bits) for v in (ap, an, bp, bn))
    count = len(a) + len(b) - 1
    plus = _unpack(Ap * Bp + An * Bn, bits, count)
    minus = _unpack(Ap * Bn + An * Bp, bits, count)
    return [p - m for p, m in zip(plus, minus)]


class Poly:
    """Dense univariate polynomial over Q; immutable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _strip([_as_fraction(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs: tuple) -> Poly:
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def constant(cls, c) -> Poly:
        c = _as_fraction(c)
        return cls._raw((c,) if c else ())

    @classmethod
    def monomial(cls, k: int, c=1) -> Poly:
        c = _as_fraction(c)
        return cls._raw((_ZERO,) * k + (c,) if c else ())

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    # ring operations -------------------------------------------------------

    def __neg__(self) -> Poly:
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._raw(_strip(out))

    __radd__ = __add__

    def __sub__(self, other) -> Poly:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return (-self) + other

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly._raw(())
            return Poly._raw(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(())
        if len(b) == 1:
            return self * b[0]
        if len(a) == 1:
            return other * a[0]
        da = lcm(*(c.denominator for c in a))
        db = lcm(*(c.denominator for c in b))
        ia = [c.numerator * (da // c.denominator) for c in a]
        ib = [c.numerator * (db // c.denominator) for c in b]
        den = da * db
        return Poly._raw(_strip([Fraction(v, den) for v in _int_conv(ia, ib)]))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __divmod__(self, other) -> tuple[Poly, Poly]:
        return poly_divrem(self, _coerce(other))

    def __floordiv__(self, other) -> Poly:
        return poly_divrem(self, _coerce(other))[0]

    def __mod__(self, other) -> Poly:
        return poly_divrem(self, _coerce(other))[1]

    # misc ------------------------------------------------------------------

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return Poly._raw(tuple(c / lead for c in self.coeffs))

    def derivative(self) -> Poly:
        return Poly._raw(_strip([c * i for i, c in enumerate(self.coeffs)][1:]))

    def __call__(self, t):
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def compose(self, inner):
        """``self(inner)`` for a Poly or RatFunc ``inner`` (Horner scheme)."""
        acc = Poly() if isinstance(inner, Poly) else RatFunc(Poly())
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc


def _coerce(v):
    if isinstance(v, Poly):
        return v
    if isinstance(v, (int, Fraction)):
        return Poly.constant(v)
    return NotImplemented


X = Poly._raw((_ZERO, _ONE))
ONE = Poly._raw((_ONE,))
ZERO = Poly._raw(())


def poly_divrem(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDenominator("polynomial division by zero")
    if a.degree < b.degree:
        return ZERO, a
    bc = b.coeffs
    db = len(bc) - 1
    inv_lead = 1 / bc[-1]
    rem = list(a.coeffs)
    quot = [_ZERO] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if not c:
            continue
        q = c * inv_lead
        quot[k - db] = q
        off = k - db
        for j in range(db):
            if bc[j]:
                rem[off + j] -= q * bc[j]
        rem[k] = _ZERO
    return Poly._raw(_strip(quot)), Poly._raw(_strip(rem[:db]))


def poly_derivative(p: Poly) -> Poly:
    return p.derivative()


def _primitive(v: list[int]) -> list[int]:
    g = gcd(*v)
    if v[-1] < 0:
        g = -g
    return [c // g for c in v]


def _int_primitive(p: Poly) -> list[int]:
    """The primitive integer polynomial with positive lead proportional to p."""
    d = lcm(*(c.denominator for c in p.coeffs))
    return _primitive([c.numerator * (d // c.denominator) for c in p.coeffs])


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """A nonzero constant multiple of (a mod b), kept primitive along the way."""
    r = a[:]
    lb, db = b[-1], len(b) - 1
    while len(r) > db:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for j in range(db):
            r[shift + j] -= c * b[j]
        r.pop()
        while r and not r[-1]:
            r.pop()
        if r:
            r = _primitive(r)
    return r


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd via the primitive remainder sequence over the integers."""
    if not a and not b:
        raise BothZero("gcd(0, 0) is undefined")
    if not a or not b:
        return (a or b).monic()
    if a.degree == 0 or b.degree == 0:
        return ONE
    u, v = _int_primitive(a), _int_primitive(b)
    if len(u) < len(v):
        u, v = v, u
    while v:
        u, v = v, _int_prem(u, v)
    lead = u[-1]
    return Poly._raw(tuple(Fraction(c, lead) for c in u))


def squarefree_part(p: Poly) -> Poly:
    if not p:
        raise ZeroInput("squarefree part of the zero polynomial")
    if p.degree <= 0:
        return ONE
    return (p // poly_gcd(p, p.derivative())).monic()


def squarefree_factors(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's decomposition: monic p = prod f_i^i with f_i squarefree, pairwise coprime."""
    if not p:
        raise ZeroInput("squarefree decomposition of the zero polynomial")
    p = p.monic()
    if p.degree <= 0:
        return []
    out = []
    dp = p.derivative()
    g = poly_gcd(p, dp)
    b = p // g
    c = dp // g
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b // a
        c = d // a
        d = c - b.derivative()
        i += 1
    return out


class RatFunc:
    """Element of Q(x) in canonical form: gcd(num, den) = 1 and den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num = num if isinstance(num, Poly) else Poly.constant(num)
        den = den if isinstance(den, Poly) else Poly.constant(den)
        if not den:
            raise ZeroDenominator("rational function with zero denominator")
        if not num:
            self.num, self.den = ZERO, ONE
            return
        if den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
        lead = den.lc
        if lead != 1:
            num = num * (1 / lead)
            den = den.monic()
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> RatFunc:
        f = object.__new__(cls)
        f.num, f.den = num, den
        return f

    @classmethod
    def constant(cls, c) -> RatFunc:
        return cls._raw(Poly.constant(c), ONE)

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFunc):
            return self.num.coeffs == other.num.coeffs and self.den.coeffs == other.den.coeffs
        if isinstance(other, (Poly, int, Fraction)):
            return self == as_ratfunc(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("RatFunc", self.num.coeffs, self.den.coeffs))

    def __repr__(self) -> str:
        return f"RatFunc({str(self)!r})"

    def __str__(self) -> str:
        return format_ratfunc(self)

    def key(self) -> tuple:
        """Coefficient-wise serialization of the canonical form."""
        return (self.num.coeffs, self.den.coeffs)

    def __neg__(self) -> RatFunc:
        return RatFunc._raw(-self.num, self.den)

    def __add__(self, other) -> RatFunc:
        return rf_add(self, other)

    __radd__ = __add__

    def __sub__(self, other) -> RatFunc:
        return rf_sub(self, other)

    def __rsub__(self, other) -> RatFunc:
        return rf_sub(other, self)

    def __mul__(self, other) -> RatFunc:
        return rf_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RatFunc:
        return rf_div(self, other)

    def __rtruediv__(self, other) -> RatFunc:
        return rf_div(other, self)

    def __pow__(self, k: int) -> RatFunc:
        return rf_pow(self, k)


def as_ratfunc(v) -> RatFunc:
    if isinstance(v, RatFunc):
        return v
    if isinstance(v, Poly):
        return RatFunc._raw(v, ONE)
    if isinstance(v, (int, Fraction)):
        return RatFunc.constant(v)
    raise TypeError(f"cannot interpret {type(v).__name__} as a rational function")


def ratfunc_new(num: Poly, den: Poly) -> RatFunc:
    return RatFunc(num, den)


def rf_add(f, g) -> RatFunc:
    f, g = as_ratfunc(f), as_ratfunc(g)
    if f.den.degree == 0 and g.den.degree == 0:
        return RatFunc._raw(f.num + g.num, ONE)
    if f.den == g.den:
        return RatFunc(f.num + g.num, f.den)
    return RatFunc(f.num * g.den + g.num * f.den, f.den * g.den)


def rf_sub(f, g) -> RatFunc:
    return rf_add(f, -as_ratfunc(g))


def rf_mul(f, g) -> RatFunc:
    f, g = as_ratfunc(f), as_ratfunc(g)
    if not f.num or not g.num:
        return RatFunc._raw(ZERO, ONE)
    if f.den.degree == 0 and g.den.degree == 0:
        return RatFunc._raw(f.num * g.num, ONE)
    # cross-cancel so the product is already reduced
    g1 = poly_gcd(f.num, g.den)
    g2 = poly_gcd(g.num, f.den)
    num = (f.num // g1) * (g.num // g2)
    den = (f.den // g2) * (g.den // g1)
    lead = den.lc
    if lead != 1:
        num, den = num * (1 / lead), den.monic()
    return RatFunc._raw(num, den)


def rf_div(f, g) -> RatFunc:
    g = as_ratfunc(g)
    if not g.num:
        raise ZeroDenominator("division by the zero rational function")
    return rf_mul(f, rf_inv(g))


def rf_inv(f) -> RatFunc:
    f = as_ratfunc(f)
    if not f.num:
        raise ZeroDenominator("inverse of zero")
    lead = f.num.lc
    return RatFunc._raw(f.den * (1 / lead), f.num.monic())


def rf_pow(f, k: int) -> RatFunc:
    f = as_ratfunc(f)
    if k == 0:
        return RatFunc.constant(1)
    if k < 0:
        if not f.num:
            raise ZeroToNegativePower("zero raised to a negative power")
        f, k = rf_inv(f), -k
    # coprime num/den stay coprime under powers; den stays monic
    return RatFunc._raw(f.num ** k, f.den ** k)


def rf_eq(f, g) -> bool:
    f, g = as_ratfunc(f), as_ratfunc(g)
    return f.num.coeffs == g.num.coeffs and f.den.coeffs == g.den.coeffs


# printing -------------------------------------------------------------------


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: Poly) -> str:
    if not p.coeffs:
        return "0"
    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if not mono:
            body = _format_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_format_coeff(a)}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _is_atom(text: str) -> bool:
    return not any(ch in text for ch in " +-/*")


def format_ratfunc(f: RatFunc) -> str:
    num = format_poly(f.num)
    if f.den.degree == 0:
        return num
    den = format_poly(f.den)
    if not _is_atom(num):
        num = f"({num})"
    if not _is_atom(den):
        den = f"({den})"
    return f"{num}/{den}"
