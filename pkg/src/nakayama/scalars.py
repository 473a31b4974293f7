"""Exact scalar arithmetic over Q, Q(q) and cyclotomic fields Q(zeta_l).

Every coefficient in the whole package is one of

* ``fractions.Fraction``            -- the rationals,
* :class:`RatFunc`                  -- rational functions in the parameter q,
* :class:`Cyclo`                    -- elements of Q(zeta_l), l odd > 2,

and all scalars appearing in one computation belong to a single field,
described by one of the field tags :data:`QQ`, :data:`QQ_q` or
:class:`CyclotomicField`.  Equality of scalars is exact equality of
canonical forms: rational functions keep a monic denominator coprime to
the numerator, cyclotomic elements are reduced modulo the l-th
cyclotomic polynomial.

Univariate polynomials are plain tuples of Fractions indexed by degree;
the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd


class DenominatorVanishes(ArithmeticError):
    """Raised when a rational function is specialized at a pole."""


_F0 = Fraction(0)
_F1 = Fraction(1)


# ---------------------------------------------------------------------------
# polynomial helpers (tuples of Fractions, index = degree, no trailing zeros)
# ---------------------------------------------------------------------------

def ptrim(cs):
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    return tuple(cs[:n])


def padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return ptrim(out)


def pneg(a):
    return tuple(-c for c in a)


def psub(a, b):
    return padd(a, pneg(b))


def pmul(a, b):
    if not a or not b:
        return ()
    out = [_F0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return ptrim(out)


def pscale(a, c):
    if not c:
        return ()
    return tuple(x * c for x in a)


def pdivmod(a, b):
    """Exact division with remainder over Q; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [_F0] * max(0, len(a) - len(b) + 1)
    r = list(a)
    inv = 1 / b[-1]
    while len(r) >= len(b):
        while r and not r[-1]:
            r.pop()
        if len(r) < len(b):
            break
        c = r[-1] * inv
        k = len(r) - len(b)
        q[k] = c
        for i, cb in enumerate(b):
            r[k + i] -= c * cb
        r.pop()
    return ptrim(q), ptrim(r)


def pmonic(a):
    if not a or a[-1] == 1:
        return a
    inv = 1 / a[-1]
    return tuple(c * inv for c in a)


def _primitive_int(a):
    """Scale a rational polynomial to a primitive integer tuple (content dropped)."""
    if not a:
        return ()
    lcm = 1
    for c in a:
        d = c.denominator
        lcm = lcm // _int_gcd(lcm, d) * d
    ints = [int(c * lcm) for c in a]
    g = 0
    for c in ints:
        g = _int_gcd(g, abs(c))
    if g > 1:
        ints = [c // g for c in ints]
    return tuple(ints)


def _iprem(a, b):
    """Pseudo-remainder of primitive integer polynomials, b nonzero."""
    r = list(a)
    lb = b[-1]
    while len(r) >= len(b):
        while r and not r[-1]:
            r.pop()
        if len(r) < len(b):
            break
        lr = r[-1]
        k = len(r) - len(b)
        r = [c * lb for c in r]
        for i, cb in enumerate(b):
            r[k + i] -= lr * cb
        r.pop()
    n = len(r)
    while n and not r[n - 1]:
        n -= 1
    return tuple(r[:n])


def _iprimitive(a):
    if not a:
        return ()
    g = 0
    for c in a:
        g = _int_gcd(g, abs(c))
    if g > 1:
        return tuple(c // g for c in a)
    return a


def pgcd(a, b):
    """Monic gcd over Q, via primitive-part/content Euclidean steps."""
    if not a:
        return pmonic(b)
    if not b:
        return pmonic(a)
    A = _primitive_int(a)
    B = _primitive_int(b)
    if len(A) < len(B):
        A, B = B, A
    while B:
        A, B = B, _iprimitive(_iprem(A, B))
    return pmonic(tuple(Fraction(c) for c in A))


def pxgcd(a, b):
    """Extended gcd over Q: returns (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = (_F1,), ()
    t0, t1 = (), (_F1,)
    while r1:
        q, r = pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1))
        t0, t1 = t1, psub(t0, pmul(q, t1))
    if not r0:
        return (), s0, t0
    lc = r0[-1]
    inv = 1 / lc
    return pmonic(r0), pscale(s0, inv), pscale(t0, inv)


def peval(a, x):
    """Evaluate by Horner; x may live in any ring accepting Fraction scalars."""
    acc = None
    for c in reversed(a):
        if acc is None:
            acc = x * 0 + c
        else:
            acc = acc * x + c
    return acc if acc is not None else x * 0


def poly_str(a, var):
    """Canonical human/machine readable form, terms by descending degree."""
    if not a:
        return "0"
    parts = []
    for d in range(len(a) - 1, -1, -1):
        c = a[d]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if d == 0:
            body = str(c)
        else:
            v = var if d == 1 else f"{var}^{d}"
            body = v if c == 1 else f"{c}*{v}"
        parts.append((sign, body))
    sign, body = parts[0]
    out = body if sign == "+" else "-" + body
    for sign, body in parts[1:]:
        out += sign + body
    return out


# ---------------------------------------------------------------------------
# rational functions in q
# ---------------------------------------------------------------------------

def _as_poly(x):
    if isinstance(x, Fraction):
        return (x,) if x else ()
    if isinstance(x, int):
        return (Fraction(x),) if x else ()
    raise TypeError(f"cannot coerce {x!r} into Q(q)")


class RatFunc:
    """An element of Q(q) in canonical form: monic denominator, coprime parts."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(_F1,), *, reduce=True):
        if not isinstance(num, tuple):
            num = _as_poly(num)
        elif num and not num[-1]:
            num = ptrim(num)
        if not isinstance(den, tuple):
            den = _as_poly(den)
        elif den and not den[-1]:
            den = ptrim(den)
        if not den:
            raise ZeroDivisionError("zero denominator in Q(q)")
        if reduce:
            num, den = self._reduce(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _reduce(num, den):
        if not num:
            return (), (_F1,)
        if len(den) == 1:
            if den[0] != 1:
                inv = 1 / den[0]
                num = pscale(num, inv)
            return num, (_F1,)
        # strip common powers of q cheaply before a gcd
        zn = 0
        while zn < len(num) and not num[zn]:
            zn += 1
        zd = 0
        while zd < len(den) and not den[zd]:
            zd += 1
        z = min(zn, zd)
        if z:
            num = num[z:]
            den = den[z:]
        g = pgcd(num, den)
        if len(g) > 1:
            num, _ = pdivmod(num, g)
            den, _ = pdivmod(den, g)
        if den[-1] != 1:
            inv = 1 / den[-1]
            num = pscale(num, inv)
            den = pscale(den, inv)
        return num, den

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.den == (_F1,) and self.num == _as_poly(other)
        return NotImplemented

    def __hash__(self):
        if self.den == (_F1,) and len(self.num) <= 1:
            return hash(self.num[0] if self.num else _F0)
        return hash((self.num, self.den))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.den == other.den:
            return RatFunc(padd(self.num, other.num), self.den)
        return RatFunc(
            padd(pmul(self.num, other.den), pmul(other.num, self.den)),
            pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(pneg(self.num), self.den, reduce=False)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return RatFunc((), (_F1,), reduce=False)
            return RatFunc(pscale(self.num, Fraction(other)), self.den, reduce=False)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return RatFunc(pmul(self.num, other.num), pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero in Q(q)")
        return RatFunc(pmul(self.num, other.den), pmul(self.den, other.num))

    def __rtruediv__(self, other):
        if not self.num:
            raise ZeroDivisionError("division by zero in Q(q)")
        return RatFunc(other) / self

    def __pow__(self, n):
        if n < 0:
            return (RatFunc(1) / self) ** (-n)
        out = RatFunc(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        n = poly_str(self.num, "q")
        if self.den == (_F1,):
            return n
        d = poly_str(self.den, "q")
        if len([c for c in self.num if c]) > 1:
            n = f"({n})"
        if len([c for c in self.den if c]) > 1:
            d = f"({d})"
        return f"{n}/{d}"


# ---------------------------------------------------------------------------
# cyclotomic fields
# ---------------------------------------------------------------------------

_cyclo_cache: dict[int, tuple] = {}


def cyclotomic_poly(l):
    """The l-th cyclotomic polynomial over Q as a coefficient tuple."""
    if l in _cyclo_cache:
        return _cyclo_cache[l]
    if l == 1:
        phi = (Fraction(-1), _F1)
    else:
        num = tuple([Fraction(-1)] + [_F0] * (l - 1) + [_F1])  # q^l - 1
        for d in range(1, l):
            if l % d == 0:
                num, r = pdivmod(num, cyclotomic_poly(d))
                assert not r
        phi = num
    _cyclo_cache[l] = phi
    return phi


class Cyclo:
    """An element of Q(zeta_l), stored reduced modulo the l-th cyclotomic polynomial."""

    __slots__ = ("level", "coeffs")

    def __init__(self, level, coeffs=(), *, reduce=True):
        self.level = level
        if not isinstance(coeffs, tuple):
            coeffs = _as_poly(coeffs)
        if reduce:
            phi = cyclotomic_poly(level)
            if len(coeffs) >= len(phi):
                _, coeffs = pdivmod(coeffs, phi)
        self.coeffs = ptrim(coeffs)

    def _lift(self, other):
        if isinstance(other, Cyclo):
            if other.level != self.level:
                raise ValueError("mixed cyclotomic levels")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclo(self.level, _as_poly(other), reduce=False)
        return None

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        o = self._lift(other) if not isinstance(other, Cyclo) else other
        if o is None:
            return NotImplemented
        return self.level == o.level and self.coeffs == o.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else _F0)
        return hash((self.level, self.coeffs))

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Cyclo(self.level, padd(self.coeffs, o.coeffs), reduce=False)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.level, pneg(self.coeffs), reduce=False)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Cyclo(self.level, psub(self.coeffs, o.coeffs), reduce=False)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclo(self.level, pscale(self.coeffs, Fraction(other)), reduce=False)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Cyclo(self.level, pmul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def inverse(self):
        if not self.coeffs:
            raise ZeroDivisionError("division by zero in cyclotomic field")
        phi = cyclotomic_poly(self.level)
        g, s, _ = pxgcd(self.coeffs, phi)
        if len(g) != 1:
            # cannot happen: phi is irreducible over Q
            raise ZeroDivisionError("non-invertible cyclotomic element")
        return Cyclo(self.level, pscale(s, 1 / g[0]))

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = Cyclo(self.level, (_F1,), reduce=False)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __repr__(self):
        return f"Cyclo({self.level}, {self})"

    def __str__(self):
        return poly_str(self.coeffs, "zeta")


# ---------------------------------------------------------------------------
# field tags
# ---------------------------------------------------------------------------

class RationalField:
    name = "Q"

    zero = _F0
    one = _F1

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into Q")

    def to_str(self, x):
        return str(x)

    def __repr__(self):
        return "QQ"


class FunctionField:
    name = "Q(q)"

    zero = RatFunc(0)
    one = RatFunc(1)
    q = RatFunc((_F0, _F1))

    def coerce(self, x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return RatFunc(x)
        raise TypeError(f"cannot coerce {x!r} into Q(q)")

    def to_str(self, x):
        return str(x)

    def __repr__(self):
        return "QQ_q"


class CyclotomicField:
    def __init__(self, level):
        if level <= 2 or level % 2 == 0:
            raise ValueError("cyclotomic level must be odd and > 2")
        self.level = level
        self.name = f"Q(zeta_{level})"
        self.zero = Cyclo(level, ())
        self.one = Cyclo(level, (_F1,), reduce=False)
        self.zeta = Cyclo(level, (_F0, _F1))

    def coerce(self, x):
        if isinstance(x, Cyclo):
            if x.level != self.level:
                raise TypeError("mixed cyclotomic levels")
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclo(self.level, _as_poly(x), reduce=False)
        raise TypeError(f"cannot coerce {x!r} into {self.name}")

    def to_str(self, x):
        return str(x)

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.level == self.level

    def __hash__(self):
        return hash(("cyclo", self.level))

    def __repr__(self):
        return f"CyclotomicField({self.level})"


QQ = RationalField()
QQ_q = FunctionField()


def field_by_name(name):
    if name == "Q":
        return QQ
    if name == "Q(q)":
        return QQ_q
    if name.startswith("Q(zeta_") and name.endswith(")"):
        return CyclotomicField(int(name[7:-1]))
    raise ValueError(f"unknown field {name!r}")


def specialize(f, level):
    """Evaluate f in Q(q) at a primitive level-th root of unity.

    The result lies in Q(zeta_level); raises DenominatorVanishes when the
    denominator has zeta_level as a root.
    """
    if level <= 2 or level % 2 == 0:
        raise ValueError("specialization level must be odd and > 2")
    fld = CyclotomicField(level)
    zeta = fld.zeta
    num = peval(f.num, zeta) if f.num else fld.zero
    den = peval(f.den, zeta)
    if not den:
        raise DenominatorVanishes(f"denominator {poly_str(f.den, 'q')} vanishes at zeta_{level}")
    return num * den.inverse()
