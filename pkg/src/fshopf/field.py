"""Exact scalars over Q and Q(i), polynomials, and root extraction.

Rationals are plain :class:`fractions.Fraction`. A :class:`GaussianRational`
is a pair of them. Everything is immutable and canonical, so equality is
structural and hashing is safe.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import reduce
from numbers import Rational as _RationalABC

from .errors import InputError, NonSplitOverField

Rational = Fraction

FIELDS = ("Q", "Qi")


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"not an exact rational: {x!r}")


class GaussianRational:
    """Exact a + b*i with rational a, b."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "GaussianRational":
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    @staticmethod
    def coerce(x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, str):
            return parse_scalar(x)
        return GaussianRational._raw(_as_fraction(x), _ZERO_Q)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        if not self.im and not other.im:
            return GaussianRational._raw(self.re + other.re, _ZERO_Q)
        return GaussianRational._raw(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        if not self.im and not other.im:
            return GaussianRational._raw(self.re - other.re, _ZERO_Q)
        return GaussianRational._raw(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational._raw(a * c, _ZERO_Q)
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        a, b = self.re, self.im
        if not b:
            if not a:
                raise ZeroDivisionError("division by zero in Q(i)")
            return GaussianRational._raw(1 / a, _ZERO_Q)
        n = a * a + b * b
        return GaussianRational._raw(a / n, -b / n)

    def __truediv__(self, other):
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except TypeError:
                return NotImplemented
        if not other.im and not self.im:
            if not other.re:
                raise ZeroDivisionError("division by zero in Q(i)")
            return GaussianRational._raw(self.re / other.re, _ZERO_Q)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    # predicates -----------------------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, _RationalABC)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    @property
    def is_rational(self) -> bool:
        return not self.im

    @property
    def is_integer(self) -> bool:
        return not self.im and self.re.denominator == 1

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)

    def __reduce__(self):
        return (GaussianRational, (self.re, self.im))


_ZERO_Q = Fraction(0)
ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)

GR = GaussianRational


def arithmetic(a, b, op: str) -> GaussianRational:
    a, b = GR.coerce(a), GR.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def conjugate(a) -> GaussianRational:
    return GR.coerce(a).conjugate()


# scalar text grammar -------------------------------------------------------

_RAT = r"[+-]?\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^(?:(?P<re>{_RAT})(?:(?P<sign>[+-])(?P<im>\d+(?:/\d+)?)i)?"
    rf"|(?P<imonly>{_RAT})i)$"
)


def _parse_rat(text: str) -> Fraction:
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise InputError(f"zero denominator in scalar {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def parse_scalar(text: str) -> GaussianRational:
    """Parse the bit-exact scalar grammar, e.g. ``"1/2"``, ``"1/2+1/2i"``, ``"-1i"``."""
    if not isinstance(text, str):
        raise InputError(f"scalar must be a string, got {type(text).__name__}")
    m = _SCALAR_RE.match(text.strip())
    if m is None:
        raise InputError(f"malformed scalar {text!r}")
    if m.group("imonly") is not None:
        return GR(0, _parse_rat(m.group("imonly")))
    re_part = _parse_rat(m.group("re"))
    if m.group("im") is None:
        return GR(re_part, 0)
    im_part = _parse_rat(m.group("im"))
    if m.group("sign") == "-":
        im_part = -im_part
    return GR(re_part, im_part)


def _fmt_rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(a) -> str:
    a = GR.coerce(a)
    if not a.im:
        return _fmt_rat(a.re)
    if not a.re:
        return f"{_fmt_rat(a.im)}i"
    sign = "+" if a.im > 0 else "-"
    return f"{_fmt_rat(a.re)}{sign}{_fmt_rat(abs(a.im))}i"


# polynomials ---------------------------------------------------------------


class Polynomial:
    """Univariate polynomial over Q(i); coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [GR.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots) -> "Polynomial":
        p = cls([1])
        for r in roots:
            p = p * cls([-GR.coerce(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> GaussianRational:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial([GR.coerce(other)])
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (ZERO,) * (n - len(self.coeffs))
        b = other.coeffs + (ZERO,) * (n - len(other.coeffs))
        return Polynomial([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            other = GR.coerce(other)
            return Polynomial([c * other for c in self.coeffs])
        if not self or not other:
            return Polynomial([])
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv_lead = other.lead.inverse()
        quot = [ZERO] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] * inv_lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return Polynomial(quot), Polynomial(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Polynomial":
        if not self:
            return self
        inv = self.lead.inverse()
        return Polynomial([c * inv for c in self.coeffs])

    def derivative(self) -> "Polynomial":
        return Polynomial([c * k for k, c in enumerate(self.coeffs)][1:])

    def conjugate(self) -> "Polynomial":
        return Polynomial([c.conjugate() for c in self.coeffs])

    @property
    def is_rational(self) -> bool:
        return all(c.is_rational for c in self.coeffs)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"

    def __str__(self):
        if not self:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if c.is_rational:
                sign = "-" if c.re < 0 else "+"
                mag = format_scalar(abs(c.re))
                body = mag if (mono == "" or mag != "1") else ""
            else:
                sign = "+"
                body = f"({format_scalar(c)})"
            if body and mono:
                body = body + "*" + mono
            elif mono:
                body = mono
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd (zero if both are zero)."""
    while q:
        p, q = q, p % q
    return p.monic()


def squarefree_part(p: Polynomial) -> Polynomial:
    g = poly_gcd(p, p.derivative())
    return (p // g).monic()


def _divisors(n: int) -> list[int]:
    from sympy import divisors

    return [int(d) for d in divisors(abs(n))]


def _integer_primitive(p: Polynomial) -> list[int]:
    """Scale a rational polynomial to a primitive integer coefficient list."""
    dens = [c.re.denominator for c in p.coeffs]
    lcm = reduce(lambda a, b: a * b // math.gcd(a, b), dens, 1)
    ints = [int(c.re * lcm) for c in p.coeffs]
    g = reduce(math.gcd, ints, 0)
    if ints[-1] < 0:
        g = -g
    return [c // g for c in ints]


def _rational_roots(p: Polynomial) -> list[GaussianRational]:
    roots = []
    while p.degree >= 1 and not p.coeffs[0]:
        roots.append(ZERO)
        p = p // Polynomial([0, 1])
    if p.degree < 1:
        return roots
    a = _integer_primitive(p)
    for num in _divisors(a[0]):
        for den in _divisors(a[-1]):
            if math.gcd(num, den) != 1:
                continue
            for s in (1, -1):
                r = GR(Fraction(s * num, den))
                if not p(r):
                    roots.append(r)
    return roots


def _gaussian_quadratic_factors(p: Polynomial) -> list[Polynomial]:
    """Primitive integer quadratics c x^2 + d x + f dividing ``p`` whose roots lie in Q(i) \\ Q.

    ``p`` is rational with no rational roots. A non-real root pair has
    product f/c > 0 and discriminant d^2 - 4cf = -(square).
    """
    found = []
    a = _integer_primitive(p)
    for c in _divisors(a[-1]):
        for f in _divisors(a[0]):
            bound = 4 * c * f
            dmax = math.isqrt(bound - 1) if bound > 1 else 0
            for d in range(-dmax, dmax + 1):
                disc = bound - d * d
                if disc <= 0:
                    continue
                s = math.isqrt(disc)
                if s * s != disc or math.gcd(math.gcd(c, abs(d)), f) != 1:
                    continue
                q = Polynomial([f, d, c])
                if not (p % q):
                    found.append(q)
    return found


def _roots_of_rational(p: Polynomial, field: str) -> tuple[list[GaussianRational], Polynomial]:
    """Distinct roots of squarefree rational ``p`` in the field, plus the unsplit cofactor."""
    roots = _rational_roots(p)
    rest = p
    for r in roots:
        rest = rest // Polynomial([-r, 1])
    if field == "Qi" and rest.degree >= 2:
        for q in _gaussian_quadratic_factors(rest):
            if rest.degree < 2 or rest % q:
                continue
            c, d, f = q.coeffs[2].re, q.coeffs[1].re, q.coeffs[0].re
            s = Fraction(math.isqrt(int(4 * c * f - d * d)))
            roots.append(GR(-d / (2 * c), s / (2 * c)))
            roots.append(GR(-d / (2 * c), -s / (2 * c)))
            rest = rest // q
    return roots, rest.monic()


def _root_key(r: GaussianRational):
    return (r.re, r.im)


def split_into_linear_factors(p: Polynomial, field: str = "Qi") -> list[tuple[GaussianRational, int]]:
    """All roots of ``p`` with multiplicity, provided ``p`` splits over ``field``.

    Raises :class:`NonSplitOverField` naming the offending factor otherwise.
    """
    if field not in FIELDS:
        raise ValueError(f"unknown field {field!r}")
    if not p or p.degree < 1:
        raise ValueError("need a nonzero polynomial of degree >= 1")
    if field == "Q" and not p.is_rational:
        raise ValueError("polynomial has non-rational coefficients over Q")
    sq = squarefree_part(p)
    target = sq if sq.is_rational else (sq * sq.conjugate()).monic()
    candidates, _ = _roots_of_rational(squarefree_part(target), field)
    roots = [r for r in candidates if not sq(r)]
    if len(roots) != sq.degree:
        leftover = sq
        for r in roots:
            leftover = leftover // Polynomial([-r, 1])
        raise NonSplitOverField(
            f"polynomial {p} does not split over {field}: factor {leftover.monic()} has no roots there",
            polynomial=p,
        )
    out = []
    for r in sorted(set(roots), key=_root_key):
        mult, q = 0, p
        lin = Polynomial([-r, 1])
        while q.degree >= 1:
            quo, rem = divmod(q, lin)
            if rem:
                break
            mult, q = mult + 1, quo
        out.append((r, mult))
    return out
