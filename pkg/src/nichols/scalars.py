"""
Exact arithmetic in cyclotomic fields Q(zeta_n) and q-combinatorics.

A :class:`Scalar` is a polynomial in ``z = zeta_n`` of degree below
``phi(n)``, reduced modulo the n-th cyclotomic polynomial.  Internally the
coefficients are kept as integer numerators over one positive common
denominator, which keeps multiplication in plain integer arithmetic.

    >>> i = zeta(4)
    >>> i * i
    Scalar('-1', 4)
    >>> parse_scalar("1/2*z^2 + 1", 8)
    Scalar('1 + 1/2*z^2', 8)
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import ConductorMismatch, ScalarSyntaxError

INFINITE = math.inf
"""Marker returned by :func:`root_of_unity_order` when no order is found."""

UnityOrder = Union[int, float]

Rational = Union[int, Fraction]


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # integer division by a monic polynomial, coefficients low -> high
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    lead = len(den) - 1
    for k in range(len(num) - 1, lead - 1, -1):
        c = num[k]
        if c:
            q[k - lead] = c
            for t, d in enumerate(den):
                num[k - lead + t] -= c * d
    rem = num[:lead] if lead else [0]
    return q, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


class _Field:
    """Per-conductor tables: degree and reductions of z^k for k < 2*phi - 1."""

    def __init__(self, n: int) -> None:
        self.n = n
        poly = cyclotomic_polynomial(n)
        self.phi = phi = len(poly) - 1
        red: list[tuple[tuple[int, int], ...]] = []
        # z^phi = -(poly[0] + ... + poly[phi-1] z^(phi-1))
        cur = [0] * phi
        cur[phi - 1] = 1  # z^(phi-1)
        for _ in range(phi, 2 * phi - 1):
            top = cur[phi - 1]
            nxt = [0] + cur[:-1]
            if top:
                for t in range(phi):
                    nxt[t] -= top * poly[t]
            cur = nxt
            red.append(tuple((t, v) for t, v in enumerate(cur) if v))
        self.red = red


@lru_cache(maxsize=None)
def _field(n: int) -> _Field:
    return _Field(n)


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-x for x in num]
        den = -den
    g = math.gcd(den, *num)
    if g > 1:
        num = [x // g for x in num]
        den //= g
    return tuple(num), den


class Scalar:
    """Element of Q(zeta_n); immutable and hashable."""

    __slots__ = ("conductor", "num", "den")

    def __init__(self, conductor: int, num: tuple[int, ...], den: int = 1) -> None:
        # callers outside this module should use the classmethods
        self.conductor = conductor
        self.num = num
        self.den = den

    # -- construction -------------------------------------------------
    @classmethod
    def from_rational(cls, value: Rational, conductor: int = 1) -> Scalar:
        value = Fraction(value)
        phi = _field(conductor).phi
        num = [0] * phi
        num[0] = value.numerator
        return cls(conductor, tuple(num), value.denominator)

    @classmethod
    def from_coeffs(cls, coeffs, conductor: int) -> Scalar:
        """Build from rational coefficients of 1, z, z^2, ... (any length)."""
        F = _field(conductor)
        fr = [Fraction(c) for c in coeffs]
        den = math.lcm(1, *(f.denominator for f in fr))
        raw = [int(f * den) for f in fr]
        return cls._from_raw(F, raw, den)

    @classmethod
    def _from_raw(cls, F: _Field, raw: list[int], den: int) -> Scalar:
        phi = F.phi
        if len(raw) > phi:
            out = list(raw[:phi])
            # reduce powers >= phi one at a time, highest first
            extra = list(raw[phi:])
            poly = cyclotomic_polynomial(F.n)
            full = out + extra
            for k in range(len(full) - 1, phi - 1, -1):
                c = full[k]
                if c:
                    full[k] = 0
                    for t in range(phi):
                        full[k - phi + t] -= c * poly[t]
            out = full[:phi]
        else:
            out = list(raw) + [0] * (phi - len(raw))
        num, den = _normalize(out, den)
        return cls(F.n, num, den)

    @classmethod
    def zero(cls, conductor: int = 1) -> Scalar:
        return cls(conductor, (0,) * _field(conductor).phi, 1)

    @classmethod
    def one(cls, conductor: int = 1) -> Scalar:
        return cls.from_rational(1, conductor)

    # -- views --------------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def __bool__(self) -> bool:
        return any(self.num)

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.conductor, self.num, self.den))

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __repr__(self) -> str:
        return f"Scalar({str(self)!r}, {self.conductor})"

    def __str__(self) -> str:
        return format_scalar(self)

    def __reduce__(self):
        return (Scalar, (self.conductor, self.num, self.den))

    # -- arithmetic ---------------------------------------------------
    def _coerce(self, other) -> Scalar:
        if isinstance(other, Scalar):
            if other.conductor != self.conductor:
                raise ConductorMismatch(
                    f"conductor {self.conductor} vs {other.conductor}")
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar.from_rational(other, self.conductor)
        return NotImplemented

    def __add__(self, other) -> Scalar:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            num = [a + b for a, b in zip(self.num, other.num)]
            den = self.den
        else:
            da, db = self.den, other.den
            num = [a * db + b * da for a, b in zip(self.num, other.num)]
            den = da * db
        n, d = _normalize(num, den)
        return Scalar(self.conductor, n, d)

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar(self.conductor, tuple(-x for x in self.num), self.den)

    def __pos__(self) -> Scalar:
        return self

    def __sub__(self, other) -> Scalar:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Scalar:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> Scalar:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.num, other.num
        phi = len(a)
        if phi == 1:
            n, d = _normalize([a[0] * b[0]], self.den * other.den)
            return Scalar(self.conductor, n, d)
        prod = [0] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        out = prod[:phi]
        red = _field(self.conductor).red
        for k in range(phi, 2 * phi - 1):
            v = prod[k]
            if v:
                for t, r in red[k - phi]:
                    out[t] += v * r
        n, d = _normalize(out, self.den * other.den)
        return Scalar(self.conductor, n, d)

    __rmul__ = __mul__

    def inv(self) -> Scalar:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        inv_num, inv_den = _inverse_numerator(self.conductor, self.num)
        # (num/den)^-1 = den * inv_num / inv_den
        n, d = _normalize([x * self.den for x in inv_num], inv_den)
        return Scalar(self.conductor, n, d)

    def __truediv__(self, other) -> Scalar:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other) -> Scalar:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, e: int) -> Scalar:
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inv() ** (-e)
        result = Scalar.one(self.conductor)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result


@lru_cache(maxsize=4096)
def _inverse_numerator(n: int, num: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Inverse of the integer polynomial ``num`` mod Phi_n as (numerators, den)."""
    F = _field(n)
    phi = F.phi
    unit = Scalar(n, num, 1)
    # columns of the multiplication-by-num matrix
    cols = []
    for k in range(phi):
        basis = [0] * phi
        basis[k] = 1
        cols.append((unit * Scalar(n, tuple(basis), 1)).num)
    # solve M x = e_0 over Q
    aug = [[Fraction(cols[j][i]) for j in range(phi)] + [Fraction(int(i == 0))]
           for i in range(phi)]
    for c in range(phi):
        piv = next(r for r in range(c, phi) if aug[r][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        pv = aug[c][c]
        aug[c] = [v / pv for v in aug[c]]
        for r in range(phi):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[c])]
    sol = [aug[r][phi] for r in range(phi)]
    den = math.lcm(1, *(s.denominator for s in sol))
    return tuple(int(s * den) for s in sol), den


def zeta(n: int, k: int = 1, conductor: int | None = None) -> Scalar:
    """``zeta_n^k`` inside Q(zeta_conductor) (conductor defaults to n)."""
    conductor = n if conductor is None else conductor
    if conductor % n:
        raise ConductorMismatch(f"zeta_{n} does not live in Q(zeta_{conductor})")
    e = (k % n) * (conductor // n)
    raw = [0] * (e + 1)
    raw[e] = 1
    return Scalar._from_raw(_field(conductor), raw, 1)


def as_scalar(value, conductor: int) -> Scalar:
    if isinstance(value, Scalar):
        if value.conductor != conductor:
            raise ConductorMismatch(f"conductor {value.conductor} vs {conductor}")
        return value
    if isinstance(value, str):
        return parse_scalar(value, conductor)
    return Scalar.from_rational(value, conductor)


def embed(s: Scalar, conductor: int) -> Scalar:
    """Image of ``s`` under Q(zeta_n) -> Q(zeta_m), zeta_n -> zeta_m^(m/n)."""
    if conductor == s.conductor:
        return s
    if conductor % s.conductor:
        raise ConductorMismatch(
            f"Q(zeta_{s.conductor}) does not embed in Q(zeta_{conductor})")
    step = conductor // s.conductor
    raw = [0] * ((len(s.num) - 1) * step + 1)
    for k, c in enumerate(s.num):
        raw[k * step] = c
    return Scalar._from_raw(_field(conductor), raw, s.den)


# ---------------------------------------------------------------------
# text form
# ---------------------------------------------------------------------

_TOKEN = re.compile(r"(\d+)|([z+\-*/^])")


def parse_scalar(text: str, conductor: int) -> Scalar:
    """Parse the scalar grammar; ``z`` stands for ``zeta_conductor``.

    expr := term (('+'|'-') term)* ; term := coeff ('*' zpow)? | zpow ;
    zpow := 'z' ('^' uint)? ; coeff := '-'? uint ('/' uint)?
    """
    if conductor < 1:
        raise ValueError("conductor must be positive")
    src = re.sub(r"\s+", "", text)
    tokens: list[str] = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m:
            raise ScalarSyntaxError(f"unexpected character {src[pos]!r} in {text!r}")
        tokens.append(m.group(0))
        pos = m.end()
    if not tokens:
        raise ScalarSyntaxError("empty scalar expression")

    F = _field(conductor)
    idx = 0

    def peek() -> str | None:
        return tokens[idx] if idx < len(tokens) else None

    def take(expected: str | None = None) -> str:
        nonlocal idx
        tok = peek()
        if tok is None or (expected is not None and tok != expected):
            raise ScalarSyntaxError(f"expected {expected or 'token'} in {text!r}")
        idx += 1
        return tok

    def uint() -> int:
        tok = take()
        if not tok.isdigit():
            raise ScalarSyntaxError(f"expected an unsigned integer in {text!r}")
        return int(tok)

    def zpow() -> int:
        take("z")
        if peek() == "^":
            take("^")
            return uint()
        return 1

    def term() -> tuple[Fraction, int]:
        if peek() == "z":
            return Fraction(1), zpow()
        sign = 1
        if peek() == "-":
            take("-")
            sign = -1
        num = uint()
        den = 1
        if peek() == "/":
            take("/")
            den = uint()
            if den == 0:
                raise ScalarSyntaxError(f"division by zero in {text!r}")
        power = 0
        if peek() == "*":
            take("*")
            power = zpow()
        return Fraction(sign * num, den), power

    terms = [term()]
    while peek() is not None:
        op = take()
        if op not in "+-":
            raise ScalarSyntaxError(f"unexpected {op!r} in {text!r}")
        c, p = term()
        terms.append((c if op == "+" else -c, p))

    top = max(p for _, p in terms)
    coeffs = [Fraction(0)] * (top + 1)
    for c, p in terms:
        coeffs[p] += c
    den = math.lcm(1, *(c.denominator for c in coeffs))
    return Scalar._from_raw(F, [int(c * den) for c in coeffs], den)


def format_scalar(s: Scalar) -> str:
    """Canonical text in the scalar grammar (round-trips through parse_scalar)."""
    parts: list[str] = []
    for k, c in enumerate(s.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        zp = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
        if not zp:
            body = str(mag)
        elif mag == 1:
            body = zp
        else:
            body = f"{mag}*{zp}"
        if not parts:
            if c < 0:
                body = f"-{mag}*{zp}" if zp else f"-{mag}"
            parts.append(body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"


# ---------------------------------------------------------------------
# roots of unity and q-numbers
# ---------------------------------------------------------------------

def root_of_unity_order(s: Scalar, bound: int = 1000) -> UnityOrder:
    """Smallest ``N <= bound`` with ``s^N = 1``, else :data:`INFINITE`.

    The roots of unity of Q(zeta_n) are exactly those of order dividing
    lcm(2, n), so only divisors of that number are tried.
    """
    if s.is_zero():
        raise ValueError("zero has no multiplicative order")
    if bound < 1:
        raise ValueError("bound must be positive")
    L = math.lcm(2, s.conductor)
    if s ** L != 1:
        return INFINITE
    for d in range(1, min(L, bound) + 1):
        if L % d == 0 and s ** d == 1:
            return d
    return INFINITE


def _as_q(q) -> Scalar:
    return q if isinstance(q, Scalar) else Scalar.from_rational(q)


def q_number(n: int, q) -> Scalar:
    """(n)_q = 1 + q + ... + q^(n-1)."""
    q = _as_q(q)
    total = Scalar.zero(q.conductor)
    term = Scalar.one(q.conductor)
    for _ in range(n):
        total = total + term
        term = term * q
    return total


def q_factorial(n: int, q) -> Scalar:
    q = _as_q(q)
    out = Scalar.one(q.conductor)
    for j in range(1, n + 1):
        out = out * q_number(j, q)
    return out


def q_binomial(n: int, i: int, q) -> Scalar:
    """Gaussian binomial via the q-Pascal rule; never divides."""
    if not 0 <= i <= n:
        raise ValueError("need 0 <= i <= n")
    q = _as_q(q)
    one = Scalar.one(q.conductor)
    powers = [one]
    for _ in range(n):
        powers.append(powers[-1] * q)
    row = [one]
    for m in range(1, n + 1):
        nxt = [one] * (m + 1)
        for j in range(1, m):
            # binom(m, j) = binom(m-1, j-1) + q^j binom(m-1, j)
            nxt[j] = row[j - 1] + powers[j] * row[j]
        row = nxt
    return row[i]
