"""Exact arithmetic in cyclotomic fields Q(zeta_N).

A CycScalar is an element of Q[x]/Phi_N(x) with x mapped to a primitive
N-th root of unity; coefficients are exact rationals (gmpy2.mpq).  All
arithmetic is exact and canonical: products are always reduced modulo
Phi_N, and operands of different conductors are promoted to the least
common conductor first.  There is no floating point anywhere.

Arithmetic is exposed through the usual operators (+, -, *, /, **);
ints and Fractions coerce automatically.  Values are immutable after
construction and all operations are pure, so they are freely shareable
across threads.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd

from gmpy2 import mpq

_Q0 = mpq(0)
_Q1 = mpq(1)


class ScalarError(Exception):
    pass


class DivisionByZero(ScalarError, ZeroDivisionError):
    pass


class ConductorOverflow(ScalarError):
    pass


class NotADivisor(ScalarError):
    pass


class ScalarParseError(ScalarError, ValueError):
    pass


_conductor_limit = 10_000


def conductor_limit() -> int:
    return _conductor_limit


def set_conductor_limit(bound: int) -> None:
    """Set the largest allowed conductor (default 10^4)."""
    global _conductor_limit
    if bound < 1:
        raise ValueError("conductor limit must be positive")
    _conductor_limit = bound


def _poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(num, den):
    # exact division of rational polynomials, coefficient lists low->high
    num = list(num)
    q = [_Q0] * max(0, len(num) - len(den) + 1)
    inv_lead = 1 / den[-1]
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] * inv_lead
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    return q, _poly_trim(num)


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int):
    """Coefficients (low->high, monic) of the n-th cyclotomic polynomial."""
    if n == 1:
        return (-_Q1, _Q1)
    p = [-_Q1] + [_Q0] * (n - 1) + [_Q1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            p, rem = _poly_divmod(p, list(cyclotomic_poly(d)))
            assert not rem
    return tuple(p)


class _Field:
    """Cached reduction data for Q[x]/Phi_n."""

    def __init__(self, n: int):
        self.n = n
        self.phi = cyclotomic_poly(n)
        self.degree = len(self.phi) - 1
        # _rows[k] = coefficients of x^(degree+k) mod Phi_n
        base = [-c for c in self.phi[: self.degree]]
        self._rows = [tuple(base)]
        self.zero = CycScalar._make(n, (_Q0,) * self.degree)
        one = [_Q0] * self.degree
        one[0] = _Q1
        self.one = CycScalar._make(n, tuple(one))

    def row(self, k: int):
        # x^(degree+k) mod Phi_n
        while k >= len(self._rows):
            prev = self._rows[-1]
            shifted = [_Q0] + list(prev[:-1])
            top = prev[-1]
            if top:
                base = self._rows[0]
                for i in range(self.degree):
                    shifted[i] += top * base[i]
            self._rows.append(tuple(shifted))
        return self._rows[k]

    def reduce(self, coeffs):
        # coeffs: list of mpq of arbitrary length -> tuple of length degree
        d = self.degree
        out = list(coeffs[:d]) + [_Q0] * max(0, d - len(coeffs))
        for k in range(len(coeffs) - 1, d - 1, -1):
            c = coeffs[k]
            if c:
                row = self.row(k - d)
                for i in range(d):
                    out[i] += c * row[i]
        return tuple(out)


@lru_cache(maxsize=None)
def _field(n: int) -> _Field:
    return _Field(n)


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _as_mpq(value) -> mpq:
    if isinstance(value, (int, mpq)):
        return mpq(value)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    raise TypeError(f"cannot coerce {value!r} to an exact rational")


class CycScalar:
    """An exact element of Q(zeta_N), stored in the power basis mod Phi_N."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        if order < 1:
            raise ValueError("conductor must be positive")
        if order > _conductor_limit:
            raise ConductorOverflow(f"conductor {order} exceeds limit {_conductor_limit}")
        f = _field(order)
        coeffs = [_as_mpq(c) for c in coeffs]
        self.order = order
        self.coeffs = f.reduce(coeffs)

    @classmethod
    def _make(cls, order, coeffs):
        # internal: coeffs already reduced, skip validation
        self = object.__new__(cls)
        self.order = order
        self.coeffs = coeffs
        return self

    @classmethod
    def from_rational(cls, value) -> "CycScalar":
        return cls._make(1, (_as_mpq(value),))

    @classmethod
    def zero(cls) -> "CycScalar":
        return _field(1).zero

    @classmethod
    def one(cls) -> "CycScalar":
        return _field(1).one

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "CycScalar":
        """zeta_order ** power."""
        if order > _conductor_limit:
            raise ConductorOverflow(f"conductor {order} exceeds limit {_conductor_limit}")
        f = _field(order)
        power %= order
        mono = [_Q0] * (power + 1)
        mono[power] = _Q1
        return cls._make(order, f.reduce(mono))

    # -- conductor handling ------------------------------------------------

    def embed(self, new_order: int) -> "CycScalar":
        """The same element viewed in Q(zeta_new_order); order must divide it."""
        if new_order == self.order:
            return self
        if new_order % self.order:
            raise NotADivisor(f"{self.order} does not divide {new_order}")
        if new_order > _conductor_limit:
            raise ConductorOverflow(f"conductor {new_order} exceeds limit {_conductor_limit}")
        f = _field(new_order)
        step = new_order // self.order
        out = [_Q0] * ((len(self.coeffs) - 1) * step + 1)
        for i, c in enumerate(self.coeffs):
            if c:
                out[i * step] = c
        return CycScalar._make(new_order, f.reduce(out))

    def project(self, new_order: int) -> "CycScalar":
        """Rewrite in Q(zeta_new_order) if the value lies there (inverse of embed)."""
        if new_order == self.order:
            return self
        if self.order % new_order:
            raise NotADivisor(f"{new_order} does not divide {self.order}")
        small, big = _field(new_order), _field(self.order)
        cols = [CycScalar.zeta(new_order, j).embed(self.order).coeffs for j in range(small.degree)]
        # solve sum_j x_j * cols[j] = self.coeffs by Gaussian elimination
        rows = [[cols[j][i] for j in range(small.degree)] + [self.coeffs[i]] for i in range(big.degree)]
        piv = 0
        for col in range(small.degree):
            p = next((r for r in range(piv, len(rows)) if rows[r][col]), None)
            if p is None:
                continue
            rows[piv], rows[p] = rows[p], rows[piv]
            inv = 1 / rows[piv][col]
            rows[piv] = [c * inv for c in rows[piv]]
            for r in range(len(rows)):
                if r != piv and rows[r][col]:
                    c = rows[r][col]
                    rows[r] = [a - c * b for a, b in zip(rows[r], rows[piv])]
            piv += 1
        sol = [_Q0] * small.degree
        seen = 0
        for r in rows:
            lead = next((j for j in range(small.degree) if r[j]), None)
            if lead is None:
                if r[-1]:
                    raise ScalarError(f"value not representable in Q(zeta_{new_order})")
                continue
            sol[lead] = r[-1]
            seen += 1
        return CycScalar._make(new_order, small.reduce(sol))

    def _pair(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycScalar._make(1, (_as_mpq(other),))
        elif not isinstance(other, CycScalar):
            return None, None
        if self.order == other.order:
            return self, other
        m = _lcm(self.order, other.order)
        if m > _conductor_limit:
            raise ConductorOverflow(f"least common conductor {m} exceeds limit {_conductor_limit}")
        return self.embed(m), other.embed(m)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return CycScalar._make(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycScalar._make(self.order, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return CycScalar._make(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_mpq(other)
            return CycScalar._make(self.order, tuple(x * c for x in self.coeffs))
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        d = len(a.coeffs)
        out = [_Q0] * (2 * d - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        out[i + j] += x * y
        return CycScalar._make(a.order, _field(a.order).reduce(out))

    __rmul__ = __mul__

    def inv(self) -> "CycScalar":
        """Multiplicative inverse via extended Euclid against Phi_N."""
        if not self:
            raise DivisionByZero("inverse of zero")
        f = _field(self.order)
        # gcd(self, Phi) = 1 in Q[x]; track Bezout coefficient of self
        r0, r1 = list(f.phi), _poly_trim(list(self.coeffs))
        s0, s1 = [], [_Q1]
        while True:
            q, r = _poly_divmod(r0, r1)
            if not r:
                break
            s = list(s0)
            s += [_Q0] * (len(q) + len(s1) - 1 - len(s))
            for i, qi in enumerate(q):
                if qi:
                    for j, sj in enumerate(s1):
                        s[i + j] -= qi * sj
            r0, r1, s0, s1 = r1, r, s1, _poly_trim(s)
        if len(r1) != 1:
            raise ScalarError("non-invertible element (not coprime to Phi_N)")
        c = 1 / r1[0]
        return CycScalar._make(self.order, f.reduce([x * c for x in s1]))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_mpq(other)
            if not c:
                raise DivisionByZero("division by zero")
            return CycScalar._make(self.order, tuple(x / c for x in self.coeffs))
        a, b = self._pair(other)
        if a is None:
            return NotImplemented
        return a * b.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base = self.inv()
            exponent = -exponent
        result = _field(base.order).one
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -- predicates and conversions -----------------------------------------

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) or isinstance(other, CycScalar):
            a, b = self._pair(other)
            return a.coeffs == b.coeffs
        return NotImplemented

    __hash__ = None  # cross-conductor equality makes hashing a trap

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ScalarError(f"{self} is not rational")
        c = self.coeffs[0]
        return Fraction(c.numerator, c.denominator)

    def is_root_of_unity(self):
        """(True, k) with k the exact order if self^k = 1 for some k, else (False, None).

        Torsion units of Q(zeta_N) have order dividing lcm(2, N).
        """
        m = self.order if self.order % 2 == 0 else 2 * self.order
        if self ** m != 1:
            return False, None
        k = m
        for p in set(_prime_factors(m)):
            while k % p == 0 and self ** (k // p) == 1:
                k //= p
        return True, k

    # -- text form -----------------------------------------------------------

    def render(self) -> str:
        """Canonical text form: `a0 + a1*z + ... (z = zeta_N)`, rationals as p/q."""
        def rat(c):
            return str(c) if c.denominator != 1 else str(c.numerator)

        if self.is_rational():
            return rat(self.coeffs[0])
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            mag = rat(abs(c))
            body = mag if not mono else (mono if mag == "1" else f"{mag}*{mono}")
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts) + f" (z = zeta_{self.order})"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"CycScalar[{self.render()}]"


def _prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


_TERM_RE = re.compile(
    r"(?P<sign>[+-])?\s*(?:(?P<num>\d+(?:/\d+)?)\s*(?:\*\s*(?P<zn>z(?:\^(?P<kn>\d+))?))?"
    r"|(?P<z>z(?:\^(?P<k>\d+))?))\s*"
)
_SUFFIX_RE = re.compile(r"\(\s*z\s*=\s*zeta_(\d+)\s*\)\s*$")


def parse_scalar(text: str) -> CycScalar:
    """Parse the grammar produced by CycScalar.render."""
    s = text.strip()
    order = 1
    m = _SUFFIX_RE.search(s)
    if m:
        order = int(m.group(1))
        s = s[: m.start()].strip()
    if not s:
        raise ScalarParseError("empty scalar")
    f = _field(order)
    coeffs = [_Q0] * max(f.degree, 1)
    pos = 0
    first = True
    acc = []
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ScalarParseError(f"bad scalar syntax at {s[pos:]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("sign") is None and not first:
            raise ScalarParseError(f"missing sign before {s[pos:]!r}")
        if m.group("num") is not None:
            num = m.group("num")
            c = mpq(num)
            zpart = m.group("zn")
            k = int(m.group("kn")) if m.group("kn") else (1 if zpart else 0)
        else:
            c = _Q1
            k = int(m.group("k")) if m.group("k") else 1
        if k >= order and order > 1:
            k %= order
        acc.append((k, sign * c))
        pos = m.end()
        first = False
    out = [_Q0] * (max(k for k, _ in acc) + 1)
    for k, c in acc:
        if k > 0 and order == 1:
            raise ScalarParseError("z used without a (z = zeta_N) suffix")
        out[k] += c
    return CycScalar(order, out)


def as_scalar(value) -> CycScalar:
    """Coerce ints, Fractions and CycScalars to CycScalar."""
    if isinstance(value, CycScalar):
        return value
    return CycScalar.from_rational(value)
