"""Exact univariate polynomials over the integers.

Coefficients are stored in ascending order, ``coeffs[i]`` being the
coefficient of ``t**i``.  Trailing zeros are always stripped, so the zero
polynomial is the empty tuple and two equal polynomials have equal
coefficient tuples.  With ascending storage the bar involution
``t**r * f(1/t)`` is a reversal padded to length ``r + 1``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DegreeExceedsRank, NonIntegralCoefficient, ZeroPolynomial

# Degree of the zero polynomial; compares below every integer.
NEG_INF = float("-inf")


def _strip(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Polynomial:
    """An immutable polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = []
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, int):
                if isinstance(c, Fraction) and c.denominator == 1:
                    c = c.numerator
                else:
                    raise TypeError(f"integer coefficient expected, got {c!r}")
            cs.append(c)
        self.coeffs = _strip(cs)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs) -> "Polynomial":
        # trusted constructor: coeffs already a stripped tuple of ints
        p = object.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls._raw((c,) if c else ())

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "Polynomial":
        if not c:
            return ZERO
        return cls._raw((0,) * degree + (c,))

    @classmethod
    def from_fractions(cls, coeffs: Sequence[Fraction]) -> "Polynomial":
        """Convert rational coefficients, insisting every one is an integer."""
        out = []
        for i, c in enumerate(coeffs):
            c = Fraction(c)
            if c.denominator != 1:
                raise NonIntegralCoefficient(f"coefficient of t^{i} is {c}")
            out.append(c.numerator)
        return cls(out)

    # -- basic queries -------------------------------------------------

    @property
    def degree(self):
        """Degree, or ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Polynomial", self.coeffs))
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic ----------------------------------------------------

    def __neg__(self):
        return Polynomial._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other)
        elif not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial._raw(_strip(out))

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other)
        elif not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ZERO
            return Polynomial._raw(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        # leading term is nonzero over the integers
        return Polynomial._raw(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "Polynomial":
        """Multiply by ``t**k``."""
        if not self.coeffs:
            return self
        return Polynomial._raw((0,) * k + self.coeffs)

    def bar(self, r: int) -> "Polynomial":
        """Return ``t**r * self(1/t)``."""
        return poly_bar(self, r)

    def truncate(self, n) -> "Polynomial":
        """Terms of degree strictly below ``n`` (``n`` may be fractional)."""
        k = 0
        while k < len(self.coeffs) and k < n:
            k += 1
        return Polynomial._raw(_strip(self.coeffs[:k]))

    # -- presentation --------------------------------------------------

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "t" if i == 1 else f"t^{i}"
                body = var if mag == 1 else f"{mag}{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        s = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def to_json(self) -> list:
        """Decimal strings, ascending degree."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "Polynomial":
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, list):
            raise ValueError("polynomial JSON must be an array")
        out = []
        for item in data:
            if not isinstance(item, str):
                raise ValueError(f"coefficients are decimal strings, got {item!r}")
            out.append(int(item))
        return cls(out)


ZERO = Polynomial._raw(())
ONE = Polynomial._raw((1,))
T = Polynomial._raw((0, 1))


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def poly_bar(f: Polynomial, r: int) -> Polynomial:
    """``t**r * f(1/t)``; requires ``deg f <= r``."""
    if r < 0:
        raise ValueError("rank must be nonnegative")
    if f.degree > r:
        raise DegreeExceedsRank(f"degree {f.degree} exceeds rank {r}")
    cs = f.coeffs + (0,) * (r + 1 - len(f.coeffs))
    return Polynomial._raw(_strip(cs[::-1]))


def is_log_concave_no_internal_zeros(f: Polynomial) -> bool:
    """True iff the coefficients are log-concave with no internal zeros.

    The zero polynomial and constants pass by convention.
    """
    return log_concavity_witness(f) is None and internal_zero_witness(f) is None


def log_concavity_witness(f: Polynomial):
    """First interior index i with a[i]**2 < a[i-1]*a[i+1], else None."""
    a = f.coeffs
    for i in range(1, len(a) - 1):
        if a[i] * a[i] < a[i - 1] * a[i + 1]:
            return i
    return None


def internal_zero_witness(f: Polynomial):
    """Index of a zero coefficient lying between two nonzero ones, else None."""
    a = f.coeffs
    nz = [i for i, c in enumerate(a) if c]
    if not nz:
        return None
    for j in range(nz[0] + 1, nz[-1]):
        if not a[j]:
            return j
    return None


# -- exact real-root counting ------------------------------------------
# Rational polynomials below are plain lists of Fractions, ascending.


def _q_strip(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _q_divmod(a, b):
    a = list(a)
    if not b:
        raise ZeroDivisionError
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        c = a[-1] / lead
        q[k] = c
        for i, bc in enumerate(b):
            a[i + k] -= c * bc
        a.pop()
        _q_strip(a)
    return _q_strip(q), a


def _q_gcd(a, b):
    while b:
        _, r = _q_divmod(a, b)
        a, b = b, r
    return [c / a[-1] for c in a]


def _q_deriv(a):
    return _q_strip([i * a[i] for i in range(1, len(a))])


def squarefree_part(f: Polynomial) -> list:
    a = [Fraction(c) for c in f.coeffs]
    g = _q_gcd(list(a), _q_deriv(a))
    q, r = _q_divmod(a, g)
    assert not r
    return q


def sturm_sequence(f: Polynomial) -> list:
    """Sturm sequence of the squarefree part of ``f`` (lists of Fractions)."""
    if f.is_zero():
        raise ZeroPolynomial("Sturm sequence of the zero polynomial")
    p0 = squarefree_part(f)
    seq = [p0]
    p1 = _q_deriv(p0)
    while p1:
        seq.append(p1)
        _, r = _q_divmod(seq[-2], seq[-1])
        p1 = [-c for c in r]
    return seq


def _variations(signs):
    signs = [s for s in signs if s]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def _sign(x):
    return (x > 0) - (x < 0)


def _distinct_real_roots(seq) -> int:
    at_pos = [_sign(p[-1]) for p in seq]
    at_neg = [_sign(p[-1]) * (-1) ** (len(p) - 1) for p in seq]
    return _variations(at_neg) - _variations(at_pos)


def count_real_roots(f: Polynomial, multiplicity: bool = False) -> int:
    """Number of distinct real roots of ``f``, computed exactly.

    With ``multiplicity`` each root is counted as often as it occurs: the
    distinct roots of f, f' gcd, gcd of that with its derivative, and so on
    are summed.
    """
    n = _distinct_real_roots(sturm_sequence(f))
    if not multiplicity:
        return n
    a = [Fraction(c) for c in f.coeffs]
    while True:
        a = _q_gcd(list(a), _q_deriv(a))
        if len(a) <= 1:
            return n
        g = Polynomial.from_fractions([c * _lcm_den(a) for c in a])
        n += _distinct_real_roots(sturm_sequence(g))


def _lcm_den(a) -> int:
    from math import lcm

    out = 1
    for c in a:
        out = lcm(out, c.denominator)
    return out


poly_count_real_roots = count_real_roots
poly_is_log_concave_no_internal_zeros = is_log_concave_no_internal_zeros
