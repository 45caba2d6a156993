"""Kazhdan-Lusztig, inverse Kazhdan-Lusztig and characteristic polynomials.

Three independent routes are available:

``recursion``
    Interval-by-interval defining recursions on the lattice of flats.  P is
    read off ``t^r P(1/t) = sum_F chi(M_F) P(M^F)`` and the signed inverse
    polynomial Qhat off ``Qhat(M) = sum_F t^{rk M_F} Qhat(M_F)(1/t) chi(M^F)``.
    Characteristic polynomials of intervals come from Moebius sums.
``kls``
    The incidence-algebra route: ``P = f[bottom, top]`` and
    ``Qhat = f^-1[bottom, top]`` where ``f`` is the right KLS function of the
    characteristic function.
``closed``
    Closed forms for boolean and uniform matroids.

``Q = (-1)^rk * Qhat`` throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import NamedTuple

from . import incidence
from .errors import InconsistentKernel, MatklsError, NoClosedForm
from .matroid import FlatLattice, Matroid, build_lattice, minor
from .polynomial import ONE, T, ZERO, Polynomial, poly_bar

METHODS = ("recursion", "kls", "closed", "auto", "all")


class MethodDisagreement(MatklsError, AssertionError):
    """Two computation routes produced different polynomials."""


def lattice_of(M: Matroid) -> FlatLattice:
    """The (cached) lattice of flats of ``M``."""
    L = getattr(M, "_lattice", None)
    if L is None:
        L = build_lattice(M)
        M._lattice = L
    return L


def _sign(n: int) -> int:
    return -1 if n & 1 else 1


# -- closed forms ------------------------------------------------------


def chi_uniform_closed(m: int, d: int) -> Polynomial:
    """Characteristic polynomial of U_{m,d}."""
    if d == 0:
        return ONE
    acc = ZERO
    for j in range(d):
        term = Polynomial.monomial(d - j) - ONE
        acc = acc + term * (_sign(j) * comb(m + d, j))
    return acc


def chi_boolean_closed(n: int) -> Polynomial:
    return (T - ONE) ** n


def q_uniform_closed(m: int, d: int) -> Polynomial:
    """Inverse KL polynomial of U_{m,d}, m, d >= 1.

    ``C(m+d, d) * sum_{j <= (d-1)/2} m(d-2j) / ((m+j)(m+d-j)) * C(d, j) t^j``,
    summed over rationals and checked to be integral.
    """
    if m < 1 or d < 1:
        raise ValueError("q_uniform_closed needs m, d >= 1")
    lead = comb(m + d, d)
    coeffs = [
        lead * Fraction(m * (d - 2 * j), (m + j) * (m + d - j)) * comb(d, j)
        for j in range((d - 1) // 2 + 1)
    ]
    return Polynomial.from_fractions(coeffs)


def _multinomial(n: int, parts) -> int:
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


def p_uniform_closed(m: int, d: int) -> Polynomial:
    """KL polynomial of U_{m,d} from the inverse polynomials of its contractions.

    ``sum_j sum_{i <= d-1-2j} (-1)^{d+1-i} m(d-i-2j) / ((m+j)(m+d-i-j))
    * multinomial(m+d; m, i, j, d-i-j) t^j``.
    """
    if m < 1 or d < 1:
        raise ValueError("p_uniform_closed needs m, d >= 1")
    coeffs = []
    for j in range((d - 1) // 2 + 1):
        acc = Fraction(0)
        for i in range(d - 2 * j):
            acc += (_sign(d + 1 - i) * Fraction(m * (d - i - 2 * j), (m + j) * (m + d - i - j))
                    * _multinomial(m + d, (m, i, j, d - i - j)))
        coeffs.append(acc)
    return Polynomial.from_fractions(coeffs)


def _closed_kind(M: Matroid):
    """``("boolean", n)``, ``("uniform", m, d)``, ``("sum", left, right)`` or None."""
    if M.kind == "boolean":
        return ("boolean", M.params["n"])
    if M.kind == "uniform":
        m, d = M.params["m"], M.params["d"]
        if d == 0:
            return ("boolean", 0)
        if m == 0:
            return ("boolean", d)
        return ("uniform", m, d)
    if M.kind == "direct_sum":
        return ("sum", M.params["left"], M.params["right"])
    return lattice_of(M).interval_kind()


def _closed(M: Matroid, which: str) -> Polynomial:
    kind = _closed_kind(M)
    if kind is None:
        raise NoClosedForm(f"no closed form for {M!r}")
    if kind[0] == "sum":
        return _closed(kind[1], which) * _closed(kind[2], which)
    if kind[0] == "boolean":
        n = kind[1]
        return {"P": ONE, "Qhat": Polynomial.constant(_sign(n)),
                "chi": chi_boolean_closed(n)}[which]
    m, d = kind[1], kind[2]
    if which == "P":
        return p_uniform_closed(m, d)
    if which == "Qhat":
        return q_uniform_closed(m, d) * _sign(d)
    return chi_uniform_closed(m, d)


def has_closed_form(M: Matroid) -> bool:
    kind = _closed_kind(M)
    if kind is None:
        return False
    if kind[0] == "sum":
        return has_closed_form(kind[1]) and has_closed_form(kind[2])
    return True


# -- interval recursions -------------------------------------------------


class IntervalRecursion:
    """Memoized defining recursions over the intervals of one lattice.

    Values for an interval ``[i, j]`` equal the invariants of the minor whose
    lattice of flats is that interval.  With ``fast_paths`` set, intervals
    recognized as boolean or uniform lattices are answered by closed forms.
    """

    def __init__(self, lattice: FlatLattice, fast_paths: bool = False):
        self.L = lattice
        self.fast_paths = fast_paths
        self._mu_rows = {}
        self._chi = {}
        self._p = {}
        self._qhat = {}
        self._kind = {}

    def _fast(self, i, j):
        if not self.fast_paths:
            return None
        key = (i, j)
        if key not in self._kind:
            self._kind[key] = self.L.interval_kind(i, j)
        return self._kind[key]

    def mu(self, i: int, j: int) -> int:
        row = self._mu_rows.get(i)
        if row is None:
            L = self.L
            fl = L.flats
            row = {}
            for h in L.above[i]:
                if h == i:
                    row[h] = 1
                    continue
                gh = fl[h]
                row[h] = -sum(v for k, v in row.items() if fl[k] & ~gh == 0)
            self._mu_rows[i] = row
        return row[j]

    def chi(self, i: int, j: int) -> Polynomial:
        key = (i, j)
        val = self._chi.get(key)
        if val is None:
            kind = self._fast(i, j)
            if kind is not None:
                val = (chi_boolean_closed(kind[1]) if kind[0] == "boolean"
                       else chi_uniform_closed(kind[1], kind[2]))
            else:
                L = self.L
                coeffs = [0] * (L.r(i, j) + 1)
                for h in L.interval(i, j):
                    coeffs[L.r(h, j)] += self.mu(i, h)
                val = Polynomial(coeffs)
            self._chi[key] = val
        return val

    def P(self, i: int, j: int) -> Polynomial:
        key = (i, j)
        val = self._p.get(key)
        if val is not None:
            return val
        if i == j:
            val = ONE
        else:
            kind = self._fast(i, j)
            if kind is not None:
                val = ONE if kind[0] == "boolean" else p_uniform_closed(kind[1], kind[2])
            else:
                rhs = ZERO
                for h in self.L.interval(i, j):
                    if h != i:
                        rhs = rhs + self.chi(i, h) * self.P(h, j)
                r = self.L.r(i, j)
                # bar(P) - P = rhs with deg P < r/2
                val = -rhs.truncate(r / 2)
                if poly_bar(val, r) - val != rhs:
                    raise InconsistentKernel(f"KL recursion has no solution on {key}")
        self._p[key] = val
        return val

    def Qhat(self, i: int, j: int) -> Polynomial:
        key = (i, j)
        val = self._qhat.get(key)
        if val is not None:
            return val
        if i == j:
            val = ONE
        else:
            kind = self._fast(i, j)
            if kind is not None:
                val = (Polynomial.constant(_sign(kind[1])) if kind[0] == "boolean"
                       else q_uniform_closed(kind[1], kind[2]) * _sign(kind[2]))
            else:
                L = self.L
                rhs = ZERO
                for h in L.interval(i, j):
                    if h != j:
                        rhs = rhs + poly_bar(self.Qhat(i, h), L.r(i, h)) * self.chi(h, j)
                r = L.r(i, j)
                # Qhat - bar(Qhat) = rhs with deg Qhat < r/2
                val = rhs.truncate(r / 2)
                if rhs - val != -poly_bar(val, r):
                    raise InconsistentKernel(f"inverse KL recursion has no solution on {key}")
        self._qhat[key] = val
        return val

    def Q(self, i: int, j: int) -> Polynomial:
        return self.Qhat(i, j) * _sign(self.L.r(i, j))


class KLSData(NamedTuple):
    chi: incidence.IncidenceFunction
    f: incidence.IncidenceFunction
    f_inv: incidence.IncidenceFunction


def kls_data(L: FlatLattice) -> KLSData:
    """Characteristic function, its right KLS function and that function's inverse."""
    chi = incidence.characteristic_function(L)
    f = incidence.kls_solve_right(chi)
    return KLSData(chi, f, incidence.invert(f))


# -- matroid-level API ---------------------------------------------------


def _agree(label, results):
    values = list(results.values())
    for name, v in results.items():
        if v != values[0]:
            raise MethodDisagreement(f"{label}: methods disagree: " +
                                     ", ".join(f"{k}={p}" for k, p in results.items()))
    return values[0]


def _resolve(M: Matroid, method: str) -> str:
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    if method == "auto":
        if M.kind in ("uniform", "boolean") or (M.kind == "direct_sum" and has_closed_form(M)):
            return "closed"
        return "recursion"
    return method


def _compute(M: Matroid, which: str, method: str, fast_paths: bool) -> Polynomial:
    method = _resolve(M, method)
    if method == "closed":
        return _closed(M, which)
    if method == "all":
        results = {"recursion": _compute(M, which, "recursion", fast_paths),
                   "kls": _compute(M, which, "kls", fast_paths)}
        if has_closed_form(M):
            results["closed"] = _closed(M, which)
        return _agree(f"{which} of {M!r}", results)
    L = lattice_of(M)
    if method == "recursion":
        eng = IntervalRecursion(L, fast_paths=fast_paths)
        return {"P": eng.P, "Qhat": eng.Qhat, "chi": eng.chi}[which](L.bottom, L.top)
    if which == "chi":
        return incidence.characteristic_function(L)[L.bottom, L.top]
    data = kls_data(L)
    if which == "P":
        return data.f[L.bottom, L.top]
    return data.f_inv[L.bottom, L.top]


def characteristic_polynomial(M: Matroid, method: str = "auto") -> Polynomial:
    """chi_M(t) = sum_F mu(bottom, F) t^{rk M - rk F}, computed on the lattice of flats.

    ``recursion`` is the Moebius sum, ``kls`` reads the characteristic
    function of the incidence algebra, ``auto`` takes closed forms for tagged
    boolean, uniform and direct-sum matroids.
    """
    return _compute(M, "chi", method, fast_paths=False)


def kl_polynomial(M: Matroid, method: str = "auto", fast_paths: bool = False) -> Polynomial:
    return _compute(M, "P", method, fast_paths)


def inverse_kl_hat(M: Matroid, method: str = "auto", fast_paths: bool = False) -> Polynomial:
    """The unsigned-convention variant ``Qhat = (-1)^rk * Q``."""
    return _compute(M, "Qhat", method, fast_paths)


def inverse_kl_polynomial(M: Matroid, method: str = "auto", fast_paths: bool = False) -> Polynomial:
    """Q_M(t): constant 1 in rank 0, degree below rk/2 otherwise."""
    return inverse_kl_hat(M, method, fast_paths) * _sign(M.rk)


@dataclass
class InvariantBundle:
    matroid: dict
    rk: int
    chi: Polynomial
    P: Polynomial
    Q: Polynomial
    method: str
    Qhat: Polynomial = field(init=False)

    def __post_init__(self):
        self.Qhat = self.Q * _sign(self.rk)
        if self.P[0] != 1:
            raise AssertionError("KL polynomial must have constant term 1")
        if self.rk > 0 and not (2 * self.P.degree < self.rk and 2 * self.Q.degree < self.rk):
            raise AssertionError("degree bound violated")

    def to_json(self) -> dict:
        return {"matroid": self.matroid, "rk": self.rk, "chi": self.chi.to_json(),
                "P": self.P.to_json(), "Q": self.Q.to_json(), "method": self.method}

    @classmethod
    def from_json(cls, data: dict) -> "InvariantBundle":
        return cls(matroid=data["matroid"], rk=int(data["rk"]),
                   chi=Polynomial.from_json(data["chi"]), P=Polynomial.from_json(data["P"]),
                   Q=Polynomial.from_json(data["Q"]), method=data["method"])


def invariant_bundle(M: Matroid, method: str = "auto") -> InvariantBundle:
    resolved = _resolve(M, method)
    return InvariantBundle(
        matroid=M.to_spec(), rk=M.rk,
        chi=characteristic_polynomial(M, "auto" if resolved == "closed" else resolved),
        P=kl_polynomial(M, resolved), Q=inverse_kl_polynomial(M, resolved),
        method=resolved)


# -- identities ----------------------------------------------------------


class Relations(NamedTuple):
    """Verdicts for the four P/Q cross identities."""

    p_via_contraction_q: bool
    p_via_localization_q: bool
    q_via_localization_p: bool
    q_via_contraction_p: bool


class _ScratchMinors:
    """P and Qhat of minors, each computed on a freshly built lattice."""

    def __init__(self, M: Matroid, L: FlatLattice):
        self.M, self.L = M, L
        self._cache = {}

    def _get(self, i, j):
        if (i, j) not in self._cache:
            N = minor(self.M, self.L, i, j)
            NL = lattice_of(N)
            eng = IntervalRecursion(NL)
            self._cache[i, j] = (eng.P(NL.bottom, NL.top), eng.Qhat(NL.bottom, NL.top))
        return self._cache[i, j]

    def P(self, i, j):
        return self._get(i, j)[0]

    def Qhat(self, i, j):
        return self._get(i, j)[1]


def relations_check(M: Matroid, from_scratch: bool = False) -> Relations:
    """Evaluate both sides of the four identities linking P and Q over all flats.

    P of every minor comes from the KL recursion and Q from the inverse-KL
    recursion, independently.  With ``from_scratch`` every minor is built as
    a matroid and its lattice enumerated anew.
    """
    L = lattice_of(M)
    if L.rank == 0:
        raise ValueError("relations need a matroid of positive rank")
    src = _ScratchMinors(M, L) if from_scratch else IntervalRecursion(L)
    b, t = L.bottom, L.top

    def q(i, j):
        return src.Qhat(i, j) * _sign(L.r(i, j))

    flats = range(len(L))
    P, Q = src.P(b, t), q(b, t)
    s1 = sum((src.P(b, F) * _sign(L.r(F, t)) * q(F, t) for F in flats if F != t), ZERO)
    s2 = sum((_sign(L.r(b, F)) * q(b, F) * src.P(F, t) for F in flats if F != b), ZERO)
    s3 = sum((_sign(L.r(b, F)) * src.P(b, F) * q(F, t) for F in flats if F != b), ZERO)
    s4 = sum((q(b, F) * _sign(L.r(F, t)) * src.P(F, t) for F in flats if F != t), ZERO)
    return Relations(P == -s1, P == -s2, Q == -s3, Q == -s4)


def kl_defining_identity(M: Matroid, P_of=None) -> bool:
    """Check ``t^rk P(1/t) == sum_F chi(M_F) P(M^F)`` as full polynomials.

    ``P_of(i, j)`` supplies P of interval minors; by default the values come
    from the incidence-algebra solve, while the characteristic polynomials
    are Moebius sums.
    """
    L = lattice_of(M)
    eng = IntervalRecursion(L)
    if P_of is None:
        f = kls_data(L).f
        P_of = lambda i, j: f[i, j]
    b, t = L.bottom, L.top
    lhs = poly_bar(P_of(b, t), L.rank)
    rhs = sum((eng.chi(b, F) * P_of(F, t) for F in range(len(L))), ZERO)
    return lhs == rhs


def inverse_kl_defining_identity(M: Matroid, Q_of=None) -> bool:
    """Check ``t^rk (-1)^rk Q(1/t) == sum_F (-1)^{rk M_F} Q(M_F) t^{rk M^F} chi(M^F)(1/t)``."""
    L = lattice_of(M)
    eng = IntervalRecursion(L)
    if Q_of is None:
        f_inv = kls_data(L).f_inv
        Q_of = lambda i, j: f_inv[i, j] * _sign(L.r(i, j))
    b, t = L.bottom, L.top
    lhs = poly_bar(Q_of(b, t), L.rank) * _sign(L.rank)
    rhs = sum((Q_of(b, F) * _sign(L.r(b, F)) * poly_bar(eng.chi(F, t), L.r(F, t))
               for F in range(len(L))), ZERO)
    return lhs == rhs


def constant_term_identity(M: Matroid, method: str = "auto") -> bool:
    """``Qhat(0) == chi(0)``.

    This holds for the signed variant Qhat.  For Q itself the constant terms
    agree only up to ``(-1)^rk``; e.g. U_{2,5} has Q(0) = 15, chi(0) = -15.
    """
    return inverse_kl_hat(M, method)[0] == characteristic_polynomial(M, method)[0]


def multiplicativity_check(M1: Matroid, M2: Matroid, method: str = "recursion") -> tuple:
    """``(P multiplicative, Q multiplicative)`` for the direct sum ``M1 + M2``."""
    from .matroid import direct_sum

    S = direct_sum(M1, M2)
    p_ok = kl_polynomial(S, method) == kl_polynomial(M1, method) * kl_polynomial(M2, method)
    q_ok = (inverse_kl_polynomial(S, method)
            == inverse_kl_polynomial(M1, method) * inverse_kl_polynomial(M2, method))
    return p_ok, q_ok
