"""The Gauss hypergeometric series and its differential-operator checks.

Everything here works on the power series

    s(x) = 1 + (a b)/(1 c) x + (a(a+1) b(b+1))/(1*2 c(c+1)) x**2 + ...

through the coefficient recurrence

    (k+1)(c+k) c_{k+1} = (a+k)(b+k) c_k,      c_0 = 1,

in exact rational arithmetic or in doubles, depending on the inputs.  When a
or b is a nonpositive integer the series is a polynomial and is summed
completely; otherwise summation stops once a geometric tail bound falls
below the requested tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, InvalidCError, NoConvergenceError
from .scalar import Scalar, as_integer, is_exact, is_nonpositive_integer

#: Largest truncation degree accepted by the exact-mode polynomial
#: operations; rational coefficient sizes grow quickly past this.
EXACT_DEGREE_CAP = 64


@dataclass(frozen=True)
class HypergeometricParams:
    """Parameter triple (a, b, c) of the series.

    c must not be zero or a negative integer: the recurrence denominator
    (k+1)(c+k) would vanish at k = -c.
    """

    a: Scalar
    b: Scalar
    c: Scalar

    def __post_init__(self) -> None:
        if is_nonpositive_integer(self.c):
            raise InvalidCError(f"c = {self.c} is zero or a negative integer")

    def exact(self) -> bool:
        return is_exact(self.a) and is_exact(self.b) and is_exact(self.c)


@dataclass(frozen=True)
class SeriesEvaluation:
    """Result of summing the series at one point.

    value        -- the partial (or complete) sum; exact iff every input was
    terms_used   -- number of terms added, >= 1
    terminated   -- True when no nonzero terms remain past the last one
    tail_bound   -- certified bound on |true sum - value|; 0.0 if terminated
    """

    value: Scalar
    terms_used: int
    terminated: bool
    tail_bound: float


@dataclass(frozen=True)
class OdeResidual:
    """Residual polynomial of the second-order equation on a truncation.

    residual_coefficients[j] multiplies x**j; the list runs through degree
    N+1 for a degree-N truncation.
    """

    residual_coefficients: list[Scalar]
    degree_checked: int


# ---- validation helpers ----

def check_eval_point(x: Scalar) -> None:
    """Reject points outside the open interval of convergence (-1, 1)."""
    if not abs(float(x)) < 1.0:
        raise DomainError(f"x = {x} is outside the open interval (-1, 1)")


def _check_budget(tol: float, max_terms: int) -> None:
    if not tol > 0.0:
        raise DomainError(f"tol must be positive, got {tol}")
    if max_terms < 1:
        raise DomainError(f"max_terms must be >= 1, got {max_terms}")


# ---- coefficients and termination ----

def coefficients(params: HypergeometricParams, degree: int) -> list[Scalar]:
    """Series coefficients c_0 .. c_degree from the recurrence."""
    if degree < 0:
        raise DomainError(f"degree must be >= 0, got {degree}")
    exact = params.exact()
    if exact and degree > EXACT_DEGREE_CAP:
        raise DomainError(
            f"exact-mode degree {degree} exceeds the cap {EXACT_DEGREE_CAP}")
    a, b, c = params.a, params.b, params.c
    coeffs: list[Scalar] = [Fraction(1) if exact else 1.0]
    for k in range(degree):
        coeffs.append(coeffs[k] * (a + k) * (b + k) / ((k + 1) * (c + k)))
    return coeffs


def termination_index(params: HypergeometricParams) -> int | None:
    """Smallest m >= 0 with a+m == 0 or b+m == 0, or None.

    Past that index every coefficient vanishes, so the series is a
    polynomial of degree m.
    """
    stops = []
    for p in (params.a, params.b):
        n = as_integer(p)
        if n is not None and n <= 0:
            stops.append(-n)
    return min(stops) if stops else None


# ---- tail majorant ----
#
# For k past the index where a+k, b+k and c+k are all positive, the factors
# (a+j)/(1+j) and (b+j)/(c+j) of the term ratio are each monotone in j with
# limit 1, so their suprema over j >= k are max(1, value at k).  Hence
#
#     rho_k = |x| * max(1, (a+k)/(1+k)) * max(1, (b+k)/(c+k))
#
# bounds every later term ratio, and the tail after term k is at most
# |t_k| * rho_k / (1 - rho_k) once rho_k < 1.  rho_k -> |x| < 1, so the
# stopping rule always fires eventually.

def _positivity_index(a: float, b: float, c: float) -> int:
    worst = min(a, b, c)
    if worst > 0.0:
        return 0
    return int(math.floor(-worst)) + 1


def _ratio_majorant(a: float, b: float, c: float, x: float, k: int) -> float:
    f1 = (a + k) / (1.0 + k)
    f2 = (b + k) / (c + k)
    return abs(x) * max(1.0, f1) * max(1.0, f2)


# ---- evaluation ----

def eval_series(params: HypergeometricParams, x: Scalar, tol: float = 1e-12,
                max_terms: int = 10000) -> SeriesEvaluation:
    """Sum the series at x, |x| < 1.

    Terminating parameter sets are summed completely (exactly when all
    inputs are exact).  Otherwise terms accumulate until the geometric
    majorant bound on the remaining tail drops to tol.
    """
    check_eval_point(x)
    _check_budget(tol, max_terms)
    a, b, c = params.a, params.b, params.c
    exact = params.exact() and is_exact(x)
    one: Scalar = Fraction(1) if exact else 1.0

    stop = termination_index(params)
    if stop is not None:
        if stop + 1 > max_terms:
            raise NoConvergenceError(
                f"series terminates after {stop + 1} terms but max_terms={max_terms}")
        term = one
        total = one
        for k in range(stop):
            term = term * (a + k) * (b + k) / ((k + 1) * (c + k)) * x
            total = total + term
        return SeriesEvaluation(total, stop + 1, True, 0.0)

    if x == 0:
        return SeriesEvaluation(one, 1, False, 0.0)

    af, bf, cf, xf = float(a), float(b), float(c), float(x)
    k0 = _positivity_index(af, bf, cf)
    term = one
    total = one
    for k in range(max_terms):
        if k >= k0:
            rho = _ratio_majorant(af, bf, cf, xf, k)
            if rho < 1.0:
                bound = abs(float(term)) * rho / (1.0 - rho)
                if bound <= tol:
                    return SeriesEvaluation(total, k + 1, False, bound)
        if k + 1 >= max_terms:
            break
        term = term * (a + k) * (b + k) / ((k + 1) * (c + k)) * x
        total = total + term
    raise NoConvergenceError(
        f"tail bound still above tol={tol} after {max_terms} terms")


def _eval_with_derivatives(params: HypergeometricParams, x: float, tol: float,
                           max_terms: int) -> tuple[float, float, float]:
    """Double-precision (s, s', s'') at x, all three tails below tol.

    The differentiated series share the base term ratio up to a factor
    (k+1)/(k+1-d) for the d-th derivative, which is itself decreasing in k,
    so the same majorant argument applies with rho multiplied by that
    factor at the current k.
    """
    a, b, c = float(params.a), float(params.b), float(params.c)
    if x == 0.0:
        raise DomainError("derivative evaluation needs x != 0")
    stop = termination_index(params)
    k0 = max(2, _positivity_index(a, b, c))
    s0 = s1 = s2 = 0.0
    term = 1.0
    k = 0
    while True:
        s0 += term
        if k >= 1:
            s1 += k * term / x
        if k >= 2:
            s2 += k * (k - 1) * term / (x * x)
        if stop is not None and k == stop:
            return s0, s1, s2
        if k >= k0:
            rho0 = _ratio_majorant(a, b, c, x, k)
            rho1 = rho0 * (k + 1) / k
            rho2 = rho0 * (k + 1) / (k - 1)
            if rho2 < 1.0:
                bound = max(
                    abs(term) * rho0 / (1.0 - rho0),
                    abs(k * term / x) * rho1 / (1.0 - rho1),
                    abs(k * (k - 1) * term / (x * x)) * rho2 / (1.0 - rho2),
                )
                if bound <= tol:
                    return s0, s1, s2
        if k + 1 >= max_terms:
            raise NoConvergenceError(
                f"derivative tails still above tol={tol} after {max_terms} terms")
        term = term * (a + k) * (b + k) / ((k + 1) * (c + k)) * x
        k += 1


# ---- polynomial helpers (dense coefficient lists, index = power) ----

def _poly_derivative(p: list[Scalar]) -> list[Scalar]:
    return [k * p[k] for k in range(1, len(p))]


def _poly_mul(p: list[Scalar], q: list[Scalar]) -> list[Scalar]:
    out: list[Scalar] = [0] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        for j, qj in enumerate(q):
            out[i + j] = out[i + j] + pi * qj
    return out


def _poly_sum(*polys: list[Scalar], length: int) -> list[Scalar]:
    out: list[Scalar] = [0] * length
    for p in polys:
        for i, v in enumerate(p[:length]):
            out[i] = out[i] + v
    return out


def _poly_scale(p: list[Scalar], factor: Scalar) -> list[Scalar]:
    return [factor * v for v in p]


def _shift(p: list[Scalar], by: int) -> list[Scalar]:
    return [0] * by + p


# ---- operator residuals ----

def ode_residual(params: HypergeometricParams, degree: int) -> OdeResidual:
    """Apply x(1-x) d2 + [c-(a+b+1)x] d1 - ab to the degree-N truncation.

    Returns every coefficient of the residual polynomial through x**(N+1).
    Built from explicit polynomial arithmetic rather than the recurrence
    identity, so exact zeros genuinely cross-check the coefficients: entries
    0..N-1 must vanish, entry N is -(a+N)(b+N) c_N, and entry N+1 vanishes
    because x(1-x) d2 cannot reach that power.
    """
    if degree < 2:
        raise DomainError(f"degree must be >= 2, got {degree}")
    coeffs = coefficients(params, degree)
    a, b, c = params.a, params.b, params.c
    d1 = _poly_derivative(coeffs)
    d2 = _poly_derivative(d1)
    residual = _poly_sum(
        _poly_mul([0, 1, -1], d2),           # x(1-x) s''
        _poly_mul([c, -(a + b + 1)], d1),    # [c - (a+b+1)x] s'
        _poly_scale(coeffs, -(a * b)),       # -ab s
        length=degree + 2,
    )
    return OdeResidual(residual, degree)


def operator_identity_residual(params: HypergeometricParams,
                               degree: int) -> list[Scalar]:
    """Differences of the two sides of the pre-division operator identity

        x**(b+1) s'' + (a+b+1) x**b s' + ab x**(b-1) s
            vs   x**b s'' + c x**(b-1) s'

    expanded on the formal monomial basis x**(b-1+j); entry j is the
    difference of the two x**(b-1+j) coefficients.  Every entry with
    j <= degree-1 is exactly zero; entry degree is the truncation artifact
    (a+N)(b+N) c_N.  Exact mode only: the point of this check is exact bits.
    """
    if degree < 2:
        raise DomainError(f"degree must be >= 2, got {degree}")
    if not params.exact():
        raise DomainError("operator identity check is exact-mode only")
    coeffs = coefficients(params, degree)
    a, b, c = params.a, params.b, params.c
    d1 = _poly_derivative(coeffs)
    d2 = _poly_derivative(d1)
    # powers below are measured relative to x**(b-1)
    lhs = _poly_sum(
        _shift(d2, 2),                       # x**(b+1) s''
        _poly_scale(_shift(d1, 1), a + b + 1),
        _poly_scale(coeffs, a * b),
        length=degree + 1,
    )
    rhs = _poly_sum(
        _shift(d2, 1),                       # x**b s''
        _poly_scale(d1, c),
        length=degree + 1,
    )
    return [lv - rv for lv, rv in zip(lhs, rhs)]


def substitution_residual(params: HypergeometricParams, n_exp: Scalar,
                          x: Scalar, tol: float = 1e-12,
                          max_terms: int = 100000) -> float:
    """Residual of the transformed equation for z = (1-x)**(-n) s at x.

    Substituting s = (1-x)**n z into the second-order equation and dividing
    the z-derivative terms by z gives, for every exponent n,

        x(1-x) z''/z - 2nx z'/z + [c-(a+b+1)x] z'/z
            + n(n-1) x/(1-x) - n[c-(a+b+1)x]/(1-x) - ab  =  0.

    The ratios reduce to series data alone,

        z'/z  = s'/s + n/(1-x)
        z''/z = s''/s + 2n s'/(s (1-x)) + n(n+1)/(1-x)**2,

    so no power of (1-x) is ever formed.  Returns the numerical residual,
    which is zero up to rounding and series truncation.
    """
    xf = float(x)
    if not 0.0 < xf < 0.9:
        raise DomainError(f"x must lie in (0, 0.9), got {x}")
    a, b, c = float(params.a), float(params.b), float(params.c)
    n = float(n_exp)
    s0, s1, s2 = _eval_with_derivatives(params, xf, tol, max_terms)
    u = 1.0 - xf
    zr1 = s1 / s0 + n / u
    zr2 = s2 / s0 + 2.0 * n * s1 / (s0 * u) + n * (n + 1.0) / (u * u)
    lin = c - (a + b + 1.0) * xf
    return (xf * u * zr2 - 2.0 * n * xf * zr1 + lin * zr1
            + n * (n - 1.0) * xf / u - n * lin / u - a * b)
