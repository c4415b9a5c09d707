"""Error-rate calibration: ratio-bound linear programs, binomial and
negative-binomial tail bounds, skewness/moment condition checks, and the
parameter-selection recipes that turn a (k, alpha) target into a runnable
configuration.

Threshold boundaries are handled in exact rational arithmetic throughout:
the count cutoff for "frequency >= eta" at M runs is
``selection_count_threshold(M, eta)``, which sums from ceil(M*eta) when
M*eta is fractional and from M*eta itself when it is integral.  Both
boundary flavors are exercised by the tests (eta = 0.501 vs 0.5 at M = 31
give the same cutoff of 16 and hence the same optimum of 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.stats import binom

from .core import RationalLike, as_fraction, selection_count_threshold
from .errors import (
    CalibrationInfeasibleError,
    ConfigError,
    NumericalError,
)
from .simplex import solve_lp

LP_VARIANTS = ("monotone", "partial_sum", "decay")
ASSUMPTION_TIERS = {"markov": Fraction(1), "skewed": Fraction(1, 2)}

_FEAS_TOL = 1e-9


# ---------------------------------------------------------------------------
# Ratio-bound linear programs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LpSolution:
    """Optimal ratio factor gamma together with its certificate vector.

    The certificate y is a feasible point of the chosen LP variant whose
    objective equals ``value``; both are checked to 1e-9 on construction.
    """

    value: float
    certificate: np.ndarray
    variant: str
    m_runs: int
    eta: Fraction
    beta: Optional[float] = None

    def __post_init__(self):
        y = np.asarray(self.certificate, dtype=float)
        if y.shape != (self.m_runs + 1,):
            raise NumericalError("certificate has wrong length")
        object.__setattr__(self, "certificate", y)
        _check_certificate(self)


def _check_certificate(sol: LpSolution) -> None:
    y = sol.certificate
    m = sol.m_runs
    if np.any(y < -_FEAS_TOL):
        raise NumericalError("certificate violates nonnegativity")
    weights = np.arange(m + 1) / m
    if abs(float(y @ weights) - 1.0) > _FEAS_TOL:
        raise NumericalError("certificate violates the unit-mean constraint")
    if sol.variant == "monotone":
        if np.any(np.diff(y) > _FEAS_TOL):
            raise NumericalError("certificate violates monotonicity")
    elif sol.variant == "decay":
        if np.any(y[1:] - sol.beta * y[:-1] > _FEAS_TOL):
            raise NumericalError("certificate violates the decay constraint")
    elif sol.variant == "partial_sum":
        if float(np.sum(y)) < 2.0 - _FEAS_TOL:
            raise NumericalError("certificate violates the mass constraint")
        lhs, rhs = _partial_sum_sides(y, m, sol.eta)
        if lhs < rhs - _FEAS_TOL:
            raise NumericalError("certificate violates the partial-sum constraint")
    cutoff = selection_count_threshold(m, sol.eta)
    if abs(float(np.sum(y[cutoff:])) - sol.value) > _FEAS_TOL:
        raise NumericalError("certificate objective does not match the value")


def _partial_sum_sides(y: np.ndarray, m: int, eta: Fraction) -> Tuple[float, float]:
    c = selection_count_threshold(m, eta)
    lhs = float(sum(j * y[j] for j in range(1, c)))
    u_max = math.floor(2 * eta * m - 1) - c
    rhs = 0.0
    for u in range(0, u_max + 1):
        idx = c + u
        if idx > m:
            break
        rhs += float(2 * eta * m - 1 - c - u) * y[idx]
    return lhs, rhs


def monotone_gamma_exact(m_runs: int, eta: RationalLike) -> Fraction:
    """Exact optimum of the monotone-pmf LP as a rational number.

    The feasible cone of nonnegative non-increasing sequences is generated
    by flat prefixes, so the optimum is the best prefix value
    2*M*(r - c + 1) / (r*(r + 1)) over prefix lengths r >= c.
    """
    gamma, _ = _monotone_best_prefix(m_runs, eta)
    return gamma


def _monotone_best_prefix(m_runs: int, eta: RationalLike) -> Tuple[Fraction, int]:
    if m_runs < 1:
        raise ConfigError("m_runs must be >= 1")
    c = selection_count_threshold(m_runs, eta)
    best = Fraction(0)
    best_r = c
    for r in range(c, m_runs + 1):
        val = Fraction(2 * m_runs * (r - c + 1), r * (r + 1))
        if val > best:
            best, best_r = val, r
    return best, best_r


def _decay_best_prefix(
    m_runs: int, eta: RationalLike, beta: float
) -> Tuple[float, int]:
    # Substituting z_m = y_m / beta^m maps the decay cone onto the monotone
    # cone, so extreme rays are geometric prefixes beta^m * 1{m <= r}.
    c = selection_count_threshold(m_runs, eta)
    best = -1.0
    best_r = c
    for r in range(c, m_runs + 1):
        powers = beta ** np.arange(r + 1)
        denom = float(np.sum(powers * (np.arange(r + 1) / m_runs)))
        if denom <= 0.0:
            continue
        val = float(np.sum(powers[c:])) / denom
        if val > best:
            best, best_r = val, r
    if best < 0.0:
        raise CalibrationInfeasibleError(
            f"decay LP infeasible for beta={beta} (all extreme points carry zero mean)"
        )
    return best, best_r


def _lp_matrices(m_runs: int, eta: Fraction, variant: str, beta: Optional[float]):
    n = m_runs + 1
    c = selection_count_threshold(m_runs, eta)
    obj = np.zeros(n)
    obj[c:] = 1.0
    a_eq = (np.arange(n) / m_runs)[None, :]
    b_eq = np.array([1.0])
    rows = []
    rhs = []
    if variant in ("monotone", "decay"):
        factor = 1.0 if variant == "monotone" else float(beta)
        for m in range(1, n):
            row = np.zeros(n)
            row[m] = 1.0
            row[m - 1] = -factor
            rows.append(row)
            rhs.append(0.0)
    elif variant == "partial_sum":
        rows.append(-np.ones(n))
        rhs.append(-2.0)
        u_max = math.floor(2 * eta * m_runs - 1) - c
        if u_max >= 0:
            row = np.zeros(n)
            for j in range(1, c):
                row[j] = -float(j)
            for u in range(0, u_max + 1):
                idx = c + u
                if idx > m_runs:
                    break
                row[idx] += float(2 * eta * m_runs - 1 - c - u)
            rows.append(row)
            rhs.append(0.0)
    else:
        raise ConfigError(f"unknown LP variant {variant!r}")
    a_ub = np.vstack(rows) if rows else None
    b_ub = np.asarray(rhs) if rows else None
    return obj, a_eq, b_eq, a_ub, b_ub


def lp_gamma(
    m_runs: int,
    eta: RationalLike,
    variant: str = "monotone",
    beta: Optional[float] = None,
    cross_check: bool = True,
) -> LpSolution:
    """Optimal gamma of the requested ratio-bound LP.

    monotone and decay variants are solved in closed form by enumerating
    flat/geometric extreme points; with ``cross_check`` the result is also
    verified against the generic simplex to 1e-8.  partial_sum is solved by
    simplex directly.
    """
    if variant not in LP_VARIANTS:
        raise ConfigError(f"variant must be one of {LP_VARIANTS}, got {variant!r}")
    eta_f = as_fraction(eta)
    if not (0 < eta_f <= 1):
        raise ConfigError(f"eta must lie in (0, 1], got {eta}")
    if variant == "decay":
        if beta is None:
            raise ConfigError("decay variant requires beta")
        if not (0.0 <= beta <= 1.0):
            raise ConfigError(f"beta must lie in [0, 1], got {beta}")
    elif beta is not None:
        raise ConfigError(f"beta is only meaningful for the decay variant")

    if variant == "monotone" or (variant == "decay" and beta == 1.0):
        gamma, r = _monotone_best_prefix(m_runs, eta_f)
        y = np.zeros(m_runs + 1)
        y[: r + 1] = float(Fraction(2 * m_runs, r * (r + 1)))
        value = float(gamma)
    elif variant == "decay":
        value, r = _decay_best_prefix(m_runs, eta_f, beta)
        powers = beta ** np.arange(m_runs + 1)
        powers[r + 1 :] = 0.0
        denom = float(np.sum(powers * (np.arange(m_runs + 1) / m_runs)))
        y = powers / denom
    else:
        obj, a_eq, b_eq, a_ub, b_ub = _lp_matrices(m_runs, eta_f, variant, beta)
        y, value = solve_lp(obj, a_eq, b_eq, a_ub, b_ub)

    if cross_check and variant in ("monotone", "decay"):
        obj, a_eq, b_eq, a_ub, b_ub = _lp_matrices(m_runs, eta_f, variant, beta)
        _, simplex_value = solve_lp(obj, a_eq, b_eq, a_ub, b_ub)
        if abs(simplex_value - value) > 1e-8:
            raise NumericalError(
                f"closed-form optimum {value!r} disagrees with simplex "
                f"{simplex_value!r} at M={m_runs}, eta={eta}"
            )

    return LpSolution(
        value=value,
        certificate=y,
        variant=variant,
        m_runs=m_runs,
        eta=eta_f,
        beta=beta,
    )


# ---------------------------------------------------------------------------
# Bound reports
# ---------------------------------------------------------------------------

BOUND_KINDS = (
    "pfer_markov",
    "pfer_lp",
    "pfer_assumption_free",
    "kfwer_markov",
    "kfwer_nb",
    "kfwer_rho_half",
)


@dataclass(frozen=True)
class BoundReport:
    """A certified error bound together with the inputs that produced it."""

    kind: str
    value: float
    inputs: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in BOUND_KINDS:
            raise ConfigError(f"unknown bound kind {self.kind!r}")
        if not (self.value >= 0.0):
            raise NumericalError(f"bound value must be nonnegative, got {self.value}")


def pfer_bound(
    v: float, eta: Optional[RationalLike] = None, gamma: Optional[float] = None
) -> BoundReport:
    """E[V] <= gamma * v when a ratio certificate is supplied, else v / eta."""
    if v < 0:
        raise ConfigError("v must be nonnegative")
    if gamma is not None:
        return BoundReport("pfer_lp", gamma * v, {"v": v, "gamma": gamma})
    if eta is None:
        raise ConfigError("need either gamma or eta")
    eta_f = as_fraction(eta)
    if not (0 < eta_f <= 1):
        raise ConfigError("eta must lie in (0, 1]")
    return BoundReport("pfer_markov", v / float(eta_f), {"v": v, "eta": float(eta_f)})


def assumption_free_pfer_factor(
    m_runs: int, eta: RationalLike
) -> Tuple[float, float]:
    """max over p in [0, 1] of P(Bin(M, p) >= cutoff) / p, plus the maximizer.

    Multiplying the factor by the base level v bounds the PFER with no shape
    assumption on the selection-frequency distribution (the count of
    selections is binomial given the data).  When the cutoff is one
    selection, the ratio is decreasing and the supremum M is attained in the
    p -> 0 limit, reported with maximizer 0.
    """
    cutoff = selection_count_threshold(m_runs, eta)
    if cutoff <= 1:
        return float(m_runs), 0.0

    def ratio(p: np.ndarray) -> np.ndarray:
        return binom.sf(cutoff - 1, m_runs, p) / p

    grid = np.arange(1e-4, 1.0 + 1e-9, 1e-4)
    values = ratio(grid)
    i = int(np.argmax(values))
    lo = grid[max(i - 2, 0)]
    hi = grid[min(i + 2, grid.size - 1)]
    res = minimize_scalar(
        lambda p: -ratio(np.array([p]))[0],
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": 1e-12},
    )
    best_p = float(res.x)
    best = float(-res.fun)
    if values[i] > best:
        best, best_p = float(values[i]), float(grid[i])
    return best, best_p


def assumption_free_pfer_bound(v: float, m_runs: int, eta: RationalLike) -> BoundReport:
    factor, p_star = assumption_free_pfer_factor(m_runs, eta)
    return BoundReport(
        "pfer_assumption_free",
        factor * v,
        {"v": v, "m_runs": m_runs, "eta": float(as_fraction(eta)), "factor": factor,
         "maximizer": p_star},
    )


def kfwer_bound(
    v: float,
    eta: RationalLike,
    k: int,
    gamma: float = 1.0,
    rho: float = 1.0,
) -> BoundReport:
    """P(V >= k) <= rho * gamma * v / k."""
    if k < 1 or int(k) != k:
        raise ConfigError("k must be a positive integer")
    if not (0 < rho <= 1):
        raise ConfigError("rho must lie in (0, 1]")
    if v < 0:
        raise ConfigError("v must be nonnegative")
    kind = "kfwer_rho_half" if rho == 0.5 else "kfwer_markov"
    return BoundReport(
        kind,
        rho * gamma * v / k,
        {"v": v, "eta": float(as_fraction(eta)), "k": int(k), "gamma": gamma,
         "rho": rho},
    )


# ---------------------------------------------------------------------------
# Negative-binomial bounds (integer base level)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HSpec:
    """A convex nondecreasing scaling function: x**nu or exp(lam * x)."""

    kind: str
    param: float

    def __post_init__(self):
        if self.kind == "power":
            if self.param < 1:
                raise ConfigError("power exponent must satisfy nu >= 1")
        elif self.kind == "exponential":
            if not (0 < self.param <= 1):
                raise ConfigError("exponential rate must lie in (0, 1]")
        else:
            raise ConfigError(f"unknown h kind {self.kind!r}")

    @classmethod
    def power(cls, nu: float) -> "HSpec":
        return cls("power", float(nu))

    @classmethod
    def exponential(cls, lam: float) -> "HSpec":
        return cls("exponential", float(lam))

    def __call__(self, x: float) -> float:
        if self.kind == "power":
            return x ** self.param
        return math.exp(self.param * x)


def nb_pmf(v: int, j_max: int) -> np.ndarray:
    """pmf of the number of successes before the v-th failure at rate 1/2."""
    out = np.empty(j_max + 1)
    out[0] = 0.5 ** v
    for j in range(j_max):
        out[j + 1] = out[j] * (j + v) / (j + 1) * 0.5
    return out


def _nb_expectation(v: int, scale: float, h: HSpec) -> float:
    """E[h(Z / scale)] for Z ~ NB(v, 1/2) by series summation."""
    if h.kind == "exponential" and math.exp(h.param / scale) >= 2.0:
        raise ConfigError(
            f"E[exp({h.param} * Z / {scale})] diverges for NB(., 1/2): "
            "the term ratio exp(lam/eta)/2 reaches 1"
        )
    total = 0.0
    pmf = 0.5 ** v
    j = 0
    while True:
        term = pmf * h(j / scale)
        total += term
        ratio = (j + v) / (j + 1) * 0.5
        if h.kind == "exponential":
            ratio *= math.exp(h.param / scale)
        if j >= v and term < 1e-12 and ratio < 1.0:
            break
        if j > 2_000_000:
            raise NumericalError(
                f"NB series did not converge (last term {term:.3e})"
            )
        pmf *= (j + v) / (j + 1) * 0.5
        j += 1
    return total


def kfwer_nb_bound(
    v: int,
    eta: RationalLike,
    k: int,
    h_spec: HSpec,
    rho: float = 1.0,
) -> BoundReport:
    """P(V >= k) <= rho * E[h(Z / eta)] / h(k) with Z ~ NB(v, 1/2).

    Requires an integer base level v >= 1 (the negative-binomial parameter).
    For h(x) = x the value reduces to rho * (v / eta) / k since E[Z] = v.
    """
    if int(v) != v or v < 1:
        raise ConfigError("the NB parameter v must be an integer >= 1")
    if k < 1 or int(k) != k:
        raise ConfigError("k must be a positive integer")
    if not (0 < rho <= 1):
        raise ConfigError("rho must lie in (0, 1]")
    eta_f = as_fraction(eta)
    expectation = _nb_expectation(int(v), float(eta_f), h_spec)
    value = rho * expectation / h_spec(float(k))
    return BoundReport(
        "kfwer_nb",
        value,
        {"v": int(v), "eta": float(eta_f), "k": int(k), "rho": rho,
         "h": (h_spec.kind, h_spec.param), "expectation": expectation},
    )


# ---------------------------------------------------------------------------
# Skewness / moment conditions on a false-count pmf
# ---------------------------------------------------------------------------


def _validate_pmf(probs: Sequence[float]) -> np.ndarray:
    p = np.asarray(probs, dtype=float)
    if p.ndim != 1 or p.size == 0:
        raise ConfigError("pmf must be a nonempty 1-D array")
    if np.any(p < -1e-15):
        raise ConfigError("pmf has negative entries")
    if abs(float(np.sum(p)) - 1.0) > 1e-12:
        raise ConfigError(f"pmf sums to {float(np.sum(p))!r}, not 1")
    return np.clip(p, 0.0, None)


def _interval_prob(p: np.ndarray, lo: float, hi: float) -> float:
    """P(V in [lo, hi)) for a pmf on {0, 1, ..., len(p)-1}."""
    a = max(0, math.ceil(lo))
    b = min(p.size, math.ceil(hi))
    if a >= b:
        return 0.0
    return float(np.sum(p[a:b]))


def check_skewness_condition(probs: Sequence[float], k: int) -> bool:
    """Left-skew condition permitting rho = 1/2:

    sum_{u=1}^{k-1} P(V in [k-u, k))  >=  sum_{u=1}^{k} P(V in [k, k+u)).
    """
    p = _validate_pmf(probs)
    if k < 1 or int(k) != k:
        raise ConfigError("k must be a positive integer")
    lhs = sum(_interval_prob(p, k - u, k) for u in range(1, k))
    rhs = sum(_interval_prob(p, k, k + u) for u in range(1, k + 1))
    return lhs >= rhs


def check_moment_conditions(probs: Sequence[float], k: int, h_spec: HSpec) -> bool:
    """Generalized left-skew condition for power / exponential scalings.

    With a = k/nu (power) or a = 1/lam (exponential):
    sum_{u=1}^{floor(a)-1} P(V in [k-u,k)) + frac(a) * P(V in [k-floor(a),k))
      >= sum_{u=1}^{floor(a)} P(V in [k,k+u)) + frac(a) * P(V in [k,k+floor(a)+1)).

    True permits rho = 1/2 in the h-scaled tail bound.  At nu = 1 this is
    exactly the plain skewness condition.
    """
    p = _validate_pmf(probs)
    if k < 1 or int(k) != k:
        raise ConfigError("k must be a positive integer")
    if h_spec.kind == "power":
        a = k / h_spec.param
    else:
        a = 1.0 / h_spec.param
    fl = math.floor(a)
    frac = a - fl
    lhs = sum(_interval_prob(p, k - u, k) for u in range(1, fl))
    lhs += frac * _interval_prob(p, k - fl, k)
    rhs = sum(_interval_prob(p, k, k + u) for u in range(1, fl + 1))
    rhs += frac * _interval_prob(p, k, k + fl + 1)
    return lhs >= rhs


# ---------------------------------------------------------------------------
# Smoothing-lemma validators (property-test engine, not user-facing bounds)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SmoothingLemmaReport:
    hypothesis_holds: bool
    bound_holds: Optional[bool]
    lhs_integral: float
    rhs_integral: float
    tail_prob: float
    bound_value: float


def _left_integral(values: np.ndarray, probs: np.ndarray, at: float, width: float) -> float:
    """integral_0^width P(X in [at - u, at)) du, exact for a discrete pmf."""
    mask = values < at
    # point x < at contributes |{u in [0, width] : u >= at - x}|
    contrib = np.clip(width - (at - values[mask]), 0.0, width)
    return float(np.sum(probs[mask] * contrib))


def _right_integral(values: np.ndarray, probs: np.ndarray, at: float, width: float) -> float:
    """integral_0^width P(X in [at, at + u)) du, exact for a discrete pmf."""
    mask = values >= at
    contrib = np.clip(width - (values[mask] - at), 0.0, width)
    return float(np.sum(probs[mask] * contrib))


def validate_smoothing_lemmas(
    values: Sequence[float],
    probs: Sequence[float],
    eta: float,
    xi: float,
    nu: Optional[float] = None,
    lam: Optional[float] = None,
    t: float = 1.0,
) -> List[SmoothingLemmaReport]:
    """Numerically check the smoothing tail lemmas on a finite pmf.

    Always evaluates the Markov-type lemma: if
    integral_0^eta P(X in [eta-u, eta)) du >= integral_0^xi P(X in [eta, eta+u)) du
    then P(X >= eta) <= E[X] / (eta + xi).  When ``nu`` (power) or ``lam``
    (exponential) is given, the corresponding Chebyshev/Chernoff variants at
    ratio ``t`` are appended.  Each report carries whether the hypothesis
    held and, if so, whether the implied bound held.
    """
    vals = np.asarray(values, dtype=float)
    p = np.asarray(probs, dtype=float)
    if vals.shape != p.shape or vals.ndim != 1:
        raise ConfigError("values and probs must be 1-D arrays of equal length")
    if np.any(vals < 0):
        raise ConfigError("support must be nonnegative")
    _validate_pmf(p)
    if eta <= 0 or xi <= 0:
        raise ConfigError("eta and xi must be positive")

    reports = []

    def make(width_l, width_r, tail_at, bound_value):
        lhs = _left_integral(vals, p, tail_at, width_l)
        rhs = _right_integral(vals, p, tail_at, width_r)
        hypothesis = lhs >= rhs - 1e-12
        tail = float(np.sum(p[vals >= tail_at]))
        holds = bool(tail <= bound_value + 1e-12) if hypothesis else None
        return SmoothingLemmaReport(
            hypothesis_holds=bool(hypothesis),
            bound_holds=holds,
            lhs_integral=lhs,
            rhs_integral=rhs,
            tail_prob=tail,
            bound_value=bound_value,
        )

    mean = float(np.sum(vals * p))
    reports.append(make(eta, xi, eta, mean / (eta + xi)))

    if nu is not None:
        if nu < 1:
            raise ConfigError("nu must be >= 1")
        moment = float(np.sum((vals ** nu) * p))
        reports.append(
            make(eta / nu, t * eta / nu, eta, moment / ((1 + t) * eta ** nu))
        )
    if lam is not None:
        if lam <= 0:
            raise ConfigError("lam must be positive")
        mgf = float(np.sum(np.exp(lam * vals) * p))
        reports.append(
            make(1.0 / lam, t / lam, eta, mgf / ((1 + t) * math.exp(lam * eta)))
        )
    return reports


def pfer_proof_chain(
    pmfs: np.ndarray, eta: RationalLike, gamma: float
) -> Tuple[bool, float, float]:
    """Replay the PFER argument on explicit null frequency pmfs.

    ``pmfs`` has one row per null group, columns over counts {0..M}.  If
    every row satisfies P(freq >= eta) <= gamma * E[freq], then the summed
    bound E[V] <= gamma * E[V_1] must hold.  Returns (all rows satisfy the
    premise, E[V], gamma * E[V_1]).
    """
    pm = np.atleast_2d(np.asarray(pmfs, dtype=float))
    m = pm.shape[1] - 1
    cutoff = selection_count_threshold(m, eta)
    tails = pm[:, cutoff:].sum(axis=1)
    means = pm @ (np.arange(m + 1) / m)
    premise = bool(np.all(tails <= gamma * means + 1e-12))
    ev = float(np.sum(tails))
    gamma_ev1 = float(gamma * np.sum(means))
    return premise, ev, gamma_ev1


# ---------------------------------------------------------------------------
# Parameter selection
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AdmissiblePair:
    eta: Fraction
    m_runs: int
    gamma: Fraction
    certificate: Fraction


@dataclass(frozen=True)
class ParameterPlan:
    """A runnable configuration certified for a k-FWER target."""

    v: float
    eta: Fraction
    m_runs: int
    bound: BoundReport
    tier: str


_ETA_GRID = [Fraction(i, 100) for i in range(1, 101)]


def kfwer_frontier(
    k: int,
    alpha: RationalLike,
    m_budget: int,
    tier: str = "skewed",
) -> List[AdmissiblePair]:
    """All (eta, M) pairs on the hundredths grid whose monotone-LP
    certificate controls the k-FWER strictly below alpha at base level v=1.

    Admissibility is decided in exact rational arithmetic; pairs whose
    certificate equals alpha exactly are excluded (a boundary certificate
    has no slack for the strict inequality the guarantee is quoted at).
    """
    if tier not in ASSUMPTION_TIERS:
        raise ConfigError(f"tier must be one of {sorted(ASSUMPTION_TIERS)}")
    if k < 1:
        raise ConfigError("k must be >= 1")
    alpha_f = as_fraction(alpha)
    rho = ASSUMPTION_TIERS[tier] if k >= 2 else Fraction(1)
    pairs = []
    for m in range(1, m_budget + 1):
        for eta in _ETA_GRID:
            gamma = monotone_gamma_exact(m, eta)
            cert = gamma if k == 1 else gamma * rho / k
            if cert < alpha_f:
                pairs.append(AdmissiblePair(eta, m, gamma, cert))
    return pairs


def select_parameters(
    k: int,
    alpha: RationalLike,
    m_budget: int,
    tier: str = "skewed",
) -> ParameterPlan:
    """Turn a k-FWER target into (v, eta, M) with a certified bound.

    Large k (k >= max(1/(4 alpha), 2)): eta = 1/2, v = 2*k*alpha, and the
    largest M within budget whose monotone-LP optimum is exactly 1, so every
    reported group is selected by at least half the runs.

    Small k (k = 1 or k < 1/(4 alpha)): v = 1 and a grid search over
    (eta, M) for pairs whose certificate is strictly below alpha; the pair
    with the smallest eta wins, ties broken by the largest M.
    """
    if m_budget < 2:
        raise ConfigError("m_budget must be >= 2")
    alpha_f = as_fraction(alpha)
    if not (0 < alpha_f < 1):
        raise ConfigError("alpha must lie in (0, 1)")
    if k < 1 or int(k) != k:
        raise ConfigError("k must be a positive integer")
    k = int(k)
    if tier not in ASSUMPTION_TIERS:
        raise ConfigError(f"tier must be one of {sorted(ASSUMPTION_TIERS)}")
    rho = ASSUMPTION_TIERS[tier]

    if k >= 2 and 4 * alpha_f * k >= 1:
        eta = Fraction(1, 2)
        v = 2 * k * alpha_f
        chosen = None
        for m in range(m_budget, 0, -1):
            if monotone_gamma_exact(m, eta) == 1:
                chosen = m
                break
        if chosen is None:  # cannot happen: M = 1 always attains gamma = 1
            raise CalibrationInfeasibleError("no M with unit LP value in budget")
        bound = kfwer_bound(float(v), eta, k, gamma=1.0, rho=float(rho))
        return ParameterPlan(
            v=float(v), eta=eta, m_runs=chosen, bound=bound, tier=tier
        )

    pairs = kfwer_frontier(k, alpha_f, m_budget, tier=tier)
    if not pairs:
        best = None
        for m in range(1, m_budget + 1):
            for eta in _ETA_GRID:
                gamma = monotone_gamma_exact(m, eta)
                cert = gamma if k == 1 else gamma * rho / k
                if best is None or cert < best[0]:
                    best = (cert, eta, m)
        raise CalibrationInfeasibleError(
            f"no (eta, M <= {m_budget}) pair certifies {k}-FWER < {alpha}; "
            f"best achievable is {float(best[0]):.4g} at eta={best[1]}, M={best[2]}",
            best_bound=float(best[0]),
            best_pair=(best[1], best[2]),
        )
    best_eta = min(p.eta for p in pairs)
    at_eta = [p for p in pairs if p.eta == best_eta]
    pick = max(at_eta, key=lambda p: p.m_runs)
    bound = kfwer_bound(
        1.0, pick.eta, k, gamma=float(pick.gamma), rho=float(rho) if k >= 2 else 1.0
    )
    return ParameterPlan(
        v=1.0, eta=pick.eta, m_runs=pick.m_runs, bound=bound, tier=tier
    )
