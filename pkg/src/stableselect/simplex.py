"""Dense two-phase simplex with Bland's rule.

Sized for the calibration linear programs: at most a few hundred variables
and constraints, dense tableaus, no sparsity tricks.  Bland's rule keeps the
degenerate LPs (flat extreme points) from cycling at the cost of a few extra
pivots, which is irrelevant at this scale.
"""

from __future__ import annotations

from typing import Optional, Tuple

import numpy as np

from .errors import CalibrationInfeasibleError, NumericalError

_TOL = 1e-10


class _Tableau:
    def __init__(self, table: np.ndarray, basis: np.ndarray):
        self.table = table  # rows = constraints, last column = rhs
        self.basis = basis  # basic variable index per row

    def pivot(self, row: int, col: int) -> None:
        t = self.table
        t[row] = t[row] / t[row, col]
        factors = t[:, col].copy()
        factors[row] = 0.0
        t -= np.outer(factors, t[row])
        self.basis[row] = col


def _reduced_costs(tab: _Tableau, cost: np.ndarray) -> Tuple[np.ndarray, float]:
    cb = cost[tab.basis]
    red = cost[:-1] - cb @ tab.table[:, :-1]
    value = cb @ tab.table[:, -1]
    return red, value


def _run_phase(
    tab: _Tableau,
    cost: np.ndarray,
    allowed: np.ndarray,
    max_iter: int,
) -> float:
    """Maximize cost over the current tableau. Returns the objective value."""
    for _ in range(max_iter):
        red, value = _reduced_costs(tab, cost)
        red[~allowed[:-1]] = -np.inf
        candidates = np.nonzero(red > _TOL)[0]
        if candidates.size == 0:
            return value
        col = int(candidates[0])  # Bland: smallest improving index
        column = tab.table[:, col]
        rows = np.nonzero(column > _TOL)[0]
        if rows.size == 0:
            raise NumericalError("LP is unbounded")
        ratios = tab.table[rows, -1] / column[rows]
        best = ratios.min()
        ties = rows[ratios <= best + _TOL]
        row = int(ties[np.argmin(tab.basis[ties])])  # Bland on leaving index
        tab.pivot(row, col)
    raise NumericalError("simplex did not terminate within the pivot budget")


def solve_lp(
    c: np.ndarray,
    a_eq: Optional[np.ndarray] = None,
    b_eq: Optional[np.ndarray] = None,
    a_ub: Optional[np.ndarray] = None,
    b_ub: Optional[np.ndarray] = None,
    max_iter: int = 200000,
) -> Tuple[np.ndarray, float]:
    """Maximize c @ x subject to a_eq x = b_eq, a_ub x <= b_ub, x >= 0.

    Returns (x, objective value).  Raises CalibrationInfeasibleError when
    the constraints admit no solution and NumericalError on unboundedness.
    """
    c = np.asarray(c, dtype=float)
    n = c.shape[0]
    a_eq = np.empty((0, n)) if a_eq is None else np.atleast_2d(np.asarray(a_eq, float))
    b_eq = np.empty(0) if b_eq is None else np.atleast_1d(np.asarray(b_eq, float))
    a_ub = np.empty((0, n)) if a_ub is None else np.atleast_2d(np.asarray(a_ub, float))
    b_ub = np.empty(0) if b_ub is None else np.atleast_1d(np.asarray(b_ub, float))

    m_ub, m_eq = a_ub.shape[0], a_eq.shape[0]
    m = m_ub + m_eq
    # Layout: [x (n) | slacks (m_ub) | artificials (added as needed) | rhs]
    a = np.vstack([a_ub, a_eq]) if m else np.empty((0, n))
    b = np.concatenate([b_ub, b_eq])
    slack = np.zeros((m, m_ub))
    for i in range(m_ub):
        slack[i, i] = 1.0
    neg = b < 0
    a[neg] *= -1.0
    slack[neg] *= -1.0
    b = np.abs(b)

    needs_artificial = np.ones(m, dtype=bool)
    basis = np.full(m, -1, dtype=np.int64)
    for i in range(m_ub):
        if slack[i, i] > 0:  # un-flipped ub row: slack can start basic
            needs_artificial[i] = False
            basis[i] = n + i
    art_rows = np.nonzero(needs_artificial)[0]
    n_art = art_rows.size
    art = np.zeros((m, n_art))
    for j, i in enumerate(art_rows):
        art[i, j] = 1.0
        basis[i] = n + m_ub + j

    table = np.hstack([a, slack, art, b[:, None]])
    tab = _Tableau(table, basis)
    total = n + m_ub + n_art

    if n_art:
        phase1_cost = np.zeros(total + 1)
        phase1_cost[n + m_ub : n + m_ub + n_art] = -1.0
        allowed = np.ones(total + 1, dtype=bool)
        value = _run_phase(tab, phase1_cost, allowed, max_iter)
        if value < -1e-8:
            raise CalibrationInfeasibleError(
                f"LP infeasible (phase-1 residual {-value:.3e})"
            )
        # Pivot leftover artificials out of the basis; drop redundant rows.
        keep = np.ones(m, dtype=bool)
        for i in range(m):
            if tab.basis[i] >= n + m_ub:
                cols = np.nonzero(np.abs(tab.table[i, : n + m_ub]) > _TOL)[0]
                if cols.size:
                    tab.pivot(i, int(cols[0]))
                else:
                    keep[i] = False
        if not np.all(keep):
            tab.table = tab.table[keep]
            tab.basis = tab.basis[keep]

    phase2_cost = np.zeros(total + 1)
    phase2_cost[:n] = c
    allowed = np.ones(total + 1, dtype=bool)
    allowed[n + m_ub : n + m_ub + n_art] = False
    value = _run_phase(tab, phase2_cost, allowed, max_iter)

    x = np.zeros(total)
    rhs = tab.table[:, -1]
    x[tab.basis] = rhs
    return x[:n], float(value)
