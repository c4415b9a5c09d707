"""Gaussian model-X knockoff sampling with the equicorrelated construction.

The sampler is a function of the covariates and a random stream only; it
never sees the response.  A fitted model precomputes the conditional-mean
map and a Cholesky factor of the conditional covariance, so drawing a
knockoff copy of an n-by-p matrix costs two matrix products plus noise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import linalg

from .errors import InvalidDataError, NumericalError

# Multiplicative shrink applied to the equicorrelated diagonal.  The
# equicorrelated optimum sits exactly on the PSD boundary, where the
# conditional covariance is singular and cannot be factorized.
DEFAULT_SLACK = 1e-3


@dataclass(frozen=True)
class GaussianKnockoffModel:
    """Frozen sampler state for N(mu, sigma) covariates.

    ``cond_mean_map`` is I - Sigma^{-1} diag(s): the conditional mean of the
    knockoff row given x is mu + (x - mu) @ cond_mean_map.
    ``cond_cov_factor`` is a lower Cholesky factor of
    2 diag(s) - diag(s) Sigma^{-1} diag(s).
    """

    mu: np.ndarray
    sigma: np.ndarray
    s: np.ndarray
    cond_mean_map: np.ndarray
    cond_cov_factor: np.ndarray

    @property
    def n_features(self) -> int:
        return self.mu.shape[0]


def fit_equicorrelated(
    sigma: np.ndarray,
    mu: np.ndarray | None = None,
    slack: float = DEFAULT_SLACK,
) -> GaussianKnockoffModel:
    """Fit the equicorrelated knockoff model for covariance ``sigma``.

    On the correlation scale every coordinate gets the same diagonal entry
    min(1, 2 * lambda_min), shrunk multiplicatively by ``slack`` so the
    conditional covariance stays strictly positive definite.
    """
    sigma = np.asarray(sigma, dtype=float)
    if sigma.ndim != 2 or sigma.shape[0] != sigma.shape[1]:
        raise InvalidDataError(f"sigma must be square, got shape {sigma.shape}")
    p = sigma.shape[0]
    if not np.allclose(sigma, sigma.T, atol=1e-10):
        raise InvalidDataError("sigma must be symmetric")
    if mu is None:
        mu = np.zeros(p)
    mu = np.asarray(mu, dtype=float)
    if mu.shape != (p,):
        raise InvalidDataError(f"mu must have shape ({p},), got {mu.shape}")
    diag = np.diag(sigma)
    if np.any(diag <= 0):
        raise InvalidDataError("sigma has nonpositive diagonal entries")

    scale = np.sqrt(diag)
    corr = sigma / np.outer(scale, scale)
    eigvals = linalg.eigvalsh(corr)
    lam_min = float(eigvals[0])
    if lam_min <= 0:
        raise InvalidDataError(
            f"sigma is not positive definite (lambda_min = {lam_min:.3e} "
            "on the correlation scale)"
        )
    s = min(1.0, 2.0 * lam_min) * diag * (1.0 - slack)

    try:
        cho = linalg.cho_factor(sigma, lower=True)
    except linalg.LinAlgError as exc:
        raise InvalidDataError(f"sigma is not positive definite: {exc}") from exc
    sigma_inv_s = linalg.cho_solve(cho, np.diag(s))
    cond_mean_map = np.eye(p) - sigma_inv_s
    cond_cov = 2.0 * np.diag(s) - s[:, None] * sigma_inv_s
    cond_cov = 0.5 * (cond_cov + cond_cov.T)
    try:
        factor = linalg.cholesky(cond_cov, lower=True)
    except linalg.LinAlgError as exc:
        raise NumericalError(
            "conditional knockoff covariance is not positive definite even "
            f"after shrinkage (slack={slack}); the joint covariance check "
            f"failed: {exc}"
        ) from exc

    return GaussianKnockoffModel(
        mu=mu,
        sigma=sigma,
        s=s,
        cond_mean_map=cond_mean_map,
        cond_cov_factor=factor,
    )


def sample_knockoff(
    model: GaussianKnockoffModel,
    x_row: np.ndarray,
    rng: np.random.Generator,
) -> np.ndarray:
    """Draw one knockoff row from the conditional Gaussian law given x_row."""
    x_row = np.asarray(x_row, dtype=float)
    if x_row.shape != (model.n_features,):
        raise InvalidDataError(
            f"x_row must have shape ({model.n_features},), got {x_row.shape}"
        )
    return sample_knockoff_matrix(model, x_row[None, :], rng)[0]


def sample_knockoff_matrix(
    model: GaussianKnockoffModel,
    x: np.ndarray,
    rng: np.random.Generator,
) -> np.ndarray:
    """Draw a conditionally independent knockoff row for every row of x."""
    x = np.asarray(x, dtype=float)
    if x.ndim != 2 or x.shape[1] != model.n_features:
        raise InvalidDataError(
            f"x must have {model.n_features} columns, got shape {x.shape}"
        )
    mean = model.mu + (x - model.mu) @ model.cond_mean_map
    noise = rng.standard_normal(x.shape)
    return mean + noise @ model.cond_cov_factor.T


def joint_covariance(model: GaussianKnockoffModel) -> np.ndarray:
    """The 2p-by-2p covariance of (X, X_knockoff): [[S, S-D], [S-D, S]]."""
    p = model.n_features
    off = model.sigma - np.diag(model.s)
    out = np.empty((2 * p, 2 * p))
    out[:p, :p] = model.sigma
    out[p:, p:] = model.sigma
    out[:p, p:] = off
    out[p:, :p] = off
    return out


def fit_from_data(
    x: np.ndarray,
    slack: float = DEFAULT_SLACK,
) -> tuple[GaussianKnockoffModel, float]:
    """Fit a Gaussian knockoff model from a data matrix.

    Uses the sample mean and covariance.  When p/n > 0.1 the off-diagonal of
    the sample covariance is shrunk toward zero with a Ledoit-Wolf-style
    plug-in weight (ratio of estimated estimation variance to off-diagonal
    energy), which keeps the fit well conditioned.  Returns the model and
    the shrinkage weight actually applied, for disclosure in run manifests.
    """
    x = np.asarray(x, dtype=float)
    n, p = x.shape
    if n < 2:
        raise InvalidDataError("need at least 2 rows to fit a covariance")
    mu = x.mean(axis=0)
    xc = x - mu
    cov = xc.T @ xc / n
    delta = 0.0
    if p / n > 0.1:
        # Plug-in weight: sum of Var-hat(S_ij) over the off-diagonal
        # relative to the off-diagonal mass of S.
        var_hat = (xc ** 2).T @ (xc ** 2) / n - cov ** 2
        off = ~np.eye(p, dtype=bool)
        denom = float(np.sum(cov[off] ** 2))
        if denom > 0:
            delta = float(np.clip(np.sum(var_hat[off]) / (n * denom), 0.0, 1.0))
        cov = (1.0 - delta) * cov + delta * np.diag(np.diag(cov))
    # Guard against a singular fit when n is small relative to p.
    floor = 1e-6 * float(np.mean(np.diag(cov)))
    cov = cov + floor * np.eye(p)
    return fit_equicorrelated(cov, mu, slack=slack), delta
