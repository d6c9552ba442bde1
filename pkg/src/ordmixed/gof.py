"""Goodness-of-fit statistics: Pearson chi-square, the likelihood-ratio
comparison against the intercept-only model, AIC, and the intraclass
correlation with delta-method uncertainty.

Fitted counts for random-effect models use each cluster's empirical-Bayes
prediction (posterior mode by default), so the chi-square reflects
cluster-specific probabilities rather than the marginal average.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaincc

from .estimation import FitResult, predict_random_effects
from .model import (
    BivariateRandomEffect,
    Dataset,
    LinkFamily,
    NoRandomEffect,
    UnivariateRandomEffect,
    category_probabilities,
)

LOGISTIC_VARIANCE = math.pi**2 / 3.0
Z_95 = 1.96


class DegenerateCellError(ValueError):
    """An expected cell count is numerically zero."""

    def __init__(self, message: str, cells: list[tuple[int, int]]):
        super().__init__(message)
        self.cells = cells


class InconsistentFitsError(ValueError):
    """The nested fit has a higher log-likelihood than the full fit."""


@dataclass(frozen=True)
class GofReport:
    chi2: float
    chi2_df: int
    chi2_p: float
    C: float
    C_df: int
    C_p: float
    aic: float
    icc: float | None = None
    icc_se: float | None = None
    icc_p: float | None = None
    icc_ci: tuple[float, float] | None = None


def chi_squared_survival(x: float, df: int) -> float:
    """P(chi-square with df degrees of freedom exceeds x), via the
    regularized upper incomplete gamma function."""
    if df < 1:
        raise ValueError(f"df must be >= 1, got {df}")
    if x < 0:
        raise ValueError(f"x must be >= 0, got {x}")
    return float(gammaincc(df / 2.0, x / 2.0))


def expected_counts(
    dataset: Dataset, fit: FitResult, link: LinkFamily, prediction: str = "mode"
) -> np.ndarray:
    """Fitted counts per (cluster, category) cell: cluster size times the
    fitted category probabilities, at zero deviation for homogeneous fits
    and at the empirical-Bayes prediction otherwise."""
    fe = fit.estimates.fixed
    eta = dataset.covariate_matrix @ fe.slopes if fe.slopes.size else 0.0
    deltas = fe.intercepts[None, :] + np.atleast_1d(eta)[:, None]
    if not isinstance(fit.estimates.re, NoRandomEffect):
        deltas = deltas + predict_random_effects(
            dataset, fit.estimates, link, method=prediction
        )
    probs = category_probabilities(link, deltas)
    return dataset.sizes[:, None] * probs


def pearson_chi2(
    dataset: Dataset, fit: FitResult, link: LinkFamily, prediction: str = "mode"
) -> tuple[float, int, float]:
    """Pearson chi-square over all (cluster, category) cells.

    Degrees of freedom are (K - 1) times the number of distinct covariate
    patterns minus the number of fixed-effect parameters only; variance
    components do not enter the count.
    """
    observed = dataset.count_matrix
    expected = expected_counts(dataset, fit, link, prediction)
    tiny = expected < 1e-10
    if np.any(tiny):
        cells = [(int(i), int(k)) for i, k in zip(*np.nonzero(tiny))]
        raise DegenerateCellError(
            f"{len(cells)} expected cell counts are numerically zero", cells
        )
    statistic = float(((observed - expected) ** 2 / expected).sum())
    n_patterns = np.unique(dataset.covariate_matrix, axis=0).shape[0]
    df = (dataset.n_categories - 1) * n_patterns - fit.n_fixed_parameters
    return statistic, df, chi_squared_survival(statistic, df)


def likelihood_ratio_C(full: FitResult, intercept: FitResult) -> tuple[float, int, float]:
    """Twice the log-likelihood gain of the fitted model over its
    intercept-only counterpart with the same random-effect structure."""
    if full.link is not intercept.link or full.re_structure != intercept.re_structure:
        raise InconsistentFitsError(
            "intercept model must share the link and random-effect structure"
        )
    statistic = 2.0 * (full.loglik - intercept.loglik)
    if statistic < -1e-6:
        raise InconsistentFitsError(
            f"intercept model log-likelihood exceeds the full model by {-statistic / 2:g}"
        )
    statistic = max(statistic, 0.0)
    df = full.n_fixed_parameters - intercept.n_fixed_parameters
    if df < 0:
        raise InconsistentFitsError(
            "the comparison model has more fixed-effect parameters than the full model"
        )
    if df == 0:
        # nothing was freed: the reference chi-square is degenerate at zero
        return statistic, df, 1.0 if statistic <= 1e-9 else 0.0
    return statistic, df, chi_squared_survival(statistic, df)


def aic(fit: FitResult) -> float:
    """-2 log-likelihood plus twice the number of estimated parameters,
    variance components included."""
    return -2.0 * fit.loglik + 2.0 * fit.n_parameters


def latent_variance(re) -> float:
    """Cluster-level variance on the latent logistic scale."""
    if isinstance(re, UnivariateRandomEffect):
        return re.sigma**2
    if isinstance(re, BivariateRandomEffect):
        return re.sigma1**2 + re.sigma2**2 + 2.0 * re.rho * re.sigma1 * re.sigma2
    raise ValueError("intraclass correlation requires a random effect")


def icc(re, covariance: np.ndarray | None = None):
    """Intraclass correlation v / (v + pi^2 / 3) with v the cluster-level
    variance, plus its delta-method standard error when the fit covariance
    of the variance components is supplied.

    ``covariance`` is the reported-scale covariance of (sigma,) for a
    univariate effect or (sigma1, sigma2, rho) for a bivariate one. When it
    is missing the SE, p-value, and interval are returned as None.
    """
    v = latent_variance(re)
    value = v / (v + LOGISTIC_VARIANCE)
    if covariance is None:
        return value, None, None, None
    cov = np.atleast_2d(np.asarray(covariance, dtype=float))
    dv = LOGISTIC_VARIANCE / (v + LOGISTIC_VARIANCE) ** 2
    if isinstance(re, UnivariateRandomEffect):
        grad = np.array([2.0 * re.sigma]) * dv
    else:
        grad = (
            np.array(
                [
                    2.0 * re.sigma1 + 2.0 * re.rho * re.sigma2,
                    2.0 * re.sigma2 + 2.0 * re.rho * re.sigma1,
                    2.0 * re.sigma1 * re.sigma2,
                ]
            )
            * dv
        )
    if cov.shape != (grad.size, grad.size):
        raise ValueError(
            f"covariance block has shape {cov.shape}, expected {(grad.size, grad.size)}"
        )
    se = float(np.sqrt(max(grad @ cov @ grad, 0.0)))
    if se > 0:
        z = value / se
        p = float(math.erfc(abs(z) / math.sqrt(2.0)))
    else:
        p = float("nan")
    return value, se, p, (value - Z_95 * se, value + Z_95 * se)


def variance_component_covariance(fit: FitResult) -> np.ndarray | None:
    """Reported-scale covariance block of the variance components."""
    if fit.covariance is None:
        return None
    idx = [i for i, name in enumerate(fit.names) if name in ("sigma", "sigma1", "sigma2", "rho")]
    if not idx:
        return None
    return fit.covariance[np.ix_(idx, idx)]


def gof_report(
    dataset: Dataset,
    fit: FitResult,
    intercept: FitResult,
    prediction: str = "mode",
) -> GofReport:
    """Assemble the full goodness-of-fit panel for a fitted model."""
    chi2, chi2_df, chi2_p = pearson_chi2(dataset, fit, fit.link, prediction)
    c_stat, c_df, c_p = likelihood_ratio_C(fit, intercept)
    aic_value = aic(fit)
    if isinstance(fit.estimates.re, NoRandomEffect):
        return GofReport(chi2, chi2_df, chi2_p, c_stat, c_df, c_p, aic_value)
    value, se, p, ci = icc(fit.estimates.re, variance_component_covariance(fit))
    return GofReport(
        chi2, chi2_df, chi2_p, c_stat, c_df, c_p, aic_value,
        icc=value, icc_se=se, icc_p=p, icc_ci=ci,
    )
