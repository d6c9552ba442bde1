"""Maximum-likelihood fitting, standard errors, and random-effect prediction.

The optimizer works on an unconstrained parameterization (log standard
deviations, atanh correlation) with numerically differenced gradients.
Standard errors come from the central-difference observed information,
mapped back to the reported scale by the delta method. Proportional-odds
proposals outside the feasible region evaluate to -inf and simply shrink
the line-search step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np
from scipy.optimize import minimize
from scipy.special import erfc

from .likelihood import LoglikKernel
from .model import (
    BivariateRandomEffect,
    Cluster,
    Dataset,
    FixedEffects,
    LinkFamily,
    NoRandomEffect,
    ParameterVector,
    UnivariateRandomEffect,
)
from .quadrature import DEFAULT_ORDER_1D, DEFAULT_ORDER_2D, gauss_hermite

Z_95 = 1.96
_PENALTY = 1e10  # finite stand-in for -inf inside the line search
_LOG_SIGMA_FLOOR = -12.0  # optimizer box, well below the sigma = 0 report threshold
_LOG_SIGMA_ZERO = -8.0  # log sigma below this is reported as sigma = 0
_ATANH_RHO_BOUND = 12.0
_GRAD_TOL = 1e-4

RE_STRUCTURES = ("none", "univariate", "bivariate")


class EstimationDegenerateError(ValueError):
    """Raised when a category is never observed anywhere in the data."""


class CovarianceUnavailableError(RuntimeError):
    """Negative Hessian is singular or indefinite at the given point."""

    def __init__(self, message: str, eigenvalues: np.ndarray):
        super().__init__(message)
        self.eigenvalues = np.asarray(eigenvalues)


@dataclass(frozen=True)
class FitOptions:
    """Controls for the optimizer and the integration rule.

    ``quadrature_order`` of None picks 30 nodes for a univariate effect and
    12 per axis for a bivariate effect. ``seed`` feeds the jittered
    restarts used when the default start fails to converge.
    """

    quadrature_order: int | None = None
    max_iterations: int = 500
    relative_tolerance: float = 1e-9
    starting_values: ParameterVector | None = None
    seed: int | None = None
    standard_errors: bool = True

    def __post_init__(self):
        if self.relative_tolerance <= 0:
            raise ValueError("relative_tolerance must be > 0")
        if self.quadrature_order is not None and self.quadrature_order < 1:
            raise ValueError("quadrature_order must be >= 1")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")


@dataclass(frozen=True)
class FitResult:
    """A fitted model: estimates with uncertainty and diagnostics.

    ``names`` orders the reported parameters (intercepts, slopes, then
    variance components); ``covariance`` is on the reported scale. The
    95% interval is estimate +- 1.96 standard errors.
    """

    estimates: ParameterVector
    link: LinkFamily
    re_structure: str
    names: tuple[str, ...]
    values: np.ndarray
    se: np.ndarray
    covariance: np.ndarray | None
    loglik: float
    converged: bool
    iterations: int
    n_evaluations: int
    p_values: np.ndarray
    ci_lower: np.ndarray
    ci_upper: np.ndarray
    n_parameters: int
    n_fixed_parameters: int
    diagnostics: dict = field(default_factory=dict)

    def __getitem__(self, name: str) -> float:
        return float(self.values[self.names.index(name)])


class _Parameterization:
    """Maps between the unconstrained optimizer vector and model values."""

    def __init__(self, n_intercepts: int, slope_names: tuple[str, ...], structure: str):
        if structure not in RE_STRUCTURES:
            raise ValueError(f"unknown random-effect structure: {structure!r}")
        self.n_intercepts = n_intercepts
        self.n_slopes = len(slope_names)
        self.structure = structure
        variance_names = {
            "none": (),
            "univariate": ("sigma",),
            "bivariate": ("sigma1", "sigma2", "rho"),
        }[structure]
        self.names = (
            tuple(f"c{i + 1}" for i in range(n_intercepts))
            + tuple(slope_names)
            + variance_names
        )
        self.n_variance = len(variance_names)
        self.size = len(self.names)

    def split(self, theta: np.ndarray):
        a = self.n_intercepts
        b = a + self.n_slopes
        return theta[:a], theta[a:b], theta[b:]

    def pack(self, params: ParameterVector) -> np.ndarray:
        fe = params.fixed
        tail: list[float] = []
        if self.structure == "univariate":
            tail = [math.log(max(params.re.sigma, 1e-4))]
        elif self.structure == "bivariate":
            re = params.re
            tail = [
                math.log(max(re.sigma1, 1e-4)),
                math.log(max(re.sigma2, 1e-4)),
                math.atanh(np.clip(re.rho, -0.999999, 0.999999)),
            ]
        return np.concatenate([fe.intercepts, fe.slopes, tail])

    def unpack(self, theta: np.ndarray) -> ParameterVector:
        intercepts, slopes, tail = self.split(theta)
        if self.structure == "none":
            re = NoRandomEffect()
        elif self.structure == "univariate":
            re = UnivariateRandomEffect(sigma=math.exp(tail[0]))
        else:
            re = BivariateRandomEffect(
                sigma1=math.exp(tail[0]),
                sigma2=math.exp(tail[1]),
                rho=math.tanh(tail[2]),
            )
        return ParameterVector(fixed=FixedEffects(intercepts=intercepts, slopes=slopes), re=re)

    def reported(self, theta: np.ndarray) -> np.ndarray:
        out = np.array(theta, dtype=float)
        i = self.n_intercepts + self.n_slopes
        if self.structure == "univariate":
            out[i] = math.exp(theta[i])
        elif self.structure == "bivariate":
            out[i] = math.exp(theta[i])
            out[i + 1] = math.exp(theta[i + 1])
            out[i + 2] = math.tanh(theta[i + 2])
        return out

    def delta_jacobian(self, theta: np.ndarray) -> np.ndarray:
        """Diagonal of d(reported)/d(theta) for the delta method."""
        jac = np.ones_like(theta)
        i = self.n_intercepts + self.n_slopes
        if self.structure == "univariate":
            jac[i] = math.exp(theta[i])
        elif self.structure == "bivariate":
            jac[i] = math.exp(theta[i])
            jac[i + 1] = math.exp(theta[i + 1])
            jac[i + 2] = 1.0 - math.tanh(theta[i + 2]) ** 2
        return jac

    def bounds(self) -> list[tuple[float | None, float | None]]:
        free: list[tuple[float | None, float | None]] = [(None, None)] * (
            self.n_intercepts + self.n_slopes
        )
        if self.structure == "univariate":
            free.append((_LOG_SIGMA_FLOOR, None))
        elif self.structure == "bivariate":
            free.extend(
                [
                    (_LOG_SIGMA_FLOOR, None),
                    (_LOG_SIGMA_FLOOR, None),
                    (-_ATANH_RHO_BOUND, _ATANH_RHO_BOUND),
                ]
            )
        return free


def _tensor_grid(order: int) -> tuple[np.ndarray, np.ndarray]:
    base = gauss_hermite(order)
    t = np.column_stack([np.repeat(base.nodes, order), np.tile(base.nodes, order)])
    w = np.outer(base.weights, base.weights).ravel()
    return t, w


def _make_loglik(kernel: LoglikKernel, param: _Parameterization, order: int) -> Callable:
    """Total log-likelihood as a function of the unconstrained vector."""
    if param.structure == "none":

        def loglik(theta):
            c, b, _ = param.split(theta)
            return kernel.conditional(c, b).sum()

    elif param.structure == "univariate":
        rule = gauss_hermite(order)
        nodes, weights = rule.nodes, rule.weights

        def loglik(theta):
            c, b, tail = param.split(theta)
            sigma = math.exp(tail[0])
            return kernel.marginal(c, b, sigma * nodes, weights).sum()

    else:
        grid, weights = _tensor_grid(order)

        def loglik(theta):
            c, b, tail = param.split(theta)
            s1, s2 = math.exp(tail[0]), math.exp(tail[1])
            rho = math.tanh(tail[2])
            l22 = s2 * math.sqrt(max(0.0, 1.0 - rho * rho))
            chol = np.array([[s1, 0.0], [rho * s2, l22]])
            return kernel.marginal(c, b, grid @ chol.T, weights).sum()

    return loglik


def _empirical_intercepts(dataset: Dataset, link: LinkFamily) -> np.ndarray:
    """Feasible starting intercepts from the pooled category proportions."""
    totals = dataset.count_matrix.sum(axis=0).astype(float)
    p = np.clip(totals / totals.sum(), 1e-6, None)
    p = p / p.sum()
    if link is LinkFamily.PROPORTIONAL_ODDS:
        cum = np.cumsum(p)[:-1]
        return np.log(cum) - np.log1p(-cum)
    if link is LinkFamily.ADJACENT_CATEGORIES:
        return np.log(p[:-1]) - np.log(p[1:])
    tail = np.cumsum(p[::-1])[::-1]
    return np.log(p[:-1]) - np.log(tail[1:])


def _central_gradient(f: Callable, theta: np.ndarray, rel_step: float = 1e-5) -> np.ndarray:
    grad = np.empty_like(theta)
    for i in range(theta.size):
        h = rel_step * max(1.0, abs(theta[i]))
        up, dn = theta.copy(), theta.copy()
        up[i] += h
        dn[i] -= h
        grad[i] = (f(up) - f(dn)) / (2.0 * h)
    return grad


def numerical_covariance(objective: Callable, at: np.ndarray) -> np.ndarray:
    """Inverse negative Hessian of a log-likelihood-style objective.

    The Hessian uses central differences with per-coordinate step
    max(1e-4, 1e-4 |theta_i|) and is symmetrized before inversion. A
    singular or indefinite negative Hessian raises
    CovarianceUnavailableError carrying the eigenvalues.
    """
    at = np.asarray(at, dtype=float)
    n = at.size
    h = np.maximum(1e-4, 1e-4 * np.abs(at))
    f0 = objective(at)
    hess = np.empty((n, n))

    def at_offset(i, si, j=None, sj=0.0):
        x = at.copy()
        x[i] += si * h[i]
        if j is not None:
            x[j] += sj * h[j]
        return objective(x)

    for i in range(n):
        hess[i, i] = (at_offset(i, 1.0) - 2.0 * f0 + at_offset(i, -1.0)) / h[i] ** 2
        for j in range(i + 1, n):
            cross = (
                at_offset(i, 1.0, j, 1.0)
                - at_offset(i, 1.0, j, -1.0)
                - at_offset(i, -1.0, j, 1.0)
                + at_offset(i, -1.0, j, -1.0)
            ) / (4.0 * h[i] * h[j])
            hess[i, j] = cross
            hess[j, i] = cross
    hess = 0.5 * (hess + hess.T)
    info = -hess
    eig = np.linalg.eigvalsh(info)
    if not np.all(np.isfinite(eig)) or eig.min() <= 0.0:
        raise CovarianceUnavailableError(
            "negative Hessian is singular or indefinite", eigenvalues=eig
        )
    return np.linalg.inv(info)


def _clipped_covariance(objective: Callable, at: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Pseudo-inverse fallback used when the information matrix is not
    positive definite (variance components on the boundary)."""
    at = np.asarray(at, dtype=float)
    n = at.size
    h = np.maximum(1e-4, 1e-4 * np.abs(at))
    f0 = objective(at)
    hess = np.empty((n, n))
    for i in range(n):
        xp, xm = at.copy(), at.copy()
        xp[i] += h[i]
        xm[i] -= h[i]
        hess[i, i] = (objective(xp) - 2.0 * f0 + objective(xm)) / h[i] ** 2
        for j in range(i + 1, n):
            vals = []
            for si, sj in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
                x = at.copy()
                x[i] += si * h[i]
                x[j] += sj * h[j]
                vals.append(objective(x))
            hess[i, j] = hess[j, i] = (vals[0] - vals[1] - vals[2] + vals[3]) / (
                4.0 * h[i] * h[j]
            )
    info = -0.5 * (hess + hess.T)
    eigval, eigvec = np.linalg.eigh(info)
    floor = max(1e-10, 1e-10 * abs(eigval).max())
    inv = np.where(eigval > floor, 1.0 / np.maximum(eigval, floor), 0.0)
    return (eigvec * inv) @ eigvec.T, eigval


def _validate_data(dataset: Dataset, re_structure: str) -> None:
    if re_structure not in RE_STRUCTURES:
        raise ValueError(f"unknown random-effect structure: {re_structure!r}")
    if re_structure == "bivariate" and dataset.n_categories != 3:
        raise ValueError("a bivariate random effect requires exactly 3 categories")
    totals = dataset.count_matrix.sum(axis=0)
    if np.any(totals == 0):
        empty = [int(k) + 1 for k in np.flatnonzero(totals == 0)]
        raise EstimationDegenerateError(
            f"categories never observed anywhere in the data: {empty}"
        )


def _structure_of(params: ParameterVector) -> str:
    if isinstance(params.re, NoRandomEffect):
        return "none"
    if isinstance(params.re, UnivariateRandomEffect):
        return "univariate"
    return "bivariate"


def _fit_impl(
    dataset: Dataset,
    link: LinkFamily,
    re_structure: str,
    opts: FitOptions,
    slope_names: tuple[str, ...],
) -> FitResult:
    param = _Parameterization(dataset.n_categories - 1, slope_names, re_structure)
    order = opts.quadrature_order
    if order is None:
        order = DEFAULT_ORDER_2D if re_structure == "bivariate" else DEFAULT_ORDER_1D

    kernel = LoglikKernel(_restrict(dataset, slope_names), link)
    loglik_fn = _make_loglik(kernel, param, order)

    theta0 = _starting_point(dataset, link, re_structure, opts, param, slope_names)

    evals = {"n": 0, "last": np.nan}

    def negloglik(theta):
        value = loglik_fn(theta)
        evals["n"] += 1
        if not np.isfinite(value):
            evals["last"] = np.inf
            return _PENALTY
        evals["last"] = -value
        return -value

    bounds = param.bounds()
    rng = np.random.default_rng(np.random.SeedSequence(0 if opts.seed is None else opts.seed))
    best = None
    converged = False
    for attempt in range(4):
        start = theta0 if attempt == 0 else theta0 + 0.3 * rng.standard_normal(param.size)
        if negloglik(start) >= _PENALTY:
            continue
        iterate_f: list[float] = []
        res = minimize(
            negloglik,
            start,
            method="L-BFGS-B",
            bounds=bounds,
            callback=lambda xk: iterate_f.append(evals["last"]),
            options=dict(
                maxiter=opts.max_iterations,
                ftol=1e-13,
                gtol=1e-7,
                maxcor=25,
                maxls=60,
            ),
        )
        grad = _central_gradient(loglik_fn, res.x)
        scale = max(1.0, abs(res.fun))
        scaled_grad = np.abs(grad) * np.maximum(1.0, np.abs(res.x)) / scale
        at_bound = _active_bounds(res.x, bounds)
        grad_ok = bool(np.all(scaled_grad[~at_bound] < _GRAD_TOL))
        if len(iterate_f) >= 2:
            rel_change = abs(iterate_f[-1] - iterate_f[-2]) / max(1.0, abs(iterate_f[-1]))
        else:
            rel_change = 0.0
        ok = grad_ok and rel_change < max(opts.relative_tolerance, 1e-12) and np.isfinite(res.fun)
        if best is None or res.fun < best[0].fun:
            best = (res, grad, scaled_grad)
        if ok:
            best = (res, grad, scaled_grad)
            converged = True
            break

    if best is None:
        raise ValueError(
            "no feasible starting point: the log-likelihood is -inf at the "
            "supplied starting values and at every jittered restart"
        )
    res, grad, scaled_grad = best
    theta_hat = res.x
    loglik = -float(res.fun)

    diagnostics: dict = {
        "gradient_max_scaled": float(np.abs(scaled_grad).max()),
        "optimizer_message": str(res.message),
    }
    vi = param.n_intercepts + param.n_slopes
    boundary = []
    if re_structure == "univariate" and theta_hat[vi] < _LOG_SIGMA_ZERO:
        boundary.append("sigma")
    if re_structure == "bivariate":
        if theta_hat[vi] < _LOG_SIGMA_ZERO:
            boundary.append("sigma1")
        if theta_hat[vi + 1] < _LOG_SIGMA_ZERO:
            boundary.append("sigma2")
        if abs(theta_hat[vi + 2]) > _ATANH_RHO_BOUND - 1e-6:
            boundary.append("rho")
    if boundary:
        diagnostics["boundary"] = tuple(boundary)

    covariance = None
    se = np.full(param.size, np.nan)
    if opts.standard_errors:
        jac = param.delta_jacobian(theta_hat)
        try:
            cov_theta = numerical_covariance(loglik_fn, theta_hat)
        except CovarianceUnavailableError as err:
            cov_theta, eigval = _clipped_covariance(loglik_fn, theta_hat)
            diagnostics["covariance_note"] = "pseudo-inverse (information not positive definite)"
            diagnostics["information_eigenvalues"] = tuple(float(v) for v in err.eigenvalues)
        covariance = cov_theta * np.outer(jac, jac)
        se = np.sqrt(np.maximum(np.diag(covariance), 0.0))

    values = param.reported(theta_hat)
    if "sigma" in boundary:
        values[vi] = 0.0
    if "sigma1" in boundary:
        values[vi] = 0.0
    if "sigma2" in boundary:
        values[vi + 1] = 0.0

    with np.errstate(divide="ignore", invalid="ignore"):
        z = values / se
        p_values = erfc(np.abs(z) / np.sqrt(2.0))

    estimates = param.unpack(theta_hat)
    if boundary:
        estimates = _apply_boundary(estimates, boundary)

    return FitResult(
        estimates=estimates,
        link=link,
        re_structure=re_structure,
        names=param.names,
        values=values,
        se=se,
        covariance=covariance,
        loglik=loglik,
        converged=converged,
        iterations=int(res.nit),
        n_evaluations=evals["n"],
        p_values=p_values,
        ci_lower=values - Z_95 * se,
        ci_upper=values + Z_95 * se,
        n_parameters=param.size,
        n_fixed_parameters=param.n_intercepts + param.n_slopes,
        diagnostics=diagnostics,
    )


def _active_bounds(theta: np.ndarray, bounds) -> np.ndarray:
    active = np.zeros(theta.size, dtype=bool)
    for i, (lo, hi) in enumerate(bounds):
        if lo is not None and theta[i] <= lo + 1e-9:
            active[i] = True
        if hi is not None and theta[i] >= hi - 1e-9:
            active[i] = True
    return active


def _apply_boundary(params: ParameterVector, boundary: list[str]) -> ParameterVector:
    re = params.re
    if isinstance(re, UnivariateRandomEffect) and "sigma" in boundary:
        re = UnivariateRandomEffect(sigma=0.0)
    elif isinstance(re, BivariateRandomEffect):
        re = BivariateRandomEffect(
            sigma1=0.0 if "sigma1" in boundary else re.sigma1,
            sigma2=0.0 if "sigma2" in boundary else re.sigma2,
            rho=re.rho,
        )
    return replace(params, re=re)


def _restrict(dataset: Dataset, slope_names: tuple[str, ...]) -> Dataset:
    """Dataset view with all covariates (full model) or none (intercept model)."""
    if slope_names == dataset.slope_names():
        return dataset
    clusters = tuple(
        Cluster(covariates=np.empty(0), counts=c.counts) for c in dataset.clusters
    )
    return Dataset(clusters=clusters)


def _starting_point(
    dataset: Dataset,
    link: LinkFamily,
    re_structure: str,
    opts: FitOptions,
    param: _Parameterization,
    slope_names: tuple[str, ...],
) -> np.ndarray:
    start = opts.starting_values
    if start is not None and _structure_of(start) == re_structure:
        if (
            start.fixed.intercepts.size == param.n_intercepts
            and start.fixed.slopes.size == param.n_slopes
        ):
            return param.pack(start)
        raise ValueError("starting values do not match the model dimensions")
    if re_structure == "none":
        intercepts = _empirical_intercepts(dataset, link)
        return np.concatenate([intercepts, np.zeros(param.n_slopes)])
    base_opts = replace(opts, starting_values=None, standard_errors=False)
    base = _fit_impl(dataset, link, "none", base_opts, slope_names)
    tail = {
        "univariate": [math.log(0.5)],
        "bivariate": [math.log(0.5), math.log(0.5), 0.0],
    }[re_structure]
    return np.concatenate(
        [base.estimates.fixed.intercepts, base.estimates.fixed.slopes, tail]
    )


def fit(
    dataset: Dataset,
    link: LinkFamily,
    re_structure: str = "none",
    opts: FitOptions = FitOptions(),
) -> FitResult:
    """Maximize the marginal (or conditional) log-likelihood.

    Random-effect fits are seeded by a homogeneous fit with the standard
    deviations started at 0.5 and the correlation at 0. Non-convergence
    after the jittered restarts is reported in the result, not raised.
    """
    _validate_data(dataset, re_structure)
    return _fit_impl(dataset, link, re_structure, opts, dataset.slope_names())


def fit_intercept_model(
    dataset: Dataset,
    link: LinkFamily,
    re_structure: str = "none",
    opts: FitOptions = FitOptions(),
) -> FitResult:
    """Fit with every slope fixed at zero, keeping the same random-effect
    structure as the model it will be compared against."""
    _validate_data(dataset, re_structure)
    if opts.starting_values is not None and opts.starting_values.fixed.slopes.size:
        opts = replace(opts, starting_values=None)
    return _fit_impl(dataset, link, re_structure, opts, ())


def predict_random_effects(
    dataset: Dataset,
    params: ParameterVector,
    link: LinkFamily,
    method: str = "mode",
    order: int = 40,
) -> np.ndarray:
    """Empirical-Bayes random-effect predictions for every cluster.

    ``mode`` maximizes the conditional log-likelihood plus the normal
    log-density (Newton search seeded by a node-grid scan); ``mean`` is the
    posterior mean computed by quadrature. Returns shape (n, K-1); a
    univariate effect is replicated across the slots.
    """
    if method not in ("mode", "mean"):
        raise ValueError(f"unknown prediction method: {method!r}")
    kernel = LoglikKernel(dataset, link)
    fe = params.fixed
    n = dataset.n_clusters
    k1 = dataset.n_categories - 1
    re = params.re
    if isinstance(re, NoRandomEffect):
        raise ValueError("random-effect prediction requires a random-effect fit")

    if isinstance(re, UnivariateRandomEffect):
        if re.sigma <= 1e-8:
            return np.zeros((n, k1))
        eps = _univariate_posterior(kernel, fe, re.sigma, method, order)
        return np.repeat(eps[:, None], k1, axis=1)

    if dataset.n_categories != 3:
        raise ValueError("a bivariate random effect requires exactly 3 categories")
    return _bivariate_posterior(kernel, fe, re, method, order)


def _univariate_posterior(kernel, fe, sigma, method, order) -> np.ndarray:
    rule = gauss_hermite(order)
    nodes = sigma * rule.nodes
    grid_ll = kernel.node_logliks(fe.intercepts, fe.slopes, nodes)
    if method == "mean":
        alpha = _softmax(grid_ll + np.log(rule.weights)[None, :])
        return alpha @ nodes

    def posterior(e):
        return kernel.conditional_at(fe.intercepts, fe.slopes, e) - 0.5 * (e / sigma) ** 2

    prior = -0.5 * (nodes / sigma) ** 2
    e = nodes[np.argmax(grid_ll + prior[None, :], axis=1)].astype(float)
    h = 1e-5
    for _ in range(80):
        f0, fp, fm = posterior(e), posterior(e + h), posterior(e - h)
        grad = (fp - fm) / (2.0 * h)
        curv = (fp - 2.0 * f0 + fm) / h**2
        step = grad / np.where(curv < -1e-9, -curv, 1.0)
        np.clip(step, -1.0, 1.0, out=step)
        e = e + step
        if np.max(np.abs(grad)) < 1e-9:
            break
    return e


def _bivariate_posterior(kernel, fe, re, method, order) -> np.ndarray:
    cov = re.covariance()
    eigval, eigvec = np.linalg.eigh(cov)
    keep = eigval > max(1e-12, 1e-12 * eigval.max())
    amat = eigvec[:, keep] * np.sqrt(eigval[keep])  # (2, r), eps = amat @ z
    r = amat.shape[1]
    if r == 0:
        return np.zeros((kernel.x.shape[0], 2))

    base = gauss_hermite(min(order, 25))
    if r == 1:
        zgrid = base.nodes[:, None]
        logw = np.log(base.weights)
    else:
        zgrid = np.column_stack(
            [np.repeat(base.nodes, base.order), np.tile(base.nodes, base.order)]
        )
        logw = np.log(np.outer(base.weights, base.weights).ravel())
    eps_grid = zgrid @ amat.T  # (Q, 2)
    grid_ll = kernel.node_logliks(fe.intercepts, fe.slopes, eps_grid)
    grid_post = grid_ll - 0.5 * (zgrid**2).sum(axis=1)[None, :]

    if method == "mean":
        alpha = _softmax(grid_post + logw[None, :])
        return alpha @ eps_grid

    z = zgrid[np.argmax(grid_post + logw[None, :], axis=1)].astype(float)

    def posterior(zz):
        return (
            kernel.conditional_at(fe.intercepts, fe.slopes, zz @ amat.T)
            - 0.5 * (zz**2).sum(axis=1)
        )

    h = 1e-5
    for _ in range(80):
        grad, hess = _fd_grad_hess(posterior, z, h, r)
        step = _newton_step(grad, hess)
        np.clip(step, -1.0, 1.0, out=step)
        z = z + step
        if np.max(np.abs(grad)) < 1e-8:
            break
    return z @ amat.T


def _fd_grad_hess(f, z, h, r):
    n = z.shape[0]
    f0 = f(z)
    grad = np.empty((n, r))
    hess = np.empty((n, r, r))
    shifted = {}
    for i in range(r):
        zp, zm = z.copy(), z.copy()
        zp[:, i] += h
        zm[:, i] -= h
        fp, fm = f(zp), f(zm)
        shifted[i] = (fp, fm)
        grad[:, i] = (fp - fm) / (2.0 * h)
        hess[:, i, i] = (fp - 2.0 * f0 + fm) / h**2
    for i in range(r):
        for j in range(i + 1, r):
            zpp = z.copy()
            zpp[:, i] += h
            zpp[:, j] += h
            zmm = z.copy()
            zmm[:, i] -= h
            zmm[:, j] -= h
            zpm = z.copy()
            zpm[:, i] += h
            zpm[:, j] -= h
            zmp = z.copy()
            zmp[:, i] -= h
            zmp[:, j] += h
            cross = (f(zpp) - f(zpm) - f(zmp) + f(zmm)) / (4.0 * h * h)
            hess[:, i, j] = cross
            hess[:, j, i] = cross
    return grad, hess


def _newton_step(grad, hess):
    n, r = grad.shape
    step = np.empty_like(grad)
    for idx in range(n):
        h = hess[idx]
        try:
            s = np.linalg.solve(-h, grad[idx])
            if not np.all(np.isfinite(s)) or grad[idx] @ s < 0:
                s = grad[idx]
        except np.linalg.LinAlgError:
            s = grad[idx]
        step[idx] = s
    return step


def _softmax(logw: np.ndarray) -> np.ndarray:
    m = logw.max(axis=1, keepdims=True)
    m = np.where(np.isfinite(m), m, 0.0)
    w = np.exp(logw - m)
    return w / w.sum(axis=1, keepdims=True)


def empirical_bayes(cluster: Cluster, fit_result: FitResult, link: LinkFamily) -> np.ndarray:
    """Posterior-mode random-effect prediction for one cluster, as a vector
    with one entry per predictor slot."""
    ds = Dataset(clusters=(cluster,))
    return predict_random_effects(ds, fit_result.estimates, link, method="mode")[0]
