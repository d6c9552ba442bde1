"""Maximum-likelihood ordinal logistic regression for clustered data.

Three ordinal link families (proportional odds, adjacent categories,
continuation ratio), optionally with a univariate or bivariate normal
cluster random effect integrated out by Gauss-Hermite quadrature, plus
goodness-of-fit statistics and a seeded replication-study engine.
"""

from .model import (
    BivariateRandomEffect,
    Cluster,
    Dataset,
    FixedEffects,
    InfeasibleParametersError,
    LinkFamily,
    NoRandomEffect,
    ParameterVector,
    UnivariateRandomEffect,
    category_probabilities,
    linear_predictors,
    log_category_probabilities,
    recover_predictors,
)
from .quadrature import (
    DEFAULT_ORDER_1D,
    DEFAULT_ORDER_2D,
    QuadratureRule1D,
    QuadratureRule2D,
    bivariate_rule,
    gauss_hermite,
)
from .likelihood import (
    conditional_cluster_loglik,
    marginal_cluster_loglik,
    multinomial_log_coefficient,
    total_loglik,
)
from .estimation import (
    CovarianceUnavailableError,
    EstimationDegenerateError,
    FitOptions,
    FitResult,
    empirical_bayes,
    fit,
    fit_intercept_model,
    numerical_covariance,
    predict_random_effects,
)
from .gof import (
    DegenerateCellError,
    GofReport,
    InconsistentFitsError,
    aic,
    chi_squared_survival,
    gof_report,
    icc,
    likelihood_ratio_C,
    pearson_chi2,
)
from .simulation import (
    InvalidDesignError,
    SimulationDesign,
    SimulationSummary,
    StudyQualityError,
    factorial_design,
    generate_dataset,
    run_study,
    study_true_parameters,
)
from .datasets import builtin_dataset, strawberry_dataset
from .io import DatasetParseError, FactorSchema, load_dataset, render_dataset

__version__ = "0.1.0"
