"""LP mixed-data statistics on mid-rank score functions."""

from lpmix.comoments import (
    LPComomentMatrix,
    coherence_eigen,
    conditional_mean_decomposition,
    independence_test,
    lp_comoments,
    lpinfor,
    pearson_from_lp,
    spearman,
)
from lpmix.copula import (
    CopulaModel,
    comparison_probability,
    conditional_comparison_density,
    conditional_quantile,
    copula_density,
    estimate_copula,
)
from lpmix.density import (
    ComparisonDensityEstimate,
    NullModel,
    comparison_distribution,
    discrete_gof_estimate,
    gof_components,
    skew_g_estimate,
)
from lpmix.empirical import (
    EmpiricalDistribution,
    build_empirical,
    from_pmf,
    informative_quantile_summary,
    mid_quantile,
    normal_grid,
    quantile,
    standardize,
    uniform_grid,
)
from lpmix.inference import classify_fit, feature_screen, t_equivalent, two_sample
from lpmix.moments import (
    LPMomentVector,
    lp_criterion_search,
    lp_moments,
    normality_component,
    quantile_reconstruction,
    tail_index,
)
from lpmix.scores import ScoreBasis, build_score_basis, eval_scores, eval_scores_u, legendre

__version__ = "0.1.0"
