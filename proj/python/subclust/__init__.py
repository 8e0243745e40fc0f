"""Sublinear differentially-private k-median/k-means clustering by subsampling."""

from subclust._core import (
    Dataset,
    MetricSpace,
    RuntimeError,
    ValidationError,
    amplify,
    avg_cost_means,
    avg_cost_median,
    brute_force_opt_means,
    brute_force_opt_median,
    choose_xi,
    cluster,
    em_distribution,
    exponential_mechanism,
    generate_blobs,
    group_privacy_delta,
    group_privacy_guarantee,
    inner_bad_bound,
    inner_good_bound,
    poisson_subsample,
    run_pipeline,
    sample_size,
)

__all__ = [
    "Dataset",
    "MetricSpace",
    "RuntimeError",
    "ValidationError",
    "amplify",
    "avg_cost_means",
    "avg_cost_median",
    "brute_force_opt_means",
    "brute_force_opt_median",
    "choose_xi",
    "cluster",
    "em_distribution",
    "exponential_mechanism",
    "generate_blobs",
    "group_privacy_delta",
    "group_privacy_guarantee",
    "inner_bad_bound",
    "inner_good_bound",
    "poisson_subsample",
    "run_pipeline",
    "sample_size",
]
