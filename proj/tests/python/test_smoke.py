"""Smoke tests for the python bindings."""

import math

import pytest

import subclust as sc


def test_amplify_worked_example():
    out = sc.amplify(0.5, 0.25, 0.001)
    assert abs(out["eps_prime"] - 0.000648510942014811) < 1e-12
    assert out["eps_prime"] < 0.00065
    assert out["delta_prime"] == 0.001 * 0.25


def test_amplify_identity_at_full_sampling():
    out = sc.amplify(1.0, 0.2, 1.0)
    assert out["eps_prime"] == pytest.approx(1.0, abs=1e-14)
    assert out["delta_prime"] == pytest.approx(0.2, abs=1e-14)


def test_amplify_validation():
    with pytest.raises(ValueError):
        sc.amplify(0.5, 0.0, 0.0)


def test_group_privacy():
    assert sc.group_privacy_delta(0.1, 10, 2) == pytest.approx(0.0701908264, abs=1e-10)
    assert sc.group_privacy_delta(0.3, 12, 12) == 0.0
    out = sc.group_privacy_guarantee(0.5, 0.1, 100, 20)
    amp = sc.amplify(0.5, 0.0, 0.1)
    assert out["eps_group"] == pytest.approx(20 * amp["eps_prime"], rel=1e-12)
    assert out["naive_eps"] == pytest.approx(50.0)


def test_sample_bounds():
    out = sc.sample_size("median-metric", M=1, alpha=6, k=3, n=1000, eta=0.1, theta=0.05, c=1)
    assert out["s"] == 2372
    assert out["dominant_term"] == "bad-lemma"
    out = sc.sample_size("median-euclid", M=1, alpha=6, k=3, d=2, eta=0.01, theta=0.05, c=1)
    assert out["s"] == 285474
    assert sc.inner_good_bound("median-metric", 1, 2, 1, math.exp(-1), 0.5) == 36


def test_costs_and_oracle():
    space = sc.MetricSpace.euclidean([[0.0], [1.0], [10.0], [11.0]])
    data = sc.Dataset(space)
    assert sc.avg_cost_median(data, [[0.5], [10.5]]) == pytest.approx(0.5)
    assert sc.avg_cost_means(data, [[0.5], [10.5]]) == pytest.approx(0.25)
    opt = sc.brute_force_opt_median(data, 2)
    assert opt["optimum_avg_cost"] == pytest.approx(0.5)
    assert opt["optimum_centers"]["indices"] == [0, 2]
    assert opt["enumerated_count"] == 6


def test_exponential_mechanism():
    dist = sc.em_distribution([0.0, -1.0], 2.0, 1.0)
    assert dist[0] == pytest.approx(1 / (1 + math.exp(-1)), abs=1e-12)
    picks = {sc.exponential_mechanism([0.0, 5.0, 1.0], math.inf, 1.0, seed=s) for s in range(4)}
    assert picks == {1}


def test_pipeline_determinism_and_oracle_equivalence():
    space = sc.MetricSpace.euclidean([[0.0], [0.2], [5.0], [5.2], [9.0]])
    data = sc.Dataset(space)
    a = sc.run_pipeline(data, 2, 1.0, algorithm="oracle", seed=3)
    b = sc.run_pipeline(data, 2, 1.0, algorithm="oracle", seed=3)
    assert a == b
    opt = sc.brute_force_opt_median(data, 2)
    assert a["avg_cost_on_full"] == opt["optimum_avg_cost"]
    assert a["regime"] == "full-data"
    assert a["sample_size"] == 5


def test_subsample_and_blobs():
    space = sc.MetricSpace.euclidean([[float(i)] for i in range(100)])
    data = sc.Dataset(space)
    kept = sc.poisson_subsample(data, 0.5, seed=11)
    assert 20 < len(kept) < 80
    assert kept == sorted(kept)
    pts = sc.generate_blobs(3, 0.01, 60, d=2, seed=5)
    assert len(pts) == 60
    blob_space = sc.MetricSpace.euclidean(pts)
    assert blob_space.diameter() == pytest.approx(1.0, abs=1e-12)


def test_cluster_black_boxes():
    space = sc.MetricSpace.euclidean([[0.0], [0.1], [4.0], [4.1]])
    data = sc.Dataset(space)
    out = sc.cluster(data, 2, objective="median", algorithm="local-search", seed=2)
    assert len(out["indices"]) == 2
    cost = sc.avg_cost_median(data, out["indices"])
    opt = sc.brute_force_opt_median(data, 2)["optimum_avg_cost"]
    assert cost <= 5 * opt + 1e-9
