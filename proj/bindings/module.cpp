#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "subclust/bounds.hpp"
#include "subclust/dataset_io.hpp"
#include "subclust/experiment.hpp"
#include "subclust/json_io.hpp"
#include "subclust/oracle.hpp"
#include "subclust/pipeline.hpp"

namespace py = pybind11;
using namespace subclust;

namespace {

py::dict amplified_dict(const AmplifiedPrivacy& a) {
  py::dict d;
  d["eps_prime"] = a.eps_prime;
  d["delta_prime"] = a.delta_prime;
  d["xi"] = a.xi;
  return d;
}

py::dict centers_dict(const CenterSet& c) {
  py::dict d;
  if (c.domain == CenterDomain::kGroundSet) {
    d["domain"] = "ground-set";
    d["indices"] = c.indices;
  } else {
    d["domain"] = "free";
    d["points"] = c.points;
  }
  return d;
}

py::dict oracle_dict(const OracleResult& r) {
  py::dict d;
  d["optimum_centers"] = centers_dict(r.optimum_centers);
  d["optimum_avg_cost"] = r.optimum_avg_cost;
  d["enumerated_count"] = r.enumerated_count;
  return d;
}

py::dict pipeline_dict(const PipelineReport& r) {
  py::dict d;
  d["centers"] = centers_dict(r.centers);
  d["sample_size"] = r.sample_size;
  d["avg_cost_on_sample"] = r.avg_cost_on_sample;
  d["avg_cost_on_full"] = r.avg_cost_on_full;
  d["amplified"] = amplified_dict(r.amplified);
  d["regime"] = std::string(r.regime == RegimeFlag::kSublinear ? "sublinear" : "full-data");
  d["retried"] = r.retried;
  return d;
}

CenterSet centers_from_arg(const MetricSpace& space, const py::object& centers) {
  if (py::isinstance<py::list>(centers) || py::isinstance<py::tuple>(centers)) {
    const py::sequence seq = centers.cast<py::sequence>();
    if (seq.size() > 0 && (py::isinstance<py::list>(seq[0]) || py::isinstance<py::tuple>(seq[0])))
      return CenterSet::from_points(space, centers.cast<std::vector<std::vector<double>>>());
  }
  return CenterSet::from_indices(space, centers.cast<std::vector<int>>());
}

BoundInputs bound_inputs(double M, double alpha, double gamma, int k, std::int64_t n, int d,
                         double eta, double theta, double c) {
  BoundInputs in;
  in.M = M;
  in.alpha = alpha;
  in.gamma = gamma;
  in.k = k;
  in.n = n;
  in.d = d;
  in.eta = eta;
  in.theta = theta;
  in.c = c;
  return in;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sublinear differentially-private k-median/k-means clustering by subsampling";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<RuntimeError>(m, "RuntimeError", PyExc_RuntimeError);

  py::class_<MetricSpace>(m, "MetricSpace")
      .def_static("euclidean", &MetricSpace::euclidean, py::arg("points"))
      .def_static(
          "from_distance_matrix",
          [](std::vector<std::vector<double>> matrix, bool validate_triangle) {
            return MetricSpace::from_distance_matrix(
                std::move(matrix), validate_triangle ? TriangleCheck::kOn : TriangleCheck::kOff);
          },
          py::arg("matrix"), py::arg("validate_triangle") = true)
      .def_static("from_file",
                  [](const std::string& path) { return load_dataset_file(path); },
                  py::arg("path"))
      .def("size", &MetricSpace::size)
      .def("dimension", &MetricSpace::dimension)
      .def("diameter", &MetricSpace::diameter)
      .def("distance", &MetricSpace::distance, py::arg("a"), py::arg("b"));

  py::class_<Dataset>(m, "Dataset")
      .def(py::init<const MetricSpace&>(), py::arg("space"), py::keep_alive<1, 2>())
      .def(py::init<const MetricSpace&, std::vector<int>>(), py::arg("space"),
           py::arg("members"), py::keep_alive<1, 2>())
      .def("size", &Dataset::size)
      .def_readonly("members", &Dataset::members);

  m.def("avg_cost_median",
        [](const Dataset& data, const py::object& centers) {
          return avg_cost_median(data, centers_from_arg(*data.space, centers));
        },
        py::arg("dataset"), py::arg("centers"),
        "Average distance to the nearest center; centers are ground-set "
        "indices or, for euclidean spaces, coordinate lists.");
  m.def("avg_cost_means",
        [](const Dataset& data, const py::object& centers) {
          return avg_cost_means(data, centers_from_arg(*data.space, centers));
        },
        py::arg("dataset"), py::arg("centers"));

  m.def("amplify",
        [](double eps, double delta, double xi) {
          return amplified_dict(amplify({eps, delta}, xi));
        },
        py::arg("eps"), py::arg("delta"), py::arg("xi"),
        "Privacy amplification by subsampling: (eps', delta') of the wrapper.");
  m.def("group_privacy_delta", &group_privacy_delta, py::arg("xi"), py::arg("g"),
        py::arg("threshold"), "Exact binomial tail P[Bin(g, xi) > threshold].");
  m.def("group_privacy_guarantee",
        [](double eps, double xi, int g, int threshold) {
          const GroupPrivacyResult r = group_privacy_guarantee(amplify({eps, 0.0}, xi), g, threshold);
          py::dict d;
          d["eps_group"] = r.eps_group;
          d["delta_group"] = r.delta_group;
          d["naive_eps"] = naive_group_privacy({eps, 0.0}, g).first;
          return d;
        },
        py::arg("eps"), py::arg("xi"), py::arg("g"), py::arg("threshold"));

  m.def("sample_size",
        [](const std::string& variant, double M, double alpha, double gamma, int k,
           std::int64_t n, int d, double eta, double theta, double c) {
          const SampleBound b = sample_bound(bound_variant_from_name(variant),
                                             bound_inputs(M, alpha, gamma, k, n, d, eta, theta, c));
          py::dict out;
          out["s"] = b.size;
          out["dominant_term"] = std::string(dominant_term_name(b.dominant_term));
          return out;
        },
        py::arg("variant"), py::arg("M") = 1.0, py::arg("alpha") = 1.0, py::arg("gamma") = 0.0,
        py::arg("k") = 1, py::arg("n") = 0, py::arg("d") = 0, py::arg("eta") = 0.1,
        py::arg("theta") = 0.05, py::arg("c") = 3.0);
  m.def("inner_good_bound",
        [](const std::string& variant, double M, double alpha, double beta, double theta,
           double opt_avg) {
          return inner_good_bound(bound_variant_from_name(variant), M, alpha, beta, theta, opt_avg);
        },
        py::arg("variant"), py::arg("M"), py::arg("alpha"), py::arg("beta"), py::arg("theta"),
        py::arg("opt_avg"));
  m.def("inner_bad_bound",
        [](const std::string& variant, double M, double beta, double theta, double opt_avg,
           std::int64_t n, int d, int k, double eta) {
          return inner_bad_bound(bound_variant_from_name(variant), M, beta, theta, opt_avg, n, d,
                                 k, eta);
        },
        py::arg("variant"), py::arg("M"), py::arg("beta"), py::arg("theta"), py::arg("opt_avg"),
        py::arg("n") = 0, py::arg("d") = 0, py::arg("k") = 1, py::arg("eta") = 0.1);

  m.def("exponential_mechanism",
        [](const std::vector<double>& utilities, double eps, double sensitivity,
           std::uint64_t seed) {
          Rng rng(seed);
          return exponential_mechanism(utilities, eps, sensitivity, rng);
        },
        py::arg("utilities"), py::arg("eps"), py::arg("sensitivity"), py::arg("seed") = 0);
  m.def("em_distribution", &em_distribution_oracle, py::arg("utilities"), py::arg("eps"),
        py::arg("sensitivity"), "Exact selection distribution of the exponential mechanism.");

  m.def("brute_force_opt_median",
        [](const Dataset& data, int k) { return oracle_dict(brute_force_opt_median(*data.space, data, k)); },
        py::arg("dataset"), py::arg("k"));
  m.def("brute_force_opt_means",
        [](const Dataset& data, int k) { return oracle_dict(brute_force_opt_means(*data.space, data, k)); },
        py::arg("dataset"), py::arg("k"));

  auto run_search = [](const Dataset& data, int k, const std::string& objective,
                       const std::string& algorithm, double eps, int rounds, std::uint64_t seed) {
    ClusteringBlackBox box;
    box.algorithm = algorithm_from_name(algorithm);
    box.rounds = rounds;
    box.meta.objective = objective_from_name(objective);
    box.meta.eps = eps;
    Rng rng(seed);
    return centers_dict(box.run(*data.space, data, k, rng));
  };
  m.def("cluster", run_search, py::arg("dataset"), py::arg("k"), py::arg("objective") = "median",
        py::arg("algorithm") = "local-search", py::arg("eps") = kNonPrivateEps,
        py::arg("rounds") = 0, py::arg("seed") = 0,
        "Run a clustering black box; eps = inf selects the non-private path.");

  m.def("poisson_subsample",
        [](const Dataset& data, double xi, std::uint64_t seed) {
          Rng rng(seed);
          return poisson_subsample(data, xi, rng).members;
        },
        py::arg("dataset"), py::arg("xi"), py::arg("seed") = 0);

  m.def("run_pipeline",
        [](const Dataset& data, int k, double xi, const std::string& objective,
           const std::string& algorithm, double eps, double delta, int rounds,
           std::uint64_t seed, const std::string& empty_sample_policy) {
          PipelineConfig cfg;
          cfg.k = k;
          cfg.xi = xi;
          cfg.seed = seed;
          if (empty_sample_policy == "retry-once")
            cfg.empty_sample_policy = EmptySamplePolicy::kRetryOnce;
          else if (empty_sample_policy != "error")
            throw ValidationError("InvalidConfig: unknown empty_sample_policy");
          cfg.blackbox.algorithm = algorithm_from_name(algorithm);
          cfg.blackbox.rounds = rounds;
          cfg.blackbox.meta.objective = objective_from_name(objective);
          cfg.blackbox.meta.eps = eps;
          cfg.blackbox.meta.delta = delta;
          return pipeline_dict(run_pipeline(*data.space, data, cfg));
        },
        py::arg("dataset"), py::arg("k"), py::arg("xi"), py::arg("objective") = "median",
        py::arg("algorithm") = "local-search", py::arg("eps") = kNonPrivateEps,
        py::arg("delta") = 0.0, py::arg("rounds") = 0, py::arg("seed") = 0,
        py::arg("empty_sample_policy") = "error");

  m.def("choose_xi",
        [](std::int64_t sample_size, std::int64_t data_size) {
          SampleBound b;
          b.size = sample_size;
          const XiChoice c = choose_xi_from_bound(b, data_size);
          return py::make_tuple(c.xi, std::string(c.regime == RegimeFlag::kFullData
                                                      ? "full-data"
                                                      : "sublinear"));
        },
        py::arg("sample_size"), py::arg("data_size"));

  m.def("generate_blobs",
        [](int blobs, double spread, int points, int d, std::uint64_t seed) {
          GeneratorSpec spec;
          spec.kind = GeneratorKind::kGaussianBlobs;
          spec.blobs = blobs;
          spec.spread = spread;
          spec.points = points;
          spec.d = d;
          Rng rng(seed);
          SyntheticInstance inst = generate_synthetic(spec, rng);
          std::vector<std::vector<double>> pts;
          pts.reserve(inst.space.size());
          for (int i = 0; i < inst.space.size(); ++i)
            pts.emplace_back(inst.space.point(i), inst.space.point(i) + inst.space.dimension());
          return pts;
        },
        py::arg("blobs"), py::arg("spread"), py::arg("points"), py::arg("d") = 2,
        py::arg("seed") = 0,
        "Well-separated gaussian blobs rescaled to unit diameter.");
}
