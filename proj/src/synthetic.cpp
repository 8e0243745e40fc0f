#include "subclust/synthetic.hpp"

#include <algorithm>
#include <cmath>

#include "subclust/errors.hpp"

namespace subclust {

namespace {

constexpr double kTau = 6.28318530717958647692;

SyntheticInstance make_blobs(const GeneratorSpec& spec, Rng& rng) {
  if (spec.blobs < 1 || spec.points < 1 || spec.d < 1 || spec.spread < 0.0)
    throw ValidationError("InvalidGeneratorSpec: blobs, points, d must be positive and spread >= 0");

  std::vector<std::vector<double>> blob_centers(spec.blobs, std::vector<double>(spec.d, 0.0));
  if (spec.d == 1) {
    for (int b = 0; b < spec.blobs; ++b)
      blob_centers[b][0] = spec.blobs == 1 ? 0.0 : static_cast<double>(b) / (spec.blobs - 1);
  } else {
    for (int b = 0; b < spec.blobs; ++b) {
      const double a = kTau * b / spec.blobs;
      blob_centers[b][0] = 0.5 * std::cos(a);
      blob_centers[b][1] = 0.5 * std::sin(a);
    }
  }

  std::vector<std::vector<double>> points;
  points.reserve(spec.points);
  const int base = spec.points / spec.blobs;
  const int extra = spec.points % spec.blobs;
  for (int b = 0; b < spec.blobs; ++b) {
    const int count = base + (b < extra ? 1 : 0);
    for (int i = 0; i < count; ++i) {
      std::vector<double> p(spec.d);
      for (int j = 0; j < spec.d; ++j) p[j] = blob_centers[b][j] + spec.spread * rng.normal();
      points.push_back(std::move(p));
    }
  }

  // Rescale so the dataset diameter is exactly 1 (skip the degenerate
  // all-identical case, which stays at diameter 0).
  double diam2 = 0.0;
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j) {
      double s = 0.0;
      for (int t = 0; t < spec.d; ++t) {
        const double diff = points[i][t] - points[j][t];
        s += diff * diff;
      }
      diam2 = std::max(diam2, s);
    }
  if (diam2 > 0.0) {
    const double inv = 1.0 / std::sqrt(diam2);
    for (auto& p : points)
      for (double& v : p) v *= inv;
  }

  SyntheticInstance out{MetricSpace::euclidean(std::move(points)), {}};
  out.members.resize(out.space.size());
  for (int i = 0; i < out.space.size(); ++i) out.members[i] = i;
  return out;
}

SyntheticInstance make_uniform_metric(const GeneratorSpec& spec, Rng& rng) {
  if (spec.n < 1) throw ValidationError("InvalidGeneratorSpec: n must be >= 1");
  const int n = spec.n;
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v = rng.uniform();
      while (v == 0.0) v = rng.uniform();
      m[i][j] = m[j][i] = v;
    }
  // Shortest-path closure repairs any triangle violations.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = std::min(m[i][j], m[i][k] + m[k][j]);

  SyntheticInstance out{MetricSpace::from_distance_matrix(std::move(m), TriangleCheck::kOn), {}};
  out.members.resize(out.space.size());
  for (int i = 0; i < out.space.size(); ++i) out.members[i] = i;
  return out;
}

}  // namespace

SyntheticInstance generate_synthetic(const GeneratorSpec& spec, Rng& rng) {
  switch (spec.kind) {
    case GeneratorKind::kGaussianBlobs:
      return make_blobs(spec, rng);
    case GeneratorKind::kUniformMetric:
      return make_uniform_metric(spec, rng);
    case GeneratorKind::kFromFile: {
      SyntheticInstance out{load_dataset_file(spec.path, spec.format), {}};
      out.members.resize(out.space.size());
      for (int i = 0; i < out.space.size(); ++i) out.members[i] = i;
      return out;
    }
  }
  throw ValidationError("InvalidGeneratorSpec: unknown generator kind");
}

}  // namespace subclust
