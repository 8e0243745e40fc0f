#ifndef SUBCLUST_SYNTHETIC_HPP
#define SUBCLUST_SYNTHETIC_HPP

#include <string>

#include "subclust/dataset_io.hpp"
#include "subclust/metric.hpp"
#include "subclust/rng.hpp"

namespace subclust {

enum class GeneratorKind { kGaussianBlobs, kUniformMetric, kFromFile };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kGaussianBlobs;
  // gaussian-blobs: well-separated isotropic blobs, rescaled so the dataset
  // diameter is exactly 1 (blob centers sit on a circle of radius 0.5 for
  // d >= 2, evenly spaced on a segment for d = 1). `points` is the total
  // count, split as evenly as possible across blobs.
  int blobs = 3;
  double spread = 0.01;
  int points = 100;
  int d = 2;
  // uniform-metric: n-point random symmetric matrix repaired into a metric
  // by shortest-path closure.
  int n = 32;
  // from-file
  std::string path;
  DatasetFormat format = DatasetFormat::kAuto;
};

struct SyntheticInstance {
  MetricSpace space;
  std::vector<int> members;  // dataset = these indices into space

  Dataset dataset() const { return Dataset(space, members); }
};

SyntheticInstance generate_synthetic(const GeneratorSpec& spec, Rng& rng);

}  // namespace subclust

#endif  // SUBCLUST_SYNTHETIC_HPP
