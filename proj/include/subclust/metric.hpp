#ifndef SUBCLUST_METRIC_HPP
#define SUBCLUST_METRIC_HPP

#include <cmath>
#include <string>
#include <vector>

#include "subclust/errors.hpp"

namespace subclust {

enum class SpaceKind { kExplicitMatrix, kEuclidean };

enum class TriangleCheck { kAuto, kOn, kOff };

/// A finite ground set with a metric: either an explicit symmetric distance
/// matrix or a list of d-dimensional points under L2. The diameter (largest
/// pairwise distance) is computed once on construction. Instances are
/// immutable after construction and safe to share across threads.
class MetricSpace {
 public:
  // Matrix must be square, symmetric (1e-9), zero on the diagonal and
  // nonnegative. The triangle inequality is checked within 1e-9 when
  // `check` is on; kAuto enables the O(n^3) check only for n <= 512.
  static MetricSpace from_distance_matrix(std::vector<std::vector<double>> matrix,
                                          TriangleCheck check = TriangleCheck::kAuto,
                                          std::vector<std::string> labels = {});

  static MetricSpace euclidean(std::vector<std::vector<double>> points);

  SpaceKind kind() const { return kind_; }
  int size() const { return n_; }
  int dimension() const { return dim_; }
  double diameter() const { return diameter_; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Bounds-checked; throws ValidationError("InvalidPointRef...") out of range.
  double distance(int a, int b) const;

  double distance_unchecked(int a, int b) const {
    if (kind_ == SpaceKind::kExplicitMatrix) return matrix_[static_cast<size_t>(a) * n_ + b];
    const double* pa = coords_.data() + static_cast<size_t>(a) * dim_;
    const double* pb = coords_.data() + static_cast<size_t>(b) * dim_;
    double s = 0.0;
    for (int i = 0; i < dim_; ++i) {
      const double diff = pa[i] - pb[i];
      s += diff * diff;
    }
    return std::sqrt(s);
  }

  // L2 distance from ground-set point `a` to a free point (Euclidean only).
  double distance_to_point(int a, const std::vector<double>& p) const;

  const double* point(int a) const { return coords_.data() + static_cast<size_t>(a) * dim_; }

  void check_point_ref(int a) const {
    if (a < 0 || a >= n_)
      throw ValidationError("InvalidPointRef: index " + std::to_string(a) +
                            " out of range for space of size " + std::to_string(n_));
  }

 private:
  MetricSpace() = default;

  SpaceKind kind_ = SpaceKind::kExplicitMatrix;
  int n_ = 0;
  int dim_ = 0;
  double diameter_ = 0.0;
  std::vector<double> matrix_;  // row-major n*n, matrix kind
  std::vector<double> coords_;  // row-major n*dim, euclidean kind
  std::vector<std::string> labels_;
};

/// The private input multiset: point references into a space. Duplicate
/// members are allowed and each copy contributes to cost.
struct Dataset {
  const MetricSpace* space = nullptr;
  std::vector<int> members;

  Dataset() = default;
  Dataset(const MetricSpace& s, std::vector<int> m);
  // Whole ground set as the dataset.
  explicit Dataset(const MetricSpace& s);

  int size() const { return static_cast<int>(members.size()); }
};

enum class CenterRole { kOptimal, kBlackBoxOutput, kCandidate };
enum class CenterDomain { kGroundSet, kFreePoints };

/// k candidate centers: ground-set indices, or free R^d points for
/// continuous Euclidean clustering. No duplicates.
struct CenterSet {
  CenterDomain domain = CenterDomain::kGroundSet;
  CenterRole role = CenterRole::kCandidate;
  std::vector<int> indices;                 // kGroundSet
  std::vector<std::vector<double>> points;  // kFreePoints

  static CenterSet from_indices(const MetricSpace& space, std::vector<int> idx,
                                CenterRole role = CenterRole::kCandidate);
  static CenterSet from_points(const MetricSpace& space, std::vector<std::vector<double>> pts,
                               CenterRole role = CenterRole::kCandidate);

  int size() const {
    return static_cast<int>(domain == CenterDomain::kGroundSet ? indices.size() : points.size());
  }
};

struct NearestCenter {
  int index;
  double distance;
};

// Argmin over centers; ties go to the lowest center index.
NearestCenter nearest_center(const MetricSpace& space, int x, const CenterSet& centers);

// (1/|D|) sum of distances to the nearest center. Result lies in [0, M].
double avg_cost_median(const Dataset& data, const CenterSet& centers);

// (1/|D|) sum of squared distances to the nearest center. Result in [0, M^2].
double avg_cost_means(const Dataset& data, const CenterSet& centers);

double total_cost_median(const Dataset& data, const CenterSet& centers);
double total_cost_means(const Dataset& data, const CenterSet& centers);

}  // namespace subclust

#endif  // SUBCLUST_METRIC_HPP
