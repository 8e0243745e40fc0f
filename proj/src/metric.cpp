#include "subclust/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace subclust {

namespace {

constexpr double kMatrixTol = 1e-9;

double max_pairwise_distance(const MetricSpace& s) {
  double m = 0.0;
  for (int i = 0; i < s.size(); ++i)
    for (int j = i + 1; j < s.size(); ++j) m = std::max(m, s.distance_unchecked(i, j));
  return m;
}

}  // namespace

MetricSpace MetricSpace::from_distance_matrix(std::vector<std::vector<double>> matrix,
                                              TriangleCheck check,
                                              std::vector<std::string> labels) {
  const int n = static_cast<int>(matrix.size());
  if (n < 1) throw ValidationError("InvalidDistanceMatrix: empty matrix");
  MetricSpace s;
  s.kind_ = SpaceKind::kExplicitMatrix;
  s.n_ = n;
  s.matrix_.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(matrix[i].size()) != n)
      throw ValidationError("InvalidDistanceMatrix: row " + std::to_string(i) + " is not length " +
                            std::to_string(n));
    for (int j = 0; j < n; ++j) {
      const double v = matrix[i][j];
      if (!(v >= 0.0))
        throw ValidationError("InvalidDistanceMatrix: negative or non-finite entry at (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
      s.matrix_[static_cast<size_t>(i) * n + j] = v;
    }
    if (matrix[i][i] != 0.0)
      throw ValidationError("InvalidDistanceMatrix: nonzero diagonal at " + std::to_string(i));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(matrix[i][j] - matrix[j][i]) > kMatrixTol)
        throw ValidationError("InvalidDistanceMatrix: asymmetric at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
  const bool validate =
      check == TriangleCheck::kOn || (check == TriangleCheck::kAuto && n <= 512);
  if (validate) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (matrix[i][j] > matrix[i][k] + matrix[k][j] + kMatrixTol)
            throw ValidationError("InvalidDistanceMatrix: triangle inequality violated at (" +
                                  std::to_string(i) + "," + std::to_string(j) + "," +
                                  std::to_string(k) + ")");
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw ValidationError("InvalidDistanceMatrix: label count does not match matrix size");
  s.labels_ = std::move(labels);
  s.diameter_ = max_pairwise_distance(s);
  return s;
}

MetricSpace MetricSpace::euclidean(std::vector<std::vector<double>> points) {
  const int n = static_cast<int>(points.size());
  if (n < 1) throw ValidationError("InvalidPointSet: empty point list");
  const int d = static_cast<int>(points[0].size());
  if (d < 1) throw ValidationError("InvalidPointSet: zero-dimensional points");
  MetricSpace s;
  s.kind_ = SpaceKind::kEuclidean;
  s.n_ = n;
  s.dim_ = d;
  s.coords_.resize(static_cast<size_t>(n) * d);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(points[i].size()) != d)
      throw ValidationError("InvalidPointSet: inconsistent dimension at row " + std::to_string(i));
    for (int j = 0; j < d; ++j) {
      if (!std::isfinite(points[i][j]))
        throw ValidationError("InvalidPointSet: non-finite coordinate at row " +
                              std::to_string(i));
      s.coords_[static_cast<size_t>(i) * d + j] = points[i][j];
    }
  }
  s.diameter_ = max_pairwise_distance(s);
  return s;
}

double MetricSpace::distance(int a, int b) const {
  check_point_ref(a);
  check_point_ref(b);
  return distance_unchecked(a, b);
}

double MetricSpace::distance_to_point(int a, const std::vector<double>& p) const {
  if (kind_ != SpaceKind::kEuclidean)
    throw ValidationError("InvalidPointRef: free points only exist in euclidean spaces");
  check_point_ref(a);
  if (static_cast<int>(p.size()) != dim_)
    throw ValidationError("InvalidPointRef: free point has dimension " +
                          std::to_string(p.size()) + ", space has " + std::to_string(dim_));
  const double* pa = coords_.data() + static_cast<size_t>(a) * dim_;
  double s = 0.0;
  for (int i = 0; i < dim_; ++i) {
    const double diff = pa[i] - p[i];
    s += diff * diff;
  }
  return std::sqrt(s);
}

Dataset::Dataset(const MetricSpace& s, std::vector<int> m) : space(&s), members(std::move(m)) {
  for (int x : members) s.check_point_ref(x);
}

Dataset::Dataset(const MetricSpace& s) : space(&s) {
  members.resize(s.size());
  for (int i = 0; i < s.size(); ++i) members[i] = i;
}

CenterSet CenterSet::from_indices(const MetricSpace& space, std::vector<int> idx,
                                  CenterRole role) {
  if (idx.empty()) throw ValidationError("EmptyCenterSet: no centers given");
  if (static_cast<int>(idx.size()) > space.size())
    throw ValidationError("KTooLarge: " + std::to_string(idx.size()) +
                          " centers for a space of size " + std::to_string(space.size()));
  std::set<int> seen;
  for (int i : idx) {
    space.check_point_ref(i);
    if (!seen.insert(i).second)
      throw ValidationError("DuplicateCenter: index " + std::to_string(i) + " appears twice");
  }
  CenterSet c;
  c.domain = CenterDomain::kGroundSet;
  c.role = role;
  c.indices = std::move(idx);
  return c;
}

CenterSet CenterSet::from_points(const MetricSpace& space, std::vector<std::vector<double>> pts,
                                 CenterRole role) {
  if (space.kind() != SpaceKind::kEuclidean)
    throw ValidationError("InvalidCenterSet: free points require a euclidean space");
  if (pts.empty()) throw ValidationError("EmptyCenterSet: no centers given");
  for (const auto& p : pts)
    if (static_cast<int>(p.size()) != space.dimension())
      throw ValidationError("InvalidCenterSet: center dimension mismatch");
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j]) throw ValidationError("DuplicateCenter: identical free points");
  CenterSet c;
  c.domain = CenterDomain::kFreePoints;
  c.role = role;
  c.points = std::move(pts);
  return c;
}

NearestCenter nearest_center(const MetricSpace& space, int x, const CenterSet& centers) {
  if (centers.size() == 0) throw ValidationError("EmptyCenterSet: no centers given");
  space.check_point_ref(x);
  NearestCenter best{0, std::numeric_limits<double>::infinity()};
  if (centers.domain == CenterDomain::kGroundSet) {
    for (int i = 0; i < centers.size(); ++i) {
      const double d = space.distance_unchecked(x, centers.indices[i]);
      if (d < best.distance) best = {i, d};
    }
  } else {
    for (int i = 0; i < centers.size(); ++i) {
      const double d = space.distance_to_point(x, centers.points[i]);
      if (d < best.distance) best = {i, d};
    }
  }
  return best;
}

namespace {

double total_cost(const Dataset& data, const CenterSet& centers, bool squared) {
  if (data.space == nullptr || data.size() == 0)
    throw ValidationError("EmptyDataset: cost of an empty dataset is undefined");
  if (centers.size() == 0) throw ValidationError("EmptyCenterSet: no centers given");
  const MetricSpace& space = *data.space;
  double total = 0.0;
  for (int x : data.members) {
    const double d = nearest_center(space, x, centers).distance;
    total += squared ? d * d : d;
  }
  return total;
}

}  // namespace

double avg_cost_median(const Dataset& data, const CenterSet& centers) {
  return total_cost(data, centers, false) / data.size();
}

double avg_cost_means(const Dataset& data, const CenterSet& centers) {
  return total_cost(data, centers, true) / data.size();
}

double total_cost_median(const Dataset& data, const CenterSet& centers) {
  return total_cost(data, centers, false);
}

double total_cost_means(const Dataset& data, const CenterSet& centers) {
  return total_cost(data, centers, true);
}

}  // namespace subclust
