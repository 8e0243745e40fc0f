#ifndef SUBCLUST_DATASET_IO_HPP
#define SUBCLUST_DATASET_IO_HPP

#include <string>

#include "subclust/metric.hpp"

namespace subclust {

enum class DatasetFormat { kAuto, kPoints, kMatrix };

// CSV of d-dimensional points, one point per row.
MetricSpace load_points_csv(const std::string& path);

// CSV symmetric distance matrix with a header row of point labels.
MetricSpace load_distance_matrix_csv(const std::string& path,
                                     TriangleCheck check = TriangleCheck::kAuto);

// kAuto sniffs the first row: all-numeric means points, otherwise a matrix
// header of labels.
MetricSpace load_dataset_file(const std::string& path, DatasetFormat format = DatasetFormat::kAuto,
                              TriangleCheck check = TriangleCheck::kAuto);

}  // namespace subclust

#endif  // SUBCLUST_DATASET_IO_HPP
