#include "subclust/dataset_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "subclust/errors.hpp"

namespace subclust {

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    // trim surrounding whitespace
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    fields.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
  }
  return fields;
}

bool parse_double(const std::string& s, double* out) {
  if (s.empty()) return false;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return false;
  *out = v;
  return true;
}

std::vector<std::vector<std::string>> read_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RuntimeError("IoError: cannot open " + path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    rows.push_back(split_csv_row(line));
  }
  if (rows.empty()) throw ValidationError("InvalidDatasetFile: " + path + " has no data rows");
  return rows;
}

bool all_numeric(const std::vector<std::string>& fields) {
  double v;
  for (const auto& f : fields)
    if (!parse_double(f, &v)) return false;
  return true;
}

}  // namespace

MetricSpace load_points_csv(const std::string& path) {
  const auto rows = read_rows(path);
  std::vector<std::vector<double>> points;
  points.reserve(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    std::vector<double> p(rows[i].size());
    for (size_t j = 0; j < rows[i].size(); ++j)
      if (!parse_double(rows[i][j], &p[j]))
        throw ValidationError("InvalidDatasetFile: non-numeric value '" + rows[i][j] +
                              "' at row " + std::to_string(i + 1) + " of " + path);
    points.push_back(std::move(p));
  }
  return MetricSpace::euclidean(std::move(points));
}

MetricSpace load_distance_matrix_csv(const std::string& path, TriangleCheck check) {
  const auto rows = read_rows(path);
  if (rows.size() < 2)
    throw ValidationError("InvalidDatasetFile: matrix file needs a label header plus rows");
  std::vector<std::string> labels = rows[0];
  const size_t n = labels.size();
  if (rows.size() - 1 != n)
    throw ValidationError("InvalidDatasetFile: matrix has " + std::to_string(rows.size() - 1) +
                          " rows but " + std::to_string(n) + " labels");
  std::vector<std::vector<double>> m(n, std::vector<double>(n));
  for (size_t i = 0; i < n; ++i) {
    if (rows[i + 1].size() != n)
      throw ValidationError("InvalidDatasetFile: matrix row " + std::to_string(i + 1) +
                            " has wrong length");
    for (size_t j = 0; j < n; ++j)
      if (!parse_double(rows[i + 1][j], &m[i][j]))
        throw ValidationError("InvalidDatasetFile: non-numeric matrix entry '" + rows[i + 1][j] +
                              "'");
  }
  return MetricSpace::from_distance_matrix(std::move(m), check, std::move(labels));
}

MetricSpace load_dataset_file(const std::string& path, DatasetFormat format,
                              TriangleCheck check) {
  if (format == DatasetFormat::kPoints) return load_points_csv(path);
  if (format == DatasetFormat::kMatrix) return load_distance_matrix_csv(path, check);
  const auto rows = read_rows(path);
  return all_numeric(rows[0]) ? load_points_csv(path) : load_distance_matrix_csv(path, check);
}

}  // namespace subclust
