#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "subclust/dataset_io.hpp"

using namespace subclust;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path("/tmp/subclust_io_" + name) {
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("points csv") {
  const TempFile f("pts.csv", "0.0, 0.0\n3.0,4.0\n1.5,2.5\n");
  const MetricSpace sp = load_points_csv(f.path);
  CHECK(sp.kind() == SpaceKind::kEuclidean);
  CHECK(sp.size() == 3);
  CHECK(sp.dimension() == 2);
  CHECK(sp.distance(0, 1) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(sp.diameter() == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("distance matrix csv with labels") {
  const TempFile f("mat.csv", "a,b,c\n0,1,2\n1,0,1.5\n2,1.5,0\n");
  const MetricSpace sp = load_distance_matrix_csv(f.path);
  CHECK(sp.kind() == SpaceKind::kExplicitMatrix);
  CHECK(sp.size() == 3);
  CHECK(sp.labels() == std::vector<std::string>{"a", "b", "c"});
  CHECK(sp.distance(0, 2) == 2.0);
  CHECK(sp.diameter() == 2.0);
}

TEST_CASE("format sniffing") {
  const TempFile pts("sniff_pts.csv", "1.0,2.0\n3.0,4.0\n");
  CHECK(load_dataset_file(pts.path).kind() == SpaceKind::kEuclidean);
  const TempFile mat("sniff_mat.csv", "p0,p1\n0,2\n2,0\n");
  CHECK(load_dataset_file(mat.path).kind() == SpaceKind::kExplicitMatrix);
  // explicit override beats sniffing
  CHECK(load_dataset_file(pts.path, DatasetFormat::kPoints).kind() == SpaceKind::kEuclidean);
}

TEST_CASE("malformed files") {
  CHECK_THROWS_AS(load_points_csv("/tmp/subclust_io_does_not_exist.csv"), RuntimeError);
  const TempFile bad("bad.csv", "1.0,oops\n2.0,3.0\n");
  CHECK_THROWS_AS(load_points_csv(bad.path), ValidationError);
  const TempFile ragged("ragged.csv", "a,b\n0,1\n1,0,5\n");
  CHECK_THROWS_AS(load_distance_matrix_csv(ragged.path), ValidationError);
  const TempFile short_mat("short.csv", "a,b,c\n0,1,2\n1,0,1\n");
  CHECK_THROWS_AS(load_distance_matrix_csv(short_mat.path), ValidationError);
  const TempFile empty("empty.csv", "\n\n");
  CHECK_THROWS_AS(load_points_csv(empty.path), ValidationError);
}

TEST_CASE("matrix csv goes through metric validation") {
  const TempFile bad("tri.csv", "a,b,c\n0,10,1\n10,0,1\n1,1,0\n");
  CHECK_THROWS_AS(load_distance_matrix_csv(bad.path, TriangleCheck::kOn), ValidationError);
  CHECK_NOTHROW(load_distance_matrix_csv(bad.path, TriangleCheck::kOff));
}
