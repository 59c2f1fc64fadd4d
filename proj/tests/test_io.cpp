#include <sstream>

#include "doctest.h"
#include "etrans/io.hpp"

using namespace etrans;

TEST_CASE("doubles are written with 17 significant digits") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(0.1) == "0.10000000000000001");
  for (double v : {1.0 / 3.0, -2.5e-300, 6.02214076e23, 1.0 - 1e-16})
    CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("grid data round trip") {
  Grid grid = build_grid(GroupId::C2, 3);
  std::vector<Complex> vals;
  for (std::size_t i = 0; i < grid.size(); ++i) vals.push_back({i / 7.0, -1.0 / (i + 1)});
  std::stringstream ss;
  write_grid_data(ss, make_grid_data(grid, vals));
  GridData d = read_grid_data(ss);
  CHECK(d.group == GroupId::C2);
  CHECK(d.M == 3);
  auto aligned = align_to_grid(d, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(aligned[i] == vals[i]);
}

TEST_CASE("points may come in any order") {
  std::stringstream ss(R"({"group": "A2", "M": 1, "points": [[1, 0], [0, 0], [0, 1], [-1, 1]],
                           "values": [[1, 0], [2, 0], [3, 0], [4, 0]]})");
  GridData d = read_grid_data(ss);
  Grid grid = build_grid(GroupId::A2, 1);
  auto v = align_to_grid(d, grid);
  CHECK(v[*grid.find({0, 0})] == Complex(2, 0));
  CHECK(v[*grid.find({-1, 1})] == Complex(4, 0));
}

TEST_CASE("spectrum round trip") {
  Spectrum s{GroupId::G2, 4, {{0, 0}, {2, -1}}, {{1.5, 0}, {0, -0.25}}};
  std::stringstream ss;
  write_spectrum(ss, s);
  Spectrum t = read_spectrum(ss);
  CHECK(t.group == s.group);
  CHECK(t.M == s.M);
  CHECK(t.labels == s.labels);
  CHECK(t.coeffs == s.coeffs);
}

TEST_CASE("malformed data") {
  auto fails = [](const std::string& text) {
    std::stringstream ss(text);
    CHECK_THROWS_AS(read_grid_data(ss), DataError);
  };
  fails("not json");
  fails(R"({"group": "A2", "M": 2})");
  fails(R"({"group": "F4", "M": 2, "points": [], "values": []})");
  fails(R"({"group": "A2", "M": 0, "points": [], "values": []})");
  fails(R"({"group": "A2", "M": 2, "points": [[0, 0]], "values": []})");
  fails(R"({"group": "A2", "M": 2, "points": [[0, 0, 1]], "values": [[1, 0]]})");

  Grid grid = build_grid(GroupId::A2, 1);
  GridData missing{GroupId::A2, 1, {{0, 0}}, {{1, 0}}};
  CHECK_THROWS_AS(align_to_grid(missing, grid), DataError);
  GridData outside{GroupId::A2, 1, {{0, 0}, {1, 0}, {0, 1}, {-1, 1}, {5, 5}}, {{}, {}, {}, {}, {}}};
  CHECK_THROWS_AS(align_to_grid(outside, grid), DataError);
  GridData other{GroupId::C2, 1, {}, {}};
  CHECK_THROWS_AS(align_to_grid(other, grid), DataError);
}
