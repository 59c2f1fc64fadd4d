#include "etrans/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>

#include "json.hpp"

namespace etrans {

namespace {

using nlohmann::json;

json parse(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed JSON: ") + e.what());
  }
}

template <class T>
T field(const json& j, const char* name) {
  if (!j.contains(name)) throw DataError(std::string("missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception& e) {
    throw DataError(std::string("bad field '") + name + "': " + e.what());
  }
}

GroupId group_field(const json& j) {
  try {
    return parse_group(field<std::string>(j, "group"));
  } catch (const InvalidArgument& e) {
    throw DataError(e.what());
  }
}

std::vector<Complex> complex_list(const json& j, const char* name) {
  auto raw = field<std::vector<std::vector<double>>>(j, name);
  std::vector<Complex> out;
  for (const auto& v : raw) {
    if (v.size() != 2) throw DataError(std::string("entries of '") + name + "' must be [re, im]");
    out.emplace_back(v[0], v[1]);
  }
  return out;
}

std::vector<Vec2<std::int64_t>> int_pairs(const json& j, const char* name) {
  auto raw = field<std::vector<std::vector<std::int64_t>>>(j, name);
  std::vector<Vec2<std::int64_t>> out;
  for (const auto& v : raw) {
    if (v.size() != 2) throw DataError(std::string("entries of '") + name + "' must be integer pairs");
    out.push_back({v[0], v[1]});
  }
  return out;
}

void write_pairs(std::ostream& out, const char* name, const std::vector<Vec2<std::int64_t>>& v) {
  out << "  \"" << name << "\": [";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ",\n    " : "\n    ") << "[" << v[i][0] << ", " << v[i][1] << "]";
  out << "\n  ]";
}

void write_complex(std::ostream& out, const char* name, const std::vector<Complex>& v) {
  out << "  \"" << name << "\": [";
  for (std::size_t i = 0; i < v.size(); ++i)
    out << (i ? ",\n    " : "\n    ") << "[" << format_double(v[i].real()) << ", " << format_double(v[i].imag()) << "]";
  out << "\n  ]";
}

}  // namespace

std::string format_double(double v) {
  if (v == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

GridData read_grid_data(std::istream& in) {
  json j = parse(in);
  GridData d;
  d.group = group_field(j);
  d.M = field<std::int64_t>(j, "M");
  if (d.M < 1) throw DataError("M must be at least 1");
  d.points = int_pairs(j, "points");
  d.values = complex_list(j, "values");
  if (d.points.size() != d.values.size()) throw DataError("points and values differ in length");
  return d;
}

void write_grid_data(std::ostream& out, const GridData& d) {
  out << "{\n  \"group\": \"" << to_string(d.group) << "\",\n  \"M\": " << d.M << ",\n";
  write_pairs(out, "points", d.points);
  out << ",\n";
  write_complex(out, "values", d.values);
  out << "\n}\n";
}

Spectrum read_spectrum(std::istream& in) {
  json j = parse(in);
  Spectrum s;
  s.group = group_field(j);
  s.M = field<std::int64_t>(j, "M");
  for (const auto& p : int_pairs(j, "labels")) s.labels.push_back({p[0], p[1]});
  s.coeffs = complex_list(j, "coeffs");
  if (s.labels.size() != s.coeffs.size()) throw DataError("labels and coeffs differ in length");
  return s;
}

void write_spectrum(std::ostream& out, const Spectrum& s) {
  out << "{\n  \"group\": \"" << to_string(s.group) << "\",\n  \"M\": " << s.M << ",\n";
  std::vector<Vec2<std::int64_t>> labels;
  for (const auto& l : s.labels) labels.push_back({l.a, l.b});
  write_pairs(out, "labels", labels);
  out << ",\n";
  write_complex(out, "coeffs", s.coeffs);
  out << "\n}\n";
}

std::vector<Complex> align_to_grid(const GridData& d, const Grid& grid) {
  if (d.group != grid.group || d.M != grid.M) throw DataError("data does not belong to this grid");
  std::vector<Complex> out(grid.size());
  std::vector<bool> seen(grid.size(), false);
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    auto idx = grid.find(d.points[i]);
    if (!idx)
      throw DataError("point [" + std::to_string(d.points[i][0]) + ", " + std::to_string(d.points[i][1]) +
                      "] is not in F^e_M");
    if (seen[*idx]) throw DataError("duplicate point in data");
    seen[*idx] = true;
    out[*idx] = d.values[i];
  }
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (!seen[i])
      throw DataError("missing value for grid point [" + std::to_string(grid.points[i][0]) + ", " +
                      std::to_string(grid.points[i][1]) + "]");
  return out;
}

GridData make_grid_data(const Grid& grid, std::vector<Complex> values) {
  return {grid.group, grid.M, grid.points, std::move(values)};
}

}  // namespace etrans
