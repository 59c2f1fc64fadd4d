#pragma once

// File formats: grid data {group, M, points, values} and spectra
// {group, M, labels, coeffs}, as JSON; dense tables as CSV.

#include <iosfwd>
#include <string>
#include <vector>

#include "etrans/transform_disc.hpp"

namespace etrans {

/// Malformed or inconsistent input data.
class DataError : public Error {
 public:
  using Error::Error;
};

/// Shortest form is not used on purpose: always 17 significant digits.
std::string format_double(double v);

struct GridData {
  GroupId group = GroupId::A2;
  std::int64_t M = 1;
  std::vector<Vec2<std::int64_t>> points;  ///< numerators over M
  std::vector<Complex> values;
};

GridData read_grid_data(std::istream& in);
void write_grid_data(std::ostream& out, const GridData& d);

Spectrum read_spectrum(std::istream& in);
void write_spectrum(std::ostream& out, const Spectrum& s);

/// Values reordered to the grid's point order. Every grid point must appear
/// exactly once and no other point may appear.
std::vector<Complex> align_to_grid(const GridData& d, const Grid& grid);

GridData make_grid_data(const Grid& grid, std::vector<Complex> values);

}  // namespace etrans
