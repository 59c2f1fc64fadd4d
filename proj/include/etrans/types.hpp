#pragma once

#include <array>
#include <complex>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace etrans {

using Rational = boost::rational<std::int64_t>;
using Complex = std::complex<double>;

template <class T> using Vec2 = std::array<T, 2>;
template <class T> using Mat2 = std::array<std::array<T, 2>, 2>;

/// The four rank-two groups handled by the library.
enum class GroupId { A1xA1, A2, C2, G2 };

inline constexpr std::array<GroupId, 4> kAllGroups{GroupId::A1xA1, GroupId::A2, GroupId::C2,
                                                    GroupId::G2};

std::string_view to_string(GroupId g);

/// Accepts "A1xA1", "A2", "C2", "G2" (case-insensitive, "A1A1" also allowed).
GroupId parse_group(std::string_view name);

/// Integer weight (a, b) in the basis of fundamental weights.
struct Weight {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend Weight operator+(Weight l, Weight r) { return {l.a + r.a, l.b + r.b}; }
  friend Weight operator-(Weight l, Weight r) { return {l.a - r.a, l.b - r.b}; }
  friend Weight operator-(Weight l) { return {-l.a, -l.b}; }
  bool is_zero() const { return a == 0 && b == 0; }
};

/// Real point (x, y) in the basis of fundamental coweights.
struct DomainPoint {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const DomainPoint&, const DomainPoint&) = default;
};

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition was violated by the caller.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The requested (group, function kind) pair has no implementation.
class Unsupported : public Error {
 public:
  using Error::Error;
};

std::string to_string(Weight w);
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace etrans
