#pragma once

#include <vector>

#include "etrans/types.hpp"

namespace etrans {

struct QuadratureSpec {
  int order = 64;            ///< Gauss-Legendre points per direction
  double tolerance = 1e-9;   ///< bound on |I_n - I_{n/2}| (absolute)
};

struct QuadratureResult {
  Complex value;
  double error_estimate = 0.0;
};

/// The requested tolerance was not reached; carries what was achieved.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double achieved) : Error(what), achieved_(achieved) {}
  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

struct GaussRule {
  std::vector<double> nodes;    ///< on [0, 1]
  std::vector<double> weights;  ///< sum to 1
};

/// n-point Gauss-Legendre rule mapped to [0, 1]; cached per n.
const GaussRule& gauss_legendre(int n);

}  // namespace etrans
