#pragma once

// Continuous E-transform: inner products over F^e by tensor Gauss-Legendre
// quadrature, expansion coefficients and reconstruction.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "etrans/orbitfunc.hpp"
#include "etrans/quadrature.hpp"

namespace etrans {

using Function = std::function<Complex(DomainPoint)>;

/// F^e as the image of the unit square: a parallelogram
/// origin + u e1 + v e2, or (G2) the collapsed square
/// origin + u (e1 + v e2) covering a triangle.
struct FundamentalDomain {
  GroupId group = GroupId::A2;
  std::vector<DomainPoint> vertices;
  bool triangle = false;
  DomainPoint origin;
  Vec2<double> e1{}, e2{};
  double volume = 0.0;        ///< Euclidean area |F^e|
  double metric_factor = 1.0; ///< Euclidean area per unit coordinate area

  DomainPoint map(double u, double v) const;
  /// Euclidean area element of the map at (u, v).
  double jacobian(double u, double v) const;
};

const FundamentalDomain& fundamental_domain(GroupId g);

struct QuadratureNodes {
  std::vector<DomainPoint> points;
  std::vector<double> weights;  ///< include the Jacobian; sum to |F^e|
};

QuadratureNodes quadrature_nodes(GroupId g, int order);

/// Integral of f * conj(h) over F^e in the Euclidean measure.
QuadratureResult inner_product_continuous(GroupId g, const Function& f, const Function& h,
                                          const QuadratureSpec& spec = {});

/// |F^e| |W_e(lambda)|, the exact value of <E_l|E_l>.
double e_norm_squared(GroupId g, Weight lambda);

/// All lambda in P_e with <lambda|lambda> <= R^2, sorted by norm then
/// lexicographically.
std::vector<Weight> truncation_by_radius(GroupId g, double R);

/// The `count` lowest labels of P_e in the same order.
std::vector<Weight> lowest_labels(GroupId g, std::size_t count);

struct ContinuousSpectrum {
  GroupId group = GroupId::A2;
  std::vector<Weight> labels;
  std::vector<Complex> coeffs;  ///< coefficients of E_lambda
  std::string truncation;
  double max_error_estimate = 0.0;
};

ContinuousSpectrum forward_continuous(GroupId g, const Function& f, std::span<const Weight> truncation,
                                      const QuadratureSpec& spec = {});

/// sum c_l E_l(x).
Complex reconstruct(const ContinuousSpectrum& spectrum, DomainPoint x);

/// Matrix [<E_li|E_lj>] by quadrature, with the largest error estimate.
struct GramResult {
  std::vector<std::vector<Complex>> matrix;
  double error_estimate = 0.0;
};
GramResult gram_continuous(GroupId g, std::span<const Weight> labels, const QuadratureSpec& spec = {});

}  // namespace etrans
