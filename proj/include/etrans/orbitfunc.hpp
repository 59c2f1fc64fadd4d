#pragma once

// Orbit functions: E (even orbit sums), C (full orbit sums) and their
// rescaled versions Xi and Omega.

#include <vector>

#include "etrans/weyl.hpp"

namespace etrans {

enum class OrbitKind { E, Xi, C, Omega };

std::string_view to_string(OrbitKind k);
OrbitKind parse_kind(std::string_view s);

/// |W_e| / |W_e(lambda)| with W_e the E-symmetry group.
Rational xi_scale(GroupId g, Weight lambda);
/// |W| / |W(lambda)|.
Rational omega_scale(GroupId g, Weight lambda);

/// Orbit-sum definition; the reference implementation.
Complex eval_generic(GroupId g, OrbitKind kind, Weight lambda, DomainPoint x);

/// Per-group closed formulas for E and Xi. Throws Unsupported for C/Omega.
Complex eval_closed(GroupId g, OrbitKind kind, Weight lambda, DomainPoint x);

/// C_lambda assembled from one or two E-functions. lambda must be in P+.
Complex c_from_e(GroupId g, Weight lambda, DomainPoint x);

/// -4 pi^2 <lambda|lambda>.
double laplace_eigenvalue(GroupId g, Weight lambda);

/// Precomputed orbit of one label, for repeated evaluation.
class OrbitSum {
 public:
  OrbitSum(GroupId g, OrbitKind kind, Weight lambda);

  Complex operator()(DomainPoint x) const;
  /// Exact evaluation at the lattice point s/M.
  Complex at_lattice(Vec2<std::int64_t> s, std::int64_t M) const;

  Weight label() const { return label_; }
  double scale() const { return scale_; }

 private:
  Weight label_;
  std::int64_t det_ = 1;
  double scale_ = 1.0;
  // Each orbit element mu stored as mu^T adj(C): <mu, x> = (u . x) / det.
  std::vector<Vec2<std::int64_t>> u_;
};

/// e^{2 pi i n / N} computed from the reduced residue, so that equal
/// residues give bit-identical values.
Complex root_of_unity(std::int64_t n, std::int64_t N);

}  // namespace etrans
