#pragma once

// Discrete E-transform on the lattice F^e_M = (1/M)P^ n F^e.

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "etrans/orbitfunc.hpp"

namespace etrans {

using LatticeKey = Vec2<std::int64_t>;

/// Points s/M of F^e_M, stored as integer numerators and sorted
/// lexicographically.
struct Grid {
  GroupId group = GroupId::A2;
  std::int64_t M = 1;
  std::vector<Vec2<std::int64_t>> points;
  std::vector<Rational> eps;
  /// Points that are conjugate under the even affine group (boundary points
  /// identified on the torus) share a class.
  std::vector<int> class_id;
  int n_classes = 0;

  std::size_t size() const { return points.size(); }
  DomainPoint point(std::size_t i) const;
  std::optional<std::size_t> find(Vec2<std::int64_t> s) const;
  /// Class of an arbitrary lattice point s/M, or -1 if it is not conjugate
  /// to any grid point (cannot happen for integral s).
  int class_of(Vec2<std::int64_t> s) const;

  std::map<LatticeKey, int> key_to_class;
};

/// Canonical key of the point s/M modulo the even affine group.
LatticeKey point_key(GroupId g, std::int64_t M, Vec2<std::int64_t> s);
/// Canonical key of the label lambda modulo W_e and M Q (aliasing on T_M).
LatticeKey label_key(GroupId g, std::int64_t M, Weight lambda);

Grid build_grid(GroupId g, std::int64_t M);

/// Number of points of (1/M)P^/Q^ conjugate to s, divided by the number of
/// grid points representing that torus class.
Rational epsilon_generic(GroupId g, std::int64_t M, Vec2<std::int64_t> s);

/// |(1/M)P^ / Q^| = det(C) M^2, the number of torus points the grid represents.
std::int64_t torus_size(GroupId g, std::int64_t M);

struct LabelSet {
  GroupId group = GroupId::A2;
  std::int64_t M = 1;
  std::vector<Weight> labels;   ///< sorted lexicographically
  std::vector<Rational> norms;  ///< exact <Xi_l|Xi_l>_M
  std::vector<bool> printed;    ///< whether the label is in the printed description
};

/// Printed description, completed to one label per aliasing class (see README).
LabelSet build_label_set(GroupId g, std::int64_t M);

/// det(C) M^2 |W_e| |Stab_{W_e}(lambda mod MQ)|.
Rational discrete_norm(GroupId g, std::int64_t M, Weight lambda);

/// sum_s eps_s f(s) conj(h(s)).
Complex inner_product_M(const Grid& grid, std::span<const Complex> f, std::span<const Complex> h);

struct Spectrum {
  GroupId group = GroupId::A2;
  std::int64_t M = 1;
  std::vector<Weight> labels;
  std::vector<Complex> coeffs;
};

/// Precomputed forward/inverse matrices for one (group, M).
class DiscreteTransform {
 public:
  DiscreteTransform(GroupId g, std::int64_t M);

  const Grid& grid() const { return grid_; }
  const LabelSet& labels() const { return labels_; }

  /// Xi_label evaluated at grid point, exact up to one rounding per term.
  Complex basis(std::size_t label, std::size_t point) const;
  /// Xi_label sampled on the grid.
  std::vector<Complex> sample(std::size_t label) const;

  Spectrum forward(std::span<const Complex> f) const;
  /// Values of the spectrum's series at the grid points.
  std::vector<Complex> synthesize(const Spectrum& spectrum) const;

  Complex inner(std::span<const Complex> f, std::span<const Complex> h) const;

 private:
  Grid grid_;
  LabelSet labels_;
  std::vector<double> eps_;
  // labels x points and points x labels, split into real and imaginary parts
  std::vector<double> b_re_, b_im_, bt_re_, bt_im_;
};

Spectrum forward_discrete(GroupId g, std::int64_t M, std::span<const Complex> f);

/// f_cont(x) = sum d_l Xi_l(x).
Complex interpolate(const Spectrum& spectrum, DomainPoint x);

/// interpolate() with the orbits precomputed, for evaluation at many points.
class Interpolant {
 public:
  explicit Interpolant(const Spectrum& spectrum);
  Complex operator()(DomainPoint x) const;

 private:
  std::vector<OrbitSum> terms_;
  std::vector<Complex> coeffs_;
};

/// Replaces every value by the eps-weighted mean over its torus class, the
/// orthogonal projection onto functions on T_M.
std::vector<Complex> project_to_classes(const Grid& grid, std::span<const Complex> f);

}  // namespace etrans
