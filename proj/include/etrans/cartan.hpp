#pragma once

// Root-system constants for the rank-two groups and the basis conversions
// every other module is built on. All tables are exact rationals; doubles
// only appear in the orthonormal embedding.

#include <vector>

#include "etrans/types.hpp"

namespace etrans {

enum class Basis { alpha, omega, alpha_check, omega_check };

/// An affine wall of the fundamental simplex: { x : <root, x> = level }.
/// The root is given by its simple-root coordinates.
struct AffineWall {
  Vec2<std::int64_t> root;
  std::int64_t level = 1;
};

/// Generator of the center P^/Q^ given in coweight coordinates, with its order.
struct CenterGenerator {
  Vec2<std::int64_t> coweight;
  int order = 1;
};

struct CartanData {
  GroupId group;
  Mat2<Rational> gram_alpha;          ///< <alpha_i | alpha_j>
  Mat2<std::int64_t> cartan;          ///< c_ij = 2<a_i|a_j>/<a_j|a_j>
  Mat2<Rational> cartan_inv;
  std::int64_t cartan_det = 1;
  Mat2<std::int64_t> cartan_adj;      ///< det * cartan_inv, integral
  Vec2<std::int64_t> highest_root_marks;  ///< xi_h = sum m_i alpha_i
  Vec2<std::int64_t> comarks;             ///< xi_h = sum q_i alpha_check_i
  int weyl_order = 1;                 ///< |W|
  int even_order = 1;                 ///< |W_e| = |W|/2, the even-length subgroup
  /// Order of the group whose orbits define the E-functions. Equals
  /// even_order for the simple groups; for A1xA1 it is the product of the
  /// factors' even subgroups, which is trivial.
  int e_symmetry_order = 1;
  int center_order = 1;               ///< |P^/Q^|
  int even_reflection_index = 1;      ///< i with F^e = F u r_i F (1-based)
  std::vector<AffineWall> affine_walls;
  std::vector<CenterGenerator> center_generators;
};

const CartanData& cartan_data(GroupId g);

/// Rows are the basis vectors of `b` written in simple-root coordinates.
Mat2<Rational> basis_in_alpha(GroupId g, Basis b);

/// Gram matrix of the given basis.
Mat2<Rational> gram(GroupId g, Basis b);

/// Exact bilinear form between vectors given in arbitrary bases.
Rational inner(GroupId g, Vec2<Rational> u, Basis bu, Vec2<Rational> v, Basis bv);

/// Converts coordinates between bases exactly.
Vec2<Rational> convert(GroupId g, Vec2<Rational> v, Basis from, Basis to);

/// <lambda, x> for lambda in weight coordinates and x in coweight coordinates.
Rational pairing(GroupId g, Weight lambda, Vec2<Rational> x);
double pairing(GroupId g, Weight lambda, DomainPoint x);

/// <lambda | lambda>, exact.
Rational norm_squared(GroupId g, Weight lambda);

/// Isometric embedding into R^2 with the standard dot product.
Vec2<double> to_orthonormal(GroupId g, Vec2<double> v, Basis b);

/// Inverse of to_orthonormal for coweight coordinates.
DomainPoint from_orthonormal(GroupId g, Vec2<double> p);

}  // namespace etrans
