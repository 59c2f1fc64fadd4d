#pragma once

// Finite and affine Weyl group machinery for the rank-two groups: group
// generation, weight orbits, fundamental-domain reduction of points and the
// congruence classes that drive central splitting.

#include <vector>

#include "etrans/cartan.hpp"

namespace etrans {

enum class Parity { even = 0, odd = 1 };

inline Parity operator*(Parity a, Parity b) {
  return static_cast<int>(a) == static_cast<int>(b) ? Parity::even : Parity::odd;
}

/// A Weyl group element stored through both of its integral actions: on
/// weight coordinates and on coweight (point) coordinates.
struct WeylElement {
  Mat2<std::int64_t> weight_matrix{{{1, 0}, {0, 1}}};
  Mat2<std::int64_t> point_matrix{{{1, 0}, {0, 1}}};
  Parity parity = Parity::even;

  Weight apply(Weight l) const;
  DomainPoint apply(DomainPoint x) const;
  Vec2<std::int64_t> apply_point(Vec2<std::int64_t> s) const;
  WeylElement operator*(const WeylElement& rhs) const;
  bool operator==(const WeylElement& o) const {
    return weight_matrix == o.weight_matrix && point_matrix == o.point_matrix;
  }
};

/// r_i for i in {1, 2}.
WeylElement simple_reflection(GroupId g, int i);

/// W, or its even-length subgroup W_e when `even_only` is set.
const std::vector<WeylElement>& generate_group(GroupId g, bool even_only);

/// The group whose orbits define the E-functions. This is W_e for the simple
/// groups; for A1xA1 the E-functions are products of A1 exponentials, whose
/// symmetry group is trivial.
const std::vector<WeylElement>& symmetry_group(GroupId g);

/// Sorted, deduplicated orbit. With `even_only` the orbit is taken under
/// symmetry_group(g), i.e. it is the support of E_lambda.
std::vector<Weight> orbit(GroupId g, Weight lambda, bool even_only);

bool in_P_plus(Weight l);
bool in_P_plus_plus(Weight l);
/// P_e = P+ u r_i P++ (all of P for A1xA1).
bool in_Pe(GroupId g, Weight l);

/// Unique element of the E-orbit of lambda lying in P_e.
Weight canonical_label(GroupId g, Weight lambda);
/// Unique element of the W-orbit of lambda lying in P+.
Weight dominant_label(GroupId g, Weight lambda);

/// x -> linear * x + translation, with linear an element of W.
struct AffineTransform {
  Mat2<std::int64_t> linear{{{1, 0}, {0, 1}}};
  Vec2<double> translation{0.0, 0.0};
  Parity parity = Parity::even;

  DomainPoint apply(DomainPoint x) const;
  DomainPoint inverse(DomainPoint y) const;
};

struct Reduction {
  DomainPoint point;
  AffineTransform transform;  ///< point == transform.apply(original)
};

/// Maps x into F (even = false) or F^e (even = true) using translations by
/// the coroot lattice and reflections from W (respectively W_e).
Reduction reduce_to_fundamental(GroupId g, DomainPoint x, bool even);

/// Boundary-inclusive membership test for F or F^e.
bool in_fundamental_domain(GroupId g, DomainPoint x, bool even, double tol = 1e-12);

/// Index of the character of the center determined by lambda, in [0, s).
int congruence_class(GroupId g, Weight lambda);

/// Center elements z_k (k in [0, s)) as coweight coordinates, enumerated in
/// mixed radix over CartanData::center_generators.
std::vector<Vec2<std::int64_t>> center_elements(GroupId g);

/// chi_j(z_k).
Complex character(GroupId g, int j, int k);

}  // namespace etrans
