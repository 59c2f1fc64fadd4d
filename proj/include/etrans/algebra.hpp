#pragma once

// Products of orbit functions decomposed into sums, and central splitting.

#include <span>
#include <vector>

#include "etrans/transform_cont.hpp"
#include "etrans/transform_disc.hpp"

namespace etrans {

struct LabelTerm {
  Weight label;
  Rational coeff;
};

/// f_lambda f_lambda' = sum coeff * f_label, all in one normalization.
struct LabelMultiset {
  OrbitKind kind = OrbitKind::Xi;
  std::vector<LabelTerm> terms;  ///< canonical labels, merged, sorted
  std::vector<LabelTerm> raw;    ///< lambda + mu before canonicalization
};

/// Xi_l Xi_l' = (|W_e| / |W_e(l')|) sum_{mu in W_e(l')} Xi_{l+mu}.
LabelMultiset product_e(GroupId g, Weight l, Weight lp);

/// Omega_l Omega_l' = (|W| / |W(l')|) sum_{mu in W(l')} Omega_{l+mu}.
LabelMultiset product_omega(GroupId g, Weight l, Weight lp);

/// The case formulas in the plain C normalization:
///   l in P++:  C_l C_l' = sum_{mu in W(l')} |W|/|W(l+mu)| C_{l+mu}
/// plus the axis cases (a,0)(c,0), (0,b)(0,d), (a,0)(0,d) for C2 and A2.
/// Requires l, l' in P+ and l' != 0, and for the C2 axis cases l != l'; other
/// inputs throw Unsupported.
LabelMultiset product_c(GroupId g, Weight l, Weight lp);

Complex evaluate(GroupId g, const LabelMultiset& m, DomainPoint x);

/// Components f_0..f_{s-1} of grid data, f_j supported on congruence class j.
/// Shifted points are looked up by torus class; the j = 0 term uses the raw
/// value so the components sum to f exactly.
std::vector<std::vector<Complex>> central_split(const Grid& grid, std::span<const Complex> f);

/// Same for a function on F^e; shifted points are folded back with
/// reduce_to_fundamental.
std::vector<Function> central_split(GroupId g, Function f);

}  // namespace etrans
