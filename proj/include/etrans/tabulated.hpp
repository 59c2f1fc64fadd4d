#pragma once

// Case tables for the discrete transforms as they are printed in the
// literature. Used only for comparison with the generically computed
// quantities; nothing in the transforms depends on them.

#include <optional>

#include "etrans/types.hpp"

namespace etrans::tabulated {

/// Printed epsilon_s for the grid point s/M, or nullopt if no case applies.
std::optional<Rational> epsilon(GroupId g, std::int64_t M, Vec2<std::int64_t> s);

/// Printed <Xi_l|Xi_l>_M, or nullopt if no case applies. For A1xA1 this is
/// the product of the one-dimensional factors 2M (|k| < M) and 4M (k = +-M),
/// which count both copies of an aliased endpoint label.
std::optional<Rational> norm(GroupId g, std::int64_t M, Weight l);

/// Membership in the printed inequality description of Lambda_M.
bool in_label_set(GroupId g, std::int64_t M, Weight l);

}  // namespace etrans::tabulated
