#pragma once

#include <string_view>

#include "ncsuper/check.hpp"
#include "ncsuper/matrix.hpp"
#include "ncsuper/presentations.hpp"

namespace ncsuper {

/// Named constants: R, B, Binv, J, Jinv, Rcheck (scalar), T, ST, tau (over the group).
GradedMatrix build_constant(std::string_view name, const AlgebraSet& set);

/// R, B, Rcheck and J identities; scalar matrices only.
CheckList check_matrix_identities();
/// RTT, orthosymplectic conditions, antipode and tau over the group algebra.
CheckList check_supergroup(const AlgebraSet& set);
/// The four RTT-type identities mixing T, tau and B.
CheckList check_rtt_family(const AlgebraSet& set);

}  // namespace ncsuper
