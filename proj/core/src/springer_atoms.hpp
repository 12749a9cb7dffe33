#pragma once

#include <vector>

#include "abps/combicore.hpp"

namespace abps::springer::detail {

/// Reduced symbol of a pair together with its decoded rows.
struct AtomOutcome {
  combi::BCSymbol symbol;
  int defect = 0;
  combi::Partition x;  // top row
  combi::Partition y;  // bottom row
};

/// Sp(2n): eta holds one sign per distinct even part, increasing.
AtomOutcome sp_atom(const combi::Partition& lambda, const std::vector<int>& eta);

/// O(n): eta holds one sign per distinct odd part, increasing.
AtomOutcome orth_atom(int n, const combi::Partition& lambda, const std::vector<int>& eta);

/// The same pair with every single entry moved to the other row.
AtomOutcome flipped(const AtomOutcome& a);

}  // namespace abps::springer::detail
