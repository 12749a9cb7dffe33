#include "springer_atoms.hpp"

#include <algorithm>
#include <string>

#include "abps/error.hpp"
#include "abps/springer.hpp"

namespace abps::springer {

using combi::BCSymbol;
using combi::SymbolKind;

namespace {

struct Split {
  std::vector<int> odd;   // from odd xi
  std::vector<int> even;  // from even xi
};

// xi_i = lambda_i + i over the increasing parts padded to the requested length parity;
// both halves have the staircase removed.
Split staircase_split(const Partition& lambda, int parity) {
  std::vector<int> inc(lambda.parts().rbegin(), lambda.parts().rend());
  if (static_cast<int>(inc.size() % 2) != parity) inc.insert(inc.begin(), 0);
  Split s;
  for (std::size_t i = 0; i < inc.size(); ++i) {
    int xi = inc[i] + static_cast<int>(i);
    if (xi % 2) {
      s.odd.push_back((xi - 1) / 2 - static_cast<int>(s.odd.size()));
    } else {
      s.even.push_back(xi / 2 - static_cast<int>(s.even.size()));
    }
  }
  return s;
}

std::vector<int> distinct_with_parity(const Partition& p, int parity) {
  std::vector<int> out;
  for (int d : p.distinct_parts())
    if (d % 2 == parity) out.push_back(d);
  return out;
}

detail::AtomOutcome finish(const BCSymbol& base, std::vector<std::vector<int>> movable,
                           const std::vector<int>& eta, const char* what) {
  if (movable.size() != eta.size())
    fail(ErrorKind::InvalidCharacter, std::string(what) + ": character length does not match the class");
  std::vector<std::vector<int>> chosen;
  for (std::size_t i = 0; i < eta.size(); ++i) {
    if (eta[i] != 1 && eta[i] != -1) fail(ErrorKind::InvalidCharacter, "character values must be +1/-1");
    if (eta[i] == -1) chosen.push_back(movable[i]);
  }
  BCSymbol s = combi::toggle_intervals(base, chosen).reduced();
  auto [x, y] = combi::decode_symbol(s);
  return {s, s.defect(), x, y};
}

}  // namespace

Bipartition ordinary_bipartition_sp(const Partition& lambda) {
  Split s = staircase_split(lambda, 0);
  return {Partition(s.odd), Partition(s.even)};
}

BCSymbol ordinary_symbol_sp(const Partition& lambda) {
  return combi::symbol_of_bipartition(ordinary_bipartition_sp(lambda));
}

BCSymbol ordinary_symbol_orth(int n, const Partition& lambda) {
  if (n % 2 == 0) {
    Split s = staircase_split(lambda, 0);
    Partition alpha(s.even), beta(s.odd);
    int m = std::max(alpha.length(), beta.length());
    return combi::symbol_from_rows(beta.increasing(m), alpha.increasing(m), SymbolKind::Orthogonal);
  }
  Split s = staircase_split(lambda, 1);
  Partition alpha(s.odd), beta(s.even);
  int m = std::max({beta.length(), alpha.length() - 1, 0});
  return combi::symbol_from_rows(alpha.increasing(m + 1), beta.increasing(m), SymbolKind::Orthogonal);
}

namespace detail {

AtomOutcome sp_atom(const Partition& lambda, const std::vector<int>& eta) {
  BCSymbol base = ordinary_symbol_sp(lambda);
  std::vector<std::vector<int>> movable;
  for (auto& iv : combi::symbol_intervals(base))
    if (iv.front() != 0) movable.push_back(iv);
  if (movable.size() != distinct_with_parity(lambda, 0).size())
    fail(ErrorKind::MalformedSymbol, "interval count differs from the number of even parts");
  return finish(base, movable, eta, "Sp");
}

AtomOutcome orth_atom(int n, const Partition& lambda, const std::vector<int>& eta) {
  BCSymbol base = ordinary_symbol_orth(n, lambda);
  auto movable = combi::symbol_intervals(base);
  if (movable.size() != distinct_with_parity(lambda, 1).size())
    fail(ErrorKind::MalformedSymbol, "interval count differs from the number of odd parts");
  return finish(base, movable, eta, "O");
}

AtomOutcome flipped(const AtomOutcome& a) {
  BCSymbol s = combi::toggle_intervals(a.symbol, combi::symbol_intervals(a.symbol)).reduced();
  return {s, s.defect(), a.y, a.x};
}

}  // namespace detail
}  // namespace abps::springer
