#pragma once

#include <string>
#include <vector>

#include "abps/combicore.hpp"

namespace abps::combi {

/// A: symmetric group S_n. B, D: Weyl groups of rank n. DExt: W(D_n) extended by the
/// diagram automorphism (the O(2n) case). Z2: a bare order-two twist.
enum class WeylType { A, B, D, DExt, Z2 };

struct WeylFactor {
  WeylType type = WeylType::A;
  int n = 0;
  int source = -1;  // index of the group factor this piece comes from

  bool trivial() const;
  long order() const;
  friend bool operator==(const WeylFactor&, const WeylFactor&) = default;
};

std::string to_string(const WeylFactor& f);

struct RelativeWeylGroup {
  std::vector<WeylFactor> factors;  // trivial factors are never stored

  long order() const;
  /// Rank of the elementary 2-group W_L^H / W_{L°}^{H°}.
  int twist_rank() const;
  void add(WeylFactor f);
  friend bool operator==(const RelativeWeylGroup&, const RelativeWeylGroup&) = default;
};

std::string to_string(const RelativeWeylGroup& w);

struct IrrLabel {
  WeylType type = WeylType::A;
  Partition partition;      // A
  Bipartition bipartition;  // B
  DLabel dlabel;            // D, DExt
  int sign = 1;             // DExt outer character (1 when degenerate), Z2 value

  friend bool operator==(const IrrLabel&, const IrrLabel&) = default;
};

IrrLabel a_label(Partition p);
IrrLabel b_label(Bipartition b);
IrrLabel d_label(DLabel d);
IrrLabel dext_label(DLabel d, int sign);
IrrLabel z2_label(int sign);

/// One label per factor, in factor order.
struct WeylLabel {
  std::vector<IrrLabel> parts;
  friend bool operator==(const WeylLabel&, const WeylLabel&) = default;
};

std::vector<IrrLabel> irreps(const WeylFactor& f);
/// Product labels, first factor varying slowest.
std::vector<WeylLabel> irreps(const RelativeWeylGroup& w);
bool valid_label(const RelativeWeylGroup& w, const WeylLabel& l);

/// Sign twist on the reflection part; outer characters are left alone.
IrrLabel twisted(const IrrLabel& l);
WeylLabel twisted(const WeylLabel& l);

/// W(D_n) x| Z/2 is W(B_n): {a,b}(x)1 <-> (a,b), {a,b}(x)zeta <-> (b,a), {a,a} <-> (a,a).
Bipartition dext_to_bipartition(const IrrLabel& l);
IrrLabel bipartition_to_dext(const Bipartition& b);

/// ASCII: "(2,1)", "{1^2,-}(x)1", "zeta". Empty label prints "1".
std::string to_string(const IrrLabel& l);
std::string to_string(const WeylLabel& l);
std::string sign_name(int sign);

}  // namespace abps::combi
