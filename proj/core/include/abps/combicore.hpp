#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace abps::combi {

// ---------------------------------------------------------------- partitions

/// Weakly decreasing list of positive integers.
class Partition {
 public:
  Partition() = default;
  /// Accepts parts in any order; zeros are dropped, negatives rejected.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int multiplicity(int part) const;
  /// Distinct parts in increasing order.
  std::vector<int> distinct_parts() const;
  Partition transpose() const;
  /// Parts in increasing order, left-padded with zeros to `length`.
  std::vector<int> increasing(int length) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Enumeration order: larger size first, then lexicographically decreasing parts.
bool partition_before(const Partition& a, const Partition& b);

/// Partitions of n, from (n) down to (1^n).
std::vector<Partition> partitions(int n);

/// Exponent form without brackets: "4,1^2".
std::string exponent_form(const Partition& p);
/// Unipotent-class form: "(4,1^2)"; the empty partition prints "()".
std::string class_string(const Partition& p);
/// Form used inside labels: "3", "1^2", "(2,1)", and "-" for the empty partition.
std::string label_string(const Partition& p);

// --------------------------------------------------------------- bipartitions

struct Bipartition {
  Partition alpha;
  Partition beta;

  int total() const { return alpha.size() + beta.size(); }
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

bool bipartition_before(const Bipartition& a, const Bipartition& b);

/// All (alpha, beta) with |alpha| + |beta| = n, ordered by |alpha| descending,
/// then alpha and beta in partition order.
std::vector<Bipartition> bipartitions(int n);

std::string to_string(const Bipartition& b);

// -------------------------------------------------------------------- DLabel

enum class SplitTag { None, Plain, Primed };

/// Unordered pair {alpha, beta}; alpha is the one that comes first in partition order.
struct DLabel {
  Partition alpha;
  Partition beta;
  SplitTag tag = SplitTag::None;

  static DLabel make(Partition a, Partition b, SplitTag tag = SplitTag::None);
  bool degenerate() const { return alpha == beta; }
  int total() const { return alpha.size() + beta.size(); }
  friend bool operator==(const DLabel&, const DLabel&) = default;
};

bool dlabel_before(const DLabel& a, const DLabel& b);

/// Irreducible labels of W(D_n): unordered pairs, degenerate ones twice.
std::vector<DLabel> dlabels(int n);

std::string to_string(const DLabel& d);

/// Tensor with the sign character: (alpha, beta) -> (beta^t, alpha^t).
Bipartition sign_twist(const Bipartition& b);
/// {alpha, beta} -> {alpha^t, beta^t}; a split tag toggles iff n/2 is odd.
DLabel sign_twist(const DLabel& d);

// ------------------------------------------------------------------ symbols

/// Symplectic rows use bottom offset 1 (entries y_i + 2(i-1) + 1); orthogonal rows offset 0.
enum class SymbolKind { Symplectic, Orthogonal };

struct BCSymbol {
  std::vector<int> top;
  std::vector<int> bottom;
  SymbolKind kind = SymbolKind::Symplectic;

  int defect() const { return static_cast<int>(top.size()) - static_cast<int>(bottom.size()); }
  /// Throws MalformedSymbol unless rows are strictly increasing and non-negative.
  void check() const;
  BCSymbol shift() const;
  BCSymbol reduced() const;
  /// Symbols related by shifts compare equal.
  bool equivalent(const BCSymbol& other) const;
  friend bool operator==(const BCSymbol&, const BCSymbol&) = default;
};

std::string to_string(const BCSymbol& s);

/// Rows from the staircase recipe. x and y are increasing, zero padded.
BCSymbol symbol_from_rows(const std::vector<int>& x, const std::vector<int>& y, SymbolKind kind);
/// Inverse of symbol_from_rows on reduced symbols: the (x, y) partitions.
/// Throws MalformedSymbol when a row is not a staircase.
std::pair<Partition, Partition> decode_symbol(const BCSymbol& s);

/// Defect-1 symplectic symbol of a bipartition, reduced.
BCSymbol symbol_of_bipartition(const Bipartition& bp);
Bipartition bipartition_of_symbol(const BCSymbol& s);

/// Entries occurring in exactly one row, grouped into maximal runs of consecutive integers.
std::vector<std::vector<int>> symbol_intervals(const BCSymbol& s);
/// Moves every entry of the given intervals to the other row.
BCSymbol toggle_intervals(const BCSymbol& s, const std::vector<std::vector<int>>& intervals);

// ------------------------------------------------------ signed permutations

/// Monomial action on k coordinates: (w.t)_i = t_{sigma^{-1}(i)}^{signs_i}.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  SignedPermutation(std::vector<int> sigma, std::vector<int> signs);

  static SignedPermutation identity(int k);
  /// s_i for i < k swaps coordinates i and i+1; s_k inverts the last coordinate.
  static SignedPermutation simple(int k, int i);

  int rank() const { return static_cast<int>(sigma_.size()); }
  /// 0-based image of coordinate i.
  const std::vector<int>& sigma() const { return sigma_; }
  const std::vector<int>& signs() const { return signs_; }
  bool is_identity() const;
  bool is_reflection() const;
  SignedPermutation inverse() const;
  int order() const;
  /// Exponent matrix M with (w.t)_i = prod_j t_j^{M_ij}.
  std::vector<std::vector<std::int64_t>> matrix() const;

  friend SignedPermutation operator*(const SignedPermutation& v, const SignedPermutation& w);
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend bool operator<(const SignedPermutation& a, const SignedPermutation& b);

 private:
  std::vector<int> sigma_;
  std::vector<int> signs_;
};

struct NamedElement {
  SignedPermutation element;
  std::string word;  // "1" for the identity, otherwise "s1s2..."
};

/// All 2^k k! elements of W(B_k), each named by its shortest, lexicographically least word.
std::vector<NamedElement> enumerate_bk(int k);
std::string word_of(const SignedPermutation& w);

// ------------------------------------------------------- Smith normal form

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct SmithDecomposition {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
  /// Nonzero diagonal entries d_1 | d_2 | ... of S.
  std::vector<std::int64_t> divisors() const;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity_matrix(int n);
std::int64_t determinant(const IntMatrix& a);
/// U*A*V = S. Pivot: smallest nonzero absolute value, first in row-major order.
SmithDecomposition smith_normal_form(const IntMatrix& a);

}  // namespace abps::combi
