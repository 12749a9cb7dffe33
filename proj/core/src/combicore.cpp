#include "abps/combicore.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "abps/error.hpp"

namespace abps::combi {

// ---------------------------------------------------------------- partitions

Partition::Partition(std::vector<int> parts) {
  for (int p : parts) {
    if (p < 0) fail(ErrorKind::InvalidLabel, "negative part in partition");
    if (p > 0) parts_.push_back(p);
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::vector<int> Partition::distinct_parts() const {
  std::vector<int> out(parts_.rbegin(), parts_.rend());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Partition Partition::transpose() const {
  std::vector<int> t;
  if (!parts_.empty()) {
    for (int i = 1; i <= parts_.front(); ++i) {
      int c = 0;
      for (int p : parts_) c += (p >= i) ? 1 : 0;
      t.push_back(c);
    }
  }
  return Partition(t);
}

std::vector<int> Partition::increasing(int length) const {
  std::vector<int> out(std::max(0, length - this->length()), 0);
  out.insert(out.end(), parts_.rbegin(), parts_.rend());
  return out;
}

bool partition_before(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(), a.parts().begin(),
                                      a.parts().end());
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::string> exponent_tokens(const Partition& p) {
  std::vector<std::string> tokens;
  const auto& v = p.parts();
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    std::string t = std::to_string(v[i]);
    if (j - i > 1) t += "^" + std::to_string(j - i);
    tokens.push_back(t);
    i = j;
  }
  return tokens;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

}  // namespace

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  gen_partitions(n, n, cur, out);
  return out;
}

std::string exponent_form(const Partition& p) { return join(exponent_tokens(p), ","); }

std::string class_string(const Partition& p) { return "(" + exponent_form(p) + ")"; }

std::string label_string(const Partition& p) {
  if (p.empty()) return "-";
  auto tokens = exponent_tokens(p);
  if (tokens.size() == 1) return tokens.front();
  return "(" + join(tokens, ",") + ")";
}

// --------------------------------------------------------------- bipartitions

bool bipartition_before(const Bipartition& a, const Bipartition& b) {
  if (!(a.alpha == b.alpha)) return partition_before(a.alpha, b.alpha);
  return partition_before(a.beta, b.beta);
}

std::vector<Bipartition> bipartitions(int n) {
  std::vector<Bipartition> out;
  for (int k = n; k >= 0; --k)
    for (const auto& a : partitions(k))
      for (const auto& b : partitions(n - k)) out.push_back({a, b});
  return out;
}

std::string to_string(const Bipartition& b) {
  return "(" + label_string(b.alpha) + "," + label_string(b.beta) + ")";
}

// -------------------------------------------------------------------- DLabel

DLabel DLabel::make(Partition a, Partition b, SplitTag tag) {
  if (partition_before(b, a)) std::swap(a, b);
  DLabel d{std::move(a), std::move(b), tag};
  if (d.degenerate()) {
    if (d.tag == SplitTag::None) d.tag = SplitTag::Plain;
  } else {
    d.tag = SplitTag::None;
  }
  return d;
}

bool dlabel_before(const DLabel& a, const DLabel& b) {
  if (!(a.alpha == b.alpha)) return partition_before(a.alpha, b.alpha);
  if (!(a.beta == b.beta)) return partition_before(a.beta, b.beta);
  return static_cast<int>(a.tag) < static_cast<int>(b.tag);
}

std::vector<DLabel> dlabels(int n) {
  std::vector<DLabel> out;
  for (const auto& bp : bipartitions(n)) {
    if (partition_before(bp.beta, bp.alpha)) continue;
    if (bp.alpha == bp.beta) {
      out.push_back(DLabel::make(bp.alpha, bp.beta, SplitTag::Plain));
      out.push_back(DLabel::make(bp.alpha, bp.beta, SplitTag::Primed));
    } else {
      out.push_back(DLabel::make(bp.alpha, bp.beta));
    }
  }
  return out;
}

std::string to_string(const DLabel& d) {
  std::string s = "{" + label_string(d.alpha) + "," + label_string(d.beta) + "}";
  if (d.tag == SplitTag::Primed) s += "'";
  return s;
}

Bipartition sign_twist(const Bipartition& b) { return {b.beta.transpose(), b.alpha.transpose()}; }

DLabel sign_twist(const DLabel& d) {
  SplitTag tag = d.tag;
  if (d.degenerate() && d.alpha.size() % 2 == 1)
    tag = (tag == SplitTag::Primed) ? SplitTag::Plain : SplitTag::Primed;
  return DLabel::make(d.alpha.transpose(), d.beta.transpose(), tag);
}

// ------------------------------------------------------------------ symbols

namespace {

int bottom_offset(SymbolKind k) { return k == SymbolKind::Symplectic ? 1 : 0; }

bool strictly_increasing_nonneg(const std::vector<int>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] < 0) return false;
    if (i && row[i] <= row[i - 1]) return false;
  }
  return true;
}

std::string row_string(const std::vector<int>& row) {
  if (row.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(row[i]);
  }
  return s;
}

}  // namespace

void BCSymbol::check() const {
  if (!strictly_increasing_nonneg(top) || !strictly_increasing_nonneg(bottom))
    fail(ErrorKind::MalformedSymbol, "symbol rows must be strictly increasing and non-negative");
}

BCSymbol BCSymbol::shift() const {
  BCSymbol s{{0}, {bottom_offset(kind)}, kind};
  for (int a : top) s.top.push_back(a + 2);
  for (int b : bottom) s.bottom.push_back(b + 2);
  return s;
}

BCSymbol BCSymbol::reduced() const {
  BCSymbol s = *this;
  const int off = bottom_offset(kind);
  while (!s.top.empty() && !s.bottom.empty() && s.top.front() == 0 && s.bottom.front() == off) {
    std::vector<int> t, b;
    for (std::size_t i = 1; i < s.top.size(); ++i) t.push_back(s.top[i] - 2);
    for (std::size_t i = 1; i < s.bottom.size(); ++i) b.push_back(s.bottom[i] - 2);
    s.top = std::move(t);
    s.bottom = std::move(b);
  }
  return s;
}

bool BCSymbol::equivalent(const BCSymbol& other) const {
  return kind == other.kind && reduced() == other.reduced();
}

std::string to_string(const BCSymbol& s) { return row_string(s.top) + "/" + row_string(s.bottom); }

BCSymbol symbol_from_rows(const std::vector<int>& x, const std::vector<int>& y, SymbolKind kind) {
  BCSymbol s{{}, {}, kind};
  const int off = bottom_offset(kind);
  for (std::size_t i = 0; i < x.size(); ++i) s.top.push_back(x[i] + 2 * static_cast<int>(i));
  for (std::size_t i = 0; i < y.size(); ++i) s.bottom.push_back(y[i] + 2 * static_cast<int>(i) + off);
  s.check();
  return s.reduced();
}

std::pair<Partition, Partition> decode_symbol(const BCSymbol& s) {
  s.check();
  const int off = bottom_offset(s.kind);
  auto decode_row = [](const std::vector<int>& row, int offset) {
    std::vector<int> v;
    for (std::size_t i = 0; i < row.size(); ++i) {
      int x = row[i] - 2 * static_cast<int>(i) - offset;
      if (x < 0 || (!v.empty() && x < v.back()))
        fail(ErrorKind::MalformedSymbol, "row is not a staircase");
      v.push_back(x);
    }
    return Partition(v);
  };
  return {decode_row(s.top, 0), decode_row(s.bottom, off)};
}

BCSymbol symbol_of_bipartition(const Bipartition& bp) {
  int m = std::max({bp.beta.length(), bp.alpha.length() - 1, 0});
  return symbol_from_rows(bp.alpha.increasing(m + 1), bp.beta.increasing(m), SymbolKind::Symplectic);
}

Bipartition bipartition_of_symbol(const BCSymbol& s) {
  if (s.kind != SymbolKind::Symplectic || s.defect() != 1)
    fail(ErrorKind::MalformedSymbol, "expected a symplectic symbol of defect 1");
  auto [x, y] = decode_symbol(s);
  return {x, y};
}

std::vector<std::vector<int>> symbol_intervals(const BCSymbol& s) {
  std::map<int, int> count;
  for (int a : s.top) ++count[a];
  for (int b : s.bottom) ++count[b];
  std::vector<std::vector<int>> out;
  for (auto [v, c] : count) {
    if (c != 1) continue;
    if (!out.empty() && out.back().back() == v - 1)
      out.back().push_back(v);
    else
      out.push_back({v});
  }
  return out;
}

BCSymbol toggle_intervals(const BCSymbol& s, const std::vector<std::vector<int>>& intervals) {
  std::vector<int> moving;
  for (const auto& iv : intervals) moving.insert(moving.end(), iv.begin(), iv.end());
  auto moves = [&](int v) { return std::find(moving.begin(), moving.end(), v) != moving.end(); };
  BCSymbol out{{}, {}, s.kind};
  for (int a : s.top) (moves(a) ? out.bottom : out.top).push_back(a);
  for (int b : s.bottom) (moves(b) ? out.top : out.bottom).push_back(b);
  std::sort(out.top.begin(), out.top.end());
  std::sort(out.bottom.begin(), out.bottom.end());
  return out;
}

// ------------------------------------------------------ signed permutations

SignedPermutation::SignedPermutation(std::vector<int> sigma, std::vector<int> signs)
    : sigma_(std::move(sigma)), signs_(std::move(signs)) {
  const int k = rank();
  std::vector<int> seen(k, 0);
  if (static_cast<int>(signs_.size()) != k) fail(ErrorKind::RankMismatch, "sigma/signs length");
  for (int i = 0; i < k; ++i) {
    if (sigma_[i] < 0 || sigma_[i] >= k || seen[sigma_[i]]++)
      fail(ErrorKind::InvalidLabel, "sigma is not a permutation");
    if (signs_[i] != 1 && signs_[i] != -1) fail(ErrorKind::InvalidLabel, "signs must be +1/-1");
  }
}

SignedPermutation SignedPermutation::identity(int k) {
  std::vector<int> s(k);
  std::iota(s.begin(), s.end(), 0);
  return {s, std::vector<int>(k, 1)};
}

SignedPermutation SignedPermutation::simple(int k, int i) {
  auto w = identity(k);
  if (i < k) {
    std::swap(w.sigma_[i - 1], w.sigma_[i]);
  } else {
    w.signs_[k - 1] = -1;
  }
  return w;
}

bool SignedPermutation::is_identity() const { return *this == identity(rank()); }

SignedPermutation SignedPermutation::inverse() const {
  const int k = rank();
  std::vector<int> sig(k), sg(k);
  for (int j = 0; j < k; ++j) {
    sig[sigma_[j]] = j;
    // (w.t)_{sigma(j)} = t_j^{s_{sigma(j)}} so the inverse sends coordinate sigma(j) back with the same sign.
    sg[j] = signs_[sigma_[j]];
  }
  return {sig, sg};
}

int SignedPermutation::order() const {
  auto p = *this;
  int n = 1;
  while (!p.is_identity()) {
    p = p * *this;
    ++n;
  }
  return n;
}

bool SignedPermutation::is_reflection() const {
  // rank(M - I) summed over cycles: length - 1 for sign product +1, length for -1.
  const int k = rank();
  std::vector<int> done(k, 0);
  int total = 0;
  for (int i = 0; i < k; ++i) {
    if (done[i]) continue;
    int len = 0, prod = 1;
    for (int j = i; !done[j]; j = sigma_[j]) {
      done[j] = 1;
      ++len;
      prod *= signs_[j];
    }
    total += (prod == 1) ? len - 1 : len;
  }
  return total == 1 && (*this * *this).is_identity();
}

std::vector<std::vector<std::int64_t>> SignedPermutation::matrix() const {
  const int k = rank();
  std::vector<std::vector<std::int64_t>> m(k, std::vector<std::int64_t>(k, 0));
  for (int j = 0; j < k; ++j) m[sigma_[j]][j] = signs_[sigma_[j]];
  return m;
}

SignedPermutation operator*(const SignedPermutation& v, const SignedPermutation& w) {
  if (v.rank() != w.rank()) fail(ErrorKind::RankMismatch, "composing signed permutations of different rank");
  const int k = v.rank();
  std::vector<int> sig(k), sg(k);
  auto vinv = v.inverse();
  for (int j = 0; j < k; ++j) sig[j] = v.sigma_[w.sigma_[j]];
  for (int i = 0; i < k; ++i) sg[i] = v.signs_[i] * w.signs_[vinv.sigma_[i]];
  return {sig, sg};
}

bool operator<(const SignedPermutation& a, const SignedPermutation& b) {
  if (a.sigma_ != b.sigma_) return a.sigma_ < b.sigma_;
  return a.signs_ < b.signs_;
}

std::vector<NamedElement> enumerate_bk(int k) {
  std::vector<NamedElement> out;
  std::vector<SignedPermutation> seen;
  auto known = [&](const SignedPermutation& w) {
    return std::find(seen.begin(), seen.end(), w) != seen.end();
  };
  std::deque<NamedElement> queue{{SignedPermutation::identity(k), "1"}};
  seen.push_back(queue.front().element);
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    out.push_back(cur);
    for (int i = 1; i <= k; ++i) {
      auto next = cur.element * SignedPermutation::simple(k, i);
      if (known(next)) continue;
      seen.push_back(next);
      std::string word = (cur.word == "1" ? "" : cur.word) + "s" + std::to_string(i);
      queue.push_back({next, word});
    }
  }
  return out;
}

std::string word_of(const SignedPermutation& w) {
  for (const auto& e : enumerate_bk(w.rank()))
    if (e.element == w) return e.word;
  return "?";
}

// ------------------------------------------------------- Smith normal form

IntMatrix identity_matrix(int n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  const std::size_t n = a.size(), m = b.size(), p = b.empty() ? 0 : b[0].size();
  if (a[0].size() != m) fail(ErrorKind::DimensionMismatch, "matrix product shapes");
  IntMatrix c(n, std::vector<std::int64_t>(p, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t j = 0; j < p; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

std::int64_t determinant(const IntMatrix& a) {
  // Bareiss fraction-free elimination.
  const std::size_t n = a.size();
  if (n == 0) return 1;
  IntMatrix m = a;
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<std::int64_t> SmithDecomposition::divisors() const {
  std::vector<std::int64_t> d;
  for (std::size_t i = 0; i < S.size() && i < (S.empty() ? 0 : S[0].size()); ++i)
    if (S[i][i] != 0) d.push_back(S[i][i]);
  return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  SmithDecomposition r{identity_matrix(static_cast<int>(rows)), a, identity_matrix(static_cast<int>(cols))};
  auto& S = r.S;
  auto add_row = [&](std::size_t dst, std::size_t src, std::int64_t f) {
    for (std::size_t j = 0; j < cols; ++j) S[dst][j] += f * S[src][j];
    for (std::size_t j = 0; j < rows; ++j) r.U[dst][j] += f * r.U[src][j];
  };
  auto add_col = [&](std::size_t dst, std::size_t src, std::int64_t f) {
    for (std::size_t i = 0; i < rows; ++i) S[i][dst] += f * S[i][src];
    for (std::size_t i = 0; i < cols; ++i) r.V[i][dst] += f * r.V[i][src];
  };
  auto swap_rows = [&](std::size_t x, std::size_t y) {
    std::swap(S[x], S[y]);
    std::swap(r.U[x], r.U[y]);
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (auto& row : S) std::swap(row[x], row[y]);
    for (auto& row : r.V) std::swap(row[x], row[y]);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    bool finished = false;
    while (true) {
      std::size_t pi = rows, pj = cols;
      std::int64_t best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (S[i][j] != 0 && (best == 0 || std::llabs(S[i][j]) < best)) {
            best = std::llabs(S[i][j]);
            pi = i;
            pj = j;
          }
      if (best == 0) {
        finished = true;
        break;
      }
      if (pi != t) swap_rows(pi, t);
      if (pj != t) swap_cols(pj, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (std::int64_t q = S[i][t] / S[t][t]) add_row(i, t, -q);
        if (S[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (std::int64_t q = S[t][j] / S[t][t]) add_col(j, t, -q);
        if (S[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (S[i][j] % S[t][t] != 0) {
            add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (finished) break;
    if (S[t][t] < 0) {
      for (std::size_t j = 0; j < cols; ++j) S[t][j] = -S[t][j];
      for (std::size_t j = 0; j < rows; ++j) r.U[t][j] = -r.U[t][j];
    }
  }
  return r;
}

}  // namespace abps::combi
