#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "abps/abps.hpp"
#include "abps/error.hpp"
#include "abpscli/app.hpp"
#include "abpscli/expr.hpp"

#ifndef ABPS_SOURCE_DIR
#define ABPS_SOURCE_DIR "."
#endif

namespace testing_support {

using Fraction = abps::extquot::Fraction;

inline std::string fixture_dir() { return std::string(ABPS_SOURCE_DIR) + "/fixtures"; }

inline const abps::langlands::Catalogue& catalogue() {
  static const auto cat = abps::langlands::Catalogue::load(fixture_dir() + "/chars.txt");
  return cat;
}

inline abps::langlands::FormalParameter param(const std::string& text) {
  return abps::cli::parse_parameter(text, catalogue());
}

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

inline RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = abps::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

/// Recurrence through the pentagonal numbers, independent of any enumeration.
inline long partition_count(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long sign = (k % 2) ? 1 : -1;
      p[m] += sign * p[m - g1];
      if (g2 <= m) p[m] += sign * p[m - g2];
    }
  }
  return p[n];
}

inline long bipartition_count(int n) {
  long s = 0;
  for (int a = 0; a <= n; ++a) s += partition_count(a) * partition_count(n - a);
  return s;
}

/// Unordered pairs with the degenerate ones counted twice.
inline long dlabel_count(int n) {
  const long d = n % 2 == 0 ? partition_count(n / 2) : 0;
  return (bipartition_count(n) + 3 * d) / 2;
}

/// All partitions of n as weakly decreasing vectors, by direct recursion.
inline void raw_partitions(int n, int max, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max); k >= 1; --k) {
    cur.push_back(k);
    raw_partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> raw_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  raw_partitions(n, n, cur, out);
  return out;
}

/// All points of (1/n Z / Z)^k.
inline std::vector<std::vector<Fraction>> torsion_grid(int k, int n) {
  std::vector<std::vector<Fraction>> out{{}};
  for (int i = 0; i < k; ++i) {
    std::vector<std::vector<Fraction>> next;
    for (const auto& x : out)
      for (int j = 0; j < n; ++j) {
        auto y = x;
        y.push_back(Fraction(j, n));
        next.push_back(y);
      }
    out = next;
  }
  return out;
}

inline Fraction frac(const Fraction& x) {
  auto n = x.numerator() % x.denominator();
  if (n < 0) n += x.denominator();
  return Fraction(n, x.denominator());
}

/// (w.x)_i = signs_i x_{sigma^{-1}(i)} on angles, straight from the definition.
inline std::vector<Fraction> act_on_angles(const abps::combi::SignedPermutation& w,
                                           const std::vector<Fraction>& x) {
  std::vector<Fraction> y(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    const int i = w.sigma()[j];
    y[i] = frac(x[j] * Fraction(w.signs()[i]));
  }
  return y;
}

/// Random formal sums for a target dual group, kept only when they validate.
inline std::vector<abps::langlands::FormalParameter> random_corpus(const abps::langlands::PadicGroup& g, int wanted,
                                                                  std::mt19937& rng) {
  const std::vector<std::string> self_dual = {"1", "zeta", "xi", "zeta*xi"};
  const std::vector<std::string> pairs = {"chi", "nu", "zeta*nu", "zeta*z", "z"};
  std::vector<abps::langlands::FormalParameter> out;
  std::uniform_int_distribution<int> coin(0, 2), a_dist(1, 5), q_dist(-2, 2), self_pick(0, 3), pair_pick(0, 4);
  int attempts = 0;
  while (static_cast<int>(out.size()) < wanted && attempts++ < 200000) {
    std::string text;
    int dim = 0;
    while (dim < g.dual_dim()) {
      const int a = a_dist(rng);
      std::string term;
      if (coin(rng)) {
        term = self_dual[self_pick(rng)] + "*S[" + std::to_string(a) + "]";
        dim += a;
      } else {
        const std::string base = pairs[pair_pick(rng)];
        const int k = q_dist(rng);
        const std::string q = "q^{" + std::to_string(k) + "/2}";
        const std::string dual = base == "chi" ? "chi^-1" : base == "nu" ? "nu^3" : base == "zeta*nu" ? "zeta*nu^3"
                                 : base == "zeta*z" ? "zeta*z^-1" : "z^-1";
        term = base + "*" + q + "*S[" + std::to_string(a) + "] + " + dual + "*q^{" + std::to_string(-k) + "/2}*S[" +
               std::to_string(a) + "]";
        dim += 2 * a;
      }
      text += (text.empty() ? "" : " + ") + term;
    }
    if (dim != g.dual_dim()) continue;
    try {
      out.push_back(abps::langlands::validate(g, param(text)));
    } catch (const abps::Error&) {
    }
  }
  return out;
}

}  // namespace testing_support
