#include <gtest/gtest.h>

#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "abps/combicore.hpp"
#include "abps/error.hpp"
#include "support.hpp"

using namespace abps::combi;
using testing_support::bipartition_count;
using testing_support::dlabel_count;
using testing_support::partition_count;

TEST(Partitions, CountMatchesPentagonalRecurrence) {
  for (int n = 0; n <= 20; ++n) EXPECT_EQ(static_cast<long>(partitions(n).size()), partition_count(n)) << n;
}

TEST(Partitions, EnumerationIsDecreasingAndDistinct) {
  for (int n = 1; n <= 12; ++n) {
    const auto ps = partitions(n);
    EXPECT_EQ(ps.front(), Partition({n}));
    EXPECT_EQ(ps.back(), Partition(std::vector<int>(n, 1)));
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) EXPECT_TRUE(partition_before(ps[i], ps[i + 1]));
    for (const auto& p : ps) {
      EXPECT_EQ(p.size(), n);
      EXPECT_TRUE(std::is_sorted(p.parts().rbegin(), p.parts().rend()));
    }
  }
}

TEST(Partitions, TransposeIsAnInvolution) {
  for (int n = 0; n <= 12; ++n)
    for (const auto& p : partitions(n)) {
      EXPECT_EQ(p.transpose().transpose(), p);
      EXPECT_EQ(p.transpose().size(), p.size());
      if (!p.empty()) {
        EXPECT_EQ(p.transpose().length(), p.parts().front());
      }
    }
}

TEST(Partitions, Strings) {
  EXPECT_EQ(class_string(Partition({4, 1, 1})), "(4,1^2)");
  EXPECT_EQ(class_string(Partition()), "()");
  EXPECT_EQ(label_string(Partition({3})), "3");
  EXPECT_EQ(label_string(Partition({1, 1})), "1^2");
  EXPECT_EQ(label_string(Partition({2, 1})), "(2,1)");
  EXPECT_EQ(label_string(Partition()), "-");
  EXPECT_EQ(exponent_form(Partition({1, 4, 1, 0})), "4,1^2");
}

TEST(Partitions, RejectsNegativeParts) { EXPECT_THROW(Partition({2, -1}), abps::Error); }

TEST(Bipartitions, CountAndOrder) {
  for (int n = 0; n <= 10; ++n) {
    const auto bs = bipartitions(n);
    EXPECT_EQ(static_cast<long>(bs.size()), bipartition_count(n)) << n;
    for (std::size_t i = 0; i + 1 < bs.size(); ++i) EXPECT_TRUE(bipartition_before(bs[i], bs[i + 1]));
  }
}

TEST(Bipartitions, SignTwistIsAnInvolution) {
  for (int n = 0; n <= 8; ++n)
    for (const auto& b : bipartitions(n)) {
      EXPECT_EQ(sign_twist(sign_twist(b)), b);
      EXPECT_EQ(sign_twist(b).total(), n);
    }
}

TEST(DLabels, CountMatchesUnorderedPairs) {
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(static_cast<long>(dlabels(n).size()), dlabel_count(n)) << n;
}

TEST(DLabels, SignTwistIsAnInvolution) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& d : dlabels(n)) EXPECT_EQ(sign_twist(sign_twist(d)), d);
}

TEST(Symbols, BipartitionRoundTrip) {
  for (int n = 0; n <= 8; ++n)
    for (const auto& b : bipartitions(n)) {
      const auto s = symbol_of_bipartition(b);
      EXPECT_NO_THROW(s.check());
      EXPECT_EQ(s.defect(), 1);
      EXPECT_EQ(bipartition_of_symbol(s), b) << to_string(b);
      EXPECT_TRUE(s.shift().equivalent(s));
      EXPECT_EQ(s.shift().reduced(), s);
    }
}

TEST(Symbols, MalformedRowsAreRejected) {
  BCSymbol s{{1, 1}, {0}, SymbolKind::Symplectic};
  EXPECT_THROW(s.check(), abps::Error);
}

TEST(Symbols, ToggledIntervalsKeepTheEntries) {
  for (const auto& b : bipartitions(5)) {
    const auto s = symbol_of_bipartition(b);
    const auto iv = symbol_intervals(s);
    const auto t = toggle_intervals(s, iv);
    std::multiset<int> a(s.top.begin(), s.top.end()), c(t.top.begin(), t.top.end());
    a.insert(s.bottom.begin(), s.bottom.end());
    c.insert(t.bottom.begin(), t.bottom.end());
    EXPECT_EQ(a, c);
    EXPECT_EQ(toggle_intervals(t, iv), s);
  }
}

namespace {

std::mt19937 rng(20240607);

IntMatrix random_matrix(int rows, int cols, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  IntMatrix m(rows, std::vector<std::int64_t>(cols));
  for (auto& r : m)
    for (auto& x : r) x = d(rng);
  return m;
}

std::int64_t gcd_of_entries(const IntMatrix& a) {
  std::int64_t g = 0;
  for (const auto& r : a)
    for (auto x : r) g = std::gcd(g, x);
  return g;
}

}  // namespace

TEST(SmithNormalForm, RandomMatricesDecompose) {
  for (int trial = 0; trial < 400; ++trial) {
    const int rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
    const auto a = random_matrix(rows, cols, 6);
    const auto snf = smith_normal_form(a);
    EXPECT_EQ(multiply(multiply(snf.U, a), snf.V), snf.S);
    EXPECT_EQ(std::abs(determinant(snf.U)), 1);
    EXPECT_EQ(std::abs(determinant(snf.V)), 1);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (i != j) {
          EXPECT_EQ(snf.S[i][j], 0);
        }
    const auto d = snf.divisors();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) EXPECT_EQ(d[i + 1] % d[i], 0);
    for (auto x : d) EXPECT_GT(x, 0);
    // Invariants independent of the algorithm: first divisor and, for square matrices, |det|.
    if (!d.empty()) {
      EXPECT_EQ(d.front(), gcd_of_entries(a));
    }
    if (rows == cols) {
      std::int64_t prod = static_cast<std::int64_t>(d.size()) == rows ? 1 : 0;
      for (auto x : d) prod *= x;
      EXPECT_EQ(prod, std::abs(determinant(a)));
    }
  }
}

TEST(SmithNormalForm, ZeroMatrix) {
  const auto snf = smith_normal_form(IntMatrix(2, std::vector<std::int64_t>(3, 0)));
  EXPECT_TRUE(snf.divisors().empty());
}

TEST(SignedPermutations, SimpleReflections) {
  const int k = 3;
  for (int i = 1; i <= k; ++i) {
    const auto s = SignedPermutation::simple(k, i);
    EXPECT_TRUE(s.is_reflection());
    EXPECT_EQ(s.order(), 2);
    EXPECT_TRUE((s * s).is_identity());
  }
  EXPECT_EQ((SignedPermutation::simple(2, 1) * SignedPermutation::simple(2, 2)).order(), 4);
  EXPECT_EQ((SignedPermutation::simple(3, 1) * SignedPermutation::simple(3, 2)).order(), 3);
}

TEST(SignedPermutations, MatrixIsMultiplicative) {
  for (const auto& v : enumerate_bk(3))
    for (const auto& w : enumerate_bk(3)) {
      EXPECT_EQ(multiply(v.element.matrix(), w.element.matrix()), (v.element * w.element).matrix());
    }
}

TEST(SignedPermutations, EnumerationSizeAndShortestWords) {
  for (int k = 1; k <= 4; ++k) {
    const auto all = enumerate_bk(k);
    long expected = 1 << k;
    for (int i = 2; i <= k; ++i) expected *= i;
    EXPECT_EQ(static_cast<long>(all.size()), expected);
    std::set<SignedPermutation> seen;
    for (const auto& e : all) seen.insert(e.element);
    EXPECT_EQ(seen.size(), all.size());

    // Breadth-first search for word lengths.
    std::map<SignedPermutation, int> dist;
    std::deque<SignedPermutation> queue{SignedPermutation::identity(k)};
    dist[queue.front()] = 0;
    while (!queue.empty()) {
      const auto w = queue.front();
      queue.pop_front();
      for (int i = 1; i <= k; ++i) {
        const auto n = w * SignedPermutation::simple(k, i);
        if (dist.emplace(n, dist[w] + 1).second) queue.push_back(n);
      }
    }
    for (const auto& e : all) {
      if (e.word == "1") {
        EXPECT_TRUE(e.element.is_identity());
        continue;
      }
      // Evaluate the word left to right.
      auto w = SignedPermutation::identity(k);
      int letters = 0;
      for (std::size_t p = 0; p < e.word.size(); ++p) {
        ASSERT_EQ(e.word[p], 's');
        const int i = e.word[++p] - '0';
        w = w * SignedPermutation::simple(k, i);
        ++letters;
      }
      EXPECT_EQ(w, e.element) << e.word;
      EXPECT_EQ(letters, dist.at(e.element)) << e.word;
      EXPECT_EQ(word_of(e.element), e.word);
    }
  }
}
