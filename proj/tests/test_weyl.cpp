#include <gtest/gtest.h>

#include <set>

#include "abps/weyl.hpp"
#include "support.hpp"

using namespace abps::combi;
using testing_support::bipartition_count;
using testing_support::dlabel_count;
using testing_support::partition_count;

namespace {

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST(Weyl, IrrepCounts) {
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(static_cast<long>(irreps(WeylFactor{WeylType::A, n}).size()), partition_count(n));
    EXPECT_EQ(static_cast<long>(irreps(WeylFactor{WeylType::B, n}).size()), bipartition_count(n));
    if (n >= 2) {
      EXPECT_EQ(static_cast<long>(irreps(WeylFactor{WeylType::D, n}).size()), dlabel_count(n));
      // W(D_n) extended by the diagram automorphism is W(B_n).
      EXPECT_EQ(static_cast<long>(irreps(WeylFactor{WeylType::DExt, n}).size()), bipartition_count(n));
    }
  }
  EXPECT_EQ(irreps(WeylFactor{WeylType::Z2, 1}).size(), 2u);
}

TEST(Weyl, Orders) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ((WeylFactor{WeylType::A, n}.order()), factorial(n));
    EXPECT_EQ((WeylFactor{WeylType::B, n}.order()), (1L << n) * factorial(n));
    if (n >= 2) {
      EXPECT_EQ((WeylFactor{WeylType::D, n}.order()), (1L << (n - 1)) * factorial(n));
    }
  }
}

TEST(Weyl, ProductLabels) {
  RelativeWeylGroup w;
  w.add({WeylType::B, 2});
  w.add({WeylType::A, 3});
  w.add({WeylType::A, 0});
  EXPECT_EQ(w.factors.size(), 2u);
  const auto labels = irreps(w);
  EXPECT_EQ(static_cast<long>(labels.size()), bipartition_count(2) * partition_count(3));
  std::set<std::string> names;
  for (const auto& l : labels) {
    EXPECT_TRUE(valid_label(w, l));
    names.insert(to_string(l));
  }
  EXPECT_EQ(names.size(), labels.size());
  EXPECT_EQ(w.order(), 8 * 6);
}

TEST(Weyl, TwistIsAnInvolution) {
  for (auto type : {WeylType::A, WeylType::B, WeylType::D, WeylType::DExt})
    for (const auto& l : irreps(WeylFactor{type, 4})) EXPECT_EQ(twisted(twisted(l)), l);
}

TEST(Weyl, DExtMatchesTypeB) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> images;
    for (const auto& b : bipartitions(n)) {
      const auto l = bipartition_to_dext(b);
      EXPECT_EQ(dext_to_bipartition(l), b);
      images.insert(to_string(l));
    }
    EXPECT_EQ(static_cast<long>(images.size()), bipartition_count(n));
  }
}

TEST(Weyl, LabelStrings) {
  EXPECT_EQ(to_string(b_label({Partition({2, 1}), Partition()})), "((2,1),-)");
  EXPECT_EQ(to_string(dext_label(DLabel::make(Partition({1, 1}), Partition()), -1)), "{1^2,-}(x)zeta");
  EXPECT_EQ(to_string(z2_label(-1)), "zeta");
  EXPECT_EQ(to_string(WeylLabel{}), "1");
}
