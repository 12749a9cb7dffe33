#include <gtest/gtest.h>

#include <map>
#include <set>

#include "abps/abps.hpp"
#include "abpscli/tables.hpp"
#include "reference_tables.hpp"
#include "support.hpp"

using namespace abps::inertial;
using abps::langlands::to_string;
using testing_support::catalogue;
using testing_support::param;

namespace {

const abps::cli::Example& example() {
  static const auto e = abps::cli::sp4_example(catalogue());
  return e;
}

const InertialData& principal() { return example().blocks[example().selected]; }
const std::vector<MuPoint>& points() { return example().points[example().selected]; }

std::string enhanced_key(const abps::langlands::EnhancedParameter& e) {
  std::string s = to_string(e.param) + " |";
  for (int v : e.enhancement.values) s += " " + std::to_string(v);
  return s;
}

}  // namespace

TEST(Blocks, SpFourInertialClassHasFiveBlocks) {
  const auto& e = example();
  EXPECT_EQ(e.blocks.size(), 5u);
  int principal_blocks = 0, singletons = 0;
  for (std::size_t i = 0; i < e.blocks.size(); ++i) {
    const auto& b = e.blocks[i];
    if (b.torus.dimension() == 2) ++principal_blocks;
    if (b.torus.dimension() == 0) {
      ++singletons;
      EXPECT_EQ(e.points[i].size(), 1u);
    }
  }
  EXPECT_EQ(principal_blocks, 1);
  EXPECT_EQ(singletons, 4);
}

TEST(Action, MatchesTheDisplayedTable) {
  const auto& rows = principal().weyl.table;
  ASSERT_EQ(rows.size(), ref::kSp4Action.size());
  std::map<std::string, std::string> got;
  for (const auto& r : rows) got[r.word] = abps::extquot::to_string(r.image);
  for (const auto& r : ref::kSp4Action) EXPECT_EQ(got.at(r.w), r.image) << r.w;
}

TEST(Mu, IsABijectionOntoTheEnhancedParameters) {
  const auto& pts = points();
  EXPECT_EQ(pts.size(), abps::extquot::spectral_eq(principal().weyl.action).size());
  std::set<std::string> seen;
  for (const auto& p : pts) {
    EXPECT_TRUE(seen.insert(enhanced_key(p.pair.param)).second) << enhanced_key(p.pair.param);
    // The enhanced parameter lies over the block of the triple.
    const auto s = abps::langlands::cuspidal_support(example().group, p.pair.param);
    EXPECT_TRUE(support_point(principal(), s.datum).has_value()) << to_string(p.pair.param.param);
  }
  // Surjectivity: the enhanced parameters enumerated stratum by stratum are exactly the image.
  std::set<std::string> enumerated;
  for (const auto& st : abps::extquot::strata(principal().weyl.action))
    for (const auto& lp : abps::langlands::local_pairs(example().group, principal().triple, st.point))
      enumerated.insert(enhanced_key(lp.param));
  EXPECT_EQ(enumerated, seen);
}

TEST(Mu, ThetaOneIsTheProjection) {
  for (const auto& p : points()) {
    const auto orbit = theta(principal(), abps::extquot::SymbolicCoordinate::one(), p);
    EXPECT_TRUE(std::find(orbit.begin(), orbit.end(), p.point.base) != orbit.end());
    std::set<abps::extquot::SymbolicTorusPoint> expected;
    for (const auto& w : principal().weyl.action.elements) expected.insert(abps::extquot::act(w.element, p.point.base));
    EXPECT_EQ(std::set<abps::extquot::SymbolicTorusPoint>(orbit.begin(), orbit.end()), expected);
  }
}

TEST(Mu, SupportIsThetaSqrtQOfMu) {
  for (const auto& p : points()) {
    const auto s = abps::langlands::cuspidal_support(example().group, p.pair.param);
    const auto at = support_point(principal(), s.datum);
    ASSERT_TRUE(at.has_value());
    const auto orbit = theta(principal(), abps::extquot::SymbolicCoordinate::sqrt_q(1), p);
    EXPECT_TRUE(std::find(orbit.begin(), orbit.end(), *at) != orbit.end())
        << to_string(p.pair.param.param) << " support " << abps::extquot::to_string(*at);
  }
}

TEST(Mu, DiscreteAndTemperedPoints) {
  EXPECT_EQ(tempered_points(points()).size(), points().size());
  const auto d = discrete_points(points());
  EXPECT_EQ(d.size(), 4u);
  for (const auto& p : d) EXPECT_EQ(p.component, "(3,1)");
}

// The cuspidal support map is injective exactly when the action is free.
TEST(Mu, SupportInjectiveOnlyForFreeActions) {
  auto injective = [](const InertialData& data, const std::vector<MuPoint>& pts) {
    std::set<std::string> supports;
    for (const auto& p : pts) {
      const auto s = abps::langlands::cuspidal_support(data.group, p.pair.param);
      supports.insert(abps::langlands::to_string(s.datum) + " @ " +
                      abps::extquot::to_string(*support_point(data, s.datum)));
    }
    return supports.size() == pts.size();
  };
  auto free_action = [](const InertialData& data) {
    for (const auto& p : abps::extquot::spectral_eq(data.weyl.action))
      if (p.stabilizer.order() != 1) return false;
    return true;
  };
  EXPECT_FALSE(free_action(principal()));
  EXPECT_FALSE(injective(principal(), points()));

  // A line of order three is not isomorphic to its dual, so the inertial group is trivial.
  const auto sp2 = abps::langlands::PadicGroup::parse("Sp2");
  InertialTriple j;
  j.lines = {abps::langlands::WFLine::from_decl(*catalogue().find("chi"))};
  j.core = param("1");
  const auto data = build_inertial(sp2, j);
  const auto pts = mu(data);
  EXPECT_TRUE(free_action(data));
  EXPECT_TRUE(injective(data, pts));
}

TEST(Packets, SizesOfTheDisplayedParameters) {
  std::map<std::string, int> sizes;
  for (const auto& p : example().packets) sizes[to_string(p.param)] = static_cast<int>(p.members.size());
  for (const auto& [text, size] : ref::kSp4PacketSizes) EXPECT_EQ(sizes.at(to_string(param(text))), size) << text;
}

TEST(Inventory, FreshFamilies) {
  const auto& inv = example().inventory;
  int generic = 0;
  std::multiset<std::tuple<std::string, std::string, std::string>> special;
  for (const auto& f : inv) {
    if (!f.fresh) continue;
    if (f.generic) {
      ++generic;
      continue;
    }
    special.insert({abps::extquot::to_string(f.point), f.label, f.component});
  }
  EXPECT_EQ(generic, 1);
  std::multiset<std::tuple<std::string, std::string, std::string>> expected;
  for (const auto& r : ref::kSp4Families) expected.insert({r.point, r.label, r.component});
  EXPECT_EQ(special, expected);
}

TEST(Fibers, TableRowsMatch) {
  const auto rows = fiber_rows(example().blocks, example().packets);
  std::multiset<std::string> got, want;
  for (const auto& r : rows)
    got.insert(to_string(r.param) + "|" + r.eta_name + "|" + r.w_label + "|" + r.w_structure);
  for (const auto& r : ref::kSp4Fibers)
    want.insert(to_string(param(r.param)) + "|" + r.eta + "|" + r.w_irrep + "|" + r.w_structure);
  for (const auto& w : want) EXPECT_EQ(got.count(w), 1u) << w;
}
