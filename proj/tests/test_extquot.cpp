#include <gtest/gtest.h>

#include <random>
#include <set>

#include "abps/extquot.hpp"
#include "support.hpp"

using namespace abps::extquot;
using abps::combi::IntMatrix;
using abps::combi::SignedPermutation;
using testing_support::act_on_angles;
using testing_support::torsion_grid;

namespace {

SymbolicTorusPoint torsion_point(const std::vector<Fraction>& x) {
  SymbolicTorusPoint t;
  for (const auto& f : x) t.coords.push_back(SymbolicCoordinate::root(f.numerator(), f.denominator()));
  return t;
}

std::set<std::string> component_points(const std::vector<TorusCoset>& cs) {
  std::set<std::string> out;
  for (const auto& c : cs) out.insert(to_string(c.generic_point()));
  return out;
}

SignedPermutation element(const Action& a, const std::string& word) {
  for (const auto& e : a.elements)
    if (e.word == word) return e.element;
  ADD_FAILURE() << "no element " << word;
  return SignedPermutation::identity(a.rank);
}

}  // namespace

// Fixed loci against brute-force membership over the 8-torsion points.
TEST(FixedLocus, AgreesWithEightTorsionSample) {
  for (int k = 1; k <= 3; ++k) {
    const auto grid = torsion_grid(k, 8);
    for (const auto& w : abps::combi::enumerate_bk(k)) {
      const auto locus = fixed_locus(w.element);
      for (const auto& x : grid) {
        const bool fixed = act_on_angles(w.element, x) == x;
        bool inside = false;
        for (const auto& c : locus) inside = inside || c.contains(x);
        EXPECT_EQ(inside, fixed) << w.word << " at " << to_string(torsion_point(x));
      }
    }
  }
}

TEST(Solve, RandomSystemsAgainstGrid) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3), den(1, 4), k_dist(1, 2);
  const int n = 12;
  for (int trial = 0; trial < 60; ++trial) {
    const int k = k_dist(rng), rows = k_dist(rng);
    IntMatrix a(rows, std::vector<std::int64_t>(k));
    std::vector<Fraction> b(rows);
    for (auto& r : a)
      for (auto& x : r) x = entry(rng);
    for (auto& x : b) {
      const int d = den(rng);
      x = Fraction(std::uniform_int_distribution<int>(0, d - 1)(rng), d);
    }
    const auto comps = solve(a, b, k);
    for (const auto& x : torsion_grid(k, n)) {
      bool ok = true;
      for (int i = 0; i < rows; ++i) {
        Fraction s = -b[i];
        for (int j = 0; j < k; ++j) s += Fraction(a[i][j]) * x[j];
        ok = ok && s.denominator() == 1;
      }
      bool inside = false;
      for (const auto& c : comps) inside = inside || c.contains(x);
      EXPECT_EQ(inside, ok) << "trial " << trial;
    }
  }
}

TEST(Action, FourTorsionOrbitStabilizer) {
  const auto w = weyl_bk(2);
  for (const auto& x : torsion_grid(2, 4)) {
    const auto t = torsion_point(x);
    std::set<SymbolicTorusPoint> orbit;
    for (const auto& e : w.elements) orbit.insert(act(e.element, t));
    const auto s = stabilizer(w, t);
    EXPECT_EQ(s.order() * static_cast<long>(orbit.size()), 8);
    for (const auto& e : s.elements) EXPECT_EQ(act(e.element, t), t);
  }
}

TEST(Action, ImagesOfTheGenericPoint) {
  const auto w = weyl_bk(2);
  EXPECT_EQ(to_string(act(element(w, "s1s2"), generic_point(2))), "(z2^-1,z1)");
  EXPECT_EQ(to_string(act(element(w, "s2s1"), generic_point(2))), "(z2,z1^-1)");
}

TEST(SpFourExample, ClassRepresentatives) {
  std::vector<std::string> words;
  for (const auto& e : class_representatives(weyl_bk(2))) words.push_back(e.word);
  EXPECT_EQ(words, (std::vector<std::string>{"1", "s1", "s2", "s1s2", "s1s2s1s2"}));
}

TEST(SpFourExample, FixedLoci) {
  const auto w = weyl_bk(2);
  EXPECT_EQ(component_points(fixed_locus(element(w, "s1s2"))), (std::set<std::string>{"(1,1)", "(-1,-1)"}));
  EXPECT_EQ(component_points(fixed_locus(element(w, "s1s2s1s2"))),
            (std::set<std::string>{"(1,1)", "(1,-1)", "(-1,1)", "(-1,-1)"}));
  EXPECT_EQ(component_points(fixed_locus(element(w, "s1"))), (std::set<std::string>{"(z,z)"}));
  EXPECT_EQ(component_points(fixed_locus(element(w, "s2"))), (std::set<std::string>{"(z,1)", "(z,-1)"}));
  EXPECT_EQ(fixed_locus(element(w, "1")).front().dimension(), 2);
}

TEST(SpFourExample, Stabilizers) {
  const auto w = weyl_bk(2);
  auto stab = [&](SymbolicTorusPoint t) { return stabilizer(w, t); };
  const auto z = SymbolicCoordinate::variable("z");
  const auto one = SymbolicCoordinate::one();
  const auto minus = SymbolicCoordinate::root(1, 2);
  EXPECT_EQ(to_string(stab({{z, z}})), "<s1> ~= S2");
  EXPECT_EQ(to_string(stab({{z, one}})), "<s2> ~= Z/2");
  EXPECT_EQ(to_string(stab({{z, minus}})), "<s2> ~= Z/2");
  EXPECT_EQ(to_string(stab({{one, minus}})), "<s2>x<s1s2s1> ~= (Z/2)^2");
  EXPECT_EQ(to_string(stab({{one, one}})), "<s1,s2> ~= B2");
  EXPECT_EQ(to_string(stab({{minus, minus}})), "<s1,s2> ~= B2");
  EXPECT_EQ(stab({{z, SymbolicCoordinate::variable("z'")}}).order(), 1);
}

TEST(SpFourExample, ExtendedQuotients) {
  const auto w = weyl_bk(2);
  const auto spectral = spectral_eq(w);
  EXPECT_EQ(spectral.size(), 21u);
  long total = 0;
  for (const auto& s : strata(w)) total += static_cast<long>(irreps(s.stabilizer).size());
  EXPECT_EQ(total, 21);
  EXPECT_EQ(geometric_eq(w).size(), 9u);
}

TEST(Coordinates, Arithmetic) {
  EXPECT_EQ(SymbolicCoordinate::root(3, 2), SymbolicCoordinate::root(1, 2));
  EXPECT_EQ(SymbolicCoordinate::root(-1, 4), SymbolicCoordinate::root(3, 4));
  const auto c = SymbolicCoordinate::root(1, 4) * SymbolicCoordinate::sqrt_q(1) * SymbolicCoordinate::variable("z");
  EXPECT_TRUE((c * c.inverse()).is_one());
  EXPECT_EQ(c.pow(4), SymbolicCoordinate::sqrt_q(4) * SymbolicCoordinate::variable("z", 4));
  EXPECT_EQ(to_string(SymbolicCoordinate::root(1, 2)), "-1");
  EXPECT_EQ(to_string(SymbolicCoordinate::variable("z", -1)), "z^-1");
  EXPECT_EQ(to_string(SymbolicCoordinate::one()), "1");
  EXPECT_FALSE(SymbolicCoordinate::sqrt_q(1).unitary());
}

TEST(Recognition, ElementaryAbelianAndReflectionProducts) {
  const auto w = weyl_bk(3);
  for (const auto& s : strata(w)) {
    EXPECT_TRUE(s.stabilizer.recognized) << to_string(s.point);
    EXPECT_EQ(s.stabilizer.shape().order(), s.stabilizer.order()) << to_string(s.stabilizer);
  }
}
