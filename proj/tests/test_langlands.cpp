#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "abps/langlands.hpp"
#include "reference_tables.hpp"
#include "support.hpp"

using namespace abps::langlands;
using testing_support::catalogue;
using testing_support::param;
using testing_support::random_corpus;

TEST(Catalogue, DefaultsAndParsing) {
  const auto d = Catalogue::defaults();
  ASSERT_NE(d.find("zeta"), nullptr);
  ASSERT_NE(d.find("xi"), nullptr);
  EXPECT_TRUE(d.find("zeta")->ramified);
  EXPECT_FALSE(d.find("xi")->ramified);
  EXPECT_EQ(d.unramified_of_order(2)->name, "xi");
  const auto c = Catalogue::parse("# comment\n\nchi kind=ramified order=3 selfdual=none\n");
  ASSERT_NE(c.find("chi"), nullptr);
  EXPECT_EQ(c.find("chi")->order, 3);
  EXPECT_EQ(c.find("chi")->selfdual, Form::None);
  EXPECT_THROW(Catalogue::parse("chi colour=red\n"), abps::Error);
}

TEST(Groups, Duals) {
  EXPECT_EQ(dual_name(PadicGroup::parse("Sp4")), "SO5");
  EXPECT_EQ(dual_name(PadicGroup::parse("SO5")), "Sp4");
  EXPECT_EQ(dual_name(PadicGroup::parse("so4")), "SO4");
  EXPECT_EQ(dual_name(PadicGroup::parse("GL2")), "GL2");
  EXPECT_EQ(PadicGroup::parse("Sp4").dual_form(), Form::Orthogonal);
  EXPECT_EQ(group_with_dual(Form::Symplectic, 4), PadicGroup::parse("SO5"));
}

TEST(Validate, Errors) {
  const auto sp4 = PadicGroup::parse("Sp4");
  EXPECT_NO_THROW(validate(sp4, param("zeta*S[3] + zeta + 1")));
  try {
    validate(sp4, param("zeta*S[3] + 1"));
    FAIL();
  } catch (const abps::Error& e) {
    EXPECT_EQ(e.kind(), abps::ErrorKind::DimensionMismatch);
  }
  try {
    validate(sp4, param("zeta*S[2] + 1*S[3]"));
    FAIL();
  } catch (const abps::Error& e) {
    EXPECT_EQ(e.kind(), abps::ErrorKind::TypeMismatch);
  }
  try {
    validate(sp4, param("chi + zeta + 1 + 1 + 1"));
    FAIL();
  } catch (const abps::Error& e) {
    EXPECT_EQ(e.kind(), abps::ErrorKind::TypeMismatch);
  }
}

TEST(Parameters, DiscreteAndTempered) {
  const auto sp4 = PadicGroup::parse("Sp4");
  EXPECT_TRUE(is_discrete(sp4, param("zeta*S[3] + zeta + 1")));
  EXPECT_FALSE(is_discrete(sp4, param("zeta*S[2]*z + zeta*S[2]*z^-1 + 1")));
  EXPECT_TRUE(is_tempered(sp4, param("zeta*S[2]*z + zeta*S[2]*z^-1 + 1")));
  EXPECT_FALSE(is_tempered(sp4, param("zeta*q^{1/2} + zeta*q^{-1/2} + 1 + 1 + 1")));
}

TEST(Parameters, CentralizersOfTheExample) {
  const auto sp4 = PadicGroup::parse("Sp4");
  for (const auto& r : ref::kSp4Parameters) {
    const auto phi = param(r.param);
    const auto h = centralizer_data(sp4, phi);
    const auto h0 = h.group.identity_component();
    EXPECT_EQ(abps::springer::to_string(h.group), r.h) << r.param;
    EXPECT_EQ(abps::inertial::table_group(h0), r.h0) << r.param;
    EXPECT_EQ(abps::inertial::table_class(h0, h.u), r.u) << r.param;
  }
  EXPECT_EQ(abps::springer::to_string(centralizer_restriction(sp4, param("zeta*(S[3]+S[1])+1"))), "S(O4xO1)");
}

TEST(Parameters, ComponentGroupsOfTheExample) {
  const auto sp4 = PadicGroup::parse("Sp4");
  for (const auto& r : ref::kSp4Fibers) {
    const auto a = component_groups(sp4, param(r.param)).a;
    const std::string gens = abps::springer::generators_string(a);
    EXPECT_EQ(abps::springer::to_string(a) + (gens.empty() ? "" : " ~= " + gens), r.a) << r.param;
  }
}

TEST(Parameters, Cuspidality) {
  const auto sp4 = PadicGroup::parse("Sp4");
  const auto delta = param("zeta*S[3] + zeta + 1");
  const auto c = is_cuspidal(sp4, delta);
  EXPECT_TRUE(c.cuspidal);
  const auto a = component_groups(sp4, delta).a;
  std::set<std::string> names;
  for (const auto& eta : c.characters) names.insert(abps::springer::to_string(a, eta));
  EXPECT_EQ(names, (std::set<std::string>{"zeta(x)1", "zeta(x)zeta"}));
  EXPECT_FALSE(is_cuspidal(sp4, param("zeta*S[2]*z + zeta*S[2]*z^-1 + 1")).cuspidal);
  EXPECT_TRUE(is_cuspidal(PadicGroup::parse("SO5"), param("1*S[4]")).cuspidal == false);
}

TEST(InfinitesimalCharacter, GLTwoExample) {
  const auto gl2 = PadicGroup::parse("GL2");
  const auto a = infinitesimal_character(gl2, param("q^{1/2} + q^{-1/2}"));
  EXPECT_EQ(a, infinitesimal_character(gl2, param("S[2]")));
  EXPECT_EQ(to_string(a), to_string(infinitesimal_character(gl2, param("1*q^{-1/2} + 1*q^{1/2}"))));
  EXPECT_NE(a, infinitesimal_character(gl2, param("1 + 1")));
}

TEST(InfinitesimalCharacter, ConservationOnRandomParameters) {
  std::mt19937 rng(424242);
  int checked = 0;
  for (const std::string name : {"Sp4", "SO5", "SO4", "Sp6", "SO7", "SO6", "Sp8", "SO9", "SO8"}) {
    const auto g = PadicGroup::parse(name);
    const auto corpus = random_corpus(g, 20, rng);
    EXPECT_GE(corpus.size(), 10u) << name;
    for (const auto& phi : corpus) {
      const auto lambda = infinitesimal_character(g, phi);
      for (const auto& eta : component_groups(g, phi).s_characters) {
        const auto s = cuspidal_support(g, {phi, eta});
        EXPECT_EQ(infinitesimal_character(g, embed(g, s.datum)), lambda) << name << " " << to_string(phi);
        ++checked;
      }
    }
  }
  EXPECT_GE(checked, 100);
}

TEST(CuspidalSupport, SpFourSupports) {
  const auto sp4 = PadicGroup::parse("Sp4");
  for (const auto& r : ref::kSp4Parameters) {
    const auto phi = param(r.param);
    const auto groups = component_groups(sp4, phi);
    bool found = false;
    for (const auto& eta : groups.s_characters) {
      const auto s = cuspidal_support(sp4, {phi, eta});
      const std::string levi = abps::springer::to_string(s.datum.levi_dual);
      found = found || levi == r.levi;
    }
    EXPECT_TRUE(found) << r.param << " " << r.levi;
  }
}

TEST(CuspidalSupport, RejectsForeignEnhancements) {
  const auto sp4 = PadicGroup::parse("Sp4");
  EXPECT_THROW(cuspidal_support(sp4, {param("zeta*S[3] + zeta + 1"), SignCharacter{{1}}}), abps::Error);
}

TEST(CorrectingCocharacters, SpFourExample) {
  const auto sp4 = PadicGroup::parse("Sp4");
  CuspidalDatum d;
  d.lines = {WFLine::from_decl(*catalogue().find("zeta")), WFLine::from_decl(*catalogue().find("zeta"))};
  d.core = param("1");
  std::map<std::string, std::vector<int>> got;
  for (const auto& c : correcting_cocharacters(sp4, d)) got[c.label] = c.exponents;
  EXPECT_EQ(got.at("(3,1)"), (std::vector<int>{2, 0}));
  EXPECT_EQ(got.at("(2)"), (std::vector<int>{1, -1}));
  EXPECT_EQ(got.at("trivial"), (std::vector<int>{0, 0}));
}
