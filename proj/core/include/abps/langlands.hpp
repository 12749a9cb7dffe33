#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abps/extquot.hpp"
#include "abps/springer.hpp"

namespace abps::langlands {

using extquot::SymbolicCoordinate;
using extquot::SymbolicTorusPoint;
using springer::ComplexGroup;
using springer::SignCharacter;

// ------------------------------------------------------------------ groups

enum class Family { Sp, SOodd, SOeven, GL };
enum class Form { Orthogonal, Symplectic, None };

/// Split p-adic group G; n is the rank (Sp(2n), SO(2n+1), SO(2n), GL(n)).
struct PadicGroup {
  Family family = Family::GL;
  int n = 0;

  /// "Sp4", "SO5", "SO4", "GL2" (case-insensitive family names).
  static PadicGroup parse(const std::string& text);

  /// Size of the defining representation of the dual group.
  int dual_dim() const;
  /// Bilinear form preserved by the dual group.
  Form dual_form() const;
  ComplexGroup dual() const;
  friend bool operator==(const PadicGroup&, const PadicGroup&) = default;
};

std::string to_string(const PadicGroup& g);
/// "SO5", "Sp4", "SO4", "GL2".
std::string dual_name(const PadicGroup& g);
/// The group whose dual is the classical group of the given form and dimension.
PadicGroup group_with_dual(Form form, int dim, bool gl = false);

// --------------------------------------------------------------- catalogue

struct CharacterDecl {
  std::string name;
  bool ramified = true;
  int order = 1;
  int dim = 1;
  Form selfdual = Form::Orthogonal;
  int period = 1;
};

/// Declared W_F-representations. Unramified entries act as twists of order `order`.
class Catalogue {
 public:
  /// 1, zeta (ramified quadratic) and xi (unramified quadratic).
  static Catalogue defaults();
  /// One declaration per line: `name kind=... order=... dim=... selfdual=... period=...`.
  /// Blank lines and lines starting with '#' are skipped.
  static Catalogue parse(const std::string& text);
  static Catalogue load(const std::string& path);

  void add(const CharacterDecl& d);
  const CharacterDecl* find(const std::string& name) const;
  const std::vector<CharacterDecl>& entries() const { return entries_; }
  /// Unramified entry of the given order, used to print torsion twists.
  const CharacterDecl* unramified_of_order(int order) const;

 private:
  std::vector<CharacterDecl> entries_;
};

/// Free variables are single lowercase letters, optionally followed by digits or primes.
bool is_variable_name(const std::string& s);

// ------------------------------------------------------------- parameters

/// An irreducible W_F-representation up to unramified twist, with the twist applied.
struct WFLine {
  std::string name;
  int dim = 1;
  bool ramified = true;
  Form selfdual = Form::Orthogonal;
  int period = 1;
  std::string dual_name;
  SymbolicCoordinate twist;

  /// Line for a catalogue entry with trivial twist. Unramified entries give the twist of "1".
  static WFLine from_decl(const CharacterDecl& d);
  static WFLine trivial();

  WFLine twisted(const SymbolicCoordinate& c) const;
  WFLine dual() const;
  /// Isomorphic to its dual.
  bool self_dual() const;

  friend bool operator==(const WFLine& a, const WFLine& b) {
    return a.name == b.name && a.twist == b.twist;
  }
  friend bool operator<(const WFLine& a, const WFLine& b);
};

/// ASCII name of the untwisted line plus its twist: "zeta", "zeta*e(1/2)", "1*q^{1/2}".
std::string to_string(const WFLine& l);

/// pi (x) S_a.
struct Summand {
  WFLine line;
  int a = 1;
  friend bool operator==(const Summand&, const Summand&) = default;
  friend bool operator<(const Summand& x, const Summand& y) {
    return x.line < y.line || (x.line == y.line && x.a > y.a);
  }
};

struct FormalParameter {
  std::vector<Summand> summands;  // sorted

  int dim() const;
  void normalize();
  friend bool operator==(const FormalParameter&, const FormalParameter&) = default;
  friend bool operator<(const FormalParameter& a, const FormalParameter& b) { return a.summands < b.summands; }
};

std::string to_string(const FormalParameter& p);

struct EnhancedParameter {
  FormalParameter param;
  SignCharacter enhancement;
  friend bool operator==(const EnhancedParameter&, const EnhancedParameter&) = default;
};

/// Checks dimension, dual-closure, type and determinant. Returns the sorted parameter.
/// Throws DimensionMismatch or TypeMismatch.
FormalParameter validate(const PadicGroup& g, FormalParameter phi);

bool is_discrete(const PadicGroup& g, const FormalParameter& phi);
bool is_tempered(const PadicGroup& g, const FormalParameter& phi);

// ------------------------------------------------------------ centralizers

/// One isotypic class of the W_F-restriction.
struct IsoClass {
  WFLine line;       // the representative of {line, dual}
  bool self_dual = false;
  std::vector<int> parts;  // S-indices, decreasing
  int factor = -1;         // index in the centralizer, -1 when the factor is trivial (SO1)
};

struct Centralizer {
  ComplexGroup group;
  std::vector<IsoClass> classes;
  springer::UnipotentClass u;  // u_phi
};

Centralizer centralizer_data(const PadicGroup& g, const FormalParameter& phi);
ComplexGroup centralizer_restriction(const PadicGroup& g, const FormalParameter& phi);

struct ComponentGroups {
  springer::ComponentGroup a;
  /// Image of the center of the dual group, as ambient generator indices.
  std::vector<int> center;
  std::vector<SignCharacter> characters;
  /// Characters trivial on the center image.
  std::vector<SignCharacter> s_characters;
};

ComponentGroups component_groups(const PadicGroup& g, const FormalParameter& phi);

struct CuspidalityResult {
  bool cuspidal = false;
  std::vector<SignCharacter> characters;
};

CuspidalityResult is_cuspidal(const PadicGroup& g, const FormalParameter& phi);

// --------------------------------------------------- infinitesimal character

struct InfinitesimalCharacter {
  std::vector<WFLine> lines;  // sorted multiset
  friend bool operator==(const InfinitesimalCharacter&, const InfinitesimalCharacter&) = default;
};

std::string to_string(const InfinitesimalCharacter& l);
InfinitesimalCharacter infinitesimal_character(const PadicGroup& g, const FormalParameter& phi);

// ----------------------------------------------------------- cuspidal data

/// [L, phi, epsilon]: GL lines (one GL(dim) factor each) times a cuspidal core.
struct CuspidalDatum {
  ComplexGroup levi_dual;
  std::vector<WFLine> lines;
  FormalParameter core;  // may live on a trivial group (SO1, Sp0)
  SignCharacter character;
};

std::string to_string(const CuspidalDatum& d);

/// The dual group of the core.
PadicGroup core_group(const PadicGroup& g, const FormalParameter& core);
/// lines + duals + core, the parameter of the dual group obtained by inclusion.
FormalParameter embed(const PadicGroup& g, const CuspidalDatum& d);
/// Embedding after twisting line i by t_i.
FormalParameter embed_at(const PadicGroup& g, const CuspidalDatum& d, const SymbolicTorusPoint& t);

struct CuspidalSupport {
  CuspidalDatum datum;
  springer::CuspidalTriple block;  // block of (u_phi, eta) in the centralizer
  std::vector<int> correcting;     // sqrt(q)-exponents, one per line
};

/// Throws InvalidEnhancement when eta is not a character of the S-group.
CuspidalSupport cuspidal_support(const PadicGroup& g, const EnhancedParameter& e);

// ------------------------------------------------ inertial torus and fibers

/// Signed permutations of the lines preserving the inertial class of the datum.
extquot::Action inertial_action(const PadicGroup& g, const CuspidalDatum& d);

struct CorrectingCocharacter {
  std::string label;       // unipotent class, all-ones factors omitted
  std::vector<int> exponents;
};

/// Sp4 example: (3,1):(2,0), (2):(1,-1), trivial:(0,0). Orbit representatives under the inertial action.
std::vector<CorrectingCocharacter> correcting_cocharacters(const PadicGroup& g, const CuspidalDatum& d,
                                                           int rank_bound = 6);

/// An enhanced parameter over a torus point together with its local Springer data.
struct LocalPair {
  SymbolicTorusPoint point;  // W_F-restriction coordinates
  EnhancedParameter param;
  Centralizer centralizer;
  springer::CuspidalTriple block;
  combi::WeylLabel label;   // Springer label in the twisted normalization
  std::vector<int> correcting;
};

/// Block of the centralizer at t whose cores match the datum. Throws NotALevi when none matches.
springer::CuspidalTriple matching_block(const PadicGroup& g, const CuspidalDatum& d, const Centralizer& h);
/// Correcting exponents of a unipotent class of the centralizer at t, one per line.
std::vector<int> correcting_exponents(const PadicGroup& g, const CuspidalDatum& d, const SymbolicTorusPoint& t,
                                      const Centralizer& h, const springer::UnipotentClass& u);
/// All pairs of the matching block at t.
std::vector<LocalPair> local_pairs(const PadicGroup& g, const CuspidalDatum& d, const SymbolicTorusPoint& t);

/// Enhanced parameters whose cuspidal support is the datum twisted by s.
std::vector<EnhancedParameter> fiber(const PadicGroup& g, const CuspidalDatum& d, const SymbolicTorusPoint& s);

/// Unipotent label: "(3,1)", "(2)", or "trivial" when every factor is all ones.
std::string unipotent_label(const springer::UnipotentClass& u);

}  // namespace abps::langlands
