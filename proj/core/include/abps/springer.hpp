#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abps/combicore.hpp"
#include "abps/weyl.hpp"

namespace abps::springer {

using combi::Bipartition;
using combi::Partition;

// ------------------------------------------------------------------ groups

enum class Atom { Sp, SO, O, GL, SL };

/// One simple factor; n is the size of the defining representation (Sp(6) has n = 6).
struct Factor {
  Atom kind = Atom::GL;
  int n = 0;
  friend bool operator==(const Factor&, const Factor&) = default;
};

struct ComplexGroup {
  std::vector<Factor> factors;
  /// Determinants of the O factors multiply to 1.
  bool det1 = false;

  static ComplexGroup sp(int n) { return {{{Atom::Sp, n}}, false}; }
  static ComplexGroup so(int n) { return {{{Atom::SO, n}}, false}; }
  static ComplexGroup o(int n) { return {{{Atom::O, n}}, false}; }
  static ComplexGroup gl(int n) { return {{{Atom::GL, n}}, false}; }
  static ComplexGroup sl(int n) { return {{{Atom::SL, n}}, false}; }

  int orthogonal_count() const;
  bool connected() const;
  /// H°: O atoms become SO atoms.
  ComplexGroup identity_component() const;
  /// Throws InvalidLabel on odd Sp parameters or det1 without O factors.
  void check() const;
  friend bool operator==(const ComplexGroup&, const ComplexGroup&) = default;
};

/// "Sp6", "GL1xS(O2xO1)", "GL1^2xSp2". The trivial group prints "1".
std::string to_string(const ComplexGroup& g);
/// Accepts the strings produced by to_string plus lower-case family names ("sp6").
ComplexGroup parse_group(const std::string& text);

// ------------------------------------------------------- unipotent classes

enum class VeryEven { None, I, II };

struct UnipotentClass {
  std::vector<Partition> parts;  // one per factor
  std::vector<VeryEven> tags;    // one per factor

  friend bool operator==(const UnipotentClass&, const UnipotentClass&) = default;
};

/// "(3,1)x(1)"; very even class II carries a trailing prime.
std::string to_string(const UnipotentClass& u);
UnipotentClass make_class(std::vector<Partition> parts, std::vector<VeryEven> tags = {});

bool valid_class(const ComplexGroup& g, const UnipotentClass& u);
std::vector<UnipotentClass> unipotent_classes(const ComplexGroup& g);
bool is_distinguished(const ComplexGroup& g, const UnipotentClass& u);

// ---------------------------------------------------------- component groups

struct Generator {
  int factor = 0;
  int part = 0;
  std::string name;  // "z3", "z1'"
};

struct ComponentGroup {
  std::vector<Generator> ambient;
  /// Each basis element is a product of ambient generators (indices into `ambient`).
  std::vector<std::vector<int>> basis;
  std::vector<std::string> names;
  /// Order of the cyclic group for SL atoms; 0 for elementary abelian 2-groups.
  int cyclic = 0;

  int rank() const { return static_cast<int>(basis.size()); }
  long order() const;
};

/// "{1}", "Z/2", "(Z/2)^2", "Z/3".
std::string to_string(const ComponentGroup& a);
/// "<z1z3>x<z3z1'>"; empty for trivial and cyclic groups.
std::string generators_string(const ComponentGroup& a);

struct SignCharacter {
  /// One +-1 value per basis element, or the single index k of k/n for cyclic groups.
  std::vector<int> values;
  friend bool operator==(const SignCharacter&, const SignCharacter&) = default;
};

ComponentGroup component_group(const ComplexGroup& g, const UnipotentClass& u);
/// All characters; the first basis element varies slowest, -1 after +1.
std::vector<SignCharacter> characters(const ComponentGroup& a);
/// "1", "zeta", "1(x)zeta"; cyclic characters print "e(k/n)".
std::string to_string(const ComponentGroup& a, const SignCharacter& eta);
bool valid_character(const ComponentGroup& a, const SignCharacter& eta);
/// Value of the character on an arbitrary product of ambient generators
/// (which must lie in the presented subgroup).
int evaluate(const ComponentGroup& a, const SignCharacter& eta, const std::vector<int>& ambient_product);

// -------------------------------------------------------------- blocks

/// Per-factor block datum.
/// Sp: d. SO: d = |defect|. O: signed defect. GL: nothing. SL: (sl_order, sl_root).
struct AtomBlock {
  int d = 0;
  int sl_order = 1;
  int sl_root = 0;
  friend bool operator==(const AtomBlock&, const AtomBlock&) = default;
};

struct CuspidalTriple {
  ComplexGroup group;
  std::vector<AtomBlock> blocks;
  // Derived data describing (L, C_v, epsilon).
  ComplexGroup levi;
  UnipotentClass unip;  // of the cores of the Levi, GL factors carry (1)
  ComponentGroup core_group;
  SignCharacter character;
  std::string levi_name;

  bool is_torus() const;     // L is a maximal torus (or quasi-torus)
  bool is_whole() const;     // L = G
  friend bool operator==(const CuspidalTriple& a, const CuspidalTriple& b) {
    return a.group == b.group && a.blocks == b.blocks;
  }
};

std::string levi_string(const CuspidalTriple& t);
CuspidalTriple make_triple(const ComplexGroup& g, std::vector<AtomBlock> blocks);
std::vector<CuspidalTriple> cuspidal_triples(const ComplexGroup& g);

combi::RelativeWeylGroup relative_weyl_group(const CuspidalTriple& t);
/// Finds the cuspidal triple whose Levi is L. Throws NotALevi.
combi::RelativeWeylGroup relative_weyl_group(const ComplexGroup& g, const ComplexGroup& levi);

// -------------------------------------------------------- correspondence

/// Twisted tensors the Weyl label with the sign character of the reflection part.
enum class Normalization { Twisted, Untwisted };

struct SpringerImage {
  CuspidalTriple triple;
  combi::WeylLabel label;
};

/// Symbol of the pair, per factor (empty for GL/SL factors).
std::vector<combi::BCSymbol> springer_symbols(const ComplexGroup& g, const UnipotentClass& u,
                                              const SignCharacter& eta);

SpringerImage generalized_springer(const ComplexGroup& g, const UnipotentClass& u,
                                   const SignCharacter& eta,
                                   Normalization norm = Normalization::Twisted);

struct UnipotentPair {
  UnipotentClass u;
  SignCharacter eta;
  friend bool operator==(const UnipotentPair&, const UnipotentPair&) = default;
};

UnipotentPair generalized_springer_inverse(const ComplexGroup& g, const CuspidalTriple& t,
                                           const combi::WeylLabel& label,
                                           Normalization norm = Normalization::Twisted);

struct BlockPairs {
  CuspidalTriple triple;
  std::vector<UnipotentPair> pairs;
  std::vector<combi::WeylLabel> labels;
};

/// The full set of pairs, grouped by block in cuspidal_triples order.
std::vector<BlockPairs> enumerate_ue(const ComplexGroup& g, Normalization norm = Normalization::Twisted);

/// Block of a pair without computing the label.
CuspidalTriple springer_block(const ComplexGroup& g, const UnipotentClass& u, const SignCharacter& eta);

/// Ordinary recipe for Sp(2n): the symbol of the regular-block pair (lambda, 1).
combi::BCSymbol ordinary_symbol_sp(const Partition& lambda);
/// Ordinary bipartition for Sp(2n) via the xi-staircase recipe.
Bipartition ordinary_bipartition_sp(const Partition& lambda);
/// Symbol of (lambda, 1) for O(n)/SO(n), orthogonal row convention.
combi::BCSymbol ordinary_symbol_orth(int n, const Partition& lambda);

}  // namespace abps::springer
