#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "abps/combicore.hpp"
#include "abps/weyl.hpp"

namespace abps::extquot {

using combi::NamedElement;
using combi::SignedPermutation;
using Fraction = boost::rational<std::int64_t>;

/// e(torsion) * sqrt(q)^qexp * prod var^exp.
struct SymbolicCoordinate {
  Fraction torsion{0};  // kept in [0, 1)
  int qexp = 0;
  std::map<std::string, int> monomial;  // no zero exponents

  static SymbolicCoordinate one() { return {}; }
  /// e(num/den), a root of unity.
  static SymbolicCoordinate root(std::int64_t num, std::int64_t den);
  static SymbolicCoordinate sqrt_q(int k);
  static SymbolicCoordinate variable(const std::string& name, int exponent = 1);

  SymbolicCoordinate inverse() const;
  SymbolicCoordinate pow(int e) const;
  bool unitary() const { return qexp == 0; }
  bool constant() const { return monomial.empty(); }
  bool is_one() const { return torsion.numerator() == 0 && qexp == 0 && monomial.empty(); }

  friend SymbolicCoordinate operator*(const SymbolicCoordinate& a, const SymbolicCoordinate& b);
  friend bool operator==(const SymbolicCoordinate&, const SymbolicCoordinate&) = default;
  friend bool operator<(const SymbolicCoordinate& a, const SymbolicCoordinate& b);
};

/// "1", "-1", "z", "z^-1", "-z'", "e(1/4)", "q^{1/2}*z".
std::string to_string(const SymbolicCoordinate& c);

struct SymbolicTorusPoint {
  std::vector<SymbolicCoordinate> coords;

  int rank() const { return static_cast<int>(coords.size()); }
  bool unitary() const;
  friend bool operator==(const SymbolicTorusPoint&, const SymbolicTorusPoint&) = default;
  friend bool operator<(const SymbolicTorusPoint& a, const SymbolicTorusPoint& b) { return a.coords < b.coords; }
};

/// "(z,-1)".
std::string to_string(const SymbolicTorusPoint& t);
/// (z1, ..., zk).
SymbolicTorusPoint generic_point(int k);

/// Coordinate i of the result is coordinate sigma^{-1}(i) of t raised to signs_i.
SymbolicTorusPoint act(const SignedPermutation& w, const SymbolicTorusPoint& t);

/// {exp(2 pi i (x0 + sum c_f v_f))}: translation x0 in (Q/Z)^k plus the complex span of the basis rows.
struct TorusCoset {
  std::vector<std::vector<std::int64_t>> basis;  // echelon form, positive pivots
  std::vector<Fraction> translation;             // zero on pivot columns, entries in [0, 1)
  // Defining equations A x = b (mod Z^k).
  combi::IntMatrix equations;
  std::vector<Fraction> rhs;

  int rank() const { return static_cast<int>(translation.size()); }
  int dimension() const { return static_cast<int>(basis.size()); }
  /// Uses z, z', z'', ... for the free directions.
  SymbolicTorusPoint generic_point() const;
  /// Torsion point x (angles in Q/Z).
  bool contains(const std::vector<Fraction>& x) const;
  friend bool operator==(const TorusCoset& a, const TorusCoset& b) {
    return a.basis == b.basis && a.translation == b.translation;
  }
};

/// All components of {x : A x = b mod Z^k}.
std::vector<TorusCoset> solve(const combi::IntMatrix& a, const std::vector<Fraction>& b, int k);
/// Components of the fixed locus of w, from the Smith form of M_w - I.
std::vector<TorusCoset> fixed_locus(const SignedPermutation& w);
/// Image of a coset under w.
TorusCoset transform(const SignedPermutation& w, const TorusCoset& c);

// ----------------------------------------------------------------- actions

/// A finite group of signed permutations acting on (C^x)^k.
struct Action {
  int rank = 0;
  std::vector<NamedElement> elements;  // shortest words first
};

Action weyl_bk(int k);
/// Subgroup of W(B_k) generated by the given elements.
Action generated(int k, const std::vector<SignedPermutation>& gens);
Action trivial_action(int k);

/// Conjugacy class representatives: the first element of each class in element order.
std::vector<NamedElement> class_representatives(const Action& a);

// -------------------------------------------------------------- stabilizers

struct StabilizerFactor {
  combi::WeylFactor shape;  // A (S_m), B, D, or Z2
  std::vector<int> support;  // coordinates moved by the factor
  std::vector<NamedElement> generators;
};

struct Stabilizer {
  std::vector<NamedElement> elements;
  bool recognized = false;
  std::vector<StabilizerFactor> factors;

  long order() const { return static_cast<long>(elements.size()); }
  combi::RelativeWeylGroup shape() const;
};

/// "1", "<s1> ~= S2", "<s2>x<s1s2s1> ~= (Z/2)^2", "<s1,s2> ~= B2".
std::string to_string(const Stabilizer& s);

/// Product of reflection factors, or an elementary abelian 2-group.
Stabilizer recognize(int k, std::vector<NamedElement> elements);
Stabilizer stabilizer(const Action& a, const SymbolicTorusPoint& t);

/// Labels of a recognized stabilizer, in combi::irreps order. Throws UnrecognizedStructure.
std::vector<combi::WeylLabel> irreps(const Stabilizer& s);

// ------------------------------------------------------- extended quotients

struct Stratum {
  TorusCoset closure;
  SymbolicTorusPoint point;
  Stabilizer stabilizer;
};

/// One representative per orbit of stabilizer strata: dimension descending, then stabilizer order.
std::vector<Stratum> strata(const Action& a, int rank_bound = 6);

struct EQPoint {
  int stratum = 0;
  SymbolicTorusPoint base;
  Stabilizer stabilizer;
  combi::WeylLabel irrep;
};

std::vector<EQPoint> spectral_eq(const Action& a);

struct GeoEQPoint {
  NamedElement element;
  TorusCoset component;
  SymbolicTorusPoint base;
  /// Generic points of the components merged into this family.
  std::vector<SymbolicTorusPoint> orbit;
};

std::vector<GeoEQPoint> geometric_eq(const Action& a);

}  // namespace abps::extquot
