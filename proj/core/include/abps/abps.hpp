#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abps/extquot.hpp"
#include "abps/langlands.hpp"

namespace abps::inertial {

using langlands::CuspidalDatum;
using langlands::EnhancedParameter;
using langlands::FormalParameter;
using langlands::PadicGroup;
using langlands::WFLine;
using extquot::SymbolicCoordinate;
using extquot::SymbolicTorusPoint;
using springer::SignCharacter;

/// [L, phi, epsilon] with all twists trivial.
using InertialTriple = CuspidalDatum;

/// lines + duals + core of the triple, untwisted.
FormalParameter base_parameter(const PadicGroup& g, const InertialTriple& j);

struct InertialTorus {
  std::vector<WFLine> lines;        // one coordinate per GL-line
  SymbolicTorusPoint coordinates;   // (z1, ..., zk)
  /// Twists fixing every line: the product of the line periods.
  long identification = 1;

  int dimension() const { return coordinates.rank(); }
};

struct ActionRow {
  std::string word;
  SymbolicTorusPoint image;  // image of (z1, ..., zk)
};

struct InertialWeyl {
  extquot::Action action;
  std::vector<ActionRow> table;
};

struct InertialData {
  PadicGroup group;
  InertialTriple triple;
  InertialTorus torus;
  InertialWeyl weyl;
};

InertialData build_inertial(const PadicGroup& g, const InertialTriple& j);

// ------------------------------------------------------------------- mu

struct MuPoint {
  extquot::EQPoint point;
  langlands::LocalPair pair;  // parameter, centralizer, block, Springer label, c_u
  /// Partition of the SL2-part outside the core: "(3,1)", "(2,2)", "(1^4)".
  std::string component;
};

/// Pairs every spectral family with the enhanced parameter carrying the same Springer label.
/// Throws UnrecognizedStructure when a stabilizer is not a product of reflection groups
/// or a label has no partner.
std::vector<MuPoint> mu(const InertialData& data);

/// Stabilizer label converted to a label of the relative Weyl group of the matching block.
combi::WeylLabel springer_label(const InertialData& data, const extquot::EQPoint& p,
                                const langlands::Centralizer& h, const springer::CuspidalTriple& block);

/// Orbit of c_u(z) t under the inertial group, sorted.
std::vector<SymbolicTorusPoint> theta(const InertialData& data, const SymbolicCoordinate& z, const MuPoint& p);
/// c_u(z) t before taking the orbit.
SymbolicTorusPoint theta_point(const SymbolicCoordinate& z, const MuPoint& p);

/// Support point of a cuspidal support on the torus of the triple, or nullopt when the datum
/// is in another block.
std::optional<SymbolicTorusPoint> support_point(const InertialData& data, const CuspidalDatum& support);

/// Locates the W_F-restriction of a parameter on the torus of the triple.
std::optional<SymbolicTorusPoint> locate(const InertialData& data, const FormalParameter& phi);

bool is_tempered_point(const MuPoint& p);
/// The unipotent label is distinguished in a centralizer without GL factors.
bool is_discrete_point(const MuPoint& p);
std::vector<MuPoint> tempered_points(const std::vector<MuPoint>& points);
std::vector<MuPoint> discrete_points(const std::vector<MuPoint>& points);

// ---------------------------------------------------------------- packets

struct PacketMember {
  int block = 0;
  MuPoint point;
};

struct Packet {
  FormalParameter param;
  std::vector<PacketMember> members;
};

/// Groups points of all blocks by parameter, in order of first appearance.
std::vector<Packet> packets(const std::vector<std::vector<MuPoint>>& per_block);

// ---------------------------------------------------------- Bernstein blocks

/// [M, lambda]: GL lines with trivial twists plus a W_F-core (every S-index 1).
struct InertialClass {
  std::vector<WFLine> lines;
  FormalParameter core;
};

/// Every triple whose infinitesimal character is an unramified twist of the class.
std::vector<InertialTriple> bernstein_blocks(const PadicGroup& g, const InertialClass& i);

// ------------------------------------------------------- family inventory

struct Family {
  int stratum = 0;
  SymbolicTorusPoint point;
  std::string label;      // Springer label of the stabilizer irrep
  std::string component;
  FormalParameter param;
  std::string eta;
  bool generic = false;   // top-dimensional stratum
  bool fresh = false;     // not a specialization of a larger family with the same packet size
};

/// One row per mu point. A family is fresh unless some larger stratum specializes to it with the
/// same parameter and the same number of points carrying that parameter.
std::vector<Family> family_inventory(const InertialData& data, const std::vector<MuPoint>& points);

// --------------------------------------------------------------- table rows

struct SupportRow {
  SignCharacter eta0;           // character of A_{H°}(u)
  std::string eta0_name;
  springer::ComplexGroup levi_centralizer;  // H^L
  springer::ComplexGroup levi;              // L
};

struct ParameterRow {
  FormalParameter param;
  springer::ComplexGroup h;
  springer::ComplexGroup h0;
  springer::UnipotentClass u;
  springer::ComponentGroup a0;
  std::vector<SupportRow> subrows;
};

/// H with SO1/O1 factors dropped, factors written out: "SO2xSO2".
std::string table_group(const springer::ComplexGroup& g);
/// u with the SO1/O1 factors dropped, identity classes written "(1)".
std::string table_class(const springer::ComplexGroup& g, const springer::UnipotentClass& u);

ParameterRow parameter_row(const PadicGroup& g, const FormalParameter& phi);

struct FiberRow {
  FormalParameter param;
  springer::ComponentGroup a;
  SignCharacter eta;
  std::string eta_name;
  std::string levi;        // Levi of the cuspidal support
  std::string w_label;     // Irr of the stabilizer
  std::string w_structure; // "(S2|xZ/2)|x(Z/2) ~= (<s1>|x<s2s1s2>)|x<s2>"
};

/// Rows for every packet, members ordered by enhancement. Stabilizers are computed on the torus of
/// the block with the largest torus, which also realizes them for cuspidal members.
std::vector<FiberRow> fiber_rows(const std::vector<InertialData>& blocks, const std::vector<Packet>& packets);

/// W° x| R split of the stabilizer of t, rendered as in fiber_rows.
std::string stabilizer_structure(const InertialData& data, const SymbolicTorusPoint& t, bool cuspidal);

}  // namespace abps::inertial
