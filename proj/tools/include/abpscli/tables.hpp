#pragma once

#include <string>
#include <utility>
#include <vector>

#include "abps/abps.hpp"
#include "abpscli/render.hpp"

namespace abps::cli {

using langlands::Catalogue;
using langlands::PadicGroup;

// --------------------------------------------------------------- springer

struct SpringerOptions {
  springer::ComplexGroup group;
  bool generalized = false;
  bool sign_twist = false;
  springer::Normalization normalization = springer::Normalization::Untwisted;
};

/// Ordinary: u, A, eta, label (regular block only). Generalized adds the symbol, block letter
/// (T torus, H whole group, M otherwise) and Levi.
Table springer_table(const SpringerOptions& o);
Table cuspidal_table(const springer::ComplexGroup& g);

// ---------------------------------------------------------------- extquot

Table spectral_table(const extquot::Action& a);
Table geometric_table(const extquot::Action& a);

// ------------------------------------------------------------ inertial data

/// Every block of an inertial class with its mu pairing, packets and inventory.
struct Example {
  PadicGroup group;
  Catalogue catalogue;
  inertial::InertialClass inertial_class;
  std::vector<inertial::InertialData> blocks;
  std::vector<std::vector<inertial::MuPoint>> points;
  std::vector<inertial::Packet> packets;
  int selected = 0;  // the block being described
  std::vector<inertial::Family> inventory;
};

/// Builds every Bernstein block of the class and selects the one with the given lines and core
/// (the block with the largest torus when `lines` is empty).
Example build_example(const PadicGroup& g, const inertial::InertialClass& cls, const Catalogue& cat);
Example build_example(const PadicGroup& g, const inertial::InertialClass& cls, const Catalogue& cat,
                      const inertial::InertialTriple& select);

/// Packets of the selected block whose parameter carries a fresh special family.
std::vector<inertial::Packet> special_packets(const Example& e);

Table action_table(const Example& e);
Table mu_table(const Example& e);
Table packet_table(const Example& e);
Table block_table(const Example& e);
Table inventory_table(const Example& e);
Table parameter_table(const Example& e);
Table fiber_table(const Example& e);
Report abps_report(const Example& e);

// --------------------------------------------------------------- records

Report param_report(const PadicGroup& g, const langlands::FormalParameter& phi, const Catalogue& cat);
/// One row per S-character (or only `eta` when non-empty).
Report support_report(const PadicGroup& g, const langlands::FormalParameter& phi, const Catalogue& cat,
                      const std::string& eta);

// --------------------------------------------------------------- fixtures

/// The running Sp4 example: [GL1^2; zeta + zeta] with trivial core.
Example sp4_example(const Catalogue& cat);

/// Golden fixtures by name: table1..table4, table6, table7, figure1.
std::vector<std::pair<std::string, Table>> fixture_tables(const Catalogue& cat);

}  // namespace abps::cli
