#pragma once

// Reference tables transcribed into the ASCII typography of the CLI (see docs/typography.md):
// zeta/epsilon -> "zeta", (x) for the external tensor product, "-" for the empty partition,
// symbols as "top/bottom", the free character chi written as the torus variable z, and the
// unramified twist omega expanded into its two values 1 and xi.

#include <string>
#include <vector>

namespace ref {

struct SpringerRow {
  std::string u, a, eta, symbol, block, label, label_sgn;
};

/// Ordinary correspondence for Sp6; label is empty outside the regular block.
inline const std::vector<SpringerRow> kSp6Ordinary = {
    {"(6)", "Z/2", "1", "", "", "(3,-)", ""},
    {"(6)", "Z/2", "zeta", "", "", "", ""},
    {"(4,2)", "(Z/2)^2", "1(x)1", "", "", "(2,1)", ""},
    {"(4,2)", "(Z/2)^2", "zeta(x)zeta", "", "", "(-,3)", ""},
    {"(4,2)", "(Z/2)^2", "1(x)zeta", "", "", "", ""},
    {"(4,2)", "(Z/2)^2", "zeta(x)1", "", "", "", ""},
    {"(4,1^2)", "Z/2", "1", "", "", "((2,1),-)", ""},
    {"(4,1^2)", "Z/2", "zeta", "", "", "", ""},
    {"(3^2)", "{1}", "1", "", "", "(1,2)", ""},
    {"(2^3)", "Z/2", "1", "", "", "(1^2,1)", ""},
    {"(2^3)", "Z/2", "zeta", "", "", "", ""},
    {"(2^2,1^2)", "Z/2", "1", "", "", "(1,1^2)", ""},
    {"(2^2,1^2)", "Z/2", "zeta", "", "", "(-,(2,1))", ""},
    {"(2,1^4)", "Z/2", "1", "", "", "(1^3,-)", ""},
    {"(2,1^4)", "Z/2", "zeta", "", "", "", ""},
    {"(1^6)", "{1}", "1", "", "", "(-,1^3)", ""},
};

/// Generalized correspondence for Sp6. The printed table primes the M-block labels; the block
/// column carries that information here.
inline const std::vector<SpringerRow> kSp6Generalized = {
    {"(6)", "Z/2", "1", "3/-", "T", "(3,-)", ""},
    {"(6)", "Z/2", "zeta", "-/3", "M", "(2,-)", ""},
    {"(4,2)", "(Z/2)^2", "1(x)1", "0,4/2", "T", "(2,1)", ""},
    {"(4,2)", "(Z/2)^2", "zeta(x)zeta", "0,2/4", "T", "(-,3)", ""},
    {"(4,2)", "(Z/2)^2", "1(x)zeta", "0/2,4", "M", "(1^2,-)", ""},
    {"(4,2)", "(Z/2)^2", "zeta(x)1", "0,2,4/-", "H", "1", ""},
    {"(4,1^2)", "Z/2", "1", "1,4/1", "T", "((2,1),-)", ""},
    {"(4,1^2)", "Z/2", "zeta", "1/1,4", "M", "(1,1)", ""},
    {"(3^2)", "{1}", "1", "0,3/3", "T", "(1,2)", ""},
    {"(2^3)", "Z/2", "1", "1,3/2", "T", "(1^2,1)", ""},
    {"(2^3)", "Z/2", "zeta", "2/1,3", "M", "(-,2)", ""},
    {"(2^2,1^2)", "Z/2", "1", "0,2,5/2,4", "T", "(1,1^2)", ""},
    {"(2^2,1^2)", "Z/2", "zeta", "0,2,4/2,5", "T", "(-,(2,1))", ""},
    {"(2,1^4)", "Z/2", "1", "1,3,5/1,3", "T", "(1^3,-)", ""},
    {"(2,1^4)", "Z/2", "zeta", "1,3/1,3,5", "M", "(-,1^2)", ""},
    {"(1^6)", "{1}", "1", "0,2,4,6/2,4,6", "T", "(-,1^3)", ""},
};

inline const std::vector<SpringerRow> kSO4Generalized = {
    {"(3,1)", "Z/2", "1", "0/2", "T", "{2,-}", "{1^2,-}"},
    {"(3,1)", "Z/2", "zeta", "0,2/-", "H", "1", "1"},
    {"(2^2)", "{1}", "1", "1/1", "T", "{1,1}", "{1,1}'"},
    {"(2^2)'", "{1}", "1", "1/1", "T", "{1,1}'", "{1,1}"},
    {"(1^4)", "{1}", "1", "0,2/1,3", "T", "{1^2,-}", "{2,-}"},
};

struct ActionRow {
  std::string w, image;
};

inline const std::vector<ActionRow> kSp4Action = {
    {"1", "(z1,z2)"},           {"s1", "(z2,z1)"},           {"s2", "(z1,z2^-1)"},
    {"s1s2", "(z2^-1,z1)"},     {"s2s1", "(z2,z1^-1)"},      {"s1s2s1", "(z1^-1,z2)"},
    {"s2s1s2", "(z2^-1,z1^-1)"}, {"s1s2s1s2", "(z1^-1,z2^-1)"},
};

struct ParameterRow {
  std::string param, h, h0, u, a, eta, levi_centralizer, levi;
};

inline const std::vector<ParameterRow> kSp4Parameters = {
    {"1 + zeta*S[3] + zeta", "S(O4xO1)", "SO4", "(3,1)", "Z/2 ~= <z1z3>", "zeta", "S(O4xO1)", "SO5"},
    {"1 + zeta*S[3] + zeta", "S(O4xO1)", "SO4", "(3,1)", "Z/2 ~= <z1z3>", "1", "GL1^2", "GL1^2"},
    {"1 + zeta*xi*S[3] + zeta*xi", "S(O4xO1)", "SO4", "(3,1)", "Z/2 ~= <z1z3>", "zeta", "S(O4xO1)", "SO5"},
    {"1 + zeta*xi*S[3] + zeta*xi", "S(O4xO1)", "SO4", "(3,1)", "Z/2 ~= <z1z3>", "1", "GL1^2", "GL1^2"},
    {"1 + zeta*S[2]*z^-1 + zeta*S[2]*z", "GL2", "GL2", "(2)", "{1}", "1", "GL1^2", "GL1^2"},
    {"1 + zeta + zeta + zeta*z^-1 + zeta*z", "GL1xS(O2xO1)", "GL1xSO2", "(1)x(1)", "{1}", "1", "GL1^2", "GL1^2"},
    {"1 + zeta*xi + zeta*xi + zeta*z^-1 + zeta*z", "GL1xS(O2xO1)", "GL1xSO2", "(1)x(1)", "{1}", "1", "GL1^2",
     "GL1^2"},
    {"1 + zeta + zeta + zeta*xi + zeta*xi", "S(O2xO2xO1)", "SO2xSO2", "(1)x(1)", "{1}", "1", "GL1^2", "GL1^2"},
};

struct FiberRow {
  std::string param, a, eta, w_irrep, w_structure;
};

inline const std::string kDeltaW = "(S2|xZ/2)|x(Z/2) ~= (<s1>|x<s2s1s2>)|x<s2>";
inline const std::string kSigmaW = "{1}|x(Z/2) ~= {1}|x<s2>";
inline const std::string kStW = "S2|x{1} ~= <s1>";
inline const std::string kChiW = "{1}|x(Z/2) ~= <s2>";
inline const std::string kQW = "{1}|x(Z/2)^2 ~= <s2>x<s1s2s1s2>";

inline const std::vector<FiberRow> kSp4Fibers = {
    {"1 + zeta*S[3] + zeta", "(Z/2)^2 ~= <z1z3>x<z3z1'>", "zeta(x)1", "1", kSigmaW},
    {"1 + zeta*S[3] + zeta", "(Z/2)^2 ~= <z1z3>x<z3z1'>", "zeta(x)zeta", "zeta", kSigmaW},
    {"1 + zeta*S[3] + zeta", "(Z/2)^2 ~= <z1z3>x<z3z1'>", "1(x)1", "{1^2,-}(x)1", kDeltaW},
    {"1 + zeta*S[3] + zeta", "(Z/2)^2 ~= <z1z3>x<z3z1'>", "1(x)zeta", "{1^2,-}(x)zeta", kDeltaW},
    {"1 + zeta*xi*S[3] + zeta*xi", "(Z/2)^2 ~= <z1z3>x<z3z1'>", "zeta(x)1", "1", kSigmaW},
    {"1 + zeta*xi*S[3] + zeta*xi", "(Z/2)^2 ~= <z1z3>x<z3z1'>", "zeta(x)zeta", "zeta", kSigmaW},
    {"1 + zeta*xi*S[3] + zeta*xi", "(Z/2)^2 ~= <z1z3>x<z3z1'>", "1(x)1", "{1^2,-}(x)1", kDeltaW},
    {"1 + zeta*xi*S[3] + zeta*xi", "(Z/2)^2 ~= <z1z3>x<z3z1'>", "1(x)zeta", "{1^2,-}(x)zeta", kDeltaW},
    {"1 + zeta*S[2]*z^-1 + zeta*S[2]*z", "{1}", "1", "(1^2)", kStW},
    {"1 + zeta + zeta + zeta*z^-1 + zeta*z", "Z/2 ~= <z1z1'>", "1", "1", kChiW},
    {"1 + zeta + zeta + zeta*z^-1 + zeta*z", "Z/2 ~= <z1z1'>", "zeta", "zeta", kChiW},
    {"1 + zeta*xi + zeta*xi + zeta*z^-1 + zeta*z", "Z/2 ~= <z1z1'>", "1", "1", kChiW},
    {"1 + zeta*xi + zeta*xi + zeta*z^-1 + zeta*z", "Z/2 ~= <z1z1'>", "zeta", "zeta", kChiW},
    {"1 + zeta + zeta + zeta*xi + zeta*xi", "(Z/2)^2 ~= <z1z1''>x<z1'z1''>", "1(x)1", "1(x)1", kQW},
    {"1 + zeta + zeta + zeta*xi + zeta*xi", "(Z/2)^2 ~= <z1z1''>x<z1'z1''>", "1(x)zeta", "1(x)zeta", kQW},
    {"1 + zeta + zeta + zeta*xi + zeta*xi", "(Z/2)^2 ~= <z1z1''>x<z1'z1''>", "zeta(x)1", "zeta(x)1", kQW},
    {"1 + zeta + zeta + zeta*xi + zeta*xi", "(Z/2)^2 ~= <z1z1''>x<z1'z1''>", "zeta(x)zeta", "zeta(x)zeta", kQW},
};

/// Packet sizes of the four displayed parameters (delta, Steinberg, chi-zeta, Q).
inline const std::vector<std::pair<std::string, int>> kSp4PacketSizes = {
    {"1 + zeta*S[3] + zeta", 4},
    {"1 + zeta*S[2]*z^-1 + zeta*S[2]*z", 1},
    {"1 + zeta + zeta + zeta*z^-1 + zeta*z", 2},
    {"1 + zeta + zeta + zeta*xi + zeta*xi", 4},
};

struct FamilyRow {
  std::string point, label, component;
};

/// The labelled points and lines of the extended quotient picture, one per enhanced family.
inline const std::vector<FamilyRow> kSp4Families = {
    {"(1,1)", "{1^2,-}(x)1", "(3,1)"},    {"(1,1)", "{1^2,-}(x)zeta", "(3,1)"},
    {"(-1,-1)", "{1^2,-}(x)1", "(3,1)"},  {"(-1,-1)", "{1^2,-}(x)zeta", "(3,1)"},
    {"(z,z)", "(1^2)", "(2^2)"},          {"(z,1)", "1", "(1^4)"},
    {"(z,1)", "zeta", "(1^4)"},           {"(z,-1)", "1", "(1^4)"},
    {"(z,-1)", "zeta", "(1^4)"},          {"(1,-1)", "1(x)1", "(1^4)"},
    {"(1,-1)", "1(x)zeta", "(1^4)"},      {"(1,-1)", "zeta(x)1", "(1^4)"},
    {"(1,-1)", "zeta(x)zeta", "(1^4)"},
};

}  // namespace ref
