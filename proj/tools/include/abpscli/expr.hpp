#pragma once

#include <string>

#include "abps/langlands.hpp"

namespace abps::cli {

using langlands::Catalogue;
using langlands::FormalParameter;

/// Parses a formal sum such as "zeta*(S[3]+S[1]) + 1" or "x*zeta*S[2] + 1 + x^-1*zeta*S[2]".
///
/// A term is a product of at most one character name (optionally "name^-1"), unramified
/// twists, S[a], q^{k/2}, e(k/n) and free variables with integer exponents. One level of
/// parentheses is expanded distributively. Summands come back sorted.
/// Throws SyntaxError (with position) or UnknownCharacter.
FormalParameter parse_parameter(const std::string& text, const Catalogue& cat);

/// Canonical form: name, unramified twist, S[a], q^{...}, then variables, joined by '*'.
std::string print_summand(const langlands::Summand& s, const Catalogue& cat);
std::string print_parameter(const FormalParameter& p, const Catalogue& cat);
std::string print_line(const langlands::WFLine& l, const Catalogue& cat);

}  // namespace abps::cli
