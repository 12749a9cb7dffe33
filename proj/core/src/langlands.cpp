#include "abps/langlands.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "abps/error.hpp"

namespace abps::langlands {

using combi::Partition;
using extquot::Fraction;
using springer::Atom;
using springer::Factor;

namespace {

Form type_of_s(int a) { return a % 2 ? Form::Orthogonal : Form::Symplectic; }

Form product_type(Form x, Form y) {
  if (x == Form::None || y == Form::None) return Form::None;
  return x == y ? Form::Orthogonal : Form::Symplectic;
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

/// Weights of S_a on diag(z, 1/z) in sqrt(q) units: a-1, a-3, ..., 1-a.
std::vector<int> weights(const std::vector<int>& parts) {
  std::vector<int> w;
  for (int a : parts)
    for (int j = 1; j <= a; ++j) w.push_back(a + 1 - 2 * j);
  std::sort(w.rbegin(), w.rend());
  return w;
}

/// Cuspidal core partition of a factor: (2d,...,2) for Sp, (2d-1,...,1) for O/SO.
std::vector<int> core_parts(bool symplectic, int d) {
  std::vector<int> p;
  for (int i = d; i >= 1; --i) p.push_back(symplectic ? 2 * i : 2 * i - 1);
  return p;
}

/// W(lambda) minus W(core); fails when the core does not fit.
std::vector<int> remaining_weights(const std::vector<int>& parts, const std::vector<int>& core) {
  auto w = weights(parts);
  for (int x : weights(core)) {
    auto it = std::find(w.begin(), w.end(), x);
    if (it == w.end()) fail(ErrorKind::UnrecognizedStructure, "core weights do not fit the unipotent class");
    w.erase(it);
  }
  return w;
}

/// Positive weights plus half of the zero weights, decreasing.
std::vector<int> positive_half(const std::vector<int>& w) {
  std::vector<int> out;
  int zeros = 0;
  for (int x : w) {
    if (x > 0) out.push_back(x);
    if (x == 0) ++zeros;
  }
  if (zeros % 2) fail(ErrorKind::UnrecognizedStructure, "odd number of zero weights in a self-dual class");
  out.insert(out.end(), static_cast<std::size_t>(zeros / 2), 0);
  std::sort(out.rbegin(), out.rend());
  return out;
}

std::vector<int> parts_of(const Partition& p) { return p.parts(); }

bool is_staircase(const std::vector<int>& parts, bool symplectic) {
  return parts == core_parts(symplectic, static_cast<int>(parts.size()));
}

bool very_even(const std::vector<int>& parts) {
  if (parts.empty()) return false;
  for (int a : parts)
    if (a % 2 || std::count(parts.begin(), parts.end(), a) % 2) return false;
  return true;
}

int factor_of_class(const Centralizer& h, const WFLine& rep) {
  for (const auto& c : h.classes)
    if (c.line == rep) return c.factor;
  return -1;
}

bool ends_with_inverse(const std::string& s) { return s.size() > 3 && s.compare(s.size() - 3, 3, "^-1") == 0; }

/// Representative of {l, dual(l)}: an uninverted name, then the larger twist.
WFLine class_rep(const WFLine& l) {
  WFLine d = l.dual();
  if (ends_with_inverse(l.name) != ends_with_inverse(d.name)) return ends_with_inverse(l.name) ? d : l;
  return l < d ? d : l;
}

std::vector<int> act_vector(const combi::SignedPermutation& w, const std::vector<int>& c) {
  std::vector<int> out(c.size());
  for (int j = 0; j < w.rank(); ++j) {
    const int i = w.sigma()[j];
    out[i] = c[j] * w.signs()[i];
  }
  return out;
}

std::vector<int> orbit_key(const extquot::Action& a, const std::vector<int>& c) {
  std::vector<int> best = c;
  for (const auto& e : a.elements) best = std::min(best, act_vector(e.element, c));
  return best;
}

SymbolicTorusPoint shift(const SymbolicTorusPoint& s, const std::vector<int>& c, int sign) {
  SymbolicTorusPoint t = s;
  for (std::size_t i = 0; i < c.size(); ++i) t.coords[i] = t.coords[i] * SymbolicCoordinate::sqrt_q(sign * c[i]);
  return t;
}

}  // namespace

// ------------------------------------------------------------------ groups

PadicGroup PadicGroup::parse(const std::string& text) {
  static const std::regex re("^(sp|so|gl)([0-9]+)$");
  std::smatch m;
  const std::string s = lower(text);
  if (!std::regex_match(s, m, re)) fail(ErrorKind::InvalidLabel, "unknown group '" + text + "'");
  const int size = std::stoi(m[2]);
  if (m[1] == "sp") {
    if (size % 2) fail(ErrorKind::InvalidLabel, "Sp needs an even size");
    return {Family::Sp, size / 2};
  }
  if (m[1] == "so") return size % 2 ? PadicGroup{Family::SOodd, size / 2} : PadicGroup{Family::SOeven, size / 2};
  return {Family::GL, size};
}

int PadicGroup::dual_dim() const {
  switch (family) {
    case Family::Sp:
      return 2 * n + 1;
    case Family::SOodd:
    case Family::SOeven:
      return 2 * n;
    case Family::GL:
      return n;
  }
  return 0;
}

Form PadicGroup::dual_form() const {
  switch (family) {
    case Family::Sp:
    case Family::SOeven:
      return Form::Orthogonal;
    case Family::SOodd:
      return Form::Symplectic;
    case Family::GL:
      return Form::None;
  }
  return Form::None;
}

ComplexGroup PadicGroup::dual() const {
  switch (family) {
    case Family::Sp:
      return ComplexGroup::so(2 * n + 1);
    case Family::SOodd:
      return ComplexGroup::sp(2 * n);
    case Family::SOeven:
      return ComplexGroup::so(2 * n);
    case Family::GL:
      return ComplexGroup::gl(n);
  }
  return {};
}

std::string to_string(const PadicGroup& g) {
  switch (g.family) {
    case Family::Sp:
      return "Sp" + std::to_string(2 * g.n);
    case Family::SOodd:
      return "SO" + std::to_string(2 * g.n + 1);
    case Family::SOeven:
      return "SO" + std::to_string(2 * g.n);
    case Family::GL:
      return "GL" + std::to_string(g.n);
  }
  return "";
}

std::string dual_name(const PadicGroup& g) { return springer::to_string(g.dual()); }

PadicGroup group_with_dual(Form form, int dim, bool gl) {
  if (gl || form == Form::None) return {Family::GL, dim};
  if (form == Form::Symplectic) return {Family::SOodd, dim / 2};
  return dim % 2 ? PadicGroup{Family::Sp, (dim - 1) / 2} : PadicGroup{Family::SOeven, dim / 2};
}

// --------------------------------------------------------------- catalogue

Catalogue Catalogue::defaults() {
  Catalogue c;
  c.add({"1", false, 1, 1, Form::Orthogonal, 1});
  c.add({"zeta", true, 2, 1, Form::Orthogonal, 1});
  c.add({"xi", false, 2, 1, Form::Orthogonal, 1});
  return c;
}

Catalogue Catalogue::parse(const std::string& text) {
  Catalogue c;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name) || name[0] == '#') continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    CharacterDecl d;
    d.name = name;
    std::string kv;
    while (ls >> kv) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) fail(ErrorKind::InvalidLabel, where + "expected key=value, got '" + kv + "'");
      std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
      auto number = [&]() {
        if (value.empty() || !std::all_of(value.begin(), value.end(), ::isdigit) || std::stoi(value) <= 0)
          fail(ErrorKind::InvalidLabel, where + key + " must be a positive integer");
        return std::stoi(value);
      };
      if (key == "kind") {
        if (value != "ramified" && value != "unramified") fail(ErrorKind::InvalidLabel, where + "bad kind '" + value + "'");
        d.ramified = value == "ramified";
      } else if (key == "order") {
        d.order = number();
      } else if (key == "dim") {
        d.dim = number();
      } else if (key == "period") {
        d.period = number();
      } else if (key == "selfdual") {
        if (value == "orthogonal") d.selfdual = Form::Orthogonal;
        else if (value == "symplectic") d.selfdual = Form::Symplectic;
        else if (value == "none") d.selfdual = Form::None;
        else fail(ErrorKind::InvalidLabel, where + "bad selfdual '" + value + "'");
      } else {
        fail(ErrorKind::InvalidLabel, where + "unknown key '" + key + "'");
      }
    }
    if (!d.ramified && d.dim != 1) fail(ErrorKind::InvalidLabel, where + "unramified characters have dim=1");
    c.add(d);
  }
  if (!c.find("1")) c.add({"1", false, 1, 1, Form::Orthogonal, 1});
  return c;
}

Catalogue Catalogue::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorKind::InvalidLabel, "cannot read catalogue '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str());
}

void Catalogue::add(const CharacterDecl& d) {
  for (auto& e : entries_)
    if (e.name == d.name) {
      e = d;
      return;
    }
  entries_.push_back(d);
}

const CharacterDecl* Catalogue::find(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

const CharacterDecl* Catalogue::unramified_of_order(int order) const {
  for (const auto& e : entries_)
    if (!e.ramified && e.order == order && e.name != "1") return &e;
  return nullptr;
}

bool is_variable_name(const std::string& s) {
  static const std::regex re("^[a-z][0-9]*'*$");
  return std::regex_match(s, re);
}

// ------------------------------------------------------------- parameters

WFLine WFLine::trivial() { return from_decl({"1", false, 1, 1, Form::Orthogonal, 1}); }

WFLine WFLine::from_decl(const CharacterDecl& d) {
  WFLine l;
  if (!d.ramified) {
    l.name = "1";
    l.dual_name = "1";
    l.ramified = false;
    l.twist = SymbolicCoordinate::root(1, d.order);
    return l;
  }
  l.name = d.name;
  l.dim = d.dim;
  l.ramified = true;
  l.selfdual = d.selfdual;
  l.period = d.period;
  l.dual_name = d.selfdual == Form::None ? d.name + "^-1" : d.name;
  return l;
}

WFLine WFLine::twisted(const SymbolicCoordinate& c) const {
  WFLine l = *this;
  l.twist = twist * c;
  // Twists by characters of order dividing the period do not change the class.
  Fraction step(1, period);
  while (l.twist.torsion >= step) l.twist.torsion -= step;
  return l;
}

WFLine WFLine::dual() const {
  WFLine l = *this;
  std::swap(l.name, l.dual_name);
  l.twist = SymbolicCoordinate::one();
  return l.twisted(twist.inverse());
}

bool WFLine::self_dual() const { return dual() == *this; }

bool operator<(const WFLine& a, const WFLine& b) {
  if (a.name != b.name) return a.name < b.name;
  return a.twist < b.twist;
}

std::string to_string(const WFLine& l) {
  std::vector<std::string> tokens;
  if (l.name != "1") tokens.push_back(l.name);
  if (l.twist.torsion.numerator() != 0) {
    tokens.push_back("e(" + std::to_string(l.twist.torsion.numerator()) + "/" +
                     std::to_string(l.twist.torsion.denominator()) + ")");
  }
  SymbolicCoordinate rest = l.twist;
  rest.torsion = 0;
  if (!rest.is_one()) tokens.push_back(extquot::to_string(rest));
  if (tokens.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < tokens.size(); ++i) s += (i ? "*" : "") + tokens[i];
  return s;
}

int FormalParameter::dim() const {
  int d = 0;
  for (const auto& s : summands) d += s.line.dim * s.a;
  return d;
}

void FormalParameter::normalize() { std::sort(summands.begin(), summands.end()); }

std::string to_string(const FormalParameter& p) {
  std::string s;
  for (std::size_t i = 0; i < p.summands.size(); ++i) {
    s += (i ? " + " : "") + to_string(p.summands[i].line);
    if (p.summands[i].a > 1) s += "*S[" + std::to_string(p.summands[i].a) + "]";
  }
  return s.empty() ? "0" : s;
}

FormalParameter validate(const PadicGroup& g, FormalParameter phi) {
  phi.normalize();
  if (phi.dim() != g.dual_dim())
    fail(ErrorKind::DimensionMismatch, "parameter has dimension " + std::to_string(phi.dim()) + ", " +
                                           dual_name(g) + " needs " + std::to_string(g.dual_dim()));
  for (const auto& s : phi.summands)
    if (s.a <= 0 || s.line.dim <= 0) fail(ErrorKind::DimensionMismatch, "summand dimensions must be positive");
  if (g.family == Family::GL) return phi;

  std::vector<Summand> duals;
  for (const auto& s : phi.summands) duals.push_back({s.line.dual(), s.a});
  std::sort(duals.begin(), duals.end());
  if (duals != phi.summands) fail(ErrorKind::TypeMismatch, "parameter is not isomorphic to its dual");

  const Form form = g.dual_form();
  std::map<Summand, int> mult;
  for (const auto& s : phi.summands) ++mult[s];
  for (const auto& [s, m] : mult) {
    if (!s.line.self_dual()) continue;
    if (product_type(s.line.selfdual, type_of_s(s.a)) != form && m % 2)
      fail(ErrorKind::TypeMismatch, to_string(s.line) + "*S[" + std::to_string(s.a) +
                                        "] has the wrong type and odd multiplicity");
  }

  if (form == Form::Orthogonal) {
    // Determinant: a product of quadratic characters, tracked by ramified name parity and torsion.
    std::map<std::string, int> parity;
    Fraction torsion(0);
    for (const auto& s : phi.summands) {
      if (!s.line.self_dual() || s.line.dim != 1) continue;
      if (s.line.name != "1") parity[s.line.name] += s.a;
      torsion += s.line.twist.torsion * Fraction(s.a);
    }
    bool trivial = torsion.denominator() == 1;
    for (const auto& [name, p] : parity) trivial = trivial && p % 2 == 0;
    if (!trivial) fail(ErrorKind::TypeMismatch, "determinant of the parameter is not trivial");
  }
  return phi;
}

bool is_discrete(const PadicGroup& g, const FormalParameter& phi) {
  if (g.family == Family::GL) return phi.summands.size() == 1;
  for (std::size_t i = 0; i < phi.summands.size(); ++i) {
    const auto& s = phi.summands[i];
    if (i && phi.summands[i - 1] == s) return false;
    if (!s.line.self_dual()) return false;
    if (product_type(s.line.selfdual, type_of_s(s.a)) != g.dual_form()) return false;
  }
  return true;
}

bool is_tempered(const PadicGroup&, const FormalParameter& phi) {
  return std::all_of(phi.summands.begin(), phi.summands.end(),
                     [](const Summand& s) { return s.line.twist.unitary(); });
}

// ------------------------------------------------------------ centralizers

Centralizer centralizer_data(const PadicGroup& g, const FormalParameter& phi) {
  const bool gl = g.family == Family::GL;
  std::map<WFLine, IsoClass> by_rep;
  for (const auto& s : phi.summands) {
    WFLine rep = gl ? s.line : class_rep(s.line);
    auto& c = by_rep[rep];
    c.line = rep;
    c.self_dual = !gl && rep.self_dual();
    if (c.self_dual || s.line == rep) c.parts.push_back(s.a);
  }
  std::vector<IsoClass> gls, classical;
  for (auto& [rep, c] : by_rep) {
    std::sort(c.parts.rbegin(), c.parts.rend());
    (c.self_dual ? classical : gls).push_back(c);
  }
  auto size = [](const IsoClass& c) {
    int m = 0;
    for (int a : c.parts) m += a;
    return m;
  };
  std::stable_sort(classical.begin(), classical.end(),
                   [&](const IsoClass& x, const IsoClass& y) { return size(x) > size(y); });

  Centralizer h;
  std::vector<IsoClass> dropped;
  int orthogonal = 0;
  for (const auto& c : classical)
    if (c.line.selfdual == g.dual_form()) ++orthogonal;
  const bool det1 = g.dual_form() == Form::Orthogonal && orthogonal >= 2;
  for (auto c : gls) {
    c.factor = static_cast<int>(h.group.factors.size());
    h.group.factors.push_back({Atom::GL, size(c)});
    h.u.parts.emplace_back(c.parts);
    h.u.tags.push_back(springer::VeryEven::None);
    h.classes.push_back(c);
  }
  for (auto c : classical) {
    const bool orth = c.line.selfdual == g.dual_form();
    Atom atom = orth ? Atom::O : Atom::Sp;
    if (orth && g.dual_form() == Form::Orthogonal && !det1) atom = Atom::SO;
    if (atom == Atom::SO && size(c) == 1) {
      dropped.push_back(c);
      continue;
    }
    c.factor = static_cast<int>(h.group.factors.size());
    h.group.factors.push_back({atom, size(c)});
    h.u.parts.emplace_back(c.parts);
    bool tagged = atom == Atom::SO && size(c) % 2 == 0 && very_even(c.parts);
    h.u.tags.push_back(tagged ? springer::VeryEven::I : springer::VeryEven::None);
    h.classes.push_back(c);
  }
  h.group.det1 = det1;
  for (auto& c : dropped) h.classes.push_back(c);
  return h;
}

ComplexGroup centralizer_restriction(const PadicGroup& g, const FormalParameter& phi) {
  return centralizer_data(g, phi).group;
}

ComponentGroups component_groups(const PadicGroup& g, const FormalParameter& phi) {
  const Centralizer h = centralizer_data(g, phi);
  ComponentGroups out;
  out.a = springer::component_group(h.group, h.u);
  if (g.family == Family::SOodd || g.family == Family::SOeven) {
    // -1 acts on the multiplicity space of each S_a; it is nontrivial in a factor's
    // component group exactly where the part has odd multiplicity.
    for (std::size_t i = 0; i < out.a.ambient.size(); ++i) {
      const auto& gen = out.a.ambient[i];
      if (h.u.parts[gen.factor].multiplicity(gen.part) % 2) out.center.push_back(static_cast<int>(i));
    }
  }
  out.characters = springer::characters(out.a);
  for (const auto& eta : out.characters)
    if (springer::evaluate(out.a, eta, out.center) == 1) out.s_characters.push_back(eta);
  return out;
}

CuspidalityResult is_cuspidal(const PadicGroup& g, const FormalParameter& phi) {
  CuspidalityResult r;
  if (g.family == Family::GL) {
    r.cuspidal = phi.summands.size() == 1 && phi.summands[0].a == 1;
    if (r.cuspidal) r.characters = component_groups(g, phi).s_characters;
    return r;
  }
  if (!is_discrete(g, phi)) return r;
  const Centralizer h = centralizer_data(g, phi);
  for (const auto& c : h.classes) {
    const bool symplectic = c.factor >= 0 && h.group.factors[c.factor].kind == Atom::Sp;
    if (!is_staircase(c.parts, symplectic)) return r;
  }
  const auto groups = component_groups(g, phi);
  for (const auto& eta : groups.s_characters) {
    if (h.group.factors.empty() || springer::springer_block(h.group, h.u, eta).is_whole())
      r.characters.push_back(eta);
  }
  r.cuspidal = !r.characters.empty();
  return r;
}

// --------------------------------------------------- infinitesimal character

std::string to_string(const InfinitesimalCharacter& l) {
  std::string s = "{";
  for (std::size_t i = 0; i < l.lines.size(); ++i) s += (i ? ", " : "") + to_string(l.lines[i]);
  return s + "}";
}

InfinitesimalCharacter infinitesimal_character(const PadicGroup&, const FormalParameter& phi) {
  InfinitesimalCharacter out;
  for (const auto& s : phi.summands)
    for (int j = 1; j <= s.a; ++j) out.lines.push_back(s.line.twisted(SymbolicCoordinate::sqrt_q(s.a + 1 - 2 * j)));
  std::sort(out.lines.begin(), out.lines.end());
  return out;
}

// ----------------------------------------------------------- cuspidal data

std::string to_string(const CuspidalDatum& d) {
  std::string s = "[" + springer::to_string(d.levi_dual) + "; ";
  for (std::size_t i = 0; i < d.lines.size(); ++i) s += (i ? " + " : "") + to_string(d.lines[i]);
  if (!d.core.summands.empty()) s += std::string(d.lines.empty() ? "" : " | ") + to_string(d.core);
  s += "; ";
  for (std::size_t i = 0; i < d.character.values.size(); ++i)
    s += (i ? "," : "") + std::string(d.character.values[i] == 1 ? "1" : "zeta");
  if (d.character.values.empty()) s += "1";
  return s + "]";
}

PadicGroup core_group(const PadicGroup& g, const FormalParameter& core) {
  return group_with_dual(g.dual_form(), core.dim(), g.family == Family::GL);
}

FormalParameter embed_at(const PadicGroup& g, const CuspidalDatum& d, const SymbolicTorusPoint& t) {
  if (t.rank() != static_cast<int>(d.lines.size())) fail(ErrorKind::RankMismatch, "point rank differs from line count");
  FormalParameter p = d.core;
  for (std::size_t i = 0; i < d.lines.size(); ++i) {
    WFLine l = d.lines[i].twisted(t.coords[i]);
    p.summands.push_back({l, 1});
    if (g.family != Family::GL) p.summands.push_back({l.dual(), 1});
  }
  p.normalize();
  return p;
}

FormalParameter embed(const PadicGroup& g, const CuspidalDatum& d) {
  SymbolicTorusPoint one;
  one.coords.assign(d.lines.size(), SymbolicCoordinate::one());
  return embed_at(g, d, one);
}

namespace {

/// Signed block datum of every self-dual class of the core.
std::map<WFLine, int> core_defects(const PadicGroup& g, const FormalParameter& core, const SignCharacter& eps) {
  std::map<WFLine, int> out;
  if (core.summands.empty()) return out;
  const PadicGroup cg = core_group(g, core);
  const Centralizer h = centralizer_data(cg, core);
  std::optional<springer::CuspidalTriple> block;
  if (!h.group.factors.empty()) block = springer::springer_block(h.group, h.u, eps);
  for (const auto& c : h.classes) {
    int d = static_cast<int>(c.parts.size());
    if (block && c.factor >= 0 && h.group.factors[c.factor].kind == Atom::O) d = block->blocks[c.factor].d;
    out[c.line] = d;
  }
  return out;
}

springer::CuspidalTriple pick_block(const std::vector<springer::CuspidalTriple>& candidates,
                                    const std::vector<int>& expected, const std::vector<bool>& signed_factor) {
  std::vector<const springer::CuspidalTriple*> by_abs;
  for (const auto& t : candidates) {
    bool ok = true;
    for (std::size_t f = 0; f < expected.size(); ++f) ok = ok && std::abs(t.blocks[f].d) == std::abs(expected[f]);
    if (ok) by_abs.push_back(&t);
  }
  if (by_abs.empty()) fail(ErrorKind::NotALevi, "no block of the centralizer matches the cuspidal core");
  for (int flip : {1, -1})
    for (const auto* t : by_abs) {
      bool ok = true;
      for (std::size_t f = 0; f < expected.size(); ++f)
        if (signed_factor[f]) ok = ok && t->blocks[f].d == flip * expected[f];
      if (ok) return *t;
    }
  return *by_abs.front();
}

}  // namespace

springer::CuspidalTriple matching_block(const PadicGroup& g, const CuspidalDatum& d, const Centralizer& h) {
  if (h.group.factors.empty()) return springer::make_triple(h.group, {});
  const auto defects = core_defects(g, d.core, d.character);
  std::vector<int> expected(h.group.factors.size(), 0);
  std::vector<bool> signed_factor(h.group.factors.size(), false);
  for (const auto& c : h.classes) {
    if (c.factor < 0) continue;
    auto it = defects.find(c.line);
    if (it != defects.end()) expected[c.factor] = it->second;
    signed_factor[c.factor] = h.group.factors[c.factor].kind == Atom::O;
  }
  return pick_block(springer::cuspidal_triples(h.group), expected, signed_factor);
}

CuspidalSupport cuspidal_support(const PadicGroup& g, const EnhancedParameter& e) {
  const FormalParameter& phi = e.param;
  const Centralizer h = centralizer_data(g, phi);
  const auto groups = component_groups(g, phi);
  if (!springer::valid_character(groups.a, e.enhancement))
    fail(ErrorKind::InvalidEnhancement, "enhancement is not a character of the component group");
  if (springer::evaluate(groups.a, e.enhancement, groups.center) != 1)
    fail(ErrorKind::InvalidEnhancement, "enhancement is nontrivial on the center");

  CuspidalSupport out;
  out.block = h.group.factors.empty() ? springer::make_triple(h.group, {})
                                      : springer::springer_block(h.group, h.u, e.enhancement);
  std::vector<Factor> gl_factors;
  for (const auto& c : h.classes) {
    if (!c.self_dual) {
      for (int w : weights(c.parts)) {
        out.datum.lines.push_back(c.line.twisted(SymbolicCoordinate::sqrt_q(w)));
        out.correcting.push_back(w);
      }
      continue;
    }
    const bool symplectic = c.factor >= 0 && h.group.factors[c.factor].kind == Atom::Sp;
    const int d = c.factor >= 0 ? std::abs(out.block.blocks[c.factor].d) : 1;
    const auto core = core_parts(symplectic, d);
    for (int w : positive_half(remaining_weights(c.parts, core))) {
      out.datum.lines.push_back(c.line.twisted(SymbolicCoordinate::sqrt_q(w)));
      out.correcting.push_back(w);
    }
    for (int a : core) out.datum.core.summands.push_back({c.line, a});
  }
  out.datum.core.normalize();

  for (const auto& l : out.datum.lines) gl_factors.push_back({Atom::GL, l.dim});
  out.datum.levi_dual.factors = gl_factors;
  const int n_core = out.datum.core.dim();
  if (g.family != Family::GL && n_core > 1) {
    const PadicGroup cg = core_group(g, out.datum.core);
    out.datum.levi_dual.factors.push_back(cg.dual().factors.front());
  }

  // Character of the core: the cuspidal character whose block data agree with the original block.
  if (!out.datum.core.summands.empty()) {
    const PadicGroup cg = core_group(g, out.datum.core);
    const auto cusp = is_cuspidal(cg, out.datum.core);
    if (!cusp.cuspidal) fail(ErrorKind::UnrecognizedStructure, "core parameter is not cuspidal");
    std::vector<int> expected;
    std::vector<int> found_index;
    const Centralizer hc = centralizer_data(cg, out.datum.core);
    std::vector<springer::CuspidalTriple> candidates;
    if (hc.group.factors.empty()) {
      out.datum.character = cusp.characters.front();
    } else {
      std::vector<int> want(hc.group.factors.size(), 0);
      std::vector<bool> signed_factor(hc.group.factors.size(), false);
      for (const auto& c : hc.classes) {
        if (c.factor < 0) continue;
        const int f = factor_of_class(h, c.line);
        want[c.factor] = f >= 0 ? out.block.blocks[f].d : static_cast<int>(c.parts.size());
        signed_factor[c.factor] = hc.group.factors[c.factor].kind == Atom::O;
      }
      for (const auto& eta : cusp.characters) candidates.push_back(springer::springer_block(hc.group, hc.u, eta));
      const auto chosen = pick_block(candidates, want, signed_factor);
      for (std::size_t i = 0; i < candidates.size(); ++i)
        if (candidates[i].blocks == chosen.blocks) {
          out.datum.character = cusp.characters[i];
          break;
        }
    }
  }
  return out;
}

// ------------------------------------------------ inertial torus and fibers

extquot::Action inertial_action(const PadicGroup& g, const CuspidalDatum& d) {
  const int k = static_cast<int>(d.lines.size());
  auto same_class = [](const WFLine& x, const WFLine& y) { return x.name == y.name && x.dim == y.dim; };
  const bool d_type = g.family == Family::SOeven && d.core.dim() == 0;
  extquot::Action out{k, {}};
  for (const auto& e : extquot::weyl_bk(k).elements) {
    const auto& w = e.element;
    bool ok = true;
    int flips = 0;
    for (int j = 0; j < k && ok; ++j) {
      const int i = w.sigma()[j];
      if (w.signs()[i] == 1) {
        ok = same_class(d.lines[j], d.lines[i]);
      } else {
        ++flips;
        ok = g.family != Family::GL && same_class(d.lines[j].dual(), d.lines[i]);
      }
    }
    if (ok && d_type && flips % 2) ok = false;
    if (ok) out.elements.push_back(e);
  }
  return out;
}

std::string unipotent_label(const springer::UnipotentClass& u) {
  std::string s;
  for (std::size_t i = 0; i < u.parts.size(); ++i) {
    const auto& p = u.parts[i].parts();
    if (std::all_of(p.begin(), p.end(), [](int a) { return a == 1; })) continue;
    s += (s.empty() ? "" : "x") + combi::class_string(u.parts[i]);
    if (i < u.tags.size() && u.tags[i] == springer::VeryEven::II) s += "'";
  }
  return s.empty() ? "trivial" : s;
}

std::vector<int> correcting_exponents(const PadicGroup& g, const CuspidalDatum& d, const SymbolicTorusPoint& t,
                                      const Centralizer& h, const springer::UnipotentClass& u) {
  const auto defects = core_defects(g, d.core, d.character);
  const int k = static_cast<int>(d.lines.size());
  std::vector<int> out(k, 0);
  std::vector<bool> assigned(k, false);
  for (const auto& c : h.classes) {
    std::vector<int> parts = c.factor >= 0 ? parts_of(u.parts[c.factor]) : c.parts;
    std::vector<int> values;
    if (c.self_dual) {
      const bool symplectic = c.factor >= 0 && h.group.factors[c.factor].kind == Atom::Sp;
      auto it = defects.find(c.line);
      const int dd = it == defects.end() ? 0 : std::abs(it->second);
      values = positive_half(remaining_weights(parts, core_parts(symplectic, dd)));
    } else {
      values = weights(parts);
    }
    std::size_t next = 0;
    for (int i = 0; i < k; ++i) {
      const WFLine l = d.lines[i].twisted(t.coords[i]);
      int orientation = 0;
      if (l == c.line) orientation = 1;
      else if (g.family != Family::GL && l.dual() == c.line) orientation = -1;
      if (!orientation) continue;
      if (next >= values.size()) fail(ErrorKind::UnrecognizedStructure, "class weights do not match its lines");
      out[i] = orientation * values[next++];
      assigned[i] = true;
    }
    if (next != values.size()) fail(ErrorKind::UnrecognizedStructure, "class weights do not match its lines");
  }
  if (std::find(assigned.begin(), assigned.end(), false) != assigned.end())
    fail(ErrorKind::UnrecognizedStructure, "a line of the datum lies in no class");
  return out;
}

std::vector<LocalPair> local_pairs(const PadicGroup& g, const CuspidalDatum& d, const SymbolicTorusPoint& t) {
  const FormalParameter restriction = embed_at(g, d, t);
  const Centralizer h = centralizer_data(g, restriction);
  const auto block = matching_block(g, d, h);
  std::vector<springer::UnipotentPair> pairs;
  std::vector<combi::WeylLabel> labels;
  if (h.group.factors.empty()) {
    pairs.push_back({h.u, {}});
    labels.push_back({});
  } else {
    for (const auto& b : springer::enumerate_ue(h.group, springer::Normalization::Twisted))
      if (b.triple == block) {
        pairs = b.pairs;
        labels = b.labels;
      }
  }
  std::vector<LocalPair> out;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& u = pairs[k].u;
    FormalParameter phi;
    for (const auto& c : h.classes) {
      const std::vector<int> parts = c.factor >= 0 ? parts_of(u.parts[c.factor]) : c.parts;
      for (int a : parts) {
        phi.summands.push_back({c.line, a});
        if (!c.self_dual && g.family != Family::GL) phi.summands.push_back({c.line.dual(), a});
      }
    }
    phi.normalize();
    const auto groups = component_groups(g, phi);
    if (springer::evaluate(groups.a, pairs[k].eta, groups.center) != 1) continue;
    LocalPair p;
    p.point = t;
    p.param = {phi, pairs[k].eta};
    p.centralizer = h;
    p.centralizer.u = u;
    p.block = block;
    p.label = labels[k];
    p.correcting = correcting_exponents(g, d, t, h, u);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<CorrectingCocharacter> correcting_cocharacters(const PadicGroup& g, const CuspidalDatum& d,
                                                           int rank_bound) {
  const auto action = inertial_action(g, d);
  if (action.rank > rank_bound) fail(ErrorKind::RankMismatch, "datum has more lines than the search bound");
  std::vector<CorrectingCocharacter> out;
  std::set<std::vector<int>> seen;
  for (const auto& s : extquot::strata(action, rank_bound))
    for (const auto& p : local_pairs(g, d, s.point))
      if (seen.insert(orbit_key(action, p.correcting)).second)
        out.push_back({unipotent_label(p.centralizer.u), p.correcting});
  auto height = [](const CorrectingCocharacter& c) {
    int m = 0;
    for (int x : c.exponents) m = std::max(m, std::abs(x));
    return m;
  };
  std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return height(x) > height(y); });
  return out;
}

std::vector<EnhancedParameter> fiber(const PadicGroup& g, const CuspidalDatum& d, const SymbolicTorusPoint& s) {
  const auto action = inertial_action(g, d);
  std::vector<EnhancedParameter> out;
  for (const auto& cc : correcting_cocharacters(g, d)) {
    std::set<std::vector<int>> images;
    for (const auto& e : action.elements) images.insert(act_vector(e.element, cc.exponents));
    for (const auto& c : images) {
      const SymbolicTorusPoint t = shift(s, c, -1);
      std::set<std::vector<int>> allowed;
      for (const auto& e : action.elements)
        if (extquot::act(e.element, t) == t) allowed.insert(act_vector(e.element, c));
      for (const auto& p : local_pairs(g, d, t)) {
        if (!allowed.count(p.correcting)) continue;
        if (std::find(out.begin(), out.end(), p.param) == out.end()) out.push_back(p.param);
      }
    }
  }
  return out;
}

}  // namespace abps::langlands
