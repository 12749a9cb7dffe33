#include "abps/abps.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "abps/error.hpp"

namespace abps::inertial {

using combi::IrrLabel;
using combi::Partition;
using combi::SignedPermutation;
using combi::WeylFactor;
using combi::WeylLabel;
using combi::WeylType;
using langlands::Centralizer;
using langlands::Summand;
using springer::Atom;
using springer::ComplexGroup;

namespace {

bool line_in_class(const PadicGroup& g, const WFLine& l, const WFLine& rep) {
  return l == rep || (g.family != langlands::Family::GL && l.dual() == rep);
}

/// Coordinates whose twisted line lies in the class with the given centralizer factor.
std::vector<int> class_coordinates(const InertialData& data, const Centralizer& h, int factor,
                                   const SymbolicTorusPoint& t) {
  std::vector<int> out;
  for (const auto& c : h.classes) {
    if (c.factor != factor) continue;
    for (int i = 0; i < t.rank(); ++i)
      if (line_in_class(data.group, data.triple.lines[i].twisted(t.coords[i]), c.line)) out.push_back(i);
  }
  return out;
}

combi::Bipartition as_bipartition(const IrrLabel& l) {
  if (l.type == WeylType::B) return l.bipartition;
  if (l.type == WeylType::Z2) {
    return l.sign == 1 ? combi::Bipartition{Partition({1}), Partition()}
                       : combi::Bipartition{Partition(), Partition({1})};
  }
  fail(ErrorKind::UnrecognizedStructure, "stabilizer factor has no signed-permutation label");
}

IrrLabel convert(const IrrLabel& from, const WeylFactor& to) {
  switch (to.type) {
    case WeylType::A:
    case WeylType::D:
      if (from.type != to.type) fail(ErrorKind::UnrecognizedStructure, "stabilizer and relative Weyl types differ");
      return from;
    case WeylType::B:
      return combi::b_label(as_bipartition(from));
    case WeylType::Z2:
      return combi::z2_label(as_bipartition(from).alpha.empty() ? -1 : 1);
    case WeylType::DExt:
      return combi::bipartition_to_dext(as_bipartition(from));
  }
  return from;
}

/// Restriction of phi to W_F: every summand pi (x) S_a becomes a copies of pi.
std::vector<WFLine> restriction_lines(const FormalParameter& phi) {
  std::vector<WFLine> out;
  for (const auto& s : phi.summands)
    for (int k = 0; k < s.a; ++k) out.push_back(s.line);
  std::sort(out.begin(), out.end());
  return out;
}

SymbolicCoordinate substitute(const SymbolicCoordinate& c, const std::map<std::string, SymbolicCoordinate>& sigma) {
  SymbolicCoordinate out;
  out.torsion = c.torsion;
  out.qexp = c.qexp;
  for (const auto& [v, e] : c.monomial) {
    auto it = sigma.find(v);
    out = out * (it == sigma.end() ? SymbolicCoordinate::variable(v, e) : it->second.pow(e));
  }
  return out;
}

FormalParameter substitute(const FormalParameter& p, const std::map<std::string, SymbolicCoordinate>& sigma) {
  FormalParameter out;
  for (const auto& s : p.summands) {
    WFLine l = s.line;
    l.twist = SymbolicCoordinate::one();
    out.summands.push_back({l.twisted(substitute(s.line.twist, sigma)), s.a});
  }
  out.normalize();
  return out;
}

/// Substitution of the free variables of `from` sending it to `to`, when `to` lies on its stratum.
std::optional<std::map<std::string, SymbolicCoordinate>> specialization(const extquot::TorusCoset& from,
                                                                       const SymbolicTorusPoint& generic,
                                                                       const SymbolicTorusPoint& to) {
  std::map<std::string, SymbolicCoordinate> sigma;
  for (const auto& row : from.basis) {
    std::size_t pivot = 0;
    while (pivot < row.size() && row[pivot] == 0) ++pivot;
    if (pivot == row.size() || row[pivot] != 1) return std::nullopt;
    const auto& c = generic.coords[pivot];
    if (c.monomial.size() != 1 || c.monomial.begin()->second != 1) return std::nullopt;
    sigma[c.monomial.begin()->first] = to.coords[pivot];
  }
  for (int i = 0; i < generic.rank(); ++i)
    if (!(substitute(generic.coords[i], sigma) == to.coords[i])) return std::nullopt;
  return sigma;
}

std::string word_of(const std::vector<combi::NamedElement>& all, const SignedPermutation& w) {
  for (const auto& e : all)
    if (e.element == w) return e.word;
  return combi::word_of(w);
}

int word_length(const std::string& w) {
  return w == "1" ? 0 : static_cast<int>(std::count(w.begin(), w.end(), 's'));
}

/// Greedy basis of an elementary abelian 2-group: simple reflections, then -1, then (length, word).
std::vector<combi::NamedElement> r_basis(int k, const std::vector<combi::NamedElement>& elements) {
  const SignedPermutation minus_one(SignedPermutation::identity(k).sigma(), std::vector<int>(k, -1));
  auto priority = [&](const combi::NamedElement& e) {
    const int len = word_length(e.word);
    if (len == 1) return 0;
    if (e.element == minus_one) return 1;
    return 2;
  };
  std::vector<combi::NamedElement> sorted;
  for (const auto& e : elements)
    if (!e.element.is_identity()) sorted.push_back(e);
  std::stable_sort(sorted.begin(), sorted.end(), [&](const auto& x, const auto& y) {
    if (priority(x) != priority(y)) return priority(x) < priority(y);
    if (word_length(x.word) != word_length(y.word)) return word_length(x.word) < word_length(y.word);
    return x.word < y.word;
  });
  std::vector<combi::NamedElement> basis;
  std::vector<SignedPermutation> span{SignedPermutation::identity(k)};
  for (const auto& e : sorted) {
    if (std::find(span.begin(), span.end(), e.element) != span.end()) continue;
    basis.push_back(e);
    const auto old = span;
    for (const auto& s : old) span.push_back(s * e.element);
  }
  return basis;
}

std::string factor_name(const combi::WeylFactor& f) {
  switch (f.type) {
    case WeylType::A: return "S" + std::to_string(f.n);
    case WeylType::B: return "B" + std::to_string(f.n);
    case WeylType::D: return f.n == 2 ? "S2|xZ/2" : "D" + std::to_string(f.n);
    case WeylType::DExt: return "D" + std::to_string(f.n) + "|xZ/2";
    case WeylType::Z2: return "Z/2";
  }
  return "?";
}

std::string factor_generators(const extquot::StabilizerFactor& f) {
  if (f.shape.type == WeylType::D && f.shape.n == 2 && f.generators.size() == 2)
    return "<" + f.generators[0].word + ">|x<" + f.generators[1].word + ">";
  std::string s = "<";
  for (std::size_t i = 0; i < f.generators.size(); ++i) s += (i ? "," : "") + f.generators[i].word;
  return s + ">";
}

std::string atom_name(const springer::Factor& f) {
  switch (f.kind) {
    case Atom::Sp: return "Sp" + std::to_string(f.n);
    case Atom::SO: return "SO" + std::to_string(f.n);
    case Atom::O: return "O" + std::to_string(f.n);
    case Atom::GL: return "GL" + std::to_string(f.n);
    case Atom::SL: return "SL" + std::to_string(f.n);
  }
  return "?";
}

bool dropped_in_tables(const springer::Factor& f) {
  return (f.kind == Atom::SO || f.kind == Atom::O) && f.n == 1;
}

ComplexGroup levi_of(const PadicGroup& g, const std::vector<WFLine>& lines, const FormalParameter& core) {
  ComplexGroup levi;
  for (const auto& l : lines) levi.factors.push_back({Atom::GL, l.dim});
  if (g.family != langlands::Family::GL && core.dim() > 1)
    levi.factors.push_back(langlands::core_group(g, core).dual().factors.front());
  return levi;
}

/// Removes dual pairs {x, x^v}; false when something is left unpaired.
bool pairs_up(std::vector<WFLine> lines) {
  while (!lines.empty()) {
    const WFLine x = lines.back();
    lines.pop_back();
    auto it = std::find(lines.begin(), lines.end(), x.dual());
    if (it == lines.end()) return false;
    lines.erase(it);
  }
  return true;
}

/// Multiset difference a - b.
std::vector<WFLine> minus(std::vector<WFLine> a, const std::vector<WFLine>& b) {
  for (const auto& x : b) {
    auto it = std::find(a.begin(), a.end(), x);
    if (it != a.end()) a.erase(it);
  }
  return a;
}

struct CoreOption {
  std::vector<Summand> core;
  int gl_lines = 0;
};

}  // namespace

// ------------------------------------------------------------------ data

FormalParameter base_parameter(const PadicGroup& g, const InertialTriple& j) { return langlands::embed(g, j); }

InertialData build_inertial(const PadicGroup& g, const InertialTriple& j) {
  InertialData d;
  d.group = g;
  d.triple = j;
  d.torus.lines = j.lines;
  d.torus.coordinates = extquot::generic_point(static_cast<int>(j.lines.size()));
  for (const auto& l : j.lines) d.torus.identification *= l.period;
  d.weyl.action = langlands::inertial_action(g, j);
  for (const auto& e : d.weyl.action.elements)
    d.weyl.table.push_back({e.word, extquot::act(e.element, d.torus.coordinates)});
  return d;
}

// -------------------------------------------------------------------- mu

WeylLabel springer_label(const InertialData& data, const extquot::EQPoint& p, const Centralizer& h,
                         const springer::CuspidalTriple& block) {
  WeylLabel out;
  if (h.group.factors.empty()) return out;
  const auto w = springer::relative_weyl_group(block);
  std::vector<bool> used(p.stabilizer.factors.size(), false);
  for (const auto& f : w.factors) {
    const auto coords = class_coordinates(data, h, f.source, p.base);
    int found = -1;
    for (std::size_t k = 0; k < p.stabilizer.factors.size(); ++k) {
      const auto& support = p.stabilizer.factors[k].support;
      const bool inside = std::all_of(support.begin(), support.end(), [&](int i) {
        return std::find(coords.begin(), coords.end(), i) != coords.end();
      });
      if (!inside || support.empty()) continue;
      if (found >= 0) fail(ErrorKind::UnrecognizedStructure, "two stabilizer factors on one centralizer factor");
      found = static_cast<int>(k);
    }
    if (found < 0) fail(ErrorKind::UnrecognizedStructure, "relative Weyl factor without a stabilizer factor");
    used[found] = true;
    out.parts.push_back(convert(p.irrep.parts[found], f));
  }
  if (std::find(used.begin(), used.end(), false) != used.end())
    fail(ErrorKind::UnrecognizedStructure, "stabilizer factor outside the relative Weyl group");
  return out;
}

std::vector<MuPoint> mu(const InertialData& data) {
  const auto eq = extquot::spectral_eq(data.weyl.action);
  std::map<int, std::vector<langlands::LocalPair>> pairs_at;
  std::map<int, int> families_at;
  for (const auto& p : eq) ++families_at[p.stratum];

  std::vector<MuPoint> out;
  for (const auto& p : eq) {
    auto it = pairs_at.find(p.stratum);
    if (it == pairs_at.end()) {
      it = pairs_at.emplace(p.stratum, langlands::local_pairs(data.group, data.triple, p.base)).first;
      if (static_cast<int>(it->second.size()) != families_at[p.stratum])
        fail(ErrorKind::UnrecognizedStructure, "stabilizer irreps and local pairs differ in number");
    }
    const auto& pairs = it->second;
    const auto& h = pairs.front().centralizer;
    const auto label = springer_label(data, p, h, pairs.front().block);
    auto match = std::find_if(pairs.begin(), pairs.end(), [&](const auto& q) { return q.label == label; });
    if (match == pairs.end()) fail(ErrorKind::UnrecognizedStructure, "no enhanced parameter carries the label");
    if (!h.group.factors.empty()) {
      const auto inverse =
          springer::generalized_springer_inverse(h.group, match->block, label, springer::Normalization::Twisted);
      if (!(inverse.u == match->centralizer.u) || !(inverse.eta == match->param.enhancement))
        fail(ErrorKind::UnrecognizedStructure, "Springer inverse disagrees with the enumerated pair");
    }
    MuPoint m{p, *match, {}};
    std::vector<int> parts;
    for (const auto& s : match->param.param.summands)
      for (int k = 0; k < s.line.dim; ++k) parts.push_back(s.a);
    for (const auto& s : data.triple.core.summands)
      for (int k = 0; k < s.line.dim; ++k) parts.erase(std::find(parts.begin(), parts.end(), s.a));
    m.component = combi::class_string(Partition(parts));
    out.push_back(std::move(m));
  }
  return out;
}

SymbolicTorusPoint theta_point(const SymbolicCoordinate& z, const MuPoint& p) {
  SymbolicTorusPoint t = p.point.base;
  for (int i = 0; i < t.rank(); ++i) t.coords[i] = t.coords[i] * z.pow(p.pair.correcting[i]);
  return t;
}

std::vector<SymbolicTorusPoint> theta(const InertialData& data, const SymbolicCoordinate& z, const MuPoint& p) {
  const auto t = theta_point(z, p);
  std::set<SymbolicTorusPoint> orbit;
  for (const auto& e : data.weyl.action.elements) orbit.insert(extquot::act(e.element, t));
  return {orbit.begin(), orbit.end()};
}

std::optional<SymbolicTorusPoint> support_point(const InertialData& data, const CuspidalDatum& support) {
  const auto& j = data.triple;
  if (!(support.core == j.core) || !(support.character == j.character) || support.lines.size() != j.lines.size())
    return std::nullopt;
  SymbolicTorusPoint s;
  std::vector<bool> used(support.lines.size(), false);
  for (const auto& base : j.lines) {
    bool placed = false;
    for (std::size_t k = 0; k < support.lines.size() && !placed; ++k) {
      if (used[k]) continue;
      WFLine l = support.lines[k];
      if (l.name != base.name && data.group.family != langlands::Family::GL) l = l.dual();
      if (l.name != base.name) continue;
      s.coords.push_back(l.twist * base.twist.inverse());
      used[k] = placed = true;
    }
    if (!placed) return std::nullopt;
  }
  return s;
}

std::optional<SymbolicTorusPoint> locate(const InertialData& data, const FormalParameter& phi) {
  const auto& j = data.triple;
  const bool gl = data.group.family == langlands::Family::GL;
  auto rest = minus(restriction_lines(phi), restriction_lines(j.core));
  SymbolicTorusPoint t;
  for (const auto& base : j.lines) {
    auto it = std::find_if(rest.begin(), rest.end(), [&](const WFLine& l) {
      return l.name == base.name || (!gl && l.dual().name == base.name);
    });
    if (it == rest.end()) return std::nullopt;
    const WFLine l = it->name == base.name ? *it : it->dual();
    rest.erase(it);
    if (!gl) {
      auto d = std::find(rest.begin(), rest.end(), l.dual());
      if (d == rest.end()) return std::nullopt;
      rest.erase(d);
    }
    t.coords.push_back(l.twist * base.twist.inverse());
  }
  if (!rest.empty()) return std::nullopt;
  if (restriction_lines(langlands::embed_at(data.group, j, t)) != restriction_lines(phi)) return std::nullopt;
  return t;
}

// ----------------------------------------------------------- filters

bool is_tempered_point(const MuPoint& p) { return p.point.base.unitary(); }

bool is_discrete_point(const MuPoint& p) {
  const auto& h = p.pair.centralizer;
  for (const auto& f : h.group.factors)
    if (f.kind == Atom::GL) return false;
  return h.group.factors.empty() || springer::is_distinguished(h.group, h.u);
}

std::vector<MuPoint> tempered_points(const std::vector<MuPoint>& points) {
  std::vector<MuPoint> out;
  std::copy_if(points.begin(), points.end(), std::back_inserter(out), is_tempered_point);
  return out;
}

std::vector<MuPoint> discrete_points(const std::vector<MuPoint>& points) {
  std::vector<MuPoint> out;
  std::copy_if(points.begin(), points.end(), std::back_inserter(out), is_discrete_point);
  return out;
}

// ------------------------------------------------------------- packets

std::vector<Packet> packets(const std::vector<std::vector<MuPoint>>& per_block) {
  std::vector<Packet> out;
  for (std::size_t b = 0; b < per_block.size(); ++b)
    for (const auto& p : per_block[b]) {
      const auto& phi = p.pair.param.param;
      auto it = std::find_if(out.begin(), out.end(), [&](const Packet& q) { return q.param == phi; });
      if (it == out.end()) {
        out.push_back({phi, {}});
        it = std::prev(out.end());
      }
      it->members.push_back({static_cast<int>(b), p});
    }
  return out;
}

// ---------------------------------------------------------- Bernstein blocks

std::vector<InertialTriple> bernstein_blocks(const PadicGroup& g, const InertialClass& i) {
  const bool gl = g.family == langlands::Family::GL;
  // Names in order of first appearance.
  std::vector<WFLine> names;
  auto note = [&](const WFLine& l) {
    WFLine base = l;
    base.twist = SymbolicCoordinate::one();
    if (std::none_of(names.begin(), names.end(), [&](const WFLine& x) { return x.name == base.name; }))
      names.push_back(base);
  };
  for (const auto& l : i.lines) note(l);
  for (const auto& s : i.core.summands) note(s.line);

  std::vector<std::vector<CoreOption>> options;
  for (const auto& pi : names) {
    const int free_pairs = static_cast<int>(std::count_if(i.lines.begin(), i.lines.end(),
                                                          [&](const WFLine& l) { return l.name == pi.name; }));
    std::vector<WFLine> rigid;
    for (const auto& s : i.core.summands)
      if (s.line.name == pi.name)
        for (int k = 0; k < s.a; ++k) rigid.push_back(s.line);
    const int total = 2 * free_pairs + static_cast<int>(rigid.size());

    std::vector<CoreOption> opts;
    auto consider = [&](const std::vector<Summand>& core) {
      std::vector<WFLine> lines;
      for (const auto& s : core)
        for (int w = s.a - 1; w >= 1 - s.a; w -= 2) lines.push_back(s.line.twisted(SymbolicCoordinate::sqrt_q(w)));
      const auto d = minus(lines, rigid);
      const auto e = minus(rigid, lines);
      if (!pairs_up(d) || !pairs_up(e)) return;
      const int gl_lines = free_pairs - static_cast<int>(d.size()) / 2 + static_cast<int>(e.size()) / 2;
      if (free_pairs < static_cast<int>(d.size()) / 2 || gl_lines < 0) return;
      opts.push_back({core, gl_lines});
    };
    consider({});
    const bool self_dual_class = !gl && pi.dual_name == pi.name;
    if (self_dual_class) {
      const bool odd = pi.selfdual == g.dual_form();
      for (int t : {0, 1}) {
        const WFLine omega = pi.twisted(SymbolicCoordinate::root(t, 2 * pi.period));
        if (t == 1 && omega == pi) continue;
        for (int dd = 1;; ++dd) {
          std::vector<Summand> core;
          int size = 0;
          for (int k = dd; k >= 1; --k) {
            const int a = odd ? 2 * k - 1 : 2 * k;
            core.push_back({omega, a});
            size += a;
          }
          if (size > total) break;
          consider(core);
        }
      }
    }
    if (opts.empty()) return {};
    options.push_back(opts);
  }

  std::vector<InertialTriple> out;
  std::vector<std::size_t> pick(options.size(), 0);
  while (true) {
    InertialTriple j;
    for (std::size_t n = 0; n < names.size(); ++n) {
      const auto& o = options[n][pick[n]];
      for (int k = 0; k < o.gl_lines; ++k) j.lines.push_back(names[n]);
      for (const auto& s : o.core) j.core.summands.push_back(s);
    }
    j.core.normalize();
    std::vector<SignCharacter> chars;
    if (j.core.summands.empty()) {
      chars.push_back({});
    } else {
      try {
        const auto cg = langlands::core_group(g, j.core);
        j.core = langlands::validate(cg, j.core);
        chars = langlands::is_cuspidal(cg, j.core).characters;
      } catch (const Error&) {
      }
    }
    j.levi_dual = levi_of(g, j.lines, j.core);
    for (const auto& eps : chars) {
      j.character = eps;
      out.push_back(j);
    }
    std::size_t n = 0;
    while (n < pick.size() && ++pick[n] == options[n].size()) pick[n++] = 0;
    if (n == pick.size()) break;
  }
  std::stable_sort(out.begin(), out.end(), [](const InertialTriple& x, const InertialTriple& y) {
    return x.lines.size() > y.lines.size();
  });
  return out;
}

// ------------------------------------------------------- family inventory

std::vector<Family> family_inventory(const InertialData& data, const std::vector<MuPoint>& points) {
  const auto ss = extquot::strata(data.weyl.action);
  auto multiplicity = [&](const MuPoint& p) {
    return std::count_if(points.begin(), points.end(), [&](const MuPoint& q) {
      return q.point.stratum == p.point.stratum && q.pair.param.param == p.pair.param.param;
    });
  };
  std::vector<Family> out;
  for (const auto& p : points) {
    Family f;
    f.stratum = p.point.stratum;
    f.point = p.point.base;
    f.label = combi::to_string(p.pair.label);
    f.component = p.component;
    f.param = p.pair.param.param;
    f.eta = springer::to_string(springer::component_group(p.pair.centralizer.group, p.pair.centralizer.u),
                                p.pair.param.enhancement);
    const auto& mine = ss[f.stratum].closure;
    f.generic = mine.dimension() == data.weyl.action.rank;
    f.fresh = true;
    for (const auto& q : points) {
      if (!f.fresh) break;
      const auto& theirs = ss[q.point.stratum].closure;
      if (theirs.dimension() <= mine.dimension()) continue;
      if (multiplicity(q) != multiplicity(p)) continue;
      for (const auto& e : data.weyl.action.elements) {
        const auto sigma = specialization(theirs, q.point.base, extquot::act(e.element, p.point.base));
        if (sigma && substitute(q.pair.param.param, *sigma) == f.param) {
          f.fresh = false;
          break;
        }
      }
    }
    out.push_back(std::move(f));
  }
  return out;
}

// --------------------------------------------------------------- table rows

std::string table_group(const ComplexGroup& g) {
  std::string s;
  for (const auto& f : g.factors) {
    if (dropped_in_tables(f)) continue;
    s += (s.empty() ? "" : "x") + atom_name(f);
  }
  return s.empty() ? "1" : s;
}

std::string table_class(const ComplexGroup& g, const springer::UnipotentClass& u) {
  std::string s;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    if (dropped_in_tables(g.factors[i])) continue;
    const auto& p = u.parts[i].parts();
    const bool identity = std::all_of(p.begin(), p.end(), [](int a) { return a == 1; });
    s += (s.empty() ? "" : "x") + (identity ? std::string("(1)") : combi::class_string(u.parts[i]));
  }
  return s.empty() ? "(1)" : s;
}

ParameterRow parameter_row(const PadicGroup& g, const FormalParameter& phi) {
  const auto h = langlands::centralizer_data(g, phi);
  const auto groups = langlands::component_groups(g, phi);
  ParameterRow row;
  row.param = phi;
  row.h = h.group;
  row.h0 = h.group.identity_component();
  row.u = h.u;
  auto u0 = h.u;
  for (std::size_t f = 0; f < row.h0.factors.size(); ++f) {
    const auto& parts = u0.parts[f].parts();
    const bool very_even = std::all_of(parts.begin(), parts.end(), [&](int a) {
      return a % 2 == 0 && u0.parts[f].multiplicity(a) % 2 == 0;
    });
    // O(2n) does not see the very even splitting; either class of SO(2n) gives the same A.
    if (row.h0.factors[f].kind == Atom::SO && row.h0.factors[f].n % 2 == 0 && !parts.empty() && very_even &&
        u0.tags[f] == springer::VeryEven::None)
      u0.tags[f] = springer::VeryEven::I;
  }
  row.a0 = springer::component_group(row.h0, u0);

  // A_{H°}(u) generators as ambient products of A_H(u).
  std::vector<std::vector<int>> images;
  for (const auto& b : row.a0.basis) {
    std::vector<int> image;
    for (int k : b) {
      const auto& gen = row.a0.ambient[k];
      for (std::size_t m = 0; m < groups.a.ambient.size(); ++m)
        if (groups.a.ambient[m].factor == gen.factor && groups.a.ambient[m].part == gen.part)
          image.push_back(static_cast<int>(m));
    }
    images.push_back(image);
  }
  for (const auto& eta0 : springer::characters(row.a0)) {
    for (const auto& eta : groups.s_characters) {
      bool restricts = true;
      for (std::size_t b = 0; b < images.size(); ++b)
        restricts = restricts && springer::evaluate(groups.a, eta, images[b]) == eta0.values[b];
      if (!restricts) continue;
      const auto support = langlands::cuspidal_support(g, {phi, eta});
      SupportRow sub;
      sub.eta0 = eta0;
      sub.eta0_name = springer::to_string(row.a0, eta0);
      sub.levi = support.datum.levi_dual;
      for (std::size_t k = 0; k < support.datum.lines.size(); ++k) sub.levi_centralizer.factors.push_back({Atom::GL, 1});
      if (support.datum.core.dim() > 1) {
        const auto hc = langlands::centralizer_restriction(langlands::core_group(g, support.datum.core),
                                                           support.datum.core);
        for (const auto& f : hc.factors) sub.levi_centralizer.factors.push_back(f);
        sub.levi_centralizer.det1 = hc.det1;
      }
      row.subrows.push_back(sub);
      break;
    }
  }
  return row;
}

std::string stabilizer_structure(const InertialData& data, const SymbolicTorusPoint& t, bool cuspidal) {
  const int k = data.weyl.action.rank;
  const auto all = extquot::weyl_bk(k).elements;
  const auto gamma = extquot::stabilizer(data.weyl.action, t);
  const auto h = langlands::centralizer_data(data.group, langlands::embed_at(data.group, data.triple, t));

  auto flip = [&](int i) {
    std::vector<int> signs(k, 1);
    signs[i] = -1;
    return SignedPermutation(SignedPermutation::identity(k).sigma(), signs);
  };
  std::vector<SignedPermutation> outer_flips, r_gens;
  for (const auto& c : h.classes) {
    if (c.factor < 0) continue;
    const auto& f = h.group.factors[c.factor];
    if (f.kind != Atom::O || f.n % 2) continue;
    const auto coords = class_coordinates(data, h, c.factor, t);
    if (coords.empty()) continue;
    for (int i : coords) outer_flips.push_back(flip(i));
    r_gens.push_back(flip(coords.back()));
  }
  std::vector<SignedPermutation> w0_gens;
  if (!cuspidal)
    for (const auto& e : gamma.elements)
      if (e.element.is_reflection() &&
          std::find(outer_flips.begin(), outer_flips.end(), e.element) == outer_flips.end())
        w0_gens.push_back(e.element);

  const auto w0 = extquot::recognize(k, extquot::generated(k, w0_gens).elements);
  if (!w0.recognized) fail(ErrorKind::UnrecognizedStructure, "identity part of the stabilizer is not a reflection group");
  const auto r = r_basis(k, extquot::generated(k, r_gens).elements);

  std::string w0_struct, w0_gens_s;
  for (const auto& f : w0.factors) {
    w0_struct += (w0_struct.empty() ? "" : "x") + factor_name(f.shape);
    w0_gens_s += (w0_gens_s.empty() ? "" : "x") + factor_generators(f);
  }
  const bool w0_trivial = w0.factors.empty();
  const bool r_trivial = r.empty();
  const bool compound = w0_struct.find("|x") != std::string::npos && !r_trivial;
  if (w0_trivial) w0_struct = "{1}";
  if (compound) {
    w0_struct = "(" + w0_struct + ")";
    w0_gens_s = "(" + w0_gens_s + ")";
  }
  std::string r_struct = r_trivial ? "{1}" : r.size() == 1 ? "(Z/2)" : "(Z/2)^" + std::to_string(r.size());
  std::string r_gens_s;
  for (const auto& e : r) r_gens_s += (r_gens_s.empty() ? "" : "x") + ("<" + word_of(all, e.element) + ">");

  std::string gens;
  if (w0_trivial && r_trivial) gens = "{1}";
  else if (w0_trivial) gens = (cuspidal ? "{1}|x" : "") + r_gens_s;
  else if (r_trivial) gens = w0_gens_s;
  else gens = w0_gens_s + "|x" + r_gens_s;
  return w0_struct + "|x" + r_struct + " ~= " + gens;
}

std::vector<FiberRow> fiber_rows(const std::vector<InertialData>& blocks, const std::vector<Packet>& packets) {
  std::size_t principal = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (blocks[b].torus.dimension() > blocks[principal].torus.dimension()) principal = b;

  std::vector<FiberRow> out;
  for (const auto& packet : packets) {
    const auto& g = blocks.front().group;
    const auto groups = langlands::component_groups(g, packet.param);
    const auto chars = springer::characters(groups.a);
    auto rank = [&](const SignCharacter& eta) {
      return std::find(chars.begin(), chars.end(), eta) - chars.begin();
    };
    auto members = packet.members;
    std::stable_sort(members.begin(), members.end(), [&](const PacketMember& x, const PacketMember& y) {
      return rank(x.point.pair.param.enhancement) < rank(y.point.pair.param.enhancement);
    });
    std::optional<SymbolicTorusPoint> t;
    for (const auto& m : members)
      if (!t && m.block == static_cast<int>(principal)) t = m.point.point.base;
    if (!t) t = locate(blocks[principal], packet.param);
    for (const auto& m : members) {
      const auto& data = blocks[m.block];
      const bool cuspidal = data.torus.dimension() == 0;
      FiberRow row;
      row.param = packet.param;
      row.a = groups.a;
      row.eta = m.point.pair.param.enhancement;
      row.eta_name = springer::to_string(groups.a, row.eta);
      row.levi = springer::to_string(data.triple.levi_dual);
      if (!cuspidal) {
        row.w_label = combi::to_string(m.point.pair.label);
      } else {
        // The component of H outside H°: the basis elements mixing two factors.
        int value = 1;
        for (std::size_t b = 0; b < groups.a.basis.size(); ++b) {
          std::set<int> factors;
          for (int x : groups.a.basis[b]) factors.insert(groups.a.ambient[x].factor);
          if (factors.size() > 1) value *= row.eta.values[b];
        }
        row.w_label = combi::sign_name(value);
      }
      row.w_structure = t ? stabilizer_structure(blocks[principal], *t, cuspidal) : "?";
      out.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace abps::inertial
