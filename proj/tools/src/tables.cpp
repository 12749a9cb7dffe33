#include "abpscli/tables.hpp"

#include <algorithm>

#include "abps/error.hpp"
#include "abpscli/expr.hpp"

namespace abps::cli {

using extquot::SymbolicCoordinate;
using langlands::FormalParameter;
using langlands::WFLine;

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// "(Z/2)^2 ~= <z1z3>x<z3z1'>"; groups without generators print alone.
std::string a_group_string(const springer::ComponentGroup& a) {
  const std::string gens = springer::generators_string(a);
  return gens.empty() ? springer::to_string(a) : springer::to_string(a) + " ~= " + gens;
}

std::string block_letter(const springer::CuspidalTriple& t) {
  if (t.is_torus()) return "T";
  if (t.is_whole()) return "H";
  return "M";
}

std::string lines_string(const std::vector<WFLine>& lines, const Catalogue& cat) {
  std::vector<std::string> parts;
  for (const auto& l : lines) parts.push_back(print_line(l, cat));
  return parts.empty() ? "-" : join(parts, " + ");
}

std::string core_character(const PadicGroup& g, const inertial::InertialTriple& d) {
  if (d.core.summands.empty() || d.character.values.empty()) return "1";
  const auto cg = langlands::core_group(g, d.core);
  const auto a = langlands::component_groups(cg, d.core).a;
  if (springer::valid_character(a, d.character)) return springer::to_string(a, d.character);
  std::vector<std::string> v;
  for (int x : d.character.values) v.push_back(combi::sign_name(x));
  return join(v, ",");
}

std::string datum_string(const PadicGroup& g, const inertial::InertialTriple& d, const Catalogue& cat) {
  std::string s = "[" + springer::to_string(d.levi_dual) + "; " + lines_string(d.lines, cat);
  s += " | " + (d.core.summands.empty() ? std::string("-") : print_parameter(d.core, cat));
  return s + "; " + core_character(g, d) + "]";
}

std::string correcting_string(const std::vector<int>& c) {
  std::vector<std::string> v;
  for (int x : c) v.push_back(std::to_string(x));
  return "(" + join(v, ",") + ")";
}

std::string eta_name(const PadicGroup& g, const langlands::EnhancedParameter& e) {
  const auto a = langlands::component_groups(g, e.param).a;
  return springer::to_string(a, e.enhancement);
}

bool same_lines(std::vector<WFLine> a, std::vector<WFLine> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Json rows_of(const Table& t) { return table_json(t)["rows"]; }

}  // namespace

// --------------------------------------------------------------- springer

Table springer_table(const SpringerOptions& o) {
  Table t;
  const std::string g = springer::to_string(o.group);
  if (!o.generalized) {
    t.name = "springer";
    t.title = "Springer correspondence for " + g;
    t.columns = {{"u", "u"}, {"a_group", "A_H(u)"}, {"eta", "Irr(A_H(u))"}, {"label", "Irr(W_H^L)"}};
  } else {
    t.name = "generalized_springer";
    t.title = "Generalized Springer correspondence for " + g;
    t.columns = {{"u", "u"},         {"a_group", "A_H(u)"}, {"eta", "Irr(A_H(u))"}, {"symbol", "u symbol"},
                 {"block", "L"},     {"levi", "Levi"},      {"label", "Irr(W_H^L)"}};
    if (o.sign_twist) t.columns.push_back({"label_sgn", "Irr(W_H^L) (x) sgn"});
  }
  for (const auto& u : springer::unipotent_classes(o.group)) {
    const auto a = springer::component_group(o.group, u);
    for (const auto& eta : springer::characters(a)) {
      const auto img = springer::generalized_springer(o.group, u, eta, o.normalization);
      const std::string label = combi::to_string(img.label);
      if (!o.generalized) {
        t.add({springer::to_string(u), springer::to_string(a), springer::to_string(a, eta),
               img.triple.is_torus() ? label : ""});
        continue;
      }
      std::vector<std::string> symbols;
      for (const auto& s : springer::springer_symbols(o.group, u, eta))
        if (!s.top.empty() || !s.bottom.empty()) symbols.push_back(combi::to_string(s));
      std::vector<std::string> row = {springer::to_string(u), springer::to_string(a), springer::to_string(a, eta),
                                      join(symbols, " x "), block_letter(img.triple), springer::levi_string(img.triple),
                                      label};
      if (o.sign_twist) row.push_back(combi::to_string(combi::twisted(img.label)));
      t.add(row);
    }
  }
  return t;
}

Table cuspidal_table(const springer::ComplexGroup& g) {
  Table t;
  t.name = "cuspidal";
  t.title = "Cuspidal triples of " + springer::to_string(g);
  t.columns = {{"levi", "L"}, {"unipotent", "v"}, {"character", "epsilon"}, {"relative_weyl", "N_H(L)/L"}};
  for (const auto& c : springer::cuspidal_triples(g))
    t.add({springer::levi_string(c), springer::to_string(c.unip), springer::to_string(c.core_group, c.character),
           combi::to_string(springer::relative_weyl_group(c))});
  return t;
}

// ---------------------------------------------------------------- extquot

Table spectral_table(const extquot::Action& a) {
  Table t;
  t.name = "spectral_eq";
  t.title = "Spectral extended quotient";
  t.columns = {{"stratum", "stratum"}, {"point", "t"}, {"stabilizer", "stabilizer"}, {"irrep", "rho"}};
  for (const auto& p : extquot::spectral_eq(a))
    t.add({std::to_string(p.stratum), extquot::to_string(p.base), extquot::to_string(p.stabilizer),
           combi::to_string(p.irrep)});
  return t;
}

Table geometric_table(const extquot::Action& a) {
  Table t;
  t.name = "geometric_eq";
  t.title = "Geometric extended quotient";
  t.columns = {{"element", "w"}, {"point", "t"}, {"orbit", "components"}};
  for (const auto& p : extquot::geometric_eq(a)) {
    std::vector<std::string> orbit;
    for (const auto& x : p.orbit) orbit.push_back(extquot::to_string(x));
    t.add({p.element.word, extquot::to_string(p.base), join(orbit, " ")});
  }
  return t;
}

// ------------------------------------------------------------ inertial data

Example build_example(const PadicGroup& g, const inertial::InertialClass& cls, const Catalogue& cat) {
  return build_example(g, cls, cat, {});
}

Example build_example(const PadicGroup& g, const inertial::InertialClass& cls, const Catalogue& cat,
                      const inertial::InertialTriple& select) {
  Example e;
  e.group = g;
  e.catalogue = cat;
  e.inertial_class = cls;
  for (const auto& j : inertial::bernstein_blocks(g, cls)) {
    e.blocks.push_back(inertial::build_inertial(g, j));
    e.points.push_back(inertial::mu(e.blocks.back()));
  }
  if (e.blocks.empty()) fail(ErrorKind::NotALevi, "no Bernstein block matches the inertial class");
  e.packets = inertial::packets(e.points);
  if (!select.lines.empty() || !select.core.summands.empty()) {
    e.selected = -1;
    for (std::size_t i = 0; i < e.blocks.size(); ++i) {
      const auto& j = e.blocks[i].triple;
      if (!same_lines(j.lines, select.lines) || !(j.core == select.core)) continue;
      if (!select.character.values.empty() && !(j.character == select.character)) continue;
      e.selected = static_cast<int>(i);
      break;
    }
    if (e.selected < 0) fail(ErrorKind::NotALevi, "the requested triple is not a Bernstein block of its class");
  }
  e.inventory = inertial::family_inventory(e.blocks[e.selected], e.points[e.selected]);
  return e;
}

std::vector<inertial::Packet> special_packets(const Example& e) {
  std::vector<inertial::Packet> out;
  for (const auto& p : e.packets)
    if (std::any_of(e.inventory.begin(), e.inventory.end(),
                    [&](const inertial::Family& f) { return f.fresh && !f.generic && f.param == p.param; }))
      out.push_back(p);
  return out;
}

Table action_table(const Example& e) {
  const auto& d = e.blocks[e.selected];
  Table t;
  t.name = "action";
  t.title = "Action of the inertial Weyl group on the torus of " + datum_string(e.group, d.triple, e.catalogue);
  t.columns = {{"w", "w"}, {"image", extquot::to_string(d.torus.coordinates)}};
  for (const auto& r : d.weyl.table) t.add({r.word, extquot::to_string(r.image)});
  return t;
}

Table mu_table(const Example& e) {
  Table t;
  t.name = "eq_points";
  t.title = "Extended quotient points and their enhanced parameters";
  t.columns = {{"stratum", "stratum"},   {"point", "t"},          {"irrep", "rho"},
               {"parameter", "phi"},     {"eta", "eta"},          {"label", "Springer label"},
               {"component", "u"},       {"tempered", "tempered"}, {"discrete", "discrete"},
               {"theta_sqrt_q", "theta_sqrt(q)"}};
  for (const auto& p : e.points[e.selected])
    t.add({std::to_string(p.point.stratum), extquot::to_string(p.point.base), combi::to_string(p.point.irrep),
           print_parameter(p.pair.param.param, e.catalogue), eta_name(e.group, p.pair.param),
           combi::to_string(p.pair.label), p.component, yes_no(inertial::is_tempered_point(p)),
           yes_no(inertial::is_discrete_point(p)),
           extquot::to_string(inertial::theta_point(SymbolicCoordinate::sqrt_q(1), p))});
  return t;
}

Table packet_table(const Example& e) {
  Table t;
  t.name = "packets";
  t.title = "L-packets of the inertial class";
  t.columns = {{"parameter", "phi"}, {"size", "size"}, {"members", "block:eta"}};
  for (const auto& p : e.packets) {
    std::vector<std::string> m;
    for (const auto& x : p.members) m.push_back(std::to_string(x.block) + ":" + eta_name(e.group, x.point.pair.param));
    t.add({print_parameter(p.param, e.catalogue), std::to_string(p.members.size()), join(m, ", ")});
  }
  return t;
}

Table block_table(const Example& e) {
  Table t;
  t.name = "blocks";
  t.title = "Bernstein blocks of the inertial class";
  t.columns = {{"block", "block"}, {"levi", "L"},           {"lines", "lines"},
               {"core", "core"},   {"character", "epsilon"}, {"torus_dimension", "dim T"},
               {"weyl_order", "|W|"}};
  for (std::size_t i = 0; i < e.blocks.size(); ++i) {
    const auto& d = e.blocks[i];
    t.add({std::to_string(i), springer::to_string(d.triple.levi_dual), lines_string(d.triple.lines, e.catalogue),
           d.triple.core.summands.empty() ? "-" : print_parameter(d.triple.core, e.catalogue),
           core_character(e.group, d.triple), std::to_string(d.torus.dimension()),
           std::to_string(d.weyl.action.elements.size())});
  }
  return t;
}

Table inventory_table(const Example& e) {
  Table t;
  t.name = "figure1";
  t.title = "Families of the extended quotient";
  t.columns = {{"point", "t"}, {"label", "rho"}, {"component", "u"}, {"parameter", "phi"}, {"eta", "eta"},
               {"kind", "kind"}};
  for (const auto& f : e.inventory)
    if (f.fresh)
      t.add({extquot::to_string(f.point), f.label, f.component, print_parameter(f.param, e.catalogue), f.eta,
             f.generic ? "generic" : "special"});
  return t;
}

Table parameter_table(const Example& e) {
  Table t;
  t.name = "table6";
  t.title = "Determining cuspidal supports";
  t.columns = {{"parameter", "phi"},     {"centralizer", "H"},   {"identity_component", "H°"},
               {"u", "u"},               {"a_group", "A_H°(u)"}, {"eta", "Irr(A_H°(u))"},
               {"levi_centralizer", "H^L"}, {"support_levi", "L"}};
  for (const auto& p : special_packets(e)) {
    const auto row = inertial::parameter_row(e.group, p.param);
    for (const auto& s : row.subrows)
      t.add({print_parameter(row.param, e.catalogue), springer::to_string(row.h), inertial::table_group(row.h0),
             inertial::table_class(row.h0, row.u), a_group_string(row.a0), s.eta0_name,
             springer::to_string(s.levi_centralizer), springer::to_string(s.levi)});
  }
  return t;
}

Table fiber_table(const Example& e) {
  Table t;
  t.name = "table7";
  t.title = "Fibers of the cuspidal support";
  t.columns = {{"parameter", "phi"},     {"a_group", "A_H(u)"}, {"eta", "Irr(A_H(u))"},
               {"support_levi", "L"},    {"w_irrep", "Irr(W)"}, {"w_structure", "W = W° |x R"}};
  for (const auto& r : inertial::fiber_rows(e.blocks, special_packets(e)))
    t.add({print_parameter(r.param, e.catalogue), a_group_string(r.a), r.eta_name, r.levi, r.w_label,
           r.w_structure});
  return t;
}

Report abps_report(const Example& e) {
  Report r;
  r.tables = {block_table(e), action_table(e), mu_table(e), inventory_table(e), packet_table(e)};
  r.record["group"] = langlands::to_string(e.group);
  r.record["datum"] = datum_string(e.group, e.blocks[e.selected].triple, e.catalogue);
  r.record["blocks"] = rows_of(r.tables[0]);
  r.record["action"] = rows_of(r.tables[1]);
  r.record["eq_points"] = rows_of(r.tables[2]);
  r.record["families"] = rows_of(r.tables[3]);
  r.record["packets"] = rows_of(r.tables[4]);
  return r;
}

// --------------------------------------------------------------- records

Report param_report(const PadicGroup& g, const FormalParameter& phi, const Catalogue& cat) {
  const FormalParameter p = langlands::validate(g, phi);
  const auto h = langlands::centralizer_data(g, p);
  const auto comps = langlands::component_groups(g, p);
  const auto cusp = langlands::is_cuspidal(g, p);

  Json rec;
  rec["group"] = langlands::to_string(g);
  rec["parameter"] = print_parameter(p, cat);
  rec["centralizer"] = springer::to_string(h.group);
  rec["identity_component"] = springer::to_string(h.group.identity_component());
  rec["u"] = springer::to_string(h.u);
  rec["a_group"] = springer::to_string(comps.a);
  rec["a_generators"] = springer::generators_string(comps.a);
  rec["characters"] = Json::array();
  std::vector<std::string> s_names, cusp_names;
  for (const auto& eta : comps.characters) {
    const bool s = std::find(comps.s_characters.begin(), comps.s_characters.end(), eta) != comps.s_characters.end();
    rec["characters"].push_back({{"eta", springer::to_string(comps.a, eta)}, {"s_character", s}});
    if (s) s_names.push_back(springer::to_string(comps.a, eta));
  }
  for (const auto& eta : cusp.characters) cusp_names.push_back(springer::to_string(comps.a, eta));
  rec["discrete"] = langlands::is_discrete(g, p);
  rec["tempered"] = langlands::is_tempered(g, p);
  rec["cuspidal"] = cusp.cuspidal;
  rec["cuspidal_characters"] = cusp_names;
  std::vector<std::string> lambda;
  for (const auto& l : langlands::infinitesimal_character(g, p).lines) lambda.push_back(print_line(l, cat));
  rec["infinitesimal_character"] = lambda;

  Table t;
  t.name = "param";
  t.title = "Parameter " + print_parameter(p, cat) + " of " + langlands::to_string(g);
  t.columns = {{"field", "field"}, {"value", "value"}};
  t.add({"centralizer", springer::to_string(h.group)});
  t.add({"identity_component", springer::to_string(h.group.identity_component())});
  t.add({"u", springer::to_string(h.u)});
  t.add({"a_group", a_group_string(comps.a)});
  t.add({"s_characters", join(s_names, ", ")});
  t.add({"discrete", yes_no(langlands::is_discrete(g, p))});
  t.add({"tempered", yes_no(langlands::is_tempered(g, p))});
  t.add({"cuspidal_characters", cusp_names.empty() ? "-" : join(cusp_names, ", ")});
  t.add({"infinitesimal_character", "{" + join(lambda, ", ") + "}"});
  return {{t}, rec};
}

Report support_report(const PadicGroup& g, const FormalParameter& phi, const Catalogue& cat, const std::string& eta) {
  const FormalParameter p = langlands::validate(g, phi);
  const auto comps = langlands::component_groups(g, p);
  std::vector<springer::SignCharacter> chosen;
  if (eta.empty()) {
    chosen = comps.s_characters;
  } else {
    for (const auto& x : comps.characters)
      if (springer::to_string(comps.a, x) == eta) chosen.push_back(x);
    if (chosen.empty()) fail(ErrorKind::InvalidEnhancement, "'" + eta + "' is not a character of " + springer::to_string(comps.a));
  }
  Table t;
  t.name = "support";
  t.title = "Cuspidal supports of " + print_parameter(p, cat);
  t.columns = {{"eta", "eta"}, {"support_levi", "L"}, {"support_param", "lines; core"},
               {"support_character", "epsilon"}, {"correcting", "c"}};
  for (const auto& x : chosen) {
    const auto s = langlands::cuspidal_support(g, {p, x});
    std::string sp = lines_string(s.datum.lines, cat) + " | " +
                     (s.datum.core.summands.empty() ? std::string("-") : print_parameter(s.datum.core, cat));
    t.add({springer::to_string(comps.a, x), springer::to_string(s.datum.levi_dual), sp, core_character(g, s.datum),
           correcting_string(s.correcting)});
  }
  Json rec;
  rec["group"] = langlands::to_string(g);
  rec["parameter"] = print_parameter(p, cat);
  rec["supports"] = rows_of(t);
  return {{t}, rec};
}

// --------------------------------------------------------------- fixtures

Example sp4_example(const Catalogue& cat) {
  const auto* z = cat.find("zeta");
  const WFLine zeta = WFLine::from_decl(z ? *z : *Catalogue::defaults().find("zeta"));
  inertial::InertialClass cls{{zeta, zeta}, {{{WFLine::trivial(), 1}}}};
  return build_example(PadicGroup::parse("Sp4"), cls, cat);
}

std::vector<std::pair<std::string, Table>> fixture_tables(const Catalogue& cat) {
  std::vector<std::pair<std::string, Table>> out;
  auto named = [&](const std::string& name, Table t) {
    t.name = name;
    out.emplace_back(name, std::move(t));
  };
  named("table1", springer_table({springer::ComplexGroup::sp(6)}));
  named("table2", springer_table({springer::ComplexGroup::sp(6), true}));
  named("table3", springer_table({springer::ComplexGroup::so(4), true, true}));
  const Example e = sp4_example(cat);
  named("table4", action_table(e));
  named("table6", parameter_table(e));
  named("table7", fiber_table(e));
  named("figure1", inventory_table(e));
  return out;
}

}  // namespace abps::cli
