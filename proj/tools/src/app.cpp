#include "abpscli/app.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "abps/error.hpp"
#include "abpscli/expr.hpp"
#include "abpscli/tables.hpp"

#ifndef ABPS_FIXTURE_DIR
#define ABPS_FIXTURE_DIR "fixtures"
#endif

namespace abps::cli {

namespace fs = std::filesystem;
using langlands::FormalParameter;
using langlands::WFLine;

namespace {

struct Common {
  std::string format = "md";
  std::string chars;
  bool unicode = false;

  Format fmt() const {
    if (format == "json") return Format::Json;
    if (format == "tsv") return Format::Tsv;
    return Format::Markdown;
  }
  Catalogue catalogue() const { return chars.empty() ? Catalogue::defaults() : Catalogue::load(chars); }
};

springer::ComplexGroup complex_group(const std::string& group, int rank) {
  if (rank > 0) return springer::parse_group(group + std::to_string(rank));
  return springer::parse_group(group);
}

std::vector<WFLine> parse_lines(const std::string& text, const Catalogue& cat) {
  std::vector<WFLine> out;
  if (text.empty()) return out;
  for (const auto& s : parse_parameter(text, cat).summands) {
    if (s.a != 1) fail(ErrorKind::InvalidLabel, "inertial lines carry no S[a]");
    out.push_back(s.line);
  }
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  if (!f) return {};
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

/// Writes `content` unless identical; returns true when the file changed.
bool refresh(const fs::path& p, const std::string& content, bool write) {
  const bool same = fs::exists(p) && slurp(p) == content;
  if (!same && write) {
    std::ofstream f(p, std::ios::binary);
    f << content;
  }
  return !same;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Springer correspondences, Langlands parameters and extended quotients", "abps"};
  app.fallthrough();
  app.require_subcommand(1);
  Common c;
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"md", "json", "tsv"}));
  app.add_option("--chars", c.chars, "Character catalogue file");
  app.add_flag("--unicode", c.unicode, "Unicode typography in markdown output");

  // springer
  std::string s_group = "sp";
  int s_rank = 0;
  bool s_generalized = false, s_sign = false;
  std::string s_norm = "untwisted";
  auto* sp = app.add_subcommand("springer", "Springer correspondence table of a complex group");
  sp->add_option("--group", s_group, "sp, so, o, gl, sl, or a full name such as Sp6");
  sp->add_option("--rank", s_rank, "Size of the defining representation (6 for Sp6)");
  sp->add_flag("--generalized", s_generalized, "All blocks, with symbols and Levi");
  sp->add_flag("--sign-twist", s_sign, "Add the label tensored with sgn");
  sp->add_option("--normalization", s_norm)->check(CLI::IsMember({"untwisted", "twisted"}));

  // cuspidal
  std::string c_group = "sp";
  int c_rank = 0;
  auto* cu = app.add_subcommand("cuspidal", "Cuspidal triples of a complex group");
  cu->add_option("--group", c_group);
  cu->add_option("--rank", c_rank);

  // extquot
  int e_rank = 0;
  bool e_geometric = false;
  std::string e_group, e_lines, e_core;
  auto* eq = app.add_subcommand("extquot", "Extended quotient of W(B_k) or of an inertial action");
  eq->add_option("--rank", e_rank, "k for W(B_k) acting on (C^x)^k");
  eq->add_option("--group", e_group, "p-adic group for an inertial action");
  eq->add_option("--lines", e_lines);
  eq->add_option("--core", e_core);
  eq->add_flag("--geometric", e_geometric);

  // param / support
  std::string p_group, p_expr, p_eta;
  auto* pa = app.add_subcommand("param", "Centralizer, component group and cuspidality of a parameter");
  pa->add_option("--group", p_group)->required();
  pa->add_option("--expr", p_expr)->required();
  auto* su = app.add_subcommand("support", "Cuspidal support of each enhancement");
  su->add_option("--group", p_group)->required();
  su->add_option("--expr", p_expr)->required();
  su->add_option("--eta", p_eta, "Only this enhancement, e.g. zeta(x)1");

  // abps
  std::string a_group, a_lines, a_core, a_char, a_section = "all";
  bool a_core_set = false;
  auto* ab = app.add_subcommand("abps", "Bernstein blocks, mu pairing and packets of an inertial class");
  ab->add_option("--group", a_group)->required();
  ab->add_option("--lines", a_lines, "GL lines, e.g. \"zeta + zeta\"")->required();
  auto* core_opt = ab->add_option("--core", a_core, "Core parameter (default 1 when the dual is odd orthogonal)");
  ab->add_option("--core-char", a_char, "Cuspidal character of the core");
  ab->add_option("--section", a_section)
      ->check(CLI::IsMember({"all", "blocks", "action", "eq_points", "families", "packets", "table6", "table7"}));

  // fixtures
  bool f_all = false, f_check = false;
  std::string f_dir = ABPS_FIXTURE_DIR, f_table;
  auto* fx = app.add_subcommand("fixtures", "Regenerate golden tables; exit 0 iff nothing changed");
  fx->add_flag("--all", f_all);
  fx->add_option("--table", f_table, "One fixture, e.g. table2");
  fx->add_option("--dir", f_dir);
  fx->add_flag("--check", f_check, "Compare only");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  a_core_set = core_opt->count() > 0;

  try {
    if (sp->parsed()) {
      SpringerOptions o;
      o.group = complex_group(s_group, s_rank);
      o.generalized = s_generalized || s_sign;
      o.sign_twist = s_sign;
      o.normalization = s_norm == "twisted" ? springer::Normalization::Twisted : springer::Normalization::Untwisted;
      out << render(single(springer_table(o)), c.fmt(), c.unicode);
      return 0;
    }
    if (cu->parsed()) {
      out << render(single(cuspidal_table(complex_group(c_group, c_rank))), c.fmt(), c.unicode);
      return 0;
    }
    if (eq->parsed()) {
      extquot::Action act;
      if (!e_group.empty()) {
        const auto cat = c.catalogue();
        const auto g = PadicGroup::parse(e_group);
        inertial::InertialTriple j;
        j.lines = parse_lines(e_lines, cat);
        if (!e_core.empty()) j.core = parse_parameter(e_core, cat);
        act = langlands::inertial_action(g, j);
      } else if (e_rank > 0) {
        act = extquot::weyl_bk(e_rank);
      } else {
        err << "extquot needs --rank or --group\n";
        return 2;
      }
      out << render(single(e_geometric ? geometric_table(act) : spectral_table(act)), c.fmt(), c.unicode);
      return 0;
    }
    if (pa->parsed() || su->parsed()) {
      const auto cat = c.catalogue();
      const auto g = PadicGroup::parse(p_group);
      const auto phi = parse_parameter(p_expr, cat);
      out << render(pa->parsed() ? param_report(g, phi, cat) : support_report(g, phi, cat, p_eta), c.fmt(),
                    c.unicode);
      return 0;
    }
    if (ab->parsed()) {
      const auto cat = c.catalogue();
      const auto g = PadicGroup::parse(a_group);
      inertial::InertialTriple sel;
      sel.lines = parse_lines(a_lines, cat);
      if (a_core_set) {
        sel.core = parse_parameter(a_core, cat);
      } else if (g.family == langlands::Family::Sp) {
        sel.core = FormalParameter{{{WFLine::trivial(), 1}}};
      }
      if (!a_char.empty()) {
        const auto cg = langlands::core_group(g, sel.core);
        const auto a = langlands::component_groups(cg, sel.core).a;
        bool found = false;
        for (const auto& x : springer::characters(a))
          if (springer::to_string(a, x) == a_char) {
            sel.character = x;
            found = true;
          }
        if (!found) fail(ErrorKind::InvalidCharacter, "'" + a_char + "' is not a character of the core");
      }
      const Example e = build_example(g, {sel.lines, sel.core}, cat, sel);
      Report r;
      if (a_section == "all") r = abps_report(e);
      else if (a_section == "blocks") r = single(block_table(e));
      else if (a_section == "action") r = single(action_table(e));
      else if (a_section == "eq_points") r = single(mu_table(e));
      else if (a_section == "families") r = single(inventory_table(e));
      else if (a_section == "packets") r = single(packet_table(e));
      else if (a_section == "table6") r = single(parameter_table(e));
      else r = single(fiber_table(e));
      out << render(r, c.fmt(), c.unicode);
      return 0;
    }
    if (fx->parsed()) {
      if (!f_all && f_table.empty()) {
        err << "fixtures needs --all or --table\n";
        return 2;
      }
      const fs::path dir(f_dir);
      const fs::path chars = dir / "chars.txt";
      const Catalogue cat = !c.chars.empty() ? c.catalogue()
                            : fs::exists(chars) ? Catalogue::load(chars.string())
                                                : Catalogue::defaults();
      if (!f_check) fs::create_directories(dir);
      int changed = 0, seen = 0;
      for (const auto& [name, table] : fixture_tables(cat)) {
        if (!f_all && name != f_table) continue;
        ++seen;
        for (const auto& [ext, body] : {std::pair<std::string, std::string>{".md", render_markdown(table)},
                                        {".json", table_json(table).dump(2) + "\n"}}) {
          const bool diff = refresh(dir / (name + ext), body, !f_check);
          changed += diff;
          out << (diff ? (f_check ? "differs  " : "updated  ") : "ok       ") << name + ext << "\n";
        }
      }
      if (seen == 0) {
        err << "unknown fixture '" << f_table << "'\n";
        return 2;
      }
      return changed ? 1 : 0;
    }
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace abps::cli
