#include "abps/springer.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "abps/error.hpp"
#include "springer_atoms.hpp"

namespace abps::springer {

using combi::BCSymbol;
using combi::IrrLabel;
using combi::RelativeWeylGroup;
using combi::WeylFactor;
using combi::WeylLabel;
using combi::WeylType;

namespace {

constexpr int kRankBound = 20;

bool has_generators(Atom a) { return a == Atom::Sp || a == Atom::O || a == Atom::SO; }

// Parity of the parts that carry generators: even for Sp, odd for O/SO.
int generator_parity(Atom a) { return a == Atom::Sp ? 0 : 1; }

const char* atom_name(Atom a) {
  switch (a) {
    case Atom::Sp: return "Sp";
    case Atom::SO: return "SO";
    case Atom::O: return "O";
    case Atom::GL: return "GL";
    case Atom::SL: return "SL";
  }
  return "?";
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i];
  }
  return s;
}

std::string primes(int k) { return std::string(static_cast<std::size_t>(k), '\''); }

int rank_of(const Factor& f) {
  switch (f.kind) {
    case Atom::Sp: return f.n / 2;
    case Atom::SO:
    case Atom::O: return f.n / 2;
    case Atom::GL:
    case Atom::SL: return f.n - 1;
  }
  return 0;
}

void check_rank(const ComplexGroup& g) {
  for (const auto& f : g.factors)
    if (rank_of(f) > kRankBound) fail(ErrorKind::RankMismatch, "factor rank above the supported bound 20");
}

Partition staircase(int d, int start) {
  std::vector<int> p;
  for (int i = 0; i < d; ++i) p.push_back(start + 2 * i);
  return Partition(p);
}

bool very_even(const Partition& p) {
  for (int d : p.distinct_parts())
    if (d % 2 == 1 || p.multiplicity(d) % 2 == 1) return false;
  return true;
}

// Rank of the relative Weyl group attached to one factor's block.
int block_rank(const Factor& f, const AtomBlock& b) {
  switch (f.kind) {
    case Atom::Sp: return f.n / 2 - b.d * (b.d + 1) / 2;
    case Atom::SO:
    case Atom::O: return (f.n - b.d * b.d) / 2;
    case Atom::GL: return f.n;
    case Atom::SL: return f.n / b.sl_order;
  }
  return 0;
}

bool block_feasible(const Factor& f, const AtomBlock& b) {
  switch (f.kind) {
    case Atom::Sp: return b.d >= 0 && b.d * (b.d + 1) / 2 <= f.n / 2;
    case Atom::SO:
      return b.d >= 0 && b.d % 2 == f.n % 2 && b.d * b.d <= f.n;
    case Atom::O:
      return (b.d % 2 + 2) % 2 == f.n % 2 && b.d * b.d <= f.n;
    case Atom::GL: return true;
    case Atom::SL:
      return b.sl_order >= 1 && f.n % b.sl_order == 0 && b.sl_root >= 0 &&
             (b.sl_order == 1 ? b.sl_root == 0 : (b.sl_root < b.sl_order && std::gcd(b.sl_root, b.sl_order) == 1));
  }
  return false;
}

WeylFactor weyl_factor(const Factor& f, const AtomBlock& b, int source) {
  const int k = block_rank(f, b);
  switch (f.kind) {
    case Atom::Sp: return {WeylType::B, k, source};
    case Atom::SO:
      if (f.n % 2 == 0 && b.d == 0) return {WeylType::D, k, source};
      return {WeylType::B, k, source};
    case Atom::O:
      if (f.n % 2 == 0 && b.d == 0) return {WeylType::DExt, k, source};
      return {WeylType::B, k, source};
    case Atom::GL:
    case Atom::SL: return {WeylType::A, k, source};
  }
  return {};
}

// A det1 product whose blocks are all principal cannot absorb the outer twists into L.
bool det1_twist_kernel(const ComplexGroup& g, const std::vector<AtomBlock>& blocks) {
  if (!g.det1) return false;
  int even_factors = 0;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    if (g.factors[i].kind != Atom::O) continue;
    if (blocks[i].d != 0) return false;
    if (g.factors[i].n >= 2) ++even_factors;
  }
  return even_factors >= 2;
}

RelativeWeylGroup weyl_of(const ComplexGroup& g, const std::vector<AtomBlock>& blocks) {
  RelativeWeylGroup w;
  for (std::size_t i = 0; i < g.factors.size(); ++i)
    w.add(weyl_factor(g.factors[i], blocks[i], static_cast<int>(i)));
  return w;
}

std::string blocks_key(const std::vector<AtomBlock>& blocks) {
  std::string s;
  for (const auto& b : blocks)
    s += std::to_string(b.d) + ":" + std::to_string(b.sl_order) + ":" + std::to_string(b.sl_root) + ";";
  return s;
}

// ------------------------------------------------------------ forward map

struct Computed {
  std::vector<AtomBlock> blocks;
  WeylLabel label;  // untwisted
  std::vector<BCSymbol> symbols;
};

std::vector<int> extend_to_ambient(const ComponentGroup& a, const SignCharacter& eta) {
  const int n = static_cast<int>(a.ambient.size());
  const int r = a.rank();
  std::vector<std::vector<char>> rows(r, std::vector<char>(n + 1, 0));
  for (int i = 0; i < r; ++i) {
    for (int j : a.basis[i]) rows[i][j] ^= 1;
    rows[i][n] = eta.values[i] == -1 ? 1 : 0;
  }
  // Reduced row echelon form over GF(2); pivots as far left as possible so later
  // generators stay free and are set to +1.
  std::vector<int> pivot_col;
  int row = 0;
  for (int c = 0; c < n && row < r; ++c) {
    int p = -1;
    for (int i = row; i < r; ++i)
      if (rows[i][c]) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[p], rows[row]);
    for (int i = 0; i < r; ++i)
      if (i != row && rows[i][c])
        for (int j = 0; j <= n; ++j) rows[i][j] ^= rows[row][j];
    pivot_col.push_back(c);
    ++row;
  }
  std::vector<int> out(n, 1);
  for (int i = 0; i < row; ++i) out[pivot_col[i]] = rows[i][n] ? -1 : 1;
  return out;
}

Computed compute(const ComplexGroup& g, const UnipotentClass& u, const SignCharacter& eta) {
  if (!valid_class(g, u)) fail(ErrorKind::InvalidLabel, "unipotent class " + to_string(u) + " is not valid for " + to_string(g));
  ComponentGroup a = component_group(g, u);
  if (!valid_character(a, eta)) fail(ErrorKind::InvalidCharacter, "character is not a character of A(u)");
  std::vector<int> ext = a.cyclic ? std::vector<int>{} : extend_to_ambient(a, eta);

  const std::size_t nf = g.factors.size();
  std::vector<detail::AtomOutcome> outs(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    const Factor& fac = g.factors[f];
    if (!has_generators(fac.kind)) continue;
    std::vector<int> local;
    for (std::size_t j = 0; j < a.ambient.size(); ++j)
      if (a.ambient[j].factor == static_cast<int>(f)) local.push_back(ext[j]);
    if (fac.kind == Atom::Sp) {
      outs[f] = detail::sp_atom(u.parts[f], local);
    } else {
      outs[f] = detail::orth_atom(fac.n, u.parts[f], local);
      if (fac.kind == Atom::SO && outs[f].defect < 0) outs[f] = detail::flipped(outs[f]);
    }
  }

  // A det1 product only sees the pair up to the simultaneous flip of every O factor.
  if (g.det1) {
    int last_core = -1, last_split = -1;
    for (std::size_t f = 0; f < nf; ++f) {
      if (g.factors[f].kind != Atom::O) continue;
      if (outs[f].defect != 0) last_core = static_cast<int>(f);
      if (!(outs[f].x == outs[f].y)) last_split = static_cast<int>(f);
    }
    bool flip = false;
    if (last_core >= 0) {
      flip = outs[last_core].defect < 0;
    } else if (last_split >= 0) {
      flip = !combi::partition_before(outs[last_split].y, outs[last_split].x);
    }
    if (flip)
      for (std::size_t f = 0; f < nf; ++f)
        if (g.factors[f].kind == Atom::O) outs[f] = detail::flipped(outs[f]);
  }

  Computed c;
  for (std::size_t f = 0; f < nf; ++f) {
    const Factor& fac = g.factors[f];
    const Partition& lam = u.parts[f];
    AtomBlock b;
    IrrLabel label;
    const auto& o = outs[f];
    switch (fac.kind) {
      case Atom::Sp: {
        b.d = o.defect > 0 ? o.defect - 1 : -o.defect;
        label = combi::b_label(o.defect > 0 ? Bipartition{o.x, o.y} : Bipartition{o.y, o.x});
        break;
      }
      case Atom::SO: {
        b.d = o.defect;
        if (fac.n % 2 == 0 && o.defect == 0) {
          auto tag = combi::SplitTag::None;
          if (u.tags[f] == VeryEven::I) tag = combi::SplitTag::Plain;
          if (u.tags[f] == VeryEven::II) tag = combi::SplitTag::Primed;
          label = combi::d_label(combi::DLabel::make(o.x, o.y, tag));
        } else {
          label = combi::b_label({o.x, o.y});
        }
        break;
      }
      case Atom::O: {
        b.d = o.defect;
        if (fac.n % 2 == 0 && o.defect == 0) {
          int sign = combi::partition_before(o.y, o.x) ? 1 : -1;
          label = combi::dext_label(combi::DLabel::make(o.x, o.y), sign);
        } else {
          label = combi::b_label(o.defect > 0 ? Bipartition{o.x, o.y} : Bipartition{o.y, o.x});
        }
        break;
      }
      case Atom::GL: label = combi::a_label(lam); break;
      case Atom::SL: {
        int gcd = 0;
        for (int p : lam.parts()) gcd = std::gcd(gcd, p);
        int k = eta.values[0];
        int e = gcd / std::gcd(k, gcd);
        b.sl_order = e;
        b.sl_root = e == 1 ? 0 : k / (gcd / e);
        std::vector<int> parts;
        for (int p : lam.parts()) parts.push_back(p / e);
        label = combi::a_label(Partition(parts));
        break;
      }
    }
    c.blocks.push_back(b);
    c.symbols.push_back(o.symbol);
    if (!weyl_factor(fac, b, static_cast<int>(f)).trivial()) c.label.parts.push_back(label);
  }
  return c;
}

// ------------------------------------------------------ inverse memo table

struct InverseTable {
  std::map<std::string, UnipotentPair> by_key;
};

std::mutex memo_mutex;
std::map<std::string, std::shared_ptr<const InverseTable>> memo;

std::string pair_key(const std::vector<AtomBlock>& blocks, const WeylLabel& label) {
  return blocks_key(blocks) + "|" + combi::to_string(label);
}

std::shared_ptr<const InverseTable> inverse_table(const ComplexGroup& g, Normalization norm) {
  std::string key = to_string(g) + (norm == Normalization::Twisted ? "#t" : "#u");
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  auto table = std::make_shared<InverseTable>();
  for (const auto& block : enumerate_ue(g, norm))
    for (std::size_t i = 0; i < block.pairs.size(); ++i)
      table->by_key[pair_key(block.triple.blocks, block.labels[i])] = block.pairs[i];
  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo.emplace(key, std::move(table)).first->second;
}

}  // namespace

// ------------------------------------------------------------------ groups

int ComplexGroup::orthogonal_count() const {
  return static_cast<int>(std::count_if(factors.begin(), factors.end(), [](const Factor& f) { return f.kind == Atom::O; }));
}

bool ComplexGroup::connected() const {
  return det1 ? orthogonal_count() <= 1 : orthogonal_count() == 0;
}

ComplexGroup ComplexGroup::identity_component() const {
  ComplexGroup h = *this;
  for (auto& f : h.factors)
    if (f.kind == Atom::O) f.kind = Atom::SO;
  h.det1 = false;
  return h;
}

void ComplexGroup::check() const {
  for (const auto& f : factors) {
    if (f.n <= 0) fail(ErrorKind::InvalidLabel, "factor size must be positive");
    if (f.kind == Atom::Sp && f.n % 2) fail(ErrorKind::InvalidLabel, "Sp needs an even size");
    if (f.kind == Atom::SL && factors.size() != 1)
      fail(ErrorKind::UnrecognizedStructure, "SL factors are supported only on their own");
  }
  if (det1 && orthogonal_count() == 0) fail(ErrorKind::InvalidLabel, "det1 needs an O factor");
}

std::string to_string(const ComplexGroup& g) {
  std::vector<std::string> pieces;
  std::vector<std::string> orth;
  int orth_slot = -1;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    const Factor& f = g.factors[i];
    std::string name = atom_name(f.kind) + std::to_string(f.n);
    if (g.det1 && f.kind == Atom::O) {
      if (orth_slot < 0) {
        orth_slot = static_cast<int>(pieces.size());
        pieces.emplace_back();
      }
      orth.push_back(name);
      continue;
    }
    std::size_t run = 1;
    while (i + run < g.factors.size() && g.factors[i + run] == f) ++run;
    if (run > 1) name += "^" + std::to_string(run);
    pieces.push_back(name);
    i += run - 1;
  }
  if (orth_slot >= 0) pieces[orth_slot] = "S(" + join(orth, "x") + ")";
  return pieces.empty() ? "1" : join(pieces, "x");
}

namespace {

std::vector<std::string> split_top(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == 'x' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Factor> parse_atom(const std::string& tok) {
  std::string up;
  for (char ch : tok) up += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  static const std::pair<const char*, Atom> names[] = {
      {"SP", Atom::Sp}, {"SO", Atom::SO}, {"SL", Atom::SL}, {"GL", Atom::GL}, {"O", Atom::O}};
  for (auto [prefix, kind] : names) {
    std::string p(prefix);
    if (up.rfind(p, 0) != 0) continue;
    std::string rest = up.substr(p.size());
    std::size_t caret = rest.find('^');
    std::string num = rest.substr(0, caret);
    std::string power = caret == std::string::npos ? "1" : rest.substr(caret + 1);
    auto digits = [](const std::string& x) {
      return !x.empty() && std::all_of(x.begin(), x.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    if (!digits(num) || !digits(power)) break;
    return std::vector<Factor>(std::stoul(power), Factor{kind, std::stoi(num)});
  }
  fail(ErrorKind::InvalidLabel, "unknown group '" + tok + "'");
}

}  // namespace

ComplexGroup parse_group(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  ComplexGroup g;
  if (s == "1") return g;
  for (const auto& tok : split_top(s)) {
    if (tok.size() > 3 && (tok[0] == 'S' || tok[0] == 's') && tok[1] == '(' && tok.back() == ')') {
      for (const auto& inner : split_top(tok.substr(2, tok.size() - 3))) {
        for (const auto& f : parse_atom(inner)) {
          if (f.kind != Atom::O) fail(ErrorKind::InvalidLabel, "S(...) takes O factors only");
          g.factors.push_back(f);
        }
      }
      g.det1 = true;
      continue;
    }
    for (const auto& f : parse_atom(tok)) g.factors.push_back(f);
  }
  g.check();
  return g;
}

// ------------------------------------------------------- unipotent classes

std::string to_string(const UnipotentClass& u) {
  if (u.parts.empty()) return "1";
  std::vector<std::string> v;
  for (std::size_t i = 0; i < u.parts.size(); ++i) {
    std::string s = combi::class_string(u.parts[i]);
    if (i < u.tags.size() && u.tags[i] == VeryEven::II) s += "'";
    v.push_back(s);
  }
  return join(v, "x");
}

UnipotentClass make_class(std::vector<Partition> parts, std::vector<VeryEven> tags) {
  if (tags.empty()) tags.assign(parts.size(), VeryEven::None);
  return {std::move(parts), std::move(tags)};
}

bool valid_class(const ComplexGroup& g, const UnipotentClass& u) {
  if (u.parts.size() != g.factors.size() || u.tags.size() != g.factors.size()) return false;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    const Factor& f = g.factors[i];
    const Partition& p = u.parts[i];
    if (p.size() != f.n) return false;
    bool tagged = u.tags[i] != VeryEven::None;
    switch (f.kind) {
      case Atom::Sp:
        for (int d : p.distinct_parts())
          if (d % 2 == 1 && p.multiplicity(d) % 2) return false;
        if (tagged) return false;
        break;
      case Atom::SO:
      case Atom::O:
        for (int d : p.distinct_parts())
          if (d % 2 == 0 && p.multiplicity(d) % 2) return false;
        if (f.kind == Atom::SO && f.n % 2 == 0 && very_even(p)) {
          if (!tagged) return false;
        } else if (tagged) {
          return false;
        }
        break;
      case Atom::GL:
      case Atom::SL:
        if (tagged) return false;
        break;
    }
  }
  return true;
}

std::vector<UnipotentClass> unipotent_classes(const ComplexGroup& g) {
  g.check();
  check_rank(g);
  std::vector<UnipotentClass> out{UnipotentClass{}};
  for (const auto& f : g.factors) {
    std::vector<std::pair<Partition, VeryEven>> local;
    ComplexGroup single{{f}, false};
    for (const auto& p : combi::partitions(f.n)) {
      if (f.kind == Atom::SO && f.n % 2 == 0 && very_even(p)) {
        local.emplace_back(p, VeryEven::I);
        local.emplace_back(p, VeryEven::II);
      } else if (valid_class(single, make_class({p}))) {
        local.emplace_back(p, VeryEven::None);
      }
    }
    std::vector<UnipotentClass> next;
    for (const auto& prefix : out)
      for (const auto& [p, tag] : local) {
        auto x = prefix;
        x.parts.push_back(p);
        x.tags.push_back(tag);
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

bool is_distinguished(const ComplexGroup& g, const UnipotentClass& u) {
  if (!valid_class(g, u)) fail(ErrorKind::InvalidLabel, "class is not valid for the group");
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    const Factor& f = g.factors[i];
    const Partition& p = u.parts[i];
    switch (f.kind) {
      case Atom::Sp:
      case Atom::SO:
      case Atom::O: {
        int want = f.kind == Atom::Sp ? 0 : 1;
        for (int d : p.distinct_parts())
          if (d % 2 != want || p.multiplicity(d) > 1) return false;
        break;
      }
      case Atom::GL:
      case Atom::SL:
        if (f.n != 1) return false;
        break;
    }
  }
  return true;
}

// ---------------------------------------------------------- component groups

long ComponentGroup::order() const { return cyclic ? cyclic : (1L << rank()); }

std::string to_string(const ComponentGroup& a) {
  if (a.cyclic) return a.cyclic == 1 ? "{1}" : "Z/" + std::to_string(a.cyclic);
  if (a.rank() == 0) return "{1}";
  if (a.rank() == 1) return "Z/2";
  return "(Z/2)^" + std::to_string(a.rank());
}

std::string generators_string(const ComponentGroup& a) {
  std::vector<std::string> v;
  for (const auto& n : a.names) v.push_back("<" + n + ">");
  return join(v, "x");
}

ComponentGroup component_group(const ComplexGroup& g, const UnipotentClass& u) {
  if (!valid_class(g, u)) fail(ErrorKind::InvalidLabel, "unipotent class " + to_string(u) + " is not valid for " + to_string(g));
  ComponentGroup a;
  if (g.factors.size() == 1 && g.factors[0].kind == Atom::SL) {
    int gcd = 0;
    for (int p : u.parts[0].parts()) gcd = std::gcd(gcd, p);
    a.cyclic = gcd;
    return a;
  }
  std::vector<std::vector<int>> per_factor(g.factors.size());
  int classical_index = 0;
  for (std::size_t f = 0; f < g.factors.size(); ++f) {
    Atom kind = g.factors[f].kind;
    if (!has_generators(kind)) continue;
    for (int d : u.parts[f].distinct_parts()) {
      if (d % 2 != generator_parity(kind)) continue;
      per_factor[f].push_back(static_cast<int>(a.ambient.size()));
      a.ambient.push_back({static_cast<int>(f), d, "z" + std::to_string(d) + primes(classical_index)});
    }
    ++classical_index;
  }
  auto add = [&](std::vector<int> elems) {
    std::string name;
    for (int j : elems) name += a.ambient[j].name;
    a.basis.push_back(std::move(elems));
    a.names.push_back(std::move(name));
  };
  auto add_pairs = [&](const std::vector<int>& gens) {
    for (std::size_t i = 0; i + 1 < gens.size(); ++i) add({gens[i], gens[i + 1]});
  };
  int last_det1 = -1;
  for (std::size_t f = 0; f < g.factors.size(); ++f)
    if (g.det1 && g.factors[f].kind == Atom::O && !per_factor[f].empty()) last_det1 = static_cast<int>(f);
  for (std::size_t f = 0; f < g.factors.size(); ++f) {
    Atom kind = g.factors[f].kind;
    const auto& gens = per_factor[f];
    if (kind == Atom::SO || (g.det1 && kind == Atom::O)) {
      add_pairs(gens);
      if (kind == Atom::O && !gens.empty() && static_cast<int>(f) != last_det1)
        add({gens.back(), per_factor[last_det1].front()});
    } else {
      for (int j : gens) add({j});
    }
  }
  return a;
}

std::vector<SignCharacter> characters(const ComponentGroup& a) {
  std::vector<SignCharacter> out;
  if (a.cyclic) {
    for (int k = 0; k < a.cyclic; ++k) out.push_back({{k}});
    return out;
  }
  const int r = a.rank();
  for (long m = 0; m < (1L << r); ++m) {
    SignCharacter c;
    for (int i = 0; i < r; ++i) c.values.push_back((m >> (r - 1 - i)) & 1 ? -1 : 1);
    out.push_back(std::move(c));
  }
  return out;
}

std::string to_string(const ComponentGroup& a, const SignCharacter& eta) {
  if (a.cyclic) return "e(" + std::to_string(eta.values.at(0)) + "/" + std::to_string(a.cyclic) + ")";
  if (eta.values.empty()) return "1";
  std::vector<std::string> v;
  for (int x : eta.values) v.push_back(combi::sign_name(x));
  return join(v, "(x)");
}

bool valid_character(const ComponentGroup& a, const SignCharacter& eta) {
  if (a.cyclic) return eta.values.size() == 1 && eta.values[0] >= 0 && eta.values[0] < a.cyclic;
  if (static_cast<int>(eta.values.size()) != a.rank()) return false;
  return std::all_of(eta.values.begin(), eta.values.end(), [](int v) { return v == 1 || v == -1; });
}

int evaluate(const ComponentGroup& a, const SignCharacter& eta, const std::vector<int>& ambient_product) {
  if (a.cyclic) fail(ErrorKind::InvalidCharacter, "cyclic characters have no sign values");
  auto ext = extend_to_ambient(a, eta);
  int v = 1;
  for (int j : ambient_product) v *= ext.at(j);
  return v;
}

// -------------------------------------------------------------- blocks

bool CuspidalTriple::is_torus() const {
  for (std::size_t i = 0; i < group.factors.size(); ++i) {
    const Factor& f = group.factors[i];
    const AtomBlock& b = blocks[i];
    switch (f.kind) {
      case Atom::Sp: if (b.d != 0) return false; break;
      case Atom::SO:
      case Atom::O: if (b.d * b.d > 1) return false; break;
      case Atom::GL: break;
      case Atom::SL: if (b.sl_order != 1) return false; break;
    }
  }
  return true;
}

bool CuspidalTriple::is_whole() const {
  for (std::size_t i = 0; i < group.factors.size(); ++i) {
    const Factor& f = group.factors[i];
    int k = block_rank(f, blocks[i]);
    if ((f.kind == Atom::GL || f.kind == Atom::SL) ? k > 1 : k > 0) return false;
  }
  return true;
}

std::string levi_string(const CuspidalTriple& t) { return t.levi_name; }

CuspidalTriple make_triple(const ComplexGroup& g, std::vector<AtomBlock> blocks) {
  if (blocks.size() != g.factors.size()) fail(ErrorKind::InvalidLabel, "one block per factor expected");
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (!block_feasible(g.factors[i], blocks[i])) fail(ErrorKind::InvalidLabel, "block does not fit its factor");
  CuspidalTriple t;
  t.group = g;
  t.blocks = std::move(blocks);

  if (g.factors.size() == 1 && g.factors[0].kind == Atom::SL) {
    const int n = g.factors[0].n, e = t.blocks[0].sl_order;
    t.levi = e == n ? g : ComplexGroup{std::vector<Factor>(n / e, Factor{Atom::GL, e}), false};
    t.levi_name = e == n ? to_string(g) : "S(GL" + std::to_string(e) + (n / e > 1 ? "^" + std::to_string(n / e) : "") + ")";
    t.unip = make_class({Partition(std::vector<int>(n / e, e))});
    t.core_group.cyclic = e;
    t.character.values = {e == 1 ? 0 : t.blocks[0].sl_root};
    return t;
  }

  std::vector<Factor> gl, cores;
  std::vector<Partition> core_parts;
  std::vector<AtomBlock> core_blocks;
  for (std::size_t i = 0; i < g.factors.size(); ++i) {
    const Factor& f = g.factors[i];
    const AtomBlock& b = t.blocks[i];
    int k = block_rank(f, b);
    if (f.kind == Atom::GL) {
      k = f.n;
    }
    for (int j = 0; j < k; ++j) gl.push_back({Atom::GL, 1});
    switch (f.kind) {
      case Atom::Sp:
        if (b.d > 0) {
          cores.push_back({Atom::Sp, b.d * (b.d + 1)});
          core_parts.push_back(staircase(b.d, 2));
          core_blocks.push_back(b);
        }
        break;
      case Atom::SO:
        if (b.d > 1) {
          cores.push_back({Atom::SO, b.d * b.d});
          core_parts.push_back(staircase(b.d, 1));
          core_blocks.push_back(b);
        }
        break;
      case Atom::O:
        if (b.d != 0) {
          int d = std::abs(b.d);
          cores.push_back({Atom::O, d * d});
          core_parts.push_back(staircase(d, 1));
          core_blocks.push_back(b);
        }
        break;
      default: break;
    }
  }
  int orth_cores = static_cast<int>(std::count_if(cores.begin(), cores.end(), [](const Factor& f) { return f.kind == Atom::O; }));
  bool levi_det1 = false;
  if (g.det1 && orth_cores >= 2) {
    levi_det1 = true;
  } else if (g.det1 && orth_cores == 1) {
    // S(O(m)) = SO(m): the single core loses its disconnected part.
    for (std::size_t i = 0; i < cores.size(); ++i)
      if (cores[i].kind == Atom::O) {
        cores[i].kind = Atom::SO;
        core_blocks[i].d = std::abs(core_blocks[i].d);
        if (cores[i].n == 1) {
          cores.erase(cores.begin() + static_cast<long>(i));
          core_parts.erase(core_parts.begin() + static_cast<long>(i));
          core_blocks.erase(core_blocks.begin() + static_cast<long>(i));
        }
        break;
      }
  }
  t.levi.factors = gl;
  t.levi.factors.insert(t.levi.factors.end(), cores.begin(), cores.end());
  t.levi.det1 = levi_det1;
  t.levi_name = to_string(t.levi);

  std::vector<Partition> parts(gl.size(), Partition({1}));
  parts.insert(parts.end(), core_parts.begin(), core_parts.end());
  std::vector<VeryEven> tags(parts.size(), VeryEven::None);
  t.unip = {parts, tags};
  t.core_group = component_group(t.levi, t.unip);

  std::vector<AtomBlock> expected(gl.size(), AtomBlock{});
  expected.insert(expected.end(), core_blocks.begin(), core_blocks.end());
  for (const auto& eta : characters(t.core_group)) {
    if (compute(t.levi, t.unip, eta).blocks == expected) {
      t.character = eta;
      return t;
    }
  }
  fail(ErrorKind::InvalidLabel, "no cuspidal character for the requested block");
}

std::vector<CuspidalTriple> cuspidal_triples(const ComplexGroup& g) {
  g.check();
  check_rank(g);
  std::vector<std::vector<AtomBlock>> options;
  for (const auto& f : g.factors) {
    std::vector<AtomBlock> local;
    switch (f.kind) {
      case Atom::Sp:
        for (int d = 0; d * (d + 1) / 2 <= f.n / 2; ++d) local.push_back({d, 1, 0});
        break;
      case Atom::SO:
        for (int d = f.n % 2; d * d <= f.n; d += 2) local.push_back({d, 1, 0});
        break;
      case Atom::O:
        for (int d = f.n % 2; d * d <= f.n; d += 2) {
          local.push_back({d, 1, 0});
          if (d) local.push_back({-d, 1, 0});
        }
        break;
      case Atom::GL: local.push_back({}); break;
      case Atom::SL:
        for (int e = 1; e <= f.n; ++e) {
          if (f.n % e) continue;
          for (int j = 0; j < std::max(e, 1); ++j)
            if (e == 1 ? j == 0 : std::gcd(j, e) == 1) local.push_back({0, e, j});
        }
        break;
    }
    options.push_back(std::move(local));
  }
  std::vector<std::vector<AtomBlock>> combos{{}};
  for (const auto& local : options) {
    std::vector<std::vector<AtomBlock>> next;
    for (const auto& prefix : combos)
      for (const auto& b : local) {
        auto x = prefix;
        x.push_back(b);
        next.push_back(std::move(x));
      }
    combos = std::move(next);
  }
  std::vector<CuspidalTriple> out;
  for (const auto& c : combos) {
    if (g.det1) {
      int last = -1;
      for (std::size_t i = 0; i < c.size(); ++i)
        if (g.factors[i].kind == Atom::O && c[i].d != 0) last = static_cast<int>(i);
      if (last >= 0 && c[last].d < 0) continue;
    }
    out.push_back(make_triple(g, c));
  }
  return out;
}

combi::RelativeWeylGroup relative_weyl_group(const CuspidalTriple& t) {
  if (det1_twist_kernel(t.group, t.blocks))
    fail(ErrorKind::UnrecognizedStructure, "outer twists of a det1 product without cores form an index-2 kernel");
  return weyl_of(t.group, t.blocks);
}

combi::RelativeWeylGroup relative_weyl_group(const ComplexGroup& g, const ComplexGroup& levi) {
  const std::string want = to_string(levi);
  for (const auto& t : cuspidal_triples(g))
    if (t.levi_name == want) return relative_weyl_group(t);
  fail(ErrorKind::NotALevi, want + " is not the Levi of a cuspidal triple of " + to_string(g));
}

// -------------------------------------------------------- correspondence

std::vector<BCSymbol> springer_symbols(const ComplexGroup& g, const UnipotentClass& u, const SignCharacter& eta) {
  return compute(g, u, eta).symbols;
}

SpringerImage generalized_springer(const ComplexGroup& g, const UnipotentClass& u, const SignCharacter& eta,
                                   Normalization norm) {
  Computed c = compute(g, u, eta);
  SpringerImage img{make_triple(g, c.blocks), c.label};
  if (norm == Normalization::Twisted) img.label = combi::twisted(img.label);
  return img;
}

CuspidalTriple springer_block(const ComplexGroup& g, const UnipotentClass& u, const SignCharacter& eta) {
  return make_triple(g, compute(g, u, eta).blocks);
}

std::vector<BlockPairs> enumerate_ue(const ComplexGroup& g, Normalization norm) {
  auto triples = cuspidal_triples(g);
  std::vector<BlockPairs> out;
  std::map<std::string, std::size_t> index;
  for (auto& t : triples) {
    index[blocks_key(t.blocks)] = out.size();
    out.push_back({std::move(t), {}, {}});
  }
  for (const auto& u : unipotent_classes(g)) {
    ComponentGroup a = component_group(g, u);
    for (const auto& eta : characters(a)) {
      Computed c = compute(g, u, eta);
      auto it = index.find(blocks_key(c.blocks));
      if (it == index.end()) fail(ErrorKind::UnrecognizedStructure, "pair lands outside the listed cuspidal triples");
      auto& bp = out[it->second];
      bp.pairs.push_back({u, eta});
      bp.labels.push_back(norm == Normalization::Twisted ? combi::twisted(c.label) : c.label);
    }
  }
  return out;
}

UnipotentPair generalized_springer_inverse(const ComplexGroup& g, const CuspidalTriple& t, const WeylLabel& label,
                                           Normalization norm) {
  if (!det1_twist_kernel(t.group, t.blocks) && !combi::valid_label(relative_weyl_group(t), label))
    fail(ErrorKind::InvalidLabel, "label " + combi::to_string(label) + " is not an irreducible of the relative Weyl group");
  auto table = inverse_table(g, norm);
  auto it = table->by_key.find(pair_key(t.blocks, label));
  if (it == table->by_key.end()) fail(ErrorKind::InvalidLabel, "no pair carries label " + combi::to_string(label));
  return it->second;
}

}  // namespace abps::springer
