#include "abps/extquot.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "abps/error.hpp"

namespace abps::extquot {

using combi::IntMatrix;
using combi::WeylFactor;
using combi::WeylType;

namespace {

Fraction mod1(Fraction f) {
  std::int64_t n = f.numerator(), d = f.denominator();
  std::int64_t r = ((n % d) + d) % d;
  return Fraction(r, d);
}

std::string fraction_string(const Fraction& f) {
  return std::to_string(f.numerator()) + "/" + std::to_string(f.denominator());
}

int word_length(const std::string& w) { return static_cast<int>(std::count(w.begin(), w.end(), 's')); }

bool word_before(const NamedElement& a, const NamedElement& b) {
  int la = word_length(a.word), lb = word_length(b.word);
  if (la != lb) return la < lb;
  return a.word < b.word;
}

std::vector<SignedPermutation> closure(int k, const std::vector<SignedPermutation>& gens) {
  std::vector<SignedPermutation> out{SignedPermutation::identity(k)};
  std::set<SignedPermutation> seen(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      auto x = out[i] * g;
      if (seen.insert(x).second) out.push_back(x);
    }
  return out;
}

IntMatrix inverse_unimodular(const IntMatrix& v) {
  const std::size_t n = v.size();
  std::vector<std::vector<Fraction>> m(n, std::vector<Fraction>(2 * n, Fraction(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Fraction(v[i][j]);
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].numerator() == 0) ++p;
    if (p == n) fail(ErrorKind::UnrecognizedStructure, "singular change of basis");
    std::swap(m[p], m[c]);
    Fraction inv = Fraction(1) / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].numerator() == 0) continue;
      Fraction f = m[r][c];
      for (std::size_t j = 0; j < 2 * n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  IntMatrix out(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][n + j].denominator() != 1) fail(ErrorKind::UnrecognizedStructure, "change of basis is not unimodular");
      out[i][j] = m[i][n + j].numerator();
    }
  return out;
}

// Row echelon form over Z with positive pivots and reduced entries above each pivot.
std::vector<std::vector<std::int64_t>> hermite(std::vector<std::vector<std::int64_t>> b, std::vector<int>& pivots) {
  pivots.clear();
  const std::size_t d = b.size();
  const std::size_t k = d ? b[0].size() : 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < d; ++col) {
    while (true) {
      std::size_t best = d;
      for (std::size_t r = row; r < d; ++r)
        if (b[r][col] != 0 && (best == d || std::llabs(b[r][col]) < std::llabs(b[best][col]))) best = r;
      if (best == d) break;
      std::swap(b[row], b[best]);
      bool clean = true;
      for (std::size_t r = row + 1; r < d; ++r) {
        std::int64_t q = b[r][col] / b[row][col];
        for (std::size_t j = 0; j < k; ++j) b[r][j] -= q * b[row][j];
        if (b[r][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (b[row][col] == 0) continue;
    if (b[row][col] < 0)
      for (auto& x : b[row]) x = -x;
    for (std::size_t r = 0; r < row; ++r) {
      std::int64_t h = b[row][col];
      std::int64_t q = b[r][col] >= 0 ? b[r][col] / h : -((-b[r][col] + h - 1) / h);
      for (std::size_t j = 0; j < k; ++j) b[r][j] -= q * b[row][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  b.resize(row);
  return b;
}

void canonicalize(TorusCoset& c) {
  std::vector<int> pivots;
  c.basis = hermite(c.basis, pivots);
  for (std::size_t f = 0; f < c.basis.size(); ++f) {
    const int p = pivots[f];
    Fraction s = c.translation[p] / Fraction(c.basis[f][p]);
    for (std::size_t j = 0; j < c.translation.size(); ++j) c.translation[j] -= s * Fraction(c.basis[f][j]);
  }
  for (auto& x : c.translation) x = mod1(x);
  for (auto& x : c.rhs) x = mod1(x);
}

// Within an orbit: larger basis rows first, then smaller translation.
bool coset_before(const TorusCoset& a, const TorusCoset& b) {
  if (a.basis != b.basis) return a.basis > b.basis;
  return a.translation < b.translation;
}

std::vector<TorusCoset> intersect(const TorusCoset& a, const TorusCoset& b) {
  IntMatrix eq = a.equations;
  eq.insert(eq.end(), b.equations.begin(), b.equations.end());
  std::vector<Fraction> rhs = a.rhs;
  rhs.insert(rhs.end(), b.rhs.begin(), b.rhs.end());
  return solve(eq, rhs, a.rank());
}

void push_unique(std::vector<TorusCoset>& v, const TorusCoset& c) {
  if (std::find(v.begin(), v.end(), c) == v.end()) v.push_back(c);
}

std::string prime_name(int i) { return "z" + std::string(static_cast<std::size_t>(i), '\''); }

std::vector<int> moved_coordinates(const SignedPermutation& w) {
  std::vector<int> out;
  for (int i = 0; i < w.rank(); ++i)
    if (w.sigma()[i] != i || w.signs()[w.sigma()[i]] != 1) out.push_back(i);
  return out;
}

}  // namespace

// ------------------------------------------------------------- coordinates

SymbolicCoordinate SymbolicCoordinate::root(std::int64_t num, std::int64_t den) {
  SymbolicCoordinate c;
  c.torsion = mod1(Fraction(num, den));
  return c;
}

SymbolicCoordinate SymbolicCoordinate::sqrt_q(int k) {
  SymbolicCoordinate c;
  c.qexp = k;
  return c;
}

SymbolicCoordinate SymbolicCoordinate::variable(const std::string& name, int exponent) {
  SymbolicCoordinate c;
  if (exponent != 0) c.monomial[name] = exponent;
  return c;
}

SymbolicCoordinate SymbolicCoordinate::inverse() const { return pow(-1); }

SymbolicCoordinate SymbolicCoordinate::pow(int e) const {
  SymbolicCoordinate c;
  c.torsion = mod1(torsion * Fraction(e));
  c.qexp = qexp * e;
  if (e != 0)
    for (const auto& [v, x] : monomial) c.monomial[v] = x * e;
  return c;
}

SymbolicCoordinate operator*(const SymbolicCoordinate& a, const SymbolicCoordinate& b) {
  SymbolicCoordinate c = a;
  c.torsion = mod1(a.torsion + b.torsion);
  c.qexp = a.qexp + b.qexp;
  for (const auto& [v, x] : b.monomial) {
    int& slot = c.monomial[v];
    slot += x;
    if (slot == 0) c.monomial.erase(v);
  }
  return c;
}

bool operator<(const SymbolicCoordinate& a, const SymbolicCoordinate& b) {
  if (a.monomial != b.monomial) return a.monomial < b.monomial;
  if (a.qexp != b.qexp) return a.qexp < b.qexp;
  return a.torsion < b.torsion;
}

std::string to_string(const SymbolicCoordinate& c) {
  std::vector<std::string> tokens;
  if (c.qexp != 0) {
    std::string e = c.qexp % 2 == 0 ? std::to_string(c.qexp / 2) : std::to_string(c.qexp) + "/2";
    tokens.push_back("q^{" + e + "}");
  }
  for (const auto& [v, x] : c.monomial) tokens.push_back(x == 1 ? v : v + "^" + std::to_string(x));
  std::string body;
  for (std::size_t i = 0; i < tokens.size(); ++i) body += (i ? "*" : "") + tokens[i];
  if (c.torsion.numerator() == 0) return body.empty() ? "1" : body;
  if (c.torsion == Fraction(1, 2)) return body.empty() ? "-1" : "-" + body;
  std::string root = "e(" + fraction_string(c.torsion) + ")";
  return body.empty() ? root : root + "*" + body;
}

bool SymbolicTorusPoint::unitary() const {
  return std::all_of(coords.begin(), coords.end(), [](const auto& c) { return c.unitary(); });
}

std::string to_string(const SymbolicTorusPoint& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.coords.size(); ++i) s += (i ? "," : "") + to_string(t.coords[i]);
  return s + ")";
}

SymbolicTorusPoint generic_point(int k) {
  SymbolicTorusPoint t;
  for (int i = 1; i <= k; ++i) t.coords.push_back(SymbolicCoordinate::variable("z" + std::to_string(i)));
  return t;
}

SymbolicTorusPoint act(const SignedPermutation& w, const SymbolicTorusPoint& t) {
  if (w.rank() != t.rank()) fail(ErrorKind::RankMismatch, "element and point have different rank");
  SymbolicTorusPoint out;
  out.coords.resize(t.coords.size());
  for (int j = 0; j < w.rank(); ++j) {
    const int i = w.sigma()[j];
    out.coords[i] = t.coords[j].pow(w.signs()[i]);
  }
  return out;
}

// ------------------------------------------------------------------ cosets

SymbolicTorusPoint TorusCoset::generic_point() const {
  SymbolicTorusPoint t;
  for (int j = 0; j < rank(); ++j) {
    SymbolicCoordinate c;
    c.torsion = translation[j];
    for (std::size_t f = 0; f < basis.size(); ++f)
      c = c * SymbolicCoordinate::variable(prime_name(static_cast<int>(f)), static_cast<int>(basis[f][j]));
    t.coords.push_back(c);
  }
  return t;
}

bool TorusCoset::contains(const std::vector<Fraction>& x) const {
  if (static_cast<int>(x.size()) != rank()) fail(ErrorKind::RankMismatch, "point rank differs from coset rank");
  for (std::size_t i = 0; i < equations.size(); ++i) {
    Fraction s = -rhs[i];
    for (int j = 0; j < rank(); ++j) s += Fraction(equations[i][j]) * x[j];
    if (s.denominator() != 1) return false;
  }
  return true;
}

std::vector<TorusCoset> solve(const IntMatrix& a, const std::vector<Fraction>& b, int k) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "equation count differs from right-hand side");
  if (a.empty()) {
    TorusCoset full;
    full.basis = combi::identity_matrix(k);
    full.translation.assign(k, Fraction(0));
    canonicalize(full);
    return {full};
  }
  auto snf = combi::smith_normal_form(a);
  const std::size_t m = a.size();
  std::vector<Fraction> c(m, Fraction(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) c[i] += Fraction(snf.U[i][j]) * b[j];
  std::size_t r = 0;
  while (r < m && r < static_cast<std::size_t>(k) && snf.S[r][r] != 0) ++r;
  for (std::size_t i = r; i < m; ++i)
    if (c[i].denominator() != 1) return {};
  IntMatrix vinv = inverse_unimodular(snf.V);

  std::vector<TorusCoset> out;
  std::vector<std::int64_t> choice(r, 0);
  while (true) {
    std::vector<Fraction> y(k, Fraction(0));
    TorusCoset cs;
    for (std::size_t i = 0; i < r; ++i) {
      y[i] = (c[i] + Fraction(choice[i])) / Fraction(snf.S[i][i]);
      cs.equations.push_back(vinv[i]);
      cs.rhs.push_back(y[i]);
    }
    cs.translation.assign(k, Fraction(0));
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < k; ++i) cs.translation[j] += Fraction(snf.V[j][i]) * y[i];
    for (int f = static_cast<int>(r); f < k; ++f) {
      std::vector<std::int64_t> col(k);
      for (int j = 0; j < k; ++j) col[j] = snf.V[j][f];
      cs.basis.push_back(col);
    }
    canonicalize(cs);
    push_unique(out, cs);
    std::size_t pos = 0;
    while (pos < r && ++choice[pos] == snf.S[pos][pos]) choice[pos++] = 0;
    if (pos == r) break;
  }
  std::sort(out.begin(), out.end(), coset_before);
  return out;
}

std::vector<TorusCoset> fixed_locus(const SignedPermutation& w) {
  IntMatrix m = w.matrix();
  for (int i = 0; i < w.rank(); ++i) m[i][i] -= 1;
  return solve(m, std::vector<Fraction>(m.size(), Fraction(0)), w.rank());
}

TorusCoset transform(const SignedPermutation& w, const TorusCoset& c) {
  if (w.rank() != c.rank()) fail(ErrorKind::RankMismatch, "element and coset have different rank");
  const IntMatrix m = w.matrix();
  const IntMatrix minv = w.inverse().matrix();
  TorusCoset out;
  for (const auto& v : c.basis) {
    std::vector<std::int64_t> img(c.rank(), 0);
    for (int i = 0; i < c.rank(); ++i)
      for (int j = 0; j < c.rank(); ++j) img[i] += m[i][j] * v[j];
    out.basis.push_back(img);
  }
  out.translation.assign(c.rank(), Fraction(0));
  for (int i = 0; i < c.rank(); ++i)
    for (int j = 0; j < c.rank(); ++j) out.translation[i] += Fraction(m[i][j]) * c.translation[j];
  out.equations = c.equations.empty() ? IntMatrix{} : combi::multiply(c.equations, minv);
  out.rhs = c.rhs;
  canonicalize(out);
  return out;
}

// ----------------------------------------------------------------- actions

Action weyl_bk(int k) {
  Action a{k, combi::enumerate_bk(k)};
  std::stable_sort(a.elements.begin(), a.elements.end(), word_before);
  return a;
}

Action generated(int k, const std::vector<SignedPermutation>& gens) {
  auto all = weyl_bk(k);
  auto members = closure(k, gens);
  Action a{k, {}};
  for (const auto& e : all.elements)
    if (std::find(members.begin(), members.end(), e.element) != members.end()) a.elements.push_back(e);
  return a;
}

Action trivial_action(int k) { return {k, {{SignedPermutation::identity(k), "1"}}}; }

std::vector<NamedElement> class_representatives(const Action& a) {
  std::vector<NamedElement> reps;
  std::set<SignedPermutation> classified;
  for (const auto& e : a.elements) {
    if (classified.count(e.element)) continue;
    reps.push_back(e);
    for (const auto& g : a.elements) classified.insert(g.element * e.element * g.element.inverse());
  }
  return reps;
}

// -------------------------------------------------------------- stabilizers

combi::RelativeWeylGroup Stabilizer::shape() const {
  combi::RelativeWeylGroup w;
  for (const auto& f : factors) w.add(f.shape);
  return w;
}

std::string to_string(const Stabilizer& s) {
  if (s.order() == 1) return "1";
  std::string gens, shape;
  if (!s.recognized) {
    for (const auto& e : s.elements) gens += (gens.empty() ? "" : ",") + e.word;
    return "{" + gens + "}";
  }
  bool all_z2 = true;
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    const auto& f = s.factors[i];
    std::string g;
    for (const auto& e : f.generators) g += (g.empty() ? "" : ",") + e.word;
    gens += (i ? "x" : "") + ("<" + g + ">");
    shape += (i ? "x" : "") + combi::to_string(f.shape);
    all_z2 = all_z2 && f.shape.type == WeylType::Z2;
  }
  if (all_z2 && s.factors.size() > 1) shape = "(Z/2)^" + std::to_string(s.factors.size());
  return gens + " ~= " + shape;
}

Stabilizer recognize(int k, std::vector<NamedElement> elements) {
  std::stable_sort(elements.begin(), elements.end(), word_before);
  Stabilizer st;
  st.elements = elements;
  std::vector<NamedElement> refl;
  for (const auto& e : elements)
    if (e.element.is_reflection()) refl.push_back(e);

  std::vector<SignedPermutation> refl_elems;
  for (const auto& r : refl) refl_elems.push_back(r.element);
  auto reflection_group = closure(k, refl_elems);

  if (reflection_group.size() == elements.size()) {
    // Components of the coordinate graph spanned by reflection supports.
    std::vector<int> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& r : refl) {
      auto mv = moved_coordinates(r.element);
      for (std::size_t i = 1; i < mv.size(); ++i) parent[find(mv[i])] = find(mv[0]);
    }
    std::map<int, std::vector<NamedElement>> by_root;
    for (const auto& r : refl) by_root[find(moved_coordinates(r.element)[0])].push_back(r);

    long product = 1;
    std::vector<StabilizerFactor> factors;
    for (auto& [root, rs] : by_root) {
      StabilizerFactor f;
      for (int i = 0; i < k; ++i)
        if (find(i) == root) f.support.push_back(i);
      const int m = static_cast<int>(f.support.size());
      bool has_sign = false;
      std::vector<SignedPermutation> chosen;
      for (const auto& r : rs) {
        has_sign = has_sign || moved_coordinates(r.element).size() == 1;
        auto span = closure(k, chosen);
        if (std::find(span.begin(), span.end(), r.element) == span.end()) {
          chosen.push_back(r.element);
          f.generators.push_back(r);
        }
      }
      const long o = static_cast<long>(closure(k, chosen).size());
      long fact = 1;
      for (int i = 2; i <= m; ++i) fact *= i;
      if (has_sign && o == (1L << m) * fact) {
        f.shape = m == 1 ? WeylFactor{WeylType::Z2, 1} : WeylFactor{WeylType::B, m};
      } else if (!has_sign && m >= 2 && o == fact) {
        f.shape = {WeylType::A, m};
      } else if (!has_sign && m >= 2 && o == (1L << (m - 1)) * fact) {
        f.shape = {WeylType::D, m};
      } else {
        return st;
      }
      product *= o;
      factors.push_back(f);
    }
    if (product != static_cast<long>(elements.size())) return st;
    std::stable_sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
      return word_before(a.generators.front(), b.generators.front());
    });
    for (std::size_t i = 0; i < factors.size(); ++i) factors[i].shape.source = static_cast<int>(i);
    st.factors = factors;
    st.recognized = true;
    return st;
  }

  // Elementary abelian 2-group.
  for (const auto& x : elements) {
    if (!(x.element * x.element).is_identity()) return st;
    for (const auto& y : elements)
      if (!(x.element * y.element == y.element * x.element)) return st;
  }
  std::vector<SignedPermutation> chosen;
  for (const auto& x : elements) {
    auto span = closure(k, chosen);
    if (std::find(span.begin(), span.end(), x.element) != span.end()) continue;
    chosen.push_back(x.element);
    StabilizerFactor f;
    f.shape = {WeylType::Z2, 1, static_cast<int>(st.factors.size())};
    f.support = moved_coordinates(x.element);
    f.generators.push_back(x);
    st.factors.push_back(f);
  }
  st.recognized = true;
  return st;
}

Stabilizer stabilizer(const Action& a, const SymbolicTorusPoint& t) {
  std::vector<NamedElement> fix;
  for (const auto& e : a.elements)
    if (act(e.element, t) == t) fix.push_back(e);
  return recognize(a.rank, fix);
}

std::vector<combi::WeylLabel> irreps(const Stabilizer& s) {
  if (!s.recognized) fail(ErrorKind::UnrecognizedStructure, "unrecognized stabilizer " + to_string(s));
  return combi::irreps(s.shape());
}

// ------------------------------------------------------- extended quotients

namespace {

// Identifies labels related by a non-inner automorphism coming from the normalizer.
// Only elementary abelian stabilizers can carry such automorphisms here.
std::vector<combi::WeylLabel> residual_reduce(const Action& a, const TorusCoset& closure_coset, const Stabilizer& st,
                                             std::vector<combi::WeylLabel> labels) {
  std::vector<SignedPermutation> normalizer;
  for (const auto& e : a.elements)
    if (transform(e.element, closure_coset) == closure_coset) normalizer.push_back(e.element);
  auto conj = [](const SignedPermutation& w, const SignedPermutation& x) { return w * x * w.inverse(); };
  std::vector<SignedPermutation> outer;
  for (const auto& w : normalizer) {
    bool inner = false;
    for (const auto& g : st.elements) {
      bool same = true;
      for (const auto& x : st.elements) same = same && conj(w, x.element) == conj(g.element, x.element);
      if (same) {
        inner = true;
        break;
      }
    }
    if (!inner) outer.push_back(w);
  }
  if (outer.empty()) return labels;
  for (const auto& f : st.factors)
    if (f.shape.type != WeylType::Z2)
      fail(ErrorKind::UnrecognizedStructure, "outer automorphism on a non-abelian stabilizer " + to_string(st));

  // Coordinates of every element in the chosen basis.
  const int r = static_cast<int>(st.factors.size());
  std::map<SignedPermutation, std::vector<int>> coords;
  for (int mask = 0; mask < (1 << r); ++mask) {
    auto x = SignedPermutation::identity(a.rank);
    std::vector<int> bits(r);
    for (int i = 0; i < r; ++i)
      if (mask >> i & 1) {
        x = x * st.factors[i].generators[0].element;
        bits[i] = 1;
      }
    coords[x] = bits;
  }
  auto value = [&](const combi::WeylLabel& l, const SignedPermutation& x) {
    int v = 1;
    const auto& bits = coords.at(x);
    for (int i = 0; i < r; ++i)
      if (bits[i]) v *= l.parts[i].sign;
    return v;
  };
  std::vector<combi::WeylLabel> kept;
  for (const auto& l : labels) {
    bool dup = false;
    for (const auto& w : outer) {
      combi::WeylLabel img;
      for (int i = 0; i < r; ++i)
        img.parts.push_back(combi::z2_label(value(l, conj(w.inverse(), st.factors[i].generators[0].element))));
      dup = dup || std::find(kept.begin(), kept.end(), img) != kept.end();
    }
    if (!dup) kept.push_back(l);
  }
  return kept;
}

}  // namespace

std::vector<Stratum> strata(const Action& a, int rank_bound) {
  const int k = a.rank;
  if (k > rank_bound) fail(ErrorKind::RankMismatch, "torus rank exceeds the stratification bound");
  std::vector<TorusCoset> fixed;
  for (const auto& e : a.elements)
    if (!e.element.is_identity())
      for (const auto& c : fixed_locus(e.element)) push_unique(fixed, c);

  std::vector<TorusCoset> all = solve({}, {}, k);
  for (const auto& c : fixed) push_unique(all, c);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const auto& f : fixed)
      for (const auto& c : intersect(all[i], f)) push_unique(all, c);

  std::vector<bool> done(all.size(), false);
  std::vector<Stratum> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (done[i]) continue;
    TorusCoset best = all[i];
    for (const auto& e : a.elements) {
      auto img = transform(e.element, all[i]);
      for (std::size_t j = 0; j < all.size(); ++j)
        if (all[j] == img) done[j] = true;
      if (coset_before(img, best)) best = img;
    }
    auto p = best.generic_point();
    out.push_back({best, p, stabilizer(a, p)});
  }
  std::stable_sort(out.begin(), out.end(), [](const Stratum& x, const Stratum& y) {
    if (x.closure.dimension() != y.closure.dimension()) return x.closure.dimension() > y.closure.dimension();
    if (x.stabilizer.order() != y.stabilizer.order()) return x.stabilizer.order() < y.stabilizer.order();
    return coset_before(x.closure, y.closure);
  });
  return out;
}

std::vector<EQPoint> spectral_eq(const Action& a) {
  std::vector<EQPoint> out;
  auto ss = strata(a);
  for (std::size_t i = 0; i < ss.size(); ++i) {
    auto labels = residual_reduce(a, ss[i].closure, ss[i].stabilizer, irreps(ss[i].stabilizer));
    for (auto& l : labels) out.push_back({static_cast<int>(i), ss[i].point, ss[i].stabilizer, l});
  }
  return out;
}

std::vector<GeoEQPoint> geometric_eq(const Action& a) {
  std::vector<GeoEQPoint> out;
  for (const auto& w : class_representatives(a)) {
    std::vector<SignedPermutation> centralizer;
    for (const auto& g : a.elements)
      if (g.element * w.element == w.element * g.element) centralizer.push_back(g.element);
    auto comps = fixed_locus(w.element);
    std::vector<bool> done(comps.size(), false);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (done[i]) continue;
      std::vector<TorusCoset> orbit;
      for (const auto& z : centralizer) push_unique(orbit, transform(z, comps[i]));
      std::sort(orbit.begin(), orbit.end(), coset_before);
      for (std::size_t j = 0; j < comps.size(); ++j)
        if (std::find(orbit.begin(), orbit.end(), comps[j]) != orbit.end()) done[j] = true;
      GeoEQPoint g{w, orbit.front(), orbit.front().generic_point(), {}};
      for (const auto& c : orbit) g.orbit.push_back(c.generic_point());
      out.push_back(g);
    }
  }
  return out;
}

}  // namespace abps::extquot
