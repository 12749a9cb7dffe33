#include "abps/weyl.hpp"

#include "abps/error.hpp"

namespace abps::combi {

namespace {

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

bool WeylFactor::trivial() const {
  switch (type) {
    case WeylType::A: return n <= 1;
    case WeylType::B: return n <= 0;
    case WeylType::D: return n <= 1;
    case WeylType::DExt: return n <= 0;
    case WeylType::Z2: return false;
  }
  return true;
}

long WeylFactor::order() const {
  switch (type) {
    case WeylType::A: return factorial(n);
    case WeylType::B: return (1L << n) * factorial(n);
    case WeylType::D: return n <= 1 ? 1 : (1L << (n - 1)) * factorial(n);
    case WeylType::DExt: return (1L << n) * factorial(n);
    case WeylType::Z2: return 2;
  }
  return 1;
}

std::string to_string(const WeylFactor& f) {
  switch (f.type) {
    case WeylType::A: return "S" + std::to_string(f.n);
    case WeylType::B: return "B" + std::to_string(f.n);
    case WeylType::D: return "D" + std::to_string(f.n);
    case WeylType::DExt: return f.n == 1 ? "Z/2" : "D" + std::to_string(f.n) + ":Z/2";
    case WeylType::Z2: return "Z/2";
  }
  return "?";
}

long RelativeWeylGroup::order() const {
  long o = 1;
  for (const auto& f : factors) o *= f.order();
  return o;
}

int RelativeWeylGroup::twist_rank() const {
  int r = 0;
  for (const auto& f : factors) r += (f.type == WeylType::DExt || f.type == WeylType::Z2) ? 1 : 0;
  return r;
}

void RelativeWeylGroup::add(WeylFactor f) {
  if (!f.trivial()) factors.push_back(f);
}

std::string to_string(const RelativeWeylGroup& w) {
  if (w.factors.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.factors.size(); ++i) {
    if (i) s += "x";
    s += to_string(w.factors[i]);
  }
  return s;
}

IrrLabel a_label(Partition p) {
  IrrLabel l;
  l.type = WeylType::A;
  l.partition = std::move(p);
  return l;
}

IrrLabel b_label(Bipartition b) {
  IrrLabel l;
  l.type = WeylType::B;
  l.bipartition = std::move(b);
  return l;
}

IrrLabel d_label(DLabel d) {
  IrrLabel l;
  l.type = WeylType::D;
  l.dlabel = std::move(d);
  return l;
}

IrrLabel dext_label(DLabel d, int sign) {
  IrrLabel l;
  l.type = WeylType::DExt;
  l.dlabel = DLabel::make(d.alpha, d.beta, SplitTag::Plain);
  l.sign = l.dlabel.degenerate() ? 1 : sign;
  return l;
}

IrrLabel z2_label(int sign) {
  IrrLabel l;
  l.type = WeylType::Z2;
  l.sign = sign;
  return l;
}

std::vector<IrrLabel> irreps(const WeylFactor& f) {
  std::vector<IrrLabel> out;
  switch (f.type) {
    case WeylType::A:
      for (auto& p : partitions(f.n)) out.push_back(a_label(p));
      break;
    case WeylType::B:
      for (auto& b : bipartitions(f.n)) out.push_back(b_label(b));
      break;
    case WeylType::D:
      for (auto& d : dlabels(f.n)) out.push_back(d_label(d));
      break;
    case WeylType::DExt:
      for (auto& d : dlabels(f.n)) {
        if (d.tag == SplitTag::Primed) continue;
        out.push_back(dext_label(d, 1));
        if (!d.degenerate()) out.push_back(dext_label(d, -1));
      }
      break;
    case WeylType::Z2:
      out.push_back(z2_label(1));
      out.push_back(z2_label(-1));
      break;
  }
  return out;
}

std::vector<WeylLabel> irreps(const RelativeWeylGroup& w) {
  std::vector<WeylLabel> out{WeylLabel{}};
  for (const auto& f : w.factors) {
    std::vector<WeylLabel> next;
    auto local = irreps(f);
    for (const auto& prefix : out)
      for (const auto& l : local) {
        auto x = prefix;
        x.parts.push_back(l);
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

bool valid_label(const RelativeWeylGroup& w, const WeylLabel& l) {
  if (l.parts.size() != w.factors.size()) return false;
  for (std::size_t i = 0; i < l.parts.size(); ++i) {
    bool found = false;
    for (const auto& x : irreps(w.factors[i])) found = found || x == l.parts[i];
    if (!found) return false;
  }
  return true;
}

IrrLabel twisted(const IrrLabel& l) {
  switch (l.type) {
    case WeylType::A: return a_label(l.partition.transpose());
    case WeylType::B: return b_label(sign_twist(l.bipartition));
    case WeylType::D: return d_label(sign_twist(l.dlabel));
    case WeylType::DExt: {
      auto d = sign_twist(l.dlabel);
      return dext_label(d, l.sign);
    }
    case WeylType::Z2: return l;
  }
  return l;
}

WeylLabel twisted(const WeylLabel& l) {
  WeylLabel out;
  for (const auto& p : l.parts) out.parts.push_back(twisted(p));
  return out;
}

Bipartition dext_to_bipartition(const IrrLabel& l) {
  if (l.type != WeylType::DExt) fail(ErrorKind::InvalidLabel, "not an extended D label");
  if (l.sign == 1 || l.dlabel.degenerate()) return {l.dlabel.alpha, l.dlabel.beta};
  return {l.dlabel.beta, l.dlabel.alpha};
}

IrrLabel bipartition_to_dext(const Bipartition& b) {
  if (b.alpha == b.beta || partition_before(b.alpha, b.beta)) return dext_label(DLabel::make(b.alpha, b.beta), 1);
  return dext_label(DLabel::make(b.alpha, b.beta), -1);
}

std::string sign_name(int sign) { return sign == 1 ? "1" : "zeta"; }

std::string to_string(const IrrLabel& l) {
  switch (l.type) {
    case WeylType::A: return class_string(l.partition);
    case WeylType::B: return to_string(l.bipartition);
    case WeylType::D: return to_string(l.dlabel);
    case WeylType::DExt: {
      if (l.dlabel.total() == 1) return sign_name(l.sign);
      std::string s = "{" + label_string(l.dlabel.alpha) + "," + label_string(l.dlabel.beta) + "}";
      if (!l.dlabel.degenerate()) s += "(x)" + sign_name(l.sign);
      return s;
    }
    case WeylType::Z2: return sign_name(l.sign);
  }
  return "?";
}

std::string to_string(const WeylLabel& l) {
  if (l.parts.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < l.parts.size(); ++i) {
    if (i) s += "(x)";
    s += to_string(l.parts[i]);
  }
  return s;
}

}  // namespace abps::combi
