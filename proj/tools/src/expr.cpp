#include "abpscli/expr.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "abps/error.hpp"

namespace abps::cli {

using extquot::SymbolicCoordinate;
using langlands::Summand;
using langlands::WFLine;

namespace {

struct Product {
  std::optional<WFLine> base;
  int a = 0;  // 0 until S[a] is seen
  SymbolicCoordinate twist;
};

class Parser {
 public:
  Parser(const std::string& text, const Catalogue& cat) : s_(text), cat_(cat) {}

  std::vector<Product> parse() {
    auto terms = sum();
    skip();
    if (pos_ < s_.size()) error(std::string("unexpected '") + s_[pos_] + "'");
    return terms;
  }

 private:
  [[noreturn]] void error(const std::string& what) const { throw SyntaxError(pos_, what); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }

  long integer(bool allow_sign) {
    skip();
    bool neg = false;
    if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected an integer");
    if (pos_ - start > 9) {
      pos_ = start;
      error("integer too large");
    }
    const long v = std::stol(s_.substr(start, pos_ - start));
    return neg ? -v : v;
  }

  /// "^k", "^-k" or "^{k}"; 1 when absent.
  long exponent() {
    if (!accept('^')) return 1;
    if (accept('{')) {
      long e = integer(true);
      expect('}');
      return e;
    }
    return integer(true);
  }

  std::vector<Product> sum() {
    std::vector<Product> out;
    do {
      auto t = term();
      out.insert(out.end(), t.begin(), t.end());
    } while (accept('+'));
    return out;
  }

  std::vector<Product> term() {
    std::vector<Product> acc{Product{}};
    do {
      const std::size_t at = (skip(), pos_);
      auto f = factor();
      std::vector<Product> next;
      for (const auto& x : acc)
        for (const auto& y : f) next.push_back(multiply(x, y, at));
      acc = std::move(next);
    } while (accept('*'));
    return acc;
  }

  Product multiply(const Product& x, const Product& y, std::size_t at) {
    Product p;
    if (x.base && y.base) {
      pos_ = at;
      error("two characters in one term");
    }
    if (x.a && y.a) {
      pos_ = at;
      error("S[a] given twice in one term");
    }
    p.base = x.base ? x.base : y.base;
    p.a = x.a ? x.a : y.a;
    p.twist = x.twist * y.twist;
    return p;
  }

  std::vector<Product> factor() {
    if (accept('(')) {
      if (depth_ > 0) {
        --pos_;
        error("nested parentheses");
      }
      ++depth_;
      auto inner = sum();
      expect(')');
      --depth_;
      return inner;
    }
    return {atom()};
  }

  Product atom() {
    const char c = peek();
    Product p;
    if (c == '\0') error("expected a term");
    if (c == '1' && !(pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])))) {
      ++pos_;
      exponent();
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) error("only the character 1 may be written as a number");
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') error(std::string("unexpected '") + c + "'");

    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    while (pos_ < s_.size() && s_[pos_] == '\'') ++pos_;
    const std::string name = s_.substr(start, pos_ - start);

    if (name == "S") {
      expect('[');
      long a = integer(false);
      if (a < 1) error("S[a] needs a >= 1");
      expect(']');
      p.a = static_cast<int>(a);
      return p;
    }
    if (name == "e" && peek() == '(') {
      expect('(');
      long num = integer(true);
      expect('/');
      long den = integer(false);
      if (den == 0) error("zero denominator");
      expect(')');
      p.twist = SymbolicCoordinate::root(num, den);
      return p;
    }
    if (name == "q") {
      if (!accept('^')) {
        p.twist = SymbolicCoordinate::sqrt_q(2);
        return p;
      }
      if (accept('{')) {
        long k = integer(true);
        long half = 2;
        if (accept('/')) {
          const std::size_t at = pos_;
          if (integer(false) != 2) {
            pos_ = at;
            error("q exponents are multiples of 1/2");
          }
          half = 1;
        }
        expect('}');
        p.twist = SymbolicCoordinate::sqrt_q(static_cast<int>(k * half));
        return p;
      }
      p.twist = SymbolicCoordinate::sqrt_q(static_cast<int>(2 * integer(true)));
      return p;
    }

    if (const auto* d = cat_.find(name)) {
      const std::size_t at = (skip(), pos_);
      const long e = exponent();
      WFLine l = WFLine::from_decl(*d);
      if (!d->ramified) {
        p.twist = l.twist.pow(static_cast<int>(e));
        return p;
      }
      if (e != 1 && e != -1) {
        pos_ = at;
        error("a character takes the exponent 1 or -1");
      }
      p.base = e == 1 ? l : l.dual();
      return p;
    }
    if (!langlands::is_variable_name(name))
      throw Error(ErrorKind::UnknownCharacter, "'" + name + "' at position " + std::to_string(start) +
                                                   " is not declared in the catalogue");
    p.twist = SymbolicCoordinate::variable(name, static_cast<int>(exponent()));
    return p;
  }

  const std::string& s_;
  const Catalogue& cat_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

std::string half_power(int k) {
  if (k % 2 == 0) return "q^{" + std::to_string(k / 2) + "}";
  return "q^{" + std::to_string(k) + "/2}";
}

}  // namespace

FormalParameter parse_parameter(const std::string& text, const Catalogue& cat) {
  FormalParameter p;
  for (const auto& t : Parser(text, cat).parse()) {
    WFLine l = t.base ? *t.base : WFLine::trivial();
    p.summands.push_back({l.twisted(t.twist), t.a ? t.a : 1});
  }
  p.normalize();
  return p;
}

std::string print_line(const WFLine& l, const Catalogue& cat) { return print_summand({l, 1}, cat); }

std::string print_summand(const Summand& s, const Catalogue& cat) {
  std::vector<std::string> tokens;
  const auto& c = s.line.twist;
  if (s.line.name != "1") tokens.push_back(s.line.name);
  if (c.torsion.numerator() != 0) {
    const auto num = c.torsion.numerator();
    const auto den = c.torsion.denominator();
    if (const auto* d = cat.unramified_of_order(static_cast<int>(den)))
      tokens.push_back(num == 1 ? d->name : d->name + "^" + std::to_string(num));
    else
      tokens.push_back("e(" + std::to_string(num) + "/" + std::to_string(den) + ")");
  }
  if (s.a != 1) tokens.push_back("S[" + std::to_string(s.a) + "]");
  if (c.qexp != 0) tokens.push_back(half_power(c.qexp));
  for (const auto& [v, e] : c.monomial) tokens.push_back(e == 1 ? v : v + "^" + std::to_string(e));
  if (tokens.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) out += (i ? "*" : "") + tokens[i];
  return out;
}

std::string print_parameter(const FormalParameter& p, const Catalogue& cat) {
  std::string out;
  for (std::size_t i = 0; i < p.summands.size(); ++i) out += (i ? " + " : "") + print_summand(p.summands[i], cat);
  return out.empty() ? "0" : out;
}

}  // namespace abps::cli
