#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "dirichlet/errors.hpp"
#include "dirichlet/poly.hpp"

namespace dirichlet {
namespace {

constexpr int kMaxPower = 4096;

// Recursive-descent parser:
//   expr   := term { ('+' | '-') term }
//   term   := factor { '*' factor }
//   factor := ('+' | '-') factor | power
//   power  := primary [ '^' integer ]
//   primary:= number | number'i' | identifier | '(' expr ')'
template <class Coef>
class Parser {
 public:
  using Poly = SparsePoly2<Coef>;
  static constexpr bool kComplex = !std::is_same_v<Coef, double>;

  explicit Parser(std::string_view text) : text_(text) {}

  Poly parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    Poly p = expr();
    skip_ws();
    if (!at_end()) fail("unexpected character");
    return p;
  }

 private:
  Poly expr() {
    Poly acc = term();
    for (;;) {
      skip_ws();
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      skip_ws();
      if (!accept('*')) return acc;
      acc = acc * factor();
    }
  }

  Poly factor() {
    skip_ws();
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    return power();
  }

  Poly power() {
    Poly base = primary();
    skip_ws();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a non-negative integer exponent");
    int exponent = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, exponent);
    if (ec != std::errc() || exponent > kMaxPower) fail("exponent out of range");
    Poly result(Coef(1));
    for (int k = 0; k < exponent; ++k) result = result * base;
    return result;
  }

  Poly primary() {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      skip_ws();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return variable();
    fail("unexpected character");
  }

  Poly number() {
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc()) fail("malformed number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    if (!at_end() && peek() == 'i' &&
        (pos_ + 1 == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
      if constexpr (kComplex) {
        ++pos_;
        return Poly(Coef(0.0, value));
      } else {
        fail("imaginary literal in a real polynomial");
      }
    }
    return Poly(Coef(value));
  }

  Poly variable() {
    const std::size_t start = pos_;
    while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if constexpr (kComplex) {
      if (name == "z") return Poly::monomial(1, 0);
      if (name == "zb") return Poly::monomial(0, 1);
      if (name == "i") return Poly(Coef(0.0, 1.0));
    } else {
      if (name == "x") return Poly::monomial(1, 0);
      if (name == "y") return Poly::monomial(0, 1);
    }
    pos_ = start;
    fail("unknown variable '" + std::string(name) + "'");
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  bool accept(char c) {
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) +
                     "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string monomial_text(Exponent e, const char* first, const char* second) {
  std::string out;
  auto append = [&out](const char* var, int power) {
    if (power == 0) return;
    if (!out.empty()) out += '*';
    out += var;
    if (power > 1) out += '^' + std::to_string(power);
  };
  append(first, e.first);
  append(second, e.second);
  return out;
}

// Printed order: total degree descending, then first exponent descending.
template <class Coef>
std::vector<std::pair<Exponent, Coef>> print_order(const SparsePoly2<Coef>& p) {
  std::vector<std::pair<Exponent, Coef>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.total() != b.first.total()) return a.first.total() > b.first.total();
    return a.first.first > b.first.first;
  });
  return terms;
}

// Appends one term given its sign and the text of the coefficient magnitude.
void append_term(std::string& out, bool negative, const std::string& magnitude,
                 bool magnitude_is_one, const std::string& mono) {
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (mono.empty()) {
    out += magnitude;
  } else if (magnitude_is_one) {
    out += mono;
  } else {
    out += magnitude + "*" + mono;
  }
}

}  // namespace

RealPoly2 parse_real_poly(std::string_view text) { return Parser<double>(text).parse(); }

ComplexPolyZZbar parse_zzbar_poly(std::string_view text) { return Parser<complex>(text).parse(); }

std::string to_string(const RealPoly2& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : print_order(p)) {
    const double mag = std::abs(c);
    append_term(out, c < 0.0, format_number(mag), mag == 1.0, monomial_text(e, "x", "y"));
  }
  return out;
}

std::string to_string(const ComplexPolyZZbar& q) {
  if (q.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : print_order(q)) {
    const std::string mono = monomial_text(e, "z", "zb");
    if (c.imag() == 0.0) {
      const double mag = std::abs(c.real());
      append_term(out, c.real() < 0.0, format_number(mag), mag == 1.0, mono);
    } else if (c.real() == 0.0) {
      append_term(out, c.imag() < 0.0, format_number(std::abs(c.imag())) + "i", false, mono);
    } else {
      const std::string inner = "(" + format_number(c.real()) + (c.imag() < 0.0 ? "-" : "+") +
                                format_number(std::abs(c.imag())) + "i)";
      append_term(out, false, inner, false, mono);
    }
  }
  return out;
}

}  // namespace dirichlet
