// Parser for the potential text format: built-in names or a sum of
// monomial terms in the centred coordinates x, y.
#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rsm/potentials.hpp"

namespace rsm {

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  std::vector<SeparableTerm> parse() {
    std::vector<SeparableTerm> terms;
    skip_space();
    double sign = 1.0;
    if (accept('+')) {
    } else if (accept('-')) {
      sign = -1.0;
    }
    terms.push_back(term(sign));
    while (true) {
      skip_space();
      if (at_end()) break;
      if (accept('+')) {
        sign = 1.0;
      } else if (accept('-')) {
        sign = -1.0;
      } else {
        fail("expected '+' or '-'");
      }
      terms.push_back(term(sign));
    }
    return terms;
  }

 private:
  SeparableTerm term(double sign) {
    double coeff = sign;
    int px = 0;
    int py = 0;
    factor(coeff, px, py);
    while (true) {
      skip_space();
      if (!accept('*')) break;
      factor(coeff, px, py);
    }
    return {coeff, Polynomial::monomial(px), Polynomial::monomial(py)};
  }

  void factor(double& coeff, int& px, int& py) {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    const char c = peek();
    if (c == 'x' || c == 'y' || c == '(') {
      bool paren = accept('(');
      skip_space();
      const char var = peek();
      if (var != 'x' && var != 'y') fail("expected variable x or y");
      ++pos_;
      skip_space();
      if (paren && !accept(')')) fail("expected ')'");
      int power = 1;
      skip_space();
      if (accept('^')) {
        skip_space();
        power = integer();
      }
      (var == 'x' ? px : py) += power;
      return;
    }
    coeff *= number();
  }

  double number() {
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || !std::isfinite(value)) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  int integer() {
    bool paren = accept('(');
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    int value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || value < 0) fail("expected a non-negative integer power");
    pos_ += static_cast<std::size_t>(ptr - begin);
    if (paren && !accept(')')) fail("expected ')'");
    return value;
  }

  bool accept(char c) {
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
  [[nodiscard]] char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse potential '" + std::string(text_) + "' at offset " +
                                std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SeparablePotential parse_potential(std::string_view text, double alpha) {
  if (text == "sho") return harmonic_potential();
  if (text == "qcd") return quartic_product_potential(alpha);
  if (text == "none" || text == "zero") return zero_potential();
  return SeparablePotential(TermParser(text).parse());
}

}  // namespace rsm
