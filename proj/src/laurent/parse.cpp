#include <cctype>
#include <charconv>

#include "alexlink/laurent.hpp"

namespace alexlink {

PolyParseError::PolyParseError(std::string message, std::size_t position)
    : std::runtime_error(std::move(message)), position_(position) {}

std::string PolyParseError::caret_diagnostic(std::string_view input) const {
  std::string out(input);
  out += '\n';
  out.append(std::min(position_, input.size()), ' ');
  out += "^ ";
  out += what();
  return out;
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Highest variable index mentioned in the text (1-based), 0 if none.
std::size_t scan_variable_count(std::string_view text) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 't') continue;
    std::size_t j = i + 1;
    std::size_t index = 0;
    while (j < text.size() && is_digit(text[j])) index = index * 10 + (text[j++] - '0');
    best = std::max<std::size_t>(best, j == i + 1 ? 1 : index);
  }
  return best;
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t vars) : text_(text), vars_(vars) {}

  LaurentPoly parse() {
    LaurentPoly p = expression();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw PolyParseError(what, pos_); }

  void skip() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  LaurentPoly expression() {
    LaurentPoly acc(vars_);
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = text_[pos_++] == '-';
    acc = term();
    if (negate) acc = -acc;
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      if (c == '+')
        acc += term();
      else
        acc -= term();
    }
    return acc;
  }

  bool starts_primary(char c) const { return is_digit(c) || c == 't' || c == '('; }

  LaurentPoly term() {
    LaurentPoly acc = power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= power();
      } else if (starts_primary(c)) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  LaurentPoly power() {
    LaurentPoly base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    const std::size_t at = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
      negative = text_[pos_++] == '-';
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (digits == pos_) fail("expected integer exponent");
    unsigned e = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, e);
    if (ec != std::errc() || e > 4096) {
      pos_ = at;
      fail("exponent out of range");
    }
    if (!negative) return base.pow(e);
    if (!base.is_unit()) {
      pos_ = at;
      fail("negative exponent of a non-unit");
    }
    const auto& [m, c] = base.leading_term();
    return LaurentPoly::monomial(m.inverse(), c).pow(e);
  }

  LaurentPoly primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (is_digit(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
      return LaurentPoly::constant(vars_, Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (c == 't') {
      const std::size_t start = pos_++;
      std::size_t index = 1;
      if (pos_ < text_.size() && is_digit(text_[pos_])) {
        index = 0;
        while (pos_ < text_.size() && is_digit(text_[pos_])) index = index * 10 + (text_[pos_++] - '0');
      }
      if (index == 0 || index > vars_) {
        pos_ = start;
        fail("variable index out of range");
      }
      return LaurentPoly::variable(vars_, index - 1);
    }
    fail(c == '\0' ? "unexpected end of input" : "expected a number, variable or '('");
  }

  std::string_view text_;
  std::size_t vars_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, std::size_t vars) {
  if (vars == 0) vars = std::max<std::size_t>(1, scan_variable_count(text));
  return Parser(text, vars).parse();
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const Integer magnitude = abs(c);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (m.is_one()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += to_string(m);
    }
  }
  return out;
}

}  // namespace alexlink
