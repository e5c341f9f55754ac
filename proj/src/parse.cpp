#include "rootbounds/parse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <map>

namespace rootbounds {

namespace {

// Degrees above this are rejected to keep hostile input from allocating
// gigabytes through "x^999999999".
constexpr int kMaxDegree = 9999;

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw PolynomialSyntaxError(what, pos);
  }
};

double parse_number(Cursor& c) {
  double value = 0.0;
  const char* begin = c.text.data() + c.pos;
  const char* end = c.text.data() + c.text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr == begin) {
    c.fail("expected a number");
  }
  if (!std::isfinite(value)) {
    c.fail("non-finite coefficient");
  }
  c.pos += static_cast<std::size_t>(ptr - begin);
  return value;
}

int parse_exponent(Cursor& c) {
  c.skip_ws();
  int value = 0;
  const char* begin = c.text.data() + c.pos;
  const char* end = c.text.data() + c.text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr == begin || value < 0) {
    c.fail("expected a non-negative integer exponent");
  }
  if (value > kMaxDegree) {
    c.fail("exponent too large");
  }
  c.pos += static_cast<std::size_t>(ptr - begin);
  return value;
}

std::vector<double> parse_list(Cursor& c) {
  c.skip_ws();
  ++c.pos;  // consume '['
  std::vector<double> coeffs;
  c.skip_ws();
  if (c.done()) {
    c.fail("unterminated list");
  }
  if (c.peek() == ']') {
    c.fail("empty coefficient list");
  }
  for (;;) {
    c.skip_ws();
    double sign = 1.0;
    if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
      sign = c.peek() == '-' ? -1.0 : 1.0;
      ++c.pos;
      c.skip_ws();
    }
    coeffs.push_back(sign * parse_number(c));
    if (coeffs.size() > static_cast<std::size_t>(kMaxDegree) + 1) {
      c.fail("too many coefficients");
    }
    c.skip_ws();
    if (c.done()) {
      c.fail("unterminated list");
    }
    if (c.peek() == ',') {
      ++c.pos;
      continue;
    }
    if (c.peek() == ']') {
      ++c.pos;
      break;
    }
    c.fail("expected ',' or ']'");
  }
  c.skip_ws();
  if (!c.done()) {
    c.fail("trailing characters after list");
  }
  return coeffs;
}

std::vector<double> parse_expression(Cursor& c) {
  std::map<int, double> acc;
  bool first = true;
  for (;;) {
    c.skip_ws();
    if (c.done()) {
      if (first) {
        c.fail("expected a term");
      }
      break;
    }
    double sign = 1.0;
    if (c.peek() == '+' || c.peek() == '-') {
      sign = c.peek() == '-' ? -1.0 : 1.0;
      ++c.pos;
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }
    c.skip_ws();
    if (c.done()) {
      c.fail("expected a term");
    }

    bool have_number = false;
    double coeff = 1.0;
    const char ch = c.peek();
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      coeff = parse_number(c);
      have_number = true;
    }
    int degree = 0;
    c.skip_ws();
    if (!c.done() && (c.peek() == 'x' || c.peek() == 'X')) {
      ++c.pos;
      degree = 1;
      c.skip_ws();
      if (!c.done() && c.peek() == '^') {
        ++c.pos;
        degree = parse_exponent(c);
      }
    } else if (!have_number) {
      c.fail("expected a number or 'x'");
    }
    acc[degree] += sign * coeff;
    first = false;
  }

  const int top = acc.rbegin()->first;
  std::vector<double> coeffs(static_cast<std::size_t>(top) + 1, 0.0);
  for (const auto& [degree, value] : acc) {
    coeffs[static_cast<std::size_t>(degree)] = value;
  }
  return coeffs;
}

std::string shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

bool is_list_syntax(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
    ++i;
  }
  return i < text.size() && text[i] == '[';
}

std::vector<double> parse_poly(std::string_view text) {
  Cursor c{text};
  c.skip_ws();
  if (c.done()) {
    throw EmptyInputError{};
  }
  if (c.peek() == '[') {
    return parse_list(c);
  }
  return parse_expression(c);
}

std::string format_poly(const Polynomial& p) {
  std::string out;
  for (int d = p.degree(); d >= 0; --d) {
    const double c = p.coeff(d);
    if (c == 0.0) {
      continue;
    }
    const double mag = std::fabs(c);
    if (out.empty()) {
      if (c < 0.0) {
        out += "-";
      }
    } else {
      out += c < 0.0 ? " - " : " + ";
    }
    if (d == 0 || mag != 1.0) {
      out += shortest(mag);
    }
    if (d >= 1) {
      out += "x";
      if (d >= 2) {
        out += "^" + std::to_string(d);
      }
    }
  }
  return out;
}

}  // namespace rootbounds
