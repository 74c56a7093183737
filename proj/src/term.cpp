// Copyright (c) 2026 The bigoh Authors.
// Licensed under the Apache License, Version 2.0.

#include "bigoh/term.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace bigoh {
namespace {

unsigned digits10_for(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30103)) + 1;
}

// Restores the thread-local default MPFR precision on scope exit.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned digits10) : saved_(Float::default_precision()) {
    Float::default_precision(digits10);
  }
  ~PrecisionGuard() { Float::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
};

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

BigInt parse_unsigned(Cursor& c) {
  if (c.at_end() || !is_digit(c.peek()))
    throw ParseError("expected a number", c.pos);
  std::size_t start = c.pos;
  while (!c.at_end() && is_digit(c.peek())) ++c.pos;
  return BigInt(std::string(c.text.substr(start, c.pos - start)));
}

BigInt parse_integer(Cursor& c) {
  bool negative = false;
  if (!c.at_end() && c.peek() == '-') {
    negative = true;
    ++c.pos;
  }
  BigInt v = parse_unsigned(c);
  return negative ? BigInt(-v) : v;
}

// integer ['/' integer]; used both for coefficients and bare rationals.
Rational parse_rational_literal(Cursor& c) {
  BigInt num = parse_integer(c);
  if (!c.at_end() && c.peek() == '/') {
    std::size_t slash = c.pos;
    ++c.pos;
    BigInt den = parse_integer(c);
    if (den == 0) throw ParseError("zero denominator", slash + 1);
    return Rational(num, den);
  }
  return Rational(num);
}

// exponent := integer | '(' integer '/' integer ')'
Rational parse_exponent(Cursor& c) {
  c.skip_ws();
  if (c.at_end()) throw ParseError("expected an exponent", c.pos);
  std::size_t start = c.pos;
  Rational e;
  if (c.peek() == '(') {
    ++c.pos;
    c.skip_ws();
    BigInt num = parse_integer(c);
    c.skip_ws();
    if (c.at_end() || c.peek() != '/')
      throw ParseError("expected '/' in a fractional exponent", c.pos);
    ++c.pos;
    c.skip_ws();
    BigInt den = parse_integer(c);
    if (den == 0) throw ParseError("zero denominator", c.pos);
    c.skip_ws();
    if (c.at_end() || c.peek() != ')')
      throw ParseError("expected ')'", c.pos);
    ++c.pos;
    e = Rational(num, den);
  } else {
    e = Rational(parse_integer(c));
  }
  if (e < 0) throw ParseError("negative exponent", start);
  return e;
}

Term parse_product(Cursor& c) {
  Rational coeff(1), ex(0), ey(0);
  while (true) {
    c.skip_ws();
    if (c.at_end()) throw ParseError("unexpected end of expression", c.pos);
    std::size_t start = c.pos;
    char ch = c.peek();
    if (is_digit(ch) || ch == '-') {
      Rational r = parse_rational_literal(c);
      if (r <= 0) throw ParseError("nonpositive coefficient", start);
      coeff *= r;
    } else if (ch == 'x' || ch == 'y') {
      ++c.pos;
      Rational e(1);
      c.skip_ws();
      if (!c.at_end() && c.peek() == '^') {
        ++c.pos;
        e = parse_exponent(c);
      }
      (ch == 'x' ? ex : ey) += e;
    } else if (std::isalpha(static_cast<unsigned char>(ch))) {
      throw ParseError(std::string("unknown variable '") + ch + "' (only x and y are allowed)",
                       start);
    } else {
      throw ParseError("expected a coefficient or a variable", start);
    }
    c.skip_ws();
    if (!c.at_end() && c.peek() == '*') {
      ++c.pos;
      continue;
    }
    break;
  }
  return Term{coeff, ex, ey};
}

std::string exponent_str(const Rational& e) {
  if (e == 1) return "";
  if (denominator(e) == 1) return "^" + to_string(e);
  return "^(" + to_string(e) + ")";
}

std::string term_str(const Term& t) {
  std::string out;
  if (t.coeff != 1 || (t.exp_x == 0 && t.exp_y == 0)) out = to_string(t.coeff);
  if (t.exp_x != 0) {
    if (!out.empty()) out += "*";
    out += "x" + exponent_str(t.exp_x);
  }
  if (t.exp_y != 0) {
    if (!out.empty()) out += "*";
    out += "y" + exponent_str(t.exp_y);
  }
  return out;
}

}  // namespace

TermSum::TermSum(std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (t.coeff <= 0) throw std::invalid_argument("term coefficient must be positive");
    if (t.exp_x < 0 || t.exp_y < 0)
      throw std::invalid_argument("term exponents must be nonnegative");
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    if (a.exp_x != b.exp_x) return a.exp_x < b.exp_x;
    return a.exp_y < b.exp_y;
  });
  for (Term& t : terms) {
    if (!terms_.empty() && terms_.back().exp_x == t.exp_x && terms_.back().exp_y == t.exp_y)
      terms_.back().coeff += t.coeff;
    else
      terms_.push_back(std::move(t));
  }
}

TermSum TermSum::without(std::size_t index) const {
  if (index >= terms_.size()) throw std::out_of_range("term index out of range");
  std::vector<Term> rest;
  rest.reserve(terms_.size() - 1);
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (i != index) rest.push_back(terms_[i]);
  return TermSum(std::move(rest));
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

TermSum parse_sum(std::string_view text) {
  // The single token "0" denotes the empty sum (print_sum's inverse).
  {
    std::string stripped;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) stripped += ch;
    if (stripped == "0") return TermSum{};
  }
  Cursor c{text};
  std::vector<Term> terms;
  terms.push_back(parse_product(c));
  c.skip_ws();
  while (!c.at_end() && c.peek() == '+') {
    ++c.pos;
    terms.push_back(parse_product(c));
    c.skip_ws();
  }
  if (!c.at_end()) throw ParseError("unexpected trailing input", c.pos);
  return TermSum(std::move(terms));
}

std::string print_sum(const TermSum& sum) {
  if (sum.empty()) return "0";
  std::string out;
  const auto& terms = sum.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += term_str(*it);
  }
  return out;
}

Float eval_term(const Term& term, const Rational& x, const Rational& y,
                unsigned precision_bits) {
  if (x < 1 || y < 1) throw std::domain_error("evaluation requires x >= 1 and y >= 1");
  if (precision_bits < 53) throw std::invalid_argument("precision must be at least 53 bits");
  // Work with 64 guard bits so conversion and pow rounding stay below the
  // advertised 2^(1-p) relative error, then round once to the target.
  PrecisionGuard guard(digits10_for(precision_bits + 64));
  Float result(term.coeff);
  if (term.exp_x != 0) result *= pow(Float(x), Float(term.exp_x));
  if (term.exp_y != 0) result *= pow(Float(y), Float(term.exp_y));
  result.precision(digits10_for(precision_bits));
  return result;
}

Float eval_sum(const TermSum& sum, const Rational& x, const Rational& y,
               unsigned precision_bits) {
  if (x < 1 || y < 1) throw std::domain_error("evaluation requires x >= 1 and y >= 1");
  if (precision_bits < 53) throw std::invalid_argument("precision must be at least 53 bits");
  PrecisionGuard guard(digits10_for(precision_bits + 64));
  Float total(0);
  for (const Term& t : sum.terms()) {
    Float v(t.coeff);
    if (t.exp_x != 0) v *= pow(Float(x), Float(t.exp_x));
    if (t.exp_y != 0) v *= pow(Float(y), Float(t.exp_y));
    total += v;
  }
  total.precision(digits10_for(precision_bits));
  return total;
}

}  // namespace bigoh
