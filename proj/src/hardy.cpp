// Copyright (c) 2026 The bigoh Authors.
// Licensed under the Apache License, Version 2.0.

#include "bigoh/hardy.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "bigoh/term.hpp"

namespace bigoh {
namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  bool consume(char c) {
    if (!at_end() && peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

BigInt parse_integer(Cursor& c) {
  bool negative = c.consume('-');
  if (c.at_end() || !is_digit(c.peek())) throw ParseError("expected a number", c.pos);
  std::size_t start = c.pos;
  while (!c.at_end() && is_digit(c.peek())) ++c.pos;
  BigInt v(std::string(c.text.substr(start, c.pos - start)));
  return negative ? BigInt(-v) : v;
}

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

// exponent := integer | '(' integer '/' integer ')'; negatives allowed here
// (poly_exp and log_exp are unrestricted).
Rational parse_exponent(Cursor& c) {
  c.skip_ws();
  if (c.at_end()) throw ParseError("expected an exponent", c.pos);
  if (c.peek() == '(') {
    ++c.pos;
    c.skip_ws();
    BigInt num = parse_integer(c);
    c.skip_ws();
    if (!c.consume('/')) throw ParseError("expected '/' in a fractional exponent", c.pos);
    c.skip_ws();
    BigInt den = parse_integer(c);
    if (den == 0) throw ParseError("zero denominator", c.pos);
    c.skip_ws();
    if (!c.consume(')')) throw ParseError("expected ')'", c.pos);
    return Rational(num, den);
  }
  return Rational(parse_integer(c));
}

// Exponent of n inside an exponential factor: "n" or "n^d", optionally in
// parentheses.
Rational parse_exp_argument(Cursor& c) {
  c.skip_ws();
  bool parens = c.consume('(');
  c.skip_ws();
  if (c.at_end() || c.peek() != 'n')
    throw ParseError("expected n in the exponent of an exponential factor", c.pos);
  ++c.pos;
  Rational arg(1);
  c.skip_ws();
  if (!c.at_end() && c.peek() == '^') {
    ++c.pos;
    arg = parse_exponent(c);
  }
  if (parens) {
    c.skip_ws();
    if (!c.consume(')')) throw ParseError("expected ')'", c.pos);
  }
  return arg;
}

UniTerm parse_uni_product(Cursor& c) {
  Rational coeff(1), poly(0), lg(0), base(1), arg(0);
  bool has_exp = false;
  while (true) {
    c.skip_ws();
    if (c.at_end()) throw ParseError("unexpected end of expression", c.pos);
    std::size_t start = c.pos;
    char ch = c.peek();
    if (is_digit(ch) || ch == '-') {
      Rational r = parse_rational_literal(c);
      c.skip_ws();
      if (!c.at_end() && c.peek() == '^') {
        ++c.pos;
        Rational a = parse_exp_argument(c);
        if (r < 1) throw ParseError("exponential base must be at least 1", start);
        if (a < 0) throw ParseError("negative exponent of n in an exponential factor", start);
        if (has_exp && arg != a)
          throw ParseError("exponential factors with different n-powers cannot be combined",
                           start);
        if (has_exp)
          base *= r;
        else {
          base = r;
          arg = a;
          has_exp = true;
        }
      } else {
        if (r <= 0) throw ParseError("nonpositive coefficient", start);
        coeff *= r;
      }
    } else if (ch == 'n') {
      ++c.pos;
      Rational e(1);
      c.skip_ws();
      if (!c.at_end() && c.peek() == '^') {
        ++c.pos;
        e = parse_exponent(c);
      }
      poly += e;
    } else if (c.text.substr(c.pos, 4) == "log(") {
      c.pos += 4;
      c.skip_ws();
      if (c.at_end() || c.peek() != 'n') throw ParseError("expected n inside log(...)", c.pos);
      ++c.pos;
      c.skip_ws();
      if (!c.consume(')')) throw ParseError("expected ')'", c.pos);
      Rational e(1);
      c.skip_ws();
      if (!c.at_end() && c.peek() == '^') {
        ++c.pos;
        e = parse_exponent(c);
      }
      lg += e;
    } else {
      throw ParseError("expected a factor (number, n, log(n) or c^(n^d))", start);
    }
    c.skip_ws();
    if (c.consume('*')) continue;
    break;
  }
  return UniTerm::make(coeff, poly, lg, base, arg);
}

std::string exponent_str(const Rational& e) {
  if (e == 1) return "";
  if (denominator(e) == 1) return "^" + to_string(e);
  return "^(" + to_string(e) + ")";
}

}  // namespace

UniTerm UniTerm::make(Rational coeff, Rational poly_exp, Rational log_exp,
                      Rational exp_base, Rational exp_arg_exp) {
  if (coeff <= 0) throw std::invalid_argument("coefficient must be positive");
  if (exp_base < 1) throw std::invalid_argument("exponential base must be at least 1");
  if (exp_arg_exp < 0) throw std::invalid_argument("exponential n-power must be nonnegative");
  if (exp_arg_exp == 0 && exp_base != 1) {
    coeff *= exp_base;  // base^(n^0) is a constant factor
    exp_base = 1;
  }
  if (exp_base == 1) exp_arg_exp = 0;
  return UniTerm{std::move(coeff), std::move(poly_exp), std::move(log_exp),
                 std::move(exp_base), std::move(exp_arg_exp)};
}

GrowthOrder compare(const UniTerm& f, const UniTerm& g) {
  // A larger n-power in the exponent wins regardless of base; normalization
  // guarantees base > 1 whenever the power is positive.
  if (f.exp_arg_exp != g.exp_arg_exp)
    return f.exp_arg_exp < g.exp_arg_exp ? GrowthOrder::Less : GrowthOrder::Greater;
  if (f.exp_arg_exp > 0 && f.exp_base != g.exp_base)
    return f.exp_base < g.exp_base ? GrowthOrder::Less : GrowthOrder::Greater;
  if (f.poly_exp != g.poly_exp)
    return f.poly_exp < g.poly_exp ? GrowthOrder::Less : GrowthOrder::Greater;
  if (f.log_exp != g.log_exp)
    return f.log_exp < g.log_exp ? GrowthOrder::Less : GrowthOrder::Greater;
  return GrowthOrder::Equal;
}

UniTerm reduce_single(const std::vector<UniTerm>& terms) {
  if (terms.empty()) throw std::invalid_argument("reduce_single requires a nonempty sum");
  UniTerm best = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    switch (compare(terms[i], best)) {
      case GrowthOrder::Greater:
        best = terms[i];
        break;
      case GrowthOrder::Equal:
        best.coeff += terms[i].coeff;
        break;
      case GrowthOrder::Less:
        break;
    }
  }
  return best;
}

std::vector<UniTerm> parse_uni_sum(std::string_view text) {
  Cursor c{text};
  std::vector<UniTerm> terms;
  terms.push_back(parse_uni_product(c));
  c.skip_ws();
  while (!c.at_end() && c.peek() == '+') {
    ++c.pos;
    terms.push_back(parse_uni_product(c));
    c.skip_ws();
  }
  if (!c.at_end()) throw ParseError("unexpected trailing input", c.pos);
  return terms;
}

std::string print_uni_term(const UniTerm& term) {
  std::string out;
  bool constant = term.poly_exp == 0 && term.log_exp == 0 && term.exp_base == 1;
  if (term.coeff != 1 || constant) out = to_string(term.coeff);
  auto append = [&out](const std::string& part) {
    if (!out.empty()) out += "*";
    out += part;
  };
  if (term.poly_exp != 0) append("n" + exponent_str(term.poly_exp));
  if (term.log_exp != 0) append("log(n)" + exponent_str(term.log_exp));
  if (term.exp_base != 1)
    append(to_string(term.exp_base) + "^(n" + exponent_str(term.exp_arg_exp) + ")");
  return out;
}

std::string print_uni_sum(const std::vector<UniTerm>& terms) {
  std::string out;
  for (const UniTerm& t : terms) {
    if (!out.empty()) out += " + ";
    out += print_uni_term(t);
  }
  return out.empty() ? "0" : out;
}

double log_eval(const UniTerm& term, double n) {
  if (!(n > 1)) throw std::domain_error("log_eval requires n > 1");
  double value = std::log(term.coeff.convert_to<double>()) +
                 term.poly_exp.convert_to<double>() * std::log(n) +
                 term.log_exp.convert_to<double>() * std::log(std::log(n));
  if (term.exp_base != 1)
    value += std::pow(n, term.exp_arg_exp.convert_to<double>()) *
             std::log(term.exp_base.convert_to<double>());
  return value;
}

}  // namespace bigoh
