// Copyright (c) 2026 The bigoh Authors.
// Licensed under the Apache License, Version 2.0.

#include "bigoh/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bigoh {
namespace {

// Floor division; requires b > 0.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

BigInt pow10(unsigned e) { return boost::multiprecision::pow(BigInt(10), e); }

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view s = text.substr(begin, end - begin);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  bool negative = false;
  if (s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }

  std::string num, den("1");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view p = s.substr(0, slash), q = s.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q))
      throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    num = std::string(p);
    den = std::string(q);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (!all_digits(ip) || !all_digits(fp))
      throw std::invalid_argument("malformed decimal literal '" + std::string(text) + "'");
    num = std::string(ip) + std::string(fp);
    den = pow10(static_cast<unsigned>(fp.size())).str();
  } else {
    if (!all_digits(s))
      throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    num = std::string(s);
  }

  BigInt n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(n, d);
}

std::string to_string(const Rational& value) { return value.str(); }

Rational rat_pow(const Rational& base, unsigned exponent) {
  using boost::multiprecision::pow;
  return Rational(pow(numerator(base), exponent), pow(denominator(base), exponent));
}

std::string decimal2(const Rational& value) {
  const BigInt p = numerator(value), q = denominator(value);  // q > 0
  BigInt n = floor_div(200 * p + q, 2 * q);  // round_half_up(100 * value)
  std::string sign;
  if (n < 0) {
    sign = "-";
    n = -n;
  }
  BigInt ip = n / 100;
  long fp = static_cast<long>(n % 100);
  char frac[4];
  std::snprintf(frac, sizeof frac, "%02ld", fp);
  return sign + ip.str() + "." + frac;
}

std::string decimal_sig6(const Rational& value) {
  if (value == 0) return "0";
  std::string sign;
  Rational v = value;
  if (v < 0) {
    sign = "-";
    v = -v;
  }
  const BigInt p = numerator(v), q = denominator(v);

  // Decimal exponent d with 10^(d-1) <= v < 10^d, exact comparisons.
  auto at_least_pow10 = [&](long e) {
    return e >= 0 ? p >= q * pow10(static_cast<unsigned>(e))
                  : p * pow10(static_cast<unsigned>(-e)) >= q;
  };
  long d = static_cast<long>(p.str().size()) - static_cast<long>(q.str().size()) + 1;
  while (!at_least_pow10(d - 1)) --d;
  while (at_least_pow10(d)) ++d;

  // Mantissa: round_half_up(v * 10^(6-d)), a 6-digit integer.
  const long e = 6 - d;
  const BigInt num = e >= 0 ? p * pow10(static_cast<unsigned>(e)) : p;
  const BigInt den = e >= 0 ? q : q * pow10(static_cast<unsigned>(-e));
  BigInt m = floor_div(2 * num + den, 2 * den);
  if (m == 1000000) {
    m = 100000;
    ++d;
  }
  const std::string digits = m.str();

  if (d > 15 || d < -3) {
    char exp[8];
    std::snprintf(exp, sizeof exp, "e%+03ld", d - 1);
    return sign + digits.substr(0, 1) + "." + digits.substr(1) + exp;
  }
  if (d >= 6) return sign + digits + std::string(static_cast<std::size_t>(d - 6), '0');
  if (d >= 1)
    return sign + digits.substr(0, static_cast<std::size_t>(d)) + "." +
           digits.substr(static_cast<std::size_t>(d));
  return sign + "0." + std::string(static_cast<std::size_t>(-d), '0') + digits;
}

}  // namespace bigoh
