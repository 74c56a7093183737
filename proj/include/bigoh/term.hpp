// Copyright (c) 2026 The bigoh Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bigoh/rational.hpp"

namespace bigoh {

/// One monomial c * x^a * y^b with c > 0, a >= 0, b >= 0.
struct Term {
  Rational coeff;
  Rational exp_x;
  Rational exp_y;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sum of monomials in canonical form: terms sorted by (exp_x, exp_y)
/// ascending, no two terms sharing an exponent pair (duplicates are merged
/// by adding coefficients at construction). Immutable after construction.
class TermSum {
 public:
  TermSum() = default;
  /// Throws std::invalid_argument on a nonpositive coefficient or a
  /// negative exponent.
  explicit TermSum(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const Term& operator[](std::size_t i) const { return terms_[i]; }

  /// The sum with term `index` removed.
  TermSum without(std::size_t index) const;

  friend bool operator==(const TermSum&, const TermSum&) = default;

 private:
  std::vector<Term> terms_;
};

/// Raised for malformed or semantically invalid expressions; `position` is
/// the byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar: sum := product ('+' product)*; product := factor ('*' factor)*;
/// factor := rational | var | var '^' exponent; var := 'x' | 'y';
/// exponent := integer | '(' integer '/' integer ')'; whitespace ignored.
/// The bare expression "0" denotes the empty sum.
TermSum parse_sum(std::string_view text);

/// Inverse of parse_sum up to canonical form. Terms print with exp_x
/// descending ("x^2 + 2*x*y + y^2"); the empty sum prints as "0".
std::string print_sum(const TermSum& sum);

/// Evaluates at x, y >= 1 in MPFR arithmetic. precision_bits >= 53; each
/// power is computed with relative error below 2^(1 - precision_bits).
Float eval_sum(const TermSum& sum, const Rational& x, const Rational& y,
               unsigned precision_bits = 128);
Float eval_term(const Term& term, const Rational& x, const Rational& y,
                unsigned precision_bits = 128);

}  // namespace bigoh
