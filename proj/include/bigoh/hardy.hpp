// Copyright (c) 2026 The bigoh Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bigoh/rational.hpp"

namespace bigoh {

/// Single-variable growth term
///   coeff * n^poly_exp * (log n)^log_exp * exp_base^(n^exp_arg_exp)
/// from the polynomial / polylogarithmic / exponential fragment.
/// Normal form: exp_base == 1 iff exp_arg_exp == 0 (no exponential part).
struct UniTerm {
  Rational coeff;
  Rational poly_exp;
  Rational log_exp;
  Rational exp_base = 1;
  Rational exp_arg_exp = 0;

  friend bool operator==(const UniTerm&, const UniTerm&) = default;

  /// Validates and normalizes (a constant exponential folds into the
  /// coefficient). Throws std::invalid_argument on coeff <= 0,
  /// exp_base < 1 or exp_arg_exp < 0.
  static UniTerm make(Rational coeff, Rational poly_exp, Rational log_exp,
                      Rational exp_base, Rational exp_arg_exp);
};

enum class GrowthOrder { Less, Equal, Greater };

/// Total asymptotic comparison of f against g, coefficients ignored:
/// exponential n-power first, then base, then polynomial exponent, then
/// log exponent.
GrowthOrder compare(const UniTerm& f, const UniTerm& g);

/// The dominant term of a nonempty sum; coefficients of growth-equal
/// maxima are added. The result G satisfies sum = O(G) and G = O(sum).
UniTerm reduce_single(const std::vector<UniTerm>& terms);

/// Grammar: sum of products of "n^a", "log(n)^b" and "c^(n^d)" factors
/// (also "c^n" and "c^(n)"), e.g. "4*n^3 + log(n)^5 + 2^(n^2)".
std::vector<UniTerm> parse_uni_sum(std::string_view text);
std::string print_uni_term(const UniTerm& term);
std::string print_uni_sum(const std::vector<UniTerm>& terms);

/// Natural log of the term value at n (> 1); backs the sampling checks.
double log_eval(const UniTerm& term, double n);

}  // namespace bigoh
