// Copyright (c) 2026 The bigoh Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bigoh/independence.hpp"
#include "bigoh/term.hpp"

namespace bigoh {

/// Parameters of a two-variable irreducible family: exponents follow
/// a_i = a1 * (2 - alpha^(i-1)) and b_i = b1 * beta^(i-1) with
/// 0 < alpha < beta < 1 - alpha < 1.
struct FamilySpec {
  unsigned k = 0;
  Rational alpha;
  Rational beta;
  Rational a1;
  Rational b1;
  std::optional<Rational> valuation_cap;  // all witnesses must stay below it
};

struct Family {
  FamilySpec spec;
  std::vector<std::pair<Rational, Rational>> exponents;  // (a_i, b_i), a ascending

  /// The family as a sum with unit coefficients.
  TermSum as_term_sum() const;
};

/// r between family members i and j (0-based, i != j).
Rational family_ratio(const Family& f, std::size_t i, std::size_t j);

Family gen_theorem1(unsigned k, const Rational& alpha, const Rational& beta,
                    const Rational& a1, const Rational& b1);

/// Integer-exponent variant: alpha = p_alpha/q_alpha, beta = p_beta/q_beta,
/// a1 = q_alpha^(k-1), b1 = q_beta^(k-1).
Family gen_theorem2(unsigned k, const BigInt& p_alpha, const BigInt& q_alpha,
                    const BigInt& p_beta, const BigInt& q_beta);

struct WitnessPlan {
  std::vector<Rational> z;
  std::vector<FeasibleInterval> intervals;
};

/// Witnesses straight off the interval recipe: z_1 below r(1,2), z_k above
/// r(k-1,k), and r(i-1,k) < z_i < r(i,i+1) in between (midpoints). When the
/// family carries a valuation cap every z stays below it.
WitnessPlan witness_plan(const Family& f);

struct Theorem3Result {
  Family family;
  WitnessPlan plan;
  /// Numeric value of 2 + log_{beta/alpha}((a1/b1) * ((1-alpha)/(1-beta)) * cap).
  /// k always stays strictly below it.
  double bound = 0;
};

/// Finds alpha and beta keeping all witnesses below `cap`; requires
/// b1 < cap * a1. The search fixes beta = alpha*(1+eps), halving eps from
/// 1/4 and scanning alpha over {1/4 + m/100 : 0 <= m <= 24} until the exact
/// inequality r(k-1,k) < cap holds.
Theorem3Result gen_theorem3(unsigned k, const Rational& cap, const Rational& a1,
                            const Rational& b1);

std::pair<Rational, Rational> theorem3_search(unsigned k, const Rational& cap,
                                              const Rational& a1, const Rational& b1);
double theorem3_bound(const Rational& alpha, const Rational& beta, const Rational& a1,
                      const Rational& b1, const Rational& cap);

/// M[j][i] = a_j * z_i + b_j (0-based). Throws on |z| != k.
std::vector<std::vector<Rational>> envelope_table(const Family& f,
                                                  const std::vector<Rational>& z);

struct RatioRecord {
  unsigned i = 0;  // 1-based, i < j
  unsigned j = 0;
  Rational r;
};

struct PlotData {
  std::vector<RatioRecord> ratios;
  std::vector<Rational> z;
};

PlotData plot_data(const Family& f);

/// CSV with one row per family member: j, a_j, b_j, then one column per
/// witness holding a_j*z_i + b_j at two decimals (column headers "i: z_i").
std::string envelope_table_csv(const Family& f, const std::vector<Rational>& z);
/// CSV "i,j,r_exact,r_decimal".
std::string ratios_csv(const PlotData& d);
/// CSV "i,z_exact,z_decimal".
std::string witnesses_csv(const PlotData& d);

}  // namespace bigoh
