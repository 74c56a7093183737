// Copyright (c) 2026 The bigoh Authors.
// Licensed under the Apache License, Version 2.0.

#include "bigoh/family.hpp"

#include <cmath>
#include <stdexcept>

namespace bigoh {
namespace {

void check_chain(const Rational& alpha, const Rational& beta) {
  if (!(alpha > 0))
    throw std::invalid_argument("family constraint 0 < alpha violated (alpha = " +
                                to_string(alpha) + ")");
  if (!(alpha < beta))
    throw std::invalid_argument("family constraint alpha < beta violated (alpha = " +
                                to_string(alpha) + ", beta = " + to_string(beta) + ")");
  if (!(beta < 1 - alpha))
    throw std::invalid_argument("family constraint beta < 1 - alpha violated (beta = " +
                                to_string(beta) + ", 1 - alpha = " + to_string(Rational(1 - alpha)) +
                                ")");
}

// r(k-1,k) in closed form: (b1/a1) * (beta/alpha)^(k-2) * (1-beta)/(1-alpha).
Rational last_ratio(unsigned k, const Rational& alpha, const Rational& beta,
                    const Rational& a1, const Rational& b1) {
  return (b1 / a1) * rat_pow(beta / alpha, k - 2) * (1 - beta) / (1 - alpha);
}

}  // namespace

TermSum Family::as_term_sum() const {
  std::vector<Term> terms;
  terms.reserve(exponents.size());
  for (const auto& [a, b] : exponents) terms.push_back(Term{Rational(1), a, b});
  return TermSum(std::move(terms));
}

Rational family_ratio(const Family& f, std::size_t i, std::size_t j) {
  return ratio_r(f.exponents.at(i).first, f.exponents.at(i).second,
                 f.exponents.at(j).first, f.exponents.at(j).second);
}

Family gen_theorem1(unsigned k, const Rational& alpha, const Rational& beta,
                    const Rational& a1, const Rational& b1) {
  if (k < 1) throw std::invalid_argument("family size k must be at least 1");
  if (!(a1 > 0) || !(b1 > 0))
    throw std::invalid_argument("family requires positive a1 and b1");
  check_chain(alpha, beta);

  Family f;
  f.spec = FamilySpec{k, alpha, beta, a1, b1, std::nullopt};
  for (unsigned i = 0; i < k; ++i)
    f.exponents.emplace_back(a1 * (2 - rat_pow(alpha, i)), b1 * rat_pow(beta, i));
  return f;
}

Family gen_theorem2(unsigned k, const BigInt& p_alpha, const BigInt& q_alpha,
                    const BigInt& p_beta, const BigInt& q_beta) {
  if (k < 1) throw std::invalid_argument("family size k must be at least 1");
  if (q_alpha == 0 || q_beta == 0) throw std::invalid_argument("zero denominator");
  Rational alpha(p_alpha, q_alpha), beta(p_beta, q_beta);
  Rational a1 = rat_pow(Rational(q_alpha), k - 1);
  Rational b1 = rat_pow(Rational(q_beta), k - 1);
  return gen_theorem1(k, alpha, beta, a1, b1);
}

WitnessPlan witness_plan(const Family& f) {
  const unsigned k = f.spec.k;
  const auto& cap = f.spec.valuation_cap;
  TermSum sum = f.as_term_sum();

  WitnessPlan plan;
  for (unsigned i = 0; i < k; ++i) plan.intervals.push_back(feasible_interval(sum, i));

  if (k < 2) {
    plan.z.push_back(cap && *cap <= 1 ? *cap / 2 : Rational(1));
    return plan;
  }

  auto r = [&](unsigned i, unsigned j) { return family_ratio(f, i, j); };
  plan.z.push_back(r(0, 1) / 2);
  for (unsigned i = 1; i + 1 < k; ++i)
    plan.z.push_back((r(i - 1, k - 1) + r(i, i + 1)) / 2);
  Rational last = r(k - 2, k - 1);
  if (cap) {
    Rational step = (*cap - last) / 2;
    plan.z.push_back(last + (step < 1 ? step : Rational(1)));
  } else {
    plan.z.push_back(last + 1);
  }
  return plan;
}

std::pair<Rational, Rational> theorem3_search(unsigned k, const Rational& cap,
                                              const Rational& a1, const Rational& b1) {
  if (!(cap > 0)) throw std::invalid_argument("valuation cap must be positive");
  if (!(b1 < cap * a1))
    throw std::invalid_argument("theorem-3 precondition b1 < cap * a1 violated");

  Rational eps(1, 4);
  for (int halvings = 0; halvings <= 64; ++halvings, eps /= 2) {
    for (int m = 0; m <= 24; ++m) {
      Rational alpha = Rational(1, 4) + Rational(m, 100);
      Rational beta = alpha * (1 + eps);
      if (!(beta < 1 - alpha)) continue;
      if (k < 2 || last_ratio(k, alpha, beta, a1, b1) < cap) return {alpha, beta};
    }
  }
  throw std::runtime_error("no alpha, beta found with r(k-1,k) below the cap");
}

double theorem3_bound(const Rational& alpha, const Rational& beta, const Rational& a1,
                      const Rational& b1, const Rational& cap) {
  double arg = ((a1 / b1) * ((1 - alpha) / (1 - beta)) * cap).convert_to<double>();
  double base = (beta / alpha).convert_to<double>();
  return 2.0 + std::log(arg) / std::log(base);
}

Theorem3Result gen_theorem3(unsigned k, const Rational& cap, const Rational& a1,
                            const Rational& b1) {
  auto [alpha, beta] = theorem3_search(k, cap, a1, b1);
  Family f = gen_theorem1(k, alpha, beta, a1, b1);
  f.spec.valuation_cap = cap;

  Theorem3Result result{f, witness_plan(f), theorem3_bound(alpha, beta, a1, b1, cap)};
  for (const Rational& z : result.plan.z)
    if (!(z < cap)) throw std::logic_error("witness exceeds the valuation cap");
  return result;
}

std::vector<std::vector<Rational>> envelope_table(const Family& f,
                                                  const std::vector<Rational>& z) {
  if (z.size() != f.spec.k)
    throw std::invalid_argument("witness list length must equal the family size");
  std::vector<std::vector<Rational>> m(f.spec.k, std::vector<Rational>(z.size()));
  for (std::size_t j = 0; j < f.spec.k; ++j)
    for (std::size_t i = 0; i < z.size(); ++i)
      m[j][i] = f.exponents[j].first * z[i] + f.exponents[j].second;
  return m;
}

PlotData plot_data(const Family& f) {
  PlotData d;
  for (unsigned i = 0; i + 1 < f.spec.k; ++i)
    for (unsigned j = i + 1; j < f.spec.k; ++j)
      d.ratios.push_back(RatioRecord{i + 1, j + 1, family_ratio(f, i, j)});
  d.z = witness_plan(f).z;
  return d;
}

std::string envelope_table_csv(const Family& f, const std::vector<Rational>& z) {
  auto m = envelope_table(f, z);
  std::string out = "j,a_j,b_j";
  for (std::size_t i = 0; i < z.size(); ++i)
    out += "," + std::to_string(i + 1) + ": " + decimal2(z[i]);
  out += "\n";
  for (std::size_t j = 0; j < f.spec.k; ++j) {
    out += std::to_string(j + 1) + "," + to_string(f.exponents[j].first) + "," +
           to_string(f.exponents[j].second);
    for (std::size_t i = 0; i < z.size(); ++i) out += "," + decimal2(m[j][i]);
    out += "\n";
  }
  return out;
}

std::string ratios_csv(const PlotData& d) {
  std::string out = "i,j,r_exact,r_decimal\n";
  for (const RatioRecord& rec : d.ratios)
    out += std::to_string(rec.i) + "," + std::to_string(rec.j) + "," + to_string(rec.r) +
           "," + decimal_sig6(rec.r) + "\n";
  return out;
}

std::string witnesses_csv(const PlotData& d) {
  std::string out = "i,z_exact,z_decimal\n";
  for (std::size_t i = 0; i < d.z.size(); ++i)
    out += std::to_string(i + 1) + "," + to_string(d.z[i]) + "," + decimal_sig6(d.z[i]) +
           "\n";
  return out;
}

}  // namespace bigoh
