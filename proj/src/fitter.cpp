// Copyright (c) 2026 The bigoh Authors.
// Licensed under the Apache License, Version 2.0.

#include "bigoh/fitter.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace bigoh {
namespace {

using ExponentPair = std::pair<Rational, Rational>;

// ln of sum over `pairs` of x^a * y^b at one data point, via log-sum-exp.
double log_bound_value(const std::vector<ExponentPair>& pairs, double lx, double ly) {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& [a, b] : pairs)
    m = std::max(m, a.convert_to<double>() * lx + b.convert_to<double>() * ly);
  double s = 0;
  for (const auto& [a, b] : pairs)
    s += std::exp(a.convert_to<double>() * lx + b.convert_to<double>() * ly - m);
  return m + std::log(s);
}

// Nearest-rank percentile of a sorted-ascending vector.
double percentile(std::vector<double> values, double pct) {
  std::sort(values.begin(), values.end());
  std::size_t rank = static_cast<std::size_t>(
      std::ceil(pct / 100.0 * static_cast<double>(values.size())));
  if (rank == 0) rank = 1;
  return values[rank - 1];
}

TermSum pairs_to_sum(const std::vector<ExponentPair>& pairs) {
  std::vector<Term> terms;
  for (const auto& [a, b] : pairs) terms.push_back(Term{Rational(1), a, b});
  return TermSum(std::move(terms));
}

}  // namespace

std::vector<std::vector<ExponentPair>> enumerate_irreducible_candidates(
    unsigned max_terms, const Rational& max_degree, const std::vector<unsigned>& lattice) {
  std::set<Rational> exponents;
  for (unsigned q : lattice) {
    if (q == 0) continue;
    for (BigInt p = 0; Rational(p, q) <= max_degree; ++p) exponents.insert(Rational(p, q));
  }

  // All exponent pairs, sorted a ascending then b descending. An
  // irreducible set is a chain with a strictly increasing, b strictly
  // decreasing and strictly decreasing slopes (every member a strict
  // vertex of the joint upper-right hull), so a DFS over that order
  // enumerates each set exactly once.
  std::vector<ExponentPair> pairs;
  for (const Rational& a : exponents)
    for (const Rational& b : exponents) pairs.emplace_back(a, b);
  std::sort(pairs.begin(), pairs.end(), [](const ExponentPair& p, const ExponentPair& q) {
    if (p.first != q.first) return p.first < q.first;
    return p.second > q.second;
  });

  std::vector<std::vector<ExponentPair>> out;
  if (max_terms == 0) return out;
  std::vector<ExponentPair> chain;

  auto extendable = [&](const ExponentPair& next) {
    if (chain.empty()) return true;
    const auto& [la, lb] = chain.back();
    if (!(next.first > la && next.second < lb)) return false;
    if (chain.size() < 2) return true;
    const auto& [pa, pb] = chain[chain.size() - 2];
    // slope(prev,last) > slope(last,next), cross-multiplied (denominators
    // positive since a is strictly increasing)
    return (lb - pb) * (next.first - la) > (next.second - lb) * (la - pa);
  };

  auto dfs = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t i = from; i < pairs.size(); ++i) {
      if (!extendable(pairs[i])) continue;
      chain.push_back(pairs[i]);
      out.push_back(chain);
      if (chain.size() < max_terms) self(self, i + 1);
      chain.pop_back();
    }
  };
  dfs(dfs, 0);
  return out;
}

FitResult fit(const std::vector<Measurement>& data, const FitOptions& options) {
  if (data.size() < 8) throw std::invalid_argument("fit requires at least 8 measurements");
  double min_x = data[0].x, max_x = data[0].x, min_y = data[0].y, max_y = data[0].y;
  for (const Measurement& m : data) {
    min_x = std::min(min_x, m.x);
    max_x = std::max(max_x, m.x);
    min_y = std::min(min_y, m.y);
    max_y = std::max(max_y, m.y);
  }
  if (max_x < 4 * min_x || max_y < 4 * min_y)
    throw std::invalid_argument("measurements must span at least a 4x range in x and in y");

  auto candidates =
      enumerate_irreducible_candidates(options.max_terms, options.max_degree, options.lattice);
  if (candidates.empty()) throw std::invalid_argument("empty candidate space");

  std::vector<double> lx(data.size()), ly(data.size()), lt(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    lx[i] = std::log(data[i].x);
    ly[i] = std::log(data[i].y);
    lt[i] = std::log(data[i].t);
  }

  const std::vector<ExponentPair>* best = nullptr;
  double best_score = 0, best_log_slack = 0;
  Rational best_degree;

  for (const auto& cand : candidates) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t i = 0; i < data.size(); ++i) {
      double d = log_bound_value(cand, lx[i], ly[i]) - lt[i];
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    double log_slack = hi - lo;
    double score = static_cast<double>(cand.size()) + log_slack;
    Rational degree(0);
    for (const auto& [a, b] : cand) degree = std::max(degree, Rational(a + b));
    if (!best || score < best_score || (score == best_score && degree < best_degree)) {
      best = &cand;
      best_score = score;
      best_log_slack = log_slack;
      best_degree = degree;
    }
  }

  FitResult result;
  result.bound = pairs_to_sum(*best);
  result.slack = std::exp(best_log_slack);
  std::vector<double> log_ratios(data.size());
  for (std::size_t i = 0; i < data.size(); ++i)
    log_ratios[i] = lt[i] - log_bound_value(*best, lx[i], ly[i]);
  result.constant = std::exp(options.robust
                                 ? percentile(log_ratios, 99.0)
                                 : *std::max_element(log_ratios.begin(), log_ratios.end()));
  return result;
}

ValidationReport validate_bound(const std::vector<Measurement>& data,
                                const FitResult& result) {
  std::vector<ExponentPair> pairs;
  for (const Term& t : result.bound.terms()) pairs.emplace_back(t.exp_x, t.exp_y);

  ValidationReport report;
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  const double lc = std::log(result.constant);
  for (std::size_t i = 0; i < data.size(); ++i) {
    double lg = log_bound_value(pairs, std::log(data[i].x), std::log(data[i].y));
    double d = std::log(data[i].t) - lg;
    lo = std::min(lo, -d);
    hi = std::max(hi, -d);
    report.max_ratio = std::max(report.max_ratio, std::exp(d));
    if (d > lc + 1e-9) report.violations.push_back(i);
  }
  report.slack = std::exp(hi - lo);
  return report;
}

std::vector<Measurement> read_measurements_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty measurement file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "x,y,t")
    throw std::runtime_error("measurement file must start with the header \"x,y,t\"");

  std::vector<Measurement> data;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    double values[3];
    for (int i = 0; i < 3; ++i) {
      if (!std::getline(row, field, ','))
        throw std::runtime_error("line " + std::to_string(line_no) + ": expected x,y,t");
      try {
        std::size_t used = 0;
        values[i] = std::stod(field, &used);
        if (used != field.size()) throw std::invalid_argument(field);
      } catch (const std::exception&) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": malformed number '" +
                                 field + "'");
      }
    }
    if (std::getline(row, field, ','))
      throw std::runtime_error("line " + std::to_string(line_no) + ": too many fields");
    if (values[0] < 1 || values[1] < 1)
      throw std::runtime_error("line " + std::to_string(line_no) + ": x and y must be >= 1");
    if (!(values[2] > 0))
      throw std::runtime_error("line " + std::to_string(line_no) + ": t must be positive");
    data.push_back(Measurement{values[0], values[1], values[2]});
  }
  return data;
}

}  // namespace bigoh
