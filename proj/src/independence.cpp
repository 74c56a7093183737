// Copyright (c) 2026 The bigoh Authors.
// Licensed under the Apache License, Version 2.0.

#include "bigoh/independence.hpp"

#include <algorithm>
#include <stdexcept>

namespace bigoh {
namespace {

// Builds a domination certificate for terms[index] against the terms named
// in `candidates`. Callers guarantee dependence, i.e. the exponent pair of
// the term lies in the downward closure of the candidates' convex hull.
DominationCert make_domination_cert(const TermSum& sum, std::size_t index,
                                    const std::vector<std::size_t>& candidates) {
  const auto& terms = sum.terms();
  const Rational& a = terms[index].exp_x;
  const Rational& b = terms[index].exp_y;

  // A single dominating term gives the smallest certificate.
  for (std::size_t j : candidates)
    if (j != index && terms[j].exp_x >= a && terms[j].exp_y >= b)
      return DominationCert{j, j, Rational(1)};

  struct Pt {
    Rational a, b;
    std::size_t idx;
  };
  std::vector<Pt> pts;
  for (std::size_t j : candidates)
    if (j != index) pts.push_back({terms[j].exp_x, terms[j].exp_y, j});
  std::sort(pts.begin(), pts.end(), [](const Pt& p, const Pt& q) {
    if (p.a != q.a) return p.a < q.a;
    return p.b > q.b;
  });

  // Pareto frontier: strictly decreasing b as a increases.
  std::vector<Pt> frontier;
  {
    std::vector<Pt> dedup;
    for (const Pt& p : pts)
      if (dedup.empty() || dedup.back().a != p.a) dedup.push_back(p);
    for (auto it = dedup.rbegin(); it != dedup.rend(); ++it)
      if (frontier.empty() || it->b > frontier.back().b) frontier.push_back(*it);
    std::reverse(frontier.begin(), frontier.end());
  }

  // Upper concave chain over the frontier (strictly decreasing slopes);
  // collinear middle points are not vertices and get popped.
  std::vector<Pt> hull;
  for (const Pt& p : frontier) {
    while (hull.size() >= 2) {
      const Pt& s = hull[hull.size() - 2];
      const Pt& t = hull.back();
      if ((t.b - s.b) * (p.a - t.a) > (p.b - t.b) * (t.a - s.a)) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }

  // The hull edge spanning abscissa a; j is the larger-a endpoint.
  for (std::size_t t = 0; t + 1 < hull.size(); ++t) {
    const Pt& left = hull[t];
    const Pt& right = hull[t + 1];
    if (!(left.a < a && a <= right.a)) continue;
    Rational lambda = (a - left.a) / (right.a - left.a);
    Rational vb = lambda * right.b + (1 - lambda) * left.b;
    if (vb >= b) return DominationCert{right.idx, left.idx, lambda};
  }
  throw std::logic_error("no domination certificate found for a dependent term");
}

}  // namespace

Rational ratio_r(const Rational& ai, const Rational& bi, const Rational& aj,
                 const Rational& bj) {
  if (ai == aj) throw std::domain_error("ratio r(i,j) is undefined when a_i = a_j");
  return (bi - bj) / (aj - ai);
}

bool FeasibleInterval::empty() const {
  if (!lower || !upper) return false;
  if (*lower < *upper) return false;
  if (*lower > *upper) return true;
  return lower_strict || upper_strict;
}

bool FeasibleInterval::contains(const Rational& z) const {
  if (lower && (lower_strict ? z <= *lower : z < *lower)) return false;
  if (upper && (upper_strict ? z >= *upper : z > *upper)) return false;
  return true;
}

FeasibleInterval feasible_interval(const TermSum& sum, std::size_t index) {
  const auto& terms = sum.terms();
  if (index >= terms.size()) throw std::out_of_range("term index out of range");
  const Term& me = terms[index];

  FeasibleInterval iv;
  iv.lower = Rational(0);  // clipped to the valuation domain z >= 0
  iv.lower_strict = false;
  iv.x_direction = true;
  bool impossible = false;

  for (std::size_t j = 0; j < terms.size(); ++j) {
    if (j == index) continue;
    const Term& other = terms[j];
    if (me.exp_x == other.exp_x) {
      iv.x_direction = false;
      // The constraint is z-free: it holds for every z iff b_i > b_j.
      if (me.exp_y <= other.exp_y) impossible = true;
      continue;
    }
    Rational r = ratio_r(me.exp_x, me.exp_y, other.exp_x, other.exp_y);
    if (me.exp_x > other.exp_x) {
      // z > r
      if (r > *iv.lower) {
        iv.lower = r;
        iv.lower_strict = true;
      } else if (r == *iv.lower) {
        iv.lower_strict = true;
      }
    } else {
      // z < r
      iv.x_direction = false;
      if (!iv.upper || r < *iv.upper) {
        iv.upper = r;
        iv.upper_strict = true;
      }
    }
  }

  if (impossible) {
    iv.lower = Rational(0);
    iv.lower_strict = true;
    iv.upper = Rational(0);
    iv.upper_strict = true;
    iv.x_direction = false;
  }
  return iv;
}

Verdict check_term(const TermSum& sum, std::size_t index) {
  FeasibleInterval iv = feasible_interval(sum, index);
  Verdict v;
  v.term_index = index;
  if (!iv.empty()) {
    v.independent = true;
    Witness w;
    w.kind = Witness::Kind::FiniteZ;
    if (!iv.upper)
      w.z = (*iv.lower == 0 && !iv.lower_strict) ? Rational(1) : *iv.lower + 1;
    else
      w.z = (*iv.lower + *iv.upper) / 2;
    v.witness = w;
  } else {
    v.independent = false;
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < sum.size(); ++j)
      if (j != index) others.push_back(j);
    v.domination = make_domination_cert(sum, index, others);
  }
  return v;
}

bool verify_verdict(const TermSum& sum, const Verdict& verdict) {
  const auto& terms = sum.terms();
  if (verdict.term_index >= terms.size()) return false;
  if (verdict.independent != verdict.witness.has_value()) return false;
  if (verdict.independent == verdict.domination.has_value()) return false;
  const Term& me = terms[verdict.term_index];

  if (verdict.independent) {
    const Witness& w = *verdict.witness;
    if (w.kind == Witness::Kind::FiniteZ && w.z < 0) return false;
    for (std::size_t j = 0; j < terms.size(); ++j) {
      if (j == verdict.term_index) continue;
      const Term& other = terms[j];
      if (w.kind == Witness::Kind::XDirection) {
        if (!(me.exp_x > other.exp_x)) return false;
      } else {
        if (!((me.exp_x - other.exp_x) * w.z + (me.exp_y - other.exp_y) > 0)) return false;
      }
    }
    return true;
  }

  const DominationCert& c = *verdict.domination;
  if (c.j >= terms.size() || c.l >= terms.size()) return false;
  if (c.j == verdict.term_index || c.l == verdict.term_index) return false;
  if (c.lambda < 0 || c.lambda > 1) return false;
  Rational ca = c.lambda * terms[c.j].exp_x + (1 - c.lambda) * terms[c.l].exp_x;
  Rational cb = c.lambda * terms[c.j].exp_y + (1 - c.lambda) * terms[c.l].exp_y;
  return me.exp_x <= ca && me.exp_y <= cb;
}

IrreducibilityReport is_irreducible(const TermSum& sum) {
  if (sum.empty()) throw std::invalid_argument("irreducibility requires a nonempty sum");
  IrreducibilityReport report;
  report.irreducible = true;
  for (std::size_t i = 0; i < sum.size(); ++i) {
    report.verdicts.push_back(check_term(sum, i));
    report.irreducible = report.irreducible && report.verdicts.back().independent;
  }
  return report;
}

ReduceResult reduce(const TermSum& sum) {
  if (sum.empty()) throw std::invalid_argument("reduce requires a nonempty sum");
  const auto& terms = sum.terms();

  std::vector<std::size_t> kept;
  std::vector<std::size_t> dropped;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (check_term(sum, i).independent)
      kept.push_back(i);
    else
      dropped.push_back(i);
  }
  // kept is never empty: the lexicographically largest exponent pair is
  // always independent.

  std::vector<Term> kept_terms;
  for (std::size_t i : kept) kept_terms.push_back(terms[i]);

  ReduceResult out{TermSum(std::move(kept_terms)), Rational(1), {}};
  for (std::size_t i : dropped) {
    DominationCert cert = make_domination_cert(sum, i, kept);
    out.constant += terms[i].coeff * (cert.lambda / terms[cert.j].coeff +
                                      (1 - cert.lambda) / terms[cert.l].coeff);
    Verdict v;
    v.term_index = i;
    v.independent = false;
    v.domination = cert;
    out.removed.push_back(std::move(v));
  }
  return out;
}

}  // namespace bigoh
