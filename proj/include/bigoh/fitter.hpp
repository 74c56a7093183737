// Copyright (c) 2026 The bigoh Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

#include "bigoh/independence.hpp"
#include "bigoh/term.hpp"

namespace bigoh {

/// One black-box observation: cost t at problem size (x, y).
struct Measurement {
  double x = 0;
  double y = 0;
  double t = 0;
};

struct FitOptions {
  unsigned max_terms = 3;
  Rational max_degree = Rational(3);
  std::vector<unsigned> lattice = {1};  // allowed exponent denominators
  /// Take the big-oh constant from the 99th-percentile ratio instead of the
  /// max; the strict max is noise-fragile but is the default (a bound must
  /// bound).
  bool robust = false;
};

struct FitResult {
  TermSum bound;        // irreducible, unit coefficients
  double constant = 0;  // t <= constant * bound(x, y) over the data
  double slack = 1;     // max over data of constant*g/t divided by its min
};

/// Enumerates every irreducible exponent set with at most max_terms terms
/// over the lattice {p/q : 0 <= p/q <= max_degree, q in lattice} and picks
/// the tightest concise bound. Candidates are scored by term count plus
/// ln(slack); ties break on total degree, then on enumeration order.
FitResult fit(const std::vector<Measurement>& data, const FitOptions& options);

struct ValidationReport {
  double max_ratio = 0;  // max over data of t/g; a valid constant must reach it
  double slack = 1;
  std::vector<std::size_t> violations;  // 0-based rows with t > constant * g
};

/// Recomputes validity and slack of a fit result from scratch.
ValidationReport validate_bound(const std::vector<Measurement>& data,
                                const FitResult& result);

/// All candidate exponent sets fit() considers, for cross-checks.
std::vector<std::vector<std::pair<Rational, Rational>>> enumerate_irreducible_candidates(
    unsigned max_terms, const Rational& max_degree, const std::vector<unsigned>& lattice);

/// Reads "x,y,t" CSV (header required). Throws std::runtime_error naming
/// the offending line on malformed rows or out-of-domain values.
std::vector<Measurement> read_measurements_csv(std::istream& in);

}  // namespace bigoh
