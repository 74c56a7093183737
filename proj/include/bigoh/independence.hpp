// Copyright (c) 2026 The bigoh Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bigoh/term.hpp"

namespace bigoh {

/// Crossing abscissa of the exponent lines of two terms:
/// r = (b_i - b_j) / (a_j - a_i). Symmetric in its argument pairs.
/// Throws std::domain_error when a_i == a_j.
Rational ratio_r(const Rational& ai, const Rational& bi, const Rational& aj,
                 const Rational& bj);

/// The set {z >= 0 : a_i z + b_i > a_j z + b_j for all j != i} of strict
/// witness exponents for one term, as a (possibly empty) interval clipped
/// to [0, inf). `x_direction` reports the companion test: a_i strictly
/// maximal, i.e. the term dominates along y fixed, x -> infinity.
struct FeasibleInterval {
  std::optional<Rational> lower;  // disengaged = -infinity
  bool lower_strict = false;
  std::optional<Rational> upper;  // disengaged = +infinity
  bool upper_strict = false;
  bool x_direction = false;

  bool empty() const;
  bool contains(const Rational& z) const;
};

/// Independence witness: along x = y^z (or x -> infinity with y fixed for
/// the x-direction kind) the term strictly outgrows every other term.
struct Witness {
  enum class Kind { FiniteZ, XDirection };
  Kind kind = Kind::FiniteZ;
  Rational z;  // meaningful iff kind == FiniteZ
};

/// Dependence certificate: (a_i, b_i) lies under the segment between the
/// exponent pairs of terms j and l (j == l allowed), i.e.
/// a_i <= lambda*a_j + (1-lambda)*a_l and likewise for b. By weighted
/// AM-GM this gives T_i/c_i <= T_j/c_j + T_l/c_l pointwise on x, y >= 1,
/// so the term is absorbed by the rest of the sum.
struct DominationCert {
  std::size_t j = 0;
  std::size_t l = 0;
  Rational lambda;
};

struct Verdict {
  std::size_t term_index = 0;
  bool independent = false;
  std::optional<Witness> witness;            // present iff independent
  std::optional<DominationCert> domination;  // present iff !independent
};

FeasibleInterval feasible_interval(const TermSum& sum, std::size_t index);

/// Decides independence of one term and returns a certificate either way.
/// A term is independent iff its exponent pair lies strictly outside the
/// downward closure of the convex hull of the other pairs — equivalently,
/// some ray x = y^z (z >= 0) or the x direction makes its exponent line
/// strictly top the others. Boundary contact counts as dependent.
/// Witness choice: midpoint of a bounded interval, lower + 1 when
/// unbounded above, z = 1 when the whole of [0, inf) is feasible.
Verdict check_term(const TermSum& sum, std::size_t index);

/// Exact re-check of a verdict's certificate against its sum.
bool verify_verdict(const TermSum& sum, const Verdict& verdict);

struct IrreducibilityReport {
  bool irreducible = false;
  std::vector<Verdict> verdicts;
};

/// True iff every term of the sum is independent.
IrreducibilityReport is_irreducible(const TermSum& sum);

struct ReduceResult {
  TermSum reduced;
  /// Theta-equivalence constant: reduced <= original <= constant * reduced
  /// pointwise on x, y >= 1.
  Rational constant;
  /// Dependent verdicts for the dropped terms, certified against the kept
  /// subsum; indices refer to the original sum.
  std::vector<Verdict> removed;
};

/// Drops every dependent term, keeping the irreducible core.
ReduceResult reduce(const TermSum& sum);

}  // namespace bigoh
