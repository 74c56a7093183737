// Copyright (c) 2026 The bigoh Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <string_view>

namespace bigoh {

/// Exact arbitrary-precision rational. Every exponent, coefficient, ratio
/// and witness in this library is a Rational so all decisions are exact.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Arbitrary-precision binary float (MPFR-backed, runtime precision).
/// Used only for evaluation, never for decisions.
using Float = boost::multiprecision::mpfr_float;

/// Parses "p", "p/q" or an exact decimal literal like "0.05".
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Renders as "p" or "p/q" (lowest terms, positive denominator).
std::string to_string(const Rational& value);

Rational rat_pow(const Rational& base, unsigned exponent);

/// Fixed-point rendering with two decimals, ties rounded toward +infinity.
std::string decimal2(const Rational& value);

/// Six significant digits; fixed-point where practical, otherwise
/// scientific notation like "1.23457e-09".
std::string decimal_sig6(const Rational& value);

}  // namespace bigoh
