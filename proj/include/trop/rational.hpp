#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace trop {

// All arithmetic in this library is exact. Rationals are GMP-backed;
// there is no floating-point mode.
using Rat = mpq_class;
using Int = mpz_class;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses "p/q" or "p" (optional sign, decimal digits). Throws ParseError on
/// malformed input, including zero denominators.
Rat parse_rational(const std::string& s);

/// Renders canonical "p/q", or "p" when the denominator is 1.
std::string rat_to_string(const Rat& x);

/// Fixed-point decimal with `digits` fractional places, rounded half away
/// from zero, trailing zeros trimmed. Pure integer arithmetic, so output is
/// identical across platforms.
std::string rat_to_decimal(const Rat& x, int digits);

}  // namespace trop
