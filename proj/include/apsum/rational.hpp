#pragma once

#include <gmpxx.h>

#include <string>

namespace apsum {

/// Arbitrary-precision signed integer, bounded only by memory.
using BigInt = mpz_class;

/// Exact rational in lowest terms. Invariants: den > 0, gcd(|num|, den) = 1.
struct ReducedFraction {
    BigInt num;
    BigInt den;

    ReducedFraction() : num(0), den(1) {}

    /// Reduces on construction; throws std::invalid_argument on zero denominator.
    ReducedFraction(BigInt numerator, BigInt denominator);

    bool is_integer() const { return den == 1; }

    /// Decimal "num/den".
    std::string str() const;
};

bool operator==(const ReducedFraction& a, const ReducedFraction& b);
bool operator!=(const ReducedFraction& a, const ReducedFraction& b);

}  // namespace apsum
