#pragma once

#include <cstdint>

#include "apsum/rational.hpp"

namespace apsum {

/// One sum instance: exponent k >= 1 and upper index n >= 1.
struct PowerSumQuery {
    std::uint64_t k = 1;
    std::uint64_t n = 1;
};

/// S_k(n) = 1^k + 2^k + ... + (n-1)^k; the empty sum S_k(1) is 0.
BigInt exact_S(const PowerSumQuery& q);
BigInt exact_S(std::uint64_t k, std::uint64_t n);

/// A_k(n) = (-1)^n * (1^k - 2^k + ... + (-1)^n (n-1)^k).
/// Zero for n = 1 and strictly positive for n > 1.
BigInt exact_A(const PowerSumQuery& q);
BigInt exact_A(std::uint64_t k, std::uint64_t n);

/// n^k - a_n, which equals A_k(n+1) when a_n = A_k(n).
BigInt recurrence_step(std::uint64_t k, std::uint64_t n, const BigInt& a_n);

/// A_k(n+1) / A_k(n) in lowest terms; requires n >= 2 so the denominator is nonzero.
ReducedFraction exact_ratio(std::uint64_t k, std::uint64_t n);

/// S_k(n+1) / S_k(n) in lowest terms; requires n >= 2.
ReducedFraction exact_classical_ratio(std::uint64_t k, std::uint64_t n);

/// base^exp mod m using binary exponentiation with 128-bit intermediates; m >= 1.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// S_k(n) mod m, streaming term-by-term reduction; m >= 1.
std::uint64_t mod_S(std::uint64_t k, std::uint64_t n, std::uint64_t m);

/// A_k(n) mod m, streaming term-by-term reduction; m >= 1.
std::uint64_t mod_A(std::uint64_t k, std::uint64_t n, std::uint64_t m);

}  // namespace apsum
