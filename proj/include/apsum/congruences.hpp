#pragma once

#include <cstdint>

#include "apsum/rational.hpp"

namespace apsum {

/// Predicted residue class: residue in [0, modulus).
struct CongruencePrediction {
    BigInt modulus;
    BigInt residue;
};

/// Both sides of one congruence instance, residues normalized to [0, modulus).
/// holds <=> lhs == rhs.
struct CongruenceVerdict {
    BigInt modulus;
    BigInt lhs;
    BigInt rhs;
    bool holds = false;
};

bool operator==(const CongruenceVerdict& a, const CongruenceVerdict& b);

/// How the observed side of a congruence is evaluated. Auto picks the exact
/// big-integer sum for n <= 1000 and the streaming modular path beyond,
/// falling back to exact when the modulus does not fit a machine word.
enum class SumMode { Auto, Exact, Modular };

/// Residue class of 2*S_k(n): modulus 2n and residue -2*filtered_prime_sum(n, k)
/// for even k; modulus n^2 and residue -k*n*filtered_prime_sum(n, k-1) for odd k.
/// Requires k > 1, n >= 1.
CongruencePrediction lemma1_predict(std::uint64_t k, std::uint64_t n);

/// Observed 2*S_k(n) against lemma1_predict.
CongruenceVerdict lemma1_check(std::uint64_t k, std::uint64_t n, SumMode mode = SumMode::Auto);

/// Residue class of A_k(n), split by parity. Requires k > 1, n > 1:
///   k even, n odd  -> 0 mod n(n-1)/2
///   k even, n even -> 0 mod n-1
///   k odd          -> floor(n/2)^2 mod 2*floor(n/2)^2
CongruencePrediction lemma2_predict(std::uint64_t k, std::uint64_t n);

/// Observed A_k(n) against lemma2_predict.
CongruenceVerdict lemma2_check(std::uint64_t k, std::uint64_t n, SumMode mode = SumMode::Auto);

/// Exact identity A_k(n) == 2^(k+1) * S_k((n-1)/2) - S_k(n-1) + (n-1)^k.
/// Requires k > 1 and odd n >= 3.
bool identity_eq1_check(std::uint64_t k, std::uint64_t n);

/// 2*A_k(n) == 0 (mod n). Requires even k > 1 and odd n >= 3.
bool reflection_check(std::uint64_t k, std::uint64_t n);

}  // namespace apsum
