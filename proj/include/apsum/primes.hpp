#pragma once

#include <cstdint>
#include <vector>

namespace apsum {

struct PrimePower {
    std::uint64_t prime = 0;
    std::uint32_t exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization: value = product of prime^exponent,
/// primes strictly increasing, every exponent >= 1. Empty for value = 1.
struct Factorization {
    std::uint64_t value = 1;
    std::vector<PrimePower> factors;
};

/// Least-prime-factor sieve. Numbers up to the limit factor by table walk;
/// larger ones fall back to trial division. Immutable once built.
class PrimeSieve {
public:
    explicit PrimeSieve(std::uint32_t limit);

    std::uint32_t limit() const { return limit_; }

    bool is_prime(std::uint64_t n) const;

    /// Rejects n < 1.
    Factorization factorize(std::uint64_t n) const;

    /// Sum of n/p over primes p | n with (p-1) | d; 0 when no prime qualifies.
    std::uint64_t filtered_prime_sum(std::uint64_t n, std::uint64_t d) const;

private:
    std::uint32_t limit_;
    std::vector<std::uint32_t> lpf_;
};

/// Process-wide sieve, built once on first use and shared read-only.
const PrimeSieve& default_sieve();

Factorization factorize(std::uint64_t n);
std::uint64_t filtered_prime_sum(std::uint64_t n, std::uint64_t d);

}  // namespace apsum
