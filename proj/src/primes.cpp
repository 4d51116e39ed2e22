#include "apsum/primes.hpp"

#include <stdexcept>

namespace apsum {

PrimeSieve::PrimeSieve(std::uint32_t limit) : limit_(limit < 2 ? 2 : limit) {
    lpf_.assign(static_cast<std::size_t>(limit_) + 1, 0);
    for (std::uint64_t i = 2; i <= limit_; ++i) {
        if (lpf_[i] == 0) {
            for (std::uint64_t j = i; j <= limit_; j += i) {
                if (lpf_[j] == 0) lpf_[j] = static_cast<std::uint32_t>(i);
            }
        }
    }
}

bool PrimeSieve::is_prime(std::uint64_t n) const {
    if (n < 2) return false;
    if (n <= limit_) return lpf_[n] == n;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

Factorization PrimeSieve::factorize(std::uint64_t n) const {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    Factorization f;
    f.value = n;
    auto push = [&f](std::uint64_t p) {
        if (!f.factors.empty() && f.factors.back().prime == p) {
            ++f.factors.back().exponent;
        } else {
            f.factors.push_back({p, 1});
        }
    };
    // trial division up to the sieve limit, then table walk on the remainder
    std::uint64_t rest = n;
    if (rest > limit_) {
        for (std::uint64_t d = 2; d * d <= rest && rest > limit_; ++d) {
            while (rest % d == 0) {
                push(d);
                rest /= d;
            }
        }
        if (rest > limit_) {
            // remainder has no divisor up to sqrt, so it is prime
            push(rest);
            rest = 1;
        }
    }
    while (rest > 1) {
        std::uint64_t p = lpf_[rest];
        push(p);
        rest /= p;
    }
    return f;
}

std::uint64_t PrimeSieve::filtered_prime_sum(std::uint64_t n, std::uint64_t d) const {
    if (n < 1) throw std::invalid_argument("filtered_prime_sum: n must be >= 1");
    if (d < 1) throw std::invalid_argument("filtered_prime_sum: d must be >= 1");
    std::uint64_t sum = 0;
    for (const PrimePower& pp : factorize(n).factors) {
        if (d % (pp.prime - 1) == 0) sum += n / pp.prime;
    }
    return sum;
}

const PrimeSieve& default_sieve() {
    static const PrimeSieve sieve(1u << 20);
    return sieve;
}

Factorization factorize(std::uint64_t n) { return default_sieve().factorize(n); }

std::uint64_t filtered_prime_sum(std::uint64_t n, std::uint64_t d) {
    return default_sieve().filtered_prime_sum(n, d);
}

}  // namespace apsum
