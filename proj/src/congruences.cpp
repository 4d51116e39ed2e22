#include "apsum/congruences.hpp"

#include <stdexcept>

#include "apsum/power_sums.hpp"
#include "apsum/primes.hpp"

namespace apsum {

namespace {

constexpr std::uint64_t kExactSumLimit = 1000;

BigInt mod_nonneg(const BigInt& v, const BigInt& m) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool fits_u64(const BigInt& v) { return v.fits_ulong_p(); }

CongruenceVerdict make_verdict(BigInt modulus, BigInt lhs, BigInt rhs) {
    CongruenceVerdict v;
    v.holds = lhs == rhs;
    v.modulus = std::move(modulus);
    v.lhs = std::move(lhs);
    v.rhs = std::move(rhs);
    return v;
}

// Picks the observed-side evaluation path. The exact path reduces the full
// big-integer sum at the end; the modular path streams with word arithmetic.
bool use_exact_path(SumMode mode, std::uint64_t n, const BigInt& modulus) {
    switch (mode) {
        case SumMode::Exact:
            return true;
        case SumMode::Modular:
            if (!fits_u64(modulus))
                throw std::invalid_argument("modular sum path: modulus exceeds machine word");
            return false;
        case SumMode::Auto:
            return n <= kExactSumLimit || !fits_u64(modulus);
    }
    return true;
}

}  // namespace

bool operator==(const CongruenceVerdict& a, const CongruenceVerdict& b) {
    return a.modulus == b.modulus && a.lhs == b.lhs && a.rhs == b.rhs && a.holds == b.holds;
}

CongruencePrediction lemma1_predict(std::uint64_t k, std::uint64_t n) {
    if (k <= 1) throw std::invalid_argument("lemma1: k must be > 1");
    if (n < 1) throw std::invalid_argument("lemma1: n must be >= 1");
    CongruencePrediction p;
    if (k % 2 == 0) {
        p.modulus = BigInt(2) * BigInt(n);
        BigInt rhs = BigInt(-2) * BigInt(filtered_prime_sum(n, k));
        p.residue = mod_nonneg(rhs, p.modulus);
    } else {
        p.modulus = BigInt(n) * BigInt(n);
        BigInt rhs = BigInt(-1) * BigInt(k) * BigInt(n) * BigInt(filtered_prime_sum(n, k - 1));
        p.residue = mod_nonneg(rhs, p.modulus);
    }
    return p;
}

CongruenceVerdict lemma1_check(std::uint64_t k, std::uint64_t n, SumMode mode) {
    CongruencePrediction p = lemma1_predict(k, n);
    BigInt lhs;
    if (use_exact_path(mode, n, p.modulus)) {
        lhs = mod_nonneg(2 * exact_S(k, n), p.modulus);
    } else {
        std::uint64_t m = p.modulus.get_ui();
        std::uint64_t s = mod_S(k, n, m);
        lhs = BigInt(static_cast<unsigned long>(
            (static_cast<__uint128_t>(s) * 2) % m));
    }
    return make_verdict(std::move(p.modulus), std::move(lhs), std::move(p.residue));
}

CongruencePrediction lemma2_predict(std::uint64_t k, std::uint64_t n) {
    if (k <= 1) throw std::invalid_argument("lemma2: k must be > 1");
    if (n <= 1) throw std::invalid_argument("lemma2: n must be > 1");
    CongruencePrediction p;
    if (k % 2 == 0) {
        if (n % 2 == 1) {
            p.modulus = BigInt(n) * BigInt((n - 1) / 2);
        } else {
            p.modulus = BigInt(n - 1);
        }
        p.residue = 0;
    } else {
        BigInt half_sq = BigInt(n / 2) * BigInt(n / 2);
        p.modulus = 2 * half_sq;
        p.residue = std::move(half_sq);
    }
    return p;
}

CongruenceVerdict lemma2_check(std::uint64_t k, std::uint64_t n, SumMode mode) {
    CongruencePrediction p = lemma2_predict(k, n);
    BigInt lhs;
    if (use_exact_path(mode, n, p.modulus)) {
        lhs = mod_nonneg(exact_A(k, n), p.modulus);
    } else {
        lhs = BigInt(static_cast<unsigned long>(mod_A(k, n, p.modulus.get_ui())));
    }
    return make_verdict(std::move(p.modulus), std::move(lhs), std::move(p.residue));
}

bool identity_eq1_check(std::uint64_t k, std::uint64_t n) {
    if (k <= 1) throw std::invalid_argument("identity_eq1_check: k must be > 1");
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("identity_eq1_check: n must be odd and >= 3");
    BigInt lhs = exact_A(k, n);
    BigInt pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, k + 1);
    BigInt last;
    mpz_ui_pow_ui(last.get_mpz_t(), n - 1, k);
    BigInt rhs = pow2 * exact_S(k, (n - 1) / 2) - exact_S(k, n - 1) + last;
    return lhs == rhs;
}

bool reflection_check(std::uint64_t k, std::uint64_t n) {
    if (k <= 1 || k % 2 != 0) throw std::invalid_argument("reflection_check: k must be even and > 1");
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("reflection_check: n must be odd and >= 3");
    BigInt twice = 2 * exact_A(k, n);
    return mpz_divisible_ui_p(twice.get_mpz_t(), n) != 0;
}

}  // namespace apsum
