#include "apsum/power_sums.hpp"

#include <stdexcept>

namespace apsum {

namespace {

void require_valid(const PowerSumQuery& q) {
    if (q.k < 1) throw std::invalid_argument("power sum: k must be >= 1");
    if (q.n < 1) throw std::invalid_argument("power sum: n must be >= 1");
}

}  // namespace

BigInt exact_S(const PowerSumQuery& q) {
    require_valid(q);
    BigInt sum = 0;
    BigInt term;
    for (std::uint64_t j = 1; j < q.n; ++j) {
        mpz_ui_pow_ui(term.get_mpz_t(), j, q.k);
        sum += term;
    }
    return sum;
}

BigInt exact_S(std::uint64_t k, std::uint64_t n) { return exact_S(PowerSumQuery{k, n}); }

BigInt exact_A(const PowerSumQuery& q) {
    require_valid(q);
    // T = 1^k - 2^k + 3^k - ...; A_k(n) = (-1)^n * T.
    BigInt acc = 0;
    BigInt term;
    for (std::uint64_t j = 1; j < q.n; ++j) {
        mpz_ui_pow_ui(term.get_mpz_t(), j, q.k);
        if (j % 2 == 1) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    if (q.n % 2 == 1) acc = -acc;
    return acc;
}

BigInt exact_A(std::uint64_t k, std::uint64_t n) { return exact_A(PowerSumQuery{k, n}); }

BigInt recurrence_step(std::uint64_t k, std::uint64_t n, const BigInt& a_n) {
    require_valid(PowerSumQuery{k, n});
    BigInt npow;
    mpz_ui_pow_ui(npow.get_mpz_t(), n, k);
    return npow - a_n;
}

ReducedFraction exact_ratio(std::uint64_t k, std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("exact_ratio: n must be >= 2");
    BigInt a_n = exact_A(k, n);
    BigInt a_next = recurrence_step(k, n, a_n);
    return ReducedFraction(std::move(a_next), std::move(a_n));
}

ReducedFraction exact_classical_ratio(std::uint64_t k, std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("exact_classical_ratio: n must be >= 2");
    BigInt s_n = exact_S(k, n);
    BigInt npow;
    mpz_ui_pow_ui(npow.get_mpz_t(), n, k);
    return ReducedFraction(s_n + npow, std::move(s_n));
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("pow_mod: modulus must be >= 1");
    if (m == 1) return 0;
    std::uint64_t result = 1;
    std::uint64_t b = base % m;
    while (exp > 0) {
        if (exp & 1) {
            result = static_cast<std::uint64_t>((static_cast<__uint128_t>(result) * b) % m);
        }
        b = static_cast<std::uint64_t>((static_cast<__uint128_t>(b) * b) % m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t mod_S(std::uint64_t k, std::uint64_t n, std::uint64_t m) {
    require_valid(PowerSumQuery{k, n});
    if (m < 1) throw std::invalid_argument("mod_S: modulus must be >= 1");
    if (m == 1) return 0;
    std::uint64_t acc = 0;
    for (std::uint64_t j = 1; j < n; ++j) {
        acc += pow_mod(j, k, m);
        if (acc >= m) acc -= m;
    }
    return acc;
}

std::uint64_t mod_A(std::uint64_t k, std::uint64_t n, std::uint64_t m) {
    require_valid(PowerSumQuery{k, n});
    if (m < 1) throw std::invalid_argument("mod_A: modulus must be >= 1");
    if (m == 1) return 0;
    std::uint64_t acc = 0;
    for (std::uint64_t j = 1; j < n; ++j) {
        std::uint64_t t = pow_mod(j, k, m);
        if (j % 2 == 1) {
            acc += t;
            if (acc >= m) acc -= m;
        } else {
            acc += m - t;
            if (acc >= m) acc -= m;
        }
    }
    if (n % 2 == 1 && acc != 0) acc = m - acc;
    return acc;
}

}  // namespace apsum
