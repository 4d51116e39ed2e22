#include "apsum/classify.hpp"

#include <stdexcept>

namespace apsum {

const char* to_string(Condition c) {
    switch (c) {
        case Condition::A: return "A";
        case Condition::B: return "B";
        case Condition::C: return "C";
        case Condition::None: return "NONE";
    }
    return "NONE";
}

std::optional<Condition> condition_from_string(const std::string& s) {
    if (s == "A") return Condition::A;
    if (s == "B") return Condition::B;
    if (s == "C") return Condition::C;
    if (s == "NONE") return Condition::None;
    return std::nullopt;
}

bool operator==(const ClassificationRecord& a, const ClassificationRecord& b) {
    return a.k == b.k && a.n == b.n && a.predicted_integer == b.predicted_integer &&
           a.condition == b.condition && a.actual_integer == b.actual_integer &&
           a.ratio == b.ratio && a.cofactor == b.cofactor;
}

bool operator==(const KellnerHit& a, const KellnerHit& b) {
    return a.k == b.k && a.n == b.n && a.ratio == b.ratio;
}

TheoremPrediction theorem_predicate(std::uint64_t k, std::uint64_t n) {
    if (k < 1) throw std::invalid_argument("theorem_predicate: k must be >= 1");
    if (n < 2) throw std::invalid_argument("theorem_predicate: n must be >= 2");
    if (n == 2) return {true, Condition::A};
    if (k == 1 && n % 2 == 0) return {true, Condition::B};
    if ((k == 1 || k == 2) && n == 3) return {true, Condition::C};
    return {false, Condition::None};
}

ClassificationRecord classify(std::uint64_t k, std::uint64_t n, const BigInt& a_n) {
    TheoremPrediction pred = theorem_predicate(k, n);
    BigInt npow;
    mpz_ui_pow_ui(npow.get_mpz_t(), n, k);
    BigInt a_next = npow - a_n;

    ClassificationRecord rec;
    rec.k = k;
    rec.n = n;
    rec.predicted_integer = pred.is_integer;
    rec.condition = pred.condition;
    rec.ratio = ReducedFraction(std::move(a_next), a_n);
    rec.actual_integer = rec.ratio.is_integer();
    if (rec.actual_integer && n > 2) {
        BigInt c;
        mpz_divexact(c.get_mpz_t(), npow.get_mpz_t(), a_n.get_mpz_t());
        rec.cofactor = std::move(c);
    }
    return rec;
}

ClassificationRecord classify(std::uint64_t k, std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("classify: n must be >= 2");
    return classify(k, n, exact_A(k, n));
}

std::optional<std::uint64_t> power_of_three_obstruction(std::uint64_t k) {
    if (k < 1) throw std::invalid_argument("power_of_three_obstruction: k must be >= 1");
    BigInt v = 1;
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), k);
    v -= 1;
    std::uint64_t m = 0;
    BigInt q;
    while (mpz_fdiv_q_ui(q.get_mpz_t(), v.get_mpz_t(), 3) == 0) {
        mpz_swap(v.get_mpz_t(), q.get_mpz_t());
        ++m;
    }
    if (m >= 1 && v == 1) return m;
    return std::nullopt;
}

bool strict_inequality_check(std::uint64_t k, std::uint64_t n) {
    if (k < 3 || k % 2 == 0) throw std::invalid_argument("strict_inequality_check: k must be odd and >= 3");
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("strict_inequality_check: n must be even and >= 4");
    BigInt half_pow;
    mpz_ui_pow_ui(half_pow.get_mpz_t(), n / 2, k);
    return exact_A(k, n) > half_pow;
}

std::vector<KellnerHit> kellner_scan(std::uint64_t k_max, std::uint64_t n_max) {
    if (k_max < 1) throw std::invalid_argument("kellner_scan: k_max must be >= 1");
    if (n_max < 3) throw std::invalid_argument("kellner_scan: n_max must be >= 3");
    std::vector<KellnerHit> hits;
    BigInt s, npow;
    for (std::uint64_t k = 1; k <= k_max; ++k) {
        s = exact_S(k, 3);
        for (std::uint64_t n = 3; n <= n_max; ++n) {
            mpz_ui_pow_ui(npow.get_mpz_t(), n, k);
            BigInt s_next = s + npow;
            if (mpz_divisible_p(s_next.get_mpz_t(), s.get_mpz_t())) {
                BigInt ratio;
                mpz_divexact(ratio.get_mpz_t(), s_next.get_mpz_t(), s.get_mpz_t());
                hits.push_back({k, n, std::move(ratio)});
            }
            s = std::move(s_next);
        }
    }
    return hits;
}

}  // namespace apsum
