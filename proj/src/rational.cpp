#include "apsum/rational.hpp"

#include <stdexcept>
#include <utility>

namespace apsum {

ReducedFraction::ReducedFraction(BigInt numerator, BigInt denominator)
    : num(std::move(numerator)), den(std::move(denominator)) {
    if (den == 0) {
        throw std::invalid_argument("ReducedFraction: zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g > 1) {
        mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
    }
}

std::string ReducedFraction::str() const {
    return num.get_str() + "/" + den.get_str();
}

bool operator==(const ReducedFraction& a, const ReducedFraction& b) {
    return a.num == b.num && a.den == b.den;
}

bool operator!=(const ReducedFraction& a, const ReducedFraction& b) { return !(a == b); }

}  // namespace apsum
