#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apsum/power_sums.hpp"

namespace apsum {

/// Integrality conditions for A_k(n+1)/A_k(n), matched in order:
///   A: n = 2;  B: k = 1 and n even;  C: k in {1, 2} and n = 3.
enum class Condition { A, B, C, None };

const char* to_string(Condition c);
std::optional<Condition> condition_from_string(const std::string& s);

struct TheoremPrediction {
    bool is_integer = false;
    Condition condition = Condition::None;
};

struct ClassificationRecord {
    std::uint64_t k = 0;
    std::uint64_t n = 0;
    bool predicted_integer = false;
    Condition condition = Condition::None;
    bool actual_integer = false;
    ReducedFraction ratio;
    /// c with c * A_k(n) = n^k; present when the ratio is an integer and n > 2.
    std::optional<BigInt> cofactor;
};

bool operator==(const ClassificationRecord& a, const ClassificationRecord& b);

/// First matching condition, or None. Requires k >= 1, n >= 2.
TheoremPrediction theorem_predicate(std::uint64_t k, std::uint64_t n);

/// Prediction plus exact ground truth for one cell. Requires k >= 1, n >= 2.
ClassificationRecord classify(std::uint64_t k, std::uint64_t n);

/// Same, reusing a precomputed a_n = A_k(n).
ClassificationRecord classify(std::uint64_t k, std::uint64_t n, const BigInt& a_n);

/// m >= 1 with 2^k - 1 = 3^m, found by repeated exact division by 3;
/// nullopt when 2^k - 1 is not a positive power of 3.
std::optional<std::uint64_t> power_of_three_obstruction(std::uint64_t k);

/// A_k(n) > (n/2)^k. Requires odd k >= 3 and even n >= 4.
bool strict_inequality_check(std::uint64_t k, std::uint64_t n);

struct KellnerHit {
    std::uint64_t k = 0;
    std::uint64_t n = 0;
    BigInt ratio;
};

bool operator==(const KellnerHit& a, const KellnerHit& b);

/// All (k, n) with 1 <= k <= k_max, 3 <= n <= n_max where S_k(n+1)/S_k(n)
/// is an integer, with the integer value; ordered by (k, n).
std::vector<KellnerHit> kellner_scan(std::uint64_t k_max, std::uint64_t n_max);

}  // namespace apsum
