#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apsum/classify.hpp"
#include "apsum/congruences.hpp"

namespace apsum {

enum class ScanKind { Theorem, Lemma1, Lemma2, Kellner, Identities };

const char* to_string(ScanKind kind);
std::optional<ScanKind> scan_kind_from_string(std::string_view s);

/// Inclusive bounds.
struct ScanRange {
    std::uint64_t min = 0;
    std::uint64_t max = 0;

    friend bool operator==(const ScanRange&, const ScanRange&) = default;
};

struct LemmaRecord {
    std::uint64_t k = 0;
    std::uint64_t n = 0;
    CongruenceVerdict verdict;
};

bool operator==(const LemmaRecord& a, const LemmaRecord& b);

/// Per-cell identity results; a field is empty when the cell is outside
/// that identity's hypothesis (eq1 needs odd n, reflection also even k).
struct IdentityRecord {
    std::uint64_t k = 0;
    std::uint64_t n = 0;
    std::optional<bool> eq1;
    std::optional<bool> reflection;

    friend bool operator==(const IdentityRecord&, const IdentityRecord&) = default;
};

struct Violation {
    std::uint64_t k = 0;
    std::uint64_t n = 0;
    std::string detail;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// One scan's results. Exactly one of the records vectors is populated,
/// matching kind; records are ordered ascending by (k, n); an empty
/// violations list means the scan passed.
struct ScanReport {
    ScanKind kind = ScanKind::Theorem;
    ScanRange k_range;
    ScanRange n_range;
    std::vector<ClassificationRecord> theorem_records;
    std::vector<LemmaRecord> lemma_records;
    std::vector<KellnerHit> kellner_records;
    std::vector<IdentityRecord> identity_records;
    std::vector<Violation> violations;
    double elapsed_seconds = 0.0;
    unsigned worker_count = 1;

    std::size_t record_count() const;
};

bool operator==(const ScanReport& a, const ScanReport& b);

/// Evaluates every grid cell exactly once, partitioning contiguous k-row
/// chunks across a fixed pool of workers; output is deterministic for fixed
/// inputs regardless of worker count. Throws std::invalid_argument on ranges
/// violating the kind's hypotheses. Progress goes to stderr only.
ScanReport run_scan(ScanKind kind, ScanRange k_range, ScanRange n_range, unsigned workers,
                    bool progress = false);

/// APSUM_JOBS when set to a positive integer, else hardware concurrency.
unsigned default_worker_count();

}  // namespace apsum
