// SPDX-License-Identifier: Apache-2.0
//
// Exhaustive search for weak Brill-Noether counterexamples up to a rank bound.

#pragma once

#include "mukai/classify.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mukai {

struct EnumerateOptions {
    std::int64_t max_rank = 2;
    std::optional<std::int64_t> n;  // restrict to one surface when set
    unsigned workers = 1;
    // Classify every a in range instead of stopping at the first vector
    // that satisfies weak Brill-Noether when descending from the largest a.
    bool exhaustive = false;
};

struct EnumerationResult {
    std::vector<Verdict> counterexamples;  // wbn == false, sorted by (n, r, d, a)
    std::vector<Verdict> undecided;        // wbn unknown, sorted by (n, r, d, a)
    std::uint64_t classified = 0;          // number of vectors examined
};

// All (n, v) with n < r, 2 <= r <= max_rank, 1 <= d <= r floor(r/n) + 1 and
// 2 <= a <= (n d^2 + 1)/r that fail weak Brill-Noether.  Outside this range
// weak Brill-Noether holds by the vanishing theorems.
EnumerationResult enumerate_counterexamples(const EnumerateOptions& options);

// Worker count: explicit flag, else MUKAI_BN_WORKERS, else the configured
// value, else the number of hardware threads (at least 1).
unsigned resolve_worker_count(std::optional<unsigned> flag, std::optional<unsigned> config);

}  // namespace mukai
