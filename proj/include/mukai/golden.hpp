// SPDX-License-Identifier: Apache-2.0
//
// Regression harness comparing computed classifications against the bundled
// golden fixtures transcribed from the published tables.

#pragma once

#include "mukai/types.hpp"

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace mukai {

// Raised when a fixture file is missing or malformed.
class GoldenFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SporadicRow {
    Int n;
    MukaiVector v;
    Int h1;
    std::vector<MukaiVector> dv;
    std::string provenance;
};

struct TwistedRow {
    Int n;
    MukaiVector v;
    Int p;
    MukaiVector base;
    MukaiVector v1;
    Int h1;
    std::string provenance;
};

std::vector<SporadicRow> load_sporadic_rows(const std::filesystem::path& csv);
std::vector<TwistedRow> load_twisted_rows(const std::filesystem::path& csv);

struct GoldenReport {
    bool ok = true;
    std::vector<std::string> lines;  // one line per check, "ok ..." or "MISMATCH ..."
    std::size_t sporadic_checked = 0;
    std::size_t twisted_checked = 0;
    std::size_t enumerated = 0;
    std::size_t expected = 0;
};

// Checks every sporadic row of rank <= max_rank (classification, D_v, h1),
// every twisted row, and that the enumeration up to max_rank equals the
// union of the family members and the sporadic rows.  `data_dir` holds
// golden/sporadic.csv and golden/twisted_exceptions.csv.
GoldenReport run_golden(std::int64_t max_rank, const std::filesystem::path& data_dir, unsigned workers);

}  // namespace mukai
