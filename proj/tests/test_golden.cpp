// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "mukai/golden.hpp"

#include <filesystem>
#include <fstream>

using namespace mukai;

#ifndef MUKAI_BN_DATA_DIR
#error "MUKAI_BN_DATA_DIR must point at the fixture directory"
#endif

namespace fs = std::filesystem;

TEST_CASE("fixtures load with provenance") {
    const auto rows = load_sporadic_rows(fs::path(MUKAI_BN_DATA_DIR) / "golden" / "sporadic.csv");
    CHECK(rows.size() == 43);
    for (const auto& row : rows) {
        CHECK_FALSE(row.provenance.empty());
        CHECK_FALSE(row.dv.empty());
        CHECK(row.h1 >= 1);
    }
    const auto twisted = load_twisted_rows(fs::path(MUKAI_BN_DATA_DIR) / "golden" / "twisted_exceptions.csv");
    CHECK(twisted.size() == 7);
}

TEST_CASE("missing and malformed fixtures are reported") {
    CHECK_THROWS_AS(load_sporadic_rows("/nonexistent/sporadic.csv"), GoldenFileError);
    const fs::path tmp = fs::temp_directory_path() / "mukai_bn_malformed.csv";
    {
        std::ofstream f(tmp);
        f << "n,r,d,a,h1,Dv\n1,11,6,x,1,2:1:1\n";
    }
    CHECK_THROWS_AS(load_sporadic_rows(tmp), GoldenFileError);
    {
        std::ofstream f(tmp);
        f << "n,r,d,a,h1,Dv\n1,11,6,3,1\n";
    }
    CHECK_THROWS_AS(load_sporadic_rows(tmp), GoldenFileError);
    fs::remove(tmp);
    CHECK_THROWS_AS(run_golden(8, "/nonexistent", 1), GoldenFileError);
}

TEST_CASE("regression against the tables up to rank 12") {
    const auto rep = run_golden(12, MUKAI_BN_DATA_DIR, 2);
    for (const auto& line : rep.lines) {
        if (line.rfind("ok", 0) != 0) MESSAGE(line);
    }
    CHECK(rep.ok);
    CHECK(rep.enumerated == rep.expected);
    CHECK(rep.twisted_checked == 7);
}
