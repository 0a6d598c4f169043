// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "mukai/classify.hpp"
#include "mukai/destabilizers.hpp"
#include "mukai/lattice.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <set>

using namespace mukai;

namespace {

std::set<MukaiVector> classes(const std::vector<Destabilizer>& ds) {
    std::set<MukaiVector> out;
    for (const auto& dz : ds) out.insert(dz.v1);
    return out;
}

// A random (n, v) with r >= 0, d > 0, v^2 >= -2 and small entries.
std::pair<std::int64_t, MukaiVector> random_target(std::int64_t max_n, std::int64_t max_r, std::int64_t max_d) {
    for (;;) {
        const std::int64_t n = oracle::uniform(1, max_n);
        const std::int64_t r = oracle::uniform(0, max_r);
        const std::int64_t d = oracle::uniform(1, max_d);
        // a <= (n d^2 + 1)/r keeps v^2 >= -2; rank zero allows any a.
        const std::int64_t a_max = r == 0 ? 3 * d : (n * d * d + 1) / r;
        const std::int64_t a = oracle::uniform(std::max<std::int64_t>(-r - 3, a_max - 40), a_max);
        const oracle::Vec v{r, d, a};
        if (oracle::square(n, v) >= -2) return {n, oracle::to_mukai(v)};
    }
}

}  // namespace

TEST_CASE("published destabilizer sets") {
    const K3Context one(1);
    CHECK(classes(find_Dv(one, MukaiVector(11, 6, 3))) == std::set<MukaiVector>{MukaiVector(2, 1, 1)});
    CHECK(classes(find_Dv(one, MukaiVector(13, 8, 5))) ==
          std::set<MukaiVector>{MukaiVector(2, 1, 1), MukaiVector(5, 3, 2)});
    CHECK(classes(find_Dv(one, MukaiVector(11, 17, 26))) ==
          std::set<MukaiVector>{MukaiVector(1, 1, 2), MukaiVector(2, 3, 5)});
    const auto bn = find_DvBN(one, MukaiVector(5, 3, 2));
    REQUIRE(bn.size() == 1);
    CHECK(bn[0].v1 == MukaiVector(2, 1, 1));
    CHECK(bn[0].m == 1);
    CHECK(bn[0].k == 1);
    const K3Context two(2);
    CHECK(classes(find_DvBN(two, MukaiVector(3, 4, 11))) == std::set<MukaiVector>{MukaiVector(1, 1, 3)});
    CHECK(find_Dv(one, MukaiVector(7, 4, 0)).empty());
    CHECK(find_Dv(one, MukaiVector(7, 4, -3)).empty());
}

TEST_CASE("largest wall and its tie-break") {
    const K3Context one(1);
    const auto w = largest_tss_wall(one, MukaiVector(2, 3, 5));
    REQUIRE(w);
    CHECK(w->v1 == MukaiVector(1, 1, 2));
    // Three classes share one circle for (13, 21, 34).
    const auto top = top_wall_candidates(one, MukaiVector(13, 21, 34));
    CHECK(classes(top) == std::set<MukaiVector>{MukaiVector(1, 1, 2), MukaiVector(2, 3, 5), MukaiVector(5, 8, 13)});
    CHECK(largest_tss_wall(one, MukaiVector(13, 21, 34))->v1 == MukaiVector(1, 1, 2));
    const Verdict verdict = weak_bn(one, MukaiVector(13, 21, 34));
    REQUIRE(verdict.wall);
    CHECK(verdict.wall->v1 == MukaiVector(1, 1, 2));
    REQUIRE(verdict.h);
    CHECK((*verdict.h)[1] == 8);
    // The quotient along the top wall is U[1] for a rigid bundle U of class (5, -3, 2).
    REQUIRE_FALSE(verdict.resolution.empty());
    CHECK(verdict.resolution.front()->quotient == MukaiVector(-5, 3, -2));
    CHECK_FALSE(largest_tss_wall(one, MukaiVector(7, 4, 0)));
}

TEST_CASE("domain errors") {
    const K3Context one(1);
    CHECK_THROWS_AS(find_Dv(one, MukaiVector(3, 0, 1)), DomainError);
    CHECK_THROWS_AS(find_Dv(one, MukaiVector(3, 1, 5)), DomainError);  // v^2 = 2 - 30
    CHECK(signed_divisors(Int(6)) == std::vector<Int>{-6, -3, -2, -1, 1, 2, 3, 6});
}

TEST_CASE("fast path equals the literal box scan") {
    for (int it = 0; it < 1500; ++it) {
        const auto [n, v] = random_target(6, 12, 14);
        const K3Context ctx(n);
        const auto fast = find_Dv(ctx, v);
        const auto slow = brute_force_Dv(ctx, v, default_search_box(ctx, v));
        REQUIRE(classes(fast) == classes(slow));
        REQUIRE(fast == slow);
    }
}

TEST_CASE("members satisfy the defining conditions and the structural bounds") {
    for (int it = 0; it < 1500; ++it) {
        const auto [n, v] = random_target(6, 12, 14);
        const K3Context ctx(n);
        const oracle::Vec ov{to_i64(v.r), to_i64(v.d), to_i64(v.a)};
        for (const auto& dz : find_Dv(ctx, v)) {
            const oracle::Vec w{to_i64(dz.v1.r), to_i64(dz.v1.d), to_i64(dz.v1.a)};
            const auto sq = oracle::square(n, w);
            REQUIRE(sq == -2);  // never isotropic
            REQUIRE(dz.epsilon == 1);
            REQUIRE(w.d >= 1);
            REQUIRE(w.d <= ov.d);
            REQUIRE(oracle::pairing(n, ov, w) < sq + 2);
            REQUIRE(dz.m == w.r * ov.d - ov.r * w.d);
            REQUIRE(dz.k == w.a * ov.d - ov.a * w.d);
            REQUIRE(dz.m > 0);
            REQUIRE(dz.k > 0);
            REQUIRE(w.r < ov.r);
            // d1 < 2r/n.
            REQUIRE(w.d * n < 2 * ov.r);
        }
    }
}

TEST_CASE("swapping r and a is a bijection of destabilizer sets") {
    int checked = 0;
    while (checked < 1000) {
        const auto [n, v] = random_target(5, 10, 12);
        if (v.a < 0) continue;
        const K3Context ctx(n);
        std::set<MukaiVector> swapped;
        for (const auto& dz : find_Dv(ctx, v)) swapped.insert(MukaiVector(dz.v1.a, dz.v1.d, dz.v1.r));
        REQUIRE(classes(find_Dv(ctx, MukaiVector(v.a, v.d, v.r))) == swapped);
        ++checked;
    }
}
