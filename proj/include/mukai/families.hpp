// SPDX-License-Identifier: Apache-2.0
//
// Closed-form families of weak Brill-Noether counterexamples and the exact
// twisted-cohomology formulas they come from.

#pragma once

#include "mukai/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mukai {

enum class FamilyId {
    one = 1,          // (n + r1^2, (n+1)/r1 + r1, ((n+1)/r1)^2 + n)
    two = 2,          // twists of (r, j, -i)
    three = 3,        // twists of (r, j, 1 - i)
    four = 4,         // twists of (r, j, 2 - i)
    five = 5,         // twists of (r, r/(n+1), a)
    exceptional = 6,  // sporadic n = 1 twists of a = 2 vectors
};

struct FamilyMatch {
    FamilyId id;
    std::string params;  // e.g. "p=1,j=2,i=0"
    MukaiVector v1;      // the class defining the largest wall
    Int h1;
};

std::string to_string(FamilyId id);

// h^1 of the generic sheaf twisted by O(pH), p >= 1, when v falls under one
// of the exact twisted-cohomology statements for a <= 2 or d = r/(n+1).
// Returns nullopt when no statement covers (v, p).
std::optional<Int> twisted_closed_form(const K3Context& ctx, const MukaiVector& v, const Int& p);

// Family membership of v with the closed-form h^1.  When v lies in several
// families they must agree on h^1 (InternalError otherwise); the first
// in the order 1, exceptional, 2, 3, 4, 5 is reported.
std::optional<FamilyMatch> match_family(const K3Context& ctx, const MukaiVector& v);

struct FamilyMember {
    Int n;
    MukaiVector v;
    FamilyMatch match;
};

// Every family member with n < r <= max_rank and h^1 > 0, sorted by
// (n, r, d, a) without duplicates.
std::vector<FamilyMember> family_counterexamples(std::int64_t max_rank);

// True for the n = 1, a = 2 vectors, and their analogues for n = 2, 3, that
// have a nonempty destabilizer set.
bool is_listed_a2_vector(const K3Context& ctx, const MukaiVector& v);

}  // namespace mukai
