// SPDX-License-Identifier: Apache-2.0
//
// The destabilizer sets D_v and D_v^BN: spherical or isotropic classes whose
// numerical wall could be totally semistable for v.

#pragma once

#include "mukai/types.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace mukai {

struct Destabilizer {
    MukaiVector v1;
    Int m;        // r1 d - r d1
    Int k;        // a1 d - a d1
    int epsilon;  // v1^2 = -2 epsilon

    friend bool operator==(const Destabilizer&, const Destabilizer&) = default;
};

// Search box for the literal scan: |r1| <= r1_max, 1 <= d1 <= d1_max,
// |a1| <= a1_max.
struct SearchBox {
    std::int64_t r1_max = 0;
    std::int64_t d1_max = 0;
    std::int64_t a1_max = 0;
};

// Every v1 with v1^2 = -2 eps (eps in {0,1}), 0 < d1 <= d, <v,v1> < v1^2 + 2
// and k/m > 0.  Results are sorted by (d1, r1, a1).
// Requires d > 0 and v^2 >= -2; throws DomainError otherwise.
std::vector<Destabilizer> find_Dv(const K3Context& ctx, const MukaiVector& v);

// The members of find_Dv with 0 < m <= k (walls at or above the O_X[1] wall).
std::vector<Destabilizer> find_DvBN(const K3Context& ctx, const MukaiVector& v);

// Members of D_v^BN inducing the highest wall, ordered by (d1, r1).
std::vector<Destabilizer> top_wall_candidates(const K3Context& ctx, const MukaiVector& v);

// The largest totally semistable wall candidate.  When several classes
// induce the identical circle the first in (d1, r1) order is chosen, skipping
// candidates rejected by `accept` if one is supplied and some candidate
// passes it.
std::optional<Destabilizer> largest_tss_wall(
    const K3Context& ctx, const MukaiVector& v,
    const std::function<bool(const Destabilizer&)>& accept = {});

// Literal scan of the integer box applying the defining conditions directly.
// Independent of find_Dv; used as a test oracle.
std::vector<Destabilizer> brute_force_Dv(const K3Context& ctx, const MukaiVector& v, const SearchBox& box);

// A box containing every member of D_v for r >= 0, d > 0, v^2 >= -2.
SearchBox default_search_box(const K3Context& ctx, const MukaiVector& v);

// All divisors (positive and negative) of a nonzero integer, ascending.
std::vector<Int> signed_divisors(const Int& x);

}  // namespace mukai
