// SPDX-License-Identifier: Apache-2.0
//
// Auxiliary numerical criteria: existence of slope-stable and locally free
// sheaves, global generation, Ulrich vectors and twisted cohomology.

#pragma once

#include "mukai/types.hpp"

#include <optional>
#include <string>

namespace mukai {

// Whether the moduli space of v contains a mu-stable sheaf.  Requires r >= 1
// and v^2 >= -2 (nonempty moduli); throws DomainError otherwise.
bool has_mu_stable(const K3Context& ctx, const MukaiVector& v);

// Whether every sheaf in the moduli space of v fails to be locally free.
bool only_non_locally_free(const K3Context& ctx, const MukaiVector& v);

enum class GGStatus { yes, no, unknown };

struct GGVerdict {
    GGStatus status = GGStatus::unknown;
    std::string rule;
};

const char* to_string(GGStatus s);

// Global generation of the generic sheaf for r >= 0, d > 0, v^2 >= -2.
GGVerdict globally_generated(const K3Context& ctx, const MukaiVector& v);

// Mukai vector of an Ulrich bundle of rank r with respect to mH, present
// exactly when r m is even.  Requires r, m >= 1.
std::optional<MukaiVector> ulrich_vector(const Int& n, const Int& r, const Int& m);

struct TwistedH1 {
    std::optional<Int> value;  // exact h^1(E(pH)) when known
    Int lo;                    // always valid lower bound
    std::optional<Int> hi;     // upper bound when known
    std::string rule;
};

// h^1(E(pH)) for the generic E with Mukai vector v and p >= 0.
TwistedH1 twisted_h1(const K3Context& ctx, const MukaiVector& v, const Int& p);

}  // namespace mukai
