// SPDX-License-Identifier: Apache-2.0
//
// Weak Brill-Noether decision and cohomology of the generic sheaf: a cascade
// of vanishing theorems followed by a recursive resolution engine that works
// along the largest totally semistable wall and through line-bundle twists.

#pragma once

#include "mukai/destabilizers.hpp"
#include "mukai/families.hpp"
#include "mukai/types.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>

namespace mukai {

enum class QuotientTag {
    sheaf,                 // positive-rank sheaf, resolved recursively
    shifted_line_bundle,   // k copies of O(-pH)[1], p != 0
    shifted_structure,     // k copies of O_X[1]
    torsion,               // rank-zero sheaf supported on a curve
    shifted_spherical_bundle,  // U[1] for a rigid bundle U of negative slope
};

const char* to_string(QuotientTag tag);

struct Verdict;

// One step of the resolution of the generic sheaf.
struct ResolutionNode {
    enum class Kind {
        leaf_wbn,           // decided by a vanishing theorem
        sub_then_quotient,  // 0 -> T1^c -> E -> F -> 0 along the largest wall
        twist,              // E = E'(pH) with E' resolved first
    };

    Kind kind = Kind::leaf_wbn;
    std::string rule;

    // sub_then_quotient
    MukaiVector sub;
    Int multiplicity;
    MukaiVector quotient;
    QuotientTag tag = QuotientTag::sheaf;
    Int tag_p;  // shifted_line_bundle / shifted_structure
    Int tag_k;
    std::shared_ptr<const Verdict> sub_verdict;
    std::shared_ptr<const Verdict> quotient_verdict;  // sheaf quotients only

    // twist
    Int p;
    MukaiVector untwisted;
    std::shared_ptr<const Verdict> untwisted_verdict;

    // Bounds on h^1 contributed by this step.
    Int h1_lo;
    std::optional<Int> h1_hi;
};

const char* to_string(ResolutionNode::Kind kind);

struct Verdict {
    Int n;
    MukaiVector v;
    std::optional<bool> wbn;                   // unset when undecided
    std::optional<std::array<Int, 3>> h;       // (h0, h1, h2); unset when undecided
    Int h1_lo;                                 // always a valid lower bound
    std::optional<Int> h1_hi;                  // upper bound when one is known
    std::string rule;                          // identifier of the deciding argument
    std::vector<std::shared_ptr<const ResolutionNode>> resolution;  // steps used
    std::optional<FamilyMatch> family;         // closed-form family, if any
    std::optional<Destabilizer> wall;          // class of the resolving wall

    bool decided() const { return h.has_value(); }
};

// floor((n d^2 + 1) / r), the largest a with v^2 >= -2.
Int minimal_a(const K3Context& ctx, const Int& r, const Int& d);

// Full decision for v = (r, d, a) with r >= 0, d > 0, v^2 >= -2.
// Throws DomainError outside that range and InternalError when two
// independent derivations disagree.
Verdict weak_bn(const K3Context& ctx, const MukaiVector& v);

// The first resolution step along the largest totally semistable wall.
// Throws DomainError when D_v^BN is empty.
std::shared_ptr<const ResolutionNode> resolve(const K3Context& ctx, const MukaiVector& v);

// (h0, h1, h2) of the generic sheaf, or nullopt when undecided.
std::optional<std::array<Int, 3>> generic_cohomology(const K3Context& ctx, const MukaiVector& v);

// Whether reflecting v through the spherical class v1 lands in the quotient
// catalog of the resolution engine (with a decided sub-object).
bool quotient_in_catalog(const K3Context& ctx, const MukaiVector& v, const Destabilizer& v1);

// Drops all memoised verdicts.
void clear_verdict_cache();

}  // namespace mukai
