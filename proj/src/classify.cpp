// SPDX-License-Identifier: Apache-2.0

#include "mukai/classify.hpp"

#include "mukai/lattice.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace mukai {

namespace {

constexpr int kMaxDepth = 4096;

Int max0(const Int& x) { return x > 0 ? x : Int(0); }

using Key = std::tuple<Int, Int, Int, Int>;

struct Cache {
    std::shared_mutex mutex;
    std::map<Key, std::shared_ptr<const Verdict>> map;
};

Cache& cache() {
    static Cache c;
    return c;
}

void check_domain(const K3Context& ctx, const MukaiVector& v) {
    if (v.r < 0) throw DomainError("classification requires r >= 0, got " + v.str());
    if (v.d <= 0) throw DomainError("classification requires d > 0, got " + v.str());
    if (square(ctx, v) < -2) throw DomainError("classification requires v^2 >= -2, got " + v.str());
}

Verdict wbn_verdict(const K3Context& ctx, const MukaiVector& v, const std::string& rule) {
    Verdict out;
    out.n = ctx.n();
    out.v = v;
    const Int chi = euler_char(v);
    out.wbn = true;
    out.h = std::array<Int, 3>{max0(chi), max0(-chi), Int(0)};
    out.h1_lo = (*out.h)[1];
    out.h1_hi = (*out.h)[1];
    out.rule = rule;
    auto leaf = std::make_shared<ResolutionNode>();
    leaf->kind = ResolutionNode::Kind::leaf_wbn;
    leaf->rule = rule;
    leaf->h1_lo = out.h1_lo;
    leaf->h1_hi = out.h1_hi;
    out.resolution.push_back(std::move(leaf));
    return out;
}

std::shared_ptr<const Verdict> verdict_at(const K3Context& ctx, const MukaiVector& v, int depth);

// Vanishing theorems that settle v without any resolution.  Returns the rule
// identifier when one applies.
std::optional<std::string> cascade_rule(const K3Context& ctx, const MukaiVector& v) {
    const Int& n = ctx.n();
    if (v.a <= 0) return "nonpositive-a";
    if (v.r == 0) return "rank-zero";
    if (v.a <= 1) return "a-at-most-one";
    if (n >= v.r) return "n-at-least-r";
    if (v.d >= v.r * (v.r / n) + 2) return "large-d";
    const std::vector<Destabilizer> bn = find_DvBN(ctx, v);
    if (bn.empty()) return "no-bn-destabilizer";
    bool all_on_ox1 = true;
    for (const auto& dz : bn) all_on_ox1 = all_on_ox1 && dz.k == dz.m;
    if (all_on_ox1 && square(ctx, v) >= 0) return "ox1-wall-nonrigid";
    return std::nullopt;
}

// w = k (-1, p, -(n p^2 + 1)), the class of O(-pH)[1]^k.
bool is_shifted_line_bundles(const K3Context& ctx, const MukaiVector& w) {
    const Int k = -w.r;
    if (k <= 0 || w.d % k != 0) return false;
    const Int p = w.d / k;
    return w.a == -k * (ctx.n() * p * p + 1);
}

// One step 0 -> T1^c -> E -> F -> 0 along the wall of `dz`.  Returns nullopt
// when F or T1 is outside what the engine can evaluate.
std::shared_ptr<ResolutionNode> wall_step(const K3Context& ctx, const MukaiVector& v, const Destabilizer& dz,
                                          int depth) {
    const MukaiVector& v1 = dz.v1;
    if (v1.r <= 0 || dz.epsilon != 1) return nullptr;
    const Int c = -pairing(ctx, v, v1);
    if (c <= 0) return nullptr;
    const MukaiVector w = v - c * v1;

    auto sub = verdict_at(ctx, v1, depth + 1);
    if (!sub->decided()) return nullptr;
    const Int t = (*sub->h)[1];

    auto node = std::make_shared<ResolutionNode>();
    node->kind = ResolutionNode::Kind::sub_then_quotient;
    node->sub = v1;
    node->multiplicity = c;
    node->quotient = w;
    node->sub_verdict = sub;

    const Int& n = ctx.n();
    Int h0F;
    Int h1F;
    if (w.r < 0 && is_shifted_line_bundles(ctx, w)) {
        const Int k = -w.r;
        const Int p = w.d / k;
        // F = O(-pH)[1]^k: H^0(F) = H^1(O(-pH))^k = 0, H^1(F) = H^0(O(pH))^k.
        h0F = 0;
        if (p > 0) {
            h1F = k * (n * p * p + 2);
        } else if (p == 0) {
            h1F = k;
        } else {
            h1F = 0;
        }
        node->tag = p == 0 ? QuotientTag::shifted_structure : QuotientTag::shifted_line_bundle;
        node->tag_p = p;
        node->tag_k = k;
    } else if (w.r < 0 && w.d > 0 && square(ctx, w) == -2 && -w.r < v.r) {
        // F = U[1] for the rigid bundle U of class -w, which has negative
        // slope.  Serre duality: H^0(F) = H^1(U) = H^1(U^v)^*, and
        // H^1(F) = H^2(U) = H^0(U^v)^*, with v(U^v) = (-r_w, d_w, -a_w).
        auto q = verdict_at(ctx, MukaiVector(-w.r, w.d, -w.a), depth + 1);
        if (!q->decided()) return nullptr;
        h0F = (*q->h)[1];
        h1F = (*q->h)[0];
        node->tag = QuotientTag::shifted_spherical_bundle;
        node->quotient_verdict = q;
    } else if (w.r == 0 && w.d > 0) {
        h0F = max0(w.a);
        h1F = max0(-w.a);
        node->tag = QuotientTag::torsion;
    } else if (w.r > 0 && w.d > 0) {
        auto q = verdict_at(ctx, w, depth + 1);
        if (!q->decided()) return nullptr;
        h0F = (*q->h)[0];
        h1F = (*q->h)[1];
        node->tag = QuotientTag::sheaf;
        node->quotient_verdict = q;
    } else {
        return nullptr;
    }
    // H^0(F) -> H^1(T1^c) -> H^1(E) -> H^1(F) -> H^2(T1^c) = 0.
    node->h1_lo = h1F + max0(c * t - h0F);
    node->h1_hi = h1F + c * t;
    node->rule = "wall-resolution";
    return node;
}

// E = E'(pH) with v' = twist(v, -p); compares E' against the line bundle
// sheaf class F_p = (n p^2 + 1, p, 1) governing Hom(E', O(-pH)[1]) duality.
std::shared_ptr<ResolutionNode> twist_step(const K3Context& ctx, const MukaiVector& v, const Int& p, int depth) {
    const Int& n = ctx.n();
    const MukaiVector vp = twist(ctx, v, -p);
    auto prev = verdict_at(ctx, vp, depth + 1);
    if (!prev->decided()) return nullptr;
    const Int h1p = (*prev->h)[1];
    const MukaiVector fp(n * p * p + 1, p, Int(1));
    // slope(v') versus slope(F_p).
    const Int lhs = vp.d * fp.r;
    const Int rhs = p * vp.r;

    auto node = std::make_shared<ResolutionNode>();
    node->kind = ResolutionNode::Kind::twist;
    node->p = p;
    node->untwisted = vp;
    node->untwisted_verdict = prev;
    node->h1_lo = 0;
    if (lhs > rhs) {
        node->h1_hi = h1p * (n * p * p + 2);
    } else {
        if (vp == fp && h1p == 0) {
            node->h1_lo = 1;
            node->h1_hi = Int(1);
        } else if (h1p == 0 && square(ctx, vp) >= 0) {
            const Int val = max0(vp.a * (n * p * p + 1) + vp.r - 2 * n * p * vp.d);
            node->h1_lo = val;
            node->h1_hi = val;
        }
        if (lhs < rhs) {
            const Int lo = max0(-pairing(ctx, vp, fp));
            if (lo > node->h1_lo) node->h1_lo = lo;
        }
    }
    if (node->h1_lo == 0 && !node->h1_hi) return nullptr;
    node->rule = "twist-resolution";
    return node;
}

Verdict compute(const K3Context& ctx, const MukaiVector& v, int depth) {
    if (depth > kMaxDepth) {
        throw InternalError("resolution depth limit exceeded at " + v.str());
    }
    check_domain(ctx, v);
    const auto family = match_family(ctx, v);

    if (auto rule = cascade_rule(ctx, v)) {
        Verdict out = wbn_verdict(ctx, v, *rule);
        if (family && family->h1 != (*out.h)[1]) {
            throw InternalError("vanishing rule " + *rule + " contradicts " + to_string(family->id) + " for " +
                                v.str() + " (n=" + ctx.n().str() + ")");
        }
        out.family = family;
        return out;
    }

    const Int chi = euler_char(v);
    Verdict out;
    out.n = ctx.n();
    out.v = v;
    out.family = family;
    Int lo = max0(-chi);
    std::optional<Int> hi;
    bool exact_a = false;
    bool exact_b = false;

    const auto absorb = [&](const ResolutionNode& node) {
        if (node.h1_lo > lo) lo = node.h1_lo;
        if (node.h1_hi && (!hi || *node.h1_hi < *hi)) hi = node.h1_hi;
    };

    for (const auto& cand : top_wall_candidates(ctx, v)) {
        if (auto node = wall_step(ctx, v, cand, depth)) {
            exact_a = node->h1_hi && node->h1_lo == *node->h1_hi;
            absorb(*node);
            out.wall = cand;
            out.resolution.push_back(std::move(node));
            break;
        }
    }
    for (Int p = 1; v.d - v.r * p > 0; ++p) {
        if (auto node = twist_step(ctx, v, p, depth)) {
            exact_b = exact_b || (node->h1_hi && node->h1_lo == *node->h1_hi);
            absorb(*node);
            out.resolution.push_back(std::move(node));
        }
    }

    if (hi && lo > *hi) {
        throw InternalError("contradictory bounds for h1 of " + v.str() + " (n=" + ctx.n().str() + "): [" +
                            lo.str() + ", " + hi->str() + "]");
    }
    out.h1_lo = lo;
    out.h1_hi = hi;

    std::optional<Int> h1;
    if (hi && lo == *hi) {
        h1 = lo;
        out.rule = exact_a ? "wall-resolution" : (exact_b ? "twist-resolution" : "bound-intersection");
    }
    if (family) {
        if (h1 && *h1 != family->h1) {
            throw InternalError("resolution gives h1=" + h1->str() + " but " + to_string(family->id) + " gives " +
                                family->h1.str() + " for " + v.str() + " (n=" + ctx.n().str() + ")");
        }
        if (family->h1 < lo || (hi && family->h1 > *hi)) {
            throw InternalError(to_string(family->id) + " value " + family->h1.str() + " lies outside [" +
                                lo.str() + ", " + (hi ? hi->str() : "inf") + "] for " + v.str());
        }
        if (!h1) {
            h1 = family->h1;
            out.rule = to_string(family->id);
        }
    }

    if (h1) {
        const Int h0 = chi + *h1;
        out.h = std::array<Int, 3>{h0, *h1, Int(0)};
        out.wbn = h0 == 0 || *h1 == 0;
        out.h1_lo = *h1;
        out.h1_hi = *h1;
    } else {
        out.rule = "unknown-pattern";
        if (lo >= 1 && chi + lo >= 1) out.wbn = false;
    }
    return out;
}

std::shared_ptr<const Verdict> verdict_at(const K3Context& ctx, const MukaiVector& v, int depth) {
    Key key{ctx.n(), v.r, v.d, v.a};
    Cache& c = cache();
    {
        std::shared_lock lock(c.mutex);
        if (auto it = c.map.find(key); it != c.map.end()) return it->second;
    }
    auto verdict = std::make_shared<const Verdict>(compute(ctx, v, depth));
    std::unique_lock lock(c.mutex);
    return c.map.emplace(std::move(key), std::move(verdict)).first->second;
}

}  // namespace

const char* to_string(QuotientTag tag) {
    switch (tag) {
        case QuotientTag::sheaf: return "sheaf";
        case QuotientTag::shifted_line_bundle: return "shifted-line-bundle";
        case QuotientTag::shifted_structure: return "shifted-structure";
        case QuotientTag::torsion: return "torsion";
        case QuotientTag::shifted_spherical_bundle: return "shifted-spherical-bundle";
    }
    return "?";
}

const char* to_string(ResolutionNode::Kind kind) {
    switch (kind) {
        case ResolutionNode::Kind::leaf_wbn: return "leaf-wbn";
        case ResolutionNode::Kind::sub_then_quotient: return "sub-powers-then-quotient";
        case ResolutionNode::Kind::twist: return "twist";
    }
    return "?";
}

Int minimal_a(const K3Context& ctx, const Int& r, const Int& d) {
    if (r < 1 || d < 1) throw DomainError("minimal_a requires r >= 1 and d >= 1");
    return floor_div(ctx.n() * d * d + 1, r);
}

Verdict weak_bn(const K3Context& ctx, const MukaiVector& v) { return *verdict_at(ctx, v, 0); }

std::optional<std::array<Int, 3>> generic_cohomology(const K3Context& ctx, const MukaiVector& v) {
    return verdict_at(ctx, v, 0)->h;
}

bool quotient_in_catalog(const K3Context& ctx, const MukaiVector& v, const Destabilizer& v1) {
    check_domain(ctx, v);
    return wall_step(ctx, v, v1, 0) != nullptr;
}

std::shared_ptr<const ResolutionNode> resolve(const K3Context& ctx, const MukaiVector& v) {
    check_domain(ctx, v);
    const auto cands = top_wall_candidates(ctx, v);
    if (cands.empty()) {
        throw DomainError("no destabilizer at or above the O_X[1] wall for " + v.str());
    }
    for (const auto& cand : cands) {
        if (auto node = wall_step(ctx, v, cand, 0)) return node;
    }
    auto node = std::make_shared<ResolutionNode>();
    node->kind = ResolutionNode::Kind::sub_then_quotient;
    node->rule = "unknown-pattern";
    node->sub = cands.front().v1;
    node->multiplicity = -pairing(ctx, v, cands.front().v1);
    node->quotient = v - node->multiplicity * cands.front().v1;
    node->h1_lo = max0(-euler_char(v));
    return node;
}

void clear_verdict_cache() {
    Cache& c = cache();
    std::unique_lock lock(c.mutex);
    c.map.clear();
}

}  // namespace mukai
