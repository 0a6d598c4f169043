// SPDX-License-Identifier: Apache-2.0

#include "mukai/walls.hpp"

#include "mukai/lattice.hpp"

namespace mukai {

namespace {

bool proportional(const MukaiVector& x, const MukaiVector& y) {
    // All 2x2 minors vanish.
    return x.r * y.d == x.d * y.r && x.r * y.a == x.a * y.r && x.d * y.a == x.a * y.d;
}

}  // namespace

Wall wall_between(const K3Context& ctx, const MukaiVector& v, const MukaiVector& v1) {
    if (proportional(v, v1)) {
        throw DegenerateWallError("vectors " + v.str() + " and " + v1.str() + " are proportional");
    }
    const Int& n = ctx.n();
    Wall w;
    if (v1.r * v.d == v.r * v1.d) {
        const Int den = v1.r * v.a - v.r * v1.a;
        if (den == 0) {
            throw DegenerateWallError("vertical wall of " + v.str() + " and " + v1.str() + " is undefined");
        }
        w.kind = Wall::Kind::vertical;
        w.s0 = ratio(v.a * v1.d - v1.a * v.d, den);
        return w;
    }
    const Int m_rev = v.r * v1.d - v1.r * v.d;  // r d1 - r1 d
    w.kind = Wall::Kind::semicircle;
    w.center = ratio(v.r * v1.a - v1.r * v.a, 2 * n * m_rev);
    w.radius_sq = w.center * w.center - ratio(v1.a * v.d - v.a * v1.d, n * m_rev);
    if (v.r != 0) {
        // Independent form of the same circle: rho^2 = (d/r - alpha)^2 - v^2/(2 n r^2).
        const Rational shift = ratio(v.d, v.r) - w.center;
        const Rational alt = shift * shift - ratio(square(ctx, v), 2 * n * v.r * v.r);
        if (alt != w.radius_sq) {
            throw InternalError("inconsistent wall radius for " + v.str() + " and " + v1.str());
        }
    }
    return w;
}

Rational height_at_s_zero_sq(const K3Context& ctx, const MukaiVector& v, const MukaiVector& v1) {
    const Int m = v1.r * v.d - v.r * v1.d;
    if (m == 0) {
        throw DomainError("wall of " + v1.str() + " for " + v.str() + " is vertical");
    }
    const Int k = v1.a * v.d - v.a * v1.d;
    return ratio(k, ctx.n() * m);
}

Rational ox1_wall_height_sq(const K3Context& ctx) { return Rational(Int(1), ctx.n()); }

WallPosition is_at_or_above_ox1(const K3Context& ctx, const MukaiVector& v, const MukaiVector& v1) {
    if (height_at_s_zero_sq(ctx, v, v1) <= 0) {
        throw DomainError("wall of " + v1.str() + " for " + v.str() + " does not cross s = 0");
    }
    // Height^2 = k/(n m) versus 1/n, i.e. k/m versus 1.
    const Int m = v1.r * v.d - v.r * v1.d;
    const Int k = v1.a * v.d - v.a * v1.d;
    const Int lhs = m > 0 ? k : -k;
    const Int rhs = m > 0 ? m : -m;
    if (lhs > rhs) return WallPosition::above;
    if (lhs < rhs) return WallPosition::below;
    return WallPosition::equal;
}

std::strong_ordering compare_walls(const K3Context& ctx, const MukaiVector& v, const MukaiVector& v1,
                                   const MukaiVector& v2) {
    const Wall w1 = wall_between(ctx, v, v1);
    const Wall w2 = wall_between(ctx, v, v2);
    const bool vert1 = w1.kind == Wall::Kind::vertical;
    const bool vert2 = w2.kind == Wall::Kind::vertical;
    if (vert1 && vert2) return compare(w1.s0, w2.s0);
    if (vert1 != vert2) {
        throw DomainError("cannot order a vertical wall against a semicircle");
    }
    return compare(height_at_s_zero_sq(ctx, v, v1), height_at_s_zero_sq(ctx, v, v2));
}

const char* to_string(WallPosition p) {
    switch (p) {
        case WallPosition::below: return "below";
        case WallPosition::equal: return "equal";
        case WallPosition::above: return "above";
    }
    return "?";
}

}  // namespace mukai
