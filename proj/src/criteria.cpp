// SPDX-License-Identifier: Apache-2.0

#include "mukai/criteria.hpp"

#include "mukai/classify.hpp"
#include "mukai/destabilizers.hpp"
#include "mukai/families.hpp"
#include "mukai/lattice.hpp"

namespace mukai {

namespace {

Int max0(const Int& x) { return x > 0 ? x : Int(0); }

bool divides(const Int& x, const Int& y) { return x != 0 && y % x == 0; }

TwistedH1 exact(Int value, std::string rule) {
    TwistedH1 out;
    out.lo = value;
    out.hi = value;
    out.value = std::move(value);
    out.rule = std::move(rule);
    return out;
}

}  // namespace

bool has_mu_stable(const K3Context& ctx, const MukaiVector& v) {
    const Int sq = square(ctx, v);
    if (v.r <= 0 || sq < -2) {
        throw DomainError("slope stability criterion requires r >= 1 and v^2 >= -2, got " + v.str());
    }
    using boost::multiprecision::gcd;
    const Int l = gcd(v.r, abs(v.d));
    const Int r0 = v.r / l;
    const Int d0 = v.d / l;
    const bool r0_divides = divides(r0, ctx.n() * d0 * d0 + 1);
    if (!r0_divides && sq == 0 && !is_primitive(v)) return false;
    if (r0_divides && sq < 2 * l * l) return false;
    return true;
}

bool only_non_locally_free(const K3Context& ctx, const MukaiVector& v) {
    if (v.r <= 0) return true;  // torsion sheaves are never locally free
    const Int& n = ctx.n();
    const Int sq = square(ctx, v);
    if (sq > 0) {
        if (v.r == 1) return true;  // (1, p, p^2 n - l)
        if (v.d % v.r == 0) {       // (l, l p, l p^2 n - 1) with l = r
            const Int p = v.d / v.r;
            if (v.a == v.r * p * p * n - 1) return true;
        }
        return false;
    }
    if (sq == 0) {
        // v = m (r0^2, r0 d0, d0^2 n) with r0 | d0^2 n + 1.
        for (Int r0 = 1; r0 * r0 <= v.r; ++r0) {
            if (v.r % (r0 * r0) != 0) continue;
            const Int m = v.r / (r0 * r0);
            if (v.d % (m * r0) != 0) continue;
            const Int d0 = v.d / (m * r0);
            if (v.a == m * d0 * d0 * n && divides(r0, d0 * d0 * n + 1)) return true;
        }
    }
    return false;
}

const char* to_string(GGStatus s) {
    switch (s) {
        case GGStatus::yes: return "yes";
        case GGStatus::no: return "no";
        case GGStatus::unknown: return "unknown";
    }
    return "?";
}

GGVerdict globally_generated(const K3Context& ctx, const MukaiVector& v) {
    if (v.r < 0 || v.d <= 0 || square(ctx, v) < -2) {
        throw DomainError("global generation requires r >= 0, d > 0, v^2 >= -2, got " + v.str());
    }
    const Int& n = ctx.n();
    if (v.a <= 0) return {GGStatus::no, "nonpositive-a"};
    if (v.a == 1) {
        // Only (n d^2 + 1, d, 1) admits a resolution by trivial bundles.
        if (v.r == n * v.d * v.d + 1) return {GGStatus::unknown, "a-equals-one-spherical"};
        return {GGStatus::no, "a-equals-one"};
    }
    if (n == 1 && v.r == 1 && v.d == 2 && v.a <= 4) return {GGStatus::no, "ideal-sheaf-twice-hyperplane"};
    if (v.r == 0) return {GGStatus::yes, "rank-zero"};
    if (v.r == 1) return {GGStatus::yes, "rank-one"};
    if (n >= 2 * v.r) return {GGStatus::yes, "n-at-least-2r"};
    if (v.d >= v.r * ((2 * v.r) / n) + v.r && (n != 1 || 2 * v.d >= 2 * v.a + v.r)) {
        return {GGStatus::yes, "large-d"};
    }
    const Verdict verdict = weak_bn(ctx, v);
    if (verdict.wbn && *verdict.wbn && find_Dv(ctx, v).empty() &&
        !only_non_locally_free(ctx, MukaiVector(v.a, v.d, v.r))) {
        return {GGStatus::yes, "empty-Dv-locally-free-dual"};
    }
    return {GGStatus::unknown, "no-criterion"};
}

std::optional<MukaiVector> ulrich_vector(const Int& n, const Int& r, const Int& m) {
    if (n < 1 || r < 1 || m < 1) throw DomainError("Ulrich vector requires n, r, m >= 1");
    if ((r * m) % 2 != 0) return std::nullopt;
    return MukaiVector(r, 3 * r * m / 2, r * (2 * m * m * n - 1));
}

TwistedH1 twisted_h1(const K3Context& ctx, const MukaiVector& v, const Int& p) {
    if (p < 0) throw DomainError("twisted cohomology requires p >= 0");
    const Verdict base = weak_bn(ctx, v);
    if (p == 0) {
        TwistedH1 out;
        out.rule = "generic-cohomology";
        out.lo = base.h1_lo;
        out.hi = base.h1_hi;
        if (base.h) out.value = (*base.h)[1];
        return out;
    }
    if (auto closed = twisted_closed_form(ctx, v, p)) return exact(*closed, "twisted-closed-form");

    const Int& n = ctx.n();
    const MukaiVector fp(n * p * p + 1, p, Int(1));
    const Int lhs = v.d * fp.r;
    const Int rhs = p * v.r;
    if (base.h && (*base.h)[1] == 0) {
        if (lhs > rhs) return exact(Int(0), "slope-vanishing");
        if (v == fp) return exact(Int(1), "line-bundle-dual");
        if (square(ctx, v) >= 0) {
            return exact(max0(v.a * (n * p * p + 1) + v.r - 2 * n * p * v.d), "hom-count");
        }
    }

    const Verdict twisted = weak_bn(ctx, twist(ctx, v, p));
    TwistedH1 out;
    out.lo = twisted.h1_lo;
    out.hi = twisted.h1_hi;
    if (twisted.h) {
        out.value = (*twisted.h)[1];
        out.rule = "twisted-classification";
    } else {
        out.rule = "interval";
    }
    return out;
}

}  // namespace mukai
