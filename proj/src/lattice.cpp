// SPDX-License-Identifier: Apache-2.0

#include "mukai/lattice.hpp"

#include <boost/integer/common_factor_rt.hpp>

namespace mukai {

Int pairing(const K3Context& ctx, const MukaiVector& u, const MukaiVector& v) {
    return 2 * ctx.n() * u.d * v.d - u.r * v.a - v.r * u.a;
}

Int square(const K3Context& ctx, const MukaiVector& v) {
    return 2 * ctx.n() * v.d * v.d - 2 * v.r * v.a;
}

MukaiVector reflect(const K3Context& ctx, const MukaiVector& v, const MukaiVector& u) {
    if (!is_spherical(ctx, u)) {
        throw DomainError("reflection requires a spherical class, got " + u.str());
    }
    const Int c = pairing(ctx, v, u);
    return v + c * u;
}

MukaiVector twist(const K3Context& ctx, const MukaiVector& v, const Int& p) {
    const Int& n = ctx.n();
    return {v.r, v.d + v.r * p, v.a + 2 * n * v.d * p + v.r * n * p * p};
}

MukaiVector dual(const MukaiVector& v) { return {v.r, -v.d, v.a}; }

bool is_spherical(const K3Context& ctx, const MukaiVector& v) { return square(ctx, v) == -2; }

bool is_isotropic(const K3Context& ctx, const MukaiVector& v) { return square(ctx, v) == 0; }

Int content(const MukaiVector& v) {
    using boost::multiprecision::gcd;
    return gcd(gcd(abs(v.r), abs(v.d)), abs(v.a));
}

bool is_primitive(const MukaiVector& v) { return content(v) == 1; }

bool is_positive(const K3Context& ctx, const MukaiVector& v) {
    if (!is_primitive(v) || square(ctx, v) < -2) return false;
    if (v.r > 0) return true;
    if (v.r == 0 && v.d > 0) return v.a != 0;
    return v.r == 0 && v.d == 0 && v.a > 0;
}

Int euler_char(const MukaiVector& v) { return v.r + v.a; }

MukaiVector line_bundle(const K3Context& ctx, const Int& p) {
    return {Int(1), p, ctx.n() * p * p + 1};
}

}  // namespace mukai
