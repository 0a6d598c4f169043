// SPDX-License-Identifier: Apache-2.0

#include "mukai/destabilizers.hpp"

#include "mukai/lattice.hpp"

#include <algorithm>
#include <limits>

namespace mukai {

namespace {

// Positive divisors of x > 0 by trial division in native arithmetic.
std::vector<std::uint64_t> positive_divisors_u64(std::uint64_t x) {
    std::vector<std::uint64_t> small;
    std::vector<std::uint64_t> large;
    for (std::uint64_t q = 1; q <= x / q; ++q) {
        if (x % q == 0) {
            small.push_back(q);
            if (q != x / q) large.push_back(x / q);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::vector<Int> positive_divisors(const Int& x) {
    std::vector<Int> out;
    if (x <= std::numeric_limits<std::uint64_t>::max()) {
        for (std::uint64_t q : positive_divisors_u64(x.convert_to<std::uint64_t>())) out.emplace_back(q);
        return out;
    }
    std::vector<Int> large;
    for (Int q = 1; q * q <= x; ++q) {
        if (x % q == 0) {
            out.push_back(q);
            if (q * q != x) large.push_back(x / q);
        }
    }
    out.insert(out.end(), large.rbegin(), large.rend());
    return out;
}

bool by_d1_r1_a1(const Destabilizer& x, const Destabilizer& y) {
    if (x.v1.d != y.v1.d) return x.v1.d < y.v1.d;
    if (x.v1.r != y.v1.r) return x.v1.r < y.v1.r;
    return x.v1.a < y.v1.a;
}

void check_domain(const K3Context& ctx, const MukaiVector& v) {
    if (v.d <= 0) throw DomainError("destabilizers require d > 0, got " + v.str());
    if (square(ctx, v) < -2) throw DomainError("destabilizers require v^2 >= -2, got " + v.str());
}

// The four defining conditions, given v1 with v1^2 = -2 eps and 0 < d1 <= d.
std::optional<Destabilizer> admit(const K3Context& ctx, const MukaiVector& v, const MukaiVector& v1, int eps) {
    if (pairing(ctx, v, v1) >= 2 - 2 * eps) return std::nullopt;
    Int m = v1.r * v.d - v.r * v1.d;
    Int k = v1.a * v.d - v.a * v1.d;
    if (m == 0 || k == 0 || (k > 0) != (m > 0)) return std::nullopt;
    return Destabilizer{v1, std::move(m), std::move(k), eps};
}

}  // namespace

std::vector<Int> signed_divisors(const Int& x) {
    if (x == 0) throw DomainError("zero has no finite divisor set");
    const std::vector<Int> pos = positive_divisors(abs(x));
    std::vector<Int> out;
    out.reserve(2 * pos.size());
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) out.push_back(-*it);
    out.insert(out.end(), pos.begin(), pos.end());
    return out;
}

std::vector<Destabilizer> find_Dv(const K3Context& ctx, const MukaiVector& v) {
    check_domain(ctx, v);
    std::vector<Destabilizer> out;
    for (Int d1 = 1; d1 <= v.d; ++d1) {
        for (int eps = 0; eps <= 1; ++eps) {
            // v1^2 = 2 n d1^2 - 2 r1 a1 = -2 eps  <=>  r1 a1 = n d1^2 + eps.
            const Int prod = ctx.n() * d1 * d1 + eps;
            for (const Int& r1 : signed_divisors(prod)) {
                const MukaiVector v1{r1, d1, prod / r1};
                if (auto dz = admit(ctx, v, v1, eps)) out.push_back(std::move(*dz));
            }
        }
    }
    std::sort(out.begin(), out.end(), by_d1_r1_a1);
    return out;
}

std::vector<Destabilizer> find_DvBN(const K3Context& ctx, const MukaiVector& v) {
    std::vector<Destabilizer> out;
    for (auto& dz : find_Dv(ctx, v)) {
        if (dz.m > 0 && dz.m <= dz.k) out.push_back(std::move(dz));
    }
    return out;
}

std::vector<Destabilizer> top_wall_candidates(const K3Context& ctx, const MukaiVector& v) {
    std::vector<Destabilizer> bn = find_DvBN(ctx, v);
    std::vector<Destabilizer> out;
    for (auto& dz : bn) {
        if (out.empty()) {
            out.push_back(std::move(dz));
            continue;
        }
        // Heights compare as k/m with m > 0.
        const Int lhs = dz.k * out.front().m;
        const Int rhs = out.front().k * dz.m;
        if (lhs > rhs) {
            out.clear();
            out.push_back(std::move(dz));
        } else if (lhs == rhs) {
            out.push_back(std::move(dz));
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const Destabilizer& x, const Destabilizer& y) {
        if (x.v1.d != y.v1.d) return x.v1.d < y.v1.d;
        return x.v1.r < y.v1.r;
    });
    return out;
}

std::optional<Destabilizer> largest_tss_wall(const K3Context& ctx, const MukaiVector& v,
                                             const std::function<bool(const Destabilizer&)>& accept) {
    const std::vector<Destabilizer> cands = top_wall_candidates(ctx, v);
    if (cands.empty()) return std::nullopt;
    if (accept) {
        for (const auto& c : cands) {
            if (accept(c)) return c;
        }
    }
    return cands.front();
}

std::vector<Destabilizer> brute_force_Dv(const K3Context& ctx, const MukaiVector& v, const SearchBox& box) {
    check_domain(ctx, v);
    using I = __int128;
    const I n = to_i64(ctx.n());
    const I r = to_i64(v.r);
    const I d = to_i64(v.d);
    const I a = to_i64(v.a);
    const I d1_hi = std::min<I>(d, box.d1_max);
    std::vector<Destabilizer> out;
    for (I r1 = -box.r1_max; r1 <= box.r1_max; ++r1) {
        for (I d1 = 1; d1 <= d1_hi; ++d1) {
            for (I a1 = -box.a1_max; a1 <= box.a1_max; ++a1) {
                const I sq = 2 * n * d1 * d1 - 2 * r1 * a1;
                if (sq != 0 && sq != -2) continue;
                const I eps = -sq / 2;
                const I pair = 2 * n * d * d1 - r * a1 - r1 * a;
                if (pair >= sq + 2) continue;
                const I m = r1 * d - r * d1;
                const I k = a1 * d - a * d1;
                if (m == 0 || k == 0 || (k > 0) != (m > 0)) continue;
                const auto i64 = [](I x) { return static_cast<std::int64_t>(x); };
                out.push_back(Destabilizer{MukaiVector(i64(r1), i64(d1), i64(a1)), Int(i64(m)), Int(i64(k)),
                                           static_cast<int>(eps)});
            }
        }
    }
    std::sort(out.begin(), out.end(), by_d1_r1_a1);
    return out;
}

SearchBox default_search_box(const K3Context& ctx, const MukaiVector& v) {
    // Members satisfy |r1| < r and d1 < 2r/n; the square condition then bounds
    // |a1| by n d1^2 + 1.
    const std::int64_t n = to_i64(ctx.n());
    const std::int64_t r = std::max<std::int64_t>(to_i64(abs(v.r)), 1);
    SearchBox box;
    box.r1_max = r;
    box.d1_max = std::min<std::int64_t>(to_i64(v.d), 2 * r / n + 1);
    box.a1_max = n * box.d1_max * box.d1_max + 1;
    return box;
}

}  // namespace mukai
