// SPDX-License-Identifier: Apache-2.0

#include "mukai/families.hpp"

#include "mukai/lattice.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace mukai {

namespace {

Int max0(const Int& x) { return x > 0 ? x : Int(0); }

bool is_rd(const MukaiVector& v, std::int64_t r, std::int64_t d) { return v.r == r && v.d == d; }

// The sporadic n = 1, a = 2 vectors whose twists carry their own h^1 values.
// Returns the value at twist p when (r, d) is one of them.
std::optional<Int> sporadic_a2_value(const MukaiVector& v, const Int& p) {
    if (is_rd(v, 5, 3)) return Int(p == 1 ? 3 : 0);
    if (is_rd(v, 11, 5)) return Int(p == 1 ? 5 : 0);
    if (is_rd(v, 23, 7)) return Int(p == 1 ? 13 : (p == 2 ? 5 : 0));
    if (is_rd(v, 12, 5)) return Int(p == 1 ? 6 : 0);
    return std::nullopt;
}

// n = 1, v = ((d^2+1)/2, d, 2) with d odd: the twist by (d-3)/2 has h^1 = 8.
bool is_half_square_row(const K3Context& ctx, const MukaiVector& v, const Int& p) {
    return ctx.n() == 1 && v.a == 2 && v.d >= 5 && v.d % 2 == 1 && 2 * v.r == v.d * v.d + 1 && 2 * p == v.d - 3;
}

// Class of the largest wall for the sporadic twisted rows.
MukaiVector sporadic_wall_class(const K3Context& ctx, const MukaiVector& base, const Int& p) {
    if (is_rd(base, 5, 3)) return twist(ctx, MukaiVector(2, 1, 1), p);
    if (is_rd(base, 11, 5)) return line_bundle(ctx, p);
    if (is_rd(base, 23, 7)) return twist(ctx, MukaiVector(10, 3, 1), p);
    if (is_rd(base, 12, 5)) return twist(ctx, MukaiVector(5, 2, 1), p);
    return line_bundle(ctx, p);  // half-square rows
}

std::string pji(const Int& p, const Int& j, const Int& i) {
    return "p=" + p.str() + ",j=" + j.str() + ",i=" + i.str();
}

}  // namespace

std::string to_string(FamilyId id) {
    switch (id) {
        case FamilyId::one: return "family-1";
        case FamilyId::two: return "family-2";
        case FamilyId::three: return "family-3";
        case FamilyId::four: return "family-4";
        case FamilyId::five: return "family-5";
        case FamilyId::exceptional: return "exceptional-n1";
    }
    return "family-?";
}

bool is_listed_a2_vector(const K3Context& ctx, const MukaiVector& v) {
    if (v.a != 2) return false;
    const Int& n = ctx.n();
    if (n == 1) {
        if (is_rd(v, 11, 5) || is_rd(v, 23, 7) || is_rd(v, 12, 5)) return true;
        return v.d >= 3 && 2 * v.d - 3 <= v.r && v.r <= 2 * v.d - 1;
    }
    if (n == 2) return is_rd(v, 11, 4) || is_rd(v, 7, 3) || is_rd(v, 8, 3);
    if (n == 3) return is_rd(v, 11, 3);
    return false;
}

std::optional<Int> twisted_closed_form(const K3Context& ctx, const MukaiVector& v, const Int& p) {
    if (p < 1 || v.r < 0 || v.d <= 0) return std::nullopt;
    const Int sq = square(ctx, v);
    if (sq < -2) return std::nullopt;
    const Int& n = ctx.n();
    const Int& r = v.r;
    const Int& d = v.d;
    const Int lb = n * p * p + 1;  // chi(O(pH)) - 1

    if (v.a <= 0 && -v.a <= r) {
        return max0(r - 2 * p * d * n - lb * (-v.a));
    }
    if (v.a == 1) {
        if (n == 1 && r == 2 * d - 1) return Int(0);
        if (p < d) return max0(r - 2 * p * d * n + lb);
        if (p == d) return Int(sq == -2 ? 1 : 0);
        if (p == d + 1 && sq == -2) return Int(0);
    }
    if (v.a == 2) {
        if (n == 1) {
            if (auto s = sporadic_a2_value(v, p)) return s;
        }
        if (is_listed_a2_vector(ctx, v)) return Int(0);
        if (is_half_square_row(ctx, v, p)) return Int(8);
        if (2 * p < d) return max0(r - 2 * p * d * n + 2 * lb);
    }
    if (v.a >= 1 && (n + 1) * d == r) {
        if (v.a * (n + 1) > n * d) {
            // Only the spherical (n+1, 1, 1) satisfies this.
            if (v.a == 1 && d == 1) return Int(p == 1 ? 1 : 0);
            return std::nullopt;
        }
        return p == 1 ? max0((n + 1) * v.a - (n - 1) * d) : Int(0);
    }
    return std::nullopt;
}

std::optional<FamilyMatch> match_family(const K3Context& ctx, const MukaiVector& v) {
    if (v.r < 1 || v.d <= 0 || square(ctx, v) < -2) return std::nullopt;
    const Int& n = ctx.n();
    std::vector<FamilyMatch> found;

    // Family 1.
    {
        const Int t = v.r - n;
        if (t >= 1) {
            const Int r1 = sqrt(t);
            if (r1 * r1 == t && (n + 1) % r1 == 0) {
                const Int q = (n + 1) / r1;
                if (v.d == q + r1 && v.a == q * q + n) {
                    found.push_back({FamilyId::one, "r1=" + r1.str(), MukaiVector(r1, Int(1), q), Int(1)});
                }
            }
        }
    }

    // Families 2-4 and the sporadic rows: v = twist(base, p) with base.a <= 2.
    for (Int p = 1; v.d - v.r * p > 0; ++p) {
        const MukaiVector base = twist(ctx, v, -p);
        const Int& j = base.d;
        const Int& ab = base.a;
        if (ab > 2) continue;
        const MukaiVector ob = line_bundle(ctx, p);
        if (n == 1 && ab == 2 && (sporadic_a2_value(base, p) || is_half_square_row(ctx, base, p))) {
            const Int h1 = *twisted_closed_form(ctx, base, p);
            if (h1 > 0) {
                found.push_back({FamilyId::exceptional, "base=" + base.str() + ",p=" + p.str(),
                                 sporadic_wall_class(ctx, base, p), h1});
            }
            continue;
        }
        if (ab <= 0 && -ab <= v.r) {
            const Int i = -ab;
            found.push_back({FamilyId::two, pji(p, j, i), ob, max0(v.r - 2 * n * p * j - (n * p * p + 1) * i)});
        }
        if (ab <= 1 && 1 - ab <= v.r + 1 && p <= j) {
            const Int i = 1 - ab;
            const bool excluded = n == 1 && v.r == 2 * j - 1 && (i == 0 || i == 1);
            if (!excluded) {
                std::optional<Int> h1;
                if (p < j || i >= 1) {
                    h1 = max0(v.r - 2 * n * p * j - (n * p * p + 1) * (i - 1));
                } else {
                    h1 = Int(square(ctx, v) == -2 ? 1 : 0);
                }
                found.push_back({FamilyId::three, pji(p, j, i), ob, *h1});
            }
        }
        if (ab <= 2 && 2 - ab <= v.r + 2 && 2 * p < j) {
            const Int i = 2 - ab;
            // i = 1 is the a = 1 case and inherits its n = 1 exception.
            const bool excluded = (i == 0 && is_listed_a2_vector(ctx, base)) || (i == 1 && n == 1 && v.r == 2 * j - 1);
            if (!excluded) {
                found.push_back(
                    {FamilyId::four, pji(p, j, i), ob, max0(v.r - 2 * n * p * j - (n * p * p + 1) * (i - 2))});
            }
        }
    }

    // Family 5.
    if (v.r % (n + 1) == 0) {
        const Int s = v.r / (n + 1);
        const Int af = v.a - v.r * n - 2 * s * n;
        if (v.d == v.r + s && af >= 1 && af * (n + 1) * (n + 1) <= v.r * n) {
            found.push_back({FamilyId::five, "a=" + af.str(), MukaiVector(Int(1), Int(1), n + 1),
                             max0((n + 1) * af - (n - 1) * s)});
        }
    }

    if (found.empty()) return std::nullopt;
    for (const auto& f : found) {
        if (f.h1 != found.front().h1) {
            throw InternalError("families disagree on " + v.str() + " (n=" + n.str() + "): " +
                                to_string(found.front().id) + " gives " + found.front().h1.str() + ", " +
                                to_string(f.id) + " gives " + f.h1.str());
        }
    }
    const auto rank = [](FamilyId id) {
        switch (id) {
            case FamilyId::one: return 0;
            case FamilyId::exceptional: return 1;
            default: return static_cast<int>(id);
        }
    };
    return *std::min_element(found.begin(), found.end(),
                             [&](const FamilyMatch& x, const FamilyMatch& y) { return rank(x.id) < rank(y.id); });
}

std::vector<FamilyMember> family_counterexamples(std::int64_t max_rank) {
    std::map<std::tuple<Int, Int, Int, Int>, FamilyMember> out;
    const auto add = [&](const K3Context& ctx, const MukaiVector& v, const std::optional<Int>& expected) {
        auto m = match_family(ctx, v);
        if (!m) throw InternalError("generated vector " + v.str() + " is not recognised by the family matcher");
        if (expected && *expected != m->h1) {
            throw InternalError("family matcher and twisted closed form disagree on " + v.str());
        }
        if (m->h1 <= 0) return;
        out.emplace(std::make_tuple(ctx.n(), v.r, v.d, v.a), FamilyMember{ctx.n(), v, *m});
    };

    for (std::int64_t n = 1; n < max_rank; ++n) {
        const K3Context ctx(n);
        for (std::int64_t r = n + 1; r <= max_rank; ++r) {
            // Family 1.
            for (std::int64_t r1 = 1; r1 <= n + 1; ++r1) {
                if ((n + 1) % r1 == 0 && n + r1 * r1 == r) {
                    const std::int64_t q = (n + 1) / r1;
                    add(ctx, MukaiVector(r, q + r1, q * q + n), std::nullopt);
                }
            }
            // Twists of vectors with a <= 2.  Positivity of the closed form
            // bounds j except for the sporadic and spherical rows, which
            // have j at most 7 here.
            for (std::int64_t p = 1; p <= r; ++p) {
                const std::int64_t lb = n * p * p + 1;
                for (std::int64_t ab = -r; ab <= 2; ++ab) {
                    std::int64_t j_max = (r + lb * ab) / (2 * n * p) + 1;
                    if (ab >= 1) j_max = std::max<std::int64_t>(j_max, std::max<std::int64_t>(p + 1, 8));
                    for (std::int64_t j = 1; j <= j_max; ++j) {
                        const MukaiVector base(r, j, ab);
                        if (square(ctx, base) < -2) continue;
                        const auto h1 = twisted_closed_form(ctx, base, Int(p));
                        if (h1 && *h1 > 0) add(ctx, twist(ctx, base, Int(p)), h1);
                    }
                }
            }
            // Family 5.
            if (r % (n + 1) == 0) {
                const std::int64_t s = r / (n + 1);
                for (std::int64_t af = 1; af * (n + 1) * (n + 1) <= r * n; ++af) {
                    add(ctx, MukaiVector(r, r + s, af + r * n + 2 * s * n), std::nullopt);
                }
            }
        }
    }
    std::vector<FamilyMember> list;
    list.reserve(out.size());
    for (auto& [key, member] : out) list.push_back(std::move(member));
    return list;
}

}  // namespace mukai
