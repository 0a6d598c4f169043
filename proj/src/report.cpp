// SPDX-License-Identifier: Apache-2.0

#include "mukai/report.hpp"

#include "mukai/lattice.hpp"

#include <limits>
#include <sstream>

namespace mukai {

using nlohmann::ordered_json;

namespace {

ordered_json node_json(const ResolutionNode& node);

ordered_json sub_verdict_summary(const std::shared_ptr<const Verdict>& v) {
    if (!v) return nullptr;
    ordered_json j;
    j["v"] = vector_json(v->v);
    j["h1"] = v->h ? int_json((*v->h)[1]) : ordered_json(nullptr);
    j["rule"] = v->rule;
    return j;
}

ordered_json node_json(const ResolutionNode& node) {
    ordered_json j;
    j["kind"] = to_string(node.kind);
    j["rule"] = node.rule;
    switch (node.kind) {
        case ResolutionNode::Kind::leaf_wbn:
            break;
        case ResolutionNode::Kind::sub_then_quotient:
            j["sub"] = vector_json(node.sub);
            j["multiplicity"] = int_json(node.multiplicity);
            j["quotient"] = vector_json(node.quotient);
            j["quotient_tag"] = to_string(node.tag);
            if (node.tag == QuotientTag::shifted_line_bundle || node.tag == QuotientTag::shifted_structure) {
                j["tag_p"] = int_json(node.tag_p);
                j["tag_k"] = int_json(node.tag_k);
            }
            j["sub_verdict"] = sub_verdict_summary(node.sub_verdict);
            if (node.quotient_verdict) j["quotient_verdict"] = sub_verdict_summary(node.quotient_verdict);
            break;
        case ResolutionNode::Kind::twist:
            j["p"] = int_json(node.p);
            j["untwisted"] = vector_json(node.untwisted);
            j["untwisted_verdict"] = sub_verdict_summary(node.untwisted_verdict);
            break;
    }
    j["h1_bounds"] = {int_json(node.h1_lo), node.h1_hi ? int_json(*node.h1_hi) : ordered_json(nullptr)};
    return j;
}

Int rational_num(const Rational& q) { return boost::multiprecision::numerator(q); }
Int rational_den(const Rational& q) { return boost::multiprecision::denominator(q); }

}  // namespace

ordered_json int_json(const Int& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
        return x.convert_to<std::int64_t>();
    }
    return x.str();
}

ordered_json vector_json(const MukaiVector& v) { return {int_json(v.r), int_json(v.d), int_json(v.a)}; }

ordered_json verdict_json(const Verdict& verdict) {
    ordered_json j;
    j["n"] = int_json(verdict.n);
    j["v"] = vector_json(verdict.v);
    j["wbn"] = verdict.wbn ? ordered_json(*verdict.wbn) : ordered_json(nullptr);
    if (verdict.h) {
        j["h"] = {int_json((*verdict.h)[0]), int_json((*verdict.h)[1]), int_json((*verdict.h)[2])};
    } else {
        j["h"] = nullptr;
        j["h1_bounds"] = {int_json(verdict.h1_lo),
                          verdict.h1_hi ? int_json(*verdict.h1_hi) : ordered_json(nullptr)};
    }
    j["rule"] = verdict.rule;
    ordered_json res = ordered_json::array();
    for (const auto& node : verdict.resolution) res.push_back(node_json(*node));
    j["resolution"] = std::move(res);
    if (verdict.wall) j["wall"] = vector_json(verdict.wall->v1);
    if (verdict.family) {
        j["family"] = {{"id", to_string(verdict.family->id)},
                       {"params", verdict.family->params},
                       {"v1", vector_json(verdict.family->v1)},
                       {"h1", int_json(verdict.family->h1)}};
    }
    return j;
}

std::string verdict_csv_header() { return "n,r,d,a,wbn,h0,h1,h2,rule"; }

std::string verdict_csv_row(const Verdict& verdict) {
    std::ostringstream os;
    os << verdict.n << ',' << verdict.v.r << ',' << verdict.v.d << ',' << verdict.v.a << ',';
    if (verdict.wbn) os << (*verdict.wbn ? "true" : "false");
    os << ',';
    if (verdict.h) {
        os << (*verdict.h)[0] << ',' << (*verdict.h)[1] << ',' << (*verdict.h)[2];
    } else {
        os << ",,";
    }
    os << ',' << verdict.rule;
    return os.str();
}

ordered_json destabilizer_json(const Destabilizer& dz) {
    return {{"r1", int_json(dz.v1.r)}, {"d1", int_json(dz.v1.d)}, {"a1", int_json(dz.v1.a)},
            {"m", int_json(dz.m)},     {"k", int_json(dz.k)},     {"epsilon", dz.epsilon}};
}

ordered_json destab_json(const K3Context& ctx, const MukaiVector& v) {
    ordered_json dv = ordered_json::array();
    ordered_json bn = ordered_json::array();
    for (const auto& dz : find_Dv(ctx, v)) {
        dv.push_back(destabilizer_json(dz));
        if (dz.m > 0 && dz.m <= dz.k) bn.push_back(destabilizer_json(dz));
    }
    return {{"n", int_json(ctx.n())}, {"v", vector_json(v)}, {"Dv", std::move(dv)}, {"DvBN", std::move(bn)}};
}

std::vector<WallRecord> wall_records(const K3Context& ctx, const MukaiVector& v) {
    std::vector<WallRecord> out;
    for (const auto& dz : find_Dv(ctx, v)) {
        out.push_back({dz.v1, wall_between(ctx, v, dz.v1), height_at_s_zero_sq(ctx, v, dz.v1)});
    }
    return out;
}

ordered_json walls_json(const std::vector<WallRecord>& records) {
    ordered_json arr = ordered_json::array();
    for (const auto& rec : records) {
        arr.push_back({{"r1", int_json(rec.v1.r)},
                       {"d1", int_json(rec.v1.d)},
                       {"a1", int_json(rec.v1.a)},
                       {"alpha_num", int_json(rational_num(rec.wall.center))},
                       {"alpha_den", int_json(rational_den(rec.wall.center))},
                       {"rho_sq_num", int_json(rational_num(rec.wall.radius_sq))},
                       {"rho_sq_den", int_json(rational_den(rec.wall.radius_sq))},
                       {"height_sq_num", int_json(rational_num(rec.height_sq))},
                       {"height_sq_den", int_json(rational_den(rec.height_sq))}});
    }
    return arr;
}

std::string walls_csv(const std::vector<WallRecord>& records) {
    std::ostringstream os;
    os << "r1,d1,a1,alpha_num,alpha_den,rho_sq_num,rho_sq_den,height_sq_num,height_sq_den\n";
    for (const auto& rec : records) {
        os << rec.v1.r << ',' << rec.v1.d << ',' << rec.v1.a << ',' << rational_num(rec.wall.center) << ','
           << rational_den(rec.wall.center) << ',' << rational_num(rec.wall.radius_sq) << ','
           << rational_den(rec.wall.radius_sq) << ',' << rational_num(rec.height_sq) << ','
           << rational_den(rec.height_sq) << '\n';
    }
    return os.str();
}

ordered_json gg_json(const K3Context& ctx, const MukaiVector& v, const GGVerdict& gg) {
    return {{"n", int_json(ctx.n())}, {"v", vector_json(v)}, {"status", to_string(gg.status)}, {"rule", gg.rule}};
}

ordered_json twisted_json(const K3Context& ctx, const MukaiVector& v, const Int& p, const TwistedH1& t) {
    return {{"n", int_json(ctx.n())},
            {"v", vector_json(v)},
            {"p", int_json(p)},
            {"h1", t.value ? int_json(*t.value) : ordered_json(nullptr)},
            {"h1_bounds", {int_json(t.lo), t.hi ? int_json(*t.hi) : ordered_json(nullptr)}},
            {"rule", t.rule}};
}

}  // namespace mukai
