// SPDX-License-Identifier: Apache-2.0
//
// Deterministic JSON and CSV renderings of verdicts and auxiliary results.

#pragma once

#include "mukai/classify.hpp"
#include "mukai/criteria.hpp"
#include "mukai/destabilizers.hpp"
#include "mukai/walls.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace mukai {

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::ordered_json int_json(const Int& x);
nlohmann::ordered_json vector_json(const MukaiVector& v);

// {n, v, wbn, h, rule, resolution, ...}; wbn and h are null when undecided,
// in which case h1_bounds carries [lo, hi] (hi null when unbounded).
nlohmann::ordered_json verdict_json(const Verdict& verdict);

// Header "n,r,d,a,wbn,h0,h1,h2,rule"; undecided fields are left empty.
std::string verdict_csv_header();
std::string verdict_csv_row(const Verdict& verdict);

nlohmann::ordered_json destabilizer_json(const Destabilizer& dz);

// {"Dv": [...], "DvBN": [...]}.
nlohmann::ordered_json destab_json(const K3Context& ctx, const MukaiVector& v);

// One record per member of D_v with the exact wall data.
struct WallRecord {
    MukaiVector v1;
    Wall wall;
    Rational height_sq;
};
std::vector<WallRecord> wall_records(const K3Context& ctx, const MukaiVector& v);
nlohmann::ordered_json walls_json(const std::vector<WallRecord>& records);
std::string walls_csv(const std::vector<WallRecord>& records);

nlohmann::ordered_json gg_json(const K3Context& ctx, const MukaiVector& v, const GGVerdict& gg);
nlohmann::ordered_json twisted_json(const K3Context& ctx, const MukaiVector& v, const Int& p, const TwistedH1& t);

}  // namespace mukai
