// SPDX-License-Identifier: Apache-2.0

#include "mukai/golden.hpp"

#include "mukai/classify.hpp"
#include "mukai/criteria.hpp"
#include "mukai/destabilizers.hpp"
#include "mukai/enumerate.hpp"
#include "mukai/families.hpp"
#include "mukai/lattice.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

namespace mukai {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

Int parse_int(const std::string& s, const std::string& where) {
    try {
        if (s.empty()) throw std::invalid_argument("empty");
        return Int(s);
    } catch (const std::exception&) {
        throw GoldenFileError("malformed integer '" + s + "' in " + where);
    }
}

MukaiVector parse_vector(const std::string& s, const std::string& where) {
    const auto parts = split(s, ':');
    if (parts.size() != 3) throw GoldenFileError("malformed vector '" + s + "' in " + where);
    return {parse_int(parts[0], where), parse_int(parts[1], where), parse_int(parts[2], where)};
}

// Yields (provenance comment, fields) for each data line after the header.
template <class F>
void for_each_record(const std::filesystem::path& csv, std::size_t columns, F&& f) {
    std::ifstream in(csv);
    if (!in) throw GoldenFileError("cannot open golden file " + csv.string());
    std::string line;
    std::string provenance;
    bool header_seen = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            provenance = line.substr(line.find_first_not_of("# "));
            continue;
        }
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        const auto fields = split(line, ',');
        const std::string where = csv.filename().string() + ":" + std::to_string(lineno);
        if (fields.size() != columns) throw GoldenFileError("expected " + std::to_string(columns) + " fields at " + where);
        f(provenance, fields, where);
    }
    if (!header_seen) throw GoldenFileError("golden file " + csv.string() + " has no header");
}

using Key = std::tuple<Int, Int, Int, Int>;

Key key_of(const Int& n, const MukaiVector& v) { return {n, v.r, v.d, v.a}; }

std::string describe(const Int& n, const MukaiVector& v) { return "n=" + n.str() + " v=" + v.str(); }

}  // namespace

std::vector<SporadicRow> load_sporadic_rows(const std::filesystem::path& csv) {
    std::vector<SporadicRow> rows;
    for_each_record(csv, 6, [&](const std::string& prov, const std::vector<std::string>& f, const std::string& where) {
        SporadicRow row;
        row.n = parse_int(f[0], where);
        row.v = {parse_int(f[1], where), parse_int(f[2], where), parse_int(f[3], where)};
        row.h1 = parse_int(f[4], where);
        for (const auto& item : split(f[5], ';')) row.dv.push_back(parse_vector(item, where));
        row.provenance = prov;
        rows.push_back(std::move(row));
    });
    return rows;
}

std::vector<TwistedRow> load_twisted_rows(const std::filesystem::path& csv) {
    std::vector<TwistedRow> rows;
    for_each_record(csv, 6, [&](const std::string& prov, const std::vector<std::string>& f, const std::string& where) {
        TwistedRow row;
        row.n = parse_int(f[0], where);
        row.v = parse_vector(f[1], where);
        row.p = parse_int(f[2], where);
        row.base = parse_vector(f[3], where);
        row.v1 = parse_vector(f[4], where);
        row.h1 = parse_int(f[5], where);
        row.provenance = prov;
        rows.push_back(std::move(row));
    });
    return rows;
}

GoldenReport run_golden(std::int64_t max_rank, const std::filesystem::path& data_dir, unsigned workers) {
    GoldenReport report;
    const auto check = [&](bool good, const std::string& what) {
        report.lines.push_back((good ? "ok       " : "MISMATCH ") + what);
        report.ok = report.ok && good;
    };

    const auto sporadic = load_sporadic_rows(data_dir / "golden" / "sporadic.csv");
    const auto twisted = load_twisted_rows(data_dir / "golden" / "twisted_exceptions.csv");

    for (const auto& row : sporadic) {
        if (row.v.r > max_rank) continue;
        ++report.sporadic_checked;
        const K3Context ctx(row.n);
        const Verdict verdict = weak_bn(ctx, row.v);
        std::vector<MukaiVector> dv;
        for (const auto& dz : find_Dv(ctx, row.v)) dv.push_back(dz.v1);
        auto expected_dv = row.dv;
        std::sort(dv.begin(), dv.end());
        std::sort(expected_dv.begin(), expected_dv.end());
        const bool good = verdict.wbn == false && verdict.h && (*verdict.h)[1] == row.h1 && dv == expected_dv;
        std::string got = verdict.h ? (*verdict.h)[1].str() : "?";
        check(good, row.provenance + ": " + describe(row.n, row.v) + " h1=" + got + " (expected " + row.h1.str() +
                        "), |Dv|=" + std::to_string(dv.size()) + " (expected " + std::to_string(expected_dv.size()) +
                        ")");
    }

    for (const auto& row : twisted) {
        ++report.twisted_checked;
        const K3Context ctx(row.n);
        const bool shape = twist(ctx, row.base, row.p) == row.v;
        const TwistedH1 t = twisted_h1(ctx, row.base, row.p);
        const Verdict verdict = weak_bn(ctx, row.v);
        bool wall_ok = false;
        for (const auto& dz : find_DvBN(ctx, row.v)) wall_ok = wall_ok || dz.v1 == row.v1;
        const bool good = shape && t.value == row.h1 && verdict.h && (*verdict.h)[1] == row.h1 && wall_ok;
        check(good, row.provenance + ": " + describe(row.n, row.v) + " = " + row.base.str() + "(" + row.p.str() +
                        "H) h1=" + (t.value ? t.value->str() : "?") + " (expected " + row.h1.str() + ")");
    }

    // Enumeration against families plus sporadic rows.
    std::map<Key, Int> expected;
    for (const auto& m : family_counterexamples(max_rank)) expected.emplace(key_of(m.n, m.v), m.match.h1);
    for (const auto& row : sporadic) {
        if (row.v.r > max_rank) continue;
        auto [it, fresh] = expected.emplace(key_of(row.n, row.v), row.h1);
        if (!fresh && it->second != row.h1) {
            check(false, "sporadic row " + describe(row.n, row.v) + " conflicts with a family value");
        }
    }
    EnumerateOptions opts;
    opts.max_rank = max_rank;
    opts.workers = workers;
    const EnumerationResult result = enumerate_counterexamples(opts);
    report.enumerated = result.counterexamples.size();
    report.expected = expected.size();
    for (const auto& u : result.undecided) check(false, "undecided: " + describe(u.n, u.v));

    std::map<Key, Int> got;
    for (const auto& v : result.counterexamples) {
        got.emplace(key_of(v.n, v.v), v.h ? (*v.h)[1] : Int(-1));
    }
    std::size_t missing = 0, extra = 0, wrong = 0;
    for (const auto& [k, h1] : expected) {
        auto it = got.find(k);
        const MukaiVector v(std::get<1>(k), std::get<2>(k), std::get<3>(k));
        if (it == got.end()) {
            ++missing;
            check(false, "missing from enumeration: " + describe(std::get<0>(k), v) + " h1=" + h1.str());
        } else if (it->second != h1) {
            ++wrong;
            check(false, "h1 differs: " + describe(std::get<0>(k), v) + " got " + it->second.str() + " expected " +
                             h1.str());
        }
    }
    for (const auto& [k, h1] : got) {
        if (!expected.count(k)) {
            ++extra;
            const MukaiVector v(std::get<1>(k), std::get<2>(k), std::get<3>(k));
            check(false, "unexpected counterexample: " + describe(std::get<0>(k), v) + " h1=" + h1.str());
        }
    }
    check(missing == 0 && extra == 0 && wrong == 0,
          "enumeration up to rank " + std::to_string(max_rank) + ": " + std::to_string(got.size()) + " found, " +
              std::to_string(expected.size()) + " expected");
    return report;
}

}  // namespace mukai
