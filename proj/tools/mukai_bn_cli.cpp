// SPDX-License-Identifier: Apache-2.0
//
// mukai-bn: command-line front end.  Everything goes through the C API in
// mukai_bn.h; this file only parses flags, applies configuration and writes
// the text produced by the library.
//
// Exit codes: 0 success, 1 internal error or golden mismatch, 2 domain
// error (including missing data files), 64 malformed command line.

#include "mukai_bn.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#ifndef MUKAI_BN_DATA_DIR
#define MUKAI_BN_DATA_DIR "data"
#endif

namespace {

constexpr int exit_ok = 0;
constexpr int exit_internal = 1;
constexpr int exit_domain = 2;
constexpr int exit_usage = 64;

// Raised for failures reported by the library; carries the exit code.
struct CliFailure {
    int code;
    std::string message;
};

int exit_code_for(mbn_status st) {
    switch (st) {
        case MBN_OK: return exit_ok;
        case MBN_E_DOMAIN:
        case MBN_E_IO:
        case MBN_E_RANGE:
        case MBN_E_UNDECIDED: return exit_domain;
        case MBN_E_INVALID_ARGUMENT: return exit_usage;
        default: return exit_internal;
    }
}

void check(mbn_status st) {
    if (st != MBN_OK) throw CliFailure{exit_code_for(st), mbn_last_error()};
}

// Owning wrappers so early exits never leak handles.
struct Text {
    mbn_text* p = nullptr;
    ~Text() { mbn_text_destroy(p); }
    std::string str() const { return std::string(mbn_text_data(p), mbn_text_size(p)); }
};

struct Context {
    mbn_context* p = nullptr;
    explicit Context(std::int64_t n) { check(mbn_context_create(n, &p)); }
    ~Context() { mbn_context_destroy(p); }
};

// key=value configuration; '#' starts a comment line.
std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliFailure{exit_domain, "cannot open config file " + path};
    std::map<std::string, std::string> out;
    std::string line;
    int lineno = 0;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw CliFailure{exit_usage, path + ":" + std::to_string(lineno) + ": expected key=value"};
        }
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

std::optional<std::int64_t> config_int(const std::map<std::string, std::string>& cfg, const std::string& key) {
    const auto it = cfg.find(key);
    if (it == cfg.end()) return std::nullopt;
    try {
        std::size_t used = 0;
        const long long x = std::stoll(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument(key);
        return x;
    } catch (const std::exception&) {
        throw CliFailure{exit_usage, "config key " + key + " expects an integer, got '" + it->second + "'"};
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw CliFailure{exit_domain, "cannot write " + out_path};
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

struct VectorArgs {
    std::int64_t n = 1, r = 0, d = 0, a = 0;
    mbn_vector v() const { return {r, d, a}; }
};

void add_vector_flags(CLI::App* cmd, VectorArgs& args) {
    cmd->add_option("--n", args.n, "Half the degree of the K3 surface (H^2 = 2n)")->required()->check(CLI::PositiveNumber);
    cmd->add_option("--r", args.r, "Rank")->required();
    cmd->add_option("--d", args.d, "Degree: c1 = dH")->required();
    cmd->add_option("--a", args.a, "Mukai vector third coordinate")->required();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weak Brill-Noether classification for sheaves on K3 surfaces of Picard rank one"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(mbn_version()));

    std::string config_path;
    std::string out_path;
    app.add_option("--config", config_path, "key=value file: workers, data_dir, r1_max, d1_max, a1_max");
    app.add_option("--out", out_path, "Write output to this path instead of stdout");

    VectorArgs va;
    bool json = false;
    std::optional<std::string> csv;

    auto* classify = app.add_subcommand("classify", "Decide weak Brill-Noether and the generic cohomology");
    add_vector_flags(classify, va);
    classify->add_flag("--json", json, "JSON output (default)");
    classify->add_option("--csv", csv, "CSV output, to PATH when given")->expected(0, 1);

    std::int64_t max_rank = 2;
    std::optional<std::int64_t> only_n;
    std::optional<unsigned> workers;
    bool exhaustive = false;
    auto* enumerate = app.add_subcommand("enumerate", "List all failing vectors up to a rank bound");
    enumerate->add_option("--max-rank", max_rank, "Largest rank")->required()->check(CLI::Range(2, 1000000));
    enumerate->add_option("--n", only_n, "Restrict to one surface")->check(CLI::PositiveNumber);
    enumerate->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    enumerate->add_flag("--exhaustive", exhaustive, "Classify every a instead of stopping at the first success");
    enumerate->add_flag("--json", json, "JSON output");
    enumerate->add_option("--csv", csv, "CSV output (default), to PATH when given")->expected(0, 1);

    bool brute = false;
    std::optional<std::int64_t> r1_max, d1_max, a1_max;
    auto* destab = app.add_subcommand("destab", "Spherical destabilizing classes D_v and D_v^BN");
    add_vector_flags(destab, va);
    destab->add_flag("--brute-force", brute, "Also scan an integer box and report agreement");
    destab->add_option("--r1-max", r1_max, "Box bound on |r1|");
    destab->add_option("--d1-max", d1_max, "Box bound on d1");
    destab->add_option("--a1-max", a1_max, "Box bound on |a1|");
    destab->add_flag("--json", json, "JSON output (default)");

    auto* walls = app.add_subcommand("walls", "Exact wall data for each destabilizer");
    add_vector_flags(walls, va);
    walls->add_flag("--json", json, "JSON output (default)");
    walls->add_option("--csv", csv, "CSV output, to PATH when given")->expected(0, 1);

    auto* gg = app.add_subcommand("gg", "Global generation of the generic sheaf");
    add_vector_flags(gg, va);
    gg->add_flag("--json", json, "JSON output (default)");

    std::int64_t ur = 0, um = 0;
    auto* ulrich = app.add_subcommand("ulrich", "Mukai vector of an Ulrich bundle with respect to mH");
    ulrich->add_option("--n", va.n, "Half the degree")->required()->check(CLI::PositiveNumber);
    ulrich->add_option("--r", ur, "Rank")->required();
    ulrich->add_option("--m", um, "Multiple of H")->required();
    ulrich->add_flag("--json", json, "JSON output (default)");

    std::int64_t p = 0;
    auto* twist = app.add_subcommand("twist-h1", "h^1 of the twisted generic sheaf E(pH)");
    add_vector_flags(twist, va);
    twist->add_option("--p", p, "Twist")->required();
    twist->add_flag("--json", json, "JSON output (default)");

    std::string data_dir;
    std::int64_t golden_rank = 20;
    auto* golden = app.add_subcommand("golden", "Compare against the bundled golden tables");
    golden->add_option("--max-rank", golden_rank, "Largest rank to enumerate")->check(CLI::Range(2, 1000000));
    golden->add_option("--data-dir", data_dir, "Directory holding golden/");
    golden->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        std::map<std::string, std::string> cfg;
        if (!config_path.empty()) cfg = read_config(config_path);

        if (classify->parsed()) {
            Context ctx(va.n);
            mbn_verdict* verdict = nullptr;
            check(mbn_classify(ctx.p, va.v(), &verdict));
            Text t;
            const mbn_status st = mbn_verdict_format(verdict, csv ? MBN_FORMAT_CSV : MBN_FORMAT_JSON, &t.p);
            mbn_verdict_destroy(verdict);
            check(st);
            if (csv) {
                emit(std::string(mbn_csv_header()) + "\n" + t.str() + "\n", csv->empty() ? out_path : *csv);
            } else {
                emit(t.str(), out_path);
            }
        } else if (enumerate->parsed()) {
            mbn_enumerate_options opt{};
            opt.max_rank = max_rank;
            opt.n = only_n.value_or(0);
            check(mbn_resolve_workers(workers.value_or(0), config_int(cfg, "workers").value_or(0), &opt.workers));
            opt.exhaustive = exhaustive ? 1 : 0;
            mbn_enumeration* e = nullptr;
            check(mbn_enumerate(&opt, &e));
            const std::size_t undecided = mbn_enumeration_undecided_count(e);
            Text t;
            const mbn_status st = mbn_enumeration_format(e, json ? MBN_FORMAT_JSON : MBN_FORMAT_CSV, &t.p);
            mbn_enumeration_destroy(e);
            check(st);
            emit(t.str(), csv && !csv->empty() ? *csv : out_path);
            if (undecided > 0) {
                std::cerr << "warning: " << undecided << " vector(s) left undecided (wbn empty in the output)\n";
            }
        } else if (destab->parsed()) {
            Context ctx(va.n);
            Text t;
            check(mbn_destab(ctx.p, va.v(), &t.p));
            if (!brute) {
                emit(t.str(), out_path);
            } else {
                mbn_search_box box{};
                check(mbn_default_search_box(ctx.p, va.v(), &box));
                box.r1_max = r1_max.value_or(config_int(cfg, "r1_max").value_or(box.r1_max));
                box.d1_max = d1_max.value_or(config_int(cfg, "d1_max").value_or(box.d1_max));
                box.a1_max = a1_max.value_or(config_int(cfg, "a1_max").value_or(box.a1_max));
                Text bf;
                check(mbn_brute_force_destab(ctx.p, va.v(), &box, &bf.p));
                auto j = nlohmann::ordered_json::parse(t.str());
                auto scan = nlohmann::ordered_json::parse(bf.str());
                j["box"] = {{"r1_max", box.r1_max}, {"d1_max", box.d1_max}, {"a1_max", box.a1_max}};
                j["brute_force"] = scan;
                j["agree"] = (scan == j["Dv"]);
                emit(j.dump(2) + "\n", out_path);
            }
        } else if (walls->parsed()) {
            Context ctx(va.n);
            Text t;
            check(mbn_walls(ctx.p, va.v(), csv ? MBN_FORMAT_CSV : MBN_FORMAT_JSON, &t.p));
            emit(t.str(), csv && !csv->empty() ? *csv : out_path);
        } else if (gg->parsed()) {
            Context ctx(va.n);
            mbn_gg_status status{};
            Text t;
            check(mbn_globally_generated(ctx.p, va.v(), &status, &t.p));
            emit(t.str(), out_path);
        } else if (ulrich->parsed()) {
            int exists = 0;
            mbn_vector u{};
            check(mbn_ulrich(va.n, ur, um, &exists, &u));
            nlohmann::ordered_json j = {{"n", va.n}, {"r", ur}, {"m", um}, {"exists", exists != 0}};
            j["v"] = exists ? nlohmann::ordered_json{u.r, u.d, u.a} : nlohmann::ordered_json(nullptr);
            emit(j.dump(2) + "\n", out_path);
        } else if (twist->parsed()) {
            Context ctx(va.n);
            Text t;
            check(mbn_twisted_h1_compute(ctx.p, va.v(), p, nullptr, &t.p));
            emit(t.str(), out_path);
        } else if (golden->parsed()) {
            if (data_dir.empty()) {
                const auto it = cfg.find("data_dir");
                data_dir = it != cfg.end() ? it->second : std::string(MUKAI_BN_DATA_DIR);
            }
            unsigned w = 1;
            check(mbn_resolve_workers(workers.value_or(0), config_int(cfg, "workers").value_or(0), &w));
            int ok = 0;
            Text t;
            check(mbn_golden(golden_rank, data_dir.c_str(), w, &ok, &t.p));
            emit(t.str(), out_path);
            return ok ? exit_ok : exit_internal;
        }
    } catch (const CliFailure& f) {
        std::cerr << "mukai-bn: " << f.message << '\n';
        return f.code;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "mukai-bn: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_ok;
}
