// SPDX-License-Identifier: Apache-2.0
//
// extern "C" layer over the C++ core.  Exceptions never cross this boundary:
// each entry point translates them into an mbn_status and records the
// message for mbn_last_error().

#include "mukai_bn.h"

#include "mukai/classify.hpp"
#include "mukai/criteria.hpp"
#include "mukai/destabilizers.hpp"
#include "mukai/enumerate.hpp"
#include "mukai/golden.hpp"
#include "mukai/lattice.hpp"
#include "mukai/report.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

struct mbn_context {
    mukai::K3Context ctx;
};

struct mbn_verdict {
    mukai::Verdict verdict;
};

struct mbn_enumeration {
    std::vector<mbn_verdict> failing;
    std::vector<mbn_verdict> undecided;
    std::uint64_t classified = 0;
};

struct mbn_text {
    std::string data;
};

namespace {

thread_local std::string last_error;

mbn_status fail(mbn_status status, const char* what) {
    last_error = what;
    return status;
}

// Runs body() and maps the exception hierarchy of the core onto status codes.
template <class F>
mbn_status guarded(F&& body) {
    try {
        body();
        last_error.clear();
        return MBN_OK;
    } catch (const mukai::GoldenFileError& e) {
        return fail(MBN_E_IO, e.what());
    } catch (const mukai::DomainError& e) {
        return fail(MBN_E_DOMAIN, e.what());
    } catch (const mukai::InternalError& e) {
        return fail(MBN_E_INTERNAL, e.what());
    } catch (const std::bad_alloc&) {
        return fail(MBN_E_NO_MEMORY, "out of memory");
    } catch (const std::exception& e) {
        return fail(MBN_E_INTERNAL, e.what());
    } catch (...) {
        return fail(MBN_E_INTERNAL, "unknown exception");
    }
}

mukai::MukaiVector to_core(mbn_vector v) { return mukai::MukaiVector(v.r, v.d, v.a); }

mbn_vector to_c(const mukai::MukaiVector& v) {
    return {mukai::to_i64(v.r), mukai::to_i64(v.d), mukai::to_i64(v.a)};
}

bool fits_i64(const mukai::Int& x) {
    return x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max();
}

mbn_text* make_text(std::string s) { return new mbn_text{std::move(s)}; }

}  // namespace

extern "C" {

const char* mbn_version(void) { return "1.0.0"; }

const char* mbn_last_error(void) { return last_error.c_str(); }

const char* mbn_text_data(const mbn_text* text) { return text ? text->data.c_str() : ""; }

size_t mbn_text_size(const mbn_text* text) { return text ? text->data.size() : 0; }

void mbn_text_destroy(mbn_text* text) { delete text; }

mbn_status mbn_context_create(int64_t n, mbn_context** out) {
    if (!out) return fail(MBN_E_INVALID_ARGUMENT, "null output pointer");
    *out = nullptr;
    return guarded([&] { *out = new mbn_context{mukai::K3Context(n)}; });
}

int64_t mbn_context_n(const mbn_context* ctx) { return ctx ? mukai::to_i64(ctx->ctx.n()) : 0; }

void mbn_context_destroy(mbn_context* ctx) { delete ctx; }

void mbn_clear_cache(void) { mukai::clear_verdict_cache(); }

mbn_status mbn_pairing(const mbn_context* ctx, mbn_vector u, mbn_vector v, int64_t* out) {
    if (!ctx || !out) return fail(MBN_E_INVALID_ARGUMENT, "null argument");
    mukai::Int x;
    const mbn_status st = guarded([&] { x = mukai::pairing(ctx->ctx, to_core(u), to_core(v)); });
    if (st != MBN_OK) return st;
    if (!fits_i64(x)) return fail(MBN_E_RANGE, ("pairing " + x.str() + " does not fit in 64 bits").c_str());
    *out = x.convert_to<std::int64_t>();
    return MBN_OK;
}

mbn_status mbn_twist(const mbn_context* ctx, mbn_vector v, int64_t p, mbn_vector* out) {
    if (!ctx || !out) return fail(MBN_E_INVALID_ARGUMENT, "null argument");
    mukai::MukaiVector w;
    const mbn_status st = guarded([&] { w = mukai::twist(ctx->ctx, to_core(v), p); });
    if (st != MBN_OK) return st;
    if (!fits_i64(w.r) || !fits_i64(w.d) || !fits_i64(w.a)) {
        return fail(MBN_E_RANGE, ("twist " + w.str() + " does not fit in 64 bits").c_str());
    }
    *out = to_c(w);
    return MBN_OK;
}

mbn_status mbn_classify(const mbn_context* ctx, mbn_vector v, mbn_verdict** out) {
    if (!ctx || !out) return fail(MBN_E_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] { *out = new mbn_verdict{mukai::weak_bn(ctx->ctx, to_core(v))}; });
}

void mbn_verdict_destroy(mbn_verdict* verdict) { delete verdict; }

mbn_status mbn_verdict_wbn(const mbn_verdict* verdict, int* out) {
    if (!verdict || !out) return fail(MBN_E_INVALID_ARGUMENT, "null argument");
    *out = verdict->verdict.wbn ? (*verdict->verdict.wbn ? 1 : 0) : -1;
    return MBN_OK;
}

mbn_status mbn_verdict_cohomology(const mbn_verdict* verdict, int64_t out[3]) {
    if (!verdict || !out) return fail(MBN_E_INVALID_ARGUMENT, "null argument");
    const auto& h = verdict->verdict.h;
    if (!h) return fail(MBN_E_UNDECIDED, "cohomology is not determined");
    for (const auto& x : *h) {
        if (!fits_i64(x)) return fail(MBN_E_RANGE, "cohomology does not fit in 64 bits");
    }
    for (int i = 0; i < 3; ++i) out[i] = (*h)[i].convert_to<std::int64_t>();
    return MBN_OK;
}

const char* mbn_verdict_rule(const mbn_verdict* verdict) { return verdict ? verdict->verdict.rule.c_str() : ""; }

mbn_vector mbn_verdict_vector(const mbn_verdict* verdict) {
    if (!verdict) return {0, 0, 0};
    return to_c(verdict->verdict.v);
}

int64_t mbn_verdict_n(const mbn_verdict* verdict) { return verdict ? mukai::to_i64(verdict->verdict.n) : 0; }

mbn_status mbn_verdict_format(const mbn_verdict* verdict, mbn_format format, mbn_text** out) {
    if (!verdict || !out) return fail(MBN_E_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    if (format != MBN_FORMAT_JSON && format != MBN_FORMAT_CSV) return fail(MBN_E_INVALID_ARGUMENT, "unknown format");
    return guarded([&] {
        *out = make_text(format == MBN_FORMAT_JSON ? mukai::verdict_json(verdict->verdict).dump()
                                                   : mukai::verdict_csv_row(verdict->verdict));
    });
}

const char* mbn_csv_header(void) {
    static const std::string header = mukai::verdict_csv_header();
    return header.c_str();
}

mbn_status mbn_enumerate(const mbn_enumerate_options* options, mbn_enumeration** out) {
    if (!options || !out) return fail(MBN_E_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    if (options->max_rank < 2) return fail(MBN_E_DOMAIN, "max_rank must be at least 2");
    if (options->n < 0) return fail(MBN_E_DOMAIN, "n must be positive (or 0 for all)");
    return guarded([&] {
        mukai::EnumerateOptions opt;
        opt.max_rank = options->max_rank;
        if (options->n > 0) opt.n = options->n;
        opt.workers = options->workers > 0 ? options->workers : mukai::resolve_worker_count(std::nullopt, std::nullopt);
        opt.exhaustive = options->exhaustive != 0;
        auto res = mukai::enumerate_counterexamples(opt);
        auto e = std::make_unique<mbn_enumeration>();
        for (auto& v : res.counterexamples) e->failing.push_back({std::move(v)});
        for (auto& v : res.undecided) e->undecided.push_back({std::move(v)});
        e->classified = res.classified;
        *out = e.release();
    });
}

void mbn_enumeration_destroy(mbn_enumeration* e) { delete e; }

size_t mbn_enumeration_count(const mbn_enumeration* e) { return e ? e->failing.size() : 0; }

size_t mbn_enumeration_undecided_count(const mbn_enumeration* e) { return e ? e->undecided.size() : 0; }

uint64_t mbn_enumeration_classified(const mbn_enumeration* e) { return e ? e->classified : 0; }

const mbn_verdict* mbn_enumeration_get(const mbn_enumeration* e, size_t i) {
    return e && i < e->failing.size() ? &e->failing[i] : nullptr;
}

const mbn_verdict* mbn_enumeration_get_undecided(const mbn_enumeration* e, size_t i) {
    return e && i < e->undecided.size() ? &e->undecided[i] : nullptr;
}

mbn_status mbn_enumeration_format(const mbn_enumeration* e, mbn_format format, mbn_text** out) {
    if (!e || !out) return fail(MBN_E_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    if (format != MBN_FORMAT_JSON && format != MBN_FORMAT_CSV) return fail(MBN_E_INVALID_ARGUMENT, "unknown format");
    return guarded([&] {
        std::vector<const mukai::Verdict*> all;
        for (const auto& v : e->failing) all.push_back(&v.verdict);
        for (const auto& v : e->undecided) all.push_back(&v.verdict);
        std::sort(all.begin(), all.end(), [](const mukai::Verdict* x, const mukai::Verdict* y) {
            if (x->n != y->n) return x->n < y->n;
            return x->v < y->v;
        });
        if (format == MBN_FORMAT_JSON) {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto* v : all) arr.push_back(mukai::verdict_json(*v));
            *out = make_text(arr.dump(2) + "\n");
        } else {
            std::string s = mukai::verdict_csv_header() + "\n";
            for (const auto* v : all) s += mukai::verdict_csv_row(*v) + "\n";
            *out = make_text(std::move(s));
        }
    });
}

mbn_status mbn_resolve_workers(int64_t flag, int64_t config, unsigned* out) {
    if (!out) return fail(MBN_E_INVALID_ARGUMENT, "null argument");
    std::optional<unsigned> f, c;
    if (flag > 0) f = static_cast<unsigned>(flag);
    if (config > 0) c = static_cast<unsigned>(config);
    return guarded([&] { *out = mukai::resolve_worker_count(f, c); });
}

mbn_status mbn_destab(const mbn_context* ctx, mbn_vector v, mbn_text** out) {
    if (!ctx || !out) return fail(MBN_E_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] { *out = make_text(mukai::destab_json(ctx->ctx, to_core(v)).dump(2) + "\n"); });
}

mbn_status mbn_default_search_box(const mbn_context* ctx, mbn_vector v, mbn_search_box* out) {
    if (!ctx || !out) return fail(MBN_E_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const auto box = mukai::default_search_box(ctx->ctx, to_core(v));
        *out = {mukai::to_i64(box.r1_max), mukai::to_i64(box.d1_max), mukai::to_i64(box.a1_max)};
    });
}

mbn_status mbn_brute_force_destab(const mbn_context* ctx, mbn_vector v, const mbn_search_box* box,
                                  mbn_text** out) {
    if (!ctx || !out) return fail(MBN_E_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        const auto core_v = to_core(v);
        mukai::SearchBox b = box ? mukai::SearchBox{box->r1_max, box->d1_max, box->a1_max}
                                 : mukai::default_search_box(ctx->ctx, core_v);
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& dz : mukai::brute_force_Dv(ctx->ctx, core_v, b)) arr.push_back(mukai::destabilizer_json(dz));
        *out = make_text(arr.dump(2) + "\n");
    });
}

mbn_status mbn_walls(const mbn_context* ctx, mbn_vector v, mbn_format format, mbn_text** out) {
    if (!ctx || !out) return fail(MBN_E_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    if (format != MBN_FORMAT_JSON && format != MBN_FORMAT_CSV) return fail(MBN_E_INVALID_ARGUMENT, "unknown format");
    return guarded([&] {
        const auto records = mukai::wall_records(ctx->ctx, to_core(v));
        *out = make_text(format == MBN_FORMAT_JSON ? mukai::walls_json(records).dump(2) + "\n"
                                                   : mukai::walls_csv(records));
    });
}

mbn_status mbn_globally_generated(const mbn_context* ctx, mbn_vector v, mbn_gg_status* status, mbn_text** out_json) {
    if (!ctx || !status) return fail(MBN_E_INVALID_ARGUMENT, "null argument");
    if (out_json) *out_json = nullptr;
    return guarded([&] {
        const auto core_v = to_core(v);
        const auto gg = mukai::globally_generated(ctx->ctx, core_v);
        switch (gg.status) {
            case mukai::GGStatus::yes: *status = MBN_GG_YES; break;
            case mukai::GGStatus::no: *status = MBN_GG_NO; break;
            case mukai::GGStatus::unknown: *status = MBN_GG_UNKNOWN; break;
        }
        if (out_json) *out_json = make_text(mukai::gg_json(ctx->ctx, core_v, gg).dump(2) + "\n");
    });
}

mbn_status mbn_ulrich(int64_t n, int64_t r, int64_t m, int* exists, mbn_vector* out) {
    if (!exists || !out) return fail(MBN_E_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const auto u = mukai::ulrich_vector(n, r, m);
        *exists = u ? 1 : 0;
        *out = u ? to_c(*u) : mbn_vector{0, 0, 0};
    });
}

mbn_status mbn_twisted_h1_compute(const mbn_context* ctx, mbn_vector v, int64_t p, mbn_twisted_h1* out,
                                  mbn_text** out_json) {
    if (!ctx) return fail(MBN_E_INVALID_ARGUMENT, "null argument");
    if (out_json) *out_json = nullptr;
    return guarded([&] {
        const auto core_v = to_core(v);
        const auto t = mukai::twisted_h1(ctx->ctx, core_v, p);
        if (out) {
            *out = {};
            out->exact = t.value ? 1 : 0;
            out->value = t.value ? mukai::to_i64(*t.value) : 0;
            out->lo = mukai::to_i64(t.lo);
            out->has_hi = t.hi ? 1 : 0;
            out->hi = t.hi ? mukai::to_i64(*t.hi) : 0;
        }
        if (out_json) *out_json = make_text(mukai::twisted_json(ctx->ctx, core_v, p, t).dump(2) + "\n");
    });
}

mbn_status mbn_golden(int64_t max_rank, const char* data_dir, unsigned workers, int* ok, mbn_text** report) {
    if (!data_dir || !ok) return fail(MBN_E_INVALID_ARGUMENT, "null argument");
    if (report) *report = nullptr;
    if (max_rank < 2) return fail(MBN_E_DOMAIN, "max_rank must be at least 2");
    return guarded([&] {
        const auto rep = mukai::run_golden(max_rank, data_dir, workers > 0 ? workers : 1);
        *ok = rep.ok ? 1 : 0;
        if (report) {
            std::ostringstream os;
            for (const auto& line : rep.lines) os << line << '\n';
            os << (rep.ok ? "PASS" : "FAIL") << " golden max_rank=" << max_rank
               << " sporadic=" << rep.sporadic_checked << " twisted=" << rep.twisted_checked
               << " enumerated=" << rep.enumerated << " expected=" << rep.expected << '\n';
            *report = make_text(os.str());
        }
    });
}

}  // extern "C"
