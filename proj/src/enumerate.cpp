// SPDX-License-Identifier: Apache-2.0

#include "mukai/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace mukai {

namespace {

struct Cell {
    std::int64_t n;
    std::int64_t r;
    std::int64_t d;
};

bool by_nrda(const Verdict& x, const Verdict& y) {
    return std::tie(x.n, x.v.r, x.v.d, x.v.a) < std::tie(y.n, y.v.r, y.v.d, y.v.a);
}

void scan_cell(const Cell& cell, bool exhaustive, EnumerationResult& out) {
    const K3Context ctx(cell.n);
    const Int a_max = minimal_a(ctx, Int(cell.r), Int(cell.d));
    for (Int a = a_max; a >= 2; --a) {
        Verdict verdict = weak_bn(ctx, MukaiVector(Int(cell.r), Int(cell.d), a));
        ++out.classified;
        if (!verdict.wbn) {
            out.undecided.push_back(std::move(verdict));
            continue;
        }
        if (!*verdict.wbn) {
            out.counterexamples.push_back(std::move(verdict));
            continue;
        }
        // Weak Brill-Noether propagates to every smaller a.
        if (!exhaustive) break;
    }
}

}  // namespace

unsigned resolve_worker_count(std::optional<unsigned> flag, std::optional<unsigned> config) {
    if (flag && *flag > 0) return *flag;
    if (const char* env = std::getenv("MUKAI_BN_WORKERS")) {
        try {
            const long value = std::stol(env);
            if (value > 0) return static_cast<unsigned>(value);
        } catch (const std::exception&) {
            throw DomainError(std::string("MUKAI_BN_WORKERS is not a positive integer: ") + env);
        }
        throw DomainError(std::string("MUKAI_BN_WORKERS is not a positive integer: ") + env);
    }
    if (config && *config > 0) return *config;
    return std::max(1u, std::thread::hardware_concurrency());
}

EnumerationResult enumerate_counterexamples(const EnumerateOptions& options) {
    if (options.max_rank < 2) throw DomainError("enumeration requires max_rank >= 2");
    if (options.n && *options.n < 1) throw DomainError("surface parameter n must be >= 1");

    std::vector<Cell> cells;
    const std::int64_t n_lo = options.n.value_or(1);
    const std::int64_t n_hi = options.n.value_or(options.max_rank - 1);
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        for (std::int64_t r = std::max<std::int64_t>(2, n + 1); r <= options.max_rank; ++r) {
            const std::int64_t d_max = r * (r / n) + 1;
            for (std::int64_t d = 1; d <= d_max; ++d) cells.push_back({n, r, d});
        }
    }

    const unsigned workers = std::max(1u, options.workers);
    std::atomic<std::size_t> next{0};
    std::mutex merge_mutex;
    EnumerationResult result;
    std::exception_ptr failure;

    const auto work = [&] {
        EnumerationResult local;
        try {
            for (std::size_t i = next++; i < cells.size(); i = next++) scan_cell(cells[i], options.exhaustive, local);
        } catch (...) {
            std::lock_guard lock(merge_mutex);
            if (!failure) failure = std::current_exception();
            next = cells.size();
            return;
        }
        std::lock_guard lock(merge_mutex);
        result.classified += local.classified;
        std::move(local.counterexamples.begin(), local.counterexamples.end(),
                  std::back_inserter(result.counterexamples));
        std::move(local.undecided.begin(), local.undecided.end(), std::back_inserter(result.undecided));
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::sort(result.counterexamples.begin(), result.counterexamples.end(), by_nrda);
    std::sort(result.undecided.begin(), result.undecided.end(), by_nrda);
    return result;
}

}  // namespace mukai
