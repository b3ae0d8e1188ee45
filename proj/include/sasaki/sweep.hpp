#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "sasaki/circle_bundle.hpp"
#include "sasaki/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

// Deterministic grid sweeps cross-validating the closed forms against the
// lattice pipeline.  Cells share nothing and are written into their own
// slots, so parallel and serial runs produce identical results.

namespace sasaki {

struct SweepOptions {
    bool parallel = true;
    std::size_t max_cells = 1'000'000;
};

// Evaluate fn(i) for i in [0, count) into a slot-indexed vector.  The first
// exception by index is rethrown after the loop completes.
template <typename T, typename Fn>
std::vector<T> indexed_map(std::size_t count, Fn&& fn, bool parallel) {
    std::vector<T> out(count);
    std::vector<std::exception_ptr> errors(count);
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long i = 0; i < static_cast<long long>(count); ++i) {
            try {
                out[i] = fn(static_cast<std::size_t>(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            try {
                out[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

inline void check_cell_cap(std::size_t cells, const SweepOptions& opts) {
    if (cells > opts.max_cells)
        fail("cli_io", "GridTooLarge",
             "sweep of " + std::to_string(cells) + " cells exceeds the cap of " +
                 std::to_string(opts.max_cells));
}

template <typename Row>
struct SweepResult {
    std::vector<Row> rows; // sorted by input key (construction order)
    bool all_agree = true;
};

struct HirzebruchSweepRow {
    HirzebruchBundleReport report;
    bool agree = false; // abs + parity + name rule
};

// All coprime (l1, l2) in [1, l_max]^2 and n in [0, n_max].
SweepResult<HirzebruchSweepRow> hirzebruch_sweep(long long l_max, long long n_max,
                                                 const SweepOptions& opts = {});

struct WangZillerSweepRow {
    WangZillerReport report;
    bool agree = false; // closed-form parity vs lattice pipeline
};

// p1, p2 in [1, p_max], coprime (k1, k2) in [1, k_max]^2.
SweepResult<WangZillerSweepRow> wang_ziller_sweep(long long p_max, long long k_max,
                                                  const SweepOptions& opts = {});

struct BlowupSweepRow {
    BlowupBundleReport report;
    bool agree = false; // pipeline parity vs the closed-form n mod 2
};

// n in [0, n_max], k in [1, k_max], l2 in [1, l2_max] with 2 l2 + n > k.
SweepResult<BlowupSweepRow> blowup_sweep(long long n_max, long long k_max, long long l2_max,
                                         const SweepOptions& opts = {});

} // namespace sasaki
