#include "sasaki/sweep.hpp"

namespace sasaki {

namespace {

struct HirzebruchCell {
    long long n;
    long long l1, l2;
};

std::vector<HirzebruchCell> hirzebruch_cells(long long l_max, long long n_max) {
    std::vector<HirzebruchCell> cells;
    for (long long n = 0; n <= n_max; ++n)
        for (long long l1 = 1; l1 <= l_max; ++l1)
            for (long long l2 = 1; l2 <= l_max; ++l2)
                if (gcd(Int(l1), Int(l2)) == 1) cells.push_back({n, l1, l2});
    return cells;
}

} // namespace

SweepResult<HirzebruchSweepRow> hirzebruch_sweep(long long l_max, long long n_max,
                                                 const SweepOptions& opts) {
    auto cells = hirzebruch_cells(l_max, n_max);
    check_cell_cap(cells.size(), opts);
    auto rows = indexed_map<HirzebruchSweepRow>(
        cells.size(),
        [&](std::size_t i) {
            const auto& c = cells[i];
            HirzebruchSweepRow row;
            row.report = hirzebruch_bundle(c.n, Int(c.l1), Int(c.l2));
            const bool name_matches_parity =
                row.report.name == ((c.n * c.l1) % 2 == 0 ? "S2xS3" : "X_inf");
            row.agree = row.report.abs_agree && row.report.parity_agree && name_matches_parity;
            return row;
        },
        opts.parallel);
    SweepResult<HirzebruchSweepRow> res;
    res.rows = std::move(rows);
    for (const auto& r : res.rows) res.all_agree = res.all_agree && r.agree;
    return res;
}

SweepResult<WangZillerSweepRow> wang_ziller_sweep(long long p_max, long long k_max,
                                                  const SweepOptions& opts) {
    struct Cell {
        long long p1, p2, k1, k2;
    };
    std::vector<Cell> cells;
    for (long long p1 = 1; p1 <= p_max; ++p1)
        for (long long p2 = 1; p2 <= p_max; ++p2)
            for (long long k1 = 1; k1 <= k_max; ++k1)
                for (long long k2 = 1; k2 <= k_max; ++k2)
                    if (gcd(Int(k1), Int(k2)) == 1) cells.push_back({p1, p2, k1, k2});
    check_cell_cap(cells.size(), opts);

    auto rows = indexed_map<WangZillerSweepRow>(
        cells.size(),
        [&](std::size_t i) {
            const auto& c = cells[i];
            WangZillerSweepRow row;
            row.report = wang_ziller(c.p1, c.p2, Int(c.k1), Int(c.k2));

            // Independent route: quotient of Z^2 by the Euler vector.
            BundleSpec spec;
            spec.base_lattice = {2, IntMatrix::identity(2)};
            spec.c1_base = IntVec({Int(c.p1 + 1), Int(c.p2 + 1)});
            spec.euler = IntVec({Int(c.k1), Int(c.k2)});
            TotalSpaceReport t = total_space(spec);
            row.agree = t.spin == row.report.spin &&
                        abs(t.c1D[0]) == abs(row.report.c1D);
            return row;
        },
        opts.parallel);
    SweepResult<WangZillerSweepRow> res;
    res.rows = std::move(rows);
    for (const auto& r : res.rows) res.all_agree = res.all_agree && r.agree;
    return res;
}

SweepResult<BlowupSweepRow> blowup_sweep(long long n_max, long long k_max, long long l2_max,
                                         const SweepOptions& opts) {
    struct Cell {
        long long n, k, l2;
    };
    std::vector<Cell> cells;
    for (long long n = 0; n <= n_max; ++n)
        for (long long k = 1; k <= k_max; ++k)
            for (long long l2 = 1; l2 <= l2_max; ++l2)
                if (2 * l2 + n > k) cells.push_back({n, k, l2});
    check_cell_cap(cells.size(), opts);

    auto rows = indexed_map<BlowupSweepRow>(
        cells.size(),
        [&](std::size_t i) {
            const auto& c = cells[i];
            BlowupSweepRow row;
            row.report = blowup_bundle(c.n, c.k, Int(c.l2));
            row.agree = row.report.methods_agree;
            return row;
        },
        opts.parallel);
    SweepResult<BlowupSweepRow> res;
    res.rows = std::move(rows);
    for (const auto& r : res.rows) res.all_agree = res.all_agree && r.agree;
    return res;
}

} // namespace sasaki
