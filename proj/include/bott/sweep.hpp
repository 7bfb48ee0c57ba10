#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "bott/bott_matrix.hpp"
#include "bott/stiefel_whitney.hpp"

namespace bott {

/// One counterexample to the even-class decomposition identity, pinned by
/// its enumeration index so runs are comparable.
struct SweepFailure {
    std::uint64_t index = 0;
    BottMatrix matrix{1};
    int k = 0;

    friend bool operator==(const SweepFailure&, const SweepFailure&) = default;
};

struct SweepSummary {
    int n = 0;
    std::uint64_t total = 0;
    std::uint64_t orientable = 0;
    std::vector<SweepFailure> decomposition_failures;
    std::uint64_t w1_mismatches = 0;
    double elapsed_seconds = 0.0;
};

/// Runs the decomposition check (every even degree) and the orientability
/// cross-check (w_1 built from row sums against the computed class) over
/// every matrix of dimension n. Workers claim enumeration indices from a
/// shared counter; results merge by index so the summary is identical for
/// every job count.
inline SweepSummary run_sweep(int n, int jobs = 0, int bit_cap = default_enumeration_bit_cap) {
    const MatrixEnumeration stream(n, bit_cap);
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;

    SweepSummary summary;
    summary.n = n;
    summary.total = stream.size();

    std::atomic<std::uint64_t> cursor{0};
    std::mutex merge_mutex;
    const auto start = std::chrono::steady_clock::now();

    auto worker = [&] {
        std::uint64_t local_orientable = 0;
        std::uint64_t local_mismatches = 0;
        std::vector<SweepFailure> local_failures;
        for (;;) {
            std::uint64_t index = cursor.fetch_add(1);
            if (index >= stream.size()) break;
            BottMatrix a = stream.at(index);

            Z2Polynomial w1 = sw_class(a, 1);
            bool orientable = is_orientable(a);
            if (orientable) ++local_orientable;
            if (w1 != w1_from_rows(a) || w1.is_zero() != orientable) ++local_mismatches;

            for (const DecompositionReport& r : verify_decomposition(a))
                if (!r.equal) local_failures.push_back({index, a, r.k});
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        summary.orientable += local_orientable;
        summary.w1_mismatches += local_mismatches;
        summary.decomposition_failures.insert(summary.decomposition_failures.end(),
                                              local_failures.begin(), local_failures.end());
    };

    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    std::sort(summary.decomposition_failures.begin(), summary.decomposition_failures.end(),
              [](const SweepFailure& a, const SweepFailure& b) {
                  return a.index != b.index ? a.index < b.index : a.k < b.k;
              });
    summary.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return summary;
}

inline bool sweep_clean(const SweepSummary& s) {
    return s.decomposition_failures.empty() && s.w1_mismatches == 0;
}

/// Text rendering. Failures, if any, are printed verbatim with the full
/// matrix and both sides of the identity recomputed.
inline std::string render_summary(const SweepSummary& s) {
    std::string out;
    out += "n = " + std::to_string(s.n) + "\n";
    out += "total = " + std::to_string(s.total) + "\n";
    out += "orientable = " + std::to_string(s.orientable) + "\n";
    out += "decomposition failures = " + std::to_string(s.decomposition_failures.size()) + "\n";
    out += "w1 cross-check mismatches = " + std::to_string(s.w1_mismatches) + "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "elapsed = %.3f s\n", s.elapsed_seconds);
    out += buf;
    for (const SweepFailure& f : s.decomposition_failures) {
        DecompositionReport r = decomposition_sum(f.matrix, f.k);
        out += "FAIL index " + std::to_string(f.index) + " k=" + std::to_string(f.k) + "\n";
        out += serialize(f.matrix);
        out += "lhs = " + to_string(r.lhs) + "\n";
        out += "rhs = " + to_string(r.rhs) + "\n";
    }
    return out;
}

}  // namespace bott
