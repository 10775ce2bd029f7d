#pragma once

// Data-parallel loops used by the checking engine. Each kernel has a plain
// serial reference version and an OpenMP version; both return identical
// results for identical inputs, which the test suite asserts.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <omp.h>

namespace ncat {

enum class Execution { serial, parallel };

// Number of failing indices kept (the smallest ones) for witness output.
inline constexpr std::size_t kMaxWitnesses = 3;

struct Tally {
    std::size_t failed = 0;
    std::vector<std::size_t> first;  // ascending, at most kMaxWitnesses

    friend bool operator==(const Tally&, const Tally&) = default;
};

using IndexPair = std::pair<std::size_t, std::size_t>;

namespace serial {

template <class Fails>
Tally tally(std::size_t n, Fails&& fails) {
    Tally t;
    for (std::size_t i = 0; i < n; ++i) {
        if (!fails(i)) continue;
        ++t.failed;
        if (t.first.size() < kMaxWitnesses) t.first.push_back(i);
    }
    return t;
}

// All (i, j) in [0, rows) x [0, cols) with keep(i, j), row-major order.
template <class Keep>
std::vector<IndexPair> filter_pairs(std::size_t rows, std::size_t cols, Keep&& keep) {
    std::vector<IndexPair> out;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (keep(i, j)) out.emplace_back(i, j);
    return out;
}

}  // namespace serial

namespace parallel {

template <class Fails>
Tally tally(std::size_t n, Fails&& fails) {
    Tally total;
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel
    {
        Tally local;
#pragma omp for schedule(dynamic, 64) nowait
        for (std::int64_t i = 0; i < count; ++i) {
            if (!fails(static_cast<std::size_t>(i))) continue;
            ++local.failed;
            if (local.first.size() < kMaxWitnesses)
                local.first.push_back(static_cast<std::size_t>(i));
        }
#pragma omp critical(ncat_tally_merge)
        {
            total.failed += local.failed;
            total.first.insert(total.first.end(), local.first.begin(), local.first.end());
        }
    }
    // Chunks are handed out in increasing order per thread, so each thread's
    // list holds its smallest failures; the global smallest k survive the merge.
    std::sort(total.first.begin(), total.first.end());
    if (total.first.size() > kMaxWitnesses) total.first.resize(kMaxWitnesses);
    return total;
}

template <class Keep>
std::vector<IndexPair> filter_pairs(std::size_t rows, std::size_t cols, Keep&& keep) {
    std::vector<std::vector<IndexPair>> per_row(rows);
    const auto count = static_cast<std::int64_t>(rows);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto row = static_cast<std::size_t>(i);
        for (std::size_t j = 0; j < cols; ++j)
            if (keep(row, j)) per_row[row].emplace_back(row, j);
    }
    std::vector<IndexPair> out;
    for (auto& r : per_row) out.insert(out.end(), r.begin(), r.end());
    return out;
}

}  // namespace parallel

template <class Fails>
Tally tally(Execution exec, std::size_t n, Fails&& fails) {
    return exec == Execution::serial ? serial::tally(n, fails) : parallel::tally(n, fails);
}

template <class Keep>
std::vector<IndexPair> filter_pairs(Execution exec, std::size_t rows, std::size_t cols,
                                    Keep&& keep) {
    return exec == Execution::serial ? serial::filter_pairs(rows, cols, keep)
                                     : parallel::filter_pairs(rows, cols, keep);
}

}  // namespace ncat
