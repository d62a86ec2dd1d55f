#pragma once

#include <limits>
#include <stdexcept>
#include <vector>

#include "model.hpp"

namespace fairconf {

struct AssignmentResult {
    double value = 0.0;           // total gain of the chosen matching
    std::vector<int> col_of_row;  // distinct column per row
};

/// Maximum-weight assignment of each row of `gain` to a distinct column;
/// requires rows <= cols. Jonker-Volgenant shortest augmenting paths on the
/// negated matrix, O(rows^2 * cols). Deterministic: among co-optimal
/// matchings the scan order fixes the result.
inline AssignmentResult max_weight_assignment(const Matrix& gain) {
    const std::size_t n = gain.rows;
    const std::size_t m = gain.cols;
    if (n == 0) return {0.0, {}};
    if (n > m) throw std::invalid_argument("assignment needs at least as many columns as rows");

    constexpr double inf = std::numeric_limits<double>::max();
    // 1-indexed with a dummy column 0; p[j] = row matched to column j.
    std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0), dist(m + 1);
    std::vector<int> p(m + 1, 0), pre(m + 1);
    std::vector<bool> done(m + 1);

    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = static_cast<int>(i);
        std::size_t j0 = 0;
        dist.assign(m + 1, inf);
        pre.assign(m + 1, -1);
        done.assign(m + 1, false);
        do {
            done[j0] = true;
            std::size_t i0 = static_cast<std::size_t>(p[j0]), j1 = 0;
            double delta = inf;
            for (std::size_t j = 1; j <= m; ++j) {
                if (done[j]) continue;
                double cur = -gain(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < dist[j]) { dist[j] = cur; pre[j] = static_cast<int>(j0); }
                if (dist[j] < delta) { delta = dist[j]; j1 = j; }
            }
            for (std::size_t j = 0; j <= m; ++j) {
                if (done[j]) { u[static_cast<std::size_t>(p[j])] += delta; v[j] -= delta; }
                else dist[j] -= delta;
            }
            j0 = j1;
        } while (p[j0] != 0);
        while (j0 != 0) {  // flip the augmenting path back to the dummy
            std::size_t j1 = static_cast<std::size_t>(pre[j0]);
            p[j0] = p[j1];
            j0 = j1;
        }
    }

    AssignmentResult res;
    res.col_of_row.assign(n, -1);
    for (std::size_t j = 1; j <= m; ++j)
        if (p[j] != 0) res.col_of_row[static_cast<std::size_t>(p[j]) - 1] = static_cast<int>(j) - 1;
    for (std::size_t i = 0; i < n; ++i)
        res.value += gain(i, static_cast<std::size_t>(res.col_of_row[i]));
    return res;
}

}  // namespace fairconf
