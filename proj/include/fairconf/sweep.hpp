#pragma once

#include <charconv>
#include <optional>
#include <string>

#include "solvers.hpp"

namespace fairconf {

struct SweepSpec {
    Instance instance;
    std::vector<Method> methods;  // subset of {swm, iam, pfair, sfair, fairconf}
    std::vector<double> lambda1_values;
    std::vector<double> lambda2_values;
    SolveConfig config;
};

struct SweepRow {
    Method method = Method::swm;
    std::optional<double> lambda1;  // set only for fairconf rows
    std::optional<double> lambda2;
    Solution solution;
};

/// One row per baseline method, one per (lambda1, lambda2) grid point for
/// fairconf, in the order methods were listed (lambda1 outer, lambda2 inner).
inline std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    if (spec.methods.empty()) throw std::invalid_argument("sweep needs at least one method");
    for (Method m : spec.methods) {
        if (m == Method::bruteforce) throw std::invalid_argument("bruteforce is not a sweep method");
        if (m == Method::fairconf && (spec.lambda1_values.empty() || spec.lambda2_values.empty()))
            throw std::invalid_argument("fairconf sweep needs non-empty lambda1 and lambda2 grids");
    }
    require_valid(spec.instance);

    std::vector<SweepRow> rows;
    for (Method m : spec.methods) {
        switch (m) {
            case Method::swm:
                rows.push_back({m, {}, {}, solve_swm(spec.instance)});
                break;
            case Method::iam:
                rows.push_back({m, {}, {}, solve_iam(spec.instance)});
                break;
            case Method::pfair:
                rows.push_back({m, {}, {}, solve_exact(spec.instance, ObjectiveWeights::pfair(), spec.config)});
                break;
            case Method::sfair:
                rows.push_back({m, {}, {}, solve_exact(spec.instance, ObjectiveWeights::sfair(), spec.config)});
                break;
            case Method::fairconf:
                for (double l1 : spec.lambda1_values)
                    for (double l2 : spec.lambda2_values)
                        rows.push_back({m, l1, l2,
                                        solve_exact(spec.instance, ObjectiveWeights::fairconf(l1, l2),
                                                    spec.config)});
                break;
            case Method::bruteforce:
                break;  // rejected above
        }
    }
    return rows;
}

namespace detail {

/// Shortest round-trip decimal form, the same on every platform.
inline std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace detail

/// Flat CSV of sweep rows. Columns that do not apply to a method (the
/// lambdas for baselines) stay empty; include_time = false drops the
/// time_ms column entirely so output is byte-stable across runs.
inline std::string sweep_csv(const std::vector<SweepRow>& rows, bool include_time = true) {
    std::string out =
        "method,lambda1,lambda2,tep,ncg_mean,ncg_min,ncg_max,psi_p,nec_mean,nec_min,nec_max,psi_s,"
        "objective,optimal,nodes_explored";
    if (include_time) out += ",time_ms";
    out += "\n";
    for (const SweepRow& row : rows) {
        const MetricsReport& rep = row.solution.report;
        auto [ncg_lo, ncg_hi] = std::minmax_element(rep.ncg.begin(), rep.ncg.end());
        auto [nec_lo, nec_hi] = std::minmax_element(rep.nec.begin(), rep.nec.end());
        out += method_name(row.method);
        out += ',';
        if (row.lambda1) out += detail::format_double(*row.lambda1);
        out += ',';
        if (row.lambda2) out += detail::format_double(*row.lambda2);
        out += ',';
        out += detail::format_double(rep.tep) + ',';
        out += detail::format_double(rep.ncg_mean()) + ',';
        out += detail::format_double(*ncg_lo) + ',';
        out += detail::format_double(*ncg_hi) + ',';
        out += detail::format_double(rep.psi_p) + ',';
        out += detail::format_double(rep.nec_mean()) + ',';
        out += detail::format_double(*nec_lo) + ',';
        out += detail::format_double(*nec_hi) + ',';
        out += detail::format_double(rep.psi_s) + ',';
        out += detail::format_double(row.solution.objective) + ',';
        out += row.solution.optimal ? "true" : "false";
        out += ',';
        out += std::to_string(row.solution.nodes_explored);
        if (include_time) out += ',' + detail::format_double(row.solution.elapsed * 1000.0);
        out += '\n';
    }
    return out;
}

}  // namespace fairconf
