#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fairconf {

/// Thrown when an instance (or a value derived from one) violates a domain
/// invariant. Carries the full violation report in what().
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Dense row-major matrix of doubles. Small sizes only; no linear algebra.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}
    Matrix(std::initializer_list<std::initializer_list<double>> init) {
        rows = init.size();
        cols = rows ? init.begin()->size() : 0;
        data.reserve(rows * cols);
        for (const auto& row : init) {
            if (row.size() != cols) throw std::invalid_argument("ragged matrix initializer");
            data.insert(data.end(), row.begin(), row.end());
        }
    }

    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const double* row(std::size_t r) const { return data.data() + r * cols; }

    bool operator==(const Matrix&) const = default;
};

/// Optional display names; never interpreted by any algorithm.
struct Labels {
    std::vector<std::string> participants;
    std::vector<std::string> talks;
    std::vector<std::string> slots;

    bool empty() const { return participants.empty() && talks.empty() && slots.empty(); }
    bool operator==(const Labels&) const = default;
};

/// A scheduling problem: per-participant interest in each talk and
/// availability in each slot, both probabilities in [0,1].
struct Instance {
    Matrix interest;      // m x n
    Matrix availability;  // m x l
    Labels labels;

    std::size_t participant_count() const { return interest.rows; }
    std::size_t talk_count() const { return interest.cols; }
    std::size_t slot_count() const { return availability.cols; }

    bool operator==(const Instance&) const = default;
};

/// Injective talk -> slot mapping; assignment[t] is the slot of talk t.
struct Schedule {
    std::vector<int> assignment;

    bool operator==(const Schedule&) const = default;
};

/// Weights of the joint objective
///   welfare_weight * TEP/(m*n) + lambda1 * (min NCG - max NCG)
///                              + lambda2 * (min NEC - max NEC).
/// The paper's four methods are points in this space: SWM = (1,0,0),
/// PFair = (0,1,0), SFair = (0,0,1), FairConf = (1, l1, l2).
struct ObjectiveWeights {
    double welfare_weight = 1.0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;

    static ObjectiveWeights swm() { return {1.0, 0.0, 0.0}; }
    static ObjectiveWeights pfair() { return {0.0, 1.0, 0.0}; }
    static ObjectiveWeights sfair() { return {0.0, 0.0, 1.0}; }
    static ObjectiveWeights fairconf(double l1, double l2) { return {1.0, l1, l2}; }

    bool operator==(const ObjectiveWeights&) const = default;
};

inline void require_valid_weights(const ObjectiveWeights& w) {
    if (w.welfare_weight < 0 || w.lambda1 < 0 || w.lambda2 < 0)
        throw std::invalid_argument("objective weights must be non-negative");
    if (w.welfare_weight == 0 && w.lambda1 == 0 && w.lambda2 == 0)
        throw std::invalid_argument("objective weights must not all be zero");
}

/// Budgets and reproducibility knobs for the exact solver.
struct SolveConfig {
    std::optional<double> time_limit;             // wall-clock seconds
    std::optional<std::uint64_t> node_limit;      // explored search nodes
    unsigned worker_count = 1;
    bool deterministic = false;                   // force reproducible returned schedule
    double prune_tolerance = 1e-12;
};

inline void require_valid_config(const SolveConfig& cfg) {
    if (cfg.worker_count < 1) throw std::invalid_argument("worker_count must be >= 1");
    if (cfg.prune_tolerance < 0) throw std::invalid_argument("prune_tolerance must be >= 0");
    if (cfg.time_limit && *cfg.time_limit < 0) throw std::invalid_argument("time_limit must be >= 0");
}

using ValidationReport = std::vector<std::string>;

namespace detail {

inline bool in_unit_interval(double v) { return v >= 0.0 && v <= 1.0; }  // false for NaN

}  // namespace detail

/// Checks all Instance invariants and returns one message per violation
/// (empty report means valid). Strict mode additionally rejects degenerate
/// normalizers: a participant with ICG = 0 or a talk with IEC = 0 would
/// divide by zero in NCG/NEC.
inline ValidationReport validate(const Instance& inst, bool strict) {
    ValidationReport report;
    const std::size_t m = inst.participant_count();
    const std::size_t n = inst.talk_count();
    const std::size_t l = inst.slot_count();

    if (m == 0) report.push_back("instance has no participants");
    if (n == 0) report.push_back("instance has no talks");
    if (l == 0) report.push_back("instance has no slots");
    if (inst.interest.rows != inst.availability.rows)
        report.push_back("interest has " + std::to_string(inst.interest.rows) +
                         " rows but availability has " + std::to_string(inst.availability.rows));
    if (inst.interest.data.size() != m * n) report.push_back("interest storage does not match its declared shape");
    if (inst.availability.data.size() != inst.availability.rows * l)
        report.push_back("availability storage does not match its declared shape");
    if (!report.empty()) return report;  // shape is broken; entry checks would be meaningless

    if (n > l)
        report.push_back("talk count " + std::to_string(n) + " exceeds slot count " + std::to_string(l));

    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t t = 0; t < n; ++t)
            if (!detail::in_unit_interval(inst.interest(p, t)))
                report.push_back("interest[" + std::to_string(p) + "][" + std::to_string(t) +
                                 "] = " + std::to_string(inst.interest(p, t)) + " outside [0,1]");
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t s = 0; s < l; ++s)
            if (!detail::in_unit_interval(inst.availability(p, s)))
                report.push_back("availability[" + std::to_string(p) + "][" + std::to_string(s) +
                                 "] = " + std::to_string(inst.availability(p, s)) + " outside [0,1]");

    if (strict && report.empty()) {
        // ICG_p > 0 iff participant p has a positive interest and a positive
        // availability; IEC_t > 0 iff some participant has positive interest
        // in t and a positive availability somewhere.
        std::vector<bool> has_avail(m, false);
        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t s = 0; s < l; ++s)
                if (inst.availability(p, s) > 0.0) { has_avail[p] = true; break; }
        for (std::size_t p = 0; p < m; ++p) {
            bool has_interest = false;
            for (std::size_t t = 0; t < n; ++t)
                if (inst.interest(p, t) > 0.0) { has_interest = true; break; }
            if (!(has_interest && has_avail[p]))
                report.push_back("participant " + std::to_string(p) +
                                 " has ideal cumulative gain 0 (degenerate in strict mode)");
        }
        for (std::size_t t = 0; t < n; ++t) {
            bool positive = false;
            for (std::size_t p = 0; p < m && !positive; ++p)
                positive = inst.interest(p, t) > 0.0 && has_avail[p];
            if (!positive)
                report.push_back("talk " + std::to_string(t) +
                                 " has ideal expected crowd 0 (degenerate in strict mode)");
        }
    }
    return report;
}

/// Throws validation_error with the joined report if the instance is invalid.
inline void require_valid(const Instance& inst, bool strict = true) {
    ValidationReport report = validate(inst, strict);
    if (report.empty()) return;
    std::string msg = "invalid instance:";
    for (const auto& r : report) msg += "\n  - " + r;
    throw validation_error(msg);
}

/// True iff the assignment covers every talk with a distinct in-range slot.
inline bool is_valid_schedule(const Instance& inst, const Schedule& sched) {
    const std::size_t n = inst.talk_count();
    const std::size_t l = inst.slot_count();
    if (sched.assignment.size() != n) return false;
    std::vector<bool> used(l, false);
    for (int s : sched.assignment) {
        if (s < 0 || static_cast<std::size_t>(s) >= l) return false;
        if (used[static_cast<std::size_t>(s)]) return false;
        used[static_cast<std::size_t>(s)] = true;
    }
    return true;
}

}  // namespace fairconf
