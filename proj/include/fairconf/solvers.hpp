#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>

#include "assignment.hpp"
#include "datagen.hpp"
#include "metrics.hpp"

namespace fairconf {

enum class Method { swm, iam, pfair, sfair, fairconf, bruteforce };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::swm: return "swm";
        case Method::iam: return "iam";
        case Method::pfair: return "pfair";
        case Method::sfair: return "sfair";
        case Method::fairconf: return "fairconf";
        case Method::bruteforce: return "bruteforce";
    }
    return "?";
}

inline Method method_from_name(const std::string& name) {
    for (Method m : {Method::swm, Method::iam, Method::pfair, Method::sfair, Method::fairconf,
                     Method::bruteforce})
        if (name == method_name(m)) return m;
    throw std::invalid_argument("unknown method '" + name + "'");
}

struct Solution {
    Schedule schedule;
    MetricsReport report;
    double objective = 0.0;
    Method method = Method::fairconf;
    bool optimal = false;
    std::uint64_t nodes_explored = 0;
    double elapsed = 0.0;  // seconds
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Finishes a Solution from a schedule: metrics and the objective are always
/// recomputed from scratch so the reported numbers are consistent with
/// evaluate()/joint_objective() by construction.
inline Solution finish_solution(const Instance& inst, Schedule sched, const ObjectiveWeights& w,
                                Method method, bool optimal, std::uint64_t nodes,
                                Clock::time_point start) {
    Solution sol;
    sol.report = evaluate(inst, sched);
    sol.objective = joint_objective(sol.report, w, inst.participant_count(), inst.talk_count());
    sol.schedule = std::move(sched);
    sol.method = method;
    sol.optimal = optimal;
    sol.nodes_explored = nodes;
    sol.elapsed = seconds_since(start);
    return sol;
}

/// Everything the search precomputes once per instance.
struct SearchContext {
    const Instance& inst;
    ObjectiveWeights w;
    std::size_t m, n, l;
    double inv_mn;
    Matrix gain;      // gain(t,s) = sum_p V_p(t) A_p(s)
    Matrix nec_prof;  // gain(t,s) / iec_t
    std::vector<double> icg, iec;
    std::vector<std::size_t> talk_order;  // descending overall interest, index tie-break
    std::vector<std::size_t> slot_order;  // descending overall availability, index tie-break
    std::vector<int> slot_class;          // slots with identical availability columns share a class
    std::vector<std::size_t> urep;        // one representative per distinct (V row, A row) pair
    double tol;

    SearchContext(const Instance& instance, const ObjectiveWeights& weights, double prune_tol)
        : inst(instance), w(weights), m(instance.participant_count()), n(instance.talk_count()),
          l(instance.slot_count()), inv_mn(1.0 / (static_cast<double>(m) * static_cast<double>(n))),
          gain(n, l), nec_prof(n, l), tol(prune_tol) {
        auto ideal = ideal_gains(inst);
        icg = std::move(ideal.first);
        iec = std::move(ideal.second);

        for (std::size_t p = 0; p < m; ++p)
            for (std::size_t t = 0; t < n; ++t) {
                double v = inst.interest(p, t);
                if (v == 0.0) continue;
                for (std::size_t s = 0; s < l; ++s) gain(t, s) += v * inst.availability(p, s);
            }
        for (std::size_t t = 0; t < n; ++t)
            for (std::size_t s = 0; s < l; ++s) nec_prof(t, s) = gain(t, s) / iec[t];

        std::vector<double> talk_sum(n, 0.0), slot_sum(l, 0.0);
        for (std::size_t p = 0; p < m; ++p) {
            for (std::size_t t = 0; t < n; ++t) talk_sum[t] += inst.interest(p, t);
            for (std::size_t s = 0; s < l; ++s) slot_sum[s] += inst.availability(p, s);
        }
        talk_order.resize(n);
        slot_order.resize(l);
        for (std::size_t i = 0; i < n; ++i) talk_order[i] = i;
        for (std::size_t i = 0; i < l; ++i) slot_order[i] = i;
        std::sort(talk_order.begin(), talk_order.end(), [&](std::size_t a, std::size_t b) {
            return talk_sum[a] != talk_sum[b] ? talk_sum[a] > talk_sum[b] : a < b;
        });
        std::sort(slot_order.begin(), slot_order.end(), [&](std::size_t a, std::size_t b) {
            return slot_sum[a] != slot_sum[b] ? slot_sum[a] > slot_sum[b] : a < b;
        });

        slot_class.assign(l, -1);
        int classes = 0;
        for (std::size_t s = 0; s < l; ++s) {
            for (std::size_t s2 = 0; s2 < s && slot_class[s] < 0; ++s2) {
                bool same = true;
                for (std::size_t p = 0; p < m && same; ++p)
                    same = inst.availability(p, s) == inst.availability(p, s2);
                if (same) slot_class[s] = slot_class[s2];
            }
            if (slot_class[s] < 0) slot_class[s] = classes++;
        }

        // Participants with identical interest and availability rows share
        // CG/ICG under every schedule, so one representative suffices for the
        // min/max fairness terms.
        for (std::size_t p = 0; p < m; ++p) {
            bool dup = false;
            for (std::size_t u : urep) {
                bool same = true;
                for (std::size_t t = 0; t < n && same; ++t) same = inst.interest(p, t) == inst.interest(u, t);
                for (std::size_t s = 0; s < l && same; ++s)
                    same = inst.availability(p, s) == inst.availability(u, s);
                if (same) { dup = true; break; }
            }
            if (!dup) urep.push_back(p);
        }
    }
};

struct SharedSearch {
    std::atomic<double> incumbent{-std::numeric_limits<double>::infinity()};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> budget_hit{false};
    std::optional<std::uint64_t> node_limit;
    std::optional<Clock::time_point> deadline;

    void raise_incumbent(double value) {
        double cur = incumbent.load(std::memory_order_relaxed);
        while (value > cur &&
               !incumbent.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
        }
    }

    // Returns false once any budget is exhausted. Counts one node per call.
    bool count_node() {
        std::uint64_t seen = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (node_limit && seen >= *node_limit) {
            budget_hit.store(true, std::memory_order_relaxed);
            stop.store(true, std::memory_order_relaxed);
        } else if (deadline && (seen == 1 || (seen & 1023) == 0) && Clock::now() >= *deadline) {
            budget_hit.store(true, std::memory_order_relaxed);
            stop.store(true, std::memory_order_relaxed);
        }
        return !stop.load(std::memory_order_relaxed);
    }
};

/// Depth-first search over talk -> slot choices. One Searcher per worker;
/// all mutable state lives here so workers never contend except on the
/// shared incumbent value and node counter.
class Searcher {
public:
    Searcher(const SearchContext& cx, SharedSearch& shared)
        : cx_(cx), shared_(shared), assign_(cx.n, -1), nec_fixed_(cx.n, 0.0),
          cg_(cx.urep.size(), 0.0), rem_interest_(cx.urep.size(), 0.0),
          col_max_(cx.l, 0.0), col_min_(cx.l, 0.0), best_assign_(cx.n, -1) {
        for (std::size_t u = 0; u < cx_.urep.size(); ++u)
            for (std::size_t t = 0; t < cx_.n; ++t)
                rem_interest_[u] += cx_.inst.interest(cx_.urep[u], t);
    }

    double best_value() const { return best_value_; }
    const std::vector<int>& best_assignment() const { return best_assign_; }
    bool has_best() const { return best_value_ > -std::numeric_limits<double>::infinity(); }

    void push(std::size_t t, std::size_t s) {
        assign_[t] = static_cast<int>(s);
        used_ |= std::uint64_t{1} << s;
        fixed_gain_ += cx_.gain(t, s);
        nec_fixed_[t] = cx_.nec_prof(t, s);
        if (cx_.w.lambda1 > 0)
            for (std::size_t u = 0; u < cx_.urep.size(); ++u) {
                std::size_t p = cx_.urep[u];
                cg_[u] += cx_.inst.interest(p, t) * cx_.inst.availability(p, s);
                rem_interest_[u] -= cx_.inst.interest(p, t);
            }
        ++depth_;
    }

    void pop(std::size_t t, std::size_t s) {
        --depth_;
        if (cx_.w.lambda1 > 0)
            for (std::size_t u = 0; u < cx_.urep.size(); ++u) {
                std::size_t p = cx_.urep[u];
                cg_[u] -= cx_.inst.interest(p, t) * cx_.inst.availability(p, s);
                rem_interest_[u] += cx_.inst.interest(p, t);
            }
        fixed_gain_ -= cx_.gain(t, s);
        used_ &= ~(std::uint64_t{1} << s);
        assign_[t] = -1;
    }

    void dfs(std::size_t depth) {
        if (depth == cx_.n) {
            offer(complete_value());
            return;
        }
        std::size_t t = cx_.talk_order[depth];
        std::uint64_t classes_seen = 0;
        for (std::size_t s : cx_.slot_order) {
            if (used_ & (std::uint64_t{1} << s)) continue;
            std::uint64_t cls = std::uint64_t{1} << cx_.slot_class[s];
            if (classes_seen & cls) continue;  // identical free column already branched
            classes_seen |= cls;
            push(t, s);
            if (!shared_.count_node()) {
                pop(t, s);
                return;
            }
            double inc = shared_.incumbent.load(std::memory_order_relaxed);
            if (bound(inc) > inc + cx_.tol) dfs(depth + 1);
            pop(t, s);
            if (shared_.stop.load(std::memory_order_relaxed)) return;
        }
    }

    /// Joint objective of the complete assignment held in the state.
    double complete_value() const {
        double value = cx_.w.welfare_weight * cx_.inv_mn * fixed_gain_;
        if (cx_.w.lambda1 > 0) {
            double lo = std::numeric_limits<double>::infinity(), hi = -lo;
            for (std::size_t u = 0; u < cx_.urep.size(); ++u) {
                double ncg = cg_[u] / cx_.icg[cx_.urep[u]];
                lo = std::min(lo, ncg);
                hi = std::max(hi, ncg);
            }
            value += cx_.w.lambda1 * (lo - hi);
        }
        if (cx_.w.lambda2 > 0) {
            double lo = std::numeric_limits<double>::infinity(), hi = -lo;
            for (double v : nec_fixed_) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            value += cx_.w.lambda2 * (lo - hi);
        }
        return value;
    }

    void offer(double value) {
        if (value > best_value_) {
            best_value_ = value;
            best_assign_ = assign_;
        }
        shared_.raise_incumbent(value);
    }

    void seed_best(double value, const std::vector<int>& assignment) {
        best_value_ = value;
        best_assign_ = assignment;
        shared_.raise_incumbent(value);
    }

private:
    /// Admissible upper bound on the objective over all completions of the
    /// current partial assignment. The welfare part first tries the cheap
    /// per-talk column maximum (which dominates the assignment optimum); only
    /// if that fails to prune is the exact relaxation solved.
    double bound(double inc) {
        double fairness = participant_term() + speaker_term();
        if (cx_.w.welfare_weight == 0) return fairness;

        double cheap = 0.0;
        for (std::size_t i = depth_; i < cx_.n; ++i) {
            std::size_t t = cx_.talk_order[i];
            double best = 0.0;
            for (std::size_t s = 0; s < cx_.l; ++s)
                if (!(used_ & (std::uint64_t{1} << s))) best = std::max(best, cx_.gain(t, s));
            cheap += best;
        }
        double b = cx_.w.welfare_weight * cx_.inv_mn * (fixed_gain_ + cheap) + fairness;
        if (b <= inc + cx_.tol || depth_ == cx_.n) return b;
        return cx_.w.welfare_weight * cx_.inv_mn * (fixed_gain_ + welfare_relaxation()) + fairness;
    }

    // Best total gain of placing the unassigned talks injectively into the
    // free slots. Exact for the welfare component.
    double welfare_relaxation() {
        std::size_t r = cx_.n - depth_;
        if (r == 0) return 0.0;
        std::vector<std::size_t> free;
        for (std::size_t s = 0; s < cx_.l; ++s)
            if (!(used_ & (std::uint64_t{1} << s))) free.push_back(s);
        Matrix sub(r, free.size());
        for (std::size_t i = 0; i < r; ++i) {
            std::size_t t = cx_.talk_order[depth_ + i];
            for (std::size_t j = 0; j < free.size(); ++j) sub(i, j) = cx_.gain(t, free[j]);
        }
        return max_weight_assignment(sub).value;
    }

    // lambda1 * (min_p UB_p - max_p LB_p), capped at 0 since the true
    // spread term is never positive. UB_p relaxes injectivity: every
    // remaining interest point may land on the participant's best free slot.
    double participant_term() {
        if (cx_.w.lambda1 == 0) return 0.0;
        double min_ub = std::numeric_limits<double>::infinity(), max_lb = -min_ub;
        for (std::size_t u = 0; u < cx_.urep.size(); ++u) {
            std::size_t p = cx_.urep[u];
            double amax = 0.0, amin = std::numeric_limits<double>::infinity();
            if (depth_ < cx_.n) {
                for (std::size_t s = 0; s < cx_.l; ++s) {
                    if (used_ & (std::uint64_t{1} << s)) continue;
                    double a = cx_.inst.availability(p, s);
                    amax = std::max(amax, a);
                    amin = std::min(amin, a);
                }
            } else {
                amin = 0.0;
            }
            double ub = (cg_[u] + rem_interest_[u] * amax) / cx_.icg[p];
            double lb = (cg_[u] + rem_interest_[u] * amin) / cx_.icg[p];
            min_ub = std::min(min_ub, ub);
            max_lb = std::max(max_lb, lb);
        }
        return cx_.w.lambda1 * std::min(0.0, min_ub - max_lb);
    }

    // lambda2 * (UB on min NEC - LB on max NEC), capped at 0. Per-talk
    // free-slot extremes are tightened by a counting argument: the r
    // unassigned talks occupy r distinct free slots, so min NEC cannot
    // exceed the r-th largest per-slot column maximum (and max NEC cannot
    // fall below the r-th smallest per-slot column minimum).
    double speaker_term() {
        if (cx_.w.lambda2 == 0) return 0.0;
        double min_ub = std::numeric_limits<double>::infinity(), max_lb = -min_ub;
        for (std::size_t i = 0; i < depth_; ++i) {
            double v = nec_fixed_[cx_.talk_order[i]];
            min_ub = std::min(min_ub, v);
            max_lb = std::max(max_lb, v);
        }
        std::size_t r = cx_.n - depth_;
        if (r > 0) {
            for (std::size_t i = depth_; i < cx_.n; ++i) {
                std::size_t t = cx_.talk_order[i];
                double tmax = -std::numeric_limits<double>::infinity(), tmin = -tmax;
                for (std::size_t s = 0; s < cx_.l; ++s) {
                    if (used_ & (std::uint64_t{1} << s)) continue;
                    double v = cx_.nec_prof(t, s);
                    tmax = std::max(tmax, v);
                    tmin = std::min(tmin, v);
                }
                min_ub = std::min(min_ub, tmax);
                max_lb = std::max(max_lb, tmin);
            }
            std::size_t f = 0;
            for (std::size_t s = 0; s < cx_.l; ++s) {
                if (used_ & (std::uint64_t{1} << s)) continue;
                double cmax = -std::numeric_limits<double>::infinity(), cmin = -cmax;
                for (std::size_t i = depth_; i < cx_.n; ++i) {
                    double v = cx_.nec_prof(cx_.talk_order[i], s);
                    cmax = std::max(cmax, v);
                    cmin = std::min(cmin, v);
                }
                col_max_[f] = cmax;
                col_min_[f] = cmin;
                ++f;
            }
            std::nth_element(col_max_.begin(), col_max_.begin() + (r - 1), col_max_.begin() + f,
                             std::greater<>());
            min_ub = std::min(min_ub, col_max_[r - 1]);
            std::nth_element(col_min_.begin(), col_min_.begin() + (r - 1), col_min_.begin() + f);
            max_lb = std::max(max_lb, col_min_[r - 1]);
        }
        return cx_.w.lambda2 * std::min(0.0, min_ub - max_lb);
    }

    const SearchContext& cx_;
    SharedSearch& shared_;
    std::vector<int> assign_;
    std::vector<double> nec_fixed_;
    std::vector<double> cg_, rem_interest_;  // per unique participant
    std::vector<double> col_max_, col_min_;
    std::uint64_t used_ = 0;
    std::size_t depth_ = 0;
    double fixed_gain_ = 0.0;
    double best_value_ = -std::numeric_limits<double>::infinity();
    std::vector<int> best_assign_;
};

}  // namespace detail

/// Welfare-maximizing schedule: maximum-weight assignment on the talk x slot
/// gain matrix. Always optimal for TEP.
inline Solution solve_swm(const Instance& inst) {
    auto start = detail::Clock::now();
    require_valid(inst);
    const std::size_t m = inst.participant_count(), n = inst.talk_count(), l = inst.slot_count();
    Matrix gain(n, l);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t t = 0; t < n; ++t) {
            double v = inst.interest(p, t);
            if (v == 0.0) continue;
            for (std::size_t s = 0; s < l; ++s) gain(t, s) += v * inst.availability(p, s);
        }
    AssignmentResult res = max_weight_assignment(gain);
    return detail::finish_solution(inst, Schedule{std::move(res.col_of_row)}, ObjectiveWeights::swm(),
                                   Method::swm, true, 0, start);
}

namespace detail {

// Fisher-Yates with explicit index draws from mt19937_64 so seeded results
// do not depend on the standard library's std::shuffle implementation.
inline void shuffle_span(std::vector<std::size_t>& order, std::size_t begin, std::size_t end,
                         std::mt19937_64& rng) {
    for (std::size_t i = end - 1; i > begin; --i)
        std::swap(order[i], order[begin + static_cast<std::size_t>(rng() % (i - begin + 1))]);
}

// Indices sorted by key descending; equal-key runs keep ascending index
// order, or are shuffled when a generator is supplied.
inline std::vector<std::size_t> ranked_order(const std::vector<double>& key, std::mt19937_64* rng) {
    std::vector<std::size_t> order(key.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return key[a] != key[b] ? key[a] > key[b] : a < b;
    });
    if (rng) {
        std::size_t run_start = 0;
        for (std::size_t i = 1; i <= order.size(); ++i) {
            if (i == order.size() || key[order[i]] != key[order[run_start]]) {
                if (i - run_start > 1) shuffle_span(order, run_start, i, *rng);
                run_start = i;
            }
        }
    }
    return order;
}

}  // namespace detail

/// Interest-availability matching heuristic: the talk with the k-th highest
/// overall interest goes to the slot with the k-th highest overall
/// availability. Ties keep ascending index order unless a seed is given, in
/// which case each tied run is shuffled (talks first, then slots).
inline Solution solve_iam(const Instance& inst, std::optional<std::uint64_t> seed = std::nullopt) {
    auto start = detail::Clock::now();
    require_valid(inst);
    const std::size_t m = inst.participant_count(), n = inst.talk_count(), l = inst.slot_count();
    std::vector<double> talk_sum(n, 0.0), slot_sum(l, 0.0);
    for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t t = 0; t < n; ++t) talk_sum[t] += inst.interest(p, t);
        for (std::size_t s = 0; s < l; ++s) slot_sum[s] += inst.availability(p, s);
    }
    std::optional<std::mt19937_64> rng;
    if (seed) rng.emplace(*seed);
    auto talk_order = detail::ranked_order(talk_sum, rng ? &*rng : nullptr);
    auto slot_order = detail::ranked_order(slot_sum, rng ? &*rng : nullptr);

    Schedule sched;
    sched.assignment.assign(n, -1);
    for (std::size_t k = 0; k < n; ++k)
        sched.assignment[talk_order[k]] = static_cast<int>(slot_order[k]);
    return detail::finish_solution(inst, std::move(sched), ObjectiveWeights::swm(), Method::iam,
                                   false, 0, start);
}

/// Upper bound on joint_objective over all completions of a partial schedule
/// that assigns talks 0..k-1 to the distinct slots partial[0..k-1]:
///   - welfare: fixed gain plus the optimal assignment of the unassigned
///     talks to free slots;
///   - participant spread: lambda1 * (min_p UB_p - max_p LB_p), where UB_p
///     (LB_p) sends each remaining interest point to the participant's best
///     (worst) free slot;
///   - speaker spread: the per-talk analogue over free slots.
/// Equals joint_objective when the assignment is complete, and is monotone
/// non-increasing as the prefix grows.
inline double bound_partial(const Instance& inst, const ObjectiveWeights& w,
                            const std::vector<int>& partial) {
    require_valid(inst);
    require_valid_weights(w);
    const std::size_t m = inst.participant_count(), n = inst.talk_count(), l = inst.slot_count();
    if (partial.size() > n) throw validation_error("partial assigns more talks than the instance has");
    std::vector<bool> used(l, false);
    for (int s : partial) {
        if (s < 0 || static_cast<std::size_t>(s) >= l)
            throw validation_error("partial contains an out-of-range slot");
        if (used[static_cast<std::size_t>(s)]) throw validation_error("partial assigns a slot twice");
        used[static_cast<std::size_t>(s)] = true;
    }

    detail::SearchContext cx(inst, w, 0.0);
    const std::size_t k = partial.size();
    std::vector<std::size_t> free;
    for (std::size_t s = 0; s < l; ++s)
        if (!used[s]) free.push_back(s);

    double total = 0.0;
    if (w.welfare_weight > 0) {
        double fixed = 0.0;
        for (std::size_t t = 0; t < k; ++t) fixed += cx.gain(t, static_cast<std::size_t>(partial[t]));
        double relax = 0.0;
        if (k < n) {
            Matrix sub(n - k, free.size());
            for (std::size_t t = k; t < n; ++t)
                for (std::size_t j = 0; j < free.size(); ++j) sub(t - k, j) = cx.gain(t, free[j]);
            relax = max_weight_assignment(sub).value;
        }
        total += w.welfare_weight * cx.inv_mn * (fixed + relax);
    }
    if (w.lambda1 > 0) {
        double min_ub = std::numeric_limits<double>::infinity(), max_lb = -min_ub;
        for (std::size_t p = 0; p < m; ++p) {
            double cg = 0.0;
            for (std::size_t t = 0; t < k; ++t)
                cg += inst.interest(p, t) * inst.availability(p, static_cast<std::size_t>(partial[t]));
            double amax = 0.0, amin = 0.0;
            if (k < n) {
                amax = -std::numeric_limits<double>::infinity();
                amin = -amax;
                for (std::size_t s : free) {
                    amax = std::max(amax, inst.availability(p, s));
                    amin = std::min(amin, inst.availability(p, s));
                }
            }
            double rem = 0.0;
            for (std::size_t t = k; t < n; ++t) rem += inst.interest(p, t);
            min_ub = std::min(min_ub, (cg + rem * amax) / cx.icg[p]);
            max_lb = std::max(max_lb, (cg + rem * amin) / cx.icg[p]);
        }
        total += w.lambda1 * (min_ub - max_lb);
    }
    if (w.lambda2 > 0) {
        double min_ub = std::numeric_limits<double>::infinity(), max_lb = -min_ub;
        for (std::size_t t = 0; t < k; ++t) {
            double v = cx.nec_prof(t, static_cast<std::size_t>(partial[t]));
            min_ub = std::min(min_ub, v);
            max_lb = std::max(max_lb, v);
        }
        for (std::size_t t = k; t < n; ++t) {
            double tmax = -std::numeric_limits<double>::infinity(), tmin = -tmax;
            for (std::size_t s : free) {
                tmax = std::max(tmax, cx.nec_prof(t, s));
                tmin = std::min(tmin, cx.nec_prof(t, s));
            }
            min_ub = std::min(min_ub, tmax);
            max_lb = std::max(max_lb, tmin);
        }
        total += w.lambda2 * (min_ub - max_lb);
    }
    return total;
}

/// Exact maximization of the joint objective by depth-first branch and
/// bound. Branches talks in descending overall interest and slots in
/// descending overall availability; the incumbent is seeded with the IAM
/// schedule (plus the SWM schedule when the welfare weight is positive).
/// Hitting a time or node budget returns the best incumbent with
/// optimal = false. worker_count > 1 splits the root across threads sharing
/// the incumbent value; deterministic = true forces the single-worker path.
inline Solution solve_exact(const Instance& inst, const ObjectiveWeights& w,
                            const SolveConfig& config = {}) {
    auto start = detail::Clock::now();
    require_valid(inst);
    require_valid_weights(w);
    require_valid_config(config);
    if (inst.slot_count() > 64)
        throw std::invalid_argument("exact solver supports at most 64 slots");

    Method method = Method::fairconf;
    if (w == ObjectiveWeights::pfair()) method = Method::pfair;
    else if (w == ObjectiveWeights::sfair()) method = Method::sfair;

    detail::SearchContext cx(inst, w, config.prune_tolerance);
    detail::SharedSearch shared;
    shared.node_limit = config.node_limit;
    if (config.time_limit)
        shared.deadline = start + std::chrono::duration_cast<detail::Clock::duration>(
                                      std::chrono::duration<double>(*config.time_limit));

    const std::size_t m = inst.participant_count(), n = inst.talk_count();
    // Incumbent seeds: IAM always, SWM when welfare matters. Their objective
    // values are computed under the weights being optimized.
    Schedule seed_sched = solve_iam(inst).schedule;
    double seed_value = joint_objective(evaluate(inst, seed_sched), w, m, n);
    if (w.welfare_weight > 0) {
        Schedule swm_sched = solve_swm(inst).schedule;
        double swm_value = joint_objective(evaluate(inst, swm_sched), w, m, n);
        if (swm_value > seed_value) {
            seed_value = swm_value;
            seed_sched = std::move(swm_sched);
        }
    }

    unsigned workers = config.deterministic ? 1 : config.worker_count;
    double best_value = seed_value;
    std::vector<int> best_assign = seed_sched.assignment;

    if (workers <= 1) {
        detail::Searcher searcher(cx, shared);
        searcher.seed_best(seed_value, seed_sched.assignment);
        searcher.dfs(0);
        if (searcher.best_value() > best_value) {
            best_value = searcher.best_value();
            best_assign = searcher.best_assignment();
        }
    } else {
        // Root split: one task per branchable first-talk slot. Workers pull
        // tasks from a shared index; results merge in task order so the
        // final objective does not depend on thread timing.
        shared.raise_incumbent(seed_value);
        std::size_t t0 = cx.talk_order[0];
        std::vector<std::size_t> root_slots;
        std::uint64_t classes_seen = 0;
        for (std::size_t s : cx.slot_order) {
            std::uint64_t cls = std::uint64_t{1} << cx.slot_class[s];
            if (classes_seen & cls) continue;
            classes_seen |= cls;
            root_slots.push_back(s);
        }
        std::vector<double> task_value(root_slots.size(), -std::numeric_limits<double>::infinity());
        std::vector<std::vector<int>> task_assign(root_slots.size());
        std::atomic<std::size_t> next_task{0};
        auto run = [&]() {
            for (;;) {
                std::size_t i = next_task.fetch_add(1, std::memory_order_relaxed);
                if (i >= root_slots.size()) return;
                if (shared.stop.load(std::memory_order_relaxed)) return;
                // Each task gets its own searcher; only the incumbent value is
                // shared, so a task reports the best found in its own subtree.
                detail::Searcher searcher(cx, shared);
                searcher.push(t0, root_slots[i]);
                if (!shared.count_node()) return;
                searcher.dfs(1);
                task_value[i] = searcher.best_value();
                if (searcher.has_best()) task_assign[i] = searcher.best_assignment();
            }
        };
        std::vector<std::thread> pool;
        unsigned spawn = std::min<std::size_t>(workers, root_slots.size());
        for (unsigned i = 0; i < spawn; ++i) pool.emplace_back(run);
        for (auto& th : pool) th.join();
        for (std::size_t i = 0; i < root_slots.size(); ++i)
            if (task_value[i] > best_value) {
                best_value = task_value[i];
                best_assign = task_assign[i];
            }
    }

    bool optimal = !shared.budget_hit.load(std::memory_order_relaxed);
    Solution sol = detail::finish_solution(inst, Schedule{std::move(best_assign)}, w, method,
                                           optimal, shared.nodes.load(std::memory_order_relaxed),
                                           start);
    return sol;
}

/// Exhaustive oracle: enumerates every injective assignment in lexicographic
/// order and keeps the first maximizer. Refuses instances with more than
/// `cap` assignments.
inline Solution solve_bruteforce(const Instance& inst, const ObjectiveWeights& w,
                                 std::uint64_t cap = 10'000'000) {
    auto start = detail::Clock::now();
    require_valid(inst);
    require_valid_weights(w);
    const std::size_t m = inst.participant_count(), n = inst.talk_count(), l = inst.slot_count();

    long double count = 1.0L;
    for (std::size_t i = 0; i < n; ++i) count *= static_cast<long double>(l - i);
    if (count > static_cast<long double>(cap))
        throw std::length_error("instance has more injective assignments than the cap allows");

    detail::SearchContext cx(inst, w, 0.0);
    auto [icg, iec] = ideal_gains(inst);

    std::vector<double> cg(m, 0.0), nec(n, 0.0);
    std::vector<int> assign(n, -1);
    std::vector<bool> used(l, false);
    std::vector<int> best_assign;
    double best = -std::numeric_limits<double>::infinity();
    std::uint64_t leaves = 0;

    auto leaf_value = [&]() {
        double total = 0.0;
        if (w.welfare_weight > 0) {
            double tep = 0.0;
            for (double c : cg) tep += c;
            total += w.welfare_weight * tep / (static_cast<double>(m) * static_cast<double>(n));
        }
        if (w.lambda1 > 0) {
            double lo = std::numeric_limits<double>::infinity(), hi = -lo;
            for (std::size_t p = 0; p < m; ++p) {
                double v = cg[p] / icg[p];
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            total += w.lambda1 * (lo - hi);
        }
        if (w.lambda2 > 0) {
            auto [lo, hi] = std::minmax_element(nec.begin(), nec.end());
            total += w.lambda2 * (*lo - *hi);
        }
        return total;
    };

    auto rec = [&](auto&& self, std::size_t t) -> void {
        if (t == n) {
            ++leaves;
            double v = leaf_value();
            if (v > best) {
                best = v;
                best_assign = assign;
            }
            return;
        }
        for (std::size_t s = 0; s < l; ++s) {
            if (used[s]) continue;
            used[s] = true;
            assign[t] = static_cast<int>(s);
            for (std::size_t p = 0; p < m; ++p) cg[p] += inst.interest(p, t) * inst.availability(p, s);
            nec[t] = cx.nec_prof(t, s);
            self(self, t + 1);
            for (std::size_t p = 0; p < m; ++p) cg[p] -= inst.interest(p, t) * inst.availability(p, s);
            used[s] = false;
            assign[t] = -1;
        }
    };
    rec(rec, 0);

    return detail::finish_solution(inst, Schedule{std::move(best_assign)}, w, Method::bruteforce,
                                   true, leaves, start);
}

}  // namespace fairconf
