#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "model.hpp"

namespace fairconf {

/// Everything measurable about one (instance, schedule) pair.
/// Identity: tep == sum(cg) == sum(ec) up to rounding.
struct MetricsReport {
    std::vector<double> cg;   // per participant: realized cumulative gain
    std::vector<double> icg;  // per participant: ideal cumulative gain
    std::vector<double> ncg;  // cg / icg, clamped to [0,1]
    std::vector<double> ec;   // per talk: realized expected crowd
    std::vector<double> iec;  // per talk: ideal expected crowd
    std::vector<double> nec;  // ec / iec, clamped to [0,1]
    double tep = 0.0;         // total expected participation
    double psi_p = 0.0;       // max NCG - min NCG
    double psi_s = 0.0;       // max NEC - min NEC

    double ncg_mean() const {
        return std::accumulate(ncg.begin(), ncg.end(), 0.0) / static_cast<double>(ncg.size());
    }
    double nec_mean() const {
        return std::accumulate(nec.begin(), nec.end(), 0.0) / static_cast<double>(nec.size());
    }
};

namespace detail {

inline double spread(const std::vector<double>& v) {
    auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *hi - *lo;
}

}  // namespace detail

/// Ideal (schedule-independent) normalizers.
///
/// ICG_p pairs the participant's interests with their n best availabilities
/// in matching sorted order; by the rearrangement inequality no injective
/// schedule can beat it. IEC_t is the best single-slot crowd for talk t.
/// Throws validation_error if any normalizer is zero (strict instances
/// exclude this).
inline std::pair<std::vector<double>, std::vector<double>> ideal_gains(const Instance& inst) {
    const std::size_t m = inst.participant_count();
    const std::size_t n = inst.talk_count();
    const std::size_t l = inst.slot_count();

    std::vector<double> icg(m, 0.0);
    std::vector<double> interests(n), avail(l);
    for (std::size_t p = 0; p < m; ++p) {
        interests.assign(inst.interest.row(p), inst.interest.row(p) + n);
        avail.assign(inst.availability.row(p), inst.availability.row(p) + l);
        std::sort(interests.begin(), interests.end(), std::greater<>());
        std::sort(avail.begin(), avail.end(), std::greater<>());
        double g = 0.0;
        for (std::size_t t = 0; t < n; ++t) g += interests[t] * avail[t];
        icg[p] = g;
        if (!(g > 0.0))
            throw validation_error("participant " + std::to_string(p) + " has ideal cumulative gain 0");
    }

    std::vector<double> iec(n, 0.0);
    for (std::size_t t = 0; t < n; ++t) {
        double best = 0.0;
        for (std::size_t s = 0; s < l; ++s) {
            double crowd = 0.0;
            for (std::size_t p = 0; p < m; ++p) crowd += inst.interest(p, t) * inst.availability(p, s);
            best = std::max(best, crowd);
        }
        iec[t] = best;
        if (!(best > 0.0))
            throw validation_error("talk " + std::to_string(t) + " has ideal expected crowd 0");
    }
    return {std::move(icg), std::move(iec)};
}

/// Full metrics for a schedule. The schedule must be valid for the instance.
inline MetricsReport evaluate(const Instance& inst, const Schedule& sched) {
    if (!is_valid_schedule(inst, sched))
        throw validation_error("schedule is not an injective in-range talk-to-slot assignment");

    const std::size_t m = inst.participant_count();
    const std::size_t n = inst.talk_count();

    MetricsReport rep;
    auto [icg, iec] = ideal_gains(inst);
    rep.icg = std::move(icg);
    rep.iec = std::move(iec);

    rep.cg.assign(m, 0.0);
    rep.ec.assign(n, 0.0);
    for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t t = 0; t < n; ++t) {
            double term = inst.interest(p, t) * inst.availability(p, static_cast<std::size_t>(sched.assignment[t]));
            rep.cg[p] += term;
            rep.ec[t] += term;
        }
    }

    rep.ncg.resize(m);
    for (std::size_t p = 0; p < m; ++p)
        rep.ncg[p] = std::clamp(rep.cg[p] / rep.icg[p], 0.0, 1.0);
    rep.nec.resize(n);
    for (std::size_t t = 0; t < n; ++t)
        rep.nec[t] = std::clamp(rep.ec[t] / rep.iec[t], 0.0, 1.0);

    rep.tep = std::accumulate(rep.cg.begin(), rep.cg.end(), 0.0);
    rep.psi_p = detail::spread(rep.ncg);
    rep.psi_s = detail::spread(rep.nec);
    return rep;
}

/// Participant fairness test: all pairwise NCG differences are <= eps,
/// i.e. psi_p <= eps.
inline bool is_eps_fair_participants(const MetricsReport& rep, double eps) {
    if (eps < 0) throw std::invalid_argument("eps must be >= 0");
    return rep.psi_p <= eps;
}

/// Speaker fairness test: all pairwise NEC differences are <= eps,
/// i.e. psi_s <= eps.
inline bool is_eps_fair_speakers(const MetricsReport& rep, double eps) {
    if (eps < 0) throw std::invalid_argument("eps must be >= 0");
    return rep.psi_s <= eps;
}

/// Scalarized objective:
///   w * TEP/(m*n) + lambda1 * (min NCG - max NCG) + lambda2 * (min NEC - max NEC).
/// Both fairness terms are <= 0 with maximum 0 at perfect fairness, so larger
/// is better everywhere.
inline double joint_objective(const MetricsReport& rep, const ObjectiveWeights& w,
                              std::size_t m, std::size_t n) {
    require_valid_weights(w);
    if (m == 0 || n == 0) throw std::invalid_argument("m and n must be positive");
    return w.welfare_weight * rep.tep / (static_cast<double>(m) * static_cast<double>(n)) -
           w.lambda1 * rep.psi_p - w.lambda2 * rep.psi_s;
}

}  // namespace fairconf
