#pragma once

#include <cmath>
#include <string>

#include "datagen.hpp"
#include "solvers.hpp"
#include "sweep.hpp"

namespace fairconf {

struct ClaimCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace detail {

inline bool near(double a, double b, double tol = 1e-9) { return std::fabs(a - b) <= tol; }

}  // namespace detail

/// Re-derives the welfare/fairness tensions shown by the three built-in
/// counterexamples, plus the matching-heuristic optimality case on the
/// balanced segregated-availability instance. Tolerance 1e-9 throughout.
inline std::vector<ClaimCheck> verify_claims() {
    using detail::format_double;
    using detail::near;
    std::vector<ClaimCheck> checks;

    {
        Instance inst = builtin(BuiltinInstance::table1);
        Solution swm = solve_swm(inst);
        Solution pfair = solve_exact(inst, ObjectiveWeights::pfair());
        bool ok = near(swm.report.tep, 1.0) && near(swm.report.psi_p, 1.0) &&
                  near(pfair.report.psi_p, 0.0) && near(pfair.report.tep, 0.98);
        checks.push_back({"participant-fairness-costs-welfare (table1)", ok,
                          "swm tep=" + format_double(swm.report.tep) +
                              " psi_p=" + format_double(swm.report.psi_p) +
                              "; pfair tep=" + format_double(pfair.report.tep) +
                              " psi_p=" + format_double(pfair.report.psi_p)});
    }
    {
        Instance inst = builtin(BuiltinInstance::table2);
        Solution swm = solve_swm(inst);
        Solution sfair = solve_exact(inst, ObjectiveWeights::sfair());
        bool ok = near(swm.report.tep, 1.4) && near(swm.report.psi_s, 0.2) &&
                  near(sfair.report.psi_s, 0.05) && near(sfair.report.tep, 1.175);
        checks.push_back({"speaker-fairness-costs-welfare (table2)", ok,
                          "swm tep=" + format_double(swm.report.tep) +
                              " psi_s=" + format_double(swm.report.psi_s) +
                              "; sfair tep=" + format_double(sfair.report.tep) +
                              " psi_s=" + format_double(sfair.report.psi_s)});
    }
    {
        Instance inst = builtin(BuiltinInstance::table3);
        Solution sfair = solve_exact(inst, ObjectiveWeights::sfair());
        Solution pfair = solve_exact(inst, ObjectiveWeights::pfair());
        bool ok = near(sfair.report.psi_s, 0.0) && near(sfair.report.psi_p, 0.3 / 1.7) &&
                  near(pfair.report.psi_p, 0.0) && near(pfair.report.psi_s, 0.8);
        checks.push_back({"fairness-notions-conflict (table3)", ok,
                          "sfair psi_s=" + format_double(sfair.report.psi_s) +
                              " psi_p=" + format_double(sfair.report.psi_p) +
                              "; pfair psi_p=" + format_double(pfair.report.psi_p) +
                              " psi_s=" + format_double(pfair.report.psi_s)});
    }
    {
        Instance inst = gen_grouped(GroupScenario::segregated_availability(5));
        Solution swm = solve_swm(inst);
        Solution iam = solve_iam(inst);
        bool ok = near(iam.report.tep, swm.report.tep);
        checks.push_back({"matching-heuristic-welfare-optimal (balanced segregated availability)", ok,
                          "swm tep=" + format_double(swm.report.tep) +
                              "; iam tep=" + format_double(iam.report.tep)});
    }
    return checks;
}

}  // namespace fairconf
