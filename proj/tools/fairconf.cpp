#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <fairconf/fairconf.hpp>

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;

unsigned default_workers() {
    if (const char* env = std::getenv("FAIRCONF_THREADS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
        std::cerr << "warning: ignoring invalid FAIRCONF_THREADS='" << env << "'\n";
    }
    return 1;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) parts.push_back(item);
    return parts;
}

struct GenArgs {
    std::string pattern;
    std::string out;
    std::size_t m = 10, n = 10, l = 10;
    std::uint64_t seed = 42;
    bool sized = false;  // any of --m/--n/--l/--seed given
};

int run_gen(const GenArgs& args) {
    fairconf::Instance inst;
    if (args.pattern == "uniform") {
        inst = fairconf::gen_uniform(args.m, args.n, args.l, args.seed);
    } else {
        if (args.sized) {
            std::cerr << "error: --m/--n/--l/--seed apply only to --pattern uniform\n";
            return kExitUsage;
        }
        if (args.pattern == "seg-avail-balanced")
            inst = fairconf::gen_grouped(fairconf::GroupScenario::segregated_availability(5));
        else if (args.pattern == "seg-avail-imbalanced")
            inst = fairconf::gen_grouped(fairconf::GroupScenario::segregated_availability(7));
        else if (args.pattern == "seg-interest-balanced")
            inst = fairconf::gen_grouped(fairconf::GroupScenario::segregated_interest(5));
        else if (args.pattern == "seg-interest-imbalanced")
            inst = fairconf::gen_grouped(fairconf::GroupScenario::segregated_interest(7));
        else
            inst = fairconf::builtin(args.pattern);
    }
    fairconf::save_instance(args.out, inst);
    return 0;
}

struct SolveArgs {
    std::string instance_path, method, out;
    double lambda1 = 0.5, lambda2 = 0.5;
    bool lambda_given = false;
    std::optional<double> time_limit;
    unsigned workers = default_workers();
    bool deterministic = false;
};

int run_solve(const SolveArgs& args) {
    fairconf::Instance inst = fairconf::load_instance(args.instance_path);
    fairconf::SolveConfig config;
    config.time_limit = args.time_limit;
    config.worker_count = args.workers;
    config.deterministic = args.deterministic;

    fairconf::Solution sol;
    if (args.method == "swm" || args.method == "iam") {
        if (args.lambda_given) {
            std::cerr << "error: --lambda1/--lambda2 apply only to --method fairconf\n";
            return kExitUsage;
        }
        sol = args.method == "swm" ? fairconf::solve_swm(inst) : fairconf::solve_iam(inst);
    } else {
        fairconf::ObjectiveWeights w;
        if (args.method == "pfair") w = fairconf::ObjectiveWeights::pfair();
        else if (args.method == "sfair") w = fairconf::ObjectiveWeights::sfair();
        else w = fairconf::ObjectiveWeights::fairconf(args.lambda1, args.lambda2);
        if (args.method != "fairconf" && args.lambda_given) {
            std::cerr << "error: --lambda1/--lambda2 apply only to --method fairconf\n";
            return kExitUsage;
        }
        sol = fairconf::solve_exact(inst, w, config);
    }
    fairconf::save_solution(args.out, sol);
    if (!sol.optimal && args.method != "iam") return kExitBudget;
    return 0;
}

int run_metrics(const std::string& instance_path, const std::string& schedule_path) {
    fairconf::Instance inst = fairconf::load_instance(instance_path);
    fairconf::Schedule sched = fairconf::load_schedule(schedule_path);
    fairconf::MetricsReport rep = fairconf::evaluate(inst, sched);
    std::cout << fairconf::metrics_to_json(rep).dump(2) << "\n";
    return 0;
}

struct SweepArgs {
    std::string instance_path, methods, lambda1, lambda2, fix, csv;
    bool no_time = false;
    std::optional<double> time_limit;
    unsigned workers = default_workers();
};

int run_sweep_cmd(const SweepArgs& args) {
    fairconf::SweepSpec spec;
    spec.instance = fairconf::load_instance(args.instance_path);
    for (const std::string& name : split_list(args.methods))
        spec.methods.push_back(fairconf::method_from_name(name));
    for (const std::string& v : split_list(args.lambda1)) spec.lambda1_values.push_back(std::stod(v));
    for (const std::string& v : split_list(args.lambda2)) spec.lambda2_values.push_back(std::stod(v));
    if (!args.fix.empty()) {
        auto eq = args.fix.find('=');
        std::string which = args.fix.substr(0, eq);
        if (eq == std::string::npos || (which != "lambda1" && which != "lambda2"))
            throw std::invalid_argument("--fix expects lambda1=V or lambda2=V");
        double v = std::stod(args.fix.substr(eq + 1));
        if (which == "lambda1") spec.lambda1_values = {v};
        else spec.lambda2_values = {v};
    }
    spec.config.time_limit = args.time_limit;
    spec.config.worker_count = args.workers;

    std::vector<fairconf::SweepRow> rows = fairconf::run_sweep(spec);
    fairconf::detail::write_file(args.csv, fairconf::sweep_csv(rows, !args.no_time));
    return 0;
}

int run_verify_claims() {
    std::vector<fairconf::ClaimCheck> checks = fairconf::verify_claims();
    bool all = true;
    for (const auto& check : checks) {
        std::cout << (check.passed ? "PASS" : "FAIL") << "  " << check.name << "  [" << check.detail
                  << "]\n";
        all = all && check.passed;
    }
    std::cout << (all ? "all claims verified\n" : "claim verification FAILED\n");
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fair conference scheduling: exact joint welfare/fairness optimization"};
    app.require_subcommand(1);

    GenArgs gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
    gen_cmd->add_option("--pattern", gen.pattern, "Instance family")
        ->required()
        ->check(CLI::IsMember({"uniform", "seg-avail-balanced", "seg-avail-imbalanced",
                               "seg-interest-balanced", "seg-interest-imbalanced", "table1", "table2",
                               "table3"}));
    auto* opt_m = gen_cmd->add_option("--m", gen.m, "Participants (uniform only)");
    auto* opt_n = gen_cmd->add_option("--n", gen.n, "Talks (uniform only)");
    auto* opt_l = gen_cmd->add_option("--l", gen.l, "Slots (uniform only)");
    auto* opt_seed = gen_cmd->add_option("--seed", gen.seed, "Random seed (uniform only)");
    gen_cmd->add_option("--out", gen.out, "Output instance JSON path")->required();

    SolveArgs solve;
    CLI::App* solve_cmd = app.add_subcommand("solve", "Solve an instance with one method");
    solve_cmd->add_option("--instance", solve.instance_path, "Instance JSON path")->required();
    solve_cmd->add_option("--method", solve.method, "Scheduling method")
        ->required()
        ->check(CLI::IsMember({"swm", "iam", "pfair", "sfair", "fairconf"}));
    auto* opt_l1 = solve_cmd->add_option("--lambda1", solve.lambda1, "Participant fairness weight");
    auto* opt_l2 = solve_cmd->add_option("--lambda2", solve.lambda2, "Speaker fairness weight");
    solve_cmd->add_option("--time-limit", solve.time_limit, "Wall-clock budget in seconds");
    solve_cmd->add_option("--workers", solve.workers, "Search worker threads");
    solve_cmd->add_flag("--deterministic", solve.deterministic,
                        "Reproducible single-worker search");
    solve_cmd->add_option("--out", solve.out, "Output solution JSON path")->required();

    std::string metrics_instance, metrics_schedule;
    CLI::App* metrics_cmd = app.add_subcommand("metrics", "Evaluate a schedule against an instance");
    metrics_cmd->add_option("--instance", metrics_instance, "Instance JSON path")->required();
    metrics_cmd->add_option("--schedule", metrics_schedule, "Schedule JSON path")->required();

    SweepArgs sweep;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Run methods over a lambda grid, emit CSV");
    sweep_cmd->add_option("--instance", sweep.instance_path, "Instance JSON path")->required();
    sweep_cmd->add_option("--methods", sweep.methods, "Comma-separated methods")->required();
    sweep_cmd->add_option("--lambda1", sweep.lambda1, "Comma-separated lambda1 grid");
    sweep_cmd->add_option("--lambda2", sweep.lambda2, "Comma-separated lambda2 grid");
    sweep_cmd->add_option("--fix", sweep.fix, "Pin one lambda, e.g. lambda2=0.5");
    sweep_cmd->add_option("--csv", sweep.csv, "Output CSV path")->required();
    sweep_cmd->add_flag("--no-time", sweep.no_time, "Drop the time_ms column (byte-stable output)");
    sweep_cmd->add_option("--time-limit", sweep.time_limit, "Per-solve budget in seconds");
    sweep_cmd->add_option("--workers", sweep.workers, "Search worker threads");

    CLI::App* claims_cmd = app.add_subcommand("verify-claims", "Re-derive the built-in counterexamples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) {
            gen.sized = opt_m->count() || opt_n->count() || opt_l->count() || opt_seed->count();
            return run_gen(gen);
        }
        if (solve_cmd->parsed()) {
            solve.lambda_given = opt_l1->count() || opt_l2->count();
            return run_solve(solve);
        }
        if (metrics_cmd->parsed()) return run_metrics(metrics_instance, metrics_schedule);
        if (sweep_cmd->parsed()) return run_sweep_cmd(sweep);
        if (claims_cmd->parsed()) return run_verify_claims();
    } catch (const fairconf::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const fairconf::format_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitUsage;
}
