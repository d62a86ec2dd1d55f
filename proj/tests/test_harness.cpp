#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <fairconf/claims.hpp>
#include <fairconf/datagen.hpp>
#include <fairconf/io.hpp>
#include <fairconf/sweep.hpp>

using namespace fairconf;
using Catch::Approx;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

void spill(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

struct FileGuard {
    std::filesystem::path path;
    ~FileGuard() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("instance json round-trip keeps matrices and labels") {
    Instance inst = gen_uniform(3, 4, 5, 99);
    inst.labels.participants = {"ada", "bob", "cat"};
    inst.labels.talks = {"t0", "t1", "t2", "t3"};
    inst.labels.slots = {"mon", "tue", "wed", "thu", "fri"};

    auto j = instance_to_json(inst);
    Instance back = instance_from_json(j);
    REQUIRE(back == inst);

    auto path = temp_file("fairconf_inst_rt.json");
    FileGuard guard{path};
    save_instance(path.string(), inst);
    REQUIRE(load_instance(path.string()) == inst);
}

TEST_CASE("schedule json round-trip") {
    Schedule sched{{2, 0, 3}};
    auto j = schedule_to_json(sched);
    REQUIRE(schedule_from_json(j) == sched);
    REQUIRE_THROWS_AS(schedule_from_json(nlohmann::json::object()), format_error);
    REQUIRE_THROWS_AS(schedule_from_json(nlohmann::json::parse(R"({"assignment":[0.5]})")),
                      format_error);
}

TEST_CASE("solution json exposes the expected keys") {
    Instance inst = builtin(BuiltinInstance::table2);
    Solution sol = solve_swm(inst);
    auto j = solution_to_json(sol);
    for (const char* key :
         {"assignment", "objective", "method", "optimal", "nodes_explored", "time_ms", "metrics"})
        REQUIRE(j.contains(key));
    REQUIRE(j["method"] == "swm");
    REQUIRE(j["optimal"] == true);
    REQUIRE(j["assignment"].get<std::vector<int>>() == sol.schedule.assignment);
    for (const char* key : {"ncg", "nec", "tep", "psi_p", "psi_s", "ncg_mean", "nec_mean"})
        REQUIRE(j["metrics"].contains(key));
    REQUIRE(j["metrics"]["tep"].get<double>() == Approx(1.4).margin(1e-12));
}

TEST_CASE("metrics json carries the report values") {
    Instance inst = builtin(BuiltinInstance::table3);
    MetricsReport rep = evaluate(inst, Schedule{{1, 2}});
    auto j = metrics_to_json(rep);
    REQUIRE(j["tep"].get<double>() == Approx(rep.tep).margin(1e-12));
    REQUIRE(j["psi_p"].get<double>() == Approx(rep.psi_p).margin(1e-12));
    REQUIRE(j["ncg"].size() == 2);
    REQUIRE(j["nec"].size() == 2);
}

TEST_CASE("malformed json reports file and position") {
    auto path = temp_file("fairconf_bad_syntax.json");
    FileGuard guard{path};
    spill(path, "{\"interest\": [[1.0],\n  [0.5]\n");
    try {
        load_instance(path.string());
        FAIL("expected format_error");
    } catch (const format_error& e) {
        std::string msg = e.what();
        REQUIRE(msg.find(path.filename().string()) != std::string::npos);
        REQUIRE(msg.find(':') != std::string::npos);  // line:col location
    }
}

TEST_CASE("loading checks entry ranges and shapes") {
    auto path = temp_file("fairconf_bad_entry.json");
    FileGuard guard{path};
    spill(path, R"({"interest": [[1.5]], "availability": [[1.0, 0.5]]})");
    try {
        load_instance(path.string());
        FAIL("expected validation_error");
    } catch (const validation_error& e) {
        REQUIRE(std::string(e.what()).find("interest[0][0]") != std::string::npos);
    }

    spill(path, R"({"interest": [[1.0], []], "availability": [[1.0]]})");
    REQUIRE_THROWS_AS(load_instance(path.string()), format_error);

    spill(path, R"({"interest": [["high"]], "availability": [[1.0]]})");
    REQUIRE_THROWS_AS(load_instance(path.string()), format_error);

    spill(path, R"({"availability": [[1.0]]})");
    REQUIRE_THROWS_AS(load_instance(path.string()), format_error);
}

TEST_CASE("label lengths are validated on load") {
    auto j = instance_to_json(builtin(BuiltinInstance::table2));
    j["labels"] = {{"talks", {"only-one"}}};
    REQUIRE_THROWS_AS(instance_from_json(j), format_error);
}

TEST_CASE("sweep produces one row per method and grid point") {
    Instance t3 = builtin(BuiltinInstance::table3);

    SweepSpec fc;
    fc.instance = t3;
    fc.methods = {Method::fairconf};
    fc.lambda1_values = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    fc.lambda2_values = {0.5};
    auto rows = run_sweep(fc);
    REQUIRE(rows.size() == 11);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        REQUIRE(rows[i].method == Method::fairconf);
        REQUIRE(rows[i].lambda1.value() == Approx(fc.lambda1_values[i]).margin(1e-15));
        REQUIRE(rows[i].lambda2.value() == Approx(0.5).margin(1e-15));
        MetricsReport again = evaluate(t3, rows[i].solution.schedule);
        REQUIRE(again.tep == Approx(rows[i].solution.report.tep).margin(1e-9));
    }

    SweepSpec lone;
    lone.instance = t3;
    lone.methods = {Method::swm};
    REQUIRE(run_sweep(lone).size() == 1);

    SweepSpec all;
    all.instance = t3;
    all.methods = {Method::swm, Method::iam, Method::pfair, Method::sfair, Method::fairconf};
    all.lambda1_values = {0.5};
    all.lambda2_values = {0.5};
    rows = run_sweep(all);
    REQUIRE(rows.size() == 5);
    REQUIRE(rows[0].method == Method::swm);
    REQUIRE_FALSE(rows[0].lambda1.has_value());
    REQUIRE(rows[4].method == Method::fairconf);
    REQUIRE(rows[4].lambda1.has_value());
}

TEST_CASE("sweep rejects unusable specs") {
    SweepSpec spec;
    spec.instance = builtin(BuiltinInstance::table1);
    REQUIRE_THROWS_AS(run_sweep(spec), std::invalid_argument);  // no methods

    spec.methods = {Method::bruteforce};
    REQUIRE_THROWS_AS(run_sweep(spec), std::invalid_argument);

    spec.methods = {Method::fairconf};  // grids missing
    REQUIRE_THROWS_AS(run_sweep(spec), std::invalid_argument);
}

TEST_CASE("csv header and cells are stable") {
    Instance t3 = builtin(BuiltinInstance::table3);
    SweepSpec spec;
    spec.instance = t3;
    spec.methods = {Method::swm, Method::fairconf};
    spec.lambda1_values = {0.5};
    spec.lambda2_values = {0.5};
    spec.config.deterministic = true;

    std::string csv = sweep_csv(run_sweep(spec));
    REQUIRE(csv.rfind("method,lambda1,lambda2,tep,ncg_mean,ncg_min,ncg_max,psi_p,"
                      "nec_mean,nec_min,nec_max,psi_s,objective,optimal,nodes_explored,time_ms",
                      0) == 0);
    REQUIRE(csv.find("\nswm,,,") != std::string::npos);  // baselines leave lambda cells empty
    REQUIRE(csv.find("\nfairconf,0.5,0.5,") != std::string::npos);
    REQUIRE(csv.back() == '\n');

    // timings off: column gone, output reproducible byte for byte
    std::string a = sweep_csv(run_sweep(spec), false);
    std::string b = sweep_csv(run_sweep(spec), false);
    REQUIRE(a == b);
    REQUIRE(a.find("time_ms") == std::string::npos);
}

TEST_CASE("bundled behavior checks all pass") {
    auto checks = verify_claims();
    REQUIRE(checks.size() == 4);
    for (const auto& c : checks) {
        INFO(c.name << ": " << c.detail);
        REQUIRE(c.passed);
    }
}
