#include <catch2/catch_amalgamated.hpp>

#include <fairconf/datagen.hpp>
#include <fairconf/model.hpp>

using namespace fairconf;

TEST_CASE("matrix storage and initializer lists") {
    Matrix m{{1.0, 2.0}, {3.0, 4.0}};
    REQUIRE(m.rows == 2);
    REQUIRE(m.cols == 2);
    REQUIRE(m(1, 0) == 3.0);
    m(1, 0) = 5.0;
    REQUIRE(m(1, 0) == 5.0);
    REQUIRE_THROWS_AS((Matrix{{1.0}, {1.0, 2.0}}), std::invalid_argument);
}

TEST_CASE("builtin instances pass strict validation") {
    for (auto which : {BuiltinInstance::table1, BuiltinInstance::table2, BuiltinInstance::table3}) {
        Instance inst = builtin(which);
        REQUIRE(validate(inst, true).empty());
        REQUIRE_NOTHROW(require_valid(inst));
    }
}

TEST_CASE("validation reports shape problems") {
    Instance inst;
    inst.interest = Matrix{{0.5}, {0.5}};
    inst.availability = Matrix{{1.0}};
    auto report = validate(inst, false);
    REQUIRE(report.size() == 1);
    REQUIRE(report[0].find("2 rows") != std::string::npos);

    Instance empty;
    REQUIRE_FALSE(validate(empty, false).empty());

    Instance narrow;  // more talks than slots
    narrow.interest = Matrix{{0.5, 0.5}};
    narrow.availability = Matrix{{1.0}};
    report = validate(narrow, false);
    REQUIRE(report.size() == 1);
    REQUIRE(report[0].find("exceeds slot count") != std::string::npos);
}

TEST_CASE("validation names out-of-range entries") {
    Instance inst = builtin(BuiltinInstance::table1);
    inst.interest(1, 0) = 1.5;
    auto report = validate(inst, false);
    REQUIRE(report.size() == 1);
    REQUIRE(report[0].find("interest[1][0]") != std::string::npos);

    inst = builtin(BuiltinInstance::table1);
    inst.availability(0, 2) = -0.25;
    report = validate(inst, false);
    REQUIRE(report.size() == 1);
    REQUIRE(report[0].find("availability[0][2]") != std::string::npos);

    inst.availability(0, 2) = std::numeric_limits<double>::quiet_NaN();
    REQUIRE_FALSE(validate(inst, false).empty());
}

TEST_CASE("strict validation rejects degenerate normalizers") {
    Instance inst;  // participant 1 is never available
    inst.interest = Matrix{{1.0}, {1.0}};
    inst.availability = Matrix{{1.0, 0.5}, {0.0, 0.0}};
    REQUIRE(validate(inst, false).empty());
    auto report = validate(inst, true);
    REQUIRE(report.size() == 1);
    REQUIRE(report[0].find("participant 1") != std::string::npos);

    Instance dead_talk;  // nobody cares about talk 1
    dead_talk.interest = Matrix{{1.0, 0.0}, {1.0, 0.0}};
    dead_talk.availability = Matrix{{1.0, 0.5}, {0.5, 1.0}};
    report = validate(dead_talk, true);
    REQUIRE(report.size() == 1);
    REQUIRE(report[0].find("talk 1") != std::string::npos);

    REQUIRE_THROWS_AS(require_valid(dead_talk), validation_error);
    try {
        require_valid(dead_talk);
    } catch (const validation_error& e) {
        REQUIRE(std::string(e.what()).find("talk 1") != std::string::npos);
    }
}

TEST_CASE("strict violations are a superset of non-strict ones") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Instance inst = gen_uniform(3, 3, 4, seed);
        if (seed % 3 == 0)
            for (std::size_t s = 0; s < inst.slot_count(); ++s) inst.availability(0, s) = 0.0;
        if (seed % 4 == 0) inst.interest(1, 2) = 2.0;
        auto loose = validate(inst, false);
        auto strict = validate(inst, true);
        REQUIRE(strict.size() >= loose.size());
        for (const auto& msg : loose)
            REQUIRE(std::find(strict.begin(), strict.end(), msg) != strict.end());
    }
}

TEST_CASE("schedule validity") {
    Instance t2 = builtin(BuiltinInstance::table2);
    REQUIRE(is_valid_schedule(t2, Schedule{{0, 2}}));
    REQUIRE(is_valid_schedule(t2, Schedule{{2, 1}}));
    REQUIRE_FALSE(is_valid_schedule(t2, Schedule{{0, 0}}));    // slot reused
    REQUIRE_FALSE(is_valid_schedule(t2, Schedule{{0}}));       // missing talk
    REQUIRE_FALSE(is_valid_schedule(t2, Schedule{{0, 3}}));    // slot out of range
    REQUIRE_FALSE(is_valid_schedule(t2, Schedule{{-1, 2}}));
    Instance t1 = builtin(BuiltinInstance::table1);
    REQUIRE(is_valid_schedule(t1, Schedule{{2}}));
    REQUIRE_FALSE(is_valid_schedule(t1, Schedule{{3}}));
}

TEST_CASE("weight and config validation") {
    REQUIRE_THROWS_AS(require_valid_weights({0.0, 0.0, 0.0}), std::invalid_argument);
    REQUIRE_THROWS_AS(require_valid_weights({-1.0, 1.0, 0.0}), std::invalid_argument);
    REQUIRE_NOTHROW(require_valid_weights({0.0, 0.0, 0.5}));

    SolveConfig cfg;
    cfg.worker_count = 0;
    REQUIRE_THROWS_AS(require_valid_config(cfg), std::invalid_argument);
    cfg.worker_count = 1;
    cfg.prune_tolerance = -1e-9;
    REQUIRE_THROWS_AS(require_valid_config(cfg), std::invalid_argument);
    cfg.prune_tolerance = 0.0;
    cfg.time_limit = -2.0;
    REQUIRE_THROWS_AS(require_valid_config(cfg), std::invalid_argument);
    cfg.time_limit = 0.0;
    REQUIRE_NOTHROW(require_valid_config(cfg));
}
