#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include "model.hpp"

namespace fairconf {

enum class Direction { descending, ascending };

/// Power-law interest pattern: 2^-(i-1) for i = 1..n, optionally reversed.
inline std::vector<double> pattern_interest(Direction dir, int n) {
    if (n < 1) throw std::invalid_argument("pattern_interest needs n >= 1");
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = std::exp2(static_cast<double>(-i));
    if (dir == Direction::ascending) std::reverse(v.begin(), v.end());
    return v;
}

/// Cosine availability pattern: cos((j-1) pi/30) for j = 1..l, optionally
/// reversed. Defined only on the quarter period, hence l <= 15.
inline std::vector<double> pattern_availability(Direction dir, int l) {
    if (l < 1) throw std::invalid_argument("pattern_availability needs l >= 1");
    if (l > 15) throw std::invalid_argument("pattern_availability is defined for l <= 15");
    const double pi = std::acos(-1.0);
    std::vector<double> v(static_cast<std::size_t>(l));
    for (int j = 0; j < l; ++j) v[static_cast<std::size_t>(j)] = std::cos(static_cast<double>(j) * pi / 30.0);
    if (dir == Direction::ascending) std::reverse(v.begin(), v.end());
    return v;
}

namespace detail {

/// Uniform doubles on [0,1) from mt19937_64 (fixed constants everywhere),
/// taking the top 53 bits of each draw. Avoids std::uniform_real_distribution,
/// whose output is implementation-defined, so seeds reproduce bit-identically
/// across platforms.
class UnitUniform {
public:
    explicit UnitUniform(std::uint64_t seed) : engine_(seed) {}
    double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

}  // namespace detail

/// Random instance, every entry independent uniform on [0,1]. Entries are
/// drawn interest row-major first, then availability row-major.
inline Instance gen_uniform(std::size_t m, std::size_t n, std::size_t l, std::uint64_t seed) {
    if (m < 1 || n < 1 || l < 1) throw std::invalid_argument("m, n, l must be >= 1");
    if (n > l) throw std::invalid_argument("talk count must not exceed slot count");
    detail::UnitUniform rng(seed);
    Instance inst;
    inst.interest = Matrix(m, n);
    inst.availability = Matrix(m, l);
    for (double& x : inst.interest.data) x = rng.next();
    for (double& x : inst.availability.data) x = rng.next();
    return inst;
}

enum class GroupMode { identical, segregated };

/// Two participant groups; exactly one of interest/availability is
/// segregated (group 1 forward pattern, group 2 reversed), the other is the
/// identical forward pattern for everyone.
struct GroupScenario {
    std::size_t m = 10;
    std::size_t n = 10;
    std::size_t l = 15;
    std::size_t split = 5;  // first `split` participants form group 1
    GroupMode interest_mode = GroupMode::identical;
    GroupMode availability_mode = GroupMode::segregated;

    static GroupScenario segregated_availability(std::size_t split) {
        return {10, 10, 15, split, GroupMode::identical, GroupMode::segregated};
    }
    static GroupScenario segregated_interest(std::size_t split) {
        return {10, 10, 15, split, GroupMode::segregated, GroupMode::identical};
    }
};

inline Instance gen_grouped(const GroupScenario& sc) {
    if (sc.split == 0 || sc.split >= sc.m)
        throw std::invalid_argument("split must satisfy 0 < split < m");
    if ((sc.interest_mode == GroupMode::segregated) == (sc.availability_mode == GroupMode::segregated))
        throw std::invalid_argument("exactly one of interest/availability must be segregated");
    if (sc.n > sc.l) throw std::invalid_argument("talk count must not exceed slot count");

    const auto v1 = pattern_interest(Direction::descending, static_cast<int>(sc.n));
    const auto v2 = pattern_interest(Direction::ascending, static_cast<int>(sc.n));
    const auto a1 = pattern_availability(Direction::descending, static_cast<int>(sc.l));
    const auto a2 = pattern_availability(Direction::ascending, static_cast<int>(sc.l));

    Instance inst;
    inst.interest = Matrix(sc.m, sc.n);
    inst.availability = Matrix(sc.m, sc.l);
    for (std::size_t p = 0; p < sc.m; ++p) {
        bool group1 = p < sc.split;
        const auto& v = (sc.interest_mode == GroupMode::segregated && !group1) ? v2 : v1;
        const auto& a = (sc.availability_mode == GroupMode::segregated && !group1) ? a2 : a1;
        for (std::size_t t = 0; t < sc.n; ++t) inst.interest(p, t) = v[t];
        for (std::size_t s = 0; s < sc.l; ++s) inst.availability(p, s) = a[s];
    }
    return inst;
}

enum class BuiltinInstance { table1, table2, table3 };

/// The three small worked examples used by the counterexample claims.
inline Instance builtin(BuiltinInstance which) {
    Instance inst;
    switch (which) {
        case BuiltinInstance::table1:
            inst.interest = Matrix{{1.0}, {1.0}};
            inst.availability = Matrix{{1.0, 0.49, 0.0}, {0.0, 0.49, 1.0}};
            return inst;
        case BuiltinInstance::table2:
            inst.interest = Matrix{{1.0, 0.5}};
            inst.availability = Matrix{{1.0, 0.75, 0.8}};
            return inst;
        case BuiltinInstance::table3:
            inst.interest = Matrix{{1.0, 0.7}, {1.0, 0.7}};
            inst.availability = Matrix{{1.0, 1.0, 0.0, 0.2}, {1.0, 0.0, 1.0, 0.2}};
            return inst;
    }
    throw std::invalid_argument("unknown builtin instance");
}

inline Instance builtin(const std::string& name) {
    if (name == "table1") return builtin(BuiltinInstance::table1);
    if (name == "table2") return builtin(BuiltinInstance::table2);
    if (name == "table3") return builtin(BuiltinInstance::table3);
    throw std::invalid_argument("unknown builtin instance '" + name + "'");
}

}  // namespace fairconf
