#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "metrics.hpp"
#include "model.hpp"
#include "solvers.hpp"

namespace fairconf {

/// Thrown for unreadable/unwritable files and malformed JSON. Parse errors
/// carry path:line:column context.
class format_error : public std::runtime_error {
public:
    explicit format_error(const std::string& msg) : std::runtime_error(msg) {}
};

namespace detail {

inline std::string position_in(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return std::to_string(line) + ":" + std::to_string(col);
}

inline nlohmann::json parse_json(const std::string& text, const std::string& origin) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw format_error(origin + ":" + position_in(text, e.byte) + ": " + e.what());
    }
}

inline Matrix matrix_from_json(const nlohmann::json& j, const std::string& key) {
    if (!j.is_array() || j.empty())
        throw format_error("\"" + key + "\" must be a non-empty array of rows");
    Matrix mat;
    mat.rows = j.size();
    for (std::size_t r = 0; r < j.size(); ++r) {
        const auto& row = j[r];
        if (!row.is_array()) throw format_error("\"" + key + "\" row " + std::to_string(r) + " is not an array");
        if (r == 0) mat.cols = row.size();
        if (row.size() != mat.cols)
            throw format_error("\"" + key + "\" row " + std::to_string(r) + " has " +
                               std::to_string(row.size()) + " entries, expected " + std::to_string(mat.cols));
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (!row[c].is_number())
                throw format_error("\"" + key + "\"[" + std::to_string(r) + "][" + std::to_string(c) +
                                   "] is not a number");
            mat.data.push_back(row[c].get<double>());
        }
    }
    return mat;
}

inline nlohmann::json matrix_to_json(const Matrix& mat) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < mat.rows; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < mat.cols; ++c) row.push_back(mat(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw format_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw format_error("cannot write " + path);
    out << content;
    if (!out) throw format_error("failed writing " + path);
}

}  // namespace detail

inline nlohmann::json instance_to_json(const Instance& inst) {
    nlohmann::json j;
    j["interest"] = detail::matrix_to_json(inst.interest);
    j["availability"] = detail::matrix_to_json(inst.availability);
    if (!inst.labels.empty()) {
        nlohmann::json labels;
        if (!inst.labels.participants.empty()) labels["participants"] = inst.labels.participants;
        if (!inst.labels.talks.empty()) labels["talks"] = inst.labels.talks;
        if (!inst.labels.slots.empty()) labels["slots"] = inst.labels.slots;
        j["labels"] = std::move(labels);
    }
    return j;
}

inline Instance instance_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw format_error("instance JSON must be an object");
    if (!j.contains("interest")) throw format_error("instance JSON lacks \"interest\"");
    if (!j.contains("availability")) throw format_error("instance JSON lacks \"availability\"");
    Instance inst;
    inst.interest = detail::matrix_from_json(j["interest"], "interest");
    inst.availability = detail::matrix_from_json(j["availability"], "availability");
    if (j.contains("labels")) {
        const auto& labels = j["labels"];
        if (!labels.is_object()) throw format_error("\"labels\" must be an object");
        auto read_list = [&](const char* key, std::vector<std::string>& out, std::size_t expected) {
            if (!labels.contains(key)) return;
            if (!labels[key].is_array()) throw format_error(std::string("\"labels.") + key + "\" must be an array");
            out = labels[key].get<std::vector<std::string>>();
            if (out.size() != expected)
                throw format_error(std::string("\"labels.") + key + "\" has " + std::to_string(out.size()) +
                                   " entries, expected " + std::to_string(expected));
        };
        read_list("participants", inst.labels.participants, inst.participant_count());
        read_list("talks", inst.labels.talks, inst.talk_count());
        read_list("slots", inst.labels.slots, inst.slot_count());
    }
    return inst;
}

inline nlohmann::json schedule_to_json(const Schedule& sched) {
    return nlohmann::json{{"assignment", sched.assignment}};
}

inline Schedule schedule_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("assignment") || !j["assignment"].is_array())
        throw format_error("schedule JSON must be an object with an \"assignment\" array");
    Schedule sched;
    for (const auto& e : j["assignment"]) {
        if (!e.is_number_integer()) throw format_error("\"assignment\" entries must be integers");
        sched.assignment.push_back(e.get<int>());
    }
    return sched;
}

inline nlohmann::json metrics_to_json(const MetricsReport& rep) {
    nlohmann::json j;
    j["ncg"] = rep.ncg;
    j["nec"] = rep.nec;
    j["tep"] = rep.tep;
    j["psi_p"] = rep.psi_p;
    j["psi_s"] = rep.psi_s;
    j["ncg_mean"] = rep.ncg_mean();
    j["nec_mean"] = rep.nec_mean();
    return j;
}

inline nlohmann::json solution_to_json(const Solution& sol) {
    nlohmann::json j;
    j["assignment"] = sol.schedule.assignment;
    j["objective"] = sol.objective;
    j["method"] = method_name(sol.method);
    j["optimal"] = sol.optimal;
    j["nodes_explored"] = sol.nodes_explored;
    j["time_ms"] = sol.elapsed * 1000.0;
    j["metrics"] = metrics_to_json(sol.report);
    return j;
}

/// Reads and strict-validates an instance file.
inline Instance load_instance(const std::string& path) {
    Instance inst = instance_from_json(detail::parse_json(detail::read_file(path), path));
    require_valid(inst);
    return inst;
}

inline void save_instance(const std::string& path, const Instance& inst) {
    detail::write_file(path, instance_to_json(inst).dump(2) + "\n");
}

inline Schedule load_schedule(const std::string& path) {
    return schedule_from_json(detail::parse_json(detail::read_file(path), path));
}

inline void save_solution(const std::string& path, const Solution& sol) {
    detail::write_file(path, solution_to_json(sol).dump(2) + "\n");
}

}  // namespace fairconf
