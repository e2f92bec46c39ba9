#ifndef STRINGGRAPH_IO_REPORT_HPP
#define STRINGGRAPH_IO_REPORT_HPP

// JSON run reports. Keys keep insertion order and wall-clock time is only
// included on request, so a report is a pure function of its inputs.

#include "../error.hpp"
#include "../extract/biclique.hpp"
#include "../params.hpp"
#include "../separator.hpp"
#include "../witness.hpp"

#include "json.hpp"

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

namespace stringgraph {

using ReportJson = nlohmann::ordered_json;

/// FNV-1a, 64 bit, rendered as 16 hex digits.
inline std::string fnv1a_digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline ReportJson to_json(const AlgorithmParams& p) {
    ReportJson j;
    j["c1"] = p.c1;
    j["c2"] = p.c2;
    j["c"] = p.c;
    j["c_prime"] = p.c_prime;
    j["c_dblprime"] = p.c_dblprime;
    j["epsilon"] = p.epsilon;
    j["delta"] = p.delta;
    j["strategy"] = to_string(p.strategy);
    j["exact_check_limit"] = p.exact_check_limit;
    return j;
}

/// Reads the keys of to_json(AlgorithmParams); missing keys keep defaults.
inline AlgorithmParams parse_params(const nlohmann::json& j) {
    if (!j.is_object()) throw SchemaError("$", "params must be an object");
    AlgorithmParams p;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        const auto& v = it.value();
        auto number = [&]() {
            if (!v.is_number()) throw SchemaError(key, "expected a number");
            return v.get<double>();
        };
        if (key == "c1") p.c1 = number();
        else if (key == "c2") p.c2 = number();
        else if (key == "c") p.c = number();
        else if (key == "c_prime") p.c_prime = number();
        else if (key == "c_dblprime") p.c_dblprime = number();
        else if (key == "epsilon") p.epsilon = number();
        else if (key == "delta") p.delta = number();
        else if (key == "strategy") {
            auto s = v.is_string() ? parse_strategy(v.get<std::string>()) : std::nullopt;
            if (!s) throw SchemaError(key, "expected one of auto, exact, bfs_layer, degree_peel");
            p.strategy = *s;
        } else if (key == "exact_check_limit") {
            if (!v.is_number_unsigned()) throw SchemaError(key, "expected a non-negative integer");
            p.exact_check_limit = v.get<std::size_t>();
        } else {
            throw SchemaError(key, "unknown parameter");
        }
    }
    try {
        p.validate();
    } catch (const DomainError& e) {
        throw SchemaError("$", e.what());
    }
    return p;
}

inline ReportJson to_json(const SeparatorPartition& p) {
    ReportJson j;
    j["separator"] = p.separator;
    j["first"] = p.first;
    j["second"] = p.second;
    return j;
}

inline ReportJson to_json(const Biclique& b) {
    ReportJson j;
    j["t"] = b.t();
    j["left"] = b.left;
    j["right"] = b.right;
    return j;
}

inline ReportJson to_json(const ExtractionWitness& w) {
    ReportJson j;
    j["kind"] = to_string(w.kind);
    j["size"] = w.vertices.size();
    j["vertices"] = w.vertices;
    switch (w.kind) {
    case WitnessKind::q_independent:
    case WitnessKind::kp_free:
    case WitnessKind::clique:
        j["forbidden_clique"] = w.forbidden_clique;
        break;
    case WitnessKind::neighborhood_cover: {
        j["parts"] = w.parts;
        ReportJson apexes = ReportJson::array();
        for (const auto& a : w.apexes) apexes.push_back(a ? ReportJson(*a) : ReportJson(nullptr));
        j["apexes"] = apexes;
        break;
    }
    case WitnessKind::dense_core:
        j["epsilon"] = w.epsilon;
        j["refine_constant"] = w.refine_constant;
        break;
    case WitnessKind::multipartite:
        j["parts"] = w.parts;
        j["alpha"] = w.alpha;
        j["min_part_size"] = w.min_part_size;
        break;
    case WitnessKind::coloring:
        j["colors"] = w.parts.size();
        j["parts"] = w.parts;
        break;
    case WitnessKind::independent:
        break;
    }
    if (!w.events.empty()) j["events"] = w.events;
    return j;
}

enum class VerifyMode { on, off };

/// Report of one CLI run. `verification` is always present: "pass" or
/// "fail" with the failures, or "skipped" under --verify off.
struct RunReport {
    std::string operation;
    std::string input_digest;
    ReportJson params = ReportJson::object();
    ReportJson result = ReportJson::object();
    std::optional<Verification> verification;
    std::optional<double> elapsed_ms;

    bool failed() const { return verification && !verification->passed; }

    ReportJson to_json() const {
        ReportJson j;
        j["operation"] = operation;
        j["input_digest"] = input_digest;
        j["params"] = params;
        j["result"] = result;
        ReportJson v;
        if (!verification) {
            v["status"] = "skipped";
        } else {
            v["status"] = verification->passed ? "pass" : "fail";
            v["failures"] = verification->failures;
        }
        j["verification"] = v;
        if (elapsed_ms) j["timings"] = {{"elapsed_ms", *elapsed_ms}};
        return j;
    }

    std::string dump() const { return to_json().dump(2) + "\n"; }
};

} // namespace stringgraph

#endif // STRINGGRAPH_IO_REPORT_HPP
