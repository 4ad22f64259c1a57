#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qpl {

enum class CheckStatus { pass, fail, error };

inline std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::error: return "error";
    }
    return "error";
}

inline CheckStatus status_from_string(const std::string& s) {
    if (s == "pass") return CheckStatus::pass;
    if (s == "fail") return CheckStatus::fail;
    if (s == "error") return CheckStatus::error;
    throw std::invalid_argument("unknown status: " + s);
}

// Machine-readable outcome of one check.  Serialization is deterministic:
// keys appear in a fixed order and parameters keep their insertion order.
struct VerificationReport {
    struct Mismatch {
        std::string where;     // first failing exponent / sample
        std::string expected;
        std::string actual;

        friend bool operator==(const Mismatch& a, const Mismatch& b) {
            return a.where == b.where && a.expected == b.expected && a.actual == b.actual;
        }
    };

    std::string check_id;
    std::vector<std::pair<std::string, std::string>> parameters;
    long order_or_trials = 0;
    CheckStatus status = CheckStatus::error;
    std::optional<Mismatch> first_mismatch;
    long elapsed_ms = 0;

    void add_parameter(const std::string& key, const std::string& value) {
        parameters.emplace_back(key, value);
    }

    // A failed check must say where it failed.
    bool well_formed() const { return status != CheckStatus::fail || first_mismatch.has_value(); }

    friend bool operator==(const VerificationReport& a, const VerificationReport& b) {
        return a.check_id == b.check_id && a.parameters == b.parameters &&
               a.order_or_trials == b.order_or_trials && a.status == b.status &&
               a.first_mismatch == b.first_mismatch && a.elapsed_ms == b.elapsed_ms;
    }

    int exit_code() const {
        switch (status) {
            case CheckStatus::pass: return 0;
            case CheckStatus::fail: return 1;
            case CheckStatus::error: return 2;
        }
        return 2;
    }
};

// include_timing = false keeps byte-identical output across reruns.
inline nlohmann::ordered_json to_json(const VerificationReport& r, bool include_timing = false) {
    nlohmann::ordered_json j;
    j["check_id"] = r.check_id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    j["parameters"] = params;
    j["order_or_trials"] = r.order_or_trials;
    j["status"] = to_string(r.status);
    if (r.first_mismatch) {
        j["first_mismatch"] = {{"where", r.first_mismatch->where},
                               {"expected", r.first_mismatch->expected},
                               {"actual", r.first_mismatch->actual}};
    }
    if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline VerificationReport report_from_json(const nlohmann::ordered_json& j) {
    VerificationReport r;
    r.check_id = j.at("check_id").get<std::string>();
    for (const auto& [k, v] : j.at("parameters").items())
        r.parameters.emplace_back(k, v.get<std::string>());
    r.order_or_trials = j.at("order_or_trials").get<long>();
    r.status = status_from_string(j.at("status").get<std::string>());
    if (j.contains("first_mismatch")) {
        const auto& m = j.at("first_mismatch");
        r.first_mismatch = VerificationReport::Mismatch{m.at("where").get<std::string>(),
                                                        m.at("expected").get<std::string>(),
                                                        m.at("actual").get<std::string>()};
    }
    if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<long>();
    return r;
}

inline std::string to_text(const VerificationReport& r, bool include_timing = false) {
    std::ostringstream os;
    os << "check: " << r.check_id << "\n";
    for (const auto& [k, v] : r.parameters) os << k << ": " << v << "\n";
    os << "order_or_trials: " << r.order_or_trials << "\n";
    if (r.first_mismatch) {
        os << "first_mismatch: " << r.first_mismatch->where
           << " expected " << r.first_mismatch->expected
           << " actual " << r.first_mismatch->actual << "\n";
    }
    if (include_timing) os << "elapsed_ms: " << r.elapsed_ms << "\n";
    os << "status: " << to_string(r.status) << "\n";
    return os.str();
}

}  // namespace qpl
