#pragma once

// Structured command reports. nlohmann::json keeps object keys in std::map
// order, so a dumped report is canonical (sorted keys) and diff-friendly.
// Numeric results are exact integers; rationals render as "num/den" strings.

#include <string>

#include <json.hpp>

#include "curvelab/rational.hpp"

namespace curvelab {

using Json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

class Report {
public:
    Report(std::string command, Json inputs, u64 seed = 0) {
        root_["command"] = std::move(command);
        root_["inputs"] = std::move(inputs);
        root_["seed"] = seed;
        root_["version"] = kVersion;
        root_["sections"] = Json::object();
        root_["claims"] = Json::object();
    }

    Json& section(const std::string& name) {
        auto& secs = root_["sections"];
        if (!secs.contains(name)) secs[name] = Json::object();
        return secs[name];
    }

    void claim(const std::string& name, bool pass) { root_["claims"][name] = pass; }

    void note(const std::string& key, const Json& value) { root_[key] = value; }

    bool all_claims_pass() const {
        for (const auto& [k, v] : root_["claims"].items())
            if (!v.get<bool>()) return false;
        return true;
    }

    Json finish() {
        root_["pass"] = all_claims_pass();
        return root_;
    }

    std::string str() { return finish().dump(2) + "\n"; }

private:
    Json root_;
};

inline Json rat_json(const Rat& r) { return r.den == 1 ? Json(r.num) : Json(r.str()); }

}  // namespace curvelab
