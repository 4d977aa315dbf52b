#pragma once

#include <string>

#include <json.hpp>

namespace qdunkl {

using json = nlohmann::ordered_json;

// Result of one verification check.  residual is the check's scalar figure of
// merit (a relative residual for identities, 1 - ratio for inequalities);
// pass <=> residual <= tolerance.
struct CheckReport {
    std::string check;
    json params = json::object();
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;

    json to_json() const {
        json j;
        j["check"] = check;
        j["params"] = params;
        j["residual"] = residual;
        j["tolerance"] = tolerance;
        j["pass"] = pass;
        return j;
    }

    static CheckReport make(std::string name, json params, double residual, double tolerance) {
        CheckReport r;
        r.check = std::move(name);
        r.params = std::move(params);
        r.residual = residual;
        r.tolerance = tolerance;
        r.pass = residual <= tolerance;
        return r;
    }
};

} // namespace qdunkl
