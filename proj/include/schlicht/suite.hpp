// Deterministic acceptance battery. Every criterion is seeded from one
// master seed, so two runs with the same config produce identical results
// (and identical JSON).

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "schlicht/json_io.hpp"

namespace schlicht {

struct SuiteConfig {
    std::uint64_t seed = 20260826;
    double tolerance = 1e-9;
    int order = 12;
    int starlike_samples = 1000;
    int koebe_rotations = 100;
    int convex_samples = 1000;
    int lambda_grid = 101;
    int inequality_samples = 200;
    int weights_per_sample = 100;
    int psi_samples = 10000;
    int reversion_samples = 500;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::vector<CriterionResult> criteria;
    // Quantities the suite tracks without asserting a bound on them.
    std::vector<std::pair<std::string, double>> observations;

    bool all_pass() const {
        for (const auto& c : criteria)
            if (!c.pass) return false;
        return true;
    }
};

SuiteResult run_suite(const SuiteConfig& config);

inline Json to_json(const CriterionResult& c) {
    return Json{{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
}

inline Json to_json(const SuiteResult& r) {
    Json criteria = Json::array();
    for (const auto& c : r.criteria) criteria.push_back(to_json(c));
    Json observations = Json::object();
    for (const auto& [k, v] : r.observations) observations[k] = v;
    return Json{{"criteria", criteria}, {"observations", observations}, {"allPass", r.all_pass()}};
}

}  // namespace schlicht
