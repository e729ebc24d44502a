// Certification suite. Each check replays one structural fact about a
// geometry or its representation groups by exhaustive (or fixed-seed
// sampled) computation and reports Pass, Fail with a minimal witness, or
// Skipped with the reason the hypothesis is vacuous for that geometry.
//
// Group-level checks run on the canonical cocycle model and, when the
// commutator form has a nontrivial radical, also on the minimal quotient
// model; quadrangle checks run on every faithful abelian quotient.

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nearhex/geometry.hpp"

namespace nearhex::verify {

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status s);

struct CheckResult {
    std::string check;
    std::string geometry;
    Status status = Status::Skipped;
    nlohmann::json witness;  // first (lexicographically least) violation; null otherwise
    std::string reason;      // Skipped only
    double millis = 0.0;

    nlohmann::json to_json(bool with_millis = false) const;
};

// All check identifiers in suite order.
const std::vector<std::string>& check_ids();

// Runs one check; throws std::invalid_argument for an unknown id.
CheckResult run_check(const geom::IncidenceGeometry& g, const std::string& geometry_name,
                      const std::string& check_id);

// Runs every check on one geometry.
std::vector<CheckResult> run_suite(const geom::IncidenceGeometry& g,
                                   const std::string& geometry_name);

// Runs every check on every built-in geometry. The glued hexagon is
// searched for within budget_secs; if it is not found, its checks are
// reported as Skipped.
std::vector<CheckResult> full_report(double budget_secs = 60.0);

}  // namespace nearhex::verify
