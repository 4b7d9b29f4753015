#pragma once

#include <string>
#include <vector>

namespace lgould {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // first mismatch coordinates or error text
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Entrywise regression of every printed matrix against the construction.
VerifyReport verify_matrices();
/// Relation checks on pi_alpha, its dual, the tensor square, Pi_alpha and W.
VerifyReport verify_relations();
/// Braiding checks: commutant dimension, Yang-Baxter, kinks, R2, rotation.
VerifyReport verify_braiding();
/// Degree reductions and the weight-graph facts.
VerifyReport verify_degrees();

VerifyReport run_suite(const std::string& name);

/// Write the computed fixture matrices as JSON files into a directory.
void dump_fixtures_json(const std::string& dir);

}  // namespace lgould
