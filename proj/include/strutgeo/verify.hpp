#pragma once

#include <string>
#include <vector>

#include "strutgeo/geometry.hpp"

namespace strutgeo {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

struct VerifyOptions {
    Tolerances tol{};
};

/// Runs the full acceptance suite (nine criteria) and returns one result per
/// criterion. Pure compute; printing is up to the caller.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opt = {});

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace strutgeo
