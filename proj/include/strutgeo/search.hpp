#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "strutgeo/geometry.hpp"

namespace strutgeo {

struct SearchConfig {
    std::uint64_t seed = 0;
    int iterations = 100000;
    int restarts = 4;
    int n_vertices = 5;
    double cooling = 0.95;        // per-epoch temperature multiplier
    double penalty_weight = 10.0; // additive infeasibility penalty scale
    Tolerances tol{};

    void validate() const;  // throws std::invalid_argument
};

struct SearchReport {
    double best_value = 0.0;
    ConvexPolygon witness;
    bool feasible = false;
    std::vector<std::pair<int, double>> trace;  // (iteration, objective) samples
    std::vector<std::uint8_t> trace_feasible;   // parallel to trace: sampled state met the constraints
    std::vector<ConvexPolygon> violations;      // double-checked counterexample candidates
    std::vector<int> constrained_sides;         // conjecture search: side indices in the witness
};

/// Simulated annealing over vertex perturbations of an n-gon, minimizing perimeter
/// subject to the unit-strut property on every side. Deterministic per config: restart
/// r uses an RNG stream keyed by (seed, r); parallel execution merges by minimum with
/// lexicographic tie-break on restart index. Any state with the property and perimeter
/// < 3 - eps_check is re-verified at eps_check/10 before being recorded as a violation.
SearchReport minimize_delta_perimeter(const SearchConfig& cfg);

/// Same engine over centrally symmetric polygons (half the vertices are free, the
/// rest mirrored), constraints: delta-S about the origin and every side <= 1 (+1e-9
/// slack). Violations are perimeters < 6 - eps_check. Requires even n_vertices >= 4.
SearchReport centsym_deficit_search(const SearchConfig& cfg);

/// Minimizes perimeter subject to: sides 0..m-1 each have a unit strut and their
/// lengths sum to >= 1. Violations are perimeters < 3 - eps_check (the m=2 bound is a
/// theorem; m >= 3 is evidence-gathering only).
SearchReport conjecture_search(int m, const SearchConfig& cfg);

}  // namespace strutgeo
