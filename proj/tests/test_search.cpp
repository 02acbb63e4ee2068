#include <doctest.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "strutgeo/geometry.hpp"
#include "strutgeo/polygon_io.hpp"
#include "strutgeo/search.hpp"
#include "strutgeo/strut.hpp"

using namespace strutgeo;

namespace {

SearchConfig small_config(std::uint64_t seed, int n) {
    SearchConfig cfg;
    cfg.seed = seed;
    cfg.iterations = 2000;
    cfg.restarts = 2;
    cfg.n_vertices = n;
    return cfg;
}

struct ThreadsGuard {
    std::string saved;
    bool had = false;
    ThreadsGuard() {
        if (const char* v = std::getenv("STRUTGEO_THREADS")) {
            saved = v;
            had = true;
        }
    }
    ~ThreadsGuard() {
        if (had)
            setenv("STRUTGEO_THREADS", saved.c_str(), 1);
        else
            unsetenv("STRUTGEO_THREADS");
    }
};

}  // namespace

TEST_CASE("config validation") {
    SearchConfig cfg = small_config(1, 5);
    CHECK_NOTHROW(cfg.validate());
    cfg.iterations = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = small_config(1, 5);
    cfg.restarts = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = small_config(1, 2);  // fewer than 3 vertices
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = small_config(1, 5);
    cfg.cooling = 1.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = small_config(1, 5);
    cfg.penalty_weight = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);

    // mode-specific preconditions
    CHECK_THROWS_AS((void)centsym_deficit_search(small_config(1, 5)), std::invalid_argument);
    CHECK_THROWS_AS((void)conjecture_search(0, small_config(1, 5)), std::invalid_argument);
    CHECK_THROWS_AS((void)conjecture_search(5, small_config(1, 5)), std::invalid_argument);
}

TEST_CASE("deterministic per seed and across thread counts") {
    const SearchConfig cfg = small_config(5, 3);
    const std::string first = search_report_to_json(minimize_delta_perimeter(cfg), cfg).dump();
    const std::string second = search_report_to_json(minimize_delta_perimeter(cfg), cfg).dump();
    CHECK(first == second);

    {
        ThreadsGuard guard;
        setenv("STRUTGEO_THREADS", "1", 1);
        const std::string serial =
            search_report_to_json(minimize_delta_perimeter(cfg), cfg).dump();
        setenv("STRUTGEO_THREADS", "3", 1);
        const std::string parallel =
            search_report_to_json(minimize_delta_perimeter(cfg), cfg).dump();
        CHECK(serial == first);
        CHECK(parallel == first);
    }

    // a different seed explores differently
    SearchConfig other = cfg;
    other.seed = 6;
    CHECK(search_report_to_json(minimize_delta_perimeter(other), other).dump() != first);
}

TEST_CASE("minimize delta perimeter on triangles") {
    const SearchReport rep = minimize_delta_perimeter(small_config(42, 3));
    CHECK(rep.feasible);
    CHECK(rep.best_value >= 3.0 - 1e-3);
    CHECK(rep.best_value <= 3.5);  // the polish should get well below the start (~5.2)
    CHECK(rep.violations.empty());
    REQUIRE(rep.witness.size() == 3);
    CHECK(has_delta_property(rep.witness).holds);
    CHECK(perimeter(rep.witness) == doctest::Approx(rep.best_value).epsilon(1e-9));

    // trace instrumentation
    REQUIRE_FALSE(rep.trace.empty());
    CHECK(rep.trace_feasible.size() == rep.trace.size());
    CHECK(rep.trace.front().first == 0);
    CHECK(rep.trace.back().first == 2000);  // final post-polish sample
    for (std::size_t i = 1; i < rep.trace.size(); ++i)
        CHECK(rep.trace[i].first >= rep.trace[i - 1].first);
}

TEST_CASE("centrally symmetric deficit search starts feasible") {
    const SearchReport rep = centsym_deficit_search(small_config(3, 6));
    CHECK(rep.feasible);
    CHECK(rep.best_value >= 6.0 - 1e-3);
    CHECK(rep.best_value <= 6.2);
    CHECK(rep.violations.empty());
    REQUIRE(rep.witness.size() == 6);

    const auto center = symmetry_center(rep.witness, 1e-7);
    REQUIRE(center.has_value());
    CHECK(norm(*center) <= 1e-7);
    for (std::size_t i = 0; i < rep.witness.size(); ++i) {
        const double side = dist(rep.witness.vertices[i],
                                 rep.witness.vertices[(i + 1) % rep.witness.size()]);
        CHECK(side <= 1.0 + 1e-9);
    }
    CHECK(has_delta_s_property(rep.witness).holds);
}

TEST_CASE("two-strut conjecture search") {
    const SearchReport rep = conjecture_search(2, small_config(9, 5));
    CHECK(rep.feasible);
    CHECK(rep.best_value >= 3.0 - 1e-3);
    CHECK(rep.violations.empty());
    REQUIRE(rep.constrained_sides.size() == 2);

    // the flagged sides carry unit struts and sum to at least 1
    double len_sum = 0.0;
    const std::size_t n = rep.witness.size();
    for (int side : rep.constrained_sides) {
        REQUIRE(side >= 0);
        REQUIRE(static_cast<std::size_t>(side) < n);
        len_sum += dist(rep.witness.vertices[static_cast<std::size_t>(side)],
                        rep.witness.vertices[(static_cast<std::size_t>(side) + 1) % n]);
        CHECK(side_has_strut(rep.witness, side, 1.0).has_value());
    }
    CHECK(len_sum >= 1.0 - 1e-7);
}
