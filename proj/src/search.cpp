#include "strutgeo/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "strutgeo/constructions.hpp"
#include "strutgeo/parallel.hpp"
#include "strutgeo/strut.hpp"

namespace strutgeo {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kInf = std::numeric_limits<double>::infinity();
// States whose accumulated constraint violation is below this count as feasible
// during the anneal; the published witness is still re-validated with the strict
// predicates, whose eps_contains slack is an order of magnitude wider.
constexpr double kFeasEps = 1e-10;
constexpr double kT0 = 0.3;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d649bb133111ebULL;
    return x ^ (x >> 31);
}

// Uniform in [0, 1) from the full 64-bit draw; mt19937_64 output is fully specified
// by the standard, so runs are reproducible across platforms.
double next_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct ModeSpec {
    bool mirrored = false;  // state holds half the vertices, the rest are negated copies
    int m = 0;              // leading sides carrying the strut + length-sum constraint (0: all sides strut-constrained)
    double bound = 3.0;     // perimeters below bound - eps_check are violation candidates
};

std::vector<Point> expand_state(const ModeSpec& ms, const std::vector<Point>& s) {
    if (!ms.mirrored) return s;
    std::vector<Point> full;
    full.reserve(2 * s.size());
    full.insert(full.end(), s.begin(), s.end());
    for (const Point& p : s) full.push_back(-p);
    return full;
}

// Strict convexity in CCW order with a relative turn threshold: permissive enough for
// near-collinear chains (the fan polygons start that way), strict enough to keep the
// violation math away from zero-length sides.
bool strictly_convex_ccw(const std::vector<Point>& v) {
    const std::size_t n = v.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point e1 = v[(i + 1) % n] - v[i];
        const Point e2 = v[(i + 2) % n] - v[(i + 1) % n];
        const double l1 = norm(e1);
        const double l2 = norm(e2);
        if (l1 <= 1e-12 || l2 <= 1e-12) return false;
        if (cross(e1, e2) <= 1e-14 * l1 * l2) return false;
    }
    return true;
}

double cycle_perimeter(const std::vector<Point>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) s += dist(v[i], v[(i + 1) % v.size()]);
    return s;
}

// Distance the better of the two unit-strut apexes of side (a, b) sticks out of the
// polygon; 0 when one apex is contained.
double strut_side_violation(const ConvexPolygon& poly, Point a, Point b) {
    const double s = dist(a, b);
    if (s > 2.0) return 0.5 * s - 1.0;
    const double h = std::sqrt(std::max(0.0, 1.0 - 0.25 * s * s));
    if (s <= 1e-12) return 1.0;
    const Point mid = 0.5 * (a + b);
    const Point nrm = (h / s) * Point{a.y - b.y, b.x - a.x};
    return std::min(distance_to(poly, mid + nrm), distance_to(poly, mid - nrm));
}

double state_violation(const ModeSpec& ms, const ConvexPolygon& wrap) {
    const std::vector<Point>& v = wrap.vertices;
    const std::size_t n = v.size();
    double total = 0.0;
    if (ms.m > 0) {
        double sum = 0.0;
        for (int i = 0; i < ms.m; ++i) {
            const Point a = v[static_cast<std::size_t>(i)];
            const Point b = v[static_cast<std::size_t>(i + 1) % n];
            sum += dist(a, b);
            total += strut_side_violation(wrap, a, b);
        }
        total += std::max(0.0, 1.0 - sum);
    } else if (ms.mirrored) {
        for (std::size_t i = 0; i < n; ++i) {
            const Point a = v[i];
            const Point b = v[(i + 1) % n];
            const double s = dist(a, b);
            total += std::max(0.0, s - 1.0);
            if (s <= 2.0) {
                for (const Point& corner : inscribed_rectangle(b - a))
                    total += distance_to(wrap, corner);
            } else {
                total += s - 2.0;
            }
        }
    } else {
        for (std::size_t i = 0; i < n; ++i)
            total += strut_side_violation(wrap, v[i], v[(i + 1) % n]);
    }
    return total;
}

std::vector<Point> start_state(const ModeSpec& ms, int n_vertices) {
    if (ms.mirrored) {
        ConvexPolygon p = regular_polygon(n_vertices, 2.0 * std::sin(kPi / n_vertices));
        return {p.vertices.begin(), p.vertices.begin() + n_vertices / 2};
    }
    if (ms.m > 0) {
        return regular_polygon(n_vertices, 2.0 * std::sin(kPi / n_vertices)).vertices;
    }
    if (n_vertices == 3) return regular_polygon(3, std::sqrt(3.0)).vertices;
    return fan_ngon(n_vertices, 1e-3, 1e-4).vertices;
}

struct RestartOutcome {
    bool has_feasible = false;
    double best_perim = kInf;
    std::vector<Point> best_state;
    double best_obj = kInf;  // penalized objective, fallback when nothing feasible
    std::vector<Point> best_obj_state;
    std::vector<std::pair<int, double>> trace;
    std::vector<std::uint8_t> trace_feas;
    std::vector<std::vector<Point>> candidates;  // states below bound - eps_check
};

struct Evaluation {
    double perim = kInf;
    double viol = kInf;
    bool ok = false;
};

Evaluation evaluate(const ModeSpec& ms, const std::vector<Point>& s) {
    Evaluation e;
    ConvexPolygon wrap;  // raw CCW cycle, not canonicalized; geometry predicates
    wrap.vertices = expand_state(ms, s);
    if (!strictly_convex_ccw(wrap.vertices)) return e;
    e.perim = cycle_perimeter(wrap.vertices);
    e.viol = state_violation(ms, wrap);
    e.ok = true;
    return e;
}

Point state_centroid(const std::vector<Point>& s) {
    Point c{0.0, 0.0};
    for (const Point& p : s) c = c + p;
    return (1.0 / static_cast<double>(s.size())) * c;
}

// Deterministic greedy descent from the best annealed feasible state: pull-toward-
// center and axis moves with a shrinking step, accepting only feasible perimeter
// improvements.
void polish_state(const ModeSpec& ms, std::vector<Point>& s, double& best_perim) {
    for (double step = 1e-2; step >= 1e-7; step *= 0.5) {
        for (int sweep = 0; sweep < 200; ++sweep) {
            bool improved = false;
            for (std::size_t i = 0; i < s.size(); ++i) {
                const Point c = ms.mirrored ? Point{0.0, 0.0} : state_centroid(s);
                const Point orig = s[i];
                const Point trials[5] = {orig + step * (c - orig),
                                         {orig.x + step, orig.y},
                                         {orig.x - step, orig.y},
                                         {orig.x, orig.y + step},
                                         {orig.x, orig.y - step}};
                for (const Point& t : trials) {
                    s[i] = t;
                    const Evaluation e = evaluate(ms, s);
                    if (e.ok && e.viol <= kFeasEps && e.perim < best_perim - 1e-15) {
                        best_perim = e.perim;
                        improved = true;
                        break;  // keep the move
                    }
                    s[i] = orig;
                }
            }
            if (!improved) break;
        }
    }
}

RestartOutcome run_restart(const SearchConfig& cfg, const ModeSpec& ms, int restart) {
    RestartOutcome out;
    std::mt19937_64 rng(splitmix64(cfg.seed) ^
                        splitmix64(0x51a7b0d5ULL + static_cast<std::uint64_t>(restart)));
    std::vector<Point> state = start_state(ms, cfg.n_vertices);
    const std::size_t k = state.size();

    Evaluation cur = evaluate(ms, state);
    double obj = cur.ok ? cur.perim + cfg.penalty_weight * cur.viol : kInf;

    auto note_state = [&](const Evaluation& e) {
        if (e.viol <= kFeasEps) {
            if (e.perim < out.best_perim) {
                out.best_perim = e.perim;
                out.best_state = state;
                out.has_feasible = true;
            }
            if (e.perim < ms.bound - cfg.tol.eps_check && out.candidates.size() < 16)
                out.candidates.push_back(state);
        }
        const double o = e.perim + cfg.penalty_weight * e.viol;
        if (o < out.best_obj) {
            out.best_obj = o;
            out.best_obj_state = state;
        }
    };
    if (cur.ok) note_state(cur);

    const int epoch = std::max(1, cfg.iterations / 100);
    const int stride = std::max(1, cfg.iterations / 512);
    double temp = kT0;
    for (int it = 0; it < cfg.iterations; ++it) {
        if (it > 0 && it % epoch == 0) temp *= cfg.cooling;
        if (it % stride == 0) {
            out.trace.emplace_back(it, obj);
            out.trace_feas.push_back(cur.ok && cur.viol <= kFeasEps ? 1 : 0);
        }
        std::size_t vi = static_cast<std::size_t>(next_uniform(rng) * static_cast<double>(k));
        if (vi >= k) vi = k - 1;
        const Point saved = state[vi];
        state[vi].x += (2.0 * next_uniform(rng) - 1.0) * temp;
        state[vi].y += (2.0 * next_uniform(rng) - 1.0) * temp;
        const Evaluation trial = evaluate(ms, state);
        if (!trial.ok) {
            state[vi] = saved;
            continue;
        }
        const double trial_obj = trial.perim + cfg.penalty_weight * trial.viol;
        const bool accept =
            trial_obj <= obj || next_uniform(rng) < std::exp(-(trial_obj - obj) / temp);
        if (!accept) {
            state[vi] = saved;
            continue;
        }
        cur = trial;
        obj = trial_obj;
        note_state(cur);
    }

    if (out.has_feasible) {
        polish_state(ms, out.best_state, out.best_perim);
        if (out.best_perim < ms.bound - cfg.tol.eps_check && out.candidates.size() < 17)
            out.candidates.push_back(out.best_state);
    }
    out.trace.emplace_back(cfg.iterations, out.has_feasible ? out.best_perim : out.best_obj);
    out.trace_feas.push_back(out.has_feasible ? 1 : 0);
    return out;
}

// Strict feasibility of a canonical witness. For the leading-sides mode the original
// side indexing is recovered by endpoint matching; if canonicalization merged one of
// the constrained sides away the check falls back to the raw cycle and the index list
// stays empty.
bool witness_feasible(const ModeSpec& ms, const SearchConfig& cfg, const ConvexPolygon& witness,
                      const std::vector<Point>& raw_full, std::vector<int>* constrained_sides) {
    if (ms.m > 0) {
        const std::size_t n = witness.vertices.size();
        std::vector<int> mapped;
        for (int i = 0; i < ms.m; ++i) {
            const Point a = raw_full[static_cast<std::size_t>(i)];
            const Point b = raw_full[static_cast<std::size_t>(i + 1) % raw_full.size()];
            int found = -1;
            for (std::size_t j = 0; j < n; ++j) {
                if (dist(witness.vertices[j], a) <= 1e-7 &&
                    dist(witness.vertices[(j + 1) % n], b) <= 1e-7) {
                    found = static_cast<int>(j);
                    break;
                }
            }
            if (found < 0) break;
            mapped.push_back(found);
        }
        const bool use_witness = mapped.size() == static_cast<std::size_t>(ms.m);
        ConvexPolygon raw;
        raw.vertices = raw_full;
        const ConvexPolygon& poly = use_witness ? witness : raw;
        double sum = 0.0;
        for (int i = 0; i < ms.m; ++i) {
            const int side = use_witness ? mapped[static_cast<std::size_t>(i)] : i;
            const std::size_t sz = poly.vertices.size();
            sum += dist(poly.vertices[static_cast<std::size_t>(side)],
                        poly.vertices[(static_cast<std::size_t>(side) + 1) % sz]);
            if (!side_has_strut(poly, side, 1.0, cfg.tol)) return false;
        }
        if (sum < 1.0 - cfg.tol.eps_geom) return false;
        if (use_witness && constrained_sides) *constrained_sides = mapped;
        return true;
    }
    if (ms.mirrored) {
        const std::size_t n = witness.vertices.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (dist(witness.vertices[i], witness.vertices[(i + 1) % n]) > 1.0 + 1e-9)
                return false;
        }
        return has_delta_s_property(witness, cfg.tol).holds;
    }
    return has_delta_property(witness, 1.0, cfg.tol).holds;
}

SearchReport finalize(const SearchConfig& cfg, const ModeSpec& ms,
                      const std::vector<RestartOutcome>& outs) {
    int winner = 0;
    for (int r = 1; r < static_cast<int>(outs.size()); ++r) {
        const RestartOutcome& a = outs[static_cast<std::size_t>(r)];
        const RestartOutcome& b = outs[static_cast<std::size_t>(winner)];
        if (a.has_feasible != b.has_feasible) {
            if (a.has_feasible) winner = r;
            continue;
        }
        const double va = a.has_feasible ? a.best_perim : a.best_obj;
        const double vb = b.has_feasible ? b.best_perim : b.best_obj;
        if (va < vb) winner = r;
    }
    const RestartOutcome& win = outs[static_cast<std::size_t>(winner)];

    SearchReport rep;
    rep.trace = win.trace;
    rep.trace_feasible = win.trace_feas;

    const std::vector<Point>& wstate = win.has_feasible ? win.best_state : win.best_obj_state;
    const std::vector<Point> full = expand_state(ms, wstate);
    rep.witness = convex_hull(full, cfg.tol.eps_geom);
    rep.best_value = win.has_feasible ? win.best_perim : win.best_obj;
    rep.feasible =
        win.has_feasible && witness_feasible(ms, cfg, rep.witness, full, &rep.constrained_sides);

    // Candidates beating the bound get the strict predicate at tol and again at
    // tol/10 before being recorded.
    Tolerances tight{cfg.tol.eps_geom / 10.0, cfg.tol.eps_contains / 10.0,
                     cfg.tol.eps_check / 10.0};
    SearchConfig tight_cfg = cfg;
    tight_cfg.tol = tight;
    for (const RestartOutcome& out : outs) {
        for (const std::vector<Point>& cand : out.candidates) {
            if (rep.violations.size() >= 32) break;
            const std::vector<Point> cfull = expand_state(ms, cand);
            ConvexPolygon canon = convex_hull(cfull, cfg.tol.eps_geom);
            if (perimeter(canon) >= ms.bound - cfg.tol.eps_check) continue;
            if (!witness_feasible(ms, cfg, canon, cfull, nullptr)) continue;
            if (!witness_feasible(ms, tight_cfg, canon, cfull, nullptr)) continue;
            bool dup = false;
            for (const ConvexPolygon& v : rep.violations)
                if (approx_equal(v, canon, 1e-9)) dup = true;
            if (!dup) rep.violations.push_back(canon);
        }
    }
    return rep;
}

SearchReport run_search(const SearchConfig& cfg, const ModeSpec& ms) {
    std::vector<RestartOutcome> outs(static_cast<std::size_t>(cfg.restarts));
    parallel_for_index(static_cast<std::size_t>(cfg.restarts),
                       [&](std::size_t r) { outs[r] = run_restart(cfg, ms, static_cast<int>(r)); });
    return finalize(cfg, ms, outs);
}

}  // namespace

void SearchConfig::validate() const {
    if (iterations < 1) throw std::invalid_argument("SearchConfig: iterations must be >= 1");
    if (restarts < 1) throw std::invalid_argument("SearchConfig: restarts must be >= 1");
    if (n_vertices < 3) throw std::invalid_argument("SearchConfig: n_vertices must be >= 3");
    if (!(cooling > 0.0) || !(cooling < 1.0))
        throw std::invalid_argument("SearchConfig: cooling must be in (0, 1)");
    if (!(penalty_weight > 0.0))
        throw std::invalid_argument("SearchConfig: penalty_weight must be > 0");
    tol.validate();
}

SearchReport minimize_delta_perimeter(const SearchConfig& cfg) {
    cfg.validate();
    return run_search(cfg, ModeSpec{false, 0, 3.0});
}

SearchReport centsym_deficit_search(const SearchConfig& cfg) {
    cfg.validate();
    if (cfg.n_vertices < 4 || cfg.n_vertices % 2 != 0)
        throw std::invalid_argument("centsym_deficit_search: n_vertices must be even and >= 4");
    return run_search(cfg, ModeSpec{true, 0, 6.0});
}

SearchReport conjecture_search(int m, const SearchConfig& cfg) {
    cfg.validate();
    if (m < 1 || m > cfg.n_vertices - 1)
        throw std::invalid_argument("conjecture_search: need 1 <= m <= n_vertices - 1");
    return run_search(cfg, ModeSpec{false, m, 3.0});
}

}  // namespace strutgeo
