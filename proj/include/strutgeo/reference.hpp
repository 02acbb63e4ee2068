#pragma once

#include <cstdint>
#include <random>

#include "strutgeo/geometry.hpp"

namespace strutgeo::reference {

/// Independent Minkowski-sum oracle: convex hull of all pairwise vertex sums
/// (quadratic). Used only to cross-check the edge-merge implementation.
ConvexPolygon hull_of_sums(const ConvexPolygon& p, const ConvexPolygon& q);

/// Hausdorff oracle by dense boundary sampling (endpoints of every edge included, so
/// vertex-attained maxima are exact).
double sampled_hausdorff(const ConvexPolygon& p, const ConvexPolygon& q,
                         int samples_per_edge = 256);

/// Random convex polygon: hull of `n_points` points drawn in the disk of radius
/// `radius`. May return fewer vertices than n_points.
ConvexPolygon random_convex_polygon(std::mt19937_64& rng, int n_points, double radius = 1.0);

/// Random polygon with exactly n vertices near the unit circle (perturbed regular
/// n-gon): these carry the unit-strut property robustly.
ConvexPolygon perturbed_unit_polygon(std::mt19937_64& rng, int n, double radial_jitter = 0.03);

bool has_parallel_sides(const ConvexPolygon& p, double eps = 1e-9);

/// Random point strictly inside a non-degenerate polygon (convex combination).
Point random_interior_point(std::mt19937_64& rng, const ConvexPolygon& p);

/// Hausdorff distance after optimal alignment: centroids matched, best rotation found
/// by coarse scan plus golden-section refinement. For comparing search witnesses with
/// canonical shapes.
double aligned_hausdorff(const ConvexPolygon& p, const ConvexPolygon& target);

}  // namespace strutgeo::reference
