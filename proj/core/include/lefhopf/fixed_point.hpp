// Geometric fixed points of piecewise-affine selfmaps.
//
// Open refined cells partition the space, so every cell's affine fixed-point
// system is solved exactly and only strictly interior solutions are kept.
// Each admissible fixed point carries the exact derivative of the map in the
// tangent coordinates of its (maximal) carrier simplex; the local index is
// sign det(I - D). Hypothesis violations (non-isolated sets, fixed points
// outside open maximal simplices, degenerate derivatives) throw
// hypothesis_violation and are reported as skips by the verifier.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lefhopf/lefschetz.hpp"
#include "lefhopf/subdivision.hpp"

namespace lefhopf {

struct hypothesis_violation : std::runtime_error {
    explicit hypothesis_violation(const std::string& what) : std::runtime_error(what) {}
};

struct FixedPoint {
    Simplex cell;            // the refined open cell containing the point
    Simplex carrier;         // base simplex sigma supporting the point
    Vector carrier_coords;   // barycentric coordinates in sigma, all positive
    Matrix derivative;       // dim sigma x dim sigma linear part at the point
};

/// All fixed points of the piecewise-affine selfmap, each reported once.
/// Throws hypothesis_violation for a positive-dimensional fixed set
/// ("non-isolated fixed points"), for a fixed point whose carrier is not a
/// maximal simplex, and when the map is not affine near a fixed point.
std::vector<FixedPoint> enumerate_fixed_points(const GeoSelfMap& g);

/// sign det(I - D); throws hypothesis_violation("degenerate fixed point")
/// when the determinant vanishes.
int local_index(const FixedPoint& p);

struct IndexReport {
    std::vector<FixedPoint> points;
    std::vector<int> indices;        // matching points
    long total = 0;                  // sum of the indices
    Rational lefschetz_crosscheck;   // L of the same map
};

IndexReport total_index(const GeoSelfMap& g);

/// total index == Lefschetz number; hypothesis violations are reported as
/// skipped, not failed.
AxiomReport verify_normalization(const GeoSelfMap& g);

/// Exact feasibility of a system of strict linear inequalities
/// (coeffs . s + constant > 0, constraint rows of length nvars + 1), by
/// Fourier-Motzkin elimination.
bool strictly_feasible(std::vector<Vector> constraints, std::size_t nvars);

}  // namespace lefhopf
