// Geometric subdivisions: a refined complex over a base complex, with every
// refined vertex placed at exact rational barycentric coordinates inside a
// base simplex. Piecewise-affine selfmaps are a subdivision plus a
// simplicial map from the refined complex back to the base.

#pragma once

#include <map>
#include <vector>

#include "lefhopf/complex.hpp"
#include "lefhopf/rational.hpp"

namespace lefhopf {

/// Sparse point of |base|: base vertex id -> coordinate, entries positive,
/// summing to 1, support a simplex of the base.
using BaryPoint = std::map<int, Rational>;

class CarrierComplex {
public:
    /// Validates: coordinates positive and summing to 1 with simplex support;
    /// every base vertex present among refined vertices with unit coordinate;
    /// the support union of every refined simplex is a base simplex (its
    /// carrier); chi(refined) == chi(base). Throws std::invalid_argument.
    CarrierComplex(Complex refined, Complex base, std::vector<BaryPoint> coords);

    /// The identity subdivision (refined == base, unit coordinates).
    static CarrierComplex trivial(const Complex& base);

    const Complex& refined() const { return refined_; }
    const Complex& base() const { return base_; }

    const BaryPoint& vertex_coords(int refined_vertex) const {
        return coords_[static_cast<std::size_t>(refined_vertex)];
    }

    /// Carrier of a refined simplex: the base simplex spanned by the supports
    /// of its vertices.
    Simplex carrier_of(const Simplex& refined_simplex) const;

    /// The refined vertex with unit coordinate at the given base vertex.
    int refined_vertex_at(int base_vertex) const {
        return at_base_vertex_[static_cast<std::size_t>(base_vertex)];
    }

private:
    Complex refined_;
    Complex base_;
    std::vector<BaryPoint> coords_;
    std::vector<int> at_base_vertex_;
};

/// Barycentric subdivision: refined vertices are the barycenters of the
/// simplices of x (label "a|b|c"), refined simplices are flags, and the
/// barycenter of a p-simplex has coordinate 1/(p+1) on each of its vertices.
CarrierComplex barycentric_subdivide(const Complex& x);

/// A piecewise-affine selfmap of |base|: affine on each refined simplex,
/// determined by a vertex map from the refined complex to the base.
struct GeoSelfMap {
    CarrierComplex subdivision;
    SimplicialMap to_base;  // source = subdivision.refined(), target = base

    GeoSelfMap(CarrierComplex subdivision_, SimplicialMap to_base_);

    const Complex& base() const { return subdivision.base(); }

    /// Lifts a plain simplicial selfmap through the trivial subdivision.
    static GeoSelfMap from_simplicial(const SimplicialMap& f);
};

}  // namespace lefhopf
