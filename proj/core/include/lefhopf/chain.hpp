// Chain complexes over the rationals and the chain maps of simplicial maps.
//
// Boundary convention: d[v0..vp] = sum (-1)^i [v0..vi^..vp] with vertices in
// the global label order. Relative complexes delete the simplices of the
// subcomplex from every basis. A simplicial map contributes the sign of the
// permutation sorting its image vertices; degenerate images contribute zero.

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lefhopf/complex.hpp"
#include "lefhopf/matrix.hpp"

namespace lefhopf {

struct ChainComplex {
    Complex space;
    std::optional<Complex> rel;                 // deleted subcomplex, if relative
    std::vector<std::vector<Simplex>> basis;    // basis[p]: retained p-simplices in order
    std::vector<Matrix> boundary;               // boundary[p]: C_p -> C_{p-1}; boundary[0] has 0 rows

    int top_degree() const { return static_cast<int>(basis.size()) - 1; }
    std::size_t dim_at(int p) const {
        return (p < 0 || p > top_degree()) ? 0 : basis[static_cast<std::size_t>(p)].size();
    }
    std::optional<std::size_t> basis_index(const Simplex& s) const;

    /// d o d == 0 in every degree.
    bool boundaries_compose_to_zero() const;
};

/// Absolute chains of x.
ChainComplex boundary_matrices(const Complex& x);

/// Relative chains of the pair: simplices of the subcomplex are deleted and
/// boundary entries landing in them dropped.
ChainComplex boundary_matrices(const Pair& pair);

struct ChainMap {
    ChainComplex source;
    ChainComplex target;
    std::vector<Matrix> degree;  // degree[p]: source C_p -> target C_p (zero-size beyond top)

    const Matrix& at(int p) const;
    bool commutes_with_boundary() const;
};

/// Chain map of a simplicial map on absolute chains. Verifies commutation
/// with the boundary.
ChainMap chain_map(const SimplicialMap& f);

/// Relative chain map of a pair selfmap; throws std::invalid_argument when f
/// does not preserve the pair.
ChainMap chain_map(const SimplicialMap& f, const Pair& pair);

/// Composite then(first(.)); throws on basis mismatch.
ChainMap compose(const ChainMap& first, const ChainMap& then);

}  // namespace lefhopf
