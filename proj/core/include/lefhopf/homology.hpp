// Rational homology: deterministic cycle bases, induced maps (the source of
// every trace in the library), and the chain equivalence of a subdivision.
//
// Reduced homology augments degree 0 with the all-ones row; relative
// complexes are never augmented. Bases follow the first-pivot convention of
// the linear algebra kernel, so identical inputs give identical bases.

#pragma once

#include <vector>

#include "lefhopf/chain.hpp"
#include "lefhopf/subdivision.hpp"

namespace lefhopf {

struct HomologyBasis {
    bool reduced = false;
    std::vector<std::size_t> chain_dims;          // per degree
    std::vector<std::vector<Vector>> cycles;      // per degree: H_n representatives
    std::vector<std::vector<Vector>> boundaries;  // per degree: basis of im d_{n+1}
    std::vector<std::size_t> betti;               // per degree

    int top_degree() const { return static_cast<int>(betti.size()) - 1; }
    std::size_t betti_at(int n) const {
        return (n < 0 || n > top_degree()) ? 0 : betti[static_cast<std::size_t>(n)];
    }
};

/// Homology of the chain complex. The reduced flag augments degree 0 and is
/// ignored for relative complexes (their degree-0 chains already exclude the
/// subcomplex).
HomologyBasis homology(const ChainComplex& c, bool reduced = false);

struct InducedMap {
    std::vector<Matrix> degree;  // degree[n]: betti_target(n) x betti_source(n)

    const Matrix& at(int n) const;
    int top_degree() const { return static_cast<int>(degree.size()) - 1; }
};

/// Matrix of the map induced on homology, columns indexed by the source
/// cycle basis, in target homology coordinates. The chain map must commute
/// with the boundary; a coefficient solve failure is a logic error.
InducedMap induced_on_homology(const ChainMap& f, const HomologyBasis& source,
                               const HomologyBasis& target);

/// Chain equivalence phi from base chains to refined chains: vertices go to
/// the refined vertex at the same point, and in higher degree phi(sigma) is
/// solved from d phi(sigma) = phi(d sigma) inside the simplices carried by
/// sigma (the carried subcomplex triangulates a simplex, so the system is
/// solvable; failure signals an invalid subdivision).
ChainMap subdivision_equivalence(const CarrierComplex& s);

/// Chain selfmap of the base realizing a piecewise-affine selfmap: the
/// composite of the subdivision equivalence with the vertex map's chains.
ChainMap selfmap_chain(const GeoSelfMap& g);

}  // namespace lefhopf
