// Lefschetz and Euler numbers, mapping degrees, and executable checks of the
// trace identities: cofibration, exact-sequence additivity, commutativity,
// triads, suspension, and wedges of spheres. Everything is exact; a
// non-integer Lefschetz number is a hard internal error.

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "lefhopf/generators.hpp"
#include "lefhopf/homology.hpp"

namespace lefhopf {

/// A selfmap given either by vertices alone or as a piecewise-affine map
/// from a subdivision.
using AnySelfmap = std::variant<SimplicialMap, GeoSelfMap>;

const Complex& selfmap_space(const AnySelfmap& f);

/// The chain selfmap of the underlying space (plain maps pass through the
/// trivial subdivision path only conceptually: their chains are used as-is).
ChainMap chain_selfmap(const AnySelfmap& f);

struct LefschetzReport {
    std::vector<Rational> traces;  // per degree, absolute rational homology
    Rational value;                // L(f) = alternating trace sum
    Rational reduced;              // L(f) - 1
};

LefschetzReport lefschetz_number(const AnySelfmap& f);
LefschetzReport lefschetz_number(const SimplicialMap& f);
LefschetzReport lefschetz_number(const GeoSelfMap& g);

/// Alternating trace sum on the relative homology of the pair, computed on
/// relative chains (not via the absolute numbers).
Rational relative_lefschetz(const SimplicialMap& f, const Pair& pair);

struct EulerReport {
    long chi = 0;                // alternating Betti sum
    long chi_reduced = 0;        // chi - 1
    long combinatorial_chi = 0;  // alternating simplex count (equal to chi)
    std::vector<std::size_t> betti;
};

EulerReport euler(const Complex& x);

struct DegreeReport {
    long value = 0;
    int sphere_dim = 0;  // the one degree carrying reduced homology
};

/// Degree of a selfmap of a complex whose reduced homology is rank one,
/// concentrated in a single degree. Throws std::invalid_argument otherwise.
DegreeReport degree_of(const AnySelfmap& f);

/// Degrees of the component maps p_j f e_j of a wedge selfmap; all summands
/// must be spheres of one common dimension.
std::vector<long> wedge_degrees(const AnySelfmap& f, const WedgeStructure& w);

struct AxiomReport {
    std::string kind;
    Rational lhs = 0;
    Rational rhs = 0;
    bool holds = false;
    bool skipped = false;  // hypothesis violation, not a failure
    std::string detail;
};

/// L(f) = L(f') + L(fbar) - 1 with L(fbar) := 1 + relative Lefschetz number.
AxiomReport verify_cofibration(const SimplicialMap& f, const Pair& pair);

/// L(f_X) = L(f_A) + L(f; X, A), each side from its own chain complex.
AxiomReport verify_les_additivity(const SimplicialMap& f, const Pair& pair);

/// L(gf) = L(fg) for f : X -> Y, g : Y -> X.
AxiomReport verify_commutativity(const SimplicialMap& f, const SimplicialMap& g);

/// L(f) = L(f_P) + L(f_Q) - L(f_{P cap Q}) for subcomplexes with P u Q = X,
/// f(P) <= P, f(Q) <= Q.
AxiomReport verify_triad(const SimplicialMap& f, const Complex& part_p, const Complex& part_q);

/// Reduced Lefschetz number changes sign under suspension.
AxiomReport verify_suspension(const SimplicialMap& f);

/// L~(f) = (-1)^n (deg f_1 + ... + deg f_k) on a wedge of n-spheres.
AxiomReport verify_wedge_spheres(const AnySelfmap& f, const WedgeStructure& w);

/// Equal Lefschetz numbers for a designated homotopic pair of maps.
AxiomReport verify_homotopy_instance(const AnySelfmap& a, const AnySelfmap& b);

/// Restriction of a selfmap to an invariant subcomplex; throws when the
/// subcomplex is not preserved.
SimplicialMap restrict_map(const SimplicialMap& f, const Complex& sub);

/// The subcomplex of simplices (matched by label) lying in both inputs;
/// nullopt when the intersection is empty.
std::optional<Complex> intersect_complexes(const Complex& a, const Complex& b);

}  // namespace lefhopf
