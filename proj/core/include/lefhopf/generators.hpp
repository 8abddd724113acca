// Standard complexes and constructions: simplices, spheres, cycles, the
// 7-vertex torus, the 6-vertex projective plane, suspension, and wedges.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lefhopf/complex.hpp"

namespace lefhopf {

/// The full n-simplex (n >= 0), vertices v0..vn.
Complex make_simplex(int n);

/// The n-sphere as the boundary of the (n+1)-simplex (n >= 0).
Complex make_sphere(int n);

/// The m-gon circle, m >= 3, vertices c0..c(m-1) in cyclic order.
Complex make_cycle(int m);

/// The classical 7-vertex torus triangulation (7 vertices, 21 edges,
/// 14 triangles).
Complex make_torus7();

/// The 6-vertex projective plane (6 vertices, 15 edges, 10 triangles).
Complex make_rp2_6();

/// The octahedron: a 6-vertex 2-sphere, double suspension of sphere(0).
Complex make_octahedron();

/// Suspension: join with two fresh poles. Simplices are sigma,
/// sigma+{north}, sigma+{south}. Throws when a pole label collides with an
/// existing vertex.
Complex suspend(const Complex& x, const std::string& north = "N",
                const std::string& south = "S");

/// Suspension of a selfmap: agrees with f on old vertices, fixes both poles.
SimplicialMap suspend_map(const SimplicialMap& f, const std::string& north = "N",
                          const std::string& south = "S");

/// The barycentric subdivision functor on selfmaps: the barycenter of sigma
/// goes to the barycenter of f(sigma).
SimplicialMap subdivide_map(const SimplicialMap& f);

struct WedgeSummand {
    Complex space;
    std::string basepoint;    // basepoint label within `space`
    SimplicialMap include;    // e_j : space -> wedge
    SimplicialMap project;    // p_j : wedge -> space (foreign vertices to basepoint)
};

struct WedgeStructure {
    Complex wedge;
    std::string basepoint;    // identified basepoint label in the wedge
    std::vector<WedgeSummand> summands;
};

/// One-point union of based complexes. Basepoints are identified into the
/// label "bp"; other vertices of summand j get the prefix "sj.". The
/// inclusions/projections satisfy p_j e_j = id and p_j e_i = constant for
/// i != j.
WedgeStructure wedge_sum(const std::vector<std::pair<Complex, std::string>>& based);

/// Wedge of k copies of the n-sphere, n >= 0, k >= 1, based at v0.
WedgeStructure make_wedge_spheres(int n, int k);

/// Zero-padded index label, e.g. label_indexed("c", 3, 12) == "c03".
std::string label_indexed(const std::string& prefix, int index, int max_index);

}  // namespace lefhopf
