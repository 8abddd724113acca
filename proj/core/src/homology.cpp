#include "lefhopf/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace lefhopf {

HomologyBasis homology(const ChainComplex& c, bool reduced) {
    HomologyBasis h;
    h.reduced = reduced && !c.rel.has_value();
    const int top = c.top_degree();
    h.chain_dims.resize(static_cast<std::size_t>(top) + 1);
    h.cycles.resize(static_cast<std::size_t>(top) + 1);
    h.boundaries.resize(static_cast<std::size_t>(top) + 1);
    h.betti.resize(static_cast<std::size_t>(top) + 1);

    for (int n = 0; n <= top; ++n) {
        const std::size_t dim = c.dim_at(n);
        h.chain_dims[static_cast<std::size_t>(n)] = dim;

        // Cycle space: kernel of the outgoing boundary (augmentation at
        // degree 0 for reduced homology).
        std::vector<Vector> cycle_basis;
        if (n == 0 && h.reduced) {
            Matrix aug(1, dim);
            for (std::size_t j = 0; j < dim; ++j) aug.at(0, j) = 1;
            cycle_basis = rref_decompose(aug).kernel_basis;
        } else if (n == 0) {
            cycle_basis.reserve(dim);
            for (std::size_t j = 0; j < dim; ++j) {
                Vector e(dim);
                e[j] = 1;
                cycle_basis.push_back(std::move(e));
            }
        } else {
            cycle_basis = rref_decompose(c.boundary[static_cast<std::size_t>(n)]).kernel_basis;
        }

        // Boundary space: image of the incoming boundary.
        std::vector<Vector> boundary_basis;
        if (n + 1 <= top)
            boundary_basis =
                rref_decompose(c.boundary[static_cast<std::size_t>(n + 1)]).image_basis;
        h.boundaries[static_cast<std::size_t>(n)] = boundary_basis;

        // Representatives: cycles extending the boundary span, greedily in
        // kernel-basis order (deterministic).
        std::vector<Vector> span = boundary_basis;
        std::size_t span_rank = rank_of(matrix_from_columns(dim, span));
        for (const auto& z : cycle_basis) {
            span.push_back(z);
            const std::size_t r = rank_of(matrix_from_columns(dim, span));
            if (r > span_rank) {
                span_rank = r;
                h.cycles[static_cast<std::size_t>(n)].push_back(z);
            } else {
                span.pop_back();
            }
        }
        h.betti[static_cast<std::size_t>(n)] = h.cycles[static_cast<std::size_t>(n)].size();
    }
    return h;
}

const Matrix& InducedMap::at(int n) const {
    static const Matrix empty(0, 0);
    if (n < 0 || n >= static_cast<int>(degree.size())) return empty;
    return degree[static_cast<std::size_t>(n)];
}

InducedMap induced_on_homology(const ChainMap& f, const HomologyBasis& source,
                               const HomologyBasis& target) {
    InducedMap induced;
    const int top = std::max(source.top_degree(), target.top_degree());
    induced.degree.resize(static_cast<std::size_t>(top) + 1);
    for (int n = 0; n <= top; ++n) {
        const auto& src_cycles =
            n <= source.top_degree() ? source.cycles[static_cast<std::size_t>(n)]
                                     : std::vector<Vector>{};
        Matrix m(target.betti_at(n), src_cycles.size());
        if (n <= target.top_degree()) {
            const auto& tgt_cycles = target.cycles[static_cast<std::size_t>(n)];
            const auto& tgt_boundaries = target.boundaries[static_cast<std::size_t>(n)];
            for (std::size_t j = 0; j < src_cycles.size(); ++j) {
                const Matrix& fn = f.at(n);
                Vector image = fn.rows() == 0 && fn.cols() == 0
                                   ? Vector(target.chain_dims[static_cast<std::size_t>(n)])
                                   : fn.apply(src_cycles[j]);
                auto coeffs = solve_modulo(image, tgt_cycles, tgt_boundaries);
                if (!coeffs)
                    throw std::logic_error(
                        "image of a cycle is not a cycle modulo boundaries; the input is not a "
                        "chain map");
                for (std::size_t i = 0; i < coeffs->size(); ++i) m.at(i, j) = (*coeffs)[i];
            }
        }
        induced.degree[static_cast<std::size_t>(n)] = std::move(m);
    }
    return induced;
}

ChainMap subdivision_equivalence(const CarrierComplex& s) {
    ChainMap phi;
    phi.source = boundary_matrices(s.base());
    phi.target = boundary_matrices(s.refined());
    phi.degree.resize(phi.source.basis.size());

    // Degree 0: each base vertex to the refined vertex at the same point.
    {
        Matrix m(phi.target.dim_at(0), phi.source.dim_at(0));
        for (std::size_t j = 0; j < phi.source.basis[0].size(); ++j) {
            const int base_vertex = phi.source.basis[0][j][0];
            const Simplex refined_vertex{s.refined_vertex_at(base_vertex)};
            m.at(*phi.target.basis_index(refined_vertex), j) = 1;
        }
        phi.degree[0] = std::move(m);
    }

    for (int p = 1; p <= phi.source.top_degree(); ++p) {
        const auto& base_grade = phi.source.basis[static_cast<std::size_t>(p)];
        Matrix m(phi.target.dim_at(p), base_grade.size());

        // Refined p-simplices carried by each base simplex.
        const auto& refined_grade = phi.target.basis[static_cast<std::size_t>(p)];
        for (std::size_t j = 0; j < base_grade.size(); ++j) {
            const Simplex& sigma = base_grade[j];
            std::vector<std::size_t> carried;
            for (std::size_t t = 0; t < refined_grade.size(); ++t) {
                const Simplex carrier = s.carrier_of(refined_grade[t]);
                if (std::includes(sigma.begin(), sigma.end(), carrier.begin(), carrier.end()))
                    carried.push_back(t);
            }

            // Right-hand side: phi of the boundary of sigma.
            const Vector rhs = phi.degree[static_cast<std::size_t>(p - 1)].apply(
                phi.source.boundary[static_cast<std::size_t>(p)].column(j));

            Matrix restricted(phi.target.dim_at(p - 1), carried.size());
            const Matrix& d_ref = phi.target.boundary[static_cast<std::size_t>(p)];
            for (std::size_t cj = 0; cj < carried.size(); ++cj)
                for (std::size_t i = 0; i < restricted.rows(); ++i)
                    restricted.at(i, cj) = d_ref.at(i, carried[cj]);

            auto x = solve(restricted, rhs);
            if (!x)
                throw std::invalid_argument(
                    "subdivision chain equivalence is unsolvable; the carrier data is not a "
                    "subdivision");
            for (std::size_t cj = 0; cj < carried.size(); ++cj)
                m.at(carried[cj], j) = (*x)[cj];
        }
        phi.degree[static_cast<std::size_t>(p)] = std::move(m);
    }

    if (!phi.commutes_with_boundary())
        throw std::logic_error("subdivision equivalence fails to commute with the boundary");
    return phi;
}

ChainMap selfmap_chain(const GeoSelfMap& g) {
    ChainMap composite = compose(subdivision_equivalence(g.subdivision), chain_map(g.to_base));
    if (!composite.commutes_with_boundary())
        throw std::logic_error("piecewise-affine chain selfmap fails to commute with the boundary");
    return composite;
}

}  // namespace lefhopf
