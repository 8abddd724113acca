#include "lefhopf/chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace lefhopf {

namespace {

// Retained simplices per degree; relative complexes drop the subcomplex.
std::vector<std::vector<Simplex>> retained_bases(const Complex& x, const Complex* rel) {
    std::vector<std::vector<Simplex>> basis(static_cast<std::size_t>(x.dim()) + 1);
    for (int p = 0; p <= x.dim(); ++p)
        for (const auto& s : x.simplices(p)) {
            if (rel) {
                Simplex in_rel;
                bool translatable = true;
                for (int v : s) {
                    auto id = rel->id_of(x.label(v));
                    if (!id) {
                        translatable = false;
                        break;
                    }
                    in_rel.push_back(*id);
                }
                if (translatable) {
                    std::sort(in_rel.begin(), in_rel.end());
                    if (rel->contains(in_rel)) continue;
                }
            }
            basis[static_cast<std::size_t>(p)].push_back(s);
        }
    return basis;
}

ChainComplex build_chain_complex(const Complex& x, const Complex* rel) {
    ChainComplex c;
    c.space = x;
    if (rel) c.rel = *rel;
    c.basis = retained_bases(x, rel);

    std::vector<std::map<Simplex, std::size_t>> index(c.basis.size());
    for (std::size_t p = 0; p < c.basis.size(); ++p)
        for (std::size_t i = 0; i < c.basis[p].size(); ++i) index[p][c.basis[p][i]] = i;

    c.boundary.resize(c.basis.size());
    c.boundary[0] = Matrix(0, c.basis[0].size());
    for (std::size_t p = 1; p < c.basis.size(); ++p) {
        Matrix d(c.basis[p - 1].size(), c.basis[p].size());
        for (std::size_t j = 0; j < c.basis[p].size(); ++j) {
            const Simplex& s = c.basis[p][j];
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex face;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face.push_back(s[i]);
                auto it = index[p - 1].find(face);
                if (it == index[p - 1].end()) continue;  // face deleted (relative)
                d.at(it->second, j) += (drop % 2 == 0 ? 1 : -1);
            }
        }
        c.boundary[p] = std::move(d);
    }
    return c;
}

}  // namespace

std::optional<std::size_t> ChainComplex::basis_index(const Simplex& s) const {
    const int p = static_cast<int>(s.size()) - 1;
    if (p < 0 || p > top_degree()) return std::nullopt;
    const auto& grade = basis[static_cast<std::size_t>(p)];
    auto it = std::lower_bound(grade.begin(), grade.end(), s);
    if (it == grade.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - grade.begin());
}

bool ChainComplex::boundaries_compose_to_zero() const {
    for (int p = 2; p <= top_degree(); ++p) {
        Matrix prod = boundary[static_cast<std::size_t>(p - 1)] * boundary[static_cast<std::size_t>(p)];
        if (!prod.is_zero()) return false;
    }
    return true;
}

ChainComplex boundary_matrices(const Complex& x) { return build_chain_complex(x, nullptr); }

ChainComplex boundary_matrices(const Pair& pair) {
    return build_chain_complex(pair.total, &pair.sub);
}

const Matrix& ChainMap::at(int p) const {
    static const Matrix empty(0, 0);
    if (p < 0 || p >= static_cast<int>(degree.size())) return empty;
    return degree[static_cast<std::size_t>(p)];
}

bool ChainMap::commutes_with_boundary() const {
    for (int p = 1; p < static_cast<int>(degree.size()); ++p) {
        const Matrix lhs = target.boundary[static_cast<std::size_t>(p)] * degree[static_cast<std::size_t>(p)];
        const Matrix rhs = degree[static_cast<std::size_t>(p - 1)] * source.boundary[static_cast<std::size_t>(p)];
        if (!(lhs == rhs)) return false;
    }
    return true;
}

namespace {

// Sign of the permutation sorting `tuple` (no repeats), via inversion count.
int sort_sign(const Simplex& tuple) {
    int inversions = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.size(); ++j)
            if (tuple[i] > tuple[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

ChainMap build_chain_map(const SimplicialMap& f, ChainComplex source, ChainComplex target) {
    ChainMap m;
    m.degree.resize(source.basis.size());
    for (std::size_t p = 0; p < source.basis.size(); ++p) {
        const std::size_t target_dim = target.dim_at(static_cast<int>(p));
        Matrix mat(target_dim, source.basis[p].size());
        for (std::size_t j = 0; j < source.basis[p].size(); ++j) {
            const Simplex& s = source.basis[p][j];
            Simplex image;
            image.reserve(s.size());
            for (int v : s) image.push_back(f.image(v));
            Simplex sorted = image;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                continue;  // degenerate image
            auto idx = target.basis_index(sorted);
            if (!idx) continue;  // lands in the deleted subcomplex
            mat.at(*idx, j) = sort_sign(image);
        }
        m.degree[p] = std::move(mat);
    }
    m.source = std::move(source);
    m.target = std::move(target);
    if (!m.commutes_with_boundary())
        throw std::logic_error("chain map fails to commute with the boundary");
    return m;
}

}  // namespace

ChainMap chain_map(const SimplicialMap& f) {
    return build_chain_map(f, boundary_matrices(f.source()), boundary_matrices(f.target()));
}

ChainMap chain_map(const SimplicialMap& f, const Pair& pair) {
    if (!f.preserves(pair))
        throw std::invalid_argument("the map does not preserve the pair");
    ChainComplex relative = boundary_matrices(pair);
    return build_chain_map(f, relative, relative);
}

ChainMap compose(const ChainMap& first, const ChainMap& then) {
    if (!(first.target.basis == then.source.basis))
        throw std::invalid_argument("chain maps are not composable");
    ChainMap m;
    m.source = first.source;
    m.target = then.target;
    m.degree.resize(first.degree.size());
    for (std::size_t p = 0; p < first.degree.size(); ++p) {
        if (p < then.degree.size())
            m.degree[p] = then.degree[p] * first.degree[p];
        else
            m.degree[p] = Matrix(then.target.dim_at(static_cast<int>(p)),
                                 first.source.dim_at(static_cast<int>(p)));
    }
    return m;
}

}  // namespace lefhopf
