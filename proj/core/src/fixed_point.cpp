#include "lefhopf/fixed_point.hpp"

#include <algorithm>
#include <sstream>

namespace lefhopf {

bool strictly_feasible(std::vector<Vector> constraints, std::size_t nvars) {
    for (const auto& c : constraints)
        if (c.size() != nvars + 1) throw std::invalid_argument("bad constraint arity");
    for (std::size_t var = nvars; var-- > 0;) {
        std::vector<Vector> lower, upper, rest;
        for (auto& c : constraints) {
            const Rational a = c[var];
            c.erase(c.begin() + static_cast<long>(var));
            if (a > 0)
                lower.push_back(c);  // a s + rest > 0, a > 0: s > -rest/a
            else if (a < 0)
                upper.push_back(c);
            else
                rest.push_back(c);
            if (a != 0)
                for (auto& x : (a > 0 ? lower.back() : upper.back())) x /= a;
        }
        // After normalization: lower rows mean s + L(s') > 0, upper rows mean
        // s + U(s') < 0 is wrong orientation; careful below.
        std::vector<Vector> next = std::move(rest);
        for (const auto& lo : lower)
            for (const auto& up : upper) {
                // lower: s > -L, upper (a < 0, divided by a flips): s < -U.
                // Combined: -U - (-L) > 0, i.e. L - U > 0.
                Vector combined(lo.size());
                for (std::size_t i = 0; i < lo.size(); ++i) combined[i] = lo[i] - up[i];
                next.push_back(std::move(combined));
            }
        constraints = std::move(next);
    }
    for (const auto& c : constraints)
        if (c[0] <= 0) return false;
    return true;
}

namespace {

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    Matrix result(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vector e(n);
        e[j] = 1;
        auto x = solve(m, e);
        if (!x) return std::nullopt;
        for (std::size_t i = 0; i < n; ++i) result.at(i, j) = (*x)[i];
    }
    // solve() returns some solution even for singular systems; confirm.
    if (!(m * result == Matrix::identity(n))) return std::nullopt;
    return result;
}

struct CellSolution {
    Simplex cell;
    Vector weights;  // barycentric in the cell, all strictly positive
};

std::string cell_name(const Complex& refined, const Simplex& cell) {
    std::string name = "{";
    const auto labels = refined.labels_of(cell);
    for (std::size_t i = 0; i < labels.size(); ++i) name += (i ? "," : "") + labels[i];
    return name + "}";
}

// Derivative of the affine germ at a fixed point supported in the open cell
// of a maximal base simplex sigma. Every refined top cell over sigma that
// contains `cell` must induce the same affine map; otherwise the map is not
// affine near the point.
Matrix germ_derivative(const GeoSelfMap& g, const Simplex& cell, const Simplex& sigma) {
    const Complex& refined = g.subdivision.refined();
    const int p = static_cast<int>(sigma.size()) - 1;
    std::map<int, std::size_t> pos_in_sigma;
    for (std::size_t i = 0; i < sigma.size(); ++i) pos_in_sigma[sigma[i]] = i;

    std::optional<Matrix> germ;  // (p+1)x(p+1) matrix in sigma barycentric coordinates
    for (const auto& coface : refined.simplices(p)) {
        if (!std::includes(coface.begin(), coface.end(), cell.begin(), cell.end())) continue;
        Matrix positions(sigma.size(), sigma.size());
        Matrix images(sigma.size(), sigma.size());
        bool inside = true;
        for (std::size_t j = 0; j < coface.size() && inside; ++j) {
            for (const auto& [bv, coord] : g.subdivision.vertex_coords(coface[j])) {
                auto it = pos_in_sigma.find(bv);
                if (it == pos_in_sigma.end()) {
                    inside = false;
                    break;
                }
                positions.at(it->second, j) = coord;
            }
            const int image_vertex = g.to_base.image(coface[j]);
            auto it = pos_in_sigma.find(image_vertex);
            if (it == pos_in_sigma.end()) {
                inside = false;
                break;
            }
            images.at(it->second, j) = 1;
        }
        if (!inside)
            throw hypothesis_violation(
                "general-position violation: the map is not affine near the fixed point in cell " +
                cell_name(refined, cell));
        auto inv = inverse(positions);
        if (!inv)
            throw std::invalid_argument("degenerate refined simplex " + cell_name(refined, coface));
        Matrix m = images * *inv;
        if (germ && !(m == *germ))
            throw hypothesis_violation(
                "general-position violation: adjacent cells induce different affine maps at " +
                cell_name(refined, cell));
        if (!germ) germ = std::move(m);
    }
    if (!germ)
        throw hypothesis_violation(
            "general-position violation: no top-dimensional cell covers the fixed point");

    // Tangent chart: drop the 0th barycentric coordinate of sigma.
    Matrix d(static_cast<std::size_t>(p), static_cast<std::size_t>(p));
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= p; ++j)
            d.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
                germ->at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) -
                germ->at(static_cast<std::size_t>(i), 0);
    return d;
}

}  // namespace

std::vector<FixedPoint> enumerate_fixed_points(const GeoSelfMap& g) {
    const Complex& refined = g.subdivision.refined();
    const Complex& base = g.base();
    const std::size_t nb = base.vertex_count();

    // Pass 1: solve the exact affine system on every open cell.
    std::vector<CellSolution> solutions;
    for (int p = 0; p <= refined.dim(); ++p) {
        for (const auto& cell : refined.simplices(p)) {
            const std::size_t k = cell.size();
            // Rows: one per base vertex (point minus image), plus the
            // normalization row sum t = 1.
            Matrix a(nb + 1, k);
            Vector b(nb + 1);
            for (std::size_t j = 0; j < k; ++j) {
                for (const auto& [bv, coord] : g.subdivision.vertex_coords(cell[j]))
                    a.at(static_cast<std::size_t>(bv), j) += coord;
                a.at(static_cast<std::size_t>(g.to_base.image(cell[j])), j) -= 1;
                a.at(nb, j) = 1;
            }
            b[nb] = 1;
            auto particular = solve(a, b);
            if (!particular) continue;
            const auto kernel = rref_decompose(a).kernel_basis;
            if (kernel.empty()) {
                bool interior = true;
                for (const auto& t : *particular)
                    if (t <= 0) {
                        interior = false;
                        break;
                    }
                if (interior) solutions.push_back({cell, *particular});
                continue;
            }
            // Positive-dimensional solution set: non-isolated exactly when it
            // meets the open cell.
            std::vector<Vector> constraints;
            for (std::size_t i = 0; i < k; ++i) {
                Vector c(kernel.size() + 1);
                for (std::size_t j = 0; j < kernel.size(); ++j) c[j] = kernel[j][i];
                c[kernel.size()] = (*particular)[i];
                constraints.push_back(std::move(c));
            }
            if (strictly_feasible(std::move(constraints), kernel.size()))
                throw hypothesis_violation("non-isolated fixed points in cell " +
                                           cell_name(refined, cell));
        }
    }

    // Pass 2: carrier, admissibility, derivative.
    std::vector<FixedPoint> points;
    for (const auto& sol : solutions) {
        std::map<int, Rational> point;
        for (std::size_t j = 0; j < sol.cell.size(); ++j)
            for (const auto& [bv, coord] : g.subdivision.vertex_coords(sol.cell[j])) {
                Rational add = sol.weights[j] * coord;
                if (add != 0) point[bv] += add;
            }
        Simplex sigma;
        for (const auto& [bv, coord] : point)
            if (coord != 0) sigma.push_back(bv);

        // sigma must be a maximal simplex of the base.
        bool maximal = true;
        for (const auto& bigger : base.simplices(static_cast<int>(sigma.size()))) {
            if (std::includes(bigger.begin(), bigger.end(), sigma.begin(), sigma.end())) {
                maximal = false;
                break;
            }
        }
        if (!base.contains(sigma) || !maximal)
            throw hypothesis_violation(
                "general-position violation: fixed point lies in the non-maximal simplex " +
                cell_name(base, sigma));

        FixedPoint fp;
        fp.cell = sol.cell;
        fp.carrier = sigma;
        for (int v : sigma) fp.carrier_coords.push_back(point[v]);
        fp.derivative = germ_derivative(g, sol.cell, sigma);
        points.push_back(std::move(fp));
    }
    return points;
}

int local_index(const FixedPoint& p) {
    const Matrix identity = Matrix::identity(p.derivative.rows());
    const Rational d = det(identity - p.derivative);
    if (d == 0) throw hypothesis_violation("degenerate fixed point: det(I - D) = 0");
    return d > 0 ? 1 : -1;
}

IndexReport total_index(const GeoSelfMap& g) {
    IndexReport rep;
    rep.points = enumerate_fixed_points(g);
    for (const auto& p : rep.points) {
        rep.indices.push_back(local_index(p));
        rep.total += rep.indices.back();
    }
    rep.lefschetz_crosscheck = lefschetz_number(g).value;
    return rep;
}

AxiomReport verify_normalization(const GeoSelfMap& g) {
    AxiomReport rep;
    rep.kind = "normalization";
    try {
        const IndexReport index = total_index(g);
        rep.lhs = index.total;
        rep.rhs = index.lefschetz_crosscheck;
        rep.holds = (rep.lhs == rep.rhs);
        std::ostringstream detail;
        detail << "fixed points: " << index.points.size() << ", total index "
               << index.total << ", L = " << rational_to_string(rep.rhs);
        rep.detail = detail.str();
    } catch (const hypothesis_violation& e) {
        rep.skipped = true;
        rep.holds = false;
        rep.detail = e.what();
    }
    return rep;
}

}  // namespace lefhopf
