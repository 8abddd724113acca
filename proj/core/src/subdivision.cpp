#include "lefhopf/subdivision.hpp"

#include <algorithm>
#include <stdexcept>

namespace lefhopf {

namespace {

long combinatorial_chi(const Complex& x) {
    long chi = 0;
    for (int p = 0; p <= x.dim(); ++p)
        chi += (p % 2 == 0 ? 1 : -1) * static_cast<long>(x.count(p));
    return chi;
}

}  // namespace

CarrierComplex::CarrierComplex(Complex refined, Complex base, std::vector<BaryPoint> coords)
    : refined_(std::move(refined)), base_(std::move(base)), coords_(std::move(coords)) {
    if (coords_.size() != refined_.vertex_count())
        throw std::invalid_argument("one coordinate record per refined vertex required");

    for (std::size_t v = 0; v < coords_.size(); ++v) {
        const BaryPoint& pt = coords_[v];
        if (pt.empty())
            throw std::invalid_argument("refined vertex '" + refined_.label(static_cast<int>(v)) +
                                        "' has no coordinates");
        Rational sum = 0;
        Simplex support;
        for (const auto& [base_vertex, coord] : pt) {
            if (base_vertex < 0 || base_vertex >= static_cast<int>(base_.vertex_count()))
                throw std::invalid_argument("coordinate names an unknown base vertex");
            if (coord <= 0)
                throw std::invalid_argument("coordinates must be positive on their support");
            sum += coord;
            support.push_back(base_vertex);
        }
        if (sum != 1) throw std::invalid_argument("coordinates must sum to 1");
        if (!base_.contains(support))
            throw std::invalid_argument("coordinate support of '" +
                                        refined_.label(static_cast<int>(v)) +
                                        "' is not a simplex of the base");
    }

    at_base_vertex_.assign(base_.vertex_count(), -1);
    for (std::size_t v = 0; v < coords_.size(); ++v) {
        if (coords_[v].size() == 1 && coords_[v].begin()->second == 1) {
            int bv = coords_[v].begin()->first;
            if (at_base_vertex_[static_cast<std::size_t>(bv)] != -1)
                throw std::invalid_argument("two refined vertices at base vertex '" +
                                            base_.label(bv) + "'");
            at_base_vertex_[static_cast<std::size_t>(bv)] = static_cast<int>(v);
        }
    }
    for (std::size_t bv = 0; bv < at_base_vertex_.size(); ++bv)
        if (at_base_vertex_[bv] == -1)
            throw std::invalid_argument("base vertex '" + base_.label(static_cast<int>(bv)) +
                                        "' has no refined vertex with unit coordinate");

    // Well-defined carriers for all refined simplices.
    for (int p = 1; p <= refined_.dim(); ++p)
        for (const auto& s : refined_.simplices(p)) (void)carrier_of(s);

    if (combinatorial_chi(refined_) != combinatorial_chi(base_))
        throw std::invalid_argument("subdivision changes the Euler characteristic");
}

CarrierComplex CarrierComplex::trivial(const Complex& base) {
    std::vector<BaryPoint> coords(base.vertex_count());
    for (std::size_t v = 0; v < base.vertex_count(); ++v)
        coords[v][static_cast<int>(v)] = 1;
    return CarrierComplex(base, base, std::move(coords));
}

Simplex CarrierComplex::carrier_of(const Simplex& refined_simplex) const {
    Simplex carrier;
    for (int v : refined_simplex)
        for (const auto& [base_vertex, coord] : coords_[static_cast<std::size_t>(v)]) {
            (void)coord;
            carrier.push_back(base_vertex);
        }
    std::sort(carrier.begin(), carrier.end());
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
    if (!base_.contains(carrier))
        throw std::invalid_argument("refined simplex spans coordinates outside a base simplex");
    return carrier;
}

CarrierComplex barycentric_subdivide(const Complex& x) {
    auto barycenter_label = [&](const Simplex& s) {
        auto labels = x.labels_of(s);
        std::string out = labels.front();
        for (std::size_t i = 1; i < labels.size(); ++i) out += "|" + labels[i];
        return out;
    };

    // Flags sigma_0 < sigma_1 < ... (proper inclusions); the maximal tuples
    // are enough, face closure supplies the rest.
    std::vector<std::vector<std::string>> maximal;
    std::vector<std::vector<Simplex>> queue;
    for (int p = 0; p <= x.dim(); ++p)
        for (const auto& s : x.simplices(p)) queue.push_back({s});
    std::size_t head = 0;
    while (head < queue.size()) {
        auto flag = queue[head++];
        bool extended = false;
        const Simplex& top = flag.back();
        for (int p = static_cast<int>(top.size()); p <= x.dim(); ++p)
            for (const auto& s : x.simplices(p))
                if (s != top && std::includes(s.begin(), s.end(), top.begin(), top.end())) {
                    auto longer = flag;
                    longer.push_back(s);
                    queue.push_back(std::move(longer));
                    extended = true;
                }
        if (!extended) {
            std::vector<std::string> tuple;
            for (const auto& s : flag) tuple.push_back(barycenter_label(s));
            maximal.push_back(std::move(tuple));
        }
    }
    Complex refined = Complex::from_maximal(maximal);

    std::vector<BaryPoint> coords(refined.vertex_count());
    for (int p = 0; p <= x.dim(); ++p)
        for (const auto& s : x.simplices(p)) {
            auto id = refined.id_of(barycenter_label(s));
            BaryPoint pt;
            const Rational w(1, static_cast<int>(s.size()));
            for (int v : s) pt[v] = w;
            coords[static_cast<std::size_t>(*id)] = std::move(pt);
        }
    return CarrierComplex(std::move(refined), x, std::move(coords));
}

GeoSelfMap::GeoSelfMap(CarrierComplex subdivision_, SimplicialMap to_base_)
    : subdivision(std::move(subdivision_)), to_base(std::move(to_base_)) {
    if (!(to_base.source() == subdivision.refined()) ||
        !(to_base.target() == subdivision.base()))
        throw std::invalid_argument(
            "a piecewise-affine selfmap needs a vertex map from the refined complex to the base");
}

GeoSelfMap GeoSelfMap::from_simplicial(const SimplicialMap& f) {
    if (!f.is_selfmap()) throw std::invalid_argument("selfmap required");
    return GeoSelfMap(CarrierComplex::trivial(f.source()), f);
}

}  // namespace lefhopf
