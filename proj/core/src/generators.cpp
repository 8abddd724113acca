#include "lefhopf/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace lefhopf {

std::string label_indexed(const std::string& prefix, int index, int max_index) {
    std::string digits = std::to_string(index);
    std::size_t width = std::to_string(max_index).size();
    while (digits.size() < width) digits.insert(digits.begin(), '0');
    return prefix + digits;
}

Complex make_simplex(int n) {
    if (n < 0) throw std::invalid_argument("simplex dimension must be >= 0");
    std::vector<std::string> tuple;
    for (int i = 0; i <= n; ++i) tuple.push_back(label_indexed("v", i, n));
    return Complex::from_maximal({tuple});
}

Complex make_sphere(int n) {
    if (n < 0) throw std::invalid_argument("sphere dimension must be >= 0");
    // Facets of the (n+1)-simplex: drop one vertex at a time.
    std::vector<std::string> all;
    for (int i = 0; i <= n + 1; ++i) all.push_back(label_indexed("v", i, n + 1));
    std::vector<std::vector<std::string>> maximal;
    for (int skip = 0; skip <= n + 1; ++skip) {
        std::vector<std::string> facet;
        for (int i = 0; i <= n + 1; ++i)
            if (i != skip) facet.push_back(all[static_cast<std::size_t>(i)]);
        maximal.push_back(facet);
    }
    return Complex::from_maximal(maximal);
}

Complex make_cycle(int m) {
    if (m < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::vector<std::string>> edges;
    for (int i = 0; i < m; ++i)
        edges.push_back({label_indexed("c", i, m - 1), label_indexed("c", (i + 1) % m, m - 1)});
    return Complex::from_maximal(edges);
}

Complex make_torus7() {
    // Two face orbits {i, i+1, i+3} and {i, i+2, i+3} mod 7; the 1-skeleton
    // is the complete graph K7.
    std::vector<std::vector<std::string>> faces;
    auto t = [](int i) { return label_indexed("t", ((i % 7) + 7) % 7, 6); };
    for (int i = 0; i < 7; ++i) {
        faces.push_back({t(i), t(i + 1), t(i + 3)});
        faces.push_back({t(i), t(i + 2), t(i + 3)});
    }
    return Complex::from_maximal(faces);
}

Complex make_rp2_6() {
    // Antipodal quotient of the icosahedron: every pair of the 6 vertices is
    // an edge, 10 triangles, every edge on exactly two of them.
    const int faces[10][3] = {{1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 6}, {1, 4, 5},
                              {2, 3, 4}, {2, 3, 5}, {2, 4, 6}, {3, 5, 6}, {4, 5, 6}};
    std::vector<std::vector<std::string>> maximal;
    for (const auto& f : faces)
        maximal.push_back({label_indexed("p", f[0] - 1, 5), label_indexed("p", f[1] - 1, 5),
                           label_indexed("p", f[2] - 1, 5)});
    return Complex::from_maximal(maximal);
}

Complex make_octahedron() {
    return suspend(suspend(make_sphere(0), "x0", "x1"), "y0", "y1");
}

Complex suspend(const Complex& x, const std::string& north, const std::string& south) {
    if (north == south) throw std::invalid_argument("suspension poles must be distinct");
    if (x.id_of(north) || x.id_of(south))
        throw std::invalid_argument("suspension pole label collides with an existing vertex");
    std::vector<std::vector<std::string>> maximal;
    for (const auto& tuple : x.maximal_simplices()) {
        auto with_pole = [&](const std::string& pole) {
            std::vector<std::string> t = tuple;
            t.push_back(pole);
            return t;
        };
        maximal.push_back(with_pole(north));
        maximal.push_back(with_pole(south));
    }
    return Complex::from_maximal(maximal);
}

SimplicialMap suspend_map(const SimplicialMap& f, const std::string& north,
                          const std::string& south) {
    if (!f.is_selfmap()) throw std::invalid_argument("suspend_map needs a selfmap");
    Complex sx = suspend(f.source(), north, south);
    std::map<std::string, std::string> vm = f.vertex_map_by_label();
    vm[north] = north;
    vm[south] = south;
    return SimplicialMap::make(sx, sx, vm);
}

namespace {

std::string barycenter_label(const std::vector<std::string>& labels) {
    std::string out = labels.front();
    for (std::size_t i = 1; i < labels.size(); ++i) out += "|" + labels[i];
    return out;
}

}  // namespace

SimplicialMap subdivide_map(const SimplicialMap& f) {
    if (!f.is_selfmap()) throw std::invalid_argument("subdivide_map needs a selfmap");
    const Complex& x = f.source();

    // Rebuild Sd(X) by flags; vertex labels match barycentric_subdivide.
    std::vector<std::vector<std::string>> maximal;
    // Maximal flags end at maximal simplices; emitting all flags and letting
    // face closure prune is simpler and equivalent.
    std::vector<std::vector<Simplex>> flags;
    for (int p = 0; p <= x.dim(); ++p)
        for (const auto& s : x.simplices(p)) flags.push_back({s});
    std::size_t head = 0;
    std::vector<std::vector<Simplex>> all_flags;
    while (head < flags.size()) {
        auto flag = flags[head++];
        all_flags.push_back(flag);
        const Simplex& top = flag.back();
        for (int p = static_cast<int>(top.size()); p <= x.dim(); ++p)
            for (const auto& s : x.simplices(p))
                if (std::includes(s.begin(), s.end(), top.begin(), top.end()) && s != top) {
                    auto longer = flag;
                    longer.push_back(s);
                    flags.push_back(std::move(longer));
                }
    }
    for (const auto& flag : all_flags) {
        std::vector<std::string> tuple;
        for (const auto& s : flag) tuple.push_back(barycenter_label(x.labels_of(s)));
        maximal.push_back(tuple);
    }
    Complex sd = Complex::from_maximal(maximal);

    std::map<std::string, std::string> vm;
    for (int p = 0; p <= x.dim(); ++p)
        for (const auto& s : x.simplices(p))
            vm[barycenter_label(x.labels_of(s))] =
                barycenter_label(x.labels_of(f.image_simplex(s)));
    return SimplicialMap::make(sd, sd, vm);
}

WedgeStructure wedge_sum(const std::vector<std::pair<Complex, std::string>>& based) {
    if (based.empty()) throw std::invalid_argument("wedge of nothing");
    for (const auto& [space, basepoint] : based)
        if (!space.id_of(basepoint))
            throw std::invalid_argument("missing basepoint '" + basepoint + "'");

    const std::string bp = "bp";
    auto wedge_label = [&](std::size_t j, const Complex& space, const std::string& l) {
        if (l == based[j].second) return bp;
        (void)space;
        return "s" + std::to_string(j + 1) + "." + l;
    };

    std::vector<std::vector<std::string>> maximal;
    for (std::size_t j = 0; j < based.size(); ++j) {
        const Complex& space = based[j].first;
        for (const auto& tuple : space.maximal_simplices()) {
            std::vector<std::string> renamed;
            for (const auto& l : tuple) renamed.push_back(wedge_label(j, space, l));
            maximal.push_back(std::move(renamed));
        }
    }
    WedgeStructure w;
    w.wedge = Complex::from_maximal(maximal);
    w.basepoint = bp;
    std::size_t expected_vertices = 1;
    for (const auto& [space, basepoint] : based) {
        (void)basepoint;
        expected_vertices += space.vertex_count() - 1;
    }
    if (w.wedge.vertex_count() != expected_vertices)
        throw std::invalid_argument("wedge summand labels collide");
    for (std::size_t j = 0; j < based.size(); ++j) {
        const Complex& space = based[j].first;
        std::map<std::string, std::string> inc, proj;
        for (std::size_t v = 0; v < space.vertex_count(); ++v) {
            const std::string& l = space.label(static_cast<int>(v));
            inc[l] = wedge_label(j, space, l);
        }
        for (std::size_t v = 0; v < w.wedge.vertex_count(); ++v) {
            const std::string& l = w.wedge.label(static_cast<int>(v));
            const std::string prefix = "s" + std::to_string(j + 1) + ".";
            if (l == bp)
                proj[l] = based[j].second;
            else if (l.rfind(prefix, 0) == 0)
                proj[l] = l.substr(prefix.size());
            else
                proj[l] = based[j].second;
        }
        WedgeSummand summand{space, based[j].second,
                             SimplicialMap::make(space, w.wedge, inc),
                             SimplicialMap::make(w.wedge, space, proj)};
        w.summands.push_back(std::move(summand));
    }
    return w;
}

WedgeStructure make_wedge_spheres(int n, int k) {
    if (n < 0 || k < 1) throw std::invalid_argument("wedge_spheres needs n >= 0, k >= 1");
    std::vector<std::pair<Complex, std::string>> based;
    for (int j = 0; j < k; ++j) based.emplace_back(make_sphere(n), "v0");
    return wedge_sum(based);
}

}  // namespace lefhopf
