#include "lefhopf/lefschetz.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lefhopf {

const Complex& selfmap_space(const AnySelfmap& f) {
    if (const auto* plain = std::get_if<SimplicialMap>(&f)) {
        if (!plain->is_selfmap()) throw std::invalid_argument("selfmap required");
        return plain->source();
    }
    return std::get<GeoSelfMap>(f).base();
}

ChainMap chain_selfmap(const AnySelfmap& f) {
    if (const auto* plain = std::get_if<SimplicialMap>(&f)) {
        if (!plain->is_selfmap()) throw std::invalid_argument("selfmap required");
        return chain_map(*plain);
    }
    return selfmap_chain(std::get<GeoSelfMap>(f));
}

namespace {

Rational integral_or_die(const Rational& r, const char* what) {
    if (!is_integer(r))
        throw std::logic_error(std::string(what) + " is not an integer: " + rational_to_string(r));
    return r;
}

LefschetzReport report_from_chain_selfmap(const ChainMap& cm) {
    const HomologyBasis h = homology(cm.source, /*reduced=*/false);
    const InducedMap induced = induced_on_homology(cm, h, h);
    LefschetzReport rep;
    Rational total = 0;
    for (int n = 0; n <= induced.top_degree(); ++n) {
        const Rational t = integral_or_die(induced.at(n).trace(), "a homology trace");
        rep.traces.push_back(t);
        total += (n % 2 == 0 ? t : -t);
    }
    rep.value = integral_or_die(total, "the Lefschetz number");
    rep.reduced = rep.value - 1;
    return rep;
}

}  // namespace

LefschetzReport lefschetz_number(const AnySelfmap& f) {
    return report_from_chain_selfmap(chain_selfmap(f));
}

LefschetzReport lefschetz_number(const SimplicialMap& f) {
    return lefschetz_number(AnySelfmap(f));
}

LefschetzReport lefschetz_number(const GeoSelfMap& g) {
    return lefschetz_number(AnySelfmap(g));
}

Rational relative_lefschetz(const SimplicialMap& f, const Pair& pair) {
    const ChainMap cm = chain_map(f, pair);
    const HomologyBasis h = homology(cm.source);
    const InducedMap induced = induced_on_homology(cm, h, h);
    Rational total = 0;
    for (int n = 0; n <= induced.top_degree(); ++n) {
        const Rational t = integral_or_die(induced.at(n).trace(), "a relative homology trace");
        total += (n % 2 == 0 ? t : -t);
    }
    return integral_or_die(total, "the relative Lefschetz number");
}

EulerReport euler(const Complex& x) {
    EulerReport rep;
    const HomologyBasis h = homology(boundary_matrices(x));
    rep.betti = h.betti;
    long chi = 0;
    for (int n = 0; n <= h.top_degree(); ++n)
        chi += (n % 2 == 0 ? 1 : -1) * static_cast<long>(h.betti_at(n));
    rep.chi = chi;
    rep.chi_reduced = chi - 1;
    long comb = 0;
    for (int p = 0; p <= x.dim(); ++p)
        comb += (p % 2 == 0 ? 1 : -1) * static_cast<long>(x.count(p));
    rep.combinatorial_chi = comb;
    if (rep.chi != rep.combinatorial_chi)
        throw std::logic_error("homological and combinatorial Euler characteristics disagree");
    return rep;
}

namespace {

// Reduced Betti numbers must be rank one in exactly one degree.
int sphere_like_degree(const HomologyBasis& reduced) {
    int found = -1;
    for (int n = 0; n <= reduced.top_degree(); ++n) {
        if (reduced.betti_at(n) == 0) continue;
        if (reduced.betti_at(n) != 1 || found != -1) return -1;
        found = n;
    }
    return found;
}

long integral_entry(const Matrix& m, const char* what) {
    if (m.rows() != 1 || m.cols() != 1) throw std::logic_error("expected a 1x1 induced matrix");
    const Rational r = integral_or_die(m.at(0, 0), what);
    return static_cast<long>(numer(r));
}

}  // namespace

DegreeReport degree_of(const AnySelfmap& f) {
    const ChainMap cm = chain_selfmap(f);
    const HomologyBasis h = homology(cm.source, /*reduced=*/true);
    const int n = sphere_like_degree(h);
    if (n < 0)
        throw std::invalid_argument(
            "degree needs reduced homology of rank one concentrated in a single degree");
    const InducedMap induced = induced_on_homology(cm, h, h);
    DegreeReport rep;
    rep.sphere_dim = n;
    rep.value = integral_entry(induced.at(n), "a mapping degree");
    return rep;
}

std::vector<long> wedge_degrees(const AnySelfmap& f, const WedgeStructure& w) {
    if (!(selfmap_space(f) == w.wedge))
        throw std::invalid_argument("the map is not a selfmap of the wedge");
    if (w.summands.empty()) throw std::invalid_argument("wedge without summands");

    // All summands must be spheres of one dimension.
    int n = -1;
    std::vector<HomologyBasis> summand_homology;
    for (const auto& summand : w.summands) {
        HomologyBasis h = homology(boundary_matrices(summand.space), /*reduced=*/true);
        const int d = sphere_like_degree(h);
        if (d < 0) throw std::invalid_argument("wedge summand is not sphere-like");
        if (n == -1) n = d;
        if (d != n) throw std::invalid_argument("wedge summands have mismatched dimensions");
        summand_homology.push_back(std::move(h));
    }

    const ChainMap psi = chain_selfmap(f);
    std::vector<long> degrees;
    for (std::size_t j = 0; j < w.summands.size(); ++j) {
        const auto& summand = w.summands[j];
        const ChainMap composite =
            compose(compose(chain_map(summand.include), psi), chain_map(summand.project));
        const InducedMap induced =
            induced_on_homology(composite, summand_homology[j], summand_homology[j]);
        degrees.push_back(integral_entry(induced.at(n), "a component degree"));
    }
    return degrees;
}

namespace {

AxiomReport make_report(std::string kind, Rational lhs, Rational rhs, std::string detail) {
    AxiomReport rep;
    rep.kind = std::move(kind);
    rep.lhs = std::move(lhs);
    rep.rhs = std::move(rhs);
    rep.holds = (rep.lhs == rep.rhs);
    rep.detail = std::move(detail);
    return rep;
}

}  // namespace

AxiomReport verify_cofibration(const SimplicialMap& f, const Pair& pair) {
    if (!f.preserves(pair)) throw std::invalid_argument("the map does not preserve the pair");
    const Rational l_total = lefschetz_number(f).value;
    const Rational l_sub = lefschetz_number(restrict_map(f, pair.sub)).value;
    const Rational l_quotient = 1 + relative_lefschetz(f, pair);
    std::ostringstream detail;
    detail << "L(f)=" << rational_to_string(l_total) << " L(f')=" << rational_to_string(l_sub)
           << " L(fbar)=" << rational_to_string(l_quotient);
    return make_report("cofibration", l_total, l_sub + l_quotient - 1, detail.str());
}

AxiomReport verify_les_additivity(const SimplicialMap& f, const Pair& pair) {
    if (!f.preserves(pair)) throw std::invalid_argument("the map does not preserve the pair");
    const Rational l_total = lefschetz_number(f).value;
    const Rational l_sub = lefschetz_number(restrict_map(f, pair.sub)).value;
    const Rational l_rel = relative_lefschetz(f, pair);
    std::ostringstream detail;
    detail << "L(f_X)=" << rational_to_string(l_total) << " L(f_A)=" << rational_to_string(l_sub)
           << " L(f;X,A)=" << rational_to_string(l_rel);
    return make_report("les_additivity", l_total, l_sub + l_rel, detail.str());
}

AxiomReport verify_commutativity(const SimplicialMap& f, const SimplicialMap& g) {
    if (!(f.target() == g.source()) || !(g.target() == f.source()))
        throw std::invalid_argument("commutativity needs f : X -> Y and g : Y -> X");
    const Rational l_gf = lefschetz_number(f.then(g)).value;
    const Rational l_fg = lefschetz_number(g.then(f)).value;
    std::ostringstream detail;
    detail << "L(gf)=" << rational_to_string(l_gf) << " L(fg)=" << rational_to_string(l_fg);
    return make_report("commutativity", l_gf, l_fg, detail.str());
}

AxiomReport verify_triad(const SimplicialMap& f, const Complex& part_p, const Complex& part_q) {
    if (!f.is_selfmap()) throw std::invalid_argument("triad needs a selfmap");
    const Complex& x = f.source();
    if (!x.has_subcomplex(part_p) || !x.has_subcomplex(part_q))
        throw std::invalid_argument("triad parts must be subcomplexes");
    // P u Q must be all of X.
    for (int p = 0; p <= x.dim(); ++p)
        for (const auto& s : x.simplices(p)) {
            const auto labels = x.labels_of(s);
            auto in = [&](const Complex& c) {
                for (const auto& l : labels)
                    if (!c.id_of(l)) return false;
                return c.contains(c.simplex_of_labels(labels));
            };
            if (!in(part_p) && !in(part_q))
                throw std::invalid_argument("triad parts do not cover the complex");
        }

    const Rational l_total = lefschetz_number(f).value;
    const Rational l_p = lefschetz_number(restrict_map(f, part_p)).value;
    const Rational l_q = lefschetz_number(restrict_map(f, part_q)).value;
    Rational l_cap = 0;
    if (auto cap = intersect_complexes(part_p, part_q))
        l_cap = lefschetz_number(restrict_map(f, *cap)).value;
    std::ostringstream detail;
    detail << "L(f)=" << rational_to_string(l_total) << " L(f_P)=" << rational_to_string(l_p)
           << " L(f_Q)=" << rational_to_string(l_q) << " L(f_PQ)=" << rational_to_string(l_cap);
    return make_report("triad", l_total, l_p + l_q - l_cap, detail.str());
}

AxiomReport verify_suspension(const SimplicialMap& f) {
    if (!f.is_selfmap()) throw std::invalid_argument("suspension needs a selfmap");
    // Fresh pole labels.
    std::string north = "N", south = "S";
    for (int i = 0; f.source().id_of(north) || f.source().id_of(south); ++i) {
        north = "N" + std::to_string(i);
        south = "S" + std::to_string(i);
    }
    const Rational reduced = lefschetz_number(f).reduced;
    const Rational suspended = lefschetz_number(suspend_map(f, north, south)).reduced;
    std::ostringstream detail;
    detail << "Lred(f)=" << rational_to_string(reduced)
           << " Lred(Sf)=" << rational_to_string(suspended);
    return make_report("suspension", suspended, -reduced, detail.str());
}

AxiomReport verify_wedge_spheres(const AnySelfmap& f, const WedgeStructure& w) {
    const std::vector<long> degrees = wedge_degrees(f, w);
    HomologyBasis h = homology(boundary_matrices(w.summands.front().space), /*reduced=*/true);
    const int n = sphere_like_degree(h);
    long sum = 0;
    for (long d : degrees) sum += d;
    const Rational rhs = (n % 2 == 0 ? sum : -sum);
    const Rational lhs = lefschetz_number(f).reduced;
    std::ostringstream detail;
    detail << "n=" << n << " degrees=[";
    for (std::size_t j = 0; j < degrees.size(); ++j) detail << (j ? "," : "") << degrees[j];
    detail << "]";
    return make_report("wedge_n_spheres", lhs, rhs, detail.str());
}

AxiomReport verify_homotopy_instance(const AnySelfmap& a, const AnySelfmap& b) {
    if (!(selfmap_space(a) == selfmap_space(b)))
        throw std::invalid_argument("homotopic representatives must share a space");
    const Rational la = lefschetz_number(a).value;
    const Rational lb = lefschetz_number(b).value;
    std::ostringstream detail;
    detail << "L(a)=" << rational_to_string(la) << " L(b)=" << rational_to_string(lb);
    return make_report("homotopy_instance", la, lb, detail.str());
}

SimplicialMap restrict_map(const SimplicialMap& f, const Complex& sub) {
    if (!f.is_selfmap()) throw std::invalid_argument("restriction needs a selfmap");
    if (!f.source().has_subcomplex(sub))
        throw std::invalid_argument("restriction target is not a subcomplex");
    std::map<std::string, std::string> vm;
    for (std::size_t v = 0; v < sub.vertex_count(); ++v) {
        const std::string& l = sub.label(static_cast<int>(v));
        const std::string image = f.target().label(f.image(*f.source().id_of(l)));
        if (!sub.id_of(image))
            throw std::invalid_argument("the map does not preserve the subcomplex (vertex '" + l +
                                        "' leaves it)");
        vm[l] = image;
    }
    return SimplicialMap::make(sub, sub, vm);
}

std::optional<Complex> intersect_complexes(const Complex& a, const Complex& b) {
    std::vector<std::vector<std::string>> common;
    for (int p = 0; p <= a.dim(); ++p)
        for (const auto& s : a.simplices(p)) {
            const auto labels = a.labels_of(s);
            bool in_b = true;
            for (const auto& l : labels)
                if (!b.id_of(l)) {
                    in_b = false;
                    break;
                }
            if (in_b && b.contains(b.simplex_of_labels(labels))) common.push_back(labels);
        }
    if (common.empty()) return std::nullopt;
    return Complex::from_maximal(common);
}

}  // namespace lefhopf
