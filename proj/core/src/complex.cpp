#include "lefhopf/complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lefhopf {

namespace {

std::string join_labels(const std::vector<std::string>& labels) {
    std::string out = "{";
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ",";
        out += labels[i];
    }
    return out + "}";
}

}  // namespace

Complex Complex::from_maximal(const std::vector<std::vector<std::string>>& maximal_simplices) {
    if (maximal_simplices.empty())
        throw std::invalid_argument("a complex needs at least one simplex");

    std::set<std::string> label_set;
    for (const auto& tuple : maximal_simplices) {
        if (tuple.empty()) throw std::invalid_argument("empty simplex tuple");
        std::set<std::string> seen;
        for (const auto& v : tuple) {
            if (!seen.insert(v).second)
                throw std::invalid_argument("repeated vertex '" + v + "' in simplex " +
                                            join_labels(tuple));
            label_set.insert(v);
        }
    }

    Complex c;
    c.labels_.assign(label_set.begin(), label_set.end());
    std::map<std::string, int> id;
    for (std::size_t i = 0; i < c.labels_.size(); ++i)
        id[c.labels_[i]] = static_cast<int>(i);

    // Face closure: every subset of every input simplex.
    std::set<Simplex> faces;
    for (const auto& tuple : maximal_simplices) {
        Simplex s;
        for (const auto& v : tuple) s.push_back(id[v]);
        std::sort(s.begin(), s.end());
        const std::size_t n = s.size();
        for (std::size_t mask = 1; mask < (1u << n); ++mask) {
            Simplex f;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) f.push_back(s[i]);
            faces.insert(f);
        }
    }
    // Every vertex as a 0-simplex is implied by closure.
    int dim = 0;
    for (const auto& f : faces) dim = std::max(dim, static_cast<int>(f.size()) - 1);
    c.grades_.resize(static_cast<std::size_t>(dim) + 1);
    for (const auto& f : faces)
        c.grades_[f.size() - 1].push_back(f);
    for (auto& grade : c.grades_) std::sort(grade.begin(), grade.end());
    c.rebuild_index();
    return c;
}

void Complex::rebuild_index() {
    index_.clear();
    index_.resize(grades_.size());
    for (std::size_t p = 0; p < grades_.size(); ++p)
        for (std::size_t i = 0; i < grades_[p].size(); ++i)
            index_[p][grades_[p][i]] = i;
}

std::optional<int> Complex::id_of(const std::string& label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<int>(it - labels_.begin());
}

const std::vector<Simplex>& Complex::simplices(int p) const {
    static const std::vector<Simplex> empty;
    if (p < 0 || p >= static_cast<int>(grades_.size())) return empty;
    return grades_[static_cast<std::size_t>(p)];
}

std::size_t Complex::total_simplices() const {
    std::size_t n = 0;
    for (const auto& g : grades_) n += g.size();
    return n;
}

bool Complex::contains(const Simplex& s) const { return index_of(s).has_value(); }

std::optional<std::size_t> Complex::index_of(const Simplex& s) const {
    const int p = static_cast<int>(s.size()) - 1;
    if (p < 0 || p >= static_cast<int>(index_.size())) return std::nullopt;
    auto it = index_[static_cast<std::size_t>(p)].find(s);
    if (it == index_[static_cast<std::size_t>(p)].end()) return std::nullopt;
    return it->second;
}

std::vector<std::vector<std::string>> Complex::maximal_simplices() const {
    std::vector<std::vector<std::string>> out;
    for (int p = 0; p <= dim(); ++p) {
        for (const auto& s : simplices(p)) {
            bool is_face = false;
            // s is maximal unless some (p+1)-simplex contains it.
            for (const auto& t : simplices(p + 1)) {
                if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                    is_face = true;
                    break;
                }
            }
            if (!is_face) out.push_back(labels_of(s));
        }
    }
    return out;
}

std::vector<std::string> Complex::labels_of(const Simplex& s) const {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (int v : s) out.push_back(label(v));
    return out;
}

Simplex Complex::simplex_of_labels(const std::vector<std::string>& labels) const {
    Simplex s;
    for (const auto& l : labels) {
        auto id = id_of(l);
        if (!id) throw std::invalid_argument("unknown vertex '" + l + "'");
        s.push_back(*id);
    }
    std::sort(s.begin(), s.end());
    return s;
}

bool Complex::has_subcomplex(const Complex& sub) const {
    for (int p = 0; p <= sub.dim(); ++p)
        for (const auto& s : sub.simplices(p)) {
            Simplex translated;
            for (int v : s) {
                auto id = id_of(sub.label(v));
                if (!id) return false;
                translated.push_back(*id);
            }
            std::sort(translated.begin(), translated.end());
            if (!contains(translated)) return false;
        }
    return true;
}

Pair::Pair(Complex total_, Complex sub_) : total(std::move(total_)), sub(std::move(sub_)) {
    if (!total.has_subcomplex(sub))
        throw std::invalid_argument("sub is not a subcomplex of total");
}

SimplicialMap SimplicialMap::make(const Complex& source, const Complex& target,
                                  const std::map<std::string, std::string>& vertex_map) {
    std::vector<int> image(source.vertex_count(), -1);
    for (std::size_t v = 0; v < source.vertex_count(); ++v) {
        auto it = vertex_map.find(source.label(static_cast<int>(v)));
        if (it == vertex_map.end())
            throw std::invalid_argument("vertex map missing source vertex '" +
                                        source.label(static_cast<int>(v)) + "'");
        auto id = target.id_of(it->second);
        if (!id)
            throw std::invalid_argument("image vertex '" + it->second +
                                        "' is not a vertex of the target");
        image[v] = *id;
    }
    SimplicialMap f(source, target, std::move(image));
    for (int p = 1; p <= source.dim(); ++p)
        for (const auto& s : source.simplices(p)) {
            Simplex img = f.image_simplex(s);
            if (!target.contains(img))
                throw std::invalid_argument("image of simplex " +
                                            join_labels(source.labels_of(s)) +
                                            " is not a simplex of the target");
        }
    return f;
}

SimplicialMap SimplicialMap::identity(const Complex& space) {
    std::vector<int> image(space.vertex_count());
    for (std::size_t v = 0; v < space.vertex_count(); ++v) image[v] = static_cast<int>(v);
    return SimplicialMap(space, space, std::move(image));
}

SimplicialMap SimplicialMap::constant(const Complex& source, const Complex& target,
                                      const std::string& target_vertex) {
    auto id = target.id_of(target_vertex);
    if (!id) throw std::invalid_argument("unknown target vertex '" + target_vertex + "'");
    std::vector<int> image(source.vertex_count(), *id);
    return SimplicialMap(source, target, std::move(image));
}

Simplex SimplicialMap::image_simplex(const Simplex& s) const {
    Simplex img;
    img.reserve(s.size());
    for (int v : s) img.push_back(image(v));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
}

SimplicialMap SimplicialMap::then(const SimplicialMap& other) const {
    if (!(target_ == other.source_))
        throw std::invalid_argument("maps are not composable");
    std::vector<int> image(source_.vertex_count());
    for (std::size_t v = 0; v < source_.vertex_count(); ++v)
        image[v] = other.image(image_[v]);
    return SimplicialMap(source_, other.target_, std::move(image));
}

bool SimplicialMap::preserves(const Pair& pair) const {
    if (!(source_ == pair.total) || !(target_ == pair.total)) return false;
    for (std::size_t v = 0; v < pair.sub.vertex_count(); ++v) {
        auto in_total = pair.total.id_of(pair.sub.label(static_cast<int>(v)));
        if (!in_total) return false;
        const std::string& img = pair.total.label(image(*in_total));
        if (!pair.sub.id_of(img)) return false;
    }
    return true;
}

std::map<std::string, std::string> SimplicialMap::vertex_map_by_label() const {
    std::map<std::string, std::string> out;
    for (std::size_t v = 0; v < source_.vertex_count(); ++v)
        out[source_.label(static_cast<int>(v))] = target_.label(image_[v]);
    return out;
}

Complex relabel(const Complex& x, const std::map<std::string, std::string>& rename) {
    std::set<std::string> used;
    for (const auto& [from, to] : rename) {
        (void)from;
        if (!used.insert(to).second)
            throw std::invalid_argument("relabel map is not injective at '" + to + "'");
    }
    auto lookup = [&](const std::string& l) -> std::string {
        auto it = rename.find(l);
        return it == rename.end() ? l : it->second;
    };
    std::vector<std::vector<std::string>> maximal;
    for (const auto& tuple : x.maximal_simplices()) {
        std::vector<std::string> renamed;
        for (const auto& l : tuple) renamed.push_back(lookup(l));
        maximal.push_back(std::move(renamed));
    }
    return Complex::from_maximal(maximal);
}

}  // namespace lefhopf
