// Finite abstract simplicial complexes with a global vertex order.
//
// Vertices carry string labels; the total order is lexicographic on labels
// and fixes every boundary sign in the library. Simplices are stored graded
// by dimension as strictly increasing id tuples, sorted within each grade,
// and the complex is always face-closed.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lefhopf {

using Simplex = std::vector<int>;  // vertex ids, strictly increasing

class Complex {
public:
    Complex() = default;

    /// Builds the face closure of the given maximal simplices (as label
    /// tuples). Throws std::invalid_argument on an empty list or a repeated
    /// vertex inside a tuple.
    static Complex from_maximal(const std::vector<std::vector<std::string>>& maximal_simplices);

    int dim() const { return static_cast<int>(grades_.size()) - 1; }
    std::size_t vertex_count() const { return labels_.size(); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int id) const { return labels_[static_cast<std::size_t>(id)]; }
    std::optional<int> id_of(const std::string& label) const;

    /// Simplices of dimension p, sorted; empty for p out of range.
    const std::vector<Simplex>& simplices(int p) const;
    std::size_t count(int p) const { return simplices(p).size(); }
    std::size_t total_simplices() const;

    bool contains(const Simplex& s) const;
    /// Position of s within simplices(dim s), or nullopt.
    std::optional<std::size_t> index_of(const Simplex& s) const;

    /// Simplices not a proper face of any other simplex, as label tuples in
    /// deterministic order (by dimension, then lexicographically).
    std::vector<std::vector<std::string>> maximal_simplices() const;

    std::vector<std::string> labels_of(const Simplex& s) const;
    Simplex simplex_of_labels(const std::vector<std::string>& labels) const;

    /// True when every simplex of `sub` (matched by label) is a simplex here.
    bool has_subcomplex(const Complex& sub) const;

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.labels_ == b.labels_ && a.grades_ == b.grades_;
    }

private:
    std::vector<std::string> labels_;             // sorted lexicographically
    std::vector<std::vector<Simplex>> grades_;    // grades_[p] sorted
    std::vector<std::map<Simplex, std::size_t>> index_;

    void rebuild_index();
};

/// A subcomplex inclusion A <= X, vertices matched by label.
struct Pair {
    Complex total;
    Complex sub;

    /// Throws std::invalid_argument when sub is not a subcomplex of total.
    Pair(Complex total_, Complex sub_);
};

/// Vertex map between complexes sending every simplex to a simplex of the
/// target (possibly degenerately: repeated image vertices collapse).
class SimplicialMap {
public:
    /// Validates the vertex map (given by labels); throws std::invalid_argument
    /// naming the offending vertex or simplex.
    static SimplicialMap make(const Complex& source, const Complex& target,
                              const std::map<std::string, std::string>& vertex_map);
    static SimplicialMap identity(const Complex& space);
    /// All source vertices to a single target vertex.
    static SimplicialMap constant(const Complex& source, const Complex& target,
                                  const std::string& target_vertex);

    const Complex& source() const { return source_; }
    const Complex& target() const { return target_; }
    int image(int vertex_id) const { return image_[static_cast<std::size_t>(vertex_id)]; }
    const std::vector<int>& image() const { return image_; }

    bool is_selfmap() const { return source_ == target_; }

    /// Image vertex set of a source simplex, deduplicated and sorted.
    Simplex image_simplex(const Simplex& s) const;

    /// Composition other(this(.)); source of `other` must equal this target.
    SimplicialMap then(const SimplicialMap& other) const;

    /// True when the map sends pair.sub into itself (for pair selfmaps).
    bool preserves(const Pair& pair) const;

    std::map<std::string, std::string> vertex_map_by_label() const;

    friend bool operator==(const SimplicialMap& a, const SimplicialMap& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.image_ == b.image_;
    }

private:
    SimplicialMap(Complex source, Complex target, std::vector<int> image)
        : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {}

    Complex source_;
    Complex target_;
    std::vector<int> image_;  // per source vertex id, a target vertex id
};

/// Renames every vertex through `rename` (must be injective); simplices and
/// the vertex order are rebuilt from the new labels.
Complex relabel(const Complex& x, const std::map<std::string, std::string>& rename);

}  // namespace lefhopf
