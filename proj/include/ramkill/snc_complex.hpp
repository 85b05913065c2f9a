#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ramkill {

enum class VertexKind { original, exceptional };

// Exceptional vertices remember the edge whose blow-up created them.
struct Provenance {
    int left = -1;
    int right = -1;
    int generation = 0;  // 1-based creation counter within the complex

    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Vertex {
    std::string id;
    VertexKind kind = VertexKind::original;
    std::optional<Provenance> provenance;  // engaged iff exceptional

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

// A face is a sorted list of distinct vertex indices.
using Face = std::vector<int>;

// Dual complex of an SNC divisor arrangement: vertices stand for irreducible
// components, a face for a nonempty intersection of components. At most n
// components can meet in ambient dimension n, so faces have size <= n and the
// face set is downward closed. Values are immutable after construction;
// blow_up returns a fresh complex, so sharing read-only across workers is
// safe.
class SncComplex {
public:
    SncComplex() = default;

    // Declares exactly the given faces (normalized and deduplicated). The
    // result may violate invariants; validate() reports them.
    SncComplex(int dimension, std::vector<Vertex> vertices, std::vector<Face> faces);

    // Declares the downward closure of `generators` plus every singleton,
    // which is the reading of a maximal-face listing.
    static SncComplex closed(int dimension, std::vector<Vertex> vertices,
                             const std::vector<Face>& generators);

    int dimension() const { return dimension_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const Vertex& vertex(int v) const { return vertices_[static_cast<size_t>(v)]; }

    // All declared faces, sorted by size then lexicographically.
    const std::vector<Face>& faces() const { return faces_; }
    bool is_face(const Face& sorted_face) const;
    bool has_edge(int u, int v) const;

    // Faces not properly contained in another declared face. Assumes the
    // declared set is downward closed.
    std::vector<Face> maximal_faces() const;

    int find_vertex(std::string_view id) const;  // -1 when absent

    friend bool operator==(const SncComplex&, const SncComplex&) = default;

private:
    int dimension_ = 1;
    std::vector<Vertex> vertices_;
    std::vector<Face> faces_;
};

// Diagnostic check of every complex invariant. One message per violation;
// an empty report means the complex is valid.
std::vector<std::string> validate(const SncComplex& c);

// Blow up the edge {u, v}: a fresh exceptional vertex e appears, every face
// containing both u and v is replaced by the two faces trading u (resp. v)
// for e, every other face survives, and the edge {u, v} itself is gone. No
// new face among pre-existing vertices is created. Returns the new complex
// and the index of e. Throws std::invalid_argument when {u, v} is not a face.
std::pair<SncComplex, int> blow_up(const SncComplex& c, int u, int v);

// The 2-faces with one endpoint in `a` and the other in `b`.
// Throws std::invalid_argument when the sets are not disjoint.
std::vector<Face> adjacency(const SncComplex& c, const std::vector<int>& a,
                            const std::vector<int>& b);

}  // namespace ramkill
