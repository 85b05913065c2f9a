#include "ramkill/snc_complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace ramkill {

namespace {

Face normalized(Face f) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

bool face_less(const Face& x, const Face& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
}

std::string face_to_string(const SncComplex& c, const Face& f) {
    std::ostringstream os;
    os << '{';
    for (size_t k = 0; k < f.size(); ++k) {
        if (k) os << ' ';
        if (f[k] >= 0 && f[k] < c.vertex_count())
            os << c.vertex(f[k]).id;
        else
            os << '#' << f[k];
    }
    os << '}';
    return os.str();
}

}  // namespace

SncComplex::SncComplex(int dimension, std::vector<Vertex> vertices, std::vector<Face> faces)
    : dimension_(dimension), vertices_(std::move(vertices)) {
    faces_.reserve(faces.size());
    for (Face& f : faces) faces_.push_back(normalized(std::move(f)));
    std::sort(faces_.begin(), faces_.end(), face_less);
    faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
}

SncComplex SncComplex::closed(int dimension, std::vector<Vertex> vertices,
                              const std::vector<Face>& generators) {
    std::set<Face> all;
    for (int v = 0; v < static_cast<int>(vertices.size()); ++v) all.insert(Face{v});
    for (const Face& g : generators) {
        Face f = normalized(g);
        if (f.empty()) continue;
        if (f.size() > 25)
            throw std::invalid_argument("face with more than 25 vertices refused");
        const unsigned bits = 1u << f.size();
        for (unsigned mask = 1; mask < bits; ++mask) {
            Face sub;
            for (size_t k = 0; k < f.size(); ++k)
                if (mask & (1u << k)) sub.push_back(f[k]);
            all.insert(std::move(sub));
        }
    }
    return SncComplex(dimension, std::move(vertices),
                      std::vector<Face>(all.begin(), all.end()));
}

bool SncComplex::is_face(const Face& sorted_face) const {
    return std::binary_search(faces_.begin(), faces_.end(), sorted_face, face_less);
}

bool SncComplex::has_edge(int u, int v) const {
    if (u == v) return false;
    Face e{std::min(u, v), std::max(u, v)};
    return is_face(e);
}

std::vector<Face> SncComplex::maximal_faces() const {
    // A declared face of size k is non-maximal iff it is a (k-1)-subset of
    // some declared face, which suffices under downward closure.
    std::set<Face> covered;
    for (const Face& f : faces_) {
        if (f.size() < 2) continue;
        for (size_t skip = 0; skip < f.size(); ++skip) {
            Face sub;
            sub.reserve(f.size() - 1);
            for (size_t k = 0; k < f.size(); ++k)
                if (k != skip) sub.push_back(f[k]);
            covered.insert(std::move(sub));
        }
    }
    std::vector<Face> out;
    for (const Face& f : faces_)
        if (!covered.count(f)) out.push_back(f);
    return out;
}

int SncComplex::find_vertex(std::string_view id) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (vertices_[static_cast<size_t>(v)].id == id) return v;
    return -1;
}

std::vector<std::string> validate(const SncComplex& c) {
    std::vector<std::string> report;

    if (c.dimension() < 1) report.push_back("dimension must be a positive integer");

    std::unordered_set<std::string> seen;
    for (int v = 0; v < c.vertex_count(); ++v) {
        const Vertex& vx = c.vertex(v);
        if (!seen.insert(vx.id).second)
            report.push_back("duplicate vertex id '" + vx.id + "'");
        if (vx.kind == VertexKind::exceptional) {
            if (!vx.provenance)
                report.push_back("exceptional vertex '" + vx.id + "' lacks provenance");
            else if (vx.provenance->left < 0 || vx.provenance->left >= v ||
                     vx.provenance->right < 0 || vx.provenance->right >= v)
                report.push_back("exceptional vertex '" + vx.id +
                                 "' has provenance outside the vertices existing at creation");
        } else if (vx.provenance) {
            report.push_back("original vertex '" + vx.id + "' carries provenance");
        }
    }

    for (const Face& f : c.faces()) {
        if (f.empty()) {
            report.push_back("empty face declared");
            continue;
        }
        bool in_range = true;
        for (int v : f)
            if (v < 0 || v >= c.vertex_count()) {
                report.push_back("face " + face_to_string(c, f) +
                                 " uses an undeclared vertex");
                in_range = false;
                break;
            }
        if (!in_range) continue;
        if (static_cast<int>(f.size()) > c.dimension())
            report.push_back("face size exceeds n: " + face_to_string(c, f));
        if (f.size() >= 2) {
            for (size_t skip = 0; skip < f.size(); ++skip) {
                Face sub;
                sub.reserve(f.size() - 1);
                for (size_t k = 0; k < f.size(); ++k)
                    if (k != skip) sub.push_back(f[k]);
                if (!c.is_face(sub))
                    report.push_back("not downward closed: missing face " +
                                     face_to_string(c, sub) + " (subset of " +
                                     face_to_string(c, f) + ")");
            }
        }
    }

    for (int v = 0; v < c.vertex_count(); ++v)
        if (!c.is_face(Face{v}))
            report.push_back("not downward closed: missing singleton " +
                             face_to_string(c, Face{v}));

    return report;
}

std::pair<SncComplex, int> blow_up(const SncComplex& c, int u, int v) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= c.vertex_count() || u == v || !c.has_edge(u, v))
        throw std::invalid_argument("blow_up: edge is not a face of the complex");

    std::vector<Vertex> vertices = c.vertices();
    int exceptional_count = 0;
    for (const Vertex& vx : vertices)
        if (vx.kind == VertexKind::exceptional) ++exceptional_count;
    int counter = exceptional_count + 1;
    std::string id = "E" + std::to_string(counter);
    while (c.find_vertex(id) >= 0) id = "E" + std::to_string(++counter);

    const int e = static_cast<int>(vertices.size());
    vertices.push_back(Vertex{id, VertexKind::exceptional,
                              Provenance{u, v, exceptional_count + 1}});

    std::vector<Face> generators;
    for (const Face& m : c.maximal_faces()) {
        const bool has_u = std::binary_search(m.begin(), m.end(), u);
        const bool has_v = std::binary_search(m.begin(), m.end(), v);
        if (has_u && has_v) {
            Face without_u, without_v;
            for (int w : m) {
                if (w != u) without_u.push_back(w);
                if (w != v) without_v.push_back(w);
            }
            without_u.push_back(e);
            without_v.push_back(e);
            generators.push_back(std::move(without_u));
            generators.push_back(std::move(without_v));
        } else {
            generators.push_back(m);
        }
    }

    return {SncComplex::closed(c.dimension(), std::move(vertices), generators), e};
}

std::vector<Face> adjacency(const SncComplex& c, const std::vector<int>& a,
                            const std::vector<int>& b) {
    std::vector<char> in_a(static_cast<size_t>(c.vertex_count()), 0);
    std::vector<char> in_b(static_cast<size_t>(c.vertex_count()), 0);
    for (int v : a) {
        if (v < 0 || v >= c.vertex_count())
            throw std::invalid_argument("adjacency: vertex index out of range");
        in_a[static_cast<size_t>(v)] = 1;
    }
    for (int v : b) {
        if (v < 0 || v >= c.vertex_count())
            throw std::invalid_argument("adjacency: vertex index out of range");
        if (in_a[static_cast<size_t>(v)])
            throw std::invalid_argument("adjacency: sets are not disjoint");
        in_b[static_cast<size_t>(v)] = 1;
    }

    std::vector<Face> out;
    for (const Face& f : c.faces()) {
        if (f.size() != 2) continue;
        const bool fwd = in_a[static_cast<size_t>(f[0])] && in_b[static_cast<size_t>(f[1])];
        const bool rev = in_b[static_cast<size_t>(f[0])] && in_a[static_cast<size_t>(f[1])];
        if (fwd || rev) out.push_back(f);
    }
    return out;
}

}  // namespace ramkill
