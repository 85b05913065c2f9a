#include "ramkill/arrangement_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace ramkill {

parse_error::parse_error(int line_number, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
      line(line_number) {}

SncComplex read_arrangement(std::istream& in, std::optional<int> dimension_override) {
    std::optional<int> dim;
    std::vector<Vertex> vertices;
    std::map<std::string, int, std::less<>> index_of;
    std::vector<Face> generators;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream line(raw);
        std::string keyword;
        if (!(line >> keyword)) continue;

        if (keyword == "dim") {
            int n = 0;
            if (!(line >> n)) throw parse_error(line_no, "dim expects an integer");
            if (dim) throw parse_error(line_no, "duplicate dim line");
            std::string extra;
            if (line >> extra) throw parse_error(line_no, "trailing token '" + extra + "'");
            dim = n;
        } else if (keyword == "vertex") {
            std::string name;
            if (!(line >> name)) throw parse_error(line_no, "vertex expects a name");
            std::string extra;
            if (line >> extra) throw parse_error(line_no, "trailing token '" + extra + "'");
            if (index_of.count(name))
                throw parse_error(line_no, "duplicate vertex '" + name + "'");
            index_of.emplace(name, static_cast<int>(vertices.size()));
            vertices.push_back(Vertex{name, VertexKind::original, {}});
        } else if (keyword == "face") {
            Face f;
            std::string name;
            while (line >> name) {
                auto it = index_of.find(name);
                if (it == index_of.end())
                    throw parse_error(line_no, "face uses undeclared vertex '" + name + "'");
                f.push_back(it->second);
            }
            if (f.empty()) throw parse_error(line_no, "face expects at least one vertex");
            generators.push_back(std::move(f));
        } else {
            throw parse_error(line_no, "unknown directive '" + keyword + "'");
        }
    }

    if (dimension_override) dim = dimension_override;
    if (!dim) throw parse_error(line_no, "missing dim line");
    return SncComplex::closed(*dim, std::move(vertices), generators);
}

SncComplex read_arrangement(const std::string& text, std::optional<int> dimension_override) {
    std::istringstream in(text);
    return read_arrangement(in, dimension_override);
}

SncComplex read_arrangement_file(const std::string& path,
                                 std::optional<int> dimension_override) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_arrangement(in, dimension_override);
}

void write_arrangement(std::ostream& out, const SncComplex& c) {
    out << "dim " << c.dimension() << "\n";
    for (const Vertex& v : c.vertices()) out << "vertex " << v.id << "\n";
    for (const Face& f : c.maximal_faces()) {
        if (f.size() < 2) continue;  // singletons are implied by the vertex lines
        out << "face";
        for (int v : f) out << ' ' << c.vertex(v).id;
        out << "\n";
    }
}

std::string write_arrangement(const SncComplex& c) {
    std::ostringstream os;
    write_arrangement(os, c);
    return os.str();
}

}  // namespace ramkill
