#include "ramkill/dot_export.hpp"

#include <sstream>

namespace ramkill {

namespace {

// Fill colors for up to 12 classes; higher indices fall back to white.
const char* palette(int color) {
    static const char* colors[] = {"#e6734b", "#6b9ac4", "#97c46b", "#c4b36b",
                                   "#a06bc4", "#6bc4b3", "#c46b9a", "#8a8a8a",
                                   "#d9a0a0", "#a0c4d9", "#d9d0a0", "#b3a0d9"};
    if (color < 1 || color > 12) return "#ffffff";
    return colors[color - 1];
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string to_dot(const ColoredComplex& cc) {
    std::ostringstream os;
    os << "graph arrangement {\n";
    os << "  node [style=filled];\n";
    for (int v = 0; v < cc.complex.vertex_count(); ++v) {
        const Vertex& vx = cc.complex.vertex(v);
        const int color = cc.color[static_cast<size_t>(v)];
        os << "  " << quoted(vx.id) << " [label=" << quoted(vx.id + "\\ncolor " +
                                                            std::to_string(color))
           << ", fillcolor=\"" << palette(color) << "\""
           << ", shape=" << (vx.kind == VertexKind::exceptional ? "box" : "ellipse")
           << "];\n";
    }
    for (const Face& f : cc.complex.faces())
        if (f.size() == 2)
            os << "  " << quoted(cc.complex.vertex(f[0]).id) << " -- "
               << quoted(cc.complex.vertex(f[1]).id) << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace ramkill
