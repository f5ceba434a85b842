#include "cfree/dot.hpp"

#include <sstream>

#include "cfree/io.hpp"

namespace cfree {

namespace {

template <typename Style>
std::string render(const Graph& g, Style style) {
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges()[i];
        out << "  " << e.u << " -- " << e.v;
        std::string attrs = style(i);
        if (!attrs.empty()) out << " [" << attrs << "]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace

std::string to_dot(const Graph& g) {
    return render(g, [](std::size_t) { return std::string(); });
}

std::string to_dot(const PastedGraph& pg) {
    return render(pg.graph, [&](std::size_t i) {
        EdgeLabel label = pg.labels[i];
        std::string attrs = "label=\"" + to_string(label) + "\"";
        if (label == EdgeLabel::fat) attrs += ", style=bold";
        if (label == EdgeLabel::connector) attrs += ", style=dashed";
        return attrs;
    });
}

std::string to_dot(const Graph& g, const EdgeLayering& layering) {
    return render(g, [&](std::size_t i) { return "label=\"L" + std::to_string(layering.layer[i]) + "\""; });
}

void export_dot(const std::string& text, const std::string& path) { io::save_text(path, text); }

} // namespace cfree
