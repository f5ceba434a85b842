#ifndef CFREE_DOT_HPP
#define CFREE_DOT_HPP

#include <string>

#include "cfree/constructions.hpp"
#include "cfree/graph.hpp"
#include "cfree/kuhn_osthus.hpp"

// Graphviz text. Vertices are listed in id order and edges in edge order, so
// equal inputs give byte-identical output.

namespace cfree {

std::string to_dot(const Graph& g);
/// Fat edges bold, connectors dashed, every edge labelled with its kind.
std::string to_dot(const PastedGraph& pg);
/// Every edge labelled with its layer ("L0", "L1", ...).
std::string to_dot(const Graph& g, const EdgeLayering& layering);

/// Writes DOT text to path (stdout for "" or "-"). Throws io_error.
void export_dot(const std::string& text, const std::string& path);

} // namespace cfree

#endif // CFREE_DOT_HPP
