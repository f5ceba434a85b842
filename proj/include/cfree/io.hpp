#ifndef CFREE_IO_HPP
#define CFREE_IO_HPP

#include <istream>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "cfree/graph.hpp"

// Text formats, all 0-based, '#' lines ignored:
//   graph <n>        then one "u v" per line
//   uhg <a> <n>      then one hyperedge per line, ascending ids
//   ohg <a> <n>      then one hyperedge per line, order significant
// A class file is a whitespace-separated list of the vertices in class A.

namespace cfree::io {

Graph read_graph(std::istream& in);
UniformHypergraph read_uniform(std::istream& in);
OrientedHypergraph read_oriented(std::istream& in);
std::vector<Vertex> read_vertex_list(std::istream& in);

using AnyObject = std::variant<Graph, UniformHypergraph, OrientedHypergraph>;
/// Dispatches on the header keyword.
AnyObject read_any(std::istream& in);

void write(std::ostream& out, const Graph& g);
void write(std::ostream& out, const UniformHypergraph& h);
void write(std::ostream& out, const OrientedHypergraph& o);
void write_vertex_list(std::ostream& out, const std::vector<Vertex>& vertices);

Graph load_graph(const std::string& path);
UniformHypergraph load_uniform(const std::string& path);
OrientedHypergraph load_oriented(const std::string& path);
std::vector<Vertex> load_vertex_list(const std::string& path);
AnyObject load_any(const std::string& path);

/// Writes text to path, or to stdout when path is empty or "-".
void save_text(const std::string& path, const std::string& text);

template <typename T>
std::string to_text(const T& object);

} // namespace cfree::io

#endif // CFREE_IO_HPP
