#include "cfree/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "cfree/error.hpp"

namespace cfree::io {

namespace {

// Next non-empty, non-comment line split into integer-or-word tokens.
bool next_tokens(std::istream& in, std::vector<std::string>& tokens, std::size_t& line_no) {
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        tokens.clear();
        std::string tok;
        while (ss >> tok) tokens.push_back(tok);
        if (!tokens.empty()) return true;
    }
    return false;
}

long parse_int(const std::string& tok, std::size_t line_no) {
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(tok, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != tok.size()) {
        throw Error(ErrorKind::invalid_input, "line " + std::to_string(line_no) + ": not an integer: " + tok);
    }
    return value;
}

std::vector<Vertex> parse_row(const std::vector<std::string>& tokens, std::size_t line_no) {
    std::vector<Vertex> row;
    row.reserve(tokens.size());
    for (const auto& t : tokens) row.push_back(static_cast<Vertex>(parse_int(t, line_no)));
    return row;
}

struct Header {
    std::string kind;
    std::vector<long> args;
};

Header read_header(std::istream& in, std::size_t& line_no) {
    std::vector<std::string> tokens;
    if (!next_tokens(in, tokens, line_no)) {
        throw Error(ErrorKind::invalid_input, "empty input");
    }
    Header h{tokens[0], {}};
    for (std::size_t i = 1; i < tokens.size(); ++i) h.args.push_back(parse_int(tokens[i], line_no));
    return h;
}

Graph read_graph_body(std::istream& in, const Header& h, std::size_t& line_no) {
    if (h.args.size() != 1) throw Error(ErrorKind::invalid_input, "expected 'graph <n>'");
    std::vector<Edge> edges;
    std::vector<std::string> tokens;
    while (next_tokens(in, tokens, line_no)) {
        auto row = parse_row(tokens, line_no);
        if (row.size() != 2) {
            throw Error(ErrorKind::invalid_input, "line " + std::to_string(line_no) + ": expected 'u v'");
        }
        edges.push_back({row[0], row[1]});
    }
    return Graph(static_cast<Vertex>(h.args[0]), edges);
}

std::vector<Hyperedge> read_rows(std::istream& in, std::size_t& line_no) {
    std::vector<Hyperedge> rows;
    std::vector<std::string> tokens;
    while (next_tokens(in, tokens, line_no)) rows.push_back(parse_row(tokens, line_no));
    return rows;
}

UniformHypergraph read_uniform_body(std::istream& in, const Header& h, std::size_t& line_no) {
    if (h.args.size() != 2) throw Error(ErrorKind::invalid_input, "expected 'uhg <a> <n>'");
    auto rows = read_rows(in, line_no);
    for (const auto& r : rows) {
        for (std::size_t i = 1; i < r.size(); ++i) {
            if (r[i - 1] >= r[i]) throw Error(ErrorKind::invalid_input, "uhg hyperedges must be ascending");
        }
    }
    return UniformHypergraph(static_cast<int>(h.args[0]), static_cast<Vertex>(h.args[1]), std::move(rows));
}

OrientedHypergraph read_oriented_body(std::istream& in, const Header& h, std::size_t& line_no) {
    if (h.args.size() != 2) throw Error(ErrorKind::invalid_input, "expected 'ohg <a> <n>'");
    return OrientedHypergraph(static_cast<int>(h.args[0]), static_cast<Vertex>(h.args[1]), read_rows(in, line_no));
}

void expect_kind(const Header& h, const char* kind) {
    if (h.kind != kind) {
        throw Error(ErrorKind::invalid_input, "expected a '" + std::string(kind) + "' file, found '" + h.kind + "'");
    }
}

std::ifstream open(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::io_error, "cannot open " + path);
    return in;
}

} // namespace

Graph read_graph(std::istream& in) {
    std::size_t line_no = 0;
    Header h = read_header(in, line_no);
    expect_kind(h, "graph");
    return read_graph_body(in, h, line_no);
}

UniformHypergraph read_uniform(std::istream& in) {
    std::size_t line_no = 0;
    Header h = read_header(in, line_no);
    expect_kind(h, "uhg");
    return read_uniform_body(in, h, line_no);
}

OrientedHypergraph read_oriented(std::istream& in) {
    std::size_t line_no = 0;
    Header h = read_header(in, line_no);
    expect_kind(h, "ohg");
    return read_oriented_body(in, h, line_no);
}

AnyObject read_any(std::istream& in) {
    std::size_t line_no = 0;
    Header h = read_header(in, line_no);
    if (h.kind == "graph") return read_graph_body(in, h, line_no);
    if (h.kind == "uhg") return read_uniform_body(in, h, line_no);
    if (h.kind == "ohg") return read_oriented_body(in, h, line_no);
    throw Error(ErrorKind::invalid_input, "unknown file kind '" + h.kind + "'");
}

std::vector<Vertex> read_vertex_list(std::istream& in) {
    std::vector<Vertex> out;
    std::vector<std::string> tokens;
    std::size_t line_no = 0;
    while (next_tokens(in, tokens, line_no)) {
        for (Vertex v : parse_row(tokens, line_no)) out.push_back(v);
    }
    return out;
}

void write(std::ostream& out, const Graph& g) {
    out << "graph " << g.vertex_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

namespace {
void write_rows(std::ostream& out, const std::vector<Hyperedge>& rows) {
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << r[i];
        out << '\n';
    }
}
} // namespace

void write(std::ostream& out, const UniformHypergraph& h) {
    out << "uhg " << h.uniformity() << ' ' << h.vertex_count() << '\n';
    write_rows(out, h.hyperedges());
}

void write(std::ostream& out, const OrientedHypergraph& o) {
    out << "ohg " << o.uniformity() << ' ' << o.vertex_count() << '\n';
    write_rows(out, o.sequences());
}

void write_vertex_list(std::ostream& out, const std::vector<Vertex>& vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i) out << (i ? " " : "") << vertices[i];
    out << '\n';
}

Graph load_graph(const std::string& path) {
    auto in = open(path);
    return read_graph(in);
}

UniformHypergraph load_uniform(const std::string& path) {
    auto in = open(path);
    return read_uniform(in);
}

OrientedHypergraph load_oriented(const std::string& path) {
    auto in = open(path);
    return read_oriented(in);
}

std::vector<Vertex> load_vertex_list(const std::string& path) {
    auto in = open(path);
    return read_vertex_list(in);
}

AnyObject load_any(const std::string& path) {
    auto in = open(path);
    return read_any(in);
}

void save_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::io_error, "cannot write " + path);
    out << text;
    if (!out) throw Error(ErrorKind::io_error, "write failed for " + path);
}

template <typename T>
std::string to_text(const T& object) {
    std::ostringstream ss;
    write(ss, object);
    return ss.str();
}

template std::string to_text<Graph>(const Graph&);
template std::string to_text<UniformHypergraph>(const UniformHypergraph&);
template std::string to_text<OrientedHypergraph>(const OrientedHypergraph&);

} // namespace cfree::io
