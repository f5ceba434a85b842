#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "brute.hpp"
#include "cfree/constructions.hpp"
#include "cfree/dot.hpp"
#include "cfree/error.hpp"
#include "cfree/experiment.hpp"
#include "cfree/io.hpp"
#include "cfree/kuhn_osthus.hpp"
#include "cfree/oracles.hpp"

using namespace cfree;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("cfree_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
    fs::path p = scratch() / name;
    std::ofstream(p) << text;
    return p.string();
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run(const std::string& args) {
    std::string cmd = std::string(CFREE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

const char* kK25 = "graph 7\n0 2\n0 3\n0 4\n0 5\n0 6\n1 2\n1 3\n1 4\n1 5\n1 6\n";

} // namespace

TEST_CASE("graph text round trip") {
    std::istringstream in("# comment\ngraph 4\n0 1\n# inner\n1 2\n2 3\n");
    Graph g = io::read_graph(in);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    std::istringstream again(io::to_text(g));
    CHECK(io::read_graph(again) == g);
}

TEST_CASE("hypergraph round trips and dispatch") {
    UniformHypergraph h(3, 6, {{0, 1, 2}, {2, 3, 4}});
    std::istringstream in(io::to_text(h));
    CHECK(io::read_uniform(in) == h);
    OrientedHypergraph o(3, 6, {{2, 0, 1}, {4, 3, 2}});
    std::istringstream oin(io::to_text(o));
    auto any = io::read_any(oin);
    REQUIRE(std::holds_alternative<OrientedHypergraph>(any));
    CHECK(std::get<OrientedHypergraph>(any) == o);
}

TEST_CASE("malformed input is rejected") {
    std::istringstream loop("graph 3\n1 1\n");
    CHECK_THROWS_AS(io::read_graph(loop), Error);
    std::istringstream range("graph 3\n0 3\n");
    CHECK_THROWS_AS(io::read_graph(range), Error);
    std::istringstream dup("graph 3\n0 1\n1 0\n");
    CHECK_THROWS_AS(io::read_graph(dup), Error);
    std::istringstream width("uhg 3 5\n0 1\n");
    CHECK_THROWS_AS(io::read_uniform(width), Error);
    std::istringstream header("nonsense 3\n");
    CHECK_THROWS_AS(io::read_any(header), Error);
    CHECK_THROWS_AS(io::load_graph((scratch() / "missing.txt").string()), Error);
}

TEST_CASE("vertex lists") {
    std::istringstream in("0 3\n5\n");
    CHECK(io::read_vertex_list(in) == std::vector<Vertex>{0, 3, 5});
}

TEST_CASE("dot output") {
    auto p = paste_hyperdouble(UniformHypergraph(3, 3, {{0, 1, 2}}));
    std::string d = to_dot(p);
    std::size_t bold = 0, edges = 0, pos = 0;
    while ((pos = d.find("bold", pos)) != std::string::npos) ++bold, ++pos;
    pos = 0;
    while ((pos = d.find(" -- ", pos)) != std::string::npos) ++edges, ++pos;
    CHECK(bold == 3);
    CHECK(edges == 6);
    CHECK(d == to_dot(p));
    CHECK(to_dot(Graph(0)) == "graph G {\n}\n");
    auto g = BipartiteGraph::from_graph(complete_bipartite(2, 3));
    std::string layered = to_dot(g.graph(), build_layering(g));
    CHECK(layered.find("L1") != std::string::npos);
    fs::path out = scratch() / "c6.dot";
    export_dot(d, out.string());
    CHECK(read_file(out) == d);
}

TEST_CASE("experiment ids and formatting") {
    CHECK(parse_experiment_id("kuhn-osthus") == ExperimentId::kuhn_osthus);
    CHECK(to_string(ExperimentId::paste2) == "paste2");
    CHECK_THROWS_AS(parse_experiment_id("thm9"), Error);
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0 / 3.0) == "0.333333");
}

TEST_CASE("kuhn-osthus experiment on K_{2,5}") {
    ExperimentSpec s;
    s.id = ExperimentId::kuhn_osthus;
    s.input = write_file("k25.txt", kK25);
    auto r = run_experiment(s);
    CHECK(r.hard_ok);
    CHECK(r.rows == 1);
    auto line = r.csv.substr(r.csv.find('\n') + 1);
    // instance,seed,vertices,e,h,extracted,c4free,e_over_h,...
    std::vector<std::string> cols;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cols.push_back(c);
    REQUIRE(cols.size() >= 8);
    CHECK(cols[3] == "10");
    CHECK(cols[4] == "2");
    CHECK(cols[5] == "6");
    CHECK(cols[6] == "true");
    CHECK(cols[7] == "5");
}

TEST_CASE("thm3 and prop1 experiments") {
    ExperimentSpec t;
    t.id = ExperimentId::thm3;
    t.k = 2;
    t.m = 5;
    t.seed = 4;
    auto r = run_experiment(t);
    CHECK(r.hard_ok);
    CHECK(r.csv.find(",15,15,") != std::string::npos);

    ExperimentSpec p;
    p.id = ExperimentId::prop1;
    p.a = 3;
    p.b = 2;
    p.m = 100;
    p.count = 3;
    auto pr = run_experiment(p);
    CHECK(pr.hard_ok);
    CHECK(pr.rows == 3);
    // byte-for-byte reproducible
    CHECK(run_experiment(p).csv == pr.csv);
}

TEST_CASE("invalid experiment configs") {
    ExperimentSpec s;
    s.id = ExperimentId::lemma4;
    s.n = 40;
    CHECK_THROWS_AS(s.resolved(), Error);
}

TEST_CASE("cli exit codes") {
    std::string k25 = write_file("k25_cli.txt", kK25);
    std::string c4 = write_file("c4.txt", "graph 4\n0 1\n1 2\n2 3\n0 3\n");
    CHECK(run("extract --in " + k25) == 0);
    CHECK(run("verify-cfree --in " + c4 + " --L 4") == 1);
    CHECK(run("verify-cfree --in " + k25 + " --L 6") == 0);
    CHECK(run("no-such-command") == 2);
    CHECK(run("oracle c4free") == 2);
    CHECK(run("oracle c4free --in " + (scratch() / "absent").string()) == 3);
    CHECK(run("experiment --id kuhn-osthus --in " + k25) == 0);

    fs::path out = scratch() / "gen.txt";
    CHECK(run("--seed 9 gen-hypergraph --a 3 --n 30 --m 20 --out " + out.string()) == 0);
    auto first = read_file(out);
    CHECK(run("--seed 9 gen-hypergraph --a 3 --n 30 --m 20 --out " + out.string()) == 0);
    CHECK(read_file(out) == first);
    CHECK(first.rfind("uhg 3 30", 0) == 0);
}

TEST_CASE("cli oracle output") {
    std::string k5 = write_file("k5.txt", io::to_text(brute::complete(5)));
    fs::path out = scratch() / "oracle.csv";
    CHECK(run("--out " + out.string() + " oracle bipgirth --girth-gt 6 --in " + k5) == 0);
    CHECK(read_file(out) == "e,girth_gt,size,optimal\n10,6,4,true\n");
}
