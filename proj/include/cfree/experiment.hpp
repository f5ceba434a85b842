#ifndef CFREE_EXPERIMENT_HPP
#define CFREE_EXPERIMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cfree/budget.hpp"
#include "cfree/graph.hpp"

namespace cfree {

enum class ExperimentId { thm3, thm4, prop1, lemma4, paste1, paste2, kuhn_osthus };

ExperimentId parse_experiment_id(const std::string& name);  // throws config_invalid
std::string to_string(ExperimentId id);

struct ExperimentSpec {
    ExperimentId id = ExperimentId::prop1;
    int k = 0;        // 0 picks the experiment default
    int l = 0;
    int a = 0;
    int b = 0;
    Vertex n = 0;
    std::size_t m = 0;
    double eps = 0.1;
    std::string family = "nonmono";  // lemma4: nonmono | rainbow
    std::uint64_t seed = 1;
    int count = 1;    // instances, seeds derived from `seed`
    bool deep = true; // run oracle certification
    SearchBudget budget;
    std::string input;  // optional input file (kuhn-osthus: a graph; paste1: a base graph)

    /// Fills unset parameters with the experiment defaults and checks them.
    ExperimentSpec resolved() const;
};

struct ExperimentReport {
    std::string csv;          // header plus one row per instance
    std::size_t rows = 0;
    bool hard_ok = true;      // every hard invariant held
    std::vector<std::string> failures;  // "instance i: what"
};

/// Runs `count` independent instances (in parallel) and reports one CSV row
/// each. Output depends only on the spec.
ExperimentReport run_experiment(const ExperimentSpec& spec);

/// "%.6g".
std::string format_double(double x);

} // namespace cfree

#endif // CFREE_EXPERIMENT_HPP
