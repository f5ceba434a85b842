#ifndef CFREE_COLORSTATS_HPP
#define CFREE_COLORSTATS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cfree/graph.hpp"

namespace cfree {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

std::string to_string(const Rational& r);  // "p/q", or "p" when q = 1
BigInt binomial(std::int64_t n, std::int64_t k);

/// Vertex coloring with colors 0..b-1.
class Coloring {
public:
    Coloring(int b, std::vector<int> colors);

    int colors_used() const { return b_; }
    Vertex vertex_count() const { return static_cast<Vertex>(colors_.size()); }
    int operator[](Vertex v) const { return colors_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& colors() const { return colors_; }
    /// n_j: number of vertices of color j.
    std::vector<int> census() const;

    bool operator==(const Coloring&) const = default;

private:
    int b_;
    std::vector<int> colors_;
};

/// Multiplicity of each color; sums to the uniformity.
struct ColorMultiset {
    std::vector<int> multiplicity;

    int size() const;
    auto operator<=>(const ColorMultiset&) const = default;
    std::string to_string() const;  // e.g. "{0,0,1}"
};

using ColorSequence = std::vector<int>;

/// All a-element multisets over b colors, lexicographically descending in
/// the multiplicity vector ((a,0,..), (a-1,1,..), ...).
std::vector<ColorMultiset> all_multisets(int a, int b);

ColorMultiset multiset_of(const Hyperedge& e, const Coloring& c);

class MultisetFamily {
public:
    MultisetFamily(int a, int b, std::vector<ColorMultiset> members);

    static MultisetFamily non_monochromatic(int a, int b);
    static MultisetFamily rainbow(int a, int b);  // all colors distinct
    static MultisetFamily all(int a, int b);
    static MultisetFamily monochromatic(int a, int b);

    int uniformity() const { return a_; }
    int colors() const { return b_; }
    const std::vector<ColorMultiset>& members() const { return members_; }
    bool contains(const ColorMultiset& t) const;

private:
    int a_;
    int b_;
    std::vector<ColorMultiset> members_;
};

/// Probability that a uniformly random a-subset of the n vertices has color
/// multiset T: prod_j C(n_j, I_T(j)) / C(n, a).
Rational p_multiset_exact(const std::vector<int>& census, const ColorMultiset& t, int a);
Rational p_multiset_exact(const Coloring& c, const ColorMultiset& t, int a);
Rational p_family_exact(const std::vector<int>& census, const MultisetFamily& family);
/// Large-n form prod_j n_j^{I_T(j)} / n^a * a! / prod_j I_T(j)!, display only.
double p_multiset_asymptotic(const std::vector<int>& census, const ColorMultiset& t, int a);

// --- conditional-expectation coloring --------------------------------------

struct DerandomizedColoring {
    Coloring coloring;
    UniformHypergraph colorable;       // the non-monochromatic hyperedges
    std::size_t monochromatic = 0;
    /// Conditional expectation of the monochromatic count before any vertex
    /// is fixed (entry 0) and after fixing vertices 0..i (entry i + 1).
    std::vector<Rational> expectation_trace;
};

/// Method of conditional expectations over vertices in index order, ties to
/// the lowest color. Leaves at most floor(m / b^(a-1)) monochromatic hyperedges.
DerandomizedColoring derandomized_coloring(const UniformHypergraph& h, int b);

// --- counting --------------------------------------------------------------

std::map<ColorMultiset, std::size_t> count_by_multiset(const UniformHypergraph& h, const Coloring& c);
std::map<ColorSequence, std::size_t> count_by_sequence(const OrientedHypergraph& o, const Coloring& c);

/// Exhaustive: all b^n colorings (capped at 1e7). Sampled: `samples`
/// uniformly random colorings from `seed`.
struct CheckMode {
    enum class Kind { exhaustive, sampled } kind = Kind::exhaustive;
    std::uint64_t seed = 0;
    std::size_t samples = 0;

    static CheckMode exhaustive() { return {}; }
    static CheckMode sampled(std::uint64_t seed, std::size_t samples) { return {Kind::sampled, seed, samples}; }
};

inline constexpr std::uint64_t kExhaustiveColoringCap = 10'000'000;

struct RandomlikeWitness {
    Coloring coloring;
    ColorSequence colors;   // multiplicity vector (unordered) or color sequence (oriented)
    std::size_t count = 0;
    double expected = 0.0;  // target fraction times m
    double deviation = 0.0; // |count - expected|
};

struct RandomlikeReport {
    bool pass = true;
    bool exhaustive = true;
    std::uint64_t colorings_checked = 0;
    double tolerance = 0.0;  // eps * m
    std::optional<RandomlikeWitness> worst;  // largest deviation seen
};

/// Every checked coloring and every multiset T has count = (p^C(T) ± eps)·m.
RandomlikeReport check_randomlike(const UniformHypergraph& h, int b, double eps, const CheckMode& mode);
/// Every checked coloring and color sequence s has count = (prod n_{s_i}/n ± eps)·m.
RandomlikeReport check_randomlike_oriented(const OrientedHypergraph& o, int b, double eps, const CheckMode& mode);

// --- q(H) ------------------------------------------------------------------

struct CensusOptimum {
    std::vector<int> census;
    Rational probability;
};

/// Census maximizing p^C(family) over all compositions of n into b parts
/// (first maximizer in descending lexicographic order).
CensusOptimum max_multiset_probability(Vertex n, int b, const MultisetFamily& family, int a);

struct SubhypergraphOptimum {
    std::size_t q = 0;
    Coloring coloring;
    bool optimal = true;  // false for heuristic results
};

/// q(H) = max over colorings of #{e : multiset(e) in family}. Exhaustive
/// (tie: lexicographically smallest coloring) unless `heuristic`, which runs
/// seeded local search and reports optimal = false.
SubhypergraphOptimum best_subhypergraph(const UniformHypergraph& h, int b, const MultisetFamily& family,
                                        bool heuristic = false, std::uint64_t seed = 0);

/// C(b, a) · a! / b^a.
Rational rainbow_bound(int a, int b);

/// sum_j (n_j / n)^a, the monochromatic mass of a census in the large-n limit.
double power_mean_mass(const std::vector<int>& census, int a);

} // namespace cfree

#endif // CFREE_COLORSTATS_HPP
