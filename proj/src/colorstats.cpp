#include "cfree/colorstats.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "cfree/error.hpp"
#include "cfree/kernels/coloring_scan.hpp"
#include "cfree/rng.hpp"

namespace cfree {

std::string to_string(const Rational& r) {
    auto num = boost::multiprecision::numerator(r);
    auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Coloring::Coloring(int b, std::vector<int> colors) : b_(b), colors_(std::move(colors)) {
    if (b < 1) throw Error(ErrorKind::invalid_argument, "need at least one color");
    for (int c : colors_) {
        if (c < 0 || c >= b) throw Error(ErrorKind::invalid_input, "color out of range");
    }
}

std::vector<int> Coloring::census() const {
    std::vector<int> out(static_cast<std::size_t>(b_), 0);
    for (int c : colors_) ++out[static_cast<std::size_t>(c)];
    return out;
}

int ColorMultiset::size() const {
    int s = 0;
    for (int x : multiplicity) s += x;
    return s;
}

std::string ColorMultiset::to_string() const {
    std::string out = "{";
    bool first = true;
    for (std::size_t j = 0; j < multiplicity.size(); ++j) {
        for (int r = 0; r < multiplicity[j]; ++r) {
            if (!first) out += ",";
            out += std::to_string(j);
            first = false;
        }
    }
    return out + "}";
}

namespace {

// Compositions of `total` into `parts` parts, first coordinate descending.
void for_each_composition(int total, int parts, const std::function<void(const std::vector<int>&)>& fn) {
    if (parts <= 0) return;
    std::vector<int> cur(static_cast<std::size_t>(parts), 0);
    std::function<void(int, int)> rec = [&](int j, int left) {
        if (j == parts - 1) {
            cur[static_cast<std::size_t>(j)] = left;
            fn(cur);
            return;
        }
        for (int x = left; x >= 0; --x) {
            cur[static_cast<std::size_t>(j)] = x;
            rec(j + 1, left - x);
        }
    };
    rec(0, total);
}

std::uint32_t multiset_key(const std::vector<int>& mult, int a) {
    std::uint32_t key = 0;
    std::uint32_t w = 1;
    for (int x : mult) {
        key += static_cast<std::uint32_t>(x) * w;
        w *= static_cast<std::uint32_t>(a + 1);
    }
    return key;
}

void check_coloring(const Coloring& c, Vertex n) {
    if (c.vertex_count() != n) throw Error(ErrorKind::invalid_input, "coloring length differs from vertex count");
}

// The tolerance test shared by both checkers.
bool within(double deviation, double tolerance) { return deviation <= tolerance * (1.0 + 1e-12) + 1e-9; }

} // namespace

std::vector<ColorMultiset> all_multisets(int a, int b) {
    if (a < 0 || b < 1) throw Error(ErrorKind::invalid_argument, "bad multiset dimensions");
    std::vector<ColorMultiset> out;
    for_each_composition(a, b, [&](const std::vector<int>& mult) { out.push_back({mult}); });
    return out;
}

ColorMultiset multiset_of(const Hyperedge& e, const Coloring& c) {
    ColorMultiset t{std::vector<int>(static_cast<std::size_t>(c.colors_used()), 0)};
    for (Vertex v : e) ++t.multiplicity[static_cast<std::size_t>(c[v])];
    return t;
}

MultisetFamily::MultisetFamily(int a, int b, std::vector<ColorMultiset> members)
    : a_(a), b_(b), members_(std::move(members)) {
    for (const auto& t : members_) {
        if (static_cast<int>(t.multiplicity.size()) != b || t.size() != a) {
            throw Error(ErrorKind::invalid_argument, "multiset " + t.to_string() + " does not fit (a, b)");
        }
    }
    std::sort(members_.begin(), members_.end(), std::greater<>());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

MultisetFamily MultisetFamily::non_monochromatic(int a, int b) {
    std::vector<ColorMultiset> out;
    for (auto& t : all_multisets(a, b)) {
        if (std::find(t.multiplicity.begin(), t.multiplicity.end(), a) == t.multiplicity.end()) out.push_back(t);
    }
    return {a, b, std::move(out)};
}

MultisetFamily MultisetFamily::rainbow(int a, int b) {
    std::vector<ColorMultiset> out;
    for (auto& t : all_multisets(a, b)) {
        if (std::all_of(t.multiplicity.begin(), t.multiplicity.end(), [](int x) { return x <= 1; })) out.push_back(t);
    }
    return {a, b, std::move(out)};
}

MultisetFamily MultisetFamily::all(int a, int b) { return {a, b, all_multisets(a, b)}; }

MultisetFamily MultisetFamily::monochromatic(int a, int b) {
    std::vector<ColorMultiset> out;
    for (auto& t : all_multisets(a, b)) {
        if (std::find(t.multiplicity.begin(), t.multiplicity.end(), a) != t.multiplicity.end()) out.push_back(t);
    }
    return {a, b, std::move(out)};
}

bool MultisetFamily::contains(const ColorMultiset& t) const {
    return std::find(members_.begin(), members_.end(), t) != members_.end();
}

Rational p_multiset_exact(const std::vector<int>& census, const ColorMultiset& t, int a) {
    if (t.multiplicity.size() != census.size() || t.size() != a) {
        throw Error(ErrorKind::invalid_argument, "multiset does not match census or uniformity");
    }
    std::int64_t n = 0;
    for (int x : census) n += x;
    BigInt total = binomial(n, a);
    if (total == 0) return Rational(0);
    BigInt num = 1;
    for (std::size_t j = 0; j < census.size(); ++j) num *= binomial(census[j], t.multiplicity[j]);
    return Rational(num, total);
}

Rational p_multiset_exact(const Coloring& c, const ColorMultiset& t, int a) { return p_multiset_exact(c.census(), t, a); }

Rational p_family_exact(const std::vector<int>& census, const MultisetFamily& family) {
    Rational sum = 0;
    for (const auto& t : family.members()) sum += p_multiset_exact(census, t, family.uniformity());
    return sum;
}

double p_multiset_asymptotic(const std::vector<int>& census, const ColorMultiset& t, int a) {
    double n = 0;
    for (int x : census) n += x;
    if (n == 0) return 0.0;
    double p = std::tgamma(a + 1.0);
    for (std::size_t j = 0; j < census.size(); ++j) {
        p *= std::pow(census[j] / n, t.multiplicity[j]) / std::tgamma(t.multiplicity[j] + 1.0);
    }
    return p;
}

// ---------------------------------------------------------------------------

DerandomizedColoring derandomized_coloring(const UniformHypergraph& h, int b) {
    if (b < 2) throw Error(ErrorKind::invalid_argument, "need at least two colors");
    const int a = h.uniformity();
    const Vertex n = h.vertex_count();
    const std::size_t m = h.edge_count();

    // Scaled by b^a: an edge with nothing fixed is monochromatic with weight b,
    // one whose r free vertices face a single fixed color with b^(a-r), else 0.
    std::vector<BigInt> power(static_cast<std::size_t>(a) + 1, 1);
    for (int i = 1; i <= a; ++i) power[static_cast<std::size_t>(i)] = power[static_cast<std::size_t>(i) - 1] * b;
    std::vector<int> fixed(m, 0);
    std::vector<int> shade(m, -1);  // common color of the fixed vertices, -2 when mixed
    auto weight = [&](int nfixed, int common) -> BigInt {
        if (nfixed == 0) return b;
        if (common == -2) return 0;
        return power[static_cast<std::size_t>(nfixed)];
    };

    BigInt total = BigInt(b) * static_cast<unsigned long long>(m);
    std::vector<Rational> trace;
    trace.emplace_back(total, power[static_cast<std::size_t>(a)]);

    auto incidence = h.incidence();
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
        const auto& inc = incidence[static_cast<std::size_t>(v)];
        BigInt before = 0;
        for (std::size_t e : inc) before += weight(fixed[e], shade[e]);
        int best_color = 0;
        BigInt best_after;
        for (int c = 0; c < b; ++c) {
            BigInt after = 0;
            for (std::size_t e : inc) {
                int s = fixed[e] == 0 ? c : (shade[e] == c ? c : -2);
                after += weight(fixed[e] + 1, s);
            }
            if (c == 0 || after < best_after) {
                best_after = after;
                best_color = c;
            }
        }
        colors[static_cast<std::size_t>(v)] = best_color;
        for (std::size_t e : inc) {
            shade[e] = fixed[e] == 0 ? best_color : (shade[e] == best_color ? best_color : -2);
            ++fixed[e];
        }
        total = total - before + best_after;
        trace.emplace_back(total, power[static_cast<std::size_t>(a)]);
    }

    std::vector<std::size_t> keep;
    std::size_t mono = 0;
    for (std::size_t e = 0; e < m; ++e) {
        if (shade[e] == -2) {
            keep.push_back(e);
        } else {
            ++mono;
        }
    }
    return {Coloring(b, std::move(colors)), h.select(keep), mono, std::move(trace)};
}

// ---------------------------------------------------------------------------

std::map<ColorMultiset, std::size_t> count_by_multiset(const UniformHypergraph& h, const Coloring& c) {
    check_coloring(c, h.vertex_count());
    std::map<ColorMultiset, std::size_t> out;
    for (const auto& e : h.hyperedges()) ++out[multiset_of(e, c)];
    return out;
}

std::map<ColorSequence, std::size_t> count_by_sequence(const OrientedHypergraph& o, const Coloring& c) {
    check_coloring(c, o.vertex_count());
    std::map<ColorSequence, std::size_t> out;
    for (const auto& s : o.sequences()) {
        ColorSequence seq;
        seq.reserve(s.size());
        for (Vertex v : s) seq.push_back(c[v]);
        ++out[seq];
    }
    return out;
}

namespace {

struct ScanSetup {
    kernels::ScanProblem problem;
    std::vector<ColorSequence> slot_colors;  // what each slot denotes
    std::vector<std::uint32_t> slot_keys;
};

RandomlikeReport run_check(const ScanSetup& setup, int b, double eps, const CheckMode& mode,
                           const kernels::DeviationTable::Expectation& expected) {
    const auto& p = setup.problem;
    RandomlikeReport report;
    report.exhaustive = mode.kind == CheckMode::Kind::exhaustive;
    report.tolerance = eps * static_cast<double>(p.m());
    if (p.m() == 0 || p.n == 0) return report;  // vacuous

    kernels::WorstResult worst;
    std::vector<int> worst_colors;
    if (report.exhaustive) {
        if (p.coloring_count() > kExhaustiveColoringCap) {
            throw Error(ErrorKind::state_space_too_large,
                        "b^n exceeds " + std::to_string(kExhaustiveColoringCap) + " colorings; use sampled mode");
        }
        kernels::DeviationTable table(p, setup.slot_keys, expected);
        worst = kernels::parallel::worst_deviation(p, table);
        worst_colors = kernels::decode_coloring(worst.index, p.n, b);
        report.colorings_checked = p.coloring_count();
    } else {
        if (mode.samples == 0) throw Error(ErrorKind::invalid_argument, "sampled mode needs a positive sample count");
        kernels::DeviationTable table(p, setup.slot_keys, expected);
        SplitMix64 rng(mode.seed);
        std::vector<int> colors(static_cast<std::size_t>(p.n));
        for (std::size_t s = 0; s < mode.samples; ++s) {
            for (auto& c : colors) c = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(b)));
            auto r = kernels::deviation_of(p, table, colors);
            if (r.deviation > worst.deviation) {
                worst = r;
                worst.index = s;
                worst_colors = colors;
            }
        }
        report.colorings_checked = mode.samples;
    }
    report.pass = within(worst.deviation, report.tolerance);
    report.worst = RandomlikeWitness{Coloring(b, worst_colors), setup.slot_colors[worst.slot], worst.count,
                                     worst.expected, worst.deviation};
    return report;
}

} // namespace

RandomlikeReport check_randomlike(const UniformHypergraph& h, int b, double eps, const CheckMode& mode) {
    if (b < 1) throw Error(ErrorKind::invalid_argument, "need at least one color");
    if (!(eps >= 0.0)) throw Error(ErrorKind::invalid_argument, "eps must be non-negative");
    const int a = h.uniformity();
    ScanSetup setup{kernels::make_problem(h.vertex_count(), b, a, kernels::KeyKind::multiset, h.hyperedges()), {}, {}};
    auto multisets = all_multisets(a, b);
    for (const auto& t : multisets) {
        setup.slot_colors.push_back(t.multiplicity);
        setup.slot_keys.push_back(multiset_key(t.multiplicity, a));
    }
    const double m = static_cast<double>(h.edge_count());
    return run_check(setup, b, eps, mode, [&](const std::vector<int>& census, std::size_t slot) {
        return p_multiset_exact(census, multisets[slot], a).convert_to<double>() * m;
    });
}

RandomlikeReport check_randomlike_oriented(const OrientedHypergraph& o, int b, double eps, const CheckMode& mode) {
    if (b < 1) throw Error(ErrorKind::invalid_argument, "need at least one color");
    if (!(eps >= 0.0)) throw Error(ErrorKind::invalid_argument, "eps must be non-negative");
    const int a = o.uniformity();
    ScanSetup setup{kernels::make_problem(o.vertex_count(), b, a, kernels::KeyKind::sequence, o.sequences()), {}, {}};
    const std::uint32_t sequences = setup.problem.key_space;
    for (std::uint32_t key = 0; key < sequences; ++key) {
        ColorSequence s(static_cast<std::size_t>(a));
        std::uint32_t rest = key;
        for (int pos = 0; pos < a; ++pos) {
            s[static_cast<std::size_t>(pos)] = static_cast<int>(rest % static_cast<std::uint32_t>(b));
            rest /= static_cast<std::uint32_t>(b);
        }
        setup.slot_colors.push_back(std::move(s));
        setup.slot_keys.push_back(key);
    }
    const double m = static_cast<double>(o.edge_count());
    const double n = static_cast<double>(o.vertex_count());
    return run_check(setup, b, eps, mode, [&](const std::vector<int>& census, std::size_t slot) {
        double p = 1.0;
        for (int c : setup.slot_colors[slot]) p *= census[static_cast<std::size_t>(c)] / n;
        return p * m;
    });
}

// ---------------------------------------------------------------------------

CensusOptimum max_multiset_probability(Vertex n, int b, const MultisetFamily& family, int a) {
    if (n < 0 || b < 1) throw Error(ErrorKind::invalid_argument, "bad census dimensions");
    if (family.uniformity() != a || family.colors() != b) {
        throw Error(ErrorKind::invalid_argument, "family does not match (a, b)");
    }
    std::optional<CensusOptimum> best;
    for_each_composition(n, b, [&](const std::vector<int>& census) {
        Rational p = p_family_exact(census, family);
        if (!best || p > best->probability) best = CensusOptimum{census, p};
    });
    return *best;
}

SubhypergraphOptimum best_subhypergraph(const UniformHypergraph& h, int b, const MultisetFamily& family, bool heuristic,
                                        std::uint64_t seed) {
    const int a = h.uniformity();
    if (family.uniformity() != a || family.colors() != b) {
        throw Error(ErrorKind::invalid_argument, "family does not match (a, b)");
    }
    const Vertex n = h.vertex_count();
    auto problem = kernels::make_problem(n, b, a, kernels::KeyKind::multiset, h.hyperedges());
    std::vector<char> member(problem.key_space, 0);
    for (const auto& t : family.members()) member[multiset_key(t.multiplicity, a)] = 1;

    if (!heuristic) {
        if (problem.coloring_count() > kExhaustiveColoringCap) {
            throw Error(ErrorKind::state_space_too_large,
                        "b^n exceeds " + std::to_string(kExhaustiveColoringCap) + " colorings; use the heuristic");
        }
        auto r = kernels::parallel::best(problem, member);
        return {r.q, Coloring(b, kernels::decode_coloring(r.index, n, b)), true};
    }

    // Seeded 1-flip local search from several random starts.
    const auto incidence = h.incidence();
    const std::size_t m = h.edge_count();
    const std::uint32_t aa = static_cast<std::uint32_t>(a);
    SubhypergraphOptimum best{0, Coloring(b, std::vector<int>(static_cast<std::size_t>(n), 0)), false};
    bool have = false;
    for (std::uint64_t start = 0; start < 16; ++start) {
        SplitMix64 rng(derive_seed(seed, start));
        std::vector<int> colors(static_cast<std::size_t>(n));
        for (auto& c : colors) c = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(b)));
        auto keys = kernels::keys_of(problem, colors);
        std::size_t q = 0;
        for (auto k : keys) q += static_cast<std::size_t>(member[k]);
        bool improved = true;
        while (improved) {
            improved = false;
            for (Vertex v = 0; v < n; ++v) {
                const int from = colors[static_cast<std::size_t>(v)];
                for (int to = 0; to < b; ++to) {
                    if (to == from) continue;
                    std::int64_t delta = 0;
                    for (std::size_t e : incidence[static_cast<std::size_t>(v)]) {
                        std::uint32_t k = keys[e];
                        std::uint32_t k2 = k - problem.weight[static_cast<std::size_t>(from) * aa] +
                                           problem.weight[static_cast<std::size_t>(to) * aa];
                        delta += member[k2] - member[k];
                    }
                    if (delta > 0) {
                        for (std::size_t e : incidence[static_cast<std::size_t>(v)]) {
                            keys[e] = keys[e] - problem.weight[static_cast<std::size_t>(from) * aa] +
                                      problem.weight[static_cast<std::size_t>(to) * aa];
                        }
                        colors[static_cast<std::size_t>(v)] = to;
                        q += static_cast<std::size_t>(delta);
                        improved = true;
                        break;
                    }
                }
            }
        }
        if (!have || q > best.q) {
            best = {q, Coloring(b, colors), false};
            have = true;
        }
        if (best.q == m) break;
    }
    return best;
}

Rational rainbow_bound(int a, int b) {
    if (a < 2 || a > b) throw Error(ErrorKind::invalid_argument, "rainbow bound needs 2 <= a <= b");
    BigInt fact = 1;
    for (int i = 2; i <= a; ++i) fact *= i;
    BigInt den = 1;
    for (int i = 0; i < a; ++i) den *= b;
    return Rational(binomial(b, a) * fact, den);
}

double power_mean_mass(const std::vector<int>& census, int a) {
    double n = 0;
    for (int x : census) n += x;
    if (n == 0) return 0.0;
    double s = 0.0;
    for (int x : census) s += std::pow(x / n, a);
    return s;
}

} // namespace cfree
