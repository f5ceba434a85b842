#include "cfree/kernels/coloring_scan.hpp"

#include <cmath>
#include <limits>

#include <omp.h>

#include "cfree/error.hpp"

namespace cfree::kernels {

namespace {

constexpr std::uint32_t kMaxKeySpace = 1u << 24;
constexpr std::uint64_t kDenseCensusLimit = 1u << 22;

std::uint64_t pow_saturating(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        r *= base;
    }
    return r;
}

// Odometer over a block of colorings with incremental bookkeeping.
class Walker {
public:
    Walker(const ScanProblem& p, const DeviationTable* table, const std::vector<char>* member)
        : p_(p), table_(table), member_(member),
          colors_(static_cast<std::size_t>(p.n), 0), keys_(p.m(), 0),
          counts_(table ? p.key_space : 0, 0) {}

    void reset(std::uint64_t index) {
        colors_ = decode_coloring(index, p_.n, p_.b);
        keys_ = keys_of(p_, colors_);
        q_ = 0;
        if (table_) {
            std::fill(counts_.begin(), counts_.end(), 0);
            std::vector<int> census(static_cast<std::size_t>(p_.b), 0);
            for (int c : colors_) ++census[static_cast<std::size_t>(c)];
            census_code_ = table_->census_code(census);
        }
        for (std::uint32_t k : keys_) {
            if (table_) ++counts_[k];
            if (member_) q_ += static_cast<std::size_t>((*member_)[k]);
        }
    }

    // Advances to the next coloring; only digits at positions >= floor move.
    void step(int floor) {
        for (int v = p_.n - 1; v >= floor; --v) {
            int old = colors_[static_cast<std::size_t>(v)];
            if (old + 1 < p_.b) {
                recolor(v, old, old + 1);
                return;
            }
            recolor(v, old, 0);
        }
    }

    std::size_t q() const { return q_; }

    // Largest deviation over slots for the current coloring.
    void deviation(double& best, std::size_t& slot, std::size_t& count, double& expected) const {
        const double* row = table_->row(census_code_);
        best = -1.0;
        for (std::size_t s = 0; s < table_->slots(); ++s) {
            std::size_t c = counts_[table_->slot_key(s)];
            double dev = std::fabs(static_cast<double>(c) - row[s]);
            if (dev > best) {
                best = dev;
                slot = s;
                count = c;
                expected = row[s];
            }
        }
    }

private:
    void recolor(int v, int from, int to) {
        colors_[static_cast<std::size_t>(v)] = to;
        if (table_) census_code_ = census_code_ - table_->census_weight(from) + table_->census_weight(to);
        const auto a = static_cast<std::uint32_t>(p_.a);
        for (std::uint32_t slot : p_.incidence[static_cast<std::size_t>(v)]) {
            std::uint32_t e = slot / a;
            std::uint32_t pos = slot % a;
            std::uint32_t old_key = keys_[e];
            std::uint32_t new_key = old_key - p_.weight[static_cast<std::size_t>(from) * a + pos] +
                                    p_.weight[static_cast<std::size_t>(to) * a + pos];
            keys_[e] = new_key;
            if (table_) {
                --counts_[old_key];
                ++counts_[new_key];
            }
            if (member_) {
                q_ -= static_cast<std::size_t>((*member_)[old_key]);
                q_ += static_cast<std::size_t>((*member_)[new_key]);
            }
        }
    }

    const ScanProblem& p_;
    const DeviationTable* table_;
    const std::vector<char>* member_;
    std::vector<int> colors_;
    std::vector<std::uint32_t> keys_;
    std::vector<std::uint32_t> counts_;
    std::uint64_t census_code_ = 0;
    std::size_t q_ = 0;
};

// Prefix length giving enough blocks to balance threads.
int prefix_length(const ScanProblem& p) {
    int t = 0;
    std::uint64_t blocks = 1;
    while (t < p.n && blocks < 256) {
        blocks *= static_cast<std::uint64_t>(p.b);
        ++t;
    }
    return t;
}

void check_space(const ScanProblem& p) {
    if (p.coloring_count() == std::numeric_limits<std::uint64_t>::max()) {
        throw Error(ErrorKind::state_space_too_large, "coloring space overflows 64 bits");
    }
}

} // namespace

std::uint64_t ScanProblem::coloring_count() const { return pow_saturating(static_cast<std::uint64_t>(b), n); }

ScanProblem make_problem(int n, int b, int a, KeyKind kind, const std::vector<Hyperedge>& edges) {
    if (b < 1 || a < 1 || n < 0) throw Error(ErrorKind::invalid_argument, "bad scan dimensions");
    ScanProblem p;
    p.n = n;
    p.b = b;
    p.a = a;
    p.kind = kind;
    std::uint64_t space = kind == KeyKind::multiset ? pow_saturating(static_cast<std::uint64_t>(a + 1), b)
                                                    : pow_saturating(static_cast<std::uint64_t>(b), a);
    if (space > kMaxKeySpace) {
        throw Error(ErrorKind::state_space_too_large, "too many color patterns for a dense count table");
    }
    p.key_space = static_cast<std::uint32_t>(space);
    p.weight.resize(static_cast<std::size_t>(b) * static_cast<std::size_t>(a));
    for (int c = 0; c < b; ++c) {
        for (int pos = 0; pos < a; ++pos) {
            p.weight[static_cast<std::size_t>(c * a + pos)] =
                kind == KeyKind::multiset
                    ? static_cast<std::uint32_t>(pow_saturating(static_cast<std::uint64_t>(a + 1), c))
                    : static_cast<std::uint32_t>(c) *
                          static_cast<std::uint32_t>(pow_saturating(static_cast<std::uint64_t>(b), pos));
        }
    }
    p.incidence.resize(static_cast<std::size_t>(n));
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (static_cast<int>(edges[e].size()) != a) throw Error(ErrorKind::invalid_input, "non-uniform hyperedge");
        for (int pos = 0; pos < a; ++pos) {
            Vertex v = edges[e][static_cast<std::size_t>(pos)];
            p.flat.push_back(v);
            p.incidence[static_cast<std::size_t>(v)].push_back(static_cast<std::uint32_t>(e * static_cast<std::size_t>(a)) +
                                                               static_cast<std::uint32_t>(pos));
        }
    }
    return p;
}

std::vector<std::uint32_t> keys_of(const ScanProblem& p, const std::vector<int>& colors) {
    std::vector<std::uint32_t> keys(p.m(), 0);
    for (std::size_t e = 0; e < keys.size(); ++e) {
        std::uint32_t k = 0;
        for (int pos = 0; pos < p.a; ++pos) {
            Vertex v = p.flat[e * static_cast<std::size_t>(p.a) + static_cast<std::size_t>(pos)];
            k += p.weight[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)] * p.a + pos)];
        }
        keys[e] = k;
    }
    return keys;
}

std::vector<int> decode_coloring(std::uint64_t index, int n, int b) {
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    for (int v = n - 1; v >= 0; --v) {
        colors[static_cast<std::size_t>(v)] = static_cast<int>(index % static_cast<std::uint64_t>(b));
        index /= static_cast<std::uint64_t>(b);
    }
    return colors;
}

// ---------------------------------------------------------------------------

namespace serial {

BestResult best(const ScanProblem& p, const std::vector<char>& member) {
    check_space(p);
    BestResult out;
    bool any = false;
    const std::uint64_t total = p.coloring_count();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        auto keys = keys_of(p, decode_coloring(idx, p.n, p.b));
        std::size_t q = 0;
        for (auto k : keys) q += static_cast<std::size_t>(member[k]);
        if (!any || q > out.q) {
            out = {q, idx};
            any = true;
        }
    }
    return out;
}

} // namespace serial

namespace parallel {

BestResult best(const ScanProblem& p, const std::vector<char>& member) {
    check_space(p);
    const int t = prefix_length(p);
    const std::uint64_t blocks = pow_saturating(static_cast<std::uint64_t>(p.b), t);
    const std::uint64_t block_size = pow_saturating(static_cast<std::uint64_t>(p.b), p.n - t);
    std::vector<BestResult> per_block(blocks);
#pragma omp parallel
    {
        Walker walker(p, nullptr, &member);
#pragma omp for schedule(dynamic, 1)
        for (std::uint64_t blk = 0; blk < blocks; ++blk) {
            std::uint64_t first = blk * block_size;
            walker.reset(first);
            BestResult local{walker.q(), first};
            for (std::uint64_t i = 1; i < block_size; ++i) {
                walker.step(t);
                if (walker.q() > local.q) local = {walker.q(), first + i};
            }
            per_block[blk] = local;
        }
    }
    BestResult out = per_block[0];
    for (const auto& r : per_block) {
        if (r.q > out.q) out = r;
    }
    return out;
}

} // namespace parallel

// ---------------------------------------------------------------------------

DeviationTable::DeviationTable(const ScanProblem& p, std::vector<std::uint32_t> slot_keys,
                               const Expectation& expected)
    : slot_keys_(std::move(slot_keys)) {
    census_weight_.resize(static_cast<std::size_t>(p.b));
    for (int j = 0; j < p.b; ++j) {
        census_weight_[static_cast<std::size_t>(j)] = pow_saturating(static_cast<std::uint64_t>(p.n + 1), j);
    }
    const std::uint64_t span = pow_saturating(static_cast<std::uint64_t>(p.n + 1), p.b);
    if (span == std::numeric_limits<std::uint64_t>::max()) {
        throw Error(ErrorKind::state_space_too_large, "census code overflows 64 bits");
    }
    if (span <= kDenseCensusLimit) dense_.assign(span, -1);

    // compositions of n into b parts
    std::vector<int> census(static_cast<std::size_t>(p.b), 0);
    std::int32_t rows = 0;
    std::function<void(int, int)> rec = [&](int j, int left) {
        if (j == p.b - 1) {
            census[static_cast<std::size_t>(j)] = left;
            std::uint64_t code = census_code(census);
            if (!dense_.empty()) {
                dense_[code] = rows;
            } else {
                sparse_.emplace(code, rows);
            }
            ++rows;
            for (std::size_t s = 0; s < slot_keys_.size(); ++s) expected_.push_back(expected(census, s));
            return;
        }
        for (int x = left; x >= 0; --x) {
            census[static_cast<std::size_t>(j)] = x;
            rec(j + 1, left - x);
        }
    };
    if (p.b >= 1) rec(0, p.n);
}

std::uint64_t DeviationTable::census_code(const std::vector<int>& census) const {
    std::uint64_t code = 0;
    for (std::size_t j = 0; j < census.size(); ++j) code += census_weight_[j] * static_cast<std::uint64_t>(census[j]);
    return code;
}

const double* DeviationTable::row(std::uint64_t code) const {
    std::int32_t r = !dense_.empty() ? dense_[code] : sparse_.at(code);
    return expected_.data() + static_cast<std::size_t>(r) * slot_keys_.size();
}

WorstResult deviation_of(const ScanProblem& p, const DeviationTable& t, const std::vector<int>& colors) {
    std::vector<std::uint32_t> counts(p.key_space, 0);
    for (auto k : keys_of(p, colors)) ++counts[k];
    std::vector<int> census(static_cast<std::size_t>(p.b), 0);
    for (int c : colors) ++census[static_cast<std::size_t>(c)];
    const double* row = t.row(t.census_code(census));
    WorstResult out;
    for (std::size_t s = 0; s < t.slots(); ++s) {
        std::size_t c = counts[t.slot_key(s)];
        double dev = std::fabs(static_cast<double>(c) - row[s]);
        if (dev > out.deviation) out = {dev, 0, s, c, row[s]};
    }
    return out;
}

namespace serial {

WorstResult worst_deviation(const ScanProblem& p, const DeviationTable& t) {
    check_space(p);
    WorstResult out;
    const std::uint64_t total = p.coloring_count();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        WorstResult r = deviation_of(p, t, decode_coloring(idx, p.n, p.b));
        if (r.deviation > out.deviation) {
            out = r;
            out.index = idx;
        }
    }
    return out;
}

} // namespace serial

namespace parallel {

WorstResult worst_deviation(const ScanProblem& p, const DeviationTable& t) {
    check_space(p);
    const int pre = prefix_length(p);
    const std::uint64_t blocks = pow_saturating(static_cast<std::uint64_t>(p.b), pre);
    const std::uint64_t block_size = pow_saturating(static_cast<std::uint64_t>(p.b), p.n - pre);
    std::vector<WorstResult> per_block(blocks);
#pragma omp parallel
    {
        Walker walker(p, &t, nullptr);
#pragma omp for schedule(dynamic, 1)
        for (std::uint64_t blk = 0; blk < blocks; ++blk) {
            std::uint64_t first = blk * block_size;
            walker.reset(first);
            WorstResult local;
            for (std::uint64_t i = 0; i < block_size; ++i) {
                if (i > 0) walker.step(pre);
                double dev = 0.0;
                std::size_t slot = 0;
                std::size_t count = 0;
                double expected = 0.0;
                walker.deviation(dev, slot, count, expected);
                if (dev > local.deviation) local = {dev, first + i, slot, count, expected};
            }
            per_block[blk] = local;
        }
    }
    WorstResult out;
    for (const auto& r : per_block) {
        if (r.deviation > out.deviation) out = r;
    }
    return out;
}

} // namespace parallel

} // namespace cfree::kernels
