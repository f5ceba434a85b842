#include "cfree/kernels/max_cut.hpp"

#include <bit>

#include <omp.h>

#include "cfree/error.hpp"

namespace cfree::kernels {

namespace {

void check_size(const std::vector<std::uint64_t>& adjacency) {
    if (adjacency.size() > static_cast<std::size_t>(kMaxCutVertices)) {
        throw Error(ErrorKind::state_space_too_large, "exact max cut supports at most 63 vertices");
    }
}

std::size_t cut_of(const std::vector<std::uint64_t>& adjacency, std::uint64_t side) {
    std::size_t cut = 0;
    for (std::size_t v = 0; v < adjacency.size(); ++v) {
        if (side >> v & 1) cut += static_cast<std::size_t>(std::popcount(adjacency[v] & ~side));
    }
    return cut;
}

bool better(std::size_t cut, std::uint64_t mask, const CutResult& r) {
    return cut > r.size || (cut == r.size && mask < r.mask);
}

} // namespace

namespace serial {

CutResult max_cut(const std::vector<std::uint64_t>& adjacency, BudgetMeter& meter) {
    check_size(adjacency);
    const std::size_t n = adjacency.size();
    CutResult best;
    if (n <= 1) return best;
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    for (std::uint64_t i = 0; i < total; ++i) {
        if ((i & 0xFFF) == 0 && !meter.charge(0x1000)) return best;
        std::uint64_t mask = i << 1;
        std::size_t cut = cut_of(adjacency, mask);
        if (cut > best.size) best = {cut, mask};
    }
    return best;
}

} // namespace serial

namespace parallel {

CutResult max_cut(const std::vector<std::uint64_t>& adjacency, BudgetMeter& meter) {
    check_size(adjacency);
    const int n = static_cast<int>(adjacency.size());
    if (n <= 1) return {};
    const int free_bits = n - 1;
    const int high = free_bits < 8 ? free_bits : 8;
    const int low = free_bits - high;
    const std::uint64_t blocks = std::uint64_t{1} << high;
    const std::uint64_t steps = std::uint64_t{1} << low;
    std::vector<CutResult> per_block(blocks);

#pragma omp parallel for schedule(dynamic, 1)
    for (std::uint64_t blk = 0; blk < blocks; ++blk) {
        if (!meter.charge(steps)) continue;
        std::uint64_t side = blk << (low + 1);
        std::size_t cut = cut_of(adjacency, side);
        CutResult local{cut, side};
        for (std::uint64_t i = 1; i < steps; ++i) {
            const int v = std::countr_zero(i) + 1;  // Gray code flips bit ctz(i) of the low part
            const std::uint64_t bit = std::uint64_t{1} << v;
            const std::uint64_t adj = adjacency[static_cast<std::size_t>(v)];
            const std::uint64_t same = (side & bit) ? side : ~side;
            const auto to_same = static_cast<std::size_t>(std::popcount(adj & same));
            const auto to_other = static_cast<std::size_t>(std::popcount(adj & ~same));
            cut = cut + to_same - to_other;
            side ^= bit;
            if (better(cut, side, local)) local = {cut, side};
        }
        per_block[blk] = local;
    }
    CutResult best = per_block[0];
    for (const auto& r : per_block) {
        if (better(r.size, r.mask, best)) best = r;
    }
    return best;
}

} // namespace parallel

} // namespace cfree::kernels
