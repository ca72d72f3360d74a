#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "gramdet/partition.hpp"

namespace gramdet {

// Diagram with r upper and k lower points in which every upper point is
// connected to lower points only, and to at least one of them. The partition
// lives on r + k points: upper points 1..r, then lower points r+1..r+k.
// Planarity for the free categories is tested in the boundary-circular order
// upper-left -> upper-right -> lower-right -> lower-left.
struct epi {
    int r = 0;
    int k = 0;
    set_partition partition;  // on r + k points
    category cat = category::o_plus;

    int upper_legs() const { return r; }
};

namespace detail {

// diagram point (1-based) for a position on the cut boundary circle
inline int boundary_point(int pos, int r, int k) {  // pos is 1-based
    return pos <= r ? pos : (2 * r + k + 1 - pos);
}

}  // namespace detail

// All epi of P^r(k) for one fixed r; supported for the free categories
// o_plus, b_plus, s_plus.
inline std::vector<epi> enumerate_epi_r(category c, int r, int k) {
    if (c != category::o_plus && c != category::b_plus && c != category::s_plus)
        throw std::invalid_argument("enumerate_epi_r: unsupported category");
    if (r < 0 || k < 0 || r > k) throw std::invalid_argument("enumerate_epi_r: bad (r, k)");

    std::vector<epi> out;
    int total = r + k;
    if (total == 0) {
        out.push_back(epi{0, 0, set_partition(), c});
        return out;
    }
    detail::nc_generator gen;
    gen.total = total;
    gen.upper_count = r;
    switch (c) {
        case category::o_plus: gen.min_block = 2, gen.max_block = 2; break;
        case category::b_plus: gen.max_block = 2; break;
        default: break;
    }
    gen.emit = [&](const std::vector<int>& assign) {
        // positions are circular; relabel to the diagram's point numbering
        std::vector<int> diagram_assign(static_cast<size_t>(total));
        for (int pos = 1; pos <= total; ++pos)
            diagram_assign[static_cast<size_t>(detail::boundary_point(pos, r, k)) - 1] =
                assign[static_cast<size_t>(pos) - 1];
        out.push_back(epi{r, k, set_partition::from_assignment(diagram_assign), c});
    };
    gen.run();
    return out;
}

// All epi sigma in P^+(k) = union of P^r(k), grouped by upper-leg count.
inline std::map<int, std::vector<epi>> enumerate_epi(category c, int k) {
    std::map<int, std::vector<epi>> out;
    for (int r = 0; r <= k; ++r) {
        auto es = enumerate_epi_r(c, r, k);
        if (!es.empty()) out.emplace(r, std::move(es));
    }
    return out;
}

inline std::map<int, long long> epi_counts(category c, int k) {
    std::map<int, long long> counts;
    for (auto& [r, es] : enumerate_epi(c, k)) counts[r] = static_cast<long long>(es.size());
    return counts;
}

}  // namespace gramdet
