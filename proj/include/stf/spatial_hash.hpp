#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "stf/vec.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace stf {

/// Uniform grid over cells of edge length equal to the interaction radius.
/// A radius-h query inspects the 3^D cell block around the query point, which
/// is a superset of the true neighbors; callers filter by actual distance.
template <int D>
class SpatialHash {
  public:
    void build(std::span<const Vec<D>> pos, double cell) {
        cell_ = cell;
        for (auto& [k, v] : cells_) v.clear();
        for (std::uint32_t i = 0; i < pos.size(); ++i)
            cells_[key_of(pos[i])].push_back(i);
        // drop cells that stayed empty so the map does not grow unboundedly
        std::erase_if(cells_, [](const auto& kv) { return kv.second.empty(); });
    }

    /// Appends all j != i with |pos[j] - pos[i]| < h to out, ascending by id.
    void gather(std::span<const Vec<D>> pos, std::uint32_t i, double h,
                std::vector<std::uint32_t>& out) const {
        const Vec<D>& pi = pos[i];
        const double h2 = h * h;
        std::int64_t base[D];
        for (int a = 0; a < D; ++a) base[a] = coord(pi[a]);
        iterate_block(base, [&](std::uint64_t k) {
            auto it = cells_.find(k);
            if (it == cells_.end()) return;
            for (std::uint32_t j : it->second) {
                if (j == i) continue;
                if (norm2(pos[j] - pi) < h2) out.push_back(j);
            }
        });
        std::sort(out.begin(), out.end());
    }

  private:
    std::int64_t coord(double x) const {
        return static_cast<std::int64_t>(std::floor(x / cell_));
    }

    std::uint64_t key_of(const Vec<D>& p) const {
        std::int64_t c[D];
        for (int a = 0; a < D; ++a) c[a] = coord(p[a]);
        return pack(c);
    }

    // Packing is injective for desk-scale coordinate ranges; a wrap would only
    // merge candidate lists, which the distance filter still handles correctly.
    static std::uint64_t pack(const std::int64_t (&c)[D]) {
        if constexpr (D == 2) {
            return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c[0])) << 32) |
                   static_cast<std::uint64_t>(static_cast<std::uint32_t>(c[1]));
        } else {
            std::uint64_t k = 0;
            for (int a = 0; a < D; ++a)
                k = (k << 21) | (static_cast<std::uint64_t>(c[a]) & 0x1FFFFF);
            return k;
        }
    }

    template <typename F>
    void iterate_block(const std::int64_t (&base)[D], F&& f) const {
        std::int64_t c[D];
        if constexpr (D == 2) {
            for (c[0] = base[0] - 1; c[0] <= base[0] + 1; ++c[0])
                for (c[1] = base[1] - 1; c[1] <= base[1] + 1; ++c[1]) f(pack(c));
        } else {
            for (c[0] = base[0] - 1; c[0] <= base[0] + 1; ++c[0])
                for (c[1] = base[1] - 1; c[1] <= base[1] + 1; ++c[1])
                    for (c[2] = base[2] - 1; c[2] <= base[2] + 1; ++c[2])
                        f(pack(c));
        }
    }

    double cell_ = 1.0;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> cells_;
};

/// Per-particle neighbor lists (sorted ascending), rebuilt whenever positions
/// change between phases. Kept as a reusable buffer to avoid reallocation.
struct NeighborLists {
    std::vector<std::vector<std::uint32_t>> nbr;

    void resize(std::size_t n) { nbr.resize(n); }
    std::size_t size() const { return nbr.size(); }
    const std::vector<std::uint32_t>& operator[](std::size_t i) const {
        return nbr[i];
    }
};

template <int D>
void build_neighbor_lists(SpatialHash<D>& hash, std::span<const Vec<D>> pos,
                          double h, NeighborLists& lists) {
    hash.build(pos, h);
    lists.resize(pos.size());
    const std::int64_t n = static_cast<std::int64_t>(pos.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        lists.nbr[static_cast<std::size_t>(i)].clear();
        hash.gather(pos, static_cast<std::uint32_t>(i), h,
                    lists.nbr[static_cast<std::size_t>(i)]);
    }
}

}  // namespace stf
