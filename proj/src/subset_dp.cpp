#include "eglocal/detail/subset_dp.hpp"

#include <bit>
#include <stdexcept>

namespace eglocal::detail {

bool HamTables::has_cycle(const Graph& g, std::uint32_t mask) const {
    if (std::popcount(mask) < 3) return false;
    const Vertex low = std::countr_zero(mask);
    return (low_ends[mask] & static_cast<std::uint32_t>(g.row(low))) != 0;
}

void build_ham_tables(const Graph& g, HamTables& out) {
    const int n = g.order();
    if (n > 30) throw std::invalid_argument("subset tables need n <= 30");
    const std::size_t size = std::size_t{1} << n;
    out.n = n;
    out.ends.assign(size, 0);
    out.low_ends.assign(size, 0);

    std::uint32_t adj[32];
    for (int v = 0; v < n; ++v) adj[v] = static_cast<std::uint32_t>(g.row(v));

    for (std::uint32_t mask = 1; mask < size; ++mask) {
        if ((mask & (mask - 1)) == 0) {
            out.ends[mask] = mask;
            out.low_ends[mask] = mask;
            continue;
        }
        const std::uint32_t low_bit = mask & (~mask + 1);
        std::uint32_t ends = 0;
        std::uint32_t low_ends = 0;
        for (std::uint32_t rest_bits = mask; rest_bits; rest_bits &= rest_bits - 1) {
            const int e = std::countr_zero(rest_bits);
            const std::uint32_t bit = std::uint32_t{1} << e;
            const std::uint32_t rest = mask ^ bit;
            if (out.ends[rest] & adj[e]) ends |= bit;
            if (bit != low_bit && (out.low_ends[rest] & adj[e])) low_ends |= bit;
        }
        out.ends[mask] = ends;
        out.low_ends[mask] = low_ends;
    }
}

void build_paths_from(const Graph& g, Vertex start, std::vector<std::uint32_t>& out) {
    const int n = g.order();
    if (n > 30) throw std::invalid_argument("subset tables need n <= 30");
    const std::size_t size = std::size_t{1} << n;
    out.assign(size, 0);
    std::uint32_t adj[32];
    for (int v = 0; v < n; ++v) adj[v] = static_cast<std::uint32_t>(g.row(v));

    const std::uint32_t sbit = std::uint32_t{1} << start;
    out[sbit] = sbit;
    for (std::uint32_t mask = 1; mask < size; ++mask) {
        if (!(mask & sbit) || mask == sbit) continue;
        std::uint32_t ends = 0;
        for (std::uint32_t rest_bits = mask ^ sbit; rest_bits; rest_bits &= rest_bits - 1) {
            const int e = std::countr_zero(rest_bits);
            const std::uint32_t bit = std::uint32_t{1} << e;
            if (out[mask ^ bit] & adj[e]) ends |= bit;
        }
        out[mask] = ends;
    }
}

}  // namespace eglocal::detail
