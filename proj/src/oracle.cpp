#include "steiner/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace steiner {

namespace {

void check_size(const instance& inst, const oracle_limits& lim, long long states) {
    if (inst.n() > lim.max_n)
        throw oracle_limit_error("oracle limit: instance has more than " +
                                 std::to_string(lim.max_n) + " intervals");
    if (states > lim.max_states)
        throw oracle_limit_error("oracle limit: state count " + std::to_string(states) +
                                 " exceeds budget");
}

std::vector<std::uint32_t> adjacency(const instance& inst) {
    std::vector<std::uint32_t> adj(inst.n(), 0);
    for (int i = 0; i < inst.n(); ++i)
        for (int j = i + 1; j < inst.n(); ++j)
            if (intersects(inst.items[i], inst.items[j])) {
                adj[i] |= 1u << j;
                adj[j] |= 1u << i;
            }
    return adj;
}

std::uint32_t terminal_mask(const instance& inst) {
    std::uint32_t m = 0;
    for (int i = 0; i < inst.n(); ++i)
        if (inst.is_terminal[i]) m |= 1u << i;
    return m;
}

// ends[mask] = vertices that can terminate a simple path visiting exactly mask
std::vector<std::uint32_t> path_ends(int n, const std::vector<std::uint32_t>& adj,
                                     std::uint32_t seed_mask) {
    std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
    ends[seed_mask] = seed_mask;
    for (std::uint32_t mask = seed_mask; mask < (1u << n); ++mask) {
        std::uint32_t e = ends[mask];
        if (!e) continue;
        for (int u = 0; u < n; ++u) {
            if (mask & (1u << u)) continue;
            if (adj[u] & e) ends[mask | (1u << u)] |= 1u << u;
        }
    }
    return ends;
}

}  // namespace

int brute_pi_s(const instance& inst, const oracle_limits& lim) {
    int n = inst.n();
    long long states = 1;
    for (int i = 0; i < n && i <= 20; ++i) states *= 3;  // submask enumeration cost
    check_size(inst, lim, states);
    auto adj = adjacency(inst);
    std::uint32_t full = 1u << n;
    std::vector<std::uint32_t> ends(full, 0);
    for (int v = 0; v < n; ++v) ends[1u << v] = 1u << v;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        std::uint32_t e = ends[mask];
        if (!e) continue;
        for (int u = 0; u < n; ++u) {
            if (mask & (1u << u)) continue;
            if (adj[u] & e) ends[mask | (1u << u)] |= 1u << u;
        }
    }
    std::vector<int> best(full, n + 1);
    best[0] = 0;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        std::uint32_t low = mask & (~mask + 1);
        for (std::uint32_t sub = mask; sub; sub = (sub - 1) & mask) {
            if (!(sub & low) || !ends[sub]) continue;
            if (best[mask ^ sub] + 1 < best[mask]) best[mask] = best[mask ^ sub] + 1;
        }
    }
    std::uint32_t smask = terminal_mask(inst);
    int ans = n + 1;
    for (std::uint32_t mask = 0; mask < full; ++mask)
        if ((mask & smask) == smask && best[mask] < ans) ans = best[mask];
    return ans;
}

bool brute_cycle_exists(const instance& inst, const oracle_limits& lim) {
    int n = inst.n();
    check_size(inst, lim, (1LL << n) * n);
    std::uint32_t smask = terminal_mask(inst);
    int a = std::countr_zero(smask);
    auto adj = adjacency(inst);
    auto ends = path_ends(n, adj, 1u << a);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if ((mask & smask) != smask || std::popcount(mask) < 3) continue;
        if (ends[mask] & adj[a] & ~(1u << a)) return true;
    }
    return false;
}

namespace {

bool valid_removal(const instance& inst, const path_t& cutset) {
    std::vector<char> seen(inst.n(), 0);
    for (int i : cutset) {
        if (i < 0 || i >= inst.n() || seen[i]) return false;
        seen[i] = 1;
    }
    return true;
}

}  // namespace

bool verify_cover_witness(const instance& inst, long long claimed_k, const path_t& cutset,
                          std::size_t s_island_count) {
    if (!valid_removal(inst, cutset)) return false;
    std::size_t g = 0;
    for (const auto& comp : components_after_removal(inst, cutset))
        for (int i : comp)
            if (inst.is_terminal[i]) {
                ++g;
                break;
            }
    if (g != s_island_count) return false;
    return static_cast<long long>(g) - static_cast<long long>(cutset.size()) >= claimed_k;
}

bool verify_cycle_witness(const instance& inst, const path_t& cutset,
                          const std::vector<path_t>& islands) {
    if (!valid_removal(inst, cutset)) return false;
    std::vector<path_t> comps;
    for (auto& comp : components_after_removal(inst, cutset))
        for (int i : comp)
            if (inst.is_terminal[i]) {
                comps.push_back(std::move(comp));
                break;
            }
    std::vector<path_t> claimed = islands;
    for (path_t& isl : claimed) std::sort(isl.begin(), isl.end());
    std::sort(claimed.begin(), claimed.end());
    std::sort(comps.begin(), comps.end());
    return comps == claimed && comps.size() > cutset.size();
}

}  // namespace steiner
