#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "steiner/greedy.hpp"
#include "steiner/instance.hpp"

namespace steiner {

struct oracle_limits {
    int max_n = 15;
    long long max_states = 250'000'000;
};

struct oracle_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact minimum number of vertex-disjoint paths covering every terminal,
// by subset dynamic programming over path-realizable vertex sets.
int brute_pi_s(const instance& inst, const oracle_limits& lim = {});

// Whether a single cycle (three or more distinct vertices) through every
// terminal exists, by path DP anchored at the first terminal.
bool brute_cycle_exists(const instance& inst, const oracle_limits& lim = {});

// Checks a cover lower-bound witness: removing the cutset must leave
// exactly s_island_count terminal-containing components, and that count
// minus the cutset size must be at least claimed_k.
bool verify_cover_witness(const instance& inst, long long claimed_k, const path_t& cutset,
                          std::size_t s_island_count);

// Checks a no-cycle witness: the islands must be exactly the
// terminal-containing components left by removing the cutset, and there
// must be strictly more of them than cutset members.
bool verify_cycle_witness(const instance& inst, const path_t& cutset,
                          const std::vector<path_t>& islands);

}  // namespace steiner
