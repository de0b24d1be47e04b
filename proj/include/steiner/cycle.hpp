#pragma once

#include <optional>
#include <vector>

#include "steiner/greedy.hpp"
#include "steiner/instance.hpp"

namespace steiner {

struct qr_split {
    path_t q, r;
};

struct connector_result {
    enum class kind { direct, via, none };
    kind k = kind::none;
    int index = -1;  // the via interval
};

struct cycle_witness {
    path_t cutset;                      // ascending index order
    std::vector<path_t> islands;        // terminal-containing components after removal
};

struct cycle_outcome {
    std::optional<path_t> cycle;        // cyclic vertex order when one exists
    std::optional<cycle_witness> witness;
};

struct cycle_stats {
    int reads = 0;
    int peak_buffer = 0;
    std::vector<stream_event> events;
};

// Splits a greedy path into the two cycle arcs: r takes the first member,
// q the second, and each later member returns to the other arc whenever it
// touches that arc's end.
qr_split split_qr(const path_t& path, const instance& inst);

// Direct when the two arc ends touch; otherwise the first unconsumed
// interval that touches both ends.
connector_result find_connector(const path_t& q, const path_t& r, const instance& inst,
                                const std::vector<char>& consumed);

// Decides whether one cycle through every terminal exists. Returns either
// the cycle or an infeasibility witness: a cutset whose removal leaves
// more terminal-containing components than the cutset has members.
cycle_outcome solve_cycle(const instance& inst, std::optional<int> known_kappa, cycle_stats* stats);

inline cycle_outcome steiner_cycle(const instance& inst) {
    return solve_cycle(inst, std::nullopt, nullptr);
}

}  // namespace steiner
