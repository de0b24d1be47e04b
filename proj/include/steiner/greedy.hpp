#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "steiner/instance.hpp"
#include "steiner/streaming.hpp"

namespace steiner {

using path_t = std::vector<int>;  // interval indices in path order

struct greedy_trace {
    path_t path;
    // (path member, intervals neglected while it was the end), in first-neglect order
    std::vector<std::pair<int, path_t>> neglected;
    int start = -1;
};

struct decomposition {
    path_t covers;                 // ascending path position
    std::vector<path_t> islands;   // segments between consecutive covers
    path_t exceed;                 // members whose right endpoint passes the path end's
};

struct cover_witness {
    path_t cutset;                  // ascending index order
    std::size_t s_island_count = 0; // terminal-containing components after removing the cutset
};

struct steiner_cover {
    std::vector<path_t> paths;
    cover_witness witness;
};

struct cover_stats {
    int reads = 0;
    int peak_buffer = 0;
    std::vector<stream_event> events;
    std::vector<greedy_trace> runs;
};

// Plain greedy path from the minimum-right-endpoint interval: repeatedly
// extend by the unused neighbor of the end with the smallest right
// endpoint. Quadratic reference implementation.
path_t gp(const instance& inst);

// Terminal-aware greedy over indices >= start: a non-terminal neighbor
// ending strictly left of the current end is neglected instead of placed,
// and the walk stops before consuming a non-neglectable candidate once
// every terminal in range is covered. Quadratic reference implementation.
greedy_trace gp_s(const instance& inst, int start);

// Cover members of a greedy path: the latest member out-reaching the
// current segment end, iterated leftward. Islands are the segments in
// between.
decomposition decompose(const path_t& path, const instance& inst);

// Cutset = union of per-path covers, minus members that separate nothing
// (unread intervals can bridge around a cut); island count recomputed from
// scratch.
cover_witness build_cover_witness(const instance& inst, const std::vector<path_t>& paths);

// Witness taken over the maximal continuation of the greedy walk: a pass
// that keeps consuming past full coverage, so intervals the stopping walk
// never reads end up on a path instead of bridging around its cutset.
cover_witness maximal_cover_witness(const instance& inst);

// Iterated terminal-aware greedy, run through the streaming engine (with
// an optional buffer budget). Produces the path cover and its optimality
// witness; per-run traces and stream accounting go to stats if given.
steiner_cover solve_cover(const instance& inst, std::optional<int> known_kappa, cover_stats* stats);

inline steiner_cover steiner_path_cover(const instance& inst) {
    return solve_cover(inst, std::nullopt, nullptr);
}

}  // namespace steiner
