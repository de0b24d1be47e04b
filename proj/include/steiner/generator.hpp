#pragma once

#include <cstdint>

#include "steiner/instance.hpp"

namespace steiner {

struct gen_params {
    int n = 10;
    std::uint64_t seed = 1;
    long long coord_range = 100;  // left endpoints drawn from [0, coord_range)
    long long max_len = 10;       // lengths drawn from [1, max_len]
    int frac_num = 1;             // ceil(n * frac_num / frac_den) terminals
    int frac_den = 2;
};

// Deterministic random instance: integer endpoints, intervals renamed
// p1..pn in sorted order, terminals a uniform sample without replacement.
// Identical parameters give byte-identical instances on every platform.
instance generate(const gen_params& p);

}  // namespace steiner
