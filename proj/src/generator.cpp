#include "steiner/generator.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

namespace steiner {

instance generate(const gen_params& p) {
    if (p.n < 1) throw std::invalid_argument("generate: n must be positive");
    if (p.coord_range < 1) throw std::invalid_argument("generate: coord_range must be positive");
    if (p.max_len < 1) throw std::invalid_argument("generate: max_len must be positive");
    if (p.frac_den < 1 || p.frac_num < 1 || p.frac_num > p.frac_den)
        throw std::invalid_argument("generate: terminal fraction must lie in (0, 1]");

    std::mt19937_64 rng(p.seed);
    std::vector<interval> raw;
    raw.reserve(p.n);
    for (int i = 0; i < p.n; ++i) {
        // modulo draws keep the sequence identical across standard libraries
        long long l = static_cast<long long>(rng() % static_cast<std::uint64_t>(p.coord_range));
        long long len = 1 + static_cast<long long>(rng() % static_cast<std::uint64_t>(p.max_len));
        raw.push_back({"", rational(l), rational(l + len)});
    }
    std::stable_sort(raw.begin(), raw.end(),
                     [](const interval& a, const interval& b) { return a.r < b.r; });
    for (int i = 0; i < p.n; ++i) raw[i].id = "p" + std::to_string(i + 1);

    long long m = (static_cast<long long>(p.frac_num) * p.n + p.frac_den - 1) / p.frac_den;
    std::vector<int> idx(p.n);
    for (int i = 0; i < p.n; ++i) idx[i] = i;
    for (long long j = 0; j < m; ++j) {
        long long k = j + static_cast<long long>(rng() % static_cast<std::uint64_t>(p.n - j));
        std::swap(idx[j], idx[k]);
    }
    std::vector<int> chosen(idx.begin(), idx.begin() + m);
    std::sort(chosen.begin(), chosen.end());
    std::vector<std::string> terminal_ids;
    for (int i : chosen) terminal_ids.push_back(raw[i].id);
    return instance::build(std::move(raw), terminal_ids);
}

}  // namespace steiner
