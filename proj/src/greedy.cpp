#include "steiner/greedy.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace steiner {

path_t gp(const instance& inst) {
    if (inst.n() == 0) return {};
    std::vector<char> used(inst.n(), 0);
    path_t path{0};
    used[0] = 1;
    int end = 0;
    for (;;) {
        // smallest index = smallest (right endpoint, input order)
        int next = -1;
        for (int i = 0; i < inst.n(); ++i) {
            if (used[i] || !intersects(inst.items[i], inst.items[end])) continue;
            next = i;
            break;
        }
        if (next < 0) break;
        used[next] = 1;
        path.push_back(next);
        end = next;
    }
    return path;
}

greedy_trace gp_s(const instance& inst, int start) {
    if (start < 0 || start >= inst.n()) throw std::out_of_range("gp_s: start index out of range");
    greedy_trace tr;
    tr.start = start;
    std::vector<char> gone(inst.n(), 0);  // used or neglected
    tr.path.push_back(start);
    gone[start] = 1;
    int end = start;
    int pool_terminals = 0;
    for (int i = start; i < inst.n(); ++i)
        if (inst.is_terminal[i]) ++pool_terminals;
    int covered = inst.is_terminal[start] ? 1 : 0;
    std::unordered_map<int, std::size_t> slot;  // path member -> entry in tr.neglected
    for (;;) {
        int next = -1;
        for (int i = start; i < inst.n(); ++i) {
            if (gone[i] || !intersects(inst.items[i], inst.items[end])) continue;
            next = i;
            break;
        }
        if (next < 0) break;
        if (!inst.is_terminal[next] && inst.items[next].r < inst.items[end].r) {
            gone[next] = 1;
            auto it = slot.find(end);
            if (it == slot.end()) {
                it = slot.emplace(end, tr.neglected.size()).first;
                tr.neglected.push_back({end, {}});
            }
            tr.neglected[it->second].second.push_back(next);
            continue;
        }
        if (covered == pool_terminals) break;  // nothing missing: stop before a real extension
        gone[next] = 1;
        tr.path.push_back(next);
        if (inst.is_terminal[next]) ++covered;
        end = next;
    }
    return tr;
}

decomposition decompose(const path_t& path, const instance& inst) {
    decomposition d;
    if (path.empty()) return d;
    int l = static_cast<int>(path.size());
    const rational& end_r = inst.items[path[l - 1]].r;
    for (int i = 0; i < l - 1; ++i)
        if (inst.items[path[i]].r > end_r) d.exceed.push_back(path[i]);
    // latest member out-reaching the current segment end, iterated leftward;
    // scan ranges are disjoint, so the whole pass is linear
    std::vector<int> cover_pos;
    int end_pos = l - 1;
    while (end_pos > 0) {
        int m = -1;
        for (int i = end_pos - 1; i >= 0; --i) {
            if (inst.items[path[i]].r > inst.items[path[end_pos]].r) {
                m = i;
                break;
            }
        }
        if (m < 0) break;
        cover_pos.push_back(m);
        end_pos = m - 1;
    }
    std::reverse(cover_pos.begin(), cover_pos.end());
    int prev = 0;
    for (int cp : cover_pos) {
        d.covers.push_back(path[cp]);
        d.islands.emplace_back(path.begin() + prev, path.begin() + cp);
        prev = cp + 1;
    }
    d.islands.emplace_back(path.begin() + prev, path.end());
    return d;
}

cover_witness build_cover_witness(const instance& inst, const std::vector<path_t>& paths) {
    cover_witness w;
    for (const path_t& p : paths) {
        decomposition d = decompose(p, inst);
        w.cutset.insert(w.cutset.end(), d.covers.begin(), d.covers.end());
    }
    std::sort(w.cutset.begin(), w.cutset.end());
    w.cutset.erase(std::unique(w.cutset.begin(), w.cutset.end()), w.cutset.end());
    auto s_count = [&](const path_t& cut) {
        std::size_t g = 0;
        for (const auto& comp : components_after_removal(inst, cut))
            for (int i : comp)
                if (inst.is_terminal[i]) { ++g; break; }
        return g;
    };
    std::size_t g = s_count(w.cutset);
    // the walk stops once every terminal is reached, so intervals it never
    // read can bridge around a cut member; a member whose removal from the
    // cutset leaves the island count unchanged separates nothing and is
    // dropped until the count matches paths + cuts
    while (g < paths.size() + w.cutset.size()) {
        bool dropped = false;
        for (std::size_t t = 0; t < w.cutset.size(); ++t) {
            path_t trial = w.cutset;
            trial.erase(trial.begin() + t);
            if (s_count(trial) == g) {
                w.cutset = std::move(trial);
                dropped = true;
                break;
            }
        }
        if (!dropped) break;
    }
    w.s_island_count = g;
    return w;
}

cover_witness maximal_cover_witness(const instance& inst) {
    stream_engine::config cfg;
    cfg.mode = stream_mode::cover;
    cfg.run_to_end = true;
    cfg.record_log = false;
    stream_engine eng(cfg, inst.terminal_count);
    for (int i = 0; i < inst.n(); ++i) eng.push(inst.items[i], i, inst.is_terminal[i] != 0);
    eng.finish();
    return build_cover_witness(inst, eng.paths());
}

steiner_cover solve_cover(const instance& inst, std::optional<int> known_kappa, cover_stats* stats) {
    stream_engine::config cfg;
    cfg.mode = stream_mode::cover;
    cfg.known_kappa = known_kappa;
    cfg.record_log = stats != nullptr;
    stream_engine eng(cfg, inst.terminal_count);
    for (int i = 0; i < inst.n(); ++i) {
        eng.push(inst.items[i], i, inst.is_terminal[i] != 0);
        if (eng.done()) break;
    }
    eng.finish();

    steiner_cover out;
    out.paths = eng.paths();
    out.witness = maximal_cover_witness(inst);

    if (stats) {
        stats->reads = eng.reads();
        stats->peak_buffer = eng.peak_buffer();
        stats->events = eng.events();
        stats->runs.clear();
        std::vector<int> run_of(inst.n(), -1);
        std::vector<std::unordered_map<int, std::size_t>> slots(out.paths.size());
        for (std::size_t k = 0; k < out.paths.size(); ++k) {
            greedy_trace tr;
            tr.path = out.paths[k];
            tr.start = out.paths[k].front();
            for (int i : out.paths[k]) run_of[i] = static_cast<int>(k);
            stats->runs.push_back(std::move(tr));
        }
        for (const auto& [end_idx, neg_idx] : eng.neglect_log()) {
            std::size_t run = static_cast<std::size_t>(run_of[end_idx]);
            auto& tr = stats->runs[run];
            auto it = slots[run].find(end_idx);
            if (it == slots[run].end()) {
                it = slots[run].emplace(end_idx, tr.neglected.size()).first;
                tr.neglected.push_back({end_idx, {}});
            }
            tr.neglected[it->second].second.push_back(neg_idx);
        }
    }
    return out;
}

}  // namespace steiner
