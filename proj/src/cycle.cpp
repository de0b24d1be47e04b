#include "steiner/cycle.hpp"

#include <algorithm>
#include <stdexcept>

namespace steiner {

qr_split split_qr(const path_t& path, const instance& inst) {
    if (path.size() < 2) throw std::invalid_argument("split_qr: path needs at least two members");
    qr_split s;
    s.r.push_back(path[0]);
    s.q.push_back(path[1]);
    bool prev_q = true;
    for (std::size_t j = 2; j < path.size(); ++j) {
        const interval& v = inst.items[path[j]];
        bool to_q = prev_q ? !intersects(v, inst.items[s.r.back()])
                           : intersects(v, inst.items[s.q.back()]);
        if (to_q) s.q.push_back(path[j]); else s.r.push_back(path[j]);
        prev_q = to_q;
    }
    return s;
}

connector_result find_connector(const path_t& q, const path_t& r, const instance& inst,
                                const std::vector<char>& consumed) {
    if (q.empty() || r.empty()) throw std::invalid_argument("find_connector: empty arc");
    if (static_cast<int>(consumed.size()) != inst.n())
        throw std::invalid_argument("find_connector: consumed flags must cover the instance");
    const interval& eq = inst.items[q.back()];
    const interval& er = inst.items[r.back()];
    if (intersects(eq, er)) return {connector_result::kind::direct, -1};
    for (int i = 0; i < inst.n(); ++i) {
        if (consumed[i]) continue;
        const interval& x = inst.items[i];
        if (intersects(x, eq) && intersects(x, er))
            return {connector_result::kind::via, i};
    }
    return {connector_result::kind::none, -1};
}

namespace {

std::vector<path_t> s_components(const instance& inst, const path_t& cutset) {
    std::vector<path_t> out;
    for (auto& comp : components_after_removal(inst, cutset)) {
        for (int i : comp) {
            if (inst.is_terminal[i]) {
                out.push_back(std::move(comp));
                break;
            }
        }
    }
    return out;
}

// One terminal on the path: a cycle through it exists iff some triangle
// contains it (chordality shrinks any longer cycle through it). Neighbors
// swept in left-endpoint order against the widest-reaching one seen.
cycle_outcome resolve_single(const instance& inst, int t) {
    std::vector<int> nb;
    for (int i = 0; i < inst.n(); ++i)
        if (i != t && intersects(inst.items[i], inst.items[t])) nb.push_back(i);
    std::sort(nb.begin(), nb.end(), [&](int a, int b) {
        if (inst.items[a].l != inst.items[b].l) return inst.items[a].l < inst.items[b].l;
        return a < b;
    });
    cycle_outcome out;
    int best = -1;
    for (int c : nb) {
        if (best >= 0 && inst.items[c].l <= inst.items[best].r) {
            out.cycle = path_t{t, best, c};
            return out;
        }
        if (best < 0 || inst.items[c].r > inst.items[best].r) best = c;
    }
    out.witness = cycle_witness{{}, s_components(inst, {})};
    return out;
}

// Two members: any cycle through both forces a common neighbor (every
// interval missing their overlap lies strictly to one side of it, and a
// one-sided detour cannot reach back to both). Scan the whole instance.
cycle_outcome resolve_pair(const instance& inst, const path_t& p) {
    cycle_outcome out;
    for (int i = 0; i < inst.n(); ++i) {
        if (i == p[0] || i == p[1]) continue;
        if (intersects(inst.items[i], inst.items[p[0]]) &&
            intersects(inst.items[i], inst.items[p[1]])) {
            out.cycle = path_t{p[0], i, p[1]};
            return out;
        }
    }
    out.witness = cycle_witness{{}, s_components(inst, {})};
    return out;
}

}  // namespace

cycle_outcome solve_cycle(const instance& inst, std::optional<int> known_kappa, cycle_stats* stats) {
    stream_engine::config cfg;
    cfg.mode = stream_mode::cycle;
    cfg.known_kappa = known_kappa;
    cfg.record_log = stats != nullptr;
    stream_engine eng(cfg, inst.terminal_count);
    for (int i = 0; i < inst.n(); ++i) {
        eng.push(inst.items[i], i, inst.is_terminal[i] != 0);
        if (eng.done()) break;
    }
    eng.finish();

    if (stats) {
        stats->reads = eng.reads();
        stats->peak_buffer = eng.peak_buffer();
        stats->events = eng.events();
    }

    const std::vector<path_t>& pidx = eng.paths();

    cycle_outcome out;
    if (pidx.size() != 1) {
        // the terminals do not even fit on one greedy path, which rules out
        // a cycle; the cover witness certifies path number above 1 (its
        // decomposition identity makes island count exceed the cutset)
        cover_witness cw = maximal_cover_witness(inst);
        if (cw.s_island_count <= cw.cutset.size()) cw.cutset.clear();
        out.witness = cycle_witness{cw.cutset, s_components(inst, cw.cutset)};
        return out;
    }

    const path_t& p = pidx.front();
    if (eng.connector_direct() || eng.connector_ord()) {
        path_t cyc;
        for (int i : eng.r_arc()) cyc.push_back(i);
        if (eng.connector_ord()) cyc.push_back(*eng.connector_ord());
        for (auto it = eng.q_arc().rbegin(); it != eng.q_arc().rend(); ++it)
            cyc.push_back(*it);
        out.cycle = std::move(cyc);
        return out;
    }

    if (p.size() == 1) return resolve_single(inst, p.front());
    if (p.size() == 2) return resolve_pair(inst, p);

    // no connector: the stalled arc end pins down a separating cutset
    int last = p.back();
    int stalled = eng.q_arc().back();
    if (stalled == last) stalled = eng.r_arc().back();
    int h = 0;
    while (p[h] != stalled) ++h;
    path_t prefix(p.begin(), p.begin() + h + 1);
    decomposition dec = decompose(prefix, inst);
    path_t cutset = dec.covers;
    cutset.push_back(p[h + 1]);
    std::sort(cutset.begin(), cutset.end());
    // intervals the walk never consumed can bridge around a cut member; while
    // the cutset is too large for its island count, drop members that
    // separate nothing
    std::size_t cnt = s_components(inst, cutset).size();
    while (cnt <= cutset.size()) {
        bool dropped = false;
        for (std::size_t t = 0; t < cutset.size(); ++t) {
            path_t trial = cutset;
            trial.erase(trial.begin() + t);
            if (s_components(inst, trial).size() == cnt) {
                cutset = std::move(trial);
                dropped = true;
                break;
            }
        }
        if (!dropped) break;
    }
    if (cnt <= cutset.size()) cutset.clear();
    out.witness = cycle_witness{cutset, s_components(inst, cutset)};
    return out;
}

}  // namespace steiner
