#include "steiner/streaming.hpp"

#include <algorithm>
#include <cstddef>

#include "steiner/cycle.hpp"
#include "steiner/greedy.hpp"

namespace steiner {

void stream_engine::pending_set::clear() {
    items.clear();
    alive.clear();
    std::fill(tree.begin(), tree.end(), -1);
    live_count = 0;
}

void stream_engine::pending_set::set_leaf(int pos) {
    std::size_t node = cap + static_cast<std::size_t>(pos);
    tree[node] = alive[pos] ? pos : -1;
    while (node > 1) {
        node /= 2;
        int a = tree[2 * node], b = tree[2 * node + 1];
        if (a < 0) tree[node] = b;
        else if (b < 0) tree[node] = a;
        else tree[node] = items[a].iv.l <= items[b].iv.l ? a : b;
    }
}

void stream_engine::pending_set::rebuild(std::size_t need) {
    cap = 8;
    while (cap < need) cap *= 2;
    tree.assign(2 * cap, -1);
    for (std::size_t p = 0; p < items.size(); ++p)
        tree[cap + p] = alive[p] ? static_cast<int>(p) : -1;
    for (std::size_t node = cap - 1; node >= 1; --node) {
        int a = tree[2 * node], b = tree[2 * node + 1];
        if (a < 0) tree[node] = b;
        else if (b < 0) tree[node] = a;
        else tree[node] = items[a].iv.l <= items[b].iv.l ? a : b;
    }
}

void stream_engine::pending_set::compact() {
    std::vector<item> kept;
    std::vector<char> kept_alive;
    kept.reserve(static_cast<std::size_t>(live_count));
    for (std::size_t p = 0; p < items.size(); ++p)
        if (alive[p]) {
            kept.push_back(std::move(items[p]));
            kept_alive.push_back(1);
        }
    items = std::move(kept);
    alive = std::move(kept_alive);
    rebuild(items.size() + 1);
}

void stream_engine::pending_set::push(const item& it) {
    if (items.size() >= cap) rebuild(items.size() + 1);
    items.push_back(it);
    alive.push_back(1);
    ++live_count;
    set_leaf(static_cast<int>(items.size()) - 1);
}

void stream_engine::pending_set::kill(int pos) {
    alive[pos] = 0;
    --live_count;
    set_leaf(pos);
    std::size_t dead = items.size() - static_cast<std::size_t>(live_count);
    if (dead > static_cast<std::size_t>(live_count) + 64) compact();
}

int stream_engine::pending_set::descend(int node, std::size_t lo, std::size_t hi,
                                        std::size_t from, const rational& max_l) const {
    if (hi <= from || tree[node] < 0 || max_l < items[tree[node]].iv.l) return -1;
    if (hi - lo == 1) return tree[node];
    std::size_t mid = (lo + hi) / 2;
    int got = descend(2 * node, lo, mid, from, max_l);
    if (got >= 0) return got;
    return descend(2 * node + 1, mid, hi, from, max_l);
}

int stream_engine::pending_set::first_touching(const rational& lo, const rational& hi) const {
    if (live_count == 0) return -1;
    // arrival order is nondecreasing in r, so r >= lo selects a suffix
    std::size_t from = static_cast<std::size_t>(
        std::partition_point(items.begin(), items.end(),
                             [&](const item& x) { return x.iv.r < lo; }) -
        items.begin());
    if (from >= items.size()) return -1;
    return descend(1, 0, cap, from, hi);
}

int stream_engine::pending_set::first_live() const {
    if (live_count == 0) return -1;
    std::size_t node = 1;
    while (node < cap) {
        node *= 2;
        if (tree[node] < 0) ++node;
    }
    return tree[node];
}

std::vector<stream_engine::item> stream_engine::pending_set::drain() {
    std::vector<item> out;
    out.reserve(static_cast<std::size_t>(live_count));
    for (std::size_t p = 0; p < items.size(); ++p)
        if (alive[p]) out.push_back(std::move(items[p]));
    clear();
    return out;
}

stream_engine::stream_engine(config cfg, int terminal_total)
    : cfg_(cfg), s_total_(terminal_total) {}

void stream_engine::log(event_kind k, const std::string& id, const std::string& at) {
    if (cfg_.record_log) events_.push_back({k, id, at, reads_});
}

void stream_engine::push(const interval& iv, int ord, bool is_term) {
    if (last_r_ && iv.r < *last_r_) throw stream_order_error(iv.id);
    last_r_ = iv.r;
    ++reads_;
    if (phase_ == phase::settled) return;
    dispatch({iv, ord, is_term});
}

void stream_engine::dispatch(const item& it) {
    if (phase_ == phase::connecting) {
        try_connector(it);
        return;
    }
    if (!end_p_) {
        // idle: paths begin at terminals, everything else is skipped
        if (it.term) start_path(it);
        return;
    }
    if (intersects(it.iv, end_p_->iv)) {
        if (handle_candidate(it) == effect::placed) cascade();
        return;
    }
    if (covered_ == s_total_ && !cfg_.run_to_end)
        return;  // draining: a non-neighbor can no longer matter
    admit(it);
}

void stream_engine::admit(const item& it) {
    if (cfg_.known_kappa && pend_.size() >= *cfg_.known_kappa) {
        // budget full: an extender of the current end would contain the
        // whole buffer plus this arrival, so the end is final already
        finalize_for_next();
        dispatch(it);
        return;
    }
    pend_.push(it);
    peak_ = std::max(peak_, pend_.size());
}

stream_engine::effect stream_engine::handle_candidate(const item& c) {
    // c touches the current end
    if (!c.term && c.iv.r < end_p_->iv.r) {
        log(event_kind::neglect, c.iv.id, end_p_->iv.id);
        if (cfg_.record_log) neglect_log_.emplace_back(end_p_->ord, c.ord);
        return effect::neglected;
    }
    if (covered_ == s_total_ && !cfg_.run_to_end) {
        // a candidate that cannot be neglected while nothing is missing:
        // the greedy walk is over
        stop_with(c);
        return effect::stopped;
    }
    place(c);
    return effect::placed;
}

void stream_engine::place(const item& it) {
    bool first = cur_ords_.empty();
    cur_ords_.push_back(it.ord);
    if (it.term) ++covered_;
    if (cfg_.mode == stream_mode::cycle && paths_.empty()) {
        route(it, first);
    } else {
        log(event_kind::place, it.iv.id);
    }
    end_p_ = it;
}

void stream_engine::route(const item& it, bool first) {
    auto to_r = [&] {
        r_cur_.push_back(it.ord);
        end_r_ = it;
        prev_is_q_ = false;
        log(event_kind::place_r, it.iv.id);
    };
    auto to_q = [&] {
        q_cur_.push_back(it.ord);
        end_q_ = it;
        prev_is_q_ = true;
        log(event_kind::place_q, it.iv.id);
    };
    if (first) {
        to_r();
    } else if (q_cur_.empty()) {
        to_q();
    } else if (prev_is_q_) {
        // alternate back when possible, otherwise stay on the same arc
        if (intersects(it.iv, end_r_->iv)) to_r(); else to_q();
    } else {
        if (intersects(it.iv, end_q_->iv)) to_q(); else to_r();
    }
}

void stream_engine::cascade() {
    // buffered intervals precede later arrivals in r order, so the buffer
    // is always drained before new input is considered; each round takes
    // the earliest admission touching the current end
    while (phase_ == phase::scanning && end_p_) {
        int pos = pend_.first_touching(end_p_->iv.l, end_p_->iv.r);
        if (pos < 0) break;
        item m = pend_.items[pos];
        pend_.kill(pos);
        handle_candidate(m);
    }
}

void stream_engine::start_path(const item& t) {
    place(t);
    cascade();
}

void stream_engine::close_path() {
    log(event_kind::end_path, "");
    if (cfg_.mode == stream_mode::cycle && paths_.empty()) {
        q_arc_ = q_cur_;
        r_arc_ = r_cur_;
        end_q_sv_ = end_q_;
        end_r_sv_ = end_r_;
    }
    paths_.push_back(cur_ords_);
    cur_ords_.clear();
    q_cur_.clear();
    r_cur_.clear();
    end_p_.reset();
    end_q_.reset();
    end_r_.reset();
}

void stream_engine::finalize_for_next() {
    close_path();
    // the next path starts at the first buffered terminal; smaller
    // non-terminals can only trail it and are dropped
    while (!pend_.empty()) {
        int pos = pend_.first_live();
        item t = pend_.items[pos];
        pend_.kill(pos);
        if (t.term) {
            start_path(t);
            return;
        }
    }
}

void stream_engine::stop_with(const item& c) {
    if (cfg_.mode == stream_mode::cycle && paths_.empty()) {
        // the blocker is itself the first connector candidate: it touches
        // the end it stalled on and may well reach the other arc too
        enter_connecting();
        if (phase_ == phase::connecting) try_connector(c);
        return;
    }
    close_path();
    phase_ = phase::settled;
    pend_.clear();
}

void stream_engine::enter_connecting() {
    close_path();
    const std::vector<int>& p = paths_.front();
    if (p.size() < 2) {
        // nothing to close against; the caller resolves the degenerate case
        phase_ = phase::settled;
        pend_.clear();
        return;
    }
    phase_ = phase::connecting;
    if ((p.size() >= 3 || cfg_.allow_short_direct) && intersects(end_q_sv_->iv, end_r_sv_->iv)) {
        conn_direct_ = true;
        log(event_kind::connector_direct, "");
        phase_ = phase::settled;
        pend_.clear();
        return;
    }
    // buffered intervals precede future arrivals in r order
    std::vector<item> pending = pend_.drain();
    for (const item& m : pending) {
        try_connector(m);
        if (phase_ == phase::settled) return;
    }
}

void stream_engine::try_connector(const item& x) {
    // any free interval touching both arc ends closes the walk; one that
    // misses an end now will still miss it later, so failures are discarded
    if (intersects(x.iv, end_q_sv_->iv) && intersects(x.iv, end_r_sv_->iv)) {
        conn_ord_ = x.ord;
        log(event_kind::connector_via, x.iv.id);
        phase_ = phase::settled;
        pend_.clear();
    }
}

void stream_engine::finish() {
    if (finished_) return;
    finished_ = true;
    while (phase_ == phase::scanning) {
        if (end_p_) {
            if (covered_ == s_total_) {
                // the drain ran out of input without hitting a blocker
                if (cfg_.mode == stream_mode::cycle && paths_.empty()) {
                    enter_connecting();
                    if (phase_ == phase::connecting) phase_ = phase::settled;
                } else {
                    close_path();
                    phase_ = phase::settled;
                }
            } else {
                finalize_for_next();
                if (!end_p_ && pend_.empty()) phase_ = phase::settled;
            }
        } else {
            // idle with nothing buffered: unreached terminals never arrived
            phase_ = phase::settled;
        }
    }
    if (phase_ == phase::connecting) phase_ = phase::settled;
    pend_.clear();
}

int measure_memory(const instance& inst, stream_mode mode) {
    int k = kappa(inst);
    if (mode == stream_mode::cover) {
        cover_stats st;
        solve_cover(inst, k, &st);
        return st.peak_buffer;
    }
    cycle_stats st;
    solve_cycle(inst, k, &st);
    return st.peak_buffer;
}

play_trace play_level(const instance& inst) {
    play_trace tr;
    stream_engine::config cfg;
    cfg.mode = stream_mode::cycle;
    stream_engine eng(cfg, inst.terminal_count);
    for (int i = 0; i < inst.n(); ++i) {
        eng.push(inst.items[i], i, inst.is_terminal[i] != 0);
        if (eng.done()) break;
    }
    eng.finish();

    // forward phase, replayed from the engine events; the opening stand on
    // the start interval is not a move
    bool start_seen = false;
    for (const stream_event& ev : eng.events()) {
        switch (ev.kind) {
            case event_kind::place_r:
                if (!start_seen) { start_seen = true; break; }
                tr.moves.push_back({play_kind::jump, ev.id});
                break;
            case event_kind::place_q:
                tr.moves.push_back({play_kind::remember, ev.id});
                break;
            case event_kind::neglect:
                tr.moves.push_back({play_kind::neglect, ev.id});
                break;
            case event_kind::connector_via:
                tr.moves.push_back({play_kind::connector, ev.id});
                break;
            case event_kind::connector_direct:
                tr.moves.push_back({play_kind::connector_direct, ""});
                break;
            default:
                break;
        }
    }

    if (eng.paths().size() != 1 || !eng.all_covered()) return tr;  // split walk: lost
    const std::vector<int>& p = eng.paths().front();
    int start_idx = p.front();

    if (p.size() == 1) {
        // lone terminal: only a triangle through it walks out and back
        std::vector<int> nb;
        for (int i = 0; i < inst.n(); ++i)
            if (i != start_idx && intersects(inst.items[i], inst.items[start_idx])) nb.push_back(i);
        std::sort(nb.begin(), nb.end(), [&](int a, int b) {
            if (inst.items[a].l != inst.items[b].l) return inst.items[a].l < inst.items[b].l;
            return a < b;
        });
        int best = -1;
        for (int c : nb) {
            if (best >= 0 && inst.items[c].l <= inst.items[best].r) {
                tr.moves.push_back({play_kind::jump, inst.items[best].id});
                tr.moves.push_back({play_kind::ret, inst.items[c].id});
                tr.moves.push_back({play_kind::ret, inst.items[start_idx].id});
                tr.solvable = true;
                return tr;
            }
            if (best < 0 || inst.items[c].r > inst.items[best].r) best = c;
        }
        return tr;
    }

    if (!eng.connector_direct() && !eng.connector_ord()) {
        if (p.size() != 2) return tr;  // stalled arc: the right end cannot be rounded
        // two platforms: any third touching both closes the loop
        int other = p.back();
        for (int i = 0; i < inst.n(); ++i) {
            if (i == start_idx || i == other) continue;
            if (intersects(inst.items[i], inst.items[start_idx]) &&
                intersects(inst.items[i], inst.items[other])) {
                tr.moves.push_back({play_kind::jump, inst.items[i].id});
                tr.moves.push_back({play_kind::ret, inst.items[other].id});
                tr.moves.push_back({play_kind::ret, inst.items[start_idx].id});
                tr.solvable = true;
                return tr;
            }
        }
        return tr;
    }

    // return phase: walk the remembered arc right to left and finish on the
    // start. Consecutive stops touch by arc order and the arc's first member
    // touches the start, so the walk always comes home, standing on every
    // remembered terminal on the way. A standing platform off the walk that
    // begins right of the current one is dead weight and falls unused.
    std::vector<char> fallen(inst.n(), 0), rneg(inst.n(), 0);
    for (int i : eng.r_arc()) fallen[i] = 1;
    fallen[start_idx] = 0;  // the start/exit platform never falls

    path_t walk;  // remaining stops, rightmost first
    for (int i : eng.q_arc()) walk.push_back(i);
    std::reverse(walk.begin(), walk.end());
    walk.push_back(start_idx);

    int cur;
    if (eng.connector_ord()) {
        cur = *eng.connector_ord();
        fallen[cur] = 1;
    } else {
        // a direct connection lands the player on the remembered arc's end
        cur = walk.front();
        walk.erase(walk.begin());
        fallen[cur] = 1;
        tr.moves.push_back({play_kind::ret, inst.items[cur].id});
    }

    std::vector<char> on_walk(inst.n(), 0);
    for (int i : walk) on_walk[i] = 1;
    for (int next : walk) {
        for (int i = 0; i < inst.n(); ++i) {
            if (fallen[i] || rneg[i] || on_walk[i]) continue;
            if (!intersects(inst.items[i], inst.items[cur])) continue;
            if (inst.items[i].l > inst.items[cur].l) {
                rneg[i] = 1;
                tr.moves.push_back({play_kind::neglect, inst.items[i].id});
            }
        }
        tr.moves.push_back({play_kind::ret, inst.items[next].id});
        fallen[next] = 1;
        cur = next;
    }
    tr.solvable = true;
    return tr;
}

}  // namespace steiner
