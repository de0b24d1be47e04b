#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "steiner/instance.hpp"

namespace steiner {

enum class stream_mode { cover, cycle };

enum class event_kind { place, place_q, place_r, neglect, end_path, connector_via, connector_direct };

struct stream_event {
    event_kind kind;
    std::string id;   // subject; empty for end_path / connector_direct
    std::string at;   // neglect only: the path end the candidate was neglected against
    int read_no = 0;  // arrivals consumed when the event was decided
};

struct stream_order_error : std::runtime_error {
    std::string id;
    explicit stream_order_error(const std::string& id_)
        : std::runtime_error("out-of-order arrival " + id_), id(id_) {}
};

// Single-pass engine over a right-endpoint-sorted interval stream. Builds
// greedy paths with the neglect rule, buffering intervals that do not touch
// the current path end. Buffered intervals all lie strictly right of the
// end, so a bounded containment parameter bounds the buffer: when a budget
// is given and one more admission would exceed it, any future extender of
// the end would contain budget+1 intervals, so the path is closed early
// with no change to the result.
//
// In cycle mode the first path is split online into the two cycle arcs
// (place_r/place_q events) and, once every terminal is covered, the engine
// switches to scanning for a closing connector.
class stream_engine {
  public:
    struct config {
        stream_mode mode = stream_mode::cover;
        bool allow_short_direct = false;  // closed walks of length 2 (player semantics)
        bool run_to_end = false;          // keep consuming past full coverage (maximal paths)
        bool record_log = true;           // keep event and neglect logs (stats and replay)
        std::optional<int> known_kappa;
    };

    stream_engine(config cfg, int terminal_total);

    // ord is the caller's stable number for the interval (offline callers
    // pass the sorted position); paths and arcs report these ordinals back.
    void push(const interval& iv, int ord, bool is_term);
    void finish();

    // The outcome is settled: no further arrival can change it.
    bool done() const { return phase_ == phase::settled; }
    int reads() const { return reads_; }
    int peak_buffer() const { return peak_; }

    const std::vector<stream_event>& events() const { return events_; }
    const std::vector<std::vector<int>>& paths() const { return paths_; }
    const std::vector<std::pair<int, int>>& neglect_log() const { return neglect_log_; }

    // Cycle-mode views of the first path.
    const std::vector<int>& q_arc() const { return q_arc_; }
    const std::vector<int>& r_arc() const { return r_arc_; }
    bool connector_direct() const { return conn_direct_; }
    const std::optional<int>& connector_ord() const { return conn_ord_; }
    bool all_covered() const { return covered_ == s_total_; }

  private:
    enum class phase { scanning, connecting, settled };
    enum class effect { placed, neglected, stopped };

    struct item {
        interval iv;
        int ord;
        bool term;
    };

    void dispatch(const item& it);
    void admit(const item& it);
    effect handle_candidate(const item& c);
    void place(const item& it);
    void route(const item& it, bool first);
    void cascade();
    void start_path(const item& t);
    void close_path();
    void finalize_for_next();
    void stop_with(const item& c);
    void enter_connecting();
    void try_connector(const item& x);
    void log(event_kind k, const std::string& id, const std::string& at = "");

    // Buffered admissions in arrival order (nondecreasing r). Dead entries
    // stay in place so binary search by r keeps working; a min-l tournament
    // tree finds the earliest live admission touching the current end in
    // O(log n), so draining costs O(log n) per interval instead of a buffer
    // rescan per placement. Compaction keeps storage proportional to the
    // live count.
    struct pending_set {
        std::vector<item> items;
        std::vector<char> alive;
        std::vector<int> tree;  // node -> live position with least l in range, -1 if none
        std::size_t cap = 0;
        int live_count = 0;

        bool empty() const { return live_count == 0; }
        int size() const { return live_count; }
        void clear();
        void push(const item& it);
        void kill(int pos);
        // earliest live admission with r >= lo and l <= hi, or -1
        int first_touching(const rational& lo, const rational& hi) const;
        int first_live() const;
        std::vector<item> drain();

      private:
        void set_leaf(int pos);
        void rebuild(std::size_t need);
        void compact();
        int descend(int node, std::size_t lo, std::size_t hi, std::size_t from,
                    const rational& max_l) const;
    };

    config cfg_;
    int s_total_ = 0;
    int covered_ = 0;
    int reads_ = 0;
    int peak_ = 0;
    phase phase_ = phase::scanning;
    bool finished_ = false;

    pending_set pend_;
    std::optional<item> end_p_, end_q_, end_r_;
    std::optional<rational> last_r_;
    bool prev_is_q_ = false;
    std::vector<int> cur_ords_, q_cur_, r_cur_;

    std::vector<std::vector<int>> paths_;
    std::vector<int> q_arc_, r_arc_;
    std::optional<item> end_q_sv_, end_r_sv_;
    bool conn_direct_ = false;
    std::optional<int> conn_ord_;

    std::vector<stream_event> events_;
    std::vector<std::pair<int, int>> neglect_log_;  // (path end ord, neglected ord)
};

// Player events for a level walk: forward jumps along the platform arc,
// remembered intervals on the other arc, the closing connector, then the
// return walk over the remembered arc. "ret" entries run right-to-left
// back to the start.
enum class play_kind { jump, remember, neglect, connector, connector_direct, ret };

struct play_move {
    play_kind kind;
    std::string id;  // empty for connector_direct
};

struct play_trace {
    std::vector<play_move> moves;
    bool solvable = false;
};

// Simulates the player strategy: forward greedy walk from the first
// terminal with the two-arc split, connection once every terminal is
// covered, then the return walk along the remembered arc.
play_trace play_level(const instance& inst);

// Peak buffered intervals while streaming the instance with the containment
// budget kappa(inst) supplied.
int measure_memory(const instance& inst, stream_mode mode);

}  // namespace steiner
