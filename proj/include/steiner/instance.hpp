#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "steiner/interval.hpp"

namespace steiner {

// Input violation with the 1-based line number it was found on.
struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_) + ": " + message), line(line_) {}
};

// Instance: intervals sorted by nondecreasing right endpoint (ties keep
// input order) plus a nonempty terminal set. All algorithms address
// intervals by their position in this sorted order.
struct instance {
    std::vector<interval> items;
    std::vector<char> is_terminal;
    int terminal_count = 0;
    std::unordered_map<std::string, int> index_of;

    int n() const { return static_cast<int>(items.size()); }

    // Stable-sorts items by right endpoint, then wires up the terminal set.
    // Throws parse_error (line 0) on duplicate ids, unknown or empty
    // terminals, or an interval with l > r.
    static instance build(std::vector<interval> raw, const std::vector<std::string>& terminal_ids);

    // Reads the text format:
    //   intervals <n>
    //   <id> <l> <r>          (n lines, nondecreasing r)
    //   terminals <id...>
    // '#' starts a comment line; blank lines are skipped. Errors carry
    // 1-based line numbers.
    static instance parse(std::istream& in);

    void serialize(std::ostream& out) const;
};

// Connected components of the interval graph minus the removed vertices.
// Components are ordered by their smallest member index; members by index.
std::vector<std::vector<int>> components_after_removal(const instance& inst,
                                                       const std::vector<int>& removed);

inline bool connected(const instance& inst) {
    return components_after_removal(inst, {}).size() == 1;
}

// Containment parameter: the maximum number of intervals contained in a
// single interval. O(n log n) via a Fenwick count over right-endpoint ranks.
int kappa(const instance& inst);

}  // namespace steiner
