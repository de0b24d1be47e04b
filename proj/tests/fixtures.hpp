#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "steiner/greedy.hpp"
#include "steiner/instance.hpp"

namespace steiner::testing {

// Parses a file from data/; a missing file surfaces as a parse_error on the
// empty stream, which fails the test loudly.
inline instance load_fixture(const std::string& name) {
    std::ifstream in(std::string(DATA_DIR) + "/" + name);
    return instance::parse(in);
}

inline interval iv(const char* id, const char* l, const char* r) {
    return {id, *rational::parse(l), *rational::parse(r)};
}

inline std::vector<std::string> ids(const instance& inst, const path_t& p) {
    std::vector<std::string> out;
    for (int i : p) out.push_back(inst.items[i].id);
    return out;
}

// Regression fixtures found by randomized search; endpoints frozen so the
// defects they exposed stay covered.

// Connector whose right endpoint ties the path maximum still closes a cycle.
inline instance equal_r_connector() {
    return instance::build({iv("p1", "0", "1"), iv("p2", "3", "4"), iv("p3", "1", "6"),
                            iv("p4", "4", "6"), iv("p5", "4", "11"), iv("p6", "7", "12"),
                            iv("p7", "9", "14"), iv("p8", "6", "14"), iv("p9", "10", "14")},
                           {"p3", "p4", "p7"});
}

// Greedy-descent return walk would jump past a needed stepping stone here;
// the exact remembered-arc walk must not.
inline instance return_walk_trap() {
    return instance::build({iv("p1", "3", "6"), iv("p2", "6", "7"), iv("p3", "3", "7"),
                            iv("p4", "4", "9"), iv("p5", "10", "13"), iv("p6", "11", "13"),
                            iv("p7", "9", "15"), iv("p8", "5", "15"), iv("p9", "5", "15"),
                            iv("p10", "11", "20")},
                           {"p1", "p3", "p4", "p5", "p8", "p10"});
}

// Stalled-arc cutset needs pruning: the raw cutset double-counts members
// that separate nothing.
inline instance pruned_stall_witness() {
    return instance::build({iv("p1", "4", "11"), iv("p2", "4", "13"), iv("p3", "9", "17"),
                            iv("p4", "18", "19"), iv("p5", "18", "20"), iv("p6", "17", "22"),
                            iv("p7", "17", "22")},
                          {"p1", "p2", "p3", "p4", "p5", "p6"});
}

// A tail interval the stopping walk never reads bridges two islands; only
// the empty cutset certifies the single-path cover here.
inline instance leftover_bridge() {
    return instance::build({iv("p1", "0", "2"), iv("p2", "0", "5"), iv("p3", "5", "7"),
                            iv("p4", "8", "9"), iv("p5", "2", "10"), iv("p6", "10", "12"),
                            iv("p7", "10", "14"), iv("p8", "7", "15"), iv("p9", "9", "18")},
                           {"p3", "p4", "p7"});
}

}  // namespace steiner::testing
