#pragma once

#include <string>

#include "steiner/rational.hpp"

namespace steiner {

// Closed interval [l, r] on the line; touching endpoints intersect.
struct interval {
    std::string id;
    rational l;
    rational r;
};

inline bool intersects(const interval& a, const interval& b) {
    return a.l <= b.r && b.l <= a.r;
}

// Containment is by extent, never of an interval in itself; distinct ids
// with identical endpoints do contain each other.
inline bool contains(const interval& outer, const interval& inner) {
    return outer.id != inner.id && outer.l <= inner.l && inner.r <= outer.r;
}

}  // namespace steiner
