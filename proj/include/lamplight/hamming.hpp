#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "lamplight/error.hpp"

namespace lamplight {

/// A point of a Hamming cube over an opaque coordinate set: the set of
/// coordinates equal to 1, canonically serialized as sorted unique keys.
/// d_H(p, q) = |coords_p symmetric-difference coords_q|.
struct HammingPoint {
    std::vector<std::string> coords;

    static HammingPoint from_keys(std::vector<std::string> keys) {
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        return HammingPoint{std::move(keys)};
    }

    std::size_t support() const { return coords.size(); }

    friend bool operator==(const HammingPoint&, const HammingPoint&) = default;
};

inline int hamming_distance(const HammingPoint& p, const HammingPoint& q) {
    std::size_t i = 0, j = 0, common = 0;
    while (i < p.coords.size() && j < q.coords.size()) {
        int cmp = p.coords[i].compare(q.coords[j]);
        if (cmp == 0) {
            ++common;
            ++i;
            ++j;
        } else if (cmp < 0) {
            ++i;
        } else {
            ++j;
        }
    }
    return static_cast<int>(p.coords.size() + q.coords.size() - 2 * common);
}

} // namespace lamplight
