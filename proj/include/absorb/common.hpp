#pragma once

/**
 * @file common.hpp
 * @brief Shared element-set utilities for the finite algebra engine.
 *
 * Elements of a finite ring or module are indices into its operation
 * tables. Subsets (ideals, multiplicative sets, submodules) are kept as
 * ascending, duplicate-free index vectors so that set algebra, canonical
 * serialization and deterministic iteration all come for free.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace absorb {

using Elem = int;
using ElemSet = std::vector<Elem>;  // ascending, unique

inline bool set_contains(const ElemSet& s, Elem e) {
    return std::binary_search(s.begin(), s.end(), e);
}

inline void set_insert(ElemSet& s, Elem e) {
    auto it = std::lower_bound(s.begin(), s.end(), e);
    if (it == s.end() || *it != e) s.insert(it, e);
}

inline ElemSet set_union(const ElemSet& a, const ElemSet& b) {
    ElemSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline ElemSet set_intersection(const ElemSet& a, const ElemSet& b) {
    ElemSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool set_subset(const ElemSet& a, const ElemSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool set_disjoint(const ElemSet& a, const ElemSet& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else
            return false;
    }
    return true;
}

inline ElemSet sorted_unique(ElemSet v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

/// Full carrier {0, ..., n-1}.
inline ElemSet full_set(int n) {
    ElemSet out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i;
    return out;
}

inline std::string set_to_string(const ElemSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    out += "}";
    return out;
}

struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace absorb
