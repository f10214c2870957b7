#pragma once

// Reference implementations written straight from the set definitions,
// with std::set and doubles avoided. Used only as test oracles.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <set>
#include <string>

#include "setdissim/setdissim.hpp"

namespace oracle {

using setdissim::Rat;
using Set = std::set<int>;

inline Set inter(const Set& a, const Set& b) {
    Set out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}
inline Set uni(const Set& a, const Set& b) {
    Set out(a);
    out.insert(b.begin(), b.end());
    return out;
}
inline Set minus(const Set& a, const Set& b) {
    Set out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}
inline std::int64_t n(const Set& s) { return static_cast<std::int64_t>(s.size()); }

inline Rat hamming(const Set& a, const Set& b) { return Rat(n(minus(a, b)) + n(minus(b, a))); }

inline Rat jaccard(const Set& a, const Set& b) {
    if (a.empty() && b.empty()) return Rat(0);
    return Rat(1) - Rat(n(inter(a, b)), n(uni(a, b)));
}

inline Rat sorensen(const Set& a, const Set& b) {
    if (a.empty() && b.empty()) return Rat(0);
    return Rat(1) - Rat(2 * n(inter(a, b)), n(a) + n(b));
}

inline Rat overlap(const Set& a, const Set& b) {
    if (a.empty() && b.empty()) return Rat(0);
    if (a.empty() || b.empty()) return Rat(1);
    return Rat(1) - Rat(n(inter(a, b)), std::min(n(a), n(b)));
}

inline Set from_mask(setdissim::Mask m) {
    Set s;
    for (int i = 0; i < 64; ++i)
        if (m >> i & 1) s.insert(i);
    return s;
}

/// Set of default-labelled elements, e.g. of("a,b").
inline setdissim::FiniteSet of(const std::string& labels) {
    std::vector<setdissim::ElementId> ids;
    for (char c : labels)
        if (c >= 'a' && c <= 'z') ids.push_back(static_cast<setdissim::ElementId>(c - 'a'));
    return setdissim::FiniteSet(std::move(ids));
}

inline setdissim::Mask mask(const std::string& labels) { return of(labels).to_mask(); }

}  // namespace oracle
