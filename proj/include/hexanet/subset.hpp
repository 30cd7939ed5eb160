#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "hexanet/error.hpp"

namespace hexanet {

// Subsets of [n] = {1,...,n} as bitmasks; element k lives at bit k-1.
using Subset = std::uint32_t;

inline int subset_size(Subset s) { return std::popcount(s); }

inline Subset subset_bit(int element) { return Subset{1} << (element - 1); }

inline bool subset_contains(Subset s, int element) { return (s >> (element - 1)) & 1u; }

inline Subset full_subset(int n) { return (Subset{1} << n) - 1; }

inline std::vector<int> subset_elements(Subset s) {
    std::vector<int> out;
    for (int e = 1; s != 0; ++e, s >>= 1)
        if (s & 1u) out.push_back(e);
    return out;
}

// Consecutive run {lo, lo+1, ..., hi}; empty when hi < lo.
inline Subset subset_range(int lo, int hi) {
    Subset s = 0;
    for (int e = lo; e <= hi; ++e) s |= subset_bit(e);
    return s;
}

// "{}", "{2}", "{1,3}" -- the form used as JSON keys.
inline std::string subset_to_string(Subset s) {
    std::string out = "{";
    bool first = true;
    for (int e : subset_elements(s)) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

inline Subset subset_from_string(const std::string& text) {
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw ParseError("bad subset literal: " + text);
    Subset s = 0;
    std::size_t pos = 1;
    while (pos < text.size() - 1) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos || end > text.size() - 1) end = text.size() - 1;
        int e = std::stoi(text.substr(pos, end - pos));
        if (e < 1) throw ParseError("bad subset element in " + text);
        s |= subset_bit(e);
        pos = end + 1;
    }
    return s;
}

}  // namespace hexanet
