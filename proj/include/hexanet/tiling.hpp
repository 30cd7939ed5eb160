#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hexanet/subset.hpp"

namespace hexanet {

// Rhombus R_{ij} (1 <= i < j <= n) anchored at its lowest vertex `base`.
// The tile covers the four vertices base, base+{i}, base+{j}, base+{i,j}.
struct Tile {
    int i = 0;
    int j = 0;
    Subset base = 0;

    auto operator<=>(const Tile&) const = default;
};

struct Tiling {
    int n = 0;
    std::vector<Tile> tiles;  // sorted by (i, j, base): the canonical form

    void canonicalize();
    std::vector<Subset> vertex_set() const;
    bool has_vertex(Subset s) const;
    const Tile* find_pair(int i, int j) const;  // nullptr if absent

    bool operator==(const Tiling& other) const { return n == other.n && tiles == other.tiles; }

    // Stable dedup key (bases listed in pair order).
    std::string key() const;
};

// Three tiles whose union is a hexagon spanning the rank-3 interval
// [base, base+{d1,d2,d3}]. In valley position the interior vertex is
// base+{d2}; in peak position it is base+{d1,d3}.
struct Hexagon {
    int d1 = 0, d2 = 0, d3 = 0;  // d1 < d2 < d3
    Subset base = 0;
    bool valley = true;
    std::array<Tile, 3> tiles{};
    std::array<Subset, 6> boundary{};
    Subset center = 0;

    auto operator<=>(const Hexagon& other) const {
        return std::tie(d1, d2, d3, base, valley) <=>
               std::tie(other.d1, other.d2, other.d3, other.base, other.valley);
    }
    bool operator==(const Hexagon& other) const {
        return d1 == other.d1 && d2 == other.d2 && d3 == other.d3 && base == other.base &&
               valley == other.valley;
    }
};

struct Violation {
    std::string message;
};

// T_0: R_{ij} anchored at the consecutive run {i+1,...,j-1}; its vertex set
// is exactly the consecutive-integer subsets of [n] plus the empty set.
Tiling standard_tiling(int n);

bool is_standard_tiling(const Tiling& t);

// Combinatorial soundness: every pair once, bases legal, and the exact
// planar embedding closes up (every rhombus edge matched by a neighbour or
// lying on the 2n-gon boundary). Geometry is done in Z[x]/Phi_2n(x), never
// in floating point.
std::vector<Violation> validate(const Tiling& t);

// All flippable triples, valley/peak tagged, sorted by (d1,d2,d3,base).
std::vector<Hexagon> find_hexagons(const Tiling& t);

// Re-anchors the hexagon's three tiles to the mirrored configuration.
// Throws Error if h is not flippable in t.
Tiling apply_flip(const Tiling& t, const Hexagon& h);

// Reads HEXANET_MAX_N when `bound` is 0.
int enumeration_bound(int bound = 0);

// Breadth-first closure of {T_0} under flips; canonical, deterministic.
std::vector<Tiling> enumerate_tilings(int n, int bound = 0);

// Flip sequence from t1 to t2 (each Hexagon is valid in the intermediate
// tiling it applies to). Empty iff t1 == t2.
std::vector<Hexagon> flip_path(const Tiling& t1, const Tiling& t2, int bound = 0);

// Exact coordinates of subset embeddings, as coefficient vectors in the
// cyclotomic ring Z[x]/Phi_2n(x) with x = exp(i*pi/n). Exposed for tests
// and for the SVG renderer's float conversion.
struct CycloPoint {
    std::vector<long> coeff;
    bool operator==(const CycloPoint&) const = default;
    bool operator<(const CycloPoint& o) const { return coeff < o.coeff; }
};
CycloPoint embed_subset(int n, Subset s);

}  // namespace hexanet
