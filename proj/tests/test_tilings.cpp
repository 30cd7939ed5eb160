#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <deque>
#include <set>

#include "hexanet/rng.hpp"
#include "hexanet/tiling.hpp"

using namespace hexanet;

namespace {

// Independent oracle: every tiling of the 2n-gon arises from sorting the
// word (1,...,n) to (n,...,1) by adjacent swaps of an ascending pair; the
// swap of (a,b) places tile R_ab anchored at the set of letters before it.
// DFS over all such sorting sequences, deduplicated by canonical form.
void oracle_rec(int n, std::vector<int>& word, std::vector<Tile>& placed,
                std::set<std::string>& out) {
    bool any = false;
    for (std::size_t p = 0; p + 1 < word.size(); ++p) {
        if (word[p] < word[p + 1]) {
            any = true;
            Subset base = 0;
            for (std::size_t q = 0; q < p; ++q) base |= subset_bit(word[q]);
            placed.push_back(Tile{word[p], word[p + 1], base});
            std::swap(word[p], word[p + 1]);
            oracle_rec(n, word, placed, out);
            std::swap(word[p], word[p + 1]);
            placed.pop_back();
        }
    }
    if (!any) {
        Tiling t;
        t.n = n;
        t.tiles = placed;
        t.canonicalize();
        out.insert(t.key());
    }
}

std::set<std::string> oracle_tilings(int n) {
    std::vector<int> word;
    for (int k = 1; k <= n; ++k) word.push_back(k);
    std::vector<Tile> placed;
    std::set<std::string> out;
    oracle_rec(n, word, placed, out);
    return out;
}

std::set<std::pair<int, int>> pair_multiset(const Tiling& t) {
    std::set<std::pair<int, int>> out;
    for (const Tile& tile : t.tiles) out.insert({tile.i, tile.j});
    return out;
}

// Monotone chain from the empty set to s along tiling edges.
bool has_monotone_path(const Tiling& t, Subset target) {
    std::set<std::pair<Subset, Subset>> edges;  // (lower, upper)
    for (const Tile& tile : t.tiles) {
        Subset b = tile.base, bi = b | subset_bit(tile.i), bj = b | subset_bit(tile.j);
        Subset bij = bi | bj;
        edges.insert({b, bi});
        edges.insert({b, bj});
        edges.insert({bi, bij});
        edges.insert({bj, bij});
    }
    std::deque<Subset> queue{0};
    std::set<Subset> seen{0};
    while (!queue.empty()) {
        Subset cur = queue.front();
        queue.pop_front();
        if (cur == target) return true;
        for (const auto& [lo, hi] : edges)
            if (lo == cur && !seen.count(hi)) {
                seen.insert(hi);
                queue.push_back(hi);
            }
    }
    return false;
}

}  // namespace

TEST_CASE("standard tiling, small cases") {
    Tiling t2 = standard_tiling(2);
    REQUIRE(t2.tiles.size() == 1);
    CHECK(t2.tiles[0] == Tile{1, 2, 0});

    Tiling t3 = standard_tiling(3);
    CHECK(t3.tiles == std::vector<Tile>{Tile{1, 2, 0}, Tile{1, 3, subset_bit(2)}, Tile{2, 3, 0}});

    CHECK_THROWS(standard_tiling(1));
}

TEST_CASE("standard tiling vertices are the consecutive subsets") {
    for (int n = 2; n <= 6; ++n) {
        std::set<Subset> expected{0};
        for (int lo = 1; lo <= n; ++lo)
            for (int hi = lo; hi <= n; ++hi) expected.insert(subset_range(lo, hi));
        auto vs = standard_tiling(n).vertex_set();
        CHECK(std::set<Subset>(vs.begin(), vs.end()) == expected);
    }
}

TEST_CASE("validate accepts standard tilings and reports damage") {
    for (int n = 2; n <= 6; ++n) CHECK(validate(standard_tiling(n)).empty());

    Tiling broken = standard_tiling(4);
    broken.tiles.erase(std::remove_if(broken.tiles.begin(), broken.tiles.end(),
                                      [](const Tile& t) { return t.i == 1 && t.j == 4; }),
                       broken.tiles.end());
    auto violations = validate(broken);
    REQUIRE(!violations.empty());
    bool mentions_pair = false;
    for (const auto& v : violations) mentions_pair |= v.message.find("{1,4} missing") != std::string::npos;
    CHECK(mentions_pair);

    Tiling dup = standard_tiling(4);
    dup.tiles.push_back(Tile{1, 2, subset_bit(3)});
    violations = validate(dup);
    bool mentions_dup = false;
    for (const auto& v : violations) mentions_dup |= v.message.find("duplicate pair {1,2}") != std::string::npos;
    CHECK(mentions_dup);

    // wrong anchor: geometry no longer closes up
    Tiling shifted = standard_tiling(4);
    for (Tile& tile : shifted.tiles)
        if (tile.i == 1 && tile.j == 4) tile.base = subset_bit(2);
    CHECK(!validate(shifted).empty());
}

TEST_CASE("find_hexagons counts") {
    CHECK(find_hexagons(standard_tiling(2)).empty());
    CHECK(find_hexagons(standard_tiling(3)).size() == 1);
    auto hexes4 = find_hexagons(standard_tiling(4));
    CHECK(!hexes4.empty());
    for (const Hexagon& h : hexes4) {
        Tiling flipped = apply_flip(standard_tiling(4), h);
        CHECK(validate(flipped).empty());
        CHECK(pair_multiset(flipped) == pair_multiset(standard_tiling(4)));
    }
}

TEST_CASE("apply_flip on n=3 reaches the unique other tiling") {
    auto oracle = oracle_tilings(3);
    REQUIRE(oracle.size() == 2);
    Tiling t0 = standard_tiling(3);
    Hexagon h = find_hexagons(t0)[0];
    CHECK(h.valley);
    Tiling other = apply_flip(t0, h);
    CHECK(oracle.count(other.key()) == 1);
    CHECK(other.key() != t0.key());

    Hexagon back = find_hexagons(other)[0];
    CHECK(!back.valley);
    CHECK(apply_flip(other, back) == t0);
}

TEST_CASE("flip is rejected when stale") {
    Tiling t0 = standard_tiling(4);
    auto hexes = find_hexagons(t0);
    Tiling moved = apply_flip(t0, hexes[0]);
    CHECK_THROWS(apply_flip(moved, hexes[0]));
}

TEST_CASE("flip changes exactly one vertex") {
    Tiling t0 = standard_tiling(5);
    for (const Hexagon& h : find_hexagons(t0)) {
        Tiling flipped = apply_flip(t0, h);
        auto a = t0.vertex_set();
        auto b = flipped.vertex_set();
        std::vector<Subset> gone, added;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(gone));
        std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(added));
        CHECK(gone.size() == 1);
        CHECK(added.size() == 1);
        CHECK(gone[0] == h.center);
    }
}

TEST_CASE("enumerate_tilings matches the placement oracle") {
    for (int n = 2; n <= 5; ++n) {
        auto enumerated = enumerate_tilings(n);
        std::set<std::string> keys;
        for (const Tiling& t : enumerated) {
            CHECK(validate(t).empty());
            keys.insert(t.key());
        }
        CHECK(keys.size() == enumerated.size());
        CHECK(keys == oracle_tilings(n));
    }
    CHECK(enumerate_tilings(2).size() == 1);
    CHECK(enumerate_tilings(3).size() == 2);
    CHECK(enumerate_tilings(4).size() == 8);
    CHECK(enumerate_tilings(5).size() == 62);
    CHECK_THROWS_AS(enumerate_tilings(9), BoundExceededError);
}

TEST_CASE("flip_path") {
    Tiling t0 = standard_tiling(3);
    CHECK(flip_path(t0, t0).empty());
    Tiling other = apply_flip(t0, find_hexagons(t0)[0]);
    CHECK(flip_path(t0, other).size() == 1);

    auto all4 = enumerate_tilings(4);
    for (const Tiling& a : all4)
        for (const Tiling& b : all4) {
            auto path = flip_path(a, b);
            CHECK(path.size() <= 6);
            Tiling cur = a;
            for (const Hexagon& h : path) cur = apply_flip(cur, h);
            CHECK(cur == b);
        }
}

TEST_CASE("every vertex admits a monotone path from the base vertex") {
    for (int n = 2; n <= 5; ++n)
        for (const Tiling& t : enumerate_tilings(n))
            for (Subset v : t.vertex_set()) CHECK(has_monotone_path(t, v));
}
