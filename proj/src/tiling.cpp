#include "hexanet/tiling.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "hexanet/error.hpp"

namespace hexanet {

namespace {

using Poly = std::vector<long>;  // coefficients, low degree first

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division (the divisor is monic in every use below).
Poly poly_div(Poly num, const Poly& den) {
    Poly q(num.size(), 0);
    while (num.size() >= den.size() && !num.empty()) {
        long c = num.back() / den.back();
        std::size_t shift = num.size() - den.size();
        q[shift] = c;
        for (std::size_t k = 0; k < den.size(); ++k) num[shift + k] -= c * den[k];
        poly_trim(num);
    }
    poly_trim(q);
    return q;
}

// Phi_m via x^m - 1 = prod_{d | m} Phi_d.
Poly cyclotomic(int m) {
    Poly num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        num = poly_div(std::move(num), cyclotomic(d));
    }
    return num;
}

struct Geometry {
    int m;      // 2n
    Poly phi;   // Phi_2n
    int deg;    // phi(2n)

    explicit Geometry(int n) : m(2 * n), phi(cyclotomic(2 * n)), deg(int(phi.size()) - 1) {}

    // x^k mod phi as a coefficient vector of length deg.
    CycloPoint reduce(Poly p) const {
        for (int k = int(p.size()) - 1; k >= deg; --k) {
            long c = p[k];
            if (c == 0) continue;
            p[k] = 0;
            for (int t = 0; t < deg; ++t) p[k - deg + t] -= c * phi[t];
        }
        p.resize(deg, 0);
        return CycloPoint{std::move(p)};
    }

    CycloPoint embed(Subset s) const {
        Poly p(m, 0);
        for (int e : subset_elements(s)) p[e - 1] += 1;
        return reduce(std::move(p));
    }
};

const Geometry& geometry(int n) {
    static std::map<int, Geometry> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, Geometry(n)).first;
    return it->second;
}

// Edge of the embedded tiling: lower endpoint plus step direction.
using EdgeKey = std::pair<CycloPoint, int>;

std::vector<EdgeKey> tile_edges(const Geometry& g, const Tile& t) {
    Subset b = t.base;
    Subset bi = b | subset_bit(t.i);
    Subset bj = b | subset_bit(t.j);
    return {
        {g.embed(b), t.i},  {g.embed(b), t.j},
        {g.embed(bj), t.i}, {g.embed(bi), t.j},
    };
}

}  // namespace

CycloPoint embed_subset(int n, Subset s) { return geometry(n).embed(s); }

void Tiling::canonicalize() { std::sort(tiles.begin(), tiles.end()); }

std::vector<Subset> Tiling::vertex_set() const {
    std::set<Subset> vs;
    vs.insert(0);
    for (const Tile& t : tiles) {
        vs.insert(t.base);
        vs.insert(t.base | subset_bit(t.i));
        vs.insert(t.base | subset_bit(t.j));
        vs.insert(t.base | subset_bit(t.i) | subset_bit(t.j));
    }
    return {vs.begin(), vs.end()};
}

bool Tiling::has_vertex(Subset s) const {
    if (s == 0) return true;
    for (const Tile& t : tiles) {
        Subset bi = subset_bit(t.i), bj = subset_bit(t.j);
        if (s == t.base || s == (t.base | bi) || s == (t.base | bj) || s == (t.base | bi | bj))
            return true;
    }
    return false;
}

const Tile* Tiling::find_pair(int i, int j) const {
    for (const Tile& t : tiles)
        if (t.i == i && t.j == j) return &t;
    return nullptr;
}

std::string Tiling::key() const {
    std::string k = std::to_string(n) + ":";
    for (const Tile& t : tiles)
        k += std::to_string(t.i) + "," + std::to_string(t.j) + "," + std::to_string(t.base) + ";";
    return k;
}

Tiling standard_tiling(int n) {
    if (n < 2) throw Error("standard_tiling requires n >= 2");
    Tiling t;
    t.n = n;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            t.tiles.push_back(Tile{i, j, subset_range(i + 1, j - 1)});
    t.canonicalize();
    return t;
}

bool is_standard_tiling(const Tiling& t) { return t == standard_tiling(t.n); }

std::vector<Violation> validate(const Tiling& t) {
    std::vector<Violation> out;
    if (t.n < 2) {
        out.push_back({"n must be at least 2"});
        return out;
    }
    const Geometry& g = geometry(t.n);

    std::map<std::pair<int, int>, int> pair_count;
    for (const Tile& tile : t.tiles) {
        if (tile.i < 1 || tile.j <= tile.i || tile.j > t.n) {
            out.push_back({"bad pair {" + std::to_string(tile.i) + "," + std::to_string(tile.j) + "}"});
            continue;
        }
        if (tile.base & (subset_bit(tile.i) | subset_bit(tile.j)))
            out.push_back({"base of {" + std::to_string(tile.i) + "," + std::to_string(tile.j) +
                           "} contains its own direction"});
        if (tile.base >= (Subset{1} << t.n))
            out.push_back({"base of {" + std::to_string(tile.i) + "," + std::to_string(tile.j) +
                           "} is not a subset of [n]"});
        pair_count[{tile.i, tile.j}]++;
    }
    for (int i = 1; i <= t.n; ++i)
        for (int j = i + 1; j <= t.n; ++j) {
            auto it = pair_count.find({i, j});
            int c = it == pair_count.end() ? 0 : it->second;
            if (c == 0)
                out.push_back({"pair {" + std::to_string(i) + "," + std::to_string(j) + "} missing"});
            else if (c > 1)
                out.push_back({"duplicate pair {" + std::to_string(i) + "," + std::to_string(j) + "}"});
        }
    if (!out.empty()) return out;

    // Exact edge matching: interior edges twice, polygon boundary edges once.
    std::map<EdgeKey, int> edges;
    for (const Tile& tile : t.tiles)
        for (EdgeKey& e : tile_edges(g, tile)) edges[std::move(e)]++;

    std::set<EdgeKey> boundary;
    Subset acc = 0;
    for (int k = 1; k <= t.n; ++k) {  // right path: e_1 e_2 ... e_n
        boundary.insert({g.embed(acc), k});
        acc |= subset_bit(k);
    }
    acc = 0;
    for (int k = t.n; k >= 1; --k) {  // left path: e_n ... e_1
        boundary.insert({g.embed(acc), k});
        acc |= subset_bit(k);
    }

    for (const auto& [key, count] : edges) {
        bool on_boundary = boundary.count(key) > 0;
        if (on_boundary && count != 1)
            out.push_back({"boundary edge covered " + std::to_string(count) + " times (dir " +
                           std::to_string(key.second) + ")"});
        if (!on_boundary && count == 1)
            out.push_back({"dangling edge in direction " + std::to_string(key.second)});
        if (!on_boundary && count > 2)
            out.push_back({"edge overlap in direction " + std::to_string(key.second)});
    }
    for (const EdgeKey& b : boundary)
        if (!edges.count(b))
            out.push_back({"boundary gap in direction " + std::to_string(b.second)});
    return out;
}

namespace {

Hexagon make_hexagon(int a, int b, int c, Subset s, bool valley) {
    Hexagon h;
    h.d1 = a;
    h.d2 = b;
    h.d3 = c;
    h.base = s;
    h.valley = valley;
    Subset ba = subset_bit(a), bb = subset_bit(b), bc = subset_bit(c);
    if (valley) {
        h.center = s | bb;
        h.tiles = {Tile{a, b, s}, Tile{b, c, s}, Tile{a, c, s | bb}};
    } else {
        h.center = s | ba | bc;
        h.tiles = {Tile{a, c, s}, Tile{a, b, s | bc}, Tile{b, c, s | ba}};
    }
    h.boundary = {s, s | ba, s | ba | bb, s | ba | bb | bc, s | bb | bc, s | bc};
    return h;
}

}  // namespace

std::vector<Hexagon> find_hexagons(const Tiling& t) {
    std::map<std::pair<int, int>, Subset> base_of;
    for (const Tile& tile : t.tiles) base_of[{tile.i, tile.j}] = tile.base;

    std::vector<Hexagon> out;
    for (int a = 1; a <= t.n; ++a)
        for (int b = a + 1; b <= t.n; ++b)
            for (int c = b + 1; c <= t.n; ++c) {
                Subset sab = base_of[{a, b}], sbc = base_of[{b, c}], sac = base_of[{a, c}];
                if (sab == sbc && sac == (sab | subset_bit(b)))
                    out.push_back(make_hexagon(a, b, c, sab, true));
                else if (sab == (sac | subset_bit(c)) && sbc == (sac | subset_bit(a)))
                    out.push_back(make_hexagon(a, b, c, sac, false));
            }
    std::sort(out.begin(), out.end(),
              [](const Hexagon& x, const Hexagon& y) { return (x <=> y) < 0; });
    return out;
}

Tiling apply_flip(const Tiling& t, const Hexagon& h) {
    for (const Tile& needed : h.tiles)
        if (std::find(t.tiles.begin(), t.tiles.end(), needed) == t.tiles.end())
            throw Error("hexagon is not flippable in this tiling");

    Hexagon mirrored = make_hexagon(h.d1, h.d2, h.d3, h.base, !h.valley);
    Tiling out = t;
    for (Tile& tile : out.tiles) {
        for (int k = 0; k < 3; ++k)
            if (tile == h.tiles[k]) {
                // same pair, re-anchored base
                for (const Tile& repl : mirrored.tiles)
                    if (repl.i == tile.i && repl.j == tile.j) tile = repl;
                break;
            }
    }
    out.canonicalize();
    return out;
}

int enumeration_bound(int bound) {
    if (bound > 0) return bound;
    if (const char* env = std::getenv("HEXANET_MAX_N")) {
        int v = std::atoi(env);
        if (v >= 2) return v;
    }
    return 6;
}

std::vector<Tiling> enumerate_tilings(int n, int bound) {
    if (n > enumeration_bound(bound))
        throw BoundExceededError("enumeration bound exceeded for n = " + std::to_string(n) +
                                 " (limit " + std::to_string(enumeration_bound(bound)) + ")");
    Tiling t0 = standard_tiling(n);
    std::unordered_set<std::string> seen{t0.key()};
    std::deque<Tiling> queue{t0};
    std::vector<Tiling> out;
    while (!queue.empty()) {
        Tiling cur = std::move(queue.front());
        queue.pop_front();
        out.push_back(cur);
        for (const Hexagon& h : find_hexagons(cur)) {
            Tiling next = apply_flip(cur, h);
            if (seen.insert(next.key()).second) queue.push_back(next);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Tiling& a, const Tiling& b) { return a.tiles < b.tiles; });
    return out;
}

std::vector<Hexagon> flip_path(const Tiling& t1, const Tiling& t2, int bound) {
    if (t1.n != t2.n) throw Error("flip_path: tilings have different n");
    if (t1.n > enumeration_bound(bound))
        throw BoundExceededError("flip_path bound exceeded for n = " + std::to_string(t1.n));
    Tiling a = t1, b = t2;
    a.canonicalize();
    b.canonicalize();
    if (a == b) return {};

    struct Step {
        std::string parent;
        Hexagon via;
    };
    std::unordered_map<std::string, Step> prev;
    std::unordered_map<std::string, Tiling> byKey{{a.key(), a}};
    std::deque<std::string> queue{a.key()};
    std::string target = b.key();
    while (!queue.empty()) {
        std::string curKey = std::move(queue.front());
        queue.pop_front();
        const Tiling& cur = byKey[curKey];
        for (const Hexagon& h : find_hexagons(cur)) {
            Tiling next = apply_flip(cur, h);
            std::string nk = next.key();
            if (byKey.count(nk)) continue;
            byKey[nk] = next;
            prev[nk] = {curKey, h};
            if (nk == target) {
                std::vector<Hexagon> path;
                std::string at = nk;
                while (at != a.key()) {
                    path.push_back(prev[at].via);
                    at = prev[at].parent;
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            queue.push_back(nk);
        }
    }
    throw Error("flip_path: target tiling unreachable (is it valid?)");
}

}  // namespace hexanet
