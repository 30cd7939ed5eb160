#include "hexanet/laurent.hpp"

#include <algorithm>

#include "hexanet/reconstruct.hpp"

namespace hexanet {

LaurentPoly LaurentPoly::constant(int nvars, Rat c) {
    LaurentPoly p(nvars);
    p.add_term(Exponents(nvars, 0), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int index, int power) {
    LaurentPoly p(nvars);
    Exponents e(nvars, 0);
    e[index] = power;
    p.add_term(std::move(e), 1);
    return p;
}

void LaurentPoly::add_term(Exponents e, Rat c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(std::move(e), std::move(c));
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool LaurentPoly::all_coefficients_one() const {
    for (const auto& [e, c] : terms_)
        if (c != 1) return false;
    return true;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly out = x;
    for (const auto& [e, c] : y.terms_) out.add_term(e, c);
    return out;
}

LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly out = x;
    for (const auto& [e, c] : y.terms_) out.add_term(e, -c);
    return out;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly out(x.nvars_);
    for (const auto& [ex, cx] : x.terms_)
        for (const auto& [ey, cy] : y.terms_) {
            LaurentPoly::Exponents e = ex;
            for (int k = 0; k < x.nvars_; ++k) e[k] += ey[k];
            out.add_term(std::move(e), cx * cy);
        }
    return out;
}

LaurentPoly LaurentPoly::div_monomial(const LaurentPoly& divisor) const {
    if (divisor.term_count() != 1)
        throw Error("non-exact Laurent division: divisor did not collapse to a monomial");
    const auto& [de, dc] = *divisor.terms_.begin();
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents q = e;
        for (int k = 0; k < nvars_; ++k) q[k] -= de[k];
        out.terms_.emplace(std::move(q), c / dc);
    }
    return out;
}

Scalar LaurentPoly::eval(const std::vector<Scalar>& values, Ring ring) const {
    if (int(values.size()) != nvars_) throw Error("eval: wrong number of values");
    Scalar acc = Scalar::zero(ring);
    for (const auto& [e, c] : terms_) {
        Scalar term(ring, c);
        for (int k = 0; k < nvars_ && !term.is_zero(); ++k) {
            if (e[k] == 0) continue;
            if (values[k].is_zero() && e[k] < 0)
                throw Error("eval: zero value for a variable with negative exponent");
            Scalar pow = Scalar::one(ring);
            Scalar base = e[k] > 0 ? values[k] : values[k].inverse();
            for (int t = 0; t < std::abs(e[k]); ++t) pow = pow * base;
            term = term * pow;
        }
        acc = acc + term;
    }
    return acc;
}

LaurentPoly LaurentPoly::permute_variables(const std::vector<int>& perm) const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents p(nvars_, 0);
        for (int k = 0; k < nvars_; ++k) p[perm[k]] = e[k];
        out.add_term(std::move(p), c);
    }
    return out;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string num, den;
        for (int k = 0; k < nvars_; ++k) {
            auto piece = [&](int power) {
                std::string s = names[k];
                if (power > 1) s += "^" + std::to_string(power);
                return s;
            };
            if (e[k] > 0) {
                if (!num.empty()) num += "*";
                num += piece(e[k]);
            } else if (e[k] < 0) {
                if (!den.empty()) den += "*";
                den += piece(-e[k]);
            }
        }
        std::string coeff;
        if (c != 1 || num.empty()) {
            coeff = c.get_num().get_str();
            if (c.get_den() != 1) coeff += "/" + c.get_den().get_str();
        }
        std::string term = coeff;
        if (!num.empty()) term += (coeff.empty() ? "" : "*") + num;
        if (!den.empty()) term += "/(" + den + ")";
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

StandardVars StandardVars::make(int n) {
    StandardVars v;
    v.n = n;
    for (int p = 1; p <= n; ++p) {
        for (int i = 1; i + p - 1 <= n; ++i) {
            v.vertex_index[subset_range(i, i + p - 1)] = int(v.order.size());
            v.order.push_back({true, subset_range(i, i + p - 1), 0, 0});
            if (i + p <= n) {
                v.face_index[{i, i + p}] = int(v.order.size());
                v.order.push_back({false, 0, i, i + p});
            }
        }
    }
    return v;
}

std::vector<std::string> StandardVars::names() const {
    std::vector<std::string> out;
    for (int k = 0; k < count(); ++k) {
        if (count() <= 26)
            out.push_back(std::string(1, char('a' + k)));
        else
            out.push_back("x" + std::to_string(k));
    }
    return out;
}

namespace {

struct SymbolicEnv {
    const StandardVars& vars;
    int nv;

    LaurentPoly one() const { return LaurentPoly::one(nv); }
    LaurentPoly vertex_value(Subset s) const {
        if (s == 0) return one();
        return LaurentPoly::variable(nv, vars.vertex_index.at(s));
    }
    LaurentPoly face_value(int i, int j) const {
        return LaurentPoly::variable(nv, vars.face_index.at({i, j}));
    }
    LaurentPoly div(const LaurentPoly& num, const LaurentPoly& den) const {
        return num.div_monomial(den);
    }
    LaurentPoly conj(const LaurentPoly& x) const { return x; }
};

}  // namespace

Matrix<LaurentPoly> symbolic_reconstruct(int n) {
    if (n > 5) throw BoundExceededError("symbolic_reconstruct supports n <= 5");
    StandardVars vars = StandardVars::make(n);
    SymbolicEnv env{vars, vars.count()};
    return detail::run_fill<LaurentPoly>(n, env, false);
}

// --- half-aztec diamonds -------------------------------------------------

HalfAztec HalfAztec::region(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n) throw Error("half-aztec entry out of range");
    HalfAztec r;
    r.n = n;
    r.i = i;
    r.j = j;
    r.trimmed = i > j;
    if (!r.trimmed) {
        for (int row = 0; row < n; ++row)
            for (int c = row; c <= 2 * n - 1 - row; ++c) r.cells.insert({c, row});
        r.apex = {n, n};
    } else {
        for (int row = 0; row + 1 < n; ++row)
            for (int c = row + 1; c <= 2 * n - 2 - row; ++c) r.cells.insert({c, row});
        r.apex = {n, n - 1};
    }
    std::pair<int, int> first{2 * i - 2, 0}, second{2 * j - 1, 0};  // locations 2i-1 and 2j
    if (!r.cells.count(first) || !r.cells.count(second))
        throw Error("half-aztec removal outside the region");
    r.removed.insert(first);
    r.removed.insert(second);
    return r;
}

namespace {

void enumerate_rec(const HalfAztec& r, std::set<std::pair<int, int>>& open, DominoTiling& cur,
                   std::vector<DominoTiling>& out, int prune_line) {
    if (open.empty()) {
        out.push_back(cur);
        return;
    }
    auto cell = *open.begin();
    auto [x, y] = cell;
    // horizontal partner
    std::pair<int, int> right{x + 1, y}, up{x, y + 1};
    if (open.count(right)) {
        open.erase(cell);
        open.erase(right);
        cur.push_back({cell, right});
        enumerate_rec(r, open, cur, out, prune_line);
        cur.pop_back();
        open.insert(cell);
        open.insert(right);
    }
    if (open.count(up)) {
        // cells weakly above the slope -1 line through the right removed
        // square can only be covered horizontally; skipping the vertical
        // branch there is validated against the unpruned enumeration
        if (!(prune_line >= 0 && x + y >= prune_line)) {
            open.erase(cell);
            open.erase(up);
            cur.push_back({cell, up});
            enumerate_rec(r, open, cur, out, prune_line);
            cur.pop_back();
            open.insert(cell);
            open.insert(up);
        }
    }
}

std::vector<DominoTiling> enumerate_region(const HalfAztec& r, bool prune) {
    std::set<std::pair<int, int>> open;
    for (const auto& c : r.cells)
        if (!r.removed.count(c)) open.insert(c);
    std::vector<DominoTiling> out;
    DominoTiling cur;
    int prune_line = -1;
    if (prune && !r.trimmed) prune_line = 2 * std::max(r.i, r.j);
    enumerate_rec(r, open, cur, out, prune_line);
    return out;
}

}  // namespace

std::vector<DominoTiling> enumerate_half_aztec(int n, int i, int j, bool prune) {
    return enumerate_region(HalfAztec::region(n, i, j), prune);
}

LaurentPoly monomial_weight(const HalfAztec& r, const DominoTiling& tiling,
                            const StandardVars& vars) {
    const int n = r.n;
    const int nv = vars.count();

    // erased edges: the interior edge of each domino
    std::set<std::pair<std::pair<int, int>, bool>> erased;  // (lower-left vertex, horizontal?)
    for (const Domino& d : tiling) {
        auto [a, b] = d;
        if (a.second == b.second) {
            // horizontal domino: erased edge is vertical, at the shared corner
            int x = std::max(a.first, b.first), y = a.second;
            erased.insert({{x, y}, false});
        } else {
            int x = a.first, y = std::max(a.second, b.second);
            erased.insert({{x, y}, true});
        }
    }

    auto drawn = [&](int cx, int cy) { return r.cells.count({cx, cy}) > 0; };
    // horizontal edge (x,y)-(x+1,y): present if a drawn cell lies above or
    // below and the edge is not a domino interior
    auto h_edge = [&](int x, int y) {
        if (erased.count({{x, y}, true})) return false;
        return drawn(x, y) || drawn(x, y - 1);
    };
    auto v_edge = [&](int x, int y) {
        if (erased.count({{x, y}, false})) return false;
        return drawn(x, y) || drawn(x - 1, y);
    };

    LaurentPoly weight = LaurentPoly::one(nv);
    for (int y = 0; y <= n; ++y)
        for (int x = 0; x <= 2 * n; ++x) {
            int deg = h_edge(x, y) + h_edge(x - 1, y) + v_edge(x, y) + v_edge(x, y - 1);
            if (std::pair<int, int>{x, y} == r.apex) deg += 1;
            if (deg == 0) continue;

            // lattice vertex -> T_0 position: site (u, z) = (x + 1, y)
            int u = x + 1, z = y;
            int lo = r.trimmed ? z + 2 : z + 1;
            int hi = r.trimmed ? 2 * n - z : 2 * n + 1 - z;
            if (z < 1 || u < lo || u > hi) continue;  // constant-1 site
            int exponent = deg - 3;
            if (exponent == 0) continue;
            int index;
            if ((u + z) % 2 == 1) {
                int a = (u - z + 1) / 2, b = (u + z - 1) / 2;
                index = vars.vertex_index.at(subset_range(a, b));
            } else {
                int a = (u - z + 2) / 2, b = (u + z) / 2;
                index = vars.face_index.at({a - 1, b});
            }
            weight = weight * LaurentPoly::variable(nv, index, exponent);
        }
    return weight;
}

LaurentPoly half_aztec_entry(int n, int i, int j, const StandardVars& vars) {
    HalfAztec r = HalfAztec::region(n, i, j);
    LaurentPoly acc = LaurentPoly::zero(vars.count());
    for (const DominoTiling& t : enumerate_region(r, true)) acc = acc + monomial_weight(r, t, vars);
    return acc;
}

// --- Schroeder paths ------------------------------------------------------

namespace {

void schroder_rec(int n, int x, int y, std::string& cur, std::vector<std::string>& out) {
    if (x == n && y == n) {
        out.push_back(cur);
        return;
    }
    if (x < n) {
        cur.push_back('E');
        schroder_rec(n, x + 1, y, cur, out);
        cur.pop_back();
    }
    if (x < n && y < n) {
        cur.push_back('D');
        schroder_rec(n, x + 1, y + 1, cur, out);
        cur.pop_back();
    }
    if (y < n && y + 1 <= x) {
        cur.push_back('N');
        schroder_rec(n, x, y + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::string> schroder_paths(int n) {
    if (n > 12) throw BoundExceededError("schroder_paths supports n <= 12");
    std::vector<std::string> out;
    std::string cur;
    schroder_rec(n, 0, 0, cur, out);
    return out;
}

}  // namespace hexanet
