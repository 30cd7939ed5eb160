#include "hexanet/hermitian_quat.hpp"

#include <functional>

#include "hexanet/reconstruct.hpp"

namespace hexanet {

namespace {

Scalar sig(Ring ring, int rank) {
    return sigma_rank(rank) == 1 ? Scalar::one(ring) : -Scalar::one(ring);
}

}  // namespace

bool is_hermitian_network(const Network& net) {
    for (const auto& [v, val] : net.vertex_values)
        if (!val.is_real()) return false;
    for (const Tile& t : net.tiling.tiles) {
        Subset b = t.base, bi = b | subset_bit(t.i), bj = b | subset_bit(t.j);
        const Scalar& f = net.face(t.i, t.j);
        Scalar rhs = net.vertex(b) * net.vertex(bi | bj) + net.vertex(bi) * net.vertex(bj);
        if (norm_sq(f) != rhs.re()) return false;
    }
    return true;
}

std::array<Scalar, 4> kashaev_up(const HexahedronInput& h) {
    const auto& a = h.a;
    const Ring ring = a[0].ring();
    if (a[0].is_zero()) throw NonGenericError("kashaev slot a0");
    if (!a[0].is_real()) throw Error("kashaev: a0 must be real");
    for (int k = 4; k <= 9; ++k)
        if (!a[k].is_real()) throw Error("kashaev: a" + std::to_string(k) + " must be real");
    auto face_ok = [&](const Scalar& f, const Scalar& p, const Scalar& q, const Scalar& r,
                       const Scalar& s) { return norm_sq(f) == (p * q + r * s).re(); };
    if (!face_ok(a[1], a[0], a[4], a[8], a[9]) || !face_ok(a[2], a[0], a[5], a[7], a[9]) ||
        !face_ok(a[3], a[0], a[6], a[7], a[8]))
        throw Error("kashaev: input faces violate the Hermitian face condition");

    Scalar inv_a0 = a[0].inverse();
    Scalar a1s = (a[2] * a[3] + a[1].conjugate() * a[7]) * inv_a0;
    Scalar a2s = (a[3] * a[1] + a[2].conjugate() * a[8]) * inv_a0;
    Scalar a3s = (a[1] * a[2] + a[3].conjugate() * a[9]) * inv_a0;
    Scalar prod = a[1] * a[2] * a[3];
    Scalar two = Scalar::rational(2).embed(ring);
    Scalar a0s = (a[0] * a[4] * a[7] + a[0] * a[5] * a[8] + a[0] * a[6] * a[9] +
                  two * a[7] * a[8] * a[9] + prod + prod.conjugate()) *
                 (inv_a0 * inv_a0);
    return {a0s, a1s, a2s, a3s};
}

bool quaternionic_kashaev_check(const HexahedronInput& h, const std::array<Scalar, 4>& starred) {
    const auto& a = h.a;
    if (a[0].is_zero()) return false;
    Scalar prod = a[1] * a[2] * a[3];
    Scalar two = Scalar::rational(2).embed(a[0].ring());
    bool ok = starred[1] * a[0] == a[2] * a[3] + a[1].conjugate() * a[7];
    ok = ok && starred[2] * a[0] == a[3] * a[1] + a[2].conjugate() * a[8];
    ok = ok && starred[3] * a[0] == a[1] * a[2] + a[3].conjugate() * a[9];
    ok = ok && starred[0] * a[0] * a[0] ==
                   a[0] * a[4] * a[7] + a[0] * a[5] * a[8] + a[0] * a[6] * a[9] +
                       two * a[7] * a[8] * a[9] + prod + prod.conjugate();
    return ok;
}

Network hermitian_params_to_network(int n, const std::vector<Scalar>& diag,
                                    const std::map<std::pair<int, int>, Scalar>& faces) {
    if (int(diag.size()) != n) throw Error("hermitian params: need n diagonal values");
    const Ring ring = diag.empty() ? Ring::Rat : diag[0].ring();
    Network net;
    net.tiling = standard_tiling(n);
    net.vertex_values[0] = Scalar::one(ring);
    for (int k = 1; k <= n; ++k) {
        if (!diag[k - 1].is_real() || diag[k - 1].is_zero())
            throw Error("hermitian params: diagonal values must be nonzero reals");
        net.vertex_values[subset_bit(k)] = diag[k - 1];
    }
    for (const Tile& t : net.tiling.tiles) {
        auto it = faces.find({t.i, t.j});
        if (it == faces.end())
            throw Error("hermitian params: missing face {" + std::to_string(t.i) + "," +
                        std::to_string(t.j) + "}");
        net.face_values[{t.i, t.j}] = it->second;
    }
    // each new rhombus, taken in gap order, has exactly one vertex not yet
    // valued; the face identity determines it
    for (int g = 1; g < n; ++g)
        for (int i = 1; i + g <= n; ++i) {
            int j = i + g;
            Subset base = subset_range(i + 1, j - 1);
            const Scalar& bv = net.vertex(base);
            if (bv.is_zero()) throw NonGenericError("vertex " + subset_to_string(base));
            Scalar norm = Scalar(ring, norm_sq(net.face(i, j)));
            Scalar val =
                (norm - net.vertex(subset_range(i, j - 1)) * net.vertex(subset_range(i + 1, j))) /
                bv;
            net.vertex_values[subset_range(i, j)] = val;
        }
    if (!net.all_nonzero()) throw NonGenericError("hermitian parameter network has a zero label");
    return net;
}

// --- quaternionic determinants ----------------------------------------------

bool is_q_hermitian(const ExactMatrix& m) {
    return matrix_ring(m) == Ring::Quat && is_hermitian_matrix(m);
}

namespace {

// Enumerates cycle decompositions of `mask`, calling sink(#cycles, product
// of cycle traces). Cycles of length 1 and 2 take half the reduced trace;
// longer cycles are canonicalized by second element < last element, which
// picks one of the two orientations (their traces agree on Hermitian
// input).
void cycle_decompositions(const ExactMatrix& m, Subset mask,
                          const std::function<void(int, const Rat&)>& sink) {
    const Ring ring = matrix_ring(m);
    std::function<void(Subset, int, Rat)> rec = [&](Subset rest, int ncycles, Rat acc) {
        if (rest == 0) {
            sink(ncycles, acc);
            return;
        }
        int head = subset_elements(rest).front();
        Subset rest_wo = rest & ~subset_bit(head);
        rec(rest_wo, ncycles + 1, acc * m.at(head, head).re());

        std::function<void(Subset, int, int, const Scalar&)> grow =
            [&](Subset avail, int first, int last, const Scalar& prod) {
                for (int v : subset_elements(avail)) {
                    Scalar extended = prod * m.at(last, v);
                    int cyc_len = 2 + subset_size(rest_wo) - subset_size(avail);
                    if (cyc_len == 2 || first < v) {
                        Scalar closed = extended * m.at(v, head);
                        Rat tr = cyc_len <= 2 ? closed.re() : 2 * closed.re();
                        rec(avail & ~subset_bit(v), ncycles + 1, acc * tr);
                    }
                    grow(avail & ~subset_bit(v), first == 0 ? v : first, v, extended);
                }
            };
        grow(rest_wo, 0, head, Scalar::one(ring));
    };
    rec(mask, 0, Rat(1));
}

}  // namespace

Rat qdet(const ExactMatrix& m) {
    if (!is_hermitian_matrix(m)) throw Error("qdet requires a (q-)Hermitian matrix");
    const int n = m.n();
    Rat total = 0;
    cycle_decompositions(m, full_subset(n), [&](int c, const Rat& traces) {
        total += ((c + n) % 2 == 0 ? traces : -traces);
    });
    return total;
}

namespace {

Scalar pfaffian(const ExactMatrix& a, const std::vector<int>& idx) {
    if (idx.empty()) return Scalar::one(matrix_ring(a));
    int i0 = idx[0];
    Scalar acc = Scalar::zero(matrix_ring(a));
    for (std::size_t p = 1; p < idx.size(); ++p) {
        std::vector<int> rest;
        for (std::size_t q = 1; q < idx.size(); ++q)
            if (q != p) rest.push_back(idx[q]);
        Scalar term = a.at(i0, idx[p]) * pfaffian(a, rest);
        if (p % 2 == 1)
            acc = acc + term;
        else
            acc = acc - term;
    }
    return acc;
}

}  // namespace

Rat qdet_pfaffian(const ExactMatrix& m) {
    if (!is_q_hermitian(m)) throw Error("qdet_pfaffian requires a q-Hermitian matrix");
    const int n = m.n();
    // Mtilde: each quaternion entry becomes its standard 2x2 complex block
    ExactMatrix mt = make_matrix(2 * n, Ring::Gauss);
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
            const Scalar& q = m.at(r, c);
            mt.at(2 * r - 1, 2 * c - 1) = Scalar::gauss(q.comp(0), q.comp(1));
            mt.at(2 * r - 1, 2 * c) = Scalar::gauss(q.comp(2), q.comp(3));
            mt.at(2 * r, 2 * c - 1) = Scalar::gauss(-q.comp(2), q.comp(3));
            mt.at(2 * r, 2 * c) = Scalar::gauss(q.comp(0), -q.comp(1));
        }
    // Z has blocks [[0,1],[-1,0]] on the diagonal: Z*Mtilde swaps row pairs
    ExactMatrix zm = make_matrix(2 * n, Ring::Gauss);
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= 2 * n; ++c) {
            zm.at(2 * r - 1, c) = mt.at(2 * r, c);
            zm.at(2 * r, c) = -mt.at(2 * r - 1, c);
        }
    for (int r = 1; r <= 2 * n; ++r)
        for (int c = r; c <= 2 * n; ++c)
            if (zm.at(r, c) != -zm.at(c, r))
                throw Error("qdet_pfaffian: Z*Mtilde is not antisymmetric");
    std::vector<int> idx;
    for (int k = 1; k <= 2 * n; ++k) idx.push_back(k);
    return pfaffian(zm, idx).to_rational();
}

Scalar q_almost_principal(const ExactMatrix& m, Subset s, int i, int j) {
    if (i == j || subset_contains(s, i) || subset_contains(s, j))
        throw Error("q_almost_principal: bad indices");
    const Ring ring = matrix_ring(m);
    // global sign making the sum restrict to det M_{S+j}^{S+i} over
    // commutative entries: (-1)^{pos(i) + pos(j) + |S| + 1} with positions
    // taken inside S + {i,j}
    const Subset v = s | subset_bit(i) | subset_bit(j);
    auto pos = [&](int x) { return 1 + subset_size(v & (subset_bit(x) - 1)); };
    const int gamma = (pos(i) + pos(j) + subset_size(s) + 1) % 2 == 0 ? 1 : -1;

    Scalar total = Scalar::zero(ring);
    // paths j = p0 -> ... -> pk = i with interior in s, combined with cycle
    // decompositions of the unused indices; sign (-1)^{#cycles}
    std::function<void(Subset, int, const Scalar&)> walk = [&](Subset avail, int last,
                                                               const Scalar& prod) {
        Scalar path_prod = prod * m.at(last, i);
        cycle_decompositions(m, avail, [&](int c, const Rat& traces) {
            total = total + path_prod * Scalar(ring, (c % 2 == 0 ? traces : -traces) * gamma);
        });
        for (int v2 : subset_elements(avail))
            walk(avail & ~subset_bit(v2), v2, prod * m.at(last, v2));
    };
    walk(s, j, Scalar::one(ring));
    return total;
}

Network q_matrix_to_network(const ExactMatrix& m, const Tiling& t) {
    if (!is_q_hermitian(m)) throw Error("q_matrix_to_network requires a q-Hermitian matrix");
    const Ring ring = Ring::Quat;
    Network net;
    net.tiling = t;
    for (Subset s : t.vertex_set()) {
        auto elements = subset_elements(s);
        Scalar v = sig(ring, subset_size(s)) * Scalar(ring, qdet(m.submatrix(elements, elements)));
        if (v.is_zero()) throw NonGenericError("vertex " + subset_to_string(s));
        net.vertex_values[s] = v;
    }
    for (const Tile& tile : t.tiles) {
        Scalar v = sig(ring, subset_size(tile.base) + 1) *
                   q_almost_principal(m, tile.base, tile.i, tile.j);
        if (v.is_zero())
            throw NonGenericError("face {" + std::to_string(tile.i) + "," +
                                  std::to_string(tile.j) + "}");
        net.face_values[{tile.i, tile.j}] = v;
    }
    return net;
}

// --- Hermitian reconstruction -------------------------------------------------

namespace {

struct HermNetworkEnv {
    const Network& net;
    Ring ring;
    Scalar one() const { return Scalar::one(ring); }
    Scalar vertex_value(Subset s) const {
        const Scalar& v = net.vertex(s);
        if (v.is_zero()) throw ZeroCofactorError("vertex " + subset_to_string(s));
        return v;
    }
    Scalar face_value(int i, int j) const {
        const Scalar& v = net.face(i, j);
        if (v.is_zero())
            throw ZeroCofactorError("face {" + std::to_string(i) + "," + std::to_string(j) + "}");
        return v;
    }
    Scalar div(const Scalar& num, const Scalar& den) const {
        if (den.is_zero()) throw ZeroCofactorError("division in hermitian fill");
        return num / den;
    }
    Scalar conj(const Scalar& x) const { return x.conjugate(); }
};

ExactMatrix hermitian_reconstruct_quat(const Network& net) {
    const int n = net.tiling.n;
    ExactMatrix a = make_matrix(n, Ring::Quat);
    for (const FillStep& step : fill_schedule(n, true)) {
        if (step.vertex) {
            a.at(step.i, step.i) = net.vertex(subset_bit(step.i));
            continue;
        }
        const int i = step.i, j = step.j, g = j - i;
        Subset s = subset_range(i + 1, j - 1);
        Scalar target = sig(Ring::Quat, g) * net.face(i, j);
        // with A_ji still zero, the q-almost-principal sum is exactly the
        // part of the defining equation not involving the unknown
        Scalar rest = q_almost_principal(a, s, i, j);
        Scalar cof = sig(Ring::Quat, g - 1) * net.vertex(s);
        if ((g + 1) % 2 == 1) cof = -cof;
        if (cof.is_zero()) throw ZeroCofactorError("vertex " + subset_to_string(s));
        a.at(j, i) = (target - rest) * cof.inverse();
        a.at(i, j) = a.at(j, i).conjugate();
    }
    return a;
}

}  // namespace

ExactMatrix hermitian_reconstruct(const Network& net) {
    if (!is_standard_tiling(net.tiling))
        throw Error("hermitian_reconstruct requires the standard tiling");
    if (net.ring() == Ring::Quat) return hermitian_reconstruct_quat(net);
    HermNetworkEnv env{net, net.ring()};
    return detail::run_fill<Scalar>(net.tiling.n, env, true);
}

// --- Hermitian Laurent ----------------------------------------------------------

HermitianVars HermitianVars::make(int n) {
    HermitianVars v;
    v.n = n;
    auto add_vertex = [&](Subset s, const std::string& name) {
        v.vertex_index[s] = v.nvars++;
        v.names_.push_back(name);
        v.conj_perm.push_back(v.nvars - 1);
    };
    for (int k = 1; k <= n; ++k) add_vertex(subset_bit(k), std::string(1, char('a' + k - 1)));
    for (int len = 2; len <= n - 2; ++len)
        for (int a = 2; a + len - 1 <= n - 1; ++a)
            add_vertex(subset_range(a, a + len - 1),
                       "v" + std::to_string(a) + std::to_string(a + len - 1));
    for (int g = 1; g < n; ++g)
        for (int i = 1; i + g <= n; ++i) {
            int j = i + g;
            std::string base = "x" + std::to_string(i) + std::to_string(j);
            v.face_index[{i, j}] = v.nvars;
            v.names_.push_back(base);
            v.names_.push_back(base + "~");
            v.conj_perm.push_back(v.nvars + 1);
            v.conj_perm.push_back(v.nvars);
            v.nvars += 2;
        }
    return v;
}

namespace {

struct HermSymbolicEnv {
    const HermitianVars& vars;
    LaurentPoly one() const { return LaurentPoly::one(vars.nvars); }
    LaurentPoly vertex_value(Subset s) const {
        if (s == 0) return one();
        return LaurentPoly::variable(vars.nvars, vars.vertex_index.at(s));
    }
    LaurentPoly face_value(int i, int j) const {
        return LaurentPoly::variable(vars.nvars, vars.face_index.at({i, j}));
    }
    LaurentPoly div(const LaurentPoly& num, const LaurentPoly& den) const {
        return num.div_monomial(den);
    }
    LaurentPoly conj(const LaurentPoly& p) const { return p.permute_variables(vars.conj_perm); }
};

// Rewrite x*xbar -> F(v)F(v+ij) + F(v+i)F(v+j) for the faces whose four
// vertices are all parameters; this reduction is what brings the entries
// into the reduced normal form with monomial denominators.
struct PairRule {
    int x, xbar;
    LaurentPoly replacement;
};

LaurentPoly reduce_pairs(LaurentPoly p, const std::vector<PairRule>& rules) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const PairRule& rule : rules) {
            for (const auto& [e, c] : p.terms()) {
                if (e[rule.x] >= 1 && e[rule.xbar] >= 1) {
                    LaurentPoly::Exponents reduced = e;
                    reduced[rule.x] -= 1;
                    reduced[rule.xbar] -= 1;
                    LaurentPoly lowered(p.nvars());
                    lowered.add_term(reduced, c);
                    LaurentPoly original(p.nvars());
                    original.add_term(e, c);
                    p = p - original + lowered * rule.replacement;
                    changed = true;
                    break;
                }
            }
            if (changed) break;
        }
    }
    return p;
}

}  // namespace

Matrix<LaurentPoly> hermitian_symbolic_reconstruct(int n) {
    if (n > 5) throw BoundExceededError("hermitian_symbolic_reconstruct supports n <= 5");
    HermitianVars vars = HermitianVars::make(n);
    HermSymbolicEnv env{vars};
    Matrix<LaurentPoly> m = detail::run_fill<LaurentPoly>(n, env, true);

    std::vector<PairRule> rules;
    for (int g = 1; g < n; ++g)
        for (int i = 2; i + g <= n - 1; ++i) {
            int j = i + g;
            auto vertex = [&](int lo, int hi) {
                return lo > hi ? LaurentPoly::one(vars.nvars)
                               : LaurentPoly::variable(vars.nvars,
                                                       vars.vertex_index.at(subset_range(lo, hi)));
            };
            LaurentPoly repl =
                vertex(i + 1, j - 1) * vertex(i, j) + vertex(i, j - 1) * vertex(i + 1, j);
            int x = vars.face_index.at({i, j});
            rules.push_back({x, x + 1, repl});
        }
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) m.at(r, c) = reduce_pairs(m.at(r, c), rules);
    return m;
}

// --- positivity ------------------------------------------------------------------

RatInterval admissible_interval(const std::map<Subset, Scalar>& assigned, Subset next) {
    auto elements = subset_elements(next);
    const int r = int(elements.size());
    if (r == 0) throw Error("admissible_interval: empty vertex");
    for (std::size_t k = 1; k < elements.size(); ++k)
        if (elements[k] != elements[k - 1] + 1)
            throw Error("admissible_interval: vertex must be a consecutive run");
    if (r == 1) return RatInterval{Rat(0), std::nullopt};

    const int i = elements.front(), j = elements.back();
    auto value = [&](Subset s) -> Rat {
        if (s == 0) return Rat(1);
        auto it = assigned.find(s);
        if (it == assigned.end())
            throw Error("admissible_interval: prerequisite " + subset_to_string(s) + " missing");
        return it->second.to_rational();
    };
    // F(next) must carry sign sigma(r) and keep the completed face norm
    // |F(f)|^2 = P x + Q strictly positive
    Rat p = value(subset_range(i + 1, j - 1));
    Rat q = value(subset_range(i, j - 1)) * value(subset_range(i + 1, j));
    const bool positive = sigma_rank(r) == 1;

    if (p == 0) {
        if (q <= 0) return RatInterval{Rat(0), Rat(0)};  // empty
        return positive ? RatInterval{Rat(0), std::nullopt} : RatInterval{std::nullopt, Rat(0)};
    }
    Rat bound = -q / p;
    if (p > 0)
        return positive ? RatInterval{bound > 0 ? bound : Rat(0), std::nullopt}
                        : RatInterval{bound, Rat(0)};
    return positive ? RatInterval{Rat(0), bound} : RatInterval{std::nullopt, bound < 0 ? bound : Rat(0)};
}

bool is_positive_network(const Network& net) {
    if (!is_hermitian_network(net)) return false;
    for (const auto& [s, v] : net.vertex_values) {
        if (v.is_zero()) return false;
        if ((v.re() > 0) != (sigma(s) == 1)) return false;
    }
    return true;
}

ExactMatrix gram_matrix(const ExactMatrix& b) {
    const int n = b.n();
    ExactMatrix out = ExactMatrix(n, b.one());
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
            Scalar acc = Scalar::zero(matrix_ring(b));
            for (int k = 1; k <= n; ++k) acc += b.at(r, k) * b.at(c, k).conjugate();
            out.at(r, c) = acc;
        }
    return out;
}

Network sample_positive_network(int n, Ring ring, Rng& rng, int budget) {
    if (ring == Ring::Quat) throw Error("sample_positive_network supports rings Q and C");
    for (int attempt = 0; attempt < budget; ++attempt) {
        if (n == 1) {  // degenerate 2-gon: one positive diagonal entry
            ExactMatrix b = random_matrix(1, ring, rng);
            if (b.at(1, 1).is_zero()) continue;
            Network net;
            net.tiling.n = 1;
            net.vertex_values[0] = Scalar::one(ring);
            net.vertex_values[subset_bit(1)] = gram_matrix(b).at(1, 1);
            return net;
        }
        ExactMatrix a = gram_matrix(random_matrix(n, ring, rng));
        if (!is_generic(a)) continue;
        return matrix_to_network(a, standard_tiling(n));
    }
    throw Error("sample_positive_network: resampling budget exhausted");
}

bool sylvester_posdef(const ExactMatrix& m) {
    if (!is_hermitian_matrix(m)) throw Error("sylvester_posdef requires a Hermitian matrix");
    for (int k = 1; k <= m.n(); ++k) {
        std::vector<int> lead;
        for (int t = 1; t <= k; ++t) lead.push_back(t);
        ExactMatrix sub = m.submatrix(lead, lead);
        Rat d = matrix_ring(m) == Ring::Quat ? qdet(sub) : det(sub).to_rational();
        if (d <= 0) return false;
    }
    return true;
}

ExactMatrix random_hermitian_matrix(int n, Ring ring, Rng& rng) {
    ExactMatrix m = make_matrix(n, ring);
    for (int r = 1; r <= n; ++r) {
        m.at(r, r) = Scalar(ring, random_rational(rng));
        for (int c = r + 1; c <= n; ++c) {
            m.at(r, c) = random_scalar(ring, rng);
            m.at(c, r) = m.at(r, c).conjugate();
        }
    }
    return m;
}

ExactMatrix random_hermitian_generic(int n, Ring ring, Rng& rng) {
    for (;;) {
        ExactMatrix m = random_hermitian_matrix(n, ring, rng);
        if (ring == Ring::Quat) {
            try {
                q_matrix_to_network(m, standard_tiling(n));
                return m;
            } catch (const NonGenericError&) {
                continue;
            }
        }
        if (is_generic(m)) return m;
    }
}

}  // namespace hexanet
