#include "hexanet/network.hpp"

#include <algorithm>

namespace hexanet {

int sigma_rank(int rank) { return (rank / 2) % 2 == 0 ? 1 : -1; }

const Scalar& Network::vertex(Subset s) const {
    auto it = vertex_values.find(s);
    if (it == vertex_values.end())
        throw Error("network has no vertex " + subset_to_string(s));
    return it->second;
}

const Scalar& Network::face(int i, int j) const {
    auto it = face_values.find({i, j});
    if (it == face_values.end())
        throw Error("network has no face {" + std::to_string(i) + "," + std::to_string(j) + "}");
    return it->second;
}

Ring Network::ring() const {
    if (!vertex_values.empty()) return vertex_values.begin()->second.ring();
    return Ring::Rat;
}

bool Network::all_nonzero() const {
    for (const auto& [k, v] : vertex_values)
        if (v.is_zero()) return false;
    for (const auto& [k, v] : face_values)
        if (v.is_zero()) return false;
    return true;
}

namespace {

Scalar sig(Ring ring, int rank) {
    return sigma_rank(rank) == 1 ? Scalar::one(ring) : -Scalar::one(ring);
}

}  // namespace

Network matrix_to_network(const ExactMatrix& m, const Tiling& t) {
    if (matrix_ring(m) == Ring::Quat)
        throw Error("matrix_to_network needs a commutative ring; use q_matrix_to_network");
    Network net;
    net.tiling = t;
    const Ring ring = matrix_ring(m);
    for (Subset s : t.vertex_set()) {
        Scalar v = sig(ring, subset_size(s)) * minor(m, MinorSpec{s, s});
        if (v.is_zero()) throw NonGenericError("vertex " + subset_to_string(s));
        net.vertex_values[s] = std::move(v);
    }
    for (const Tile& tile : t.tiles) {
        MinorSpec spec{tile.base | subset_bit(tile.j), tile.base | subset_bit(tile.i)};
        Scalar v = sig(ring, subset_size(tile.base) + 1) * minor(m, spec);
        if (v.is_zero()) throw NonGenericError("face " + spec.to_string());
        net.face_values[{tile.i, tile.j}] = std::move(v);
    }
    return net;
}

std::array<Scalar, 4> hexahedron_up(const HexahedronInput& h) {
    const auto& a = h.a;
    for (int k = 0; k <= 3; ++k)
        if (a[k].is_zero()) throw NonGenericError("hexahedron slot a" + std::to_string(k));
    Scalar a123 = a[1] * a[2] * a[3];
    Scalar a789 = a[7] * a[8] * a[9];
    Scalar s1 = a123 + a789 + a[0] * a[4] * a[7];
    Scalar s2 = a123 + a789 + a[0] * a[5] * a[8];
    Scalar s3 = a123 + a789 + a[0] * a[6] * a[9];
    Scalar a1s = s1 / (a[1] * a[0]);
    Scalar a2s = s2 / (a[2] * a[0]);
    Scalar a3s = s3 / (a[3] * a[0]);
    Scalar big = a123 * a123 +
                 a123 * (Scalar::rational(2).embed(a[0].ring()) * a789 + a[0] * a[4] * a[7] +
                         a[0] * a[5] * a[8] + a[0] * a[6] * a[9]) +
                 (a[8] * a[9] + a[0] * a[4]) * (a[9] * a[7] + a[0] * a[5]) *
                     (a[7] * a[8] + a[0] * a[6]);
    Scalar a0s = big / (a[0] * a[0] * a123);
    return {a0s, a1s, a2s, a3s};
}

std::array<Scalar, 4> hexahedron_down(const std::array<Scalar, 4>& starred,
                                      const std::array<Scalar, 6>& a4_to_a9) {
    HexahedronInput rev;
    rev.a[0] = starred[0];
    rev.a[1] = starred[1];
    rev.a[2] = starred[2];
    rev.a[3] = starred[3];
    // top-down reversal: a4<->a7, a5<->a8, a6<->a9
    rev.a[4] = a4_to_a9[3];
    rev.a[5] = a4_to_a9[4];
    rev.a[6] = a4_to_a9[5];
    rev.a[7] = a4_to_a9[0];
    rev.a[8] = a4_to_a9[1];
    rev.a[9] = a4_to_a9[2];
    return hexahedron_up(rev);
}

std::array<Scalar, 4> hexahedron_residuals(const HexahedronInput& h,
                                           const std::array<Scalar, 4>& starred) {
    const auto& a = h.a;
    Scalar a123 = a[1] * a[2] * a[3];
    Scalar a789 = a[7] * a[8] * a[9];
    Scalar two = Scalar::rational(2).embed(a[0].ring());
    return {
        starred[0] * a[0] * a[0] * a123 -
            (a123 * a123 +
             a123 * (two * a789 + a[0] * a[4] * a[7] + a[0] * a[5] * a[8] + a[0] * a[6] * a[9]) +
             (a[8] * a[9] + a[0] * a[4]) * (a[9] * a[7] + a[0] * a[5]) *
                 (a[7] * a[8] + a[0] * a[6])),
        starred[1] * a[1] * a[0] - (a123 + a789 + a[0] * a[4] * a[7]),
        starred[2] * a[2] * a[0] - (a123 + a789 + a[0] * a[5] * a[8]),
        starred[3] * a[3] * a[0] - (a123 + a789 + a[0] * a[6] * a[9]),
    };
}

const SlotTable& correspondence_table() {
    // Anchors from the matrix-minor arrangement: M_{}^{}=a8, M_1=a4, M_2=a0,
    // M_3=a6; the unique graph-isomorphism extension puts the antipodes at
    // a5={123}, a7={23}, a9={12}, a0*={13}. Signs flip on ranks 2 and 3 and
    // on the faces anchored one level up, whose minors are also transposed.
    static const SlotTable table = [] {
        SlotTable t;
        t.vertices = {{
            {0b010, +1},  // a0  = {2}
            {0b001, +1},  // a4  = {1}
            {0b111, -1},  // a5  = {1,2,3}
            {0b100, +1},  // a6  = {3}
            {0b110, -1},  // a7  = {2,3}
            {0b000, +1},  // a8  = {}
            {0b011, -1},  // a9  = {1,2}
            {0b101, -1},  // a0* = {1,3}
        }};
        t.faces = {{
            {1, 2, 0b000, +1, true},   // a1
            {1, 3, 0b010, -1, false},  // a2
            {2, 3, 0b000, +1, true},   // a3
            {1, 2, 0b100, -1, false},  // a1*
            {1, 3, 0b000, +1, true},   // a2*
            {2, 3, 0b001, -1, false},  // a3*
        }};
        return t;
    }();
    return table;
}

namespace {

Subset abs_subset(Subset s, const std::array<int, 3>& dirs, Subset rel) {
    Subset out = s;
    for (int k = 0; k < 3; ++k)
        if (rel & (Subset{1} << k)) out |= subset_bit(dirs[k]);
    return out;
}

Scalar slot_value_vertex(const ExactMatrix& m, Subset s, const std::array<int, 3>& dirs,
                         const SlotTable::VertexSlot& vs) {
    Subset a = abs_subset(s, dirs, vs.rel);
    Scalar v = minor(m, MinorSpec{a, a});
    return vs.sign == 1 ? v : -v;
}

Scalar slot_value_face(const ExactMatrix& m, Subset s, const std::array<int, 3>& dirs,
                       const SlotTable::FaceSlot& fs) {
    Subset base = abs_subset(s, dirs, fs.rel_base);
    int i = dirs[fs.p - 1], j = dirs[fs.q - 1];
    MinorSpec spec = fs.row_larger
                         ? MinorSpec{base | subset_bit(j), base | subset_bit(i)}
                         : MinorSpec{base | subset_bit(i), base | subset_bit(j)};
    Scalar v = minor(m, spec);
    return fs.sign == 1 ? v : -v;
}

}  // namespace

SlotValues slot_values(const ExactMatrix& m, Subset s, const std::array<int, 3>& dirs,
                       const SlotTable& table) {
    SlotValues out;
    static const int vertex_slot_index[8] = {0, 4, 5, 6, 7, 8, 9, -1};
    for (int k = 0; k < 8; ++k) {
        Scalar v = slot_value_vertex(m, s, dirs, table.vertices[k]);
        if (vertex_slot_index[k] >= 0)
            out.input.a[vertex_slot_index[k]] = v;
        else
            out.starred[0] = v;  // a0*
    }
    for (int k = 0; k < 3; ++k) out.input.a[k + 1] = slot_value_face(m, s, dirs, table.faces[k]);
    for (int k = 0; k < 3; ++k) out.starred[k + 1] = slot_value_face(m, s, dirs, table.faces[k + 3]);
    return out;
}

std::vector<std::pair<Subset, std::array<int, 3>>> rank3_intervals(int n) {
    std::vector<std::pair<Subset, std::array<int, 3>>> out;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c) {
                Subset dirs_mask = subset_bit(a) | subset_bit(b) | subset_bit(c);
                Subset rest = full_subset(n) & ~dirs_mask;
                // iterate all subsets of rest
                Subset s = 0;
                for (;;) {
                    out.push_back({s, {a, b, c}});
                    if (s == rest) break;
                    s = (s - rest) & rest;
                }
            }
    return out;
}

std::vector<SlotTable> correspondence_search(int trials, std::uint64_t seed) {
    // Vertex images under all 48 automorphisms of the 3-cube, acting on the
    // stored table; face slots follow their four corners; upper/lower face
    // classes then try both signs and both transpose orientations.
    const SlotTable& base = correspondence_table();

    std::vector<std::array<int, 3>> perms = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3},
                                             {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
    Rng rng(seed);
    std::vector<ExactMatrix> samples;
    for (int t = 0; t < trials; ++t) samples.push_back(random_generic_matrix(3, Ring::Rat, rng));

    std::vector<SlotTable> found;
    for (const auto& perm : perms) {
        for (Subset flip = 0; flip < 8; ++flip) {
            // automorphism: relabel directions by perm, then complement the
            // flipped coordinates
            auto act = [&](Subset rel) {
                Subset out = 0;
                for (int k = 0; k < 3; ++k) {
                    bool bit = (rel >> (k)) & 1;
                    int img = perm[k];
                    if ((flip >> (img - 1)) & 1) bit = !bit;
                    if (bit) out |= Subset{1} << (img - 1);
                }
                return out;
            };
            SlotTable cand = base;
            bool ok_struct = true;
            for (auto& vs : cand.vertices) {
                vs.rel = act(vs.rel);
                vs.sign = sigma_rank(subset_size(vs.rel));  // eq:F pins vertex signs
            }
            for (auto& fs : cand.faces) {
                // a face is the rank-2 interval [base, base+{p,q}]; its image
                // is the interval spanned by the images of its 4 corners
                Subset lo = act(fs.rel_base);
                Subset hi = act(fs.rel_base | (Subset{1} << (fs.p - 1)) | (Subset{1} << (fs.q - 1)));
                Subset span = lo ^ hi;
                Subset nb = lo & hi;
                if (subset_size(span) != 2 || (lo & ~(nb | span)) != 0) {
                    ok_struct = false;
                    break;
                }
                auto els = subset_elements(span);
                fs.p = els[0];
                fs.q = els[1];
                fs.rel_base = nb;
            }
            if (!ok_struct) continue;
            for (int sign_pat = 0; sign_pat < 4; ++sign_pat) {
                for (int orient_pat = 0; orient_pat < 4; ++orient_pat) {
                    SlotTable t2 = cand;
                    for (auto& fs : t2.faces) {
                        bool upper = subset_size(fs.rel_base) == 1;
                        int cls = upper ? 1 : 0;
                        fs.sign = (upper ? -1 : +1) * (((sign_pat >> cls) & 1) ? -1 : +1);
                        fs.row_larger = upper ? false : true;
                        if ((orient_pat >> cls) & 1) fs.row_larger = !fs.row_larger;
                    }
                    bool all_ok = true;
                    for (const ExactMatrix& m : samples) {
                        SlotValues sv = slot_values(m, 0, {1, 2, 3}, t2);
                        auto res = hexahedron_residuals(sv.input, sv.starred);
                        for (const Scalar& r : res)
                            if (!r.is_zero()) {
                                all_ok = false;
                                break;
                            }
                        if (!all_ok) break;
                    }
                    if (all_ok) found.push_back(t2);
                }
            }
        }
    }
    return found;
}

namespace {

Scalar vertex_raw(const Network& net, Subset abs, int rank) {
    return sig(net.ring(), rank) * net.vertex(abs);
}

}  // namespace

Network cube_move(const Network& net, const Hexagon& h) {
    const Ring ring = net.ring();
    if (ring == Ring::Quat)
        throw Error("cube_move is defined over commutative rings");
    const Subset S = h.base;
    const int s = subset_size(S);
    const std::array<int, 3> d = {h.d1, h.d2, h.d3};
    auto rel_abs = [&](Subset rel) { return abs_subset(S, d, rel); };

    // raw principal minors around the interval (center depends on valley/peak)
    std::array<Scalar, 8> m;
    auto have = [&](Subset rel) {
        return net.vertex_values.count(rel_abs(rel)) > 0;
    };
    auto load = [&](Subset rel) {
        m[rel] = vertex_raw(net, rel_abs(rel), s + subset_size(rel));
    };
    for (Subset rel : {Subset(0b000), Subset(0b001), Subset(0b100), Subset(0b011),
                       Subset(0b110), Subset(0b111)})
        load(rel);

    auto nonzero_or_throw = [&](const Scalar& v, const std::string& what) {
        if (v.is_zero()) throw NonGenericError(what);
        return v;
    };

    Tiling flipped = apply_flip(net.tiling, h);
    Network out;
    out.tiling = flipped;
    out.vertex_values = net.vertex_values;
    out.face_values = net.face_values;

    const Scalar sg1 = sig(ring, s + 1), sg2 = sig(ring, s + 2);

    if (h.valley) {
        if (!have(0b010)) throw Error("cube_move: valley center missing");
        load(0b010);
        HexahedronInput in;
        in.a[8] = m[0b000];
        in.a[4] = m[0b001];
        in.a[0] = m[0b010];
        in.a[6] = m[0b100];
        in.a[9] = -m[0b011];
        in.a[7] = -m[0b110];
        in.a[5] = -m[0b111];
        in.a[1] = sg1 * net.face(d[0], d[1]);
        in.a[3] = sg1 * net.face(d[1], d[2]);
        // upper valley face: transpose via Dodgson around base S+{d2}
        Scalar raw_up = sg2 * net.face(d[0], d[2]);
        nonzero_or_throw(raw_up, "face {" + std::to_string(d[0]) + "," + std::to_string(d[2]) + "}");
        Scalar partner = (m[0b011] * m[0b110] - m[0b010] * m[0b111]) / raw_up;
        in.a[2] = -partner;

        auto starred = hexahedron_up(in);

        Scalar m13 = -starred[0];
        out.vertex_values.erase(rel_abs(0b010));
        out.vertex_values[rel_abs(0b101)] = sg2 * m13;
        out.face_values[{d[0], d[2]}] = sg1 * starred[2];  // a2* is a lower face
        Scalar sm12 = nonzero_or_throw(-starred[1], "transposed minor at a1*");
        out.face_values[{d[0], d[1]}] = sg2 * ((m13 * m[0b110] - m[0b100] * m[0b111]) / sm12);
        Scalar sm23 = nonzero_or_throw(-starred[3], "transposed minor at a3*");
        out.face_values[{d[1], d[2]}] = sg2 * ((m[0b011] * m13 - m[0b001] * m[0b111]) / sm23);
    } else {
        if (!have(0b101)) throw Error("cube_move: peak center missing");
        load(0b101);
        std::array<Scalar, 4> starred;
        std::array<Scalar, 6> boundary = {m[0b001], -m[0b111], m[0b100],
                                          -m[0b110], m[0b000], -m[0b011]};
        starred[0] = -m[0b101];
        starred[2] = sg1 * net.face(d[0], d[2]);  // a2*, lower
        Scalar raw12 = sg2 * net.face(d[0], d[1]);  // at base S+{d3}, row-larger
        nonzero_or_throw(raw12, "face {" + std::to_string(d[0]) + "," + std::to_string(d[1]) + "}");
        starred[1] = -((m[0b101] * m[0b110] - m[0b100] * m[0b111]) / raw12);
        Scalar raw23 = sg2 * net.face(d[1], d[2]);  // at base S+{d1}
        nonzero_or_throw(raw23, "face {" + std::to_string(d[1]) + "," + std::to_string(d[2]) + "}");
        starred[3] = -((m[0b011] * m[0b101] - m[0b001] * m[0b111]) / raw23);

        auto down = hexahedron_down(starred, boundary);

        Scalar m2 = down[0];
        out.vertex_values.erase(rel_abs(0b101));
        out.vertex_values[rel_abs(0b010)] = sg1 * m2;
        out.face_values[{d[0], d[1]}] = sg1 * down[1];
        out.face_values[{d[1], d[2]}] = sg1 * down[3];
        Scalar sm13 = nonzero_or_throw(-down[2], "transposed minor at a2");
        out.face_values[{d[0], d[2]}] = sg2 * ((m[0b011] * m[0b110] - m2 * m[0b111]) / sm13);
    }
    return out;
}

Network normalize(const Network& net) {
    const Scalar& v0 = net.vertex(0);
    if (v0.is_zero()) throw NonGenericError("vertex {}");
    Network out = net;
    Scalar inv = v0.inverse();
    for (auto& [k, v] : out.vertex_values) v = v * inv;
    for (auto& [k, v] : out.face_values) v = v * inv;
    return out;
}

bool equivalent(const Network& net1, const Network& net2) {
    if (net1.tiling.n != net2.tiling.n) throw Error("equivalent: different n");
    Network a = normalize(net1);
    Network b = normalize(net2);
    for (const Hexagon& h : flip_path(a.tiling, b.tiling)) a = cube_move(a, h);
    return a == b;
}

}  // namespace hexanet
