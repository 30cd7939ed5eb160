#include "hexanet/reconstruct.hpp"

namespace hexanet {

std::vector<FillStep> fill_schedule(int n, bool hermitian) {
    std::vector<FillStep> steps;
    for (int p = 1; p <= n; ++p) {
        for (int i = 1; i + p - 1 <= n; ++i)
            if (p == 1 || !hermitian) steps.push_back({true, i, i + p - 1});
        for (int i = 1; i + p <= n; ++i) steps.push_back({false, i, i + p});
    }
    return steps;
}

Scalar solve_entry(const ExactMatrix& m, const MinorSpec& s, const Scalar& target,
                   std::pair<int, int> unknown) {
    auto rows = subset_elements(s.rows);
    auto cols = subset_elements(s.cols);
    if (rows.size() != cols.size()) throw Error("solve_entry: row/col size mismatch");
    int ur = -1, uc = -1;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        if (rows[k] == unknown.first) ur = int(k);
        if (cols[k] == unknown.second) uc = int(k);
    }
    if (ur < 0 || uc < 0) throw Error("solve_entry: unknown lies outside the minor");
    if (rows.size() == 1) return target;  // 1x1 spec: the entry is the minor

    std::vector<int> sub_rows, sub_cols;
    for (std::size_t k = 0; k < rows.size(); ++k)
        if (int(k) != ur) sub_rows.push_back(rows[k]);
    for (std::size_t k = 0; k < cols.size(); ++k)
        if (int(k) != uc) sub_cols.push_back(cols[k]);
    Scalar cof = det(m.submatrix(sub_rows, sub_cols));
    if ((ur + uc) % 2 == 1) cof = -cof;
    if (cof.is_zero())
        throw ZeroCofactorError("entry (" + std::to_string(unknown.first) + "," +
                                std::to_string(unknown.second) + ") in " + s.to_string());

    ExactMatrix zeroed = m.submatrix(rows, cols);
    zeroed.at(ur + 1, uc + 1) = Scalar::zero(matrix_ring(m));
    Scalar rest = det(zeroed);
    return (target - rest) / cof;
}

namespace {

struct NetworkEnv {
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
        if (den.is_zero()) throw ZeroCofactorError("division in fill");
        return num / den;
    }
    Scalar conj(const Scalar& x) const { return x.conjugate(); }
};

}  // namespace

ExactMatrix reconstruct(const Network& net) {
    if (!is_standard_tiling(net.tiling))
        throw Error("reconstruct requires the standard tiling; use reconstruct_any");
    if (net.vertex(0) != Scalar::one(net.ring())) throw NotNormalizedError();
    NetworkEnv env{net, net.ring()};
    return detail::run_fill<Scalar>(net.tiling.n, env, false);
}

ExactMatrix reconstruct_any(const Network& net) {
    Network cur = net;
    for (const Hexagon& h : flip_path(cur.tiling, standard_tiling(cur.tiling.n)))
        cur = cube_move(cur, h);
    return reconstruct(cur);
}

bool round_trip_check(const ExactMatrix& a, const std::vector<Hexagon>& flips) {
    Network net = matrix_to_network(a, standard_tiling(a.n()));
    std::vector<Hexagon> applied;
    for (const Hexagon& h : flips) {
        net = cube_move(net, h);
        applied.push_back(h);
    }
    for (auto it = applied.rbegin(); it != applied.rend(); ++it) {
        // the reverse flip is the same interval with opposite orientation
        bool done = false;
        for (const Hexagon& h : find_hexagons(net.tiling))
            if (h.d1 == it->d1 && h.d2 == it->d2 && h.d3 == it->d3 && h.base == it->base &&
                h.valley != it->valley) {
                net = cube_move(net, h);
                done = true;
                break;
            }
        if (!done) throw Error("round_trip_check: reverse flip not found");
    }
    return reconstruct(net) == a;
}

}  // namespace hexanet
