#pragma once

#include <vector>

#include "hexanet/network.hpp"

namespace hexanet {

// One solve of the standard-tiling fill: a vertex step fixes the entry
// (i, j) from the principal minor det A_{[i..j]}^{[i..j]}; a face step
// fixes (j, i) from the almost-principal minor det A_{[i+1..j]}^{[i..j-1]}.
// Path p contributes the vertex steps with j - i + 1 = p and the face
// steps with j - i = p; each equation has exactly one unassigned entry.
struct FillStep {
    bool vertex;
    int i, j;
};

// Precomputed from n alone. In hermitian mode the vertex steps with
// rank >= 2 are dropped (those entries come from conjugation instead).
std::vector<FillStep> fill_schedule(int n, bool hermitian = false);

// Solves minor(m, s) = target for the single unassigned entry `unknown`,
// expanding along the unknown's row. Throws ZeroCofactor when the
// expansion coefficient vanishes.
Scalar solve_entry(const ExactMatrix& m, const MinorSpec& s, const Scalar& target,
                   std::pair<int, int> unknown);

// Psi: the unique matrix A with matrix_to_network(A, T_0) = net.
// Requires the standard tiling and F(v0) = 1 (NotNormalized otherwise);
// a vanishing cofactor (equivalently a zero network label) raises
// ZeroCofactor.
ExactMatrix reconstruct(const Network& net);

// Convenience for non-standard tilings: transport to T_0 by cube moves,
// then reconstruct.
ExactMatrix reconstruct_any(const Network& net);

// Phi(A, T_0) transported along `flips` and back, then reconstructed;
// true iff the result equals A exactly.
bool round_trip_check(const ExactMatrix& a, const std::vector<Hexagon>& flips);

namespace detail {

// Shared fill core. Env supplies the network values (as T), exact
// division, and conjugation; T is Scalar for numeric runs and a Laurent
// polynomial for the symbolic ones. Division is only ever by the value at
// the position one row closer to the diagonal (the cofactor of the unknown
// in its defining minor), which genericity keeps nonzero.
template <class T, class Env>
Matrix<T> run_fill(int n, Env& env, bool hermitian) {
    Matrix<T> a(n, env.one());
    std::vector<char> assigned(std::size_t(n) * n, 0);
    auto mark = [&](int r, int c) { assigned[std::size_t(r - 1) * n + (c - 1)] = 1; };
    auto is_assigned = [&](int r, int c) { return assigned[std::size_t(r - 1) * n + (c - 1)] != 0; };

    auto sgn = [&](int k, const T& x) { return sigma_rank(k) == 1 ? x : T(-x); };
    auto cof_sign = [&](int parity, const T& x) { return parity % 2 == 0 ? x : T(-x); };

    // rest = det of the defining submatrix with the unknown forced to zero;
    // every other entry must already be assigned (schedule correctness).
    auto rest_det = [&](const std::vector<int>& rows, const std::vector<int>& cols, int ur,
                        int uc) {
        Matrix<T> sub(int(rows.size()), env.one());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c) {
                if (rows[r] == ur && cols[c] == uc) continue;
                if (!is_assigned(rows[r], cols[c]))
                    throw Error("fill schedule read an unassigned entry");
                sub.at(int(r) + 1, int(c) + 1) = a.at(rows[r], cols[c]);
            }
        return det_expand(sub);
    };

    for (const FillStep& step : fill_schedule(n, hermitian)) {
        if (step.vertex && step.i == step.j) {
            a.at(step.i, step.i) = env.vertex_value(subset_bit(step.i));
            mark(step.i, step.i);
            continue;
        }
        if (step.vertex) {
            const int i = step.i, j = step.j, g = j - i + 1;
            std::vector<int> idx;
            for (int k = i; k <= j; ++k) idx.push_back(k);
            T target = sgn(g, env.vertex_value(subset_range(i, j)));
            T cof = cof_sign(1 + g, sgn(g - 1, env.face_value(i, j)));
            a.at(i, j) = env.div(target - rest_det(idx, idx, i, j), cof);
            mark(i, j);
        } else {
            const int i = step.i, j = step.j, g = j - i;
            std::vector<int> rows, cols;
            for (int k = i + 1; k <= j; ++k) rows.push_back(k);
            for (int k = i; k <= j - 1; ++k) cols.push_back(k);
            T target = sgn(g, env.face_value(i, j));
            T cof = cof_sign(g + 1, sgn(g - 1, env.vertex_value(subset_range(i + 1, j - 1))));
            a.at(j, i) = env.div(target - rest_det(rows, cols, j, i), cof);
            mark(j, i);
            if (hermitian) {
                a.at(i, j) = env.conj(a.at(j, i));
                mark(i, j);
            }
        }
    }
    return a;
}

}  // namespace detail

}  // namespace hexanet
