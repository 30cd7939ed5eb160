#include "hexanet/matrix.hpp"

namespace hexanet {

ExactMatrix make_matrix(int n, Ring ring) { return ExactMatrix(n, Scalar::one(ring)); }

Ring matrix_ring(const ExactMatrix& m) { return m.one().ring(); }

Scalar det(const ExactMatrix& m) {
    if (matrix_ring(m) == Ring::Quat)
        throw Error("det is undefined over the quaternions; use qdet");
    const int n = m.n();
    if (n == 0) return m.one();
    ExactMatrix w = m;
    Scalar prev_pivot = m.one();
    bool negate = false;
    for (int k = 1; k < n; ++k) {
        if (w.at(k, k).is_zero()) {
            int swap_row = 0;
            for (int r = k + 1; r <= n; ++r)
                if (!w.at(r, k).is_zero()) {
                    swap_row = r;
                    break;
                }
            if (swap_row == 0) return Scalar::zero(matrix_ring(m));
            for (int c = k; c <= n; ++c) std::swap(w.at(k, c), w.at(swap_row, c));
            negate = !negate;
        }
        const Scalar pivot = w.at(k, k);
        for (int r = k + 1; r <= n; ++r) {
            for (int c = k + 1; c <= n; ++c)
                w.at(r, c) = (w.at(r, c) * pivot - w.at(r, k) * w.at(k, c)) / prev_pivot;
            w.at(r, k) = Scalar::zero(matrix_ring(m));
        }
        prev_pivot = pivot;
    }
    Scalar result = w.at(n, n);
    return negate ? -result : result;
}

Scalar minor(const ExactMatrix& m, const MinorSpec& s) {
    auto rows = subset_elements(s.rows);
    auto cols = subset_elements(s.cols);
    if (rows.size() != cols.size()) throw Error("minor: row/col size mismatch");
    if (!rows.empty() && (rows.back() > m.n() || cols.back() > m.n()))
        throw Error("minor: index out of range");
    return det(m.submatrix(rows, cols));
}

bool is_odd(Subset s, int i, int j) {
    if (i == j || subset_contains(s, i) || subset_contains(s, j))
        throw Error("is_odd: indices must be distinct and outside S");
    return ((i > j) ? 1 : -1) * (subset_size(s) % 2 == 0 ? 1 : -1) > 0;
}

Scalar odd_almost_principal(const ExactMatrix& m, Subset s, int i, int j) {
    Subset si = s | subset_bit(i), sj = s | subset_bit(j);
    if (is_odd(s, i, j)) return minor(m, MinorSpec{si, sj});
    return minor(m, MinorSpec{sj, si});
}

bool dodgson_identity_check(const ExactMatrix& m, Subset s, int i, int j) {
    Subset si = s | subset_bit(i), sj = s | subset_bit(j), sij = si | sj;
    Scalar lhs = minor(m, {sij, sij}) * minor(m, {s, s});
    Scalar rhs = minor(m, {si, si}) * minor(m, {sj, sj}) -
                 minor(m, {sj, si}) * minor(m, {si, sj});
    return lhs == rhs;
}

DodgsonPyramid dodgson_pyramid(const ExactMatrix& m) {
    if (matrix_ring(m) == Ring::Quat) throw Error("dodgson_pyramid needs a commutative ring");
    const int n = m.n();
    DodgsonPyramid p;
    p.levels.resize(n + 1);
    p.levels[0].assign(n + 1, std::vector<Scalar>(n + 1, m.one()));
    if (n == 0) return p;
    p.levels[1].assign(n, std::vector<Scalar>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) p.levels[1][r][c] = m.at(r + 1, c + 1);
    for (int k = 1; k < n; ++k) {
        p.levels[k + 1].assign(n - k, std::vector<Scalar>(n - k));
        for (int r = 0; r < n - k; ++r)
            for (int c = 0; c < n - k; ++c) {
                const Scalar& div = p.levels[k - 1][r + 1][c + 1];
                if (div.is_zero())
                    throw NonGenericError(
                        MinorSpec{subset_range(r + 2, r + k), subset_range(c + 2, c + k)}
                            .to_string());
                p.levels[k + 1][r][c] = (p.levels[k][r][c] * p.levels[k][r + 1][c + 1] -
                                         p.levels[k][r][c + 1] * p.levels[k][r + 1][c]) /
                                        div;
            }
    }
    return p;
}

std::optional<MinorSpec> genericity_witness(const ExactMatrix& m) {
    // Both transpose classes of almost-principal minors matter: the network
    // values of non-standard tilings and the cube-move conversions reach the
    // even class too, so both are required nonzero. One elimination per row subset A suffices: by Cramer the
    // minor with rows A and columns (A - i) + j vanishes iff component i of
    // the solution of M_A^A x = M_A^{j} does.
    const int n = m.n();
    const Ring ring = matrix_ring(m);
    for (Subset a = 1; a <= full_subset(n); ++a) {
        auto rows = subset_elements(a);
        const int k = int(rows.size());
        std::vector<int> outside;
        for (int j = 1; j <= n; ++j)
            if (!subset_contains(a, j)) outside.push_back(j);

        // augmented [M_A^A | M_A^{j} for j outside A], plain exact GJ
        const int width = k + int(outside.size());
        std::vector<std::vector<Scalar>> w(k, std::vector<Scalar>(width, Scalar::zero(ring)));
        for (int r = 0; r < k; ++r) {
            for (int c = 0; c < k; ++c) w[r][c] = m.at(rows[r], rows[c]);
            for (std::size_t c = 0; c < outside.size(); ++c)
                w[r][k + int(c)] = m.at(rows[r], outside[c]);
        }
        for (int col = 0; col < k; ++col) {
            int pivot = -1;
            for (int r = col; r < k; ++r)
                if (!w[r][col].is_zero()) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return MinorSpec{a, a};  // principal minor vanishes
            std::swap(w[col], w[pivot]);
            Scalar inv = w[col][col].inverse();
            for (int c = col; c < width; ++c) w[col][c] = w[col][c] * inv;
            for (int r = 0; r < k; ++r) {
                if (r == col || w[r][col].is_zero()) continue;
                Scalar factor = w[r][col];
                for (int c = col; c < width; ++c)
                    w[r][c] = w[r][c] - factor * w[col][c];
            }
        }
        for (int r = 0; r < k; ++r)
            for (std::size_t c = 0; c < outside.size(); ++c)
                if (w[r][k + int(c)].is_zero())
                    return MinorSpec{a, (a & ~subset_bit(rows[r])) | subset_bit(outside[c])};
    }
    return std::nullopt;
}

bool is_generic(const ExactMatrix& m) { return !genericity_witness(m).has_value(); }

ExactMatrix random_matrix(int n, Ring ring, Rng& rng) {
    ExactMatrix m = make_matrix(n, ring);
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) m.at(r, c) = random_scalar(ring, rng);
    return m;
}

ExactMatrix random_generic_matrix(int n, Ring ring, Rng& rng) {
    // Failure probability is negligible but the loop is mandatory.
    for (;;) {
        ExactMatrix m = random_matrix(n, ring, rng);
        if (is_generic(m)) return m;
    }
}

ExactMatrix conjugate_transpose(const ExactMatrix& m) {
    ExactMatrix out = ExactMatrix(m.n(), m.one());
    for (int r = 1; r <= m.n(); ++r)
        for (int c = 1; c <= m.n(); ++c) out.at(r, c) = m.at(c, r).conjugate();
    return out;
}

bool is_hermitian_matrix(const ExactMatrix& m) {
    for (int r = 1; r <= m.n(); ++r)
        for (int c = r; c <= m.n(); ++c)
            if (m.at(r, c) != m.at(c, r).conjugate()) return false;
    return true;
}

}  // namespace hexanet
