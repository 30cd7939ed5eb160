#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hexanet/error.hpp"
#include "hexanet/scalar.hpp"
#include "hexanet/subset.hpp"

namespace hexanet {

// Dense square matrix over an exact ring T. Indices are 1-based, matching
// the row/column subsets of [n] used everywhere else. `one` is the
// multiplicative identity of T (needed for empty minors; T alone cannot
// supply it because Scalar carries a ring tag and LaurentPoly a width).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int n, T one) : n_(n), one_(std::move(one)), e_(std::size_t(n) * n, zero_of(one_)) {}

    int n() const { return n_; }
    const T& one() const { return one_; }

    T& at(int r, int c) { return e_[std::size_t(r - 1) * n_ + (c - 1)]; }
    const T& at(int r, int c) const { return e_[std::size_t(r - 1) * n_ + (c - 1)]; }

    Matrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
        Matrix out(int(rows.size()), one_);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c)
                out.at(int(r) + 1, int(c) + 1) = at(rows[r], cols[c]);
        return out;
    }

    bool operator==(const Matrix& other) const { return n_ == other.n_ && e_ == other.e_; }

private:
    static T zero_of(const T& one) { return one - one; }

    int n_ = 0;
    T one_{};
    std::vector<T> e_;
};

using ExactMatrix = Matrix<Scalar>;

struct MinorSpec {
    Subset rows = 0;
    Subset cols = 0;
    std::string to_string() const {
        return "rows " + subset_to_string(rows) + " cols " + subset_to_string(cols);
    }
};

ExactMatrix make_matrix(int n, Ring ring);
Ring matrix_ring(const ExactMatrix& m);

// Cofactor expansion; no divisions, works over any commutative ring.
template <class T>
T det_expand(const Matrix<T>& m) {
    if (m.n() == 0) return m.one();
    if (m.n() == 1) return m.at(1, 1);
    T acc = m.one() - m.one();
    std::vector<int> all;
    for (int k = 2; k <= m.n(); ++k) all.push_back(k);
    std::vector<int> cols;
    for (int c = 1; c <= m.n(); ++c) {
        cols.clear();
        for (int k = 1; k <= m.n(); ++k)
            if (k != c) cols.push_back(k);
        T term = m.at(1, c) * det_expand(m.submatrix(all, cols));
        if (c % 2 == 1)
            acc = acc + term;
        else
            acc = acc - term;
    }
    return acc;
}

// Fraction-free (Bareiss) elimination; exact over Q and Q(i).
// Throws on a quaternionic matrix (no commutative determinant there).
Scalar det(const ExactMatrix& m);

// det of the submatrix; the empty minor is 1.
Scalar minor(const ExactMatrix& m, const MinorSpec& s);

// Odd class of the almost-principal minor with rows S+{i}, cols S+{j}:
// (i - j) * (-1)^|S| > 0.
bool is_odd(Subset s, int i, int j);

// For a face pair i < j: the odd one of det M_{S+i}^{S+j} / det M_{S+j}^{S+i}.
Scalar odd_almost_principal(const ExactMatrix& m, Subset s, int i, int j);

// Dodgson condensation identity, relative to the index set S:
// det M_{S+ij}^{S+ij} det M_S^S = det M_{S+i} det M_{S+j} - det M_{S+j}^{S+i} det M_{S+i}^{S+j}.
bool dodgson_identity_check(const ExactMatrix& m, Subset s, int i, int j);

// levels[k] is the (n-k+1)x(n-k+1) array of contiguous k x k minors,
// levels[0] all ones, apex = det. Built by the signed octahedron
// recurrence; a vanishing interior minor raises NonGeneric naming it.
struct DodgsonPyramid {
    std::vector<std::vector<std::vector<Scalar>>> levels;
    const Scalar& apex() const { return levels.back()[0][0]; }
};
DodgsonPyramid dodgson_pyramid(const ExactMatrix& m);

// All principal and almost-principal minors (both transpose classes)
// nonzero; returns the first vanishing spec if not.
std::optional<MinorSpec> genericity_witness(const ExactMatrix& m);
bool is_generic(const ExactMatrix& m);

// Entries p/q, p in [-20,20], q in [1,5]; resamples until generic.
ExactMatrix random_generic_matrix(int n, Ring ring, Rng& rng);
ExactMatrix random_matrix(int n, Ring ring, Rng& rng);

ExactMatrix conjugate_transpose(const ExactMatrix& m);
bool is_hermitian_matrix(const ExactMatrix& m);

}  // namespace hexanet
