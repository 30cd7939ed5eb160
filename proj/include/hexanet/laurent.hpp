#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hexanet/matrix.hpp"

namespace hexanet {

// Sparse multivariate Laurent polynomial with exact rational coefficients.
// Exponent vectors are dense over a fixed variable count; no zero
// coefficients are stored and iteration order is canonical (lex on the
// exponent vector).
class LaurentPoly {
public:
    using Exponents = std::vector<int>;

    LaurentPoly() = default;
    explicit LaurentPoly(int nvars) : nvars_(nvars) {}

    static LaurentPoly zero(int nvars) { return LaurentPoly(nvars); }
    static LaurentPoly constant(int nvars, Rat c);
    static LaurentPoly one(int nvars) { return constant(nvars, 1); }
    static LaurentPoly variable(int nvars, int index, int power = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, Rat>& terms() const { return terms_; }
    bool all_coefficients_one() const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y);
    friend LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y);
    friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
    bool operator==(const LaurentPoly& other) const {
        return nvars_ == other.nvars_ && terms_ == other.terms_;
    }

    // Division by a single-term divisor (always exact in the Laurent ring).
    // A multi-term divisor throws: the fill cofactors must have collapsed
    // to monomials, anything else falsifies the Laurent property.
    LaurentPoly div_monomial(const LaurentPoly& divisor) const;

    // Substitutes exact values; a zero value at a variable with a negative
    // exponent somewhere is an error.
    Scalar eval(const std::vector<Scalar>& values, Ring ring) const;

    // Applies a variable permutation (used for formal conjugation).
    LaurentPoly permute_variables(const std::vector<int>& perm) const;

    std::string to_string(const std::vector<std::string>& names) const;

    void add_term(Exponents e, Rat c);

private:
    int nvars_ = 0;
    std::map<Exponents, Rat> terms_;
};

// The standard network positions of T_0 in dotted-path order (path 1
// first, each path read from direction 1 upward), excluding the base
// vertex. One Laurent variable per position; for n <= 5 the names are the
// letters a, b, c, ... matching that order.
struct StandardVars {
    struct Pos {
        bool is_vertex;
        Subset vertex;  // when is_vertex
        int i, j;       // face pair when !is_vertex
    };
    int n = 0;
    std::vector<Pos> order;
    std::map<Subset, int> vertex_index;
    std::map<std::pair<int, int>, int> face_index;

    static StandardVars make(int n);
    int count() const { return int(order.size()); }
    std::vector<std::string> names() const;
};

// Entries of the unique matrix whose standard network has the given
// indeterminate labels: Laurent polynomials, every coefficient +1.
Matrix<LaurentPoly> symbolic_reconstruct(int n);

// --- half-aztec diamonds -------------------------------------------------

// Triangular stack of unit squares: bottom row of 2n cells (x from 0 to
// 2n), each higher row two cells shorter. For entry (i,j) with i <= j the
// bottom cells at locations 2i-1 and 2j are removed; for i > j the outer
// staircase layer is shed first (an order n-1 stack) and the same two
// locations are removed.
struct HalfAztec {
    int n = 0, i = 0, j = 0;
    bool trimmed = false;
    std::set<std::pair<int, int>> cells;    // unit squares by lower-left corner
    std::set<std::pair<int, int>> removed;  // drawn but never covered
    std::pair<int, int> apex;               // vertex carrying the virtual top edge

    static HalfAztec region(int n, int i, int j);
};

// A domino as its two cells.
using Domino = std::array<std::pair<int, int>, 2>;
using DominoTiling = std::vector<Domino>;

// `prune` applies the forced-horizontal-dominoes cut above the slope -1
// line through the right removed square; the unpruned enumeration is kept
// for validating that cut.
std::vector<DominoTiling> enumerate_half_aztec(int n, int i, int j, bool prune = true);

// The monomial prod v^(d-3) over the mapped lattice vertices, where d is
// the number of drawn edges at the vertex (the apex gets one extra) and
// the mapping identifies the vertex lattice with the T_0 positions,
// principal-minor sites interleaved with almost-principal ones.
LaurentPoly monomial_weight(const HalfAztec& region, const DominoTiling& tiling,
                            const StandardVars& vars);

// Sum of monomial weights over all tilings; equals the symbolic entry.
LaurentPoly half_aztec_entry(int n, int i, int j, const StandardVars& vars);

// --- Schroeder paths ------------------------------------------------------

// Lattice paths (0,0) -> (n,n), steps E=(1,0), D=(1,1), N=(0,1), staying
// weakly below the diagonal; counts are the large Schroeder numbers.
std::vector<std::string> schroder_paths(int n);

}  // namespace hexanet
