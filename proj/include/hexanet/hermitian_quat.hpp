#pragma once

#include <optional>

#include "hexanet/laurent.hpp"
#include "hexanet/network.hpp"

namespace hexanet {

// --- Hermitian networks ----------------------------------------------------

// Real vertex values and, on every face with vertices a,b,c,d in cyclic
// order, |F(f)|^2 = F(a)F(c) + F(b)F(d).
bool is_hermitian_network(const Network& net);

// Hermitian Kashaev relation k1-k4. Requires a_0 != 0, real a_0, a_4..a_9,
// and the face conditions |a_1|^2 = a_0 a_4 + a_8 a_9 (cyclically) on the
// input faces; throws otherwise. Products are taken in the written order,
// so the same code serves the quaternionic case.
std::array<Scalar, 4> kashaev_up(const HexahedronInput& h);

// Checks k1-k4 against supplied starred values (no preconditions beyond
// nonzero a_0); multiplication in the written order.
bool quaternionic_kashaev_check(const HexahedronInput& h, const std::array<Scalar, 4>& starred);

// The unique standard Hermitian network with the given diagonal values
// F(e_j) and face values, the remaining vertices filled through the face
// identity rhombus by rhombus.
Network hermitian_params_to_network(int n, const std::vector<Scalar>& diag,
                                    const std::map<std::pair<int, int>, Scalar>& faces);

// Inverse of Phi on Hermitian data: solves the subdiagonal entries from
// the face minors and conjugates across the diagonal. Works over Q, Q(i)
// and (via the cycle-sum minors) the quaternions.
ExactMatrix hermitian_reconstruct(const Network& net);

// --- Hermitian Laurent parametrization -------------------------------------

// Variables of the Hermitian standard network: the diagonal vertex values,
// every face value together with a formal conjugate, and the interior
// vertex values of rank >= 2. Conjugation is the pair swap.
struct HermitianVars {
    int n = 0;
    int nvars = 0;
    std::map<Subset, int> vertex_index;            // diagonal + interior vertices
    std::map<std::pair<int, int>, int> face_index; // x; conjugate lives at +1
    std::vector<int> conj_perm;
    std::vector<std::string> names_;

    static HermitianVars make(int n);
    int face_conj(int idx) const { return conj_perm[idx]; }
    std::vector<std::string> names() const { return names_; }
};

// Matrix entries as Laurent polynomials in the Hermitian variables, every
// denominator a monomial in interior vertex variables. Entries are reduced
// with the interior face identities x xbar = F(v)F(v+ij) + F(v+i)F(v+j),
// which is what brings them into the reduced normal form.
Matrix<LaurentPoly> hermitian_symbolic_reconstruct(int n);

// --- positivity -------------------------------------------------------------

struct RatInterval {
    std::optional<Rat> lo, hi;  // open bounds
    bool contains(const Rat& x) const {
        return (!lo || x > *lo) && (!hi || x < *hi);
    }
};

// The open interval of admissible values for F(next) in the staged
// positive-network construction: sign sigma and positivity of every
// completed face norm. `assigned` must already hold the two rank-(r-1)
// neighbours and the rank-(r-2) base.
RatInterval admissible_interval(const std::map<Subset, Scalar>& assigned, Subset next);

bool is_positive_network(const Network& net);

// B * conj-transpose(B).
ExactMatrix gram_matrix(const ExactMatrix& b);

// Gram-constructed positive-definite matrix, resampled until generic, then
// Phi(A, T_0). Throws after `budget` failed attempts.
Network sample_positive_network(int n, Ring ring, Rng& rng, int budget = 256);

// All leading principal minors positive. Input must be (q-)Hermitian.
bool sylvester_posdef(const ExactMatrix& m);

// --- quaternionic determinants ----------------------------------------------

bool is_q_hermitian(const ExactMatrix& m);

// Sum over cycle decompositions of (-1)^(c+n) prod tr M_C, half traces on
// cycles of length 1 and 2. Real for q-Hermitian input.
Rat qdet(const ExactMatrix& m);

// Dyson: qdet M = Pf(Z Mtilde), evaluated by recursive Pfaffian expansion
// over Q(i). Throws if Z Mtilde fails to be antisymmetric.
Rat qdet_pfaffian(const ExactMatrix& m);

// Almost-principal analogue: decompositions of S+{i,j} into a path from
// row extra j to column extra i plus cycles; sign (-1)^(#cycles), products
// in path order. Restricts to det M_{S+j}^{S+i} over commutative rings.
Scalar q_almost_principal(const ExactMatrix& m, Subset s, int i, int j);

// Phi for q-Hermitian matrices: qdet principal minors on vertices,
// sigma-signed q-almost-principal values on faces.
Network q_matrix_to_network(const ExactMatrix& m, const Tiling& t);

// Random Hermitian (ring Q or C) or q-Hermitian (ring H) matrix; the
// generic variant resamples until the standard network exists with all
// labels nonzero (and, over commutative rings, full genericity).
ExactMatrix random_hermitian_matrix(int n, Ring ring, Rng& rng);
ExactMatrix random_hermitian_generic(int n, Ring ring, Rng& rng);

}  // namespace hexanet
