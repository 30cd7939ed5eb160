#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "hexanet/matrix.hpp"
#include "hexanet/tiling.hpp"

namespace hexanet {

// sigma(v) = (-1)^floor(d/2), d = graph distance from v0. Every tiling
// vertex has a monotone path from v0 (asserted in tests), so d = |S|.
int sigma_rank(int rank);
inline int sigma(Subset s) { return sigma_rank(subset_size(s)); }

// Labeled tiling (T, F): exact values on every vertex and face.
struct Network {
    Tiling tiling;
    std::map<Subset, Scalar> vertex_values;
    std::map<std::pair<int, int>, Scalar> face_values;

    const Scalar& vertex(Subset s) const;
    const Scalar& face(int i, int j) const;
    Ring ring() const;
    bool all_nonzero() const;

    bool operator==(const Network& other) const {
        return tiling == other.tiling && vertex_values == other.vertex_values &&
               face_values == other.face_values;
    }
};

// Phi: F(v) = sigma(v) det A_S^S on vertices and, on a rhombus R_ij at
// base S with i < j, F = sigma(|S|+1) det A_{S+j}^{S+i} (the convention
// that makes the standard-tiling fill schedule and the Laurent expansion
// come out with +1 coefficients). Throws NonGeneric naming the position
// whose minor vanishes.
Network matrix_to_network(const ExactMatrix& m, const Tiling& t);

// Vertices and faces of a cube in slot order: a_0 the center vertex,
// a_1..a_3 the faces at a_0, a_4..a_9 the remaining vertices.
struct HexahedronInput {
    std::array<Scalar, 10> a;
};

// Starred values (a_0*, a_1*, a_2*, a_3*) solving hh1-hh4; each relation is
// linear in its starred unknown. Requires a_0..a_3 nonzero.
std::array<Scalar, 4> hexahedron_up(const HexahedronInput& h);

// Inverse move: recovers (a_0, a_1, a_2, a_3) from the starred values and
// a_4..a_9, via the top-down symmetry of the relation.
std::array<Scalar, 4> hexahedron_down(const std::array<Scalar, 4>& starred,
                                      const std::array<Scalar, 6>& a4_to_a9);

// Residuals of hh1..hh4 (zero iff the relation holds).
std::array<Scalar, 4> hexahedron_residuals(const HexahedronInput& h,
                                           const std::array<Scalar, 4>& starred);

// Where each hexahedron slot sits on a rank-3 Boolean interval, which of
// the two transposed almost-principal minors it carries, and with which
// sign. Pinned by correspondence_search.
struct SlotTable {
    struct VertexSlot {
        Subset rel;  // subset of {1,2,3}
        int sign;
    };
    struct FaceSlot {
        int p, q;        // rel pair, p < q
        Subset rel_base; // subset of {1,2,3}
        int sign;
        bool row_larger; // true: minor rows = base+q, cols = base+p
    };
    // order: a0, a4, a5, a6, a7, a8, a9, a0star
    std::array<VertexSlot, 8> vertices;
    // order: a1, a2, a3, a1star, a2star, a3star
    std::array<FaceSlot, 6> faces;
};

const SlotTable& correspondence_table();

// Evaluates the 14 slot values of `table` for the rank-3 interval
// [s, s + {d1,d2,d3}] of m.
struct SlotValues {
    HexahedronInput input;            // a_0..a_9
    std::array<Scalar, 4> starred;    // a_0*..a_3*
};
SlotValues slot_values(const ExactMatrix& m, Subset s, const std::array<int, 3>& dirs,
                       const SlotTable& table);

// Brute-force search over cube isomorphisms x face sign/orientation
// patterns; returns every table under which hh1-hh4 vanish identically on
// `trials` random generic 3x3 rational matrices. Must contain
// correspondence_table().
std::vector<SlotTable> correspondence_search(int trials = 25, std::uint64_t seed = 1);

// Flip h and transport the values by the hexahedron relation; the seven
// untouched positions keep their values exactly.
Network cube_move(const Network& net, const Hexagon& h);

// Scales every value by F(v0)^{-1}.
Network normalize(const Network& net);

// Transport net1 to net2's tiling and compare exactly (after normalizing
// both).
bool equivalent(const Network& net1, const Network& net2);

// All rank-3 intervals of [n]: (base, {d1<d2<d3}).
std::vector<std::pair<Subset, std::array<int, 3>>> rank3_intervals(int n);

}  // namespace hexanet
