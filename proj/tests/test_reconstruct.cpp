#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hexanet/reconstruct.hpp"

using namespace hexanet;

namespace {

ExactMatrix mat2(long a, long b, long c, long d) {
    ExactMatrix m = make_matrix(2, Ring::Rat);
    m.at(1, 1) = Scalar::rational(a);
    m.at(1, 2) = Scalar::rational(b);
    m.at(2, 1) = Scalar::rational(c);
    m.at(2, 2) = Scalar::rational(d);
    return m;
}

}  // namespace

TEST_CASE("fill schedule size") {
    for (int n = 2; n <= 6; ++n) {
        auto steps = fill_schedule(n);
        std::size_t expected = 0;
        for (int p = 1; p <= n; ++p) expected += (n - p + 1) + (n - p);
        CHECK(steps.size() == expected);  // = n^2, one solve per entry
        CHECK(expected == std::size_t(n) * n);
    }
}

TEST_CASE("solve_entry") {
    // 2x2, full minor = -1, unknown (1,2), known entries 2, 5, 7 -> 3
    ExactMatrix m = mat2(2, 0, 5, 7);
    Scalar x = solve_entry(m, MinorSpec{full_subset(2), full_subset(2)}, Scalar::rational(-1),
                           {1, 2});
    CHECK(x == Scalar::rational(3));

    // 1x1 spec: the entry is the target
    CHECK(solve_entry(m, MinorSpec{subset_bit(2), subset_bit(1)}, Scalar::rational(5), {2, 1}) ==
          Scalar::rational(5));

    // zero cofactor
    ExactMatrix z = mat2(2, 0, 0, 7);
    CHECK_THROWS_AS(solve_entry(z, MinorSpec{full_subset(2), full_subset(2)},
                                Scalar::rational(-1), {1, 2}),
                    ZeroCofactorError);
}

TEST_CASE("n=2 reconstruction from the worked example") {
    Network net;
    net.tiling = standard_tiling(2);
    net.vertex_values[0] = Scalar::rational(1);
    net.vertex_values[subset_bit(1)] = Scalar::rational(2);
    net.vertex_values[subset_bit(2)] = Scalar::rational(7);
    net.vertex_values[full_subset(2)] = Scalar::rational(1);
    net.face_values[{1, 2}] = Scalar::rational(5);
    CHECK(reconstruct(net) == mat2(2, 3, 5, 7));
}

TEST_CASE("reconstruct inverts phi") {
    Rng rng(41);
    for (Ring ring : {Ring::Rat, Ring::Gauss})
        for (int n = 2; n <= 6; ++n)
            for (int t = 0; t < 3; ++t) {
                ExactMatrix a = random_generic_matrix(n, ring, rng);
                Network net = matrix_to_network(a, standard_tiling(n));
                CHECK(reconstruct(net) == a);
            }
}

TEST_CASE("reconstruct_any transports to the standard tiling first") {
    Rng rng(42);
    ExactMatrix a = random_generic_matrix(4, Ring::Rat, rng);
    for (const Tiling& t : enumerate_tilings(4))
        CHECK(reconstruct_any(matrix_to_network(a, t)) == a);
}

TEST_CASE("errors") {
    Rng rng(43);
    ExactMatrix a = random_generic_matrix(3, Ring::Rat, rng);
    Network net = matrix_to_network(a, standard_tiling(3));

    Network scaled = net;
    for (auto& [k, v] : scaled.vertex_values) v = v * Scalar::rational(2);
    for (auto& [k, v] : scaled.face_values) v = v * Scalar::rational(2);
    CHECK_THROWS_AS(reconstruct(scaled), NotNormalizedError);

    Network broken = net;
    broken.face_values[{1, 2}] = Scalar::rational(0);
    CHECK_THROWS_AS(reconstruct(broken), ZeroCofactorError);
}

TEST_CASE("uniqueness: distinct matrices give distinct standard networks") {
    Rng rng(44);
    for (int t = 0; t < 10; ++t) {
        ExactMatrix a = random_generic_matrix(3, Ring::Rat, rng);
        ExactMatrix b = random_generic_matrix(3, Ring::Rat, rng);
        if (a == b) continue;
        CHECK(!(matrix_to_network(a, standard_tiling(3)) ==
                matrix_to_network(b, standard_tiling(3))));
    }
}

TEST_CASE("round trips through flip sequences") {
    Rng rng(45);
    ExactMatrix a4 = random_generic_matrix(4, Ring::Rat, rng);
    CHECK(round_trip_check(a4, {}));

    // 20 random flips at n=4
    std::vector<Hexagon> flips;
    Tiling cur = standard_tiling(4);
    for (int k = 0; k < 20; ++k) {
        auto hexes = find_hexagons(cur);
        const Hexagon& h = hexes[std::size_t(rng.uniform(0, long(hexes.size()) - 1))];
        flips.push_back(h);
        cur = apply_flip(cur, h);
    }
    CHECK(round_trip_check(a4, flips));

    // Gaussian-rational at n=5
    ExactMatrix a5 = random_generic_matrix(5, Ring::Gauss, rng);
    std::vector<Hexagon> flips5;
    Tiling cur5 = standard_tiling(5);
    for (int k = 0; k < 20; ++k) {
        auto hexes = find_hexagons(cur5);
        const Hexagon& h = hexes[std::size_t(rng.uniform(0, long(hexes.size()) - 1))];
        flips5.push_back(h);
        cur5 = apply_flip(cur5, h);
    }
    CHECK(round_trip_check(a5, flips5));
}
