#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hexanet/matrix.hpp"

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

ExactMatrix identity(int n, Ring ring = Ring::Rat) {
    ExactMatrix m = make_matrix(n, ring);
    for (int k = 1; k <= n; ++k) m.at(k, k) = Scalar::one(ring);
    return m;
}

ExactMatrix hermitian2() {
    ExactMatrix m = make_matrix(2, Ring::Gauss);
    m.at(1, 1) = Scalar::gauss(2, 0);
    m.at(1, 2) = Scalar::gauss(1, -1);
    m.at(2, 1) = Scalar::gauss(1, 1);
    m.at(2, 2) = Scalar::gauss(3, 0);
    return m;
}

}  // namespace

TEST_CASE("det basics") {
    CHECK(det(mat2(2, 3, 5, 7)) == Scalar::rational(-1));
    for (int n = 1; n <= 5; ++n) CHECK(det(identity(n)) == Scalar::rational(1));

    ExactMatrix rep = mat2(2, 3, 2, 3);
    CHECK(det(rep).is_zero());

    Rng rng(1);
    ExactMatrix r = random_matrix(4, Ring::Rat, rng);
    r.at(3, 1) = r.at(1, 1);
    r.at(3, 2) = r.at(1, 2);
    r.at(3, 3) = r.at(1, 3);
    r.at(3, 4) = r.at(1, 4);
    CHECK(det(r).is_zero());

    CHECK_THROWS(det(make_matrix(2, Ring::Quat)));
}

TEST_CASE("bareiss agrees with cofactor expansion") {
    Rng rng(2);
    for (Ring ring : {Ring::Rat, Ring::Gauss})
        for (int n = 1; n <= 4; ++n)
            for (int t = 0; t < 10; ++t) {
                ExactMatrix m = random_matrix(n, ring, rng);
                CHECK(det(m) == det_expand(m));
            }
}

TEST_CASE("minor") {
    ExactMatrix m = mat2(2, 3, 5, 7);
    CHECK(minor(m, MinorSpec{0, 0}) == Scalar::rational(1));
    CHECK(minor(m, MinorSpec{subset_bit(2), subset_bit(1)}) == Scalar::rational(5));
    CHECK(minor(m, MinorSpec{full_subset(2), full_subset(2)}) == Scalar::rational(-1));
    CHECK_THROWS(minor(m, MinorSpec{subset_bit(1), full_subset(2)}));
}

TEST_CASE("minor is multilinear in rows") {
    Rng rng(3);
    ExactMatrix a = random_matrix(4, Ring::Rat, rng);
    ExactMatrix b = a, c = a;
    Scalar lam = Scalar::rational(3, 2), mu = Scalar::rational(-2, 5);
    for (int col = 1; col <= 4; ++col) {
        b.at(2, col) = random_scalar(Ring::Rat, rng);
        c.at(2, col) = lam * a.at(2, col) + mu * b.at(2, col);
    }
    MinorSpec spec{subset_range(1, 3), subset_range(2, 4)};
    CHECK(minor(c, spec) == lam * minor(a, spec) + mu * minor(b, spec));
}

TEST_CASE("odd classification") {
    CHECK(is_odd(0, 2, 1));
    CHECK(!is_odd(0, 1, 2));
    CHECK(is_odd(subset_bit(1), 2, 3));
    CHECK_THROWS(is_odd(subset_bit(1), 1, 2));
}

TEST_CASE("odd almost principal minors") {
    CHECK(odd_almost_principal(mat2(2, 3, 5, 7), 0, 1, 2) == Scalar::rational(5));
    CHECK(odd_almost_principal(hermitian2(), 0, 1, 2) == Scalar::gauss(1, 1));

    Rng rng(4);
    ExactMatrix m = random_matrix(3, Ring::Rat, rng);
    // S = {2}, pair (1,3): odd minor has rows {1,2}, cols {2,3}
    Scalar expected = minor(m, MinorSpec{subset_range(1, 2), subset_range(2, 3)});
    CHECK(odd_almost_principal(m, subset_bit(2), 1, 3) == expected);
}

TEST_CASE("dodgson identity holds identically") {
    Rng rng(5);
    for (int t = 0; t < 10; ++t) {
        CHECK(dodgson_identity_check(random_matrix(3, Ring::Rat, rng), 0, 1, 2));
        CHECK(dodgson_identity_check(random_matrix(4, Ring::Gauss, rng), subset_bit(3), 1, 2));
    }
    CHECK(dodgson_identity_check(identity(3), 0, 1, 2));
}

TEST_CASE("dodgson pyramid slices are contiguous minors") {
    CHECK(dodgson_pyramid(mat2(2, 3, 5, 7)).apex() == Scalar::rational(-1));

    Rng rng(6);
    for (int n = 2; n <= 5; ++n) {
        ExactMatrix m = random_generic_matrix(n, Ring::Rat, rng);
        DodgsonPyramid p = dodgson_pyramid(m);
        CHECK(p.apex() == det(m));
        for (int k = 0; k <= n; ++k)
            for (int r = 0; r + k <= n; ++r)
                for (int c = 0; c + k <= n; ++c) {
                    MinorSpec spec{subset_range(r + 1, r + k), subset_range(c + 1, c + k)};
                    CHECK(p.levels[k][r][c] == minor(m, spec));
                }
    }

    ExactMatrix bad = make_matrix(3, Ring::Rat);
    Rng rng2(7);
    for (int r = 1; r <= 3; ++r)
        for (int c = 1; c <= 3; ++c) bad.at(r, c) = random_scalar(Ring::Rat, rng2, true);
    bad.at(2, 2) = Scalar::rational(0);
    CHECK_THROWS_AS(dodgson_pyramid(bad), NonGenericError);
}

TEST_CASE("hermitian transpose pairing of minors") {
    ExactMatrix m = hermitian2();
    REQUIRE(is_hermitian_matrix(m));
    MinorSpec ab{subset_bit(1), subset_bit(2)};
    MinorSpec ba{subset_bit(2), subset_bit(1)};
    CHECK(minor(m, ab) == conjugate(minor(m, ba)));

    Rng rng(8);
    ExactMatrix b = random_matrix(3, Ring::Gauss, rng);
    ExactMatrix h = make_matrix(3, Ring::Gauss);
    for (int r = 1; r <= 3; ++r)
        for (int c = 1; c <= 3; ++c) {
            Scalar acc = Scalar::zero(Ring::Gauss);
            for (int k = 1; k <= 3; ++k) acc += b.at(r, k) * conjugate(b.at(c, k));
            h.at(r, c) = acc;
        }
    REQUIRE(is_hermitian_matrix(h));
    for (Subset rows = 0; rows <= full_subset(3); ++rows)
        for (Subset cols = 0; cols <= full_subset(3); ++cols)
            if (subset_size(rows) == subset_size(cols))
                CHECK(minor(h, MinorSpec{rows, cols}) ==
                      conjugate(minor(h, MinorSpec{cols, rows})));
}

TEST_CASE("genericity") {
    CHECK(!is_generic(identity(3)));
    auto witness = genericity_witness(identity(3));
    REQUIRE(witness.has_value());

    Rng rng(9);
    for (int n = 2; n <= 4; ++n) {
        ExactMatrix m = random_generic_matrix(n, Ring::Rat, rng);
        CHECK(is_generic(m));
    }
    ExactMatrix g = random_generic_matrix(3, Ring::Gauss, rng);
    CHECK(is_generic(g));
}

TEST_CASE("random generation is deterministic per seed") {
    Rng a(123), b(123);
    CHECK(random_matrix(4, Ring::Rat, a) == random_matrix(4, Ring::Rat, b));
}
