#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hexanet/scalar.hpp"

using namespace hexanet;

namespace {

Scalar q(long num, long den = 1) { return Scalar::rational(num, den); }

Scalar qi() { return Scalar::gauss(0, 1); }

}  // namespace

TEST_CASE("conjugation") {
    CHECK(conjugate(q(3, 2)) == q(3, 2));
    CHECK(conjugate(Scalar::gauss(1, 1)) == Scalar::gauss(1, -1));
    CHECK(conjugate(Scalar::quat(1, 2, 3, 4)) == Scalar::quat(1, -2, -3, -4));
    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        Scalar x = random_scalar(Ring::Quat, rng);
        CHECK(conjugate(conjugate(x)) == x);
    }
}

TEST_CASE("reduced trace") {
    CHECK(reduced_trace(q(5)) == q(10));
    CHECK(reduced_trace(Scalar::gauss(1, 1)) == Scalar::gauss(2, 0));
    // i*k*(-j) = -1, so the trace is -2
    Scalar i = Scalar::quat(0, 1, 0, 0), j = Scalar::quat(0, 0, 1, 0), k = Scalar::quat(0, 0, 0, 1);
    Scalar prod = quat_mul(quat_mul(i, k), -j);
    CHECK(prod == Scalar::quat(-1, 0, 0, 0));
    CHECK(reduced_trace(prod) == Scalar::quat(-2, 0, 0, 0));
}

TEST_CASE("quaternion product") {
    Scalar i = Scalar::quat(0, 1, 0, 0), j = Scalar::quat(0, 0, 1, 0), k = Scalar::quat(0, 0, 0, 1);
    CHECK(quat_mul(i, j) == k);
    CHECK(quat_mul(j, i) == -k);
    CHECK(quat_mul(Scalar::quat(1, 1, 0, 0), Scalar::quat(1, 0, 1, 0)) == Scalar::quat(1, 1, 1, 1));
}

TEST_CASE("division ring axioms on random triples") {
    for (Ring ring : {Ring::Rat, Ring::Gauss, Ring::Quat}) {
        Rng rng(42);
        for (int t = 0; t < 40; ++t) {
            Scalar x = random_scalar(ring, rng), y = random_scalar(ring, rng),
                   z = random_scalar(ring, rng);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK((y + z) * x == y * x + z * x);
            if (!x.is_zero()) {
                CHECK(x * x.inverse() == Scalar::one(ring));
                CHECK(x.inverse() * x == Scalar::one(ring));
            }
        }
    }
}

TEST_CASE("norm is multiplicative") {
    for (Ring ring : {Ring::Rat, Ring::Gauss, Ring::Quat}) {
        Rng rng(3);
        for (int t = 0; t < 40; ++t) {
            Scalar x = random_scalar(ring, rng), y = random_scalar(ring, rng);
            CHECK(norm_sq(x * y) == norm_sq(x) * norm_sq(y));
            CHECK(norm_sq(x) >= 0);
            CHECK((norm_sq(x) == 0) == x.is_zero());
            CHECK(x * conjugate(x) == Scalar(ring, norm_sq(x)));
        }
    }
}

TEST_CASE("trace cyclicity for quaternion pairs") {
    Rng rng(11);
    for (int t = 0; t < 40; ++t) {
        Scalar x = random_scalar(Ring::Quat, rng), y = random_scalar(Ring::Quat, rng);
        CHECK(reduced_trace(x * y) == reduced_trace(y * x));
    }
}

TEST_CASE("mixed rings are rejected") {
    CHECK_THROWS_AS(q(1) + Scalar::gauss(1, 0), RingMismatchError);
    CHECK_THROWS_AS(Scalar::gauss(1, 0) * Scalar::quat(1, 0, 0, 0), RingMismatchError);
    CHECK(q(1).embed(Ring::Gauss) + Scalar::gauss(1, 0) == Scalar::gauss(2, 0));
    CHECK_THROWS_AS(Scalar::gauss(1, 2).embed(Ring::Rat), RingMismatchError);
}

TEST_CASE("canonical form") {
    CHECK(Scalar(Ring::Rat, Rat(2, 4)) == q(1, 2));
    CHECK(Scalar(Ring::Rat, Rat(3, -6)) == q(-1, 2));
    CHECK(q(0).to_string() == "0/1");
}

TEST_CASE("string round trip") {
    CHECK(q(3, 2).to_string() == "3/2");
    CHECK(Scalar::gauss(1, 1).to_string() == "1/1+1/1 i");
    CHECK(Scalar::quat(1, 2, 3, 4).to_string() == "1/1+2/1 i+3/1 j+4/1 k");
    CHECK(Scalar::gauss(Rat(3, 2), Rat(-3, 4)).to_string() == "3/2-3/4 i");
    CHECK(Scalar::parse("3/2", Ring::Rat) == q(3, 2));
    CHECK(Scalar::parse("2", Ring::Rat) == q(2));
    CHECK(Scalar::parse("1/1+1/1 i", Ring::Gauss) == Scalar::gauss(1, 1));
    CHECK(Scalar::parse("1/2 i", Ring::Gauss) == Scalar::gauss(0, Rat(1, 2)));
    CHECK(Scalar::parse("-1/2+1/3 j", Ring::Quat) == Scalar::quat(Rat(-1, 2), 0, Rat(1, 3), 0));
    Rng rng(5);
    for (Ring ring : {Ring::Rat, Ring::Gauss, Ring::Quat})
        for (int t = 0; t < 60; ++t) {
            Scalar x = random_scalar(ring, rng);
            CHECK(Scalar::parse(x.to_string(), ring) == x);
        }
    CHECK_THROWS_AS(Scalar::parse("1/1 i", Ring::Rat), RingMismatchError);
    CHECK_THROWS_AS(Scalar::parse("", Ring::Rat), ParseError);
    CHECK_THROWS_AS(Scalar::parse("x", Ring::Rat), ParseError);
}

TEST_CASE("gauss arithmetic matches complex rules") {
    CHECK(qi() * qi() == Scalar::gauss(-1, 0));
    Scalar z = Scalar::gauss(1, 1);
    CHECK(z * conjugate(z) == Scalar::gauss(2, 0));
    CHECK((z / z) == Scalar::one(Ring::Gauss));
}
