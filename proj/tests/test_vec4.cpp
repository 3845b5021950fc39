#include <doctest.h>

#include <cmath>
#include <random>

#include "frenet4/vec4.hpp"
#include "oracles.hpp"

using frenet4::Vec4;

namespace {

const Vec4 e1{1, 0, 0, 0}, e2{0, 1, 0, 0}, e3{0, 0, 1, 0}, e4{0, 0, 0, 1};

double dist(const Vec4& a, const Vec4& b) { return frenet4::norm(a - b); }

}  // namespace

TEST_CASE("dot and norm basics") {
    CHECK(frenet4::dot(e1, e1) == 1.0);
    CHECK(frenet4::dot(e1, e2) == 0.0);
    CHECK(frenet4::dot(Vec4{1, 2, 3, 4}, Vec4{1, 1, 1, 1}) == 10.0);
    CHECK(frenet4::norm(e3) == 1.0);
    CHECK(frenet4::norm(Vec4{0, 0, 0, 0}) == 0.0);
    CHECK(frenet4::norm(Vec4{1, 1, 1, 1}) == 2.0);
}

TEST_CASE("ternary product on the basis follows the determinant") {
    // The determinant of Def-style Eq (2) fixes the signs; two of the four
    // cyclic identities printed alongside it come out negative.
    CHECK(dist(frenet4::cross3(e2, e3, e4), e1) == 0.0);
    CHECK(dist(frenet4::cross3(e4, e1, e2), e3) == 0.0);
    CHECK(dist(frenet4::cross3(e1, e2, e3), -e4) == 0.0);
    CHECK(dist(frenet4::cross3(e3, e4, e1), -e2) == 0.0);
    // Alternating variants.
    CHECK(dist(frenet4::cross3(e3, e2, e4), -e1) == 0.0);
    CHECK(dist(frenet4::cross3(e2, e4, e3), -e1) == 0.0);
    CHECK(dist(frenet4::cross3(e1, e4, e2), -e3) == 0.0);
    CHECK(dist(frenet4::cross3(e2, e1, e3), e4) == 0.0);
}

TEST_CASE("ternary product of repeated arguments vanishes") {
    Vec4 a{1, -2, 0.5, 3}, c{0, 1, 2, -1};
    CHECK(frenet4::norm(frenet4::cross3(a, a, c)) == 0.0);
}

TEST_CASE("ternary product matches the Laplace-expansion oracle") {
    Vec4 a{1, 0, 1, 0}, b{0, 1, 0, 1}, c{1, 1, 0, 0};
    Vec4 got = frenet4::cross3(a, b, c);
    Vec4 want = oracle::cross3_oracle(a, b, c);
    CHECK(dist(got, want) == 0.0);

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 200; ++i) {
        Vec4 x{u(rng), u(rng), u(rng), u(rng)};
        Vec4 y{u(rng), u(rng), u(rng), u(rng)};
        Vec4 z{u(rng), u(rng), u(rng), u(rng)};
        CHECK(dist(frenet4::cross3(x, y, z), oracle::cross3_oracle(x, y, z)) < 1e-12);
    }
}

TEST_CASE("ternary product is orthogonal to its arguments") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int i = 0; i < 1000; ++i) {
        Vec4 a{u(rng), u(rng), u(rng), u(rng)};
        Vec4 b{u(rng), u(rng), u(rng), u(rng)};
        Vec4 c{u(rng), u(rng), u(rng), u(rng)};
        Vec4 p = frenet4::cross3(a, b, c);
        const double scale =
            frenet4::norm(a) * frenet4::norm(b) * frenet4::norm(c) + 1e-30;
        CHECK(std::abs(frenet4::dot(p, a)) < 1e-12 * scale);
        CHECK(std::abs(frenet4::dot(p, b)) < 1e-12 * scale);
        CHECK(std::abs(frenet4::dot(p, c)) < 1e-12 * scale);
    }
}

TEST_CASE("dot symmetry and absolute norm scaling") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int i = 0; i < 200; ++i) {
        Vec4 a{u(rng), u(rng), u(rng), u(rng)};
        Vec4 b{u(rng), u(rng), u(rng), u(rng)};
        CHECK(frenet4::dot(a, b) == frenet4::dot(b, a));
        double c = u(rng);
        CHECK(frenet4::norm(c * a) == doctest::Approx(std::abs(c) * frenet4::norm(a)).epsilon(1e-14));
        CHECK(frenet4::norm(a) * frenet4::norm(a) ==
              doctest::Approx(frenet4::dot(a, a)).epsilon(1e-14));
    }
}

TEST_CASE("frame determinant") {
    frenet4::Frame4 id{e1, e2, e3, e4};
    CHECK(frenet4::det4(id) == 1.0);
    frenet4::Frame4 swapped{e2, e1, e3, e4};
    CHECK(frenet4::det4(swapped) == -1.0);
    frenet4::Frame4 repeated{e1, e1, e3, e4};
    CHECK(frenet4::det4(repeated) == 0.0);
}
