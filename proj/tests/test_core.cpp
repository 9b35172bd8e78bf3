#include "doctest.h"

#include "riesz/errors.hpp"
#include "riesz/fin_vector.hpp"
#include "riesz/random.hpp"
#include "riesz/rational.hpp"

using namespace riesz;

TEST_CASE("rational normal form and text") {
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(8, 4).str() == "2");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("3/-6") == Rational(-1, 2));
    CHECK(Rational::parse("+7") == Rational(7));
    CHECK(Rational::parse("0/5").str() == "0");
    CHECK(Rational(-5, 2).denominator() > 0);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) * Rational(3) == Rational(1));
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    // a value no double can hold
    const Rational tiny = pow(Rational(1, 3), 60);
    CHECK(tiny * pow(Rational(3), 60) == Rational(1));
    CHECK(Rational(-2).abs() == Rational(2));
    CHECK(Rational(-2).pos() == Rational(0));
    CHECK(Rational(-2).neg() == Rational(2));
}

TEST_CASE("coordinatewise lattice operations") {
    CHECK(sup(FinVector{1, -2}, FinVector{0, 3}) == FinVector{1, 3});
    CHECK(abs(FinVector{Rational(-1, 2), 2}) == FinVector{Rational(1, 2), 2});
    const FinVector x{-3, 5};
    CHECK(inf(pos(x), neg(x)) == FinVector{0, 0});
    CHECK(inf(FinVector{1, -2}, FinVector{0, 3}) == FinVector{0, -2});
}

TEST_CASE("disjointness") {
    CHECK(is_disjoint(FinVector{1, 0}, FinVector{0, -7}));
    CHECK_FALSE(is_disjoint(FinVector{1, 1}, FinVector{0, 1}));
    CHECK(is_disjoint(FinVector{0, 0}, FinVector{5, 5}));
}

TEST_CASE("dimension mismatch") {
    const FinVector one{1};
    const FinVector two{1, 2};
    CHECK_THROWS_AS(sup(one, two), DimensionError);
    CHECK_THROWS_AS(is_disjoint(one, two), DimensionError);
    CHECK_THROWS_AS(one + two, DimensionError);
}

TEST_CASE("lattice laws on random triples") {
    Sampler rng(11);
    for (std::size_t dim = 1; dim <= 4; ++dim) {
        for (int i = 0; i < 1000; ++i) {
            const auto x = rng.vector(dim);
            const auto y = rng.vector(dim);
            const auto z = rng.vector(dim);
            REQUIRE(x == pos(x) - neg(x));
            REQUIRE(abs(x) == pos(x) + neg(x));
            REQUIRE(inf(pos(x), neg(x)).is_zero());
            REQUIRE(sup(x, y) + z == sup(x + z, y + z));
            REQUIRE(inf(x, y) + z == inf(x + z, y + z));
            REQUIRE(sup(x, inf(y, z)) == inf(sup(x, y), sup(x, z)));
            REQUIRE(sup(x, y) + inf(x, y) == x + y);
            REQUIRE(leq(inf(x, y), x));
            REQUIRE(leq(x, sup(x, y)));
            bool coordinatewise = true;
            for (std::size_t k = 0; k < dim; ++k) {
                coordinatewise = coordinatewise && (x[k].is_zero() || y[k].is_zero());
            }
            REQUIRE(is_disjoint(x, y) == coordinatewise);
            REQUIRE(is_disjoint(x, y) == inf(abs(x), abs(y)).is_zero());
        }
    }
}
