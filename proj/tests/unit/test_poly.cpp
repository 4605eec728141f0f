#include "dfc/errors.hpp"
#include "dfc/poly.hpp"
#include "corpus.hpp"

#include <doctest.h>

using namespace dfc;
using ref::frac;

TEST_CASE("arithmetic and evaluation") {
    Poly p{1, 2, 3}; // 1 + 2x + 3x^2
    CHECK(p.degree() == 2);
    CHECK(p.eval(Rational(2)) == 17);
    CHECK(p.derivative() == Poly{2, 6});
    CHECK(p.shift(Rational(1)) == Poly{6, 8, 3});
    CHECK(p.scale_arg(Rational(2)) == Poly{1, 4, 12});
    CHECK(p.compose(Poly{0, 0, 1}) == Poly{1, 0, 2, 0, 3});
    CHECK((p - p).is_zero());
    CHECK((p * Poly{-1, 1}) == Poly{-1, -1, -1, 3});
    CHECK(Poly{frac(2, 3), frac(4, 9)}.primitive() == Poly{3, 2});
    CHECK(Poly{0, 2}.to_string() == "2x");
    CHECK(Poly{frac(-1, 2), 0, 1}.to_string() == "x^2 - 1/2");
}

TEST_CASE("division, gcd and extended gcd") {
    corpus::Rng rng(5);
    for (int t = 0; t < 60; ++t) {
        Poly a = corpus::poly(rng, static_cast<int>(corpus::uniform(rng, 0, 7)));
        Poly b = corpus::poly(rng, static_cast<int>(corpus::uniform(rng, 0, 5)));
        auto [q, r] = divrem(a, b);
        CHECK(b * q + r == a);
        CHECK(r.degree() < b.degree());
        Poly c = corpus::poly(rng, 2);
        Poly g = gcd(a * c, b * c);
        CHECK(divrem(g, c.monic()).second.is_zero());
        auto e = extended_gcd(a, b);
        CHECK(e.u * a + e.v * b == e.g);
    }
    CHECK_THROWS_AS(divrem(Poly{1}, Poly()), DomainError);
}

TEST_CASE("squarefree factorization reproduces the input") {
    Poly f1{-1, 1}, f2{2, 0, 1}, f3{3, 1};
    Poly p = f1 * f2 * f2 * f3 * f3 * f3 * Rational(5);
    auto fs = squarefree_factorization(p);
    REQUIRE(fs.size() == 3);
    CHECK(fs[0] == f1);
    CHECK(fs[1] == f2);
    CHECK(fs[2] == f3);
}

TEST_CASE("real root counting and isolation") {
    Poly p = Poly{-1, 0, 1} * Poly{frac(-1, 3), 1}; // roots -1, 1/3, 1
    CHECK(count_real_roots(p, Rational(-1), Rational(1)) == 3);
    CHECK(count_real_roots(p, Rational(0), Rational(1, 2)) == 1);
    CHECK(count_real_roots(Poly{4, 0, 1}, Rational(-10), Rational(10)) == 0);
    auto iv = isolate_real_roots(p, frac(1, 1000));
    REQUIRE(iv.size() == 3);
    CHECK(iv[1].first <= frac(1, 3));
    CHECK(frac(1, 3) <= iv[1].second);
    CHECK(iv[1].second - iv[1].first <= frac(1, 1000));
    auto ir = integer_roots(Poly{6, -5, 1} * Poly{frac(1, 2), 1});
    REQUIRE(ir.size() == 2);
    CHECK(ir[0] == 2);
    CHECK(ir[1] == 3);
    CHECK(root_bound(Poly{-100, 0, 1}) >= 10);
}
