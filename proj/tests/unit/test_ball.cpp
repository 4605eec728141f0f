#include "dfc/ball.hpp"
#include "dfc/errors.hpp"
#include "corpus.hpp"

#include <doctest.h>

using namespace dfc;
using ref::frac;

namespace {

// a random point of the ball
Rational inside(corpus::Rng& rng, const Ball& b) { return b.mid + b.rad * frac(corpus::uniform(rng, -100, 100), 100); }

Ball random_ball(corpus::Rng& rng) { return Ball(corpus::rational(rng, 50, 17), abs(corpus::rational(rng, 3, 40))); }

} // namespace

TEST_CASE("real ball arithmetic encloses pointwise results") {
    corpus::Rng rng(61);
    for (int t = 0; t < 300; ++t) {
        Ball a = random_ball(rng), b = random_ball(rng);
        Rational x = inside(rng, a), y = inside(rng, b);
        CHECK((a + b).contains(x + y));
        CHECK((a - b).contains(x - y));
        CHECK((a * b).contains(x * y));
        CHECK((-a).contains(-x));
        CHECK((a * frac(-3, 7)).contains(x * frac(-3, 7)));
        if (a.abs_lower() > 0) CHECK(inverse(a).contains(1 / x));
        CHECK(abs(x) <= a.abs_upper());
        CHECK(a.abs_lower() <= abs(x));
        Ball r = a.rounded(20);
        CHECK(r.contains(x));
        CHECK(r.rad >= a.rad);
    }
    CHECK_THROWS_AS(inverse(Ball(Rational(0), frac(1, 10))), RefinementError);
    CHECK(Ball(Rational(-3), Rational(5)).abs_lower() == 0);
}

TEST_CASE("rounding shortens the midpoint") {
    Ball a(frac(1, 3), Rational(0));
    Ball r = a.rounded(30);
    CHECK(mpz_sizeinbase(r.mid.get_den_mpz_t(), 2) <= 64);
    CHECK(r.contains(frac(1, 3)));
    CHECK(r.rad <= pow(frac(1, 2), 28));
}

TEST_CASE("complex ball arithmetic") {
    corpus::Rng rng(62);
    for (int t = 0; t < 200; ++t) {
        ComplexBall a(random_ball(rng), random_ball(rng)), b(random_ball(rng), random_ball(rng));
        Rational ar = inside(rng, a.re), ai = inside(rng, a.im), br = inside(rng, b.re), bi = inside(rng, b.im);
        ComplexBall p = a * b;
        CHECK(p.re.contains(ar * br - ai * bi));
        CHECK(p.im.contains(ar * bi + ai * br));
        Rational m2 = ar * ar + ai * ai;
        CHECK(a.abs_upper() * a.abs_upper() >= m2);
        CHECK(a.abs_lower() * a.abs_lower() <= m2);
        if (a.abs_lower() > 0) {
            ComplexBall q = inverse(a);
            CHECK(q.re.contains(ar / m2));
            CHECK(q.im.contains(-ai / m2));
        }
    }
}

TEST_CASE("polynomial evaluation and powers") {
    corpus::Rng rng(63);
    for (int t = 0; t < 60; ++t) {
        Poly p = corpus::poly(rng, static_cast<int>(corpus::uniform(rng, 0, 8)));
        Rational x = corpus::rational(rng, 10, 7), y = corpus::rational(rng, 10, 7);
        ComplexBall z = ComplexBall::disk(x, y, Rational(0));
        // exact complex value by Horner on pairs
        Rational re = 0, im = 0;
        for (int i = p.degree(); i >= 0; --i) {
            Rational nr = re * x - im * y + p.coeff(i);
            im = re * y + im * x;
            re = nr;
        }
        ComplexBall v = eval(p, z, 60);
        CHECK(v.re.contains(re));
        CHECK(v.im.contains(im));
        unsigned long n = static_cast<unsigned long>(corpus::uniform(rng, 0, 20));
        Rational pr = 1, pi = 0;
        for (unsigned long k = 0; k < n; ++k) {
            Rational nr = pr * x - pi * y;
            pi = pr * y + pi * x;
            pr = nr;
        }
        ComplexBall w = pow(z, n, 60);
        CHECK(w.re.contains(pr));
        CHECK(w.im.contains(pi));
    }
}
