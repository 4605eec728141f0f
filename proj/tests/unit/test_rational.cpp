#include "dfc/errors.hpp"
#include "dfc/rational.hpp"
#include "reference.hpp"
#include "corpus.hpp"

#include <doctest.h>

using namespace dfc;
using ref::frac;

TEST_CASE("parse_rational accepts fractions, integers and decimals exactly") {
    CHECK(parse_rational("3/6") == frac(1, 2));
    CHECK(parse_rational("-7") == -7);
    CHECK(parse_rational("-1.25") == frac(-5, 4));
    CHECK(parse_rational("1e-3") == frac(1, 1000));
    CHECK(parse_rational("2.5E2") == 250);
    CHECK(parse_rational(" 4/-8 ") == frac(-1, 2));
    CHECK(parse_rational("1e-104") == pow10(-104));
}

TEST_CASE("parse_rational rejects malformed text") {
    CHECK_THROWS_AS(parse_rational(""), InputError);
    CHECK_THROWS_AS(parse_rational("1/"), InputError);
    CHECK_THROWS_AS(parse_rational("abc"), InputError);
    CHECK_THROWS_AS(parse_rational("1.2.3"), InputError);
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
}

TEST_CASE("to_string renders lowest terms") {
    CHECK(to_string(frac(6, 4)) == "3/2");
    CHECK(to_string(Rational(-5)) == "-5");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(parse_rational(to_string(frac(-123, 457))) == frac(-123, 457));
}

TEST_CASE("to_decimal rounds to nearest") {
    CHECK(to_decimal(frac(1, 3), 5) == "0.33333");
    CHECK(to_decimal(frac(2, 3), 3) == "0.667");
    CHECK(to_decimal(Rational(0), 4) == "0");
    CHECK(to_decimal(pow10(-52) * frac(34, 10), 2) == "3.4e-52");
    CHECK(to_decimal(Rational(-1250), 2) == "-1.3e+03");
}

TEST_CASE("floor_log2 is exact") {
    CHECK(floor_log2(Rational(1)) == 0);
    CHECK(floor_log2(Rational(8)) == 3);
    CHECK(floor_log2(frac(7, 8)) == -1);
    CHECK(floor_log2(frac(1, 8)) == -3);
    CHECK(floor_log2(frac(-9, 1)) == 3);
    CHECK(floor_log2(pow10(-104)) == -346);
}

TEST_CASE("dyadic rounding brackets the value") {
    corpus::Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        Rational q = abs(corpus::rational(rng, 100000, 99991)) * pow10(corpus::uniform(rng, -40, 40));
        Rational up = upper_dyadic(q, 20), lo = lower_dyadic(q, 20);
        CHECK(lo <= q);
        CHECK(q <= up);
        if (q != 0) CHECK(up - lo <= q * pow(frac(1, 2), 18));
        auto rd = round_dyadic(q, 30);
        CHECK(abs(q - rd.value) <= rd.error);
        // value = m 2^e with an odd mantissa of at most prec bits
        Integer m = rd.value.get_num();
        if (m != 0) m >>= static_cast<mp_bitcnt_t>(mpz_scan1(m.get_mpz_t(), 0));
        CHECK(mpz_sizeinbase(m.get_mpz_t(), 2) <= 30);
    }
}

TEST_CASE("square root bounds") {
    for (long n : {0L, 1L, 2L, 3L, 17L, 1000003L}) {
        Rational q(n);
        Rational hi = sqrt_upper(q, 40), lo = sqrt_lower(q, 40);
        CHECK(hi * hi >= q);
        CHECK(lo * lo <= q);
        CHECK(lo >= 0);
        CHECK(hi - lo <= (hi + 1) * pow(frac(1, 2), 35));
    }
}

TEST_CASE("integer helpers") {
    CHECK(binomial(10, 3) == 120);
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(floor(frac(-3, 2)) == -2);
    CHECK(ceil(frac(-3, 2)) == -1);
    CHECK(pow(frac(2, 3), 3) == frac(8, 27));
    CHECK(from_double(0.375) == frac(3, 8));
    CHECK(to_double(frac(1, 4)) == 0.25);
    CHECK(doctest::Approx(log_abs(pow10(-400))) == -400 * 2.302585092994046);
}
