#include "dfc/errors.hpp"
#include "dfc/oreops.hpp"
#include "corpus.hpp"

#include <doctest.h>

using namespace dfc;
using ref::frac;

namespace {

Poly integrate0(const Poly& p) {
    std::vector<Rational> c{0};
    for (int i = 0; i <= p.degree(); ++i) c.push_back(p.coeff(i) / (i + 1));
    return Poly(std::move(c));
}

// int_0^x K(x,t) y(t) dt for K = sum_j beta_j(t) x^j
Poly kernel_integral(const std::vector<Poly>& beta, const Poly& y) {
    Poly out;
    for (size_t j = 0; j < beta.size(); ++j) out += Poly::monomial(static_cast<int>(j)) * integrate0(beta[j] * y);
    return out;
}

// Independent decision of "no root in [-1, 1]" from isolating intervals of the
// squarefree part; an interval straddling an endpoint is settled by a sign test.
bool nonvanishing_oracle(const Poly& p) {
    Poly q = divrem(p, gcd(p, p.derivative())).first;
    for (auto [lo, hi] : isolate_real_roots(q, frac(1, 1 << 20))) {
        if (hi < -1 || lo > 1) continue;
        if (lo >= -1 && hi <= 1) return false;
        Rational e = lo < -1 ? Rational(-1) : Rational(1);
        if (q.eval(e) == 0) return false;
        bool below = q.eval(lo) == 0 || q.eval(lo) * q.eval(e) < 0; // root in [lo, e)
        if (e == -1 ? !below : below) return false;
    }
    return true;
}

} // namespace

TEST_CASE("left normal form examples") {
    auto q = left_normal_form(DiffOp({Poly(), Poly{0, 1}}));
    CHECK(q[1] == Poly{0, 1});
    CHECK(q[0] == Poly{-1});
    q = left_normal_form(DiffOp({Poly{-1}, Poly{1}}));
    CHECK(q[1] == Poly{1});
    CHECK(q[0] == Poly{-1});
    DiffOp atan({Poly(), Poly{0, 2}, Poly{4, 0, 1}});
    q = left_normal_form(atan);
    CHECK(q[2] == Poly{4, 0, 1});
    CHECK(q[1] == Poly{0, -2});
    CHECK(q[0].is_zero());
    CHECK(adjoint_alphas(atan) == q);
}

TEST_CASE("left normal form round trip on random operators") {
    corpus::Rng rng(21);
    for (int t = 0; t < 100; ++t) {
        DiffOp L = corpus::diffop(rng, 4, 4);
        auto q = left_normal_form(L);
        CHECK(from_left_normal_form(q) == L);
        CHECK(q.back() == L.leading());
        // also against applying both forms to a polynomial
        Poly y = corpus::poly(rng, 7);
        Poly v;
        for (size_t i = 0; i < q.size(); ++i) v += (q[i] * y).derivative(static_cast<int>(i));
        CHECK(v == L.apply(y));
    }
}

TEST_CASE("check_nonvanishing") {
    CHECK(check_nonvanishing(Poly{4, 0, 1}));
    CHECK_FALSE(check_nonvanishing(Poly{1, 0, -1}));
    CHECK(check_nonvanishing(Poly{1, 0, 2}));
    CHECK_FALSE(check_nonvanishing(Poly{frac(-1, 3), 1}));
    CHECK(check_nonvanishing(Poly{frac(-1001, 1000), 1}));
    corpus::Rng rng(22);
    for (int t = 0; t < 100; ++t) {
        Poly p = corpus::poly(rng, static_cast<int>(corpus::uniform(rng, 0, 8)));
        CHECK(check_nonvanishing(p) == nonvanishing_oracle(p));
    }
}

TEST_CASE("volterra system examples") {
    auto vs = volterra_system(IvpProblem::from_initial_values(DiffOp({Poly{-1}, Poly{1}}), {Rational(1)}));
    CHECK(vs.alpha[1] == Poly{1});
    CHECK(vs.alpha[0] == Poly{-1});
    REQUIRE(vs.beta.size() == 1);
    CHECK(vs.beta[0] == Poly{1});
    CHECK(vs.g == Poly{1});

    vs = volterra_system(IvpProblem::from_initial_values(DiffOp({Poly(), Poly(), Poly{1}}), {Rational(0), Rational(1)}));
    for (const auto& b : vs.beta) CHECK(b.is_zero());
    CHECK(vs.g == Poly{0, 1});

    DiffOp L1({Poly{-15, -1}, Poly{32, 2}});
    vs = volterra_system(IvpProblem::from_initial_values(L1, {frac(1, 4)}));
    CHECK(vs.alpha[1] == Poly{32, 2});
    CHECK(vs.alpha[0] == Poly{-17, -1});
    CHECK(vs.g == Poly{8});
    // alpha_1 y - int_0^x K y - g = int_0^x L y for any y with y(0) = 1/4
    Poly y{frac(1, 4), 2, -3, 5};
    CHECK(vs.alpha[1] * y - kernel_integral(vs.beta, y) - vs.g == integrate0(L1.apply(y)));
}

TEST_CASE("volterra residual identity") {
    // for any polynomial y with y^(j)(0) = l_j:
    // alpha_r y - int_0^x K y - g = J^r (L y), J = int_0^x
    corpus::Rng rng(23);
    for (int t = 0; t < 60; ++t) {
        DiffOp L = corpus::diffop(rng, 4, 3);
        const int r = L.order();
        Poly y = corpus::poly(rng, static_cast<int>(corpus::uniform(rng, 0, 8)));
        std::vector<Rational> l;
        for (int j = 0; j < r; ++j) l.push_back(y.derivative(j).eval(Rational(0)));
        auto vs = volterra_system(IvpProblem::from_initial_values(L, l));
        CHECK(vs.alpha.back() == L.leading());
        Poly rhs = L.apply(y);
        for (int j = 0; j < r; ++j) rhs = integrate0(rhs);
        CHECK(vs.alpha.back() * y - kernel_integral(vs.beta, y) - vs.g == rhs);
        CHECK(kernel_by_expansion(vs.alpha) == vs.beta);
    }
}

TEST_CASE("volterra_system rejects general conditions") {
    IvpProblem p = IvpProblem::from_initial_values(DiffOp({Poly{-1}, Poly{1}}), {Rational(1)});
    p.conditions[0].terms[0].point = frac(1, 2);
    CHECK_THROWS_AS(volterra_system(p), InputError);
}

TEST_CASE("rescale_to_unit") {
    DiffOp L({Poly{-1}, Poly{1}});
    CHECK(rescale_to_unit(L, Rational(-1), Rational(1)) == L);
    corpus::Rng rng(24);
    for (int t = 0; t < 20; ++t) {
        DiffOp M = corpus::diffop(rng, 3, 3);
        Rational a = corpus::rational(rng, 5, 3), b = a + abs(corpus::rational(rng, 5, 3)) + frac(1, 7);
        DiffOp R = rescale_to_unit(M, a, b);
        Rational h = (b - a) / 2, m = (a + b) / 2;
        Poly phi{m, h};
        Poly y = corpus::poly(rng, 6);
        // R (y o phi) = h^r (M y) o phi
        CHECK(R.apply(y.compose(phi)) == M.apply(y).compose(phi) * pow(h, static_cast<unsigned long>(M.order())));
    }
    IvpProblem p = IvpProblem::from_initial_values(L, {Rational(1)});
    IvpProblem q = rescale_to_unit(p, Rational(0), Rational(2));
    CHECK(q.conditions[0].terms[0].point == -1);
    CHECK_THROWS_AS(rescale_to_unit(L, Rational(1), Rational(1)), InputError);
    CHECK_THROWS_AS(rescale_to_unit(p, Rational(1), Rational(2)), InputError);
}

TEST_CASE("problem checks") {
    IvpProblem p = IvpProblem::from_initial_values(DiffOp({Poly{1}, Poly{1, 0, -1}}), {Rational(1)});
    CHECK_THROWS_AS(p.check(), DomainError);
    IvpProblem good = IvpProblem::from_initial_values(DiffOp({Poly{1}, Poly{2}}), {Rational(1)});
    CHECK_NOTHROW(good.check());
    REQUIRE(good.initial_values().has_value());
    CHECK(good.initial_values()->at(0) == 1);
    good.conditions.push_back(BoundaryCondition::initial(0, Rational(2)));
    CHECK_THROWS_AS(good.check(), InputError);
}
