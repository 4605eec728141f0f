#include "dfc/errors.hpp"
#include "dfc/solver.hpp"
#include "dfc/validator.hpp"
#include "corpus.hpp"
#include "reference.hpp"

#include <doctest.h>

using namespace dfc;
using ref::frac;
namespace mp = boost::multiprecision;

namespace {

IvpProblem amm1() { return IvpProblem::from_initial_values(DiffOp({Poly{-15, -1}, Poly{32, 2}}), {frac(1, 4)}); }

IvpProblem exp_problem() { return IvpProblem::from_initial_values(DiffOp({Poly{-1}, Poly{1}}), {Rational(1)}); }

} // namespace

TEST_CASE("min_contraction_index") {
    CHECK(min_contraction_index(Rational(0)) == 1);
    CHECK(min_contraction_index(frac(1, 2)) == 1);
    CHECK(min_contraction_index(Rational(1)) == 2);
    CHECK(min_contraction_index(Rational(3)) == 7);
    // against direct enumeration
    for (int k = 1; k <= 40; ++k) {
        Rational A = frac(k, 4);
        int i = min_contraction_index(A);
        CHECK(pow(A, static_cast<unsigned long>(i)) / factorial(i) <= frac(1, 2));
        if (i > 1) CHECK(pow(A, static_cast<unsigned long>(i - 1)) / factorial(i - 1) > frac(1, 2));
    }
}

TEST_CASE("gamma_bound") {
    // sum_j 1/(2j)! = cosh 1
    Rational g = gamma_bound(Rational(1), 2);
    CHECK(ref::leq(mp::cosh(ref::Real(1)), g));
    CHECK(g <= 2);
    CHECK(gamma_bound(Rational(0), 1) == 1);
    for (int k = 1; k <= 20; ++k) {
        Rational A = frac(k, 3);
        int i = min_contraction_index(A);
        Rational c = pow(A, static_cast<unsigned long>(i)) / factorial(i);
        Rational gb = gamma_bound(A, i);
        CHECK(gb >= 1);
        CHECK(gb <= 1 / (1 - c));
    }
    CHECK_THROWS_AS(gamma_bound(Rational(3), 1), InconclusiveError);
}

TEST_CASE("exp_upper") {
    CHECK(exp_upper(Rational(0)) >= 1);
    for (Rational A : {frac(1, 3), Rational(1), frac(5, 2), Rational(12), Rational(40)}) {
        ref::Real e = mp::exp(ref::real(A));
        Rational u = exp_upper(A);
        CHECK(ref::leq(e, u));
        CHECK(ref::real(u) <= e * ref::Real(1.000001));
    }
}

TEST_CASE("kernel_bound") {
    auto vs = volterra_system(exp_problem());
    Rational A = kernel_bound(vs);
    CHECK(A >= 1);
    CHECK(A <= 2);
    CHECK(kernel_bound(volterra_system(IvpProblem::from_initial_values(DiffOp({Poly(), Poly(), Poly{1}}), {0, 1}))) == 0);
    // |(x + 17) / (2 (x + 16))| <= 18/30 on [-1, 1]; the tight bound is sharper than the crude one
    auto v1 = volterra_system(amm1());
    ValidateOptions tight;
    tight.tight_kernel = true;
    Rational crude = kernel_bound(v1), fine = kernel_bound(v1, tight);
    CHECK(fine >= frac(16, 30));
    CHECK(fine <= crude);
    CHECK(crude <= 1);
}

TEST_CASE("validate the square root problem") {
    auto p = approximate(amm1(), 30).poly;
    auto rep = validate(amm1(), p, pow10(-104));
    CHECK(rep.i == 2);
    CHECK(rep.B <= pow10(-49));
    ref::Real err = ref::sampled_error(p, ref::amm1);
    CHECK(ref::leq(rep.b, err));
    CHECK(ref::leq(err, rep.B));
    CHECK(ref::real(rep.B) <= err * 1000);
    CHECK(rep.b <= rep.B);
}

TEST_CASE("validate an exact solution") {
    IvpProblem ivp = IvpProblem::from_initial_values(DiffOp({Poly(), Poly(), Poly{1}}), {0, 1});
    auto rep = validate(ivp, ChebPoly::basis(1), pow10(-30));
    CHECK(rep.B <= pow10(-28));
    CHECK(rep.b == 0);
}

TEST_CASE("validate a truncated exponential") {
    auto p = approximate(exp_problem(), 10).poly;
    ref::Real err = ref::sampled_error(p, [](const ref::Real& x) { return mp::exp(x); });
    auto rep = validate(exp_problem(), p, pow10(-30));
    CHECK(ref::leq(err, rep.B));
    CHECK(ref::real(rep.B) <= err * 1000);
    CHECK(ref::leq(rep.b, err));
    CHECK_THROWS_AS(validate(exp_problem(), p, Rational(0)), InputError);
}

TEST_CASE("accuracy monotonicity") {
    auto p = approximate(amm1(), 20).poly;
    Rational eps = pow10(-40);
    Rational prev = validate(amm1(), p, eps).B;
    for (int k = 0; k < 4; ++k) {
        eps /= 2;
        Rational B = validate(amm1(), p, eps).B;
        CHECK(B <= prev);
        prev = B;
    }
}

TEST_CASE("tightness across degrees") {
    for (int d : {20, 30, 40}) {
        auto p = approximate(amm1(), d).poly;
        ref::Real err = ref::sampled_error(p, ref::amm1);
        auto rep = validate(amm1(), p, pow10(-2 * d - 44));
        CHECK(ref::leq(err, rep.B));
        CHECK(ref::leq(rep.b, err));
        CHECK(ref::real(rep.B) <= err * 1000);
    }
}

TEST_CASE("enclosure on closed-form problems") {
    corpus::Rng rng(81);
    int validated = 0;
    for (int t = 0; t < 12; ++t) {
        corpus::ClosedForm cf = corpus::closed_form(rng);
        int d = static_cast<int>(corpus::uniform(rng, 8, 20));
        SolveOutput out;
        try {
            out = approximate(cf.ivp, d);
        } catch (const SingularSystemError&) {
            continue;
        }
        ref::Real err = ref::sampled_error(out.poly, cf.y, 801);
        Rational eps = pow10(-60);
        INFO(cf.name);
        ValidationReport rep;
        try {
            rep = validate(cf.ivp, out.poly, eps);
        } catch (const InconclusiveError&) {
            // large kernels need the subdivided bound
            ValidateOptions tight;
            tight.tight_kernel = true;
            try {
                rep = validate(cf.ivp, out.poly, eps, tight);
            } catch (const InconclusiveError& e) {
                MESSAGE(cf.name << ": " << std::string(e.what()));
                continue;
            }
        }
        ++validated;
        CHECK(rep.b <= rep.B);
        CHECK(ref::leq(err, rep.B));
        CHECK(ref::leq(rep.b, err));
    }
    CHECK(validated >= 9);
}
