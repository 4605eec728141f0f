#pragma once

#include "dfc/chebpoly.hpp"
#include "dfc/oreops.hpp"

namespace dfc {

struct ValidationReport {
    Rational B;        ///< upper bound on ||y - p||
    Rational b;        ///< lower bound on ||y - p||, clamped at 0
    Rational A;        ///< kernel bound
    int i = 1;         ///< number of Picard iterations
    Rational gamma;    ///< upper bound on gamma_i
    Rational delta;    ///< upper bound on ||p - p_i||
    long D = 0;        ///< deg(p - p_i) + 1
    Rational epsilon;  ///< accuracy of each rational expansion
    Rational expA;     ///< upper bound on e^A
};

struct ValidateOptions {
    bool tight_kernel = false; ///< bound the kernel on a subdivision of [-1, 1]
    int subdivisions = 64;
    int max_iterations = 64;   ///< inconclusive beyond this many iterations
};

/// A >= |K(x,t) / alpha_r(x)| for x in [-1, 1] and t between 0 and x.
Rational kernel_bound(const VolterraSystem& vs, const ValidateOptions& opts = {});

/// Smallest i >= 1 with A^i / i! <= 1/2.
int min_contraction_index(const Rational& A);

/// Upper bound on sum_j A^{ij} / (ij)!, at most 1/(1 - A^i/i!).
/// Throws InconclusiveError when A^i / i! >= 1.
Rational gamma_bound(const Rational& A, int i);

/// Rational upper bound on e^A for A >= 0.
Rational exp_upper(const Rational& A);

/// Two-sided enclosure [b, B] of ||y - p||_inf on [-1, 1].
ValidationReport validate(const IvpProblem& ivp, const ChebPoly& p, const Rational& eps,
                          const ValidateOptions& opts = {});

} // namespace dfc
