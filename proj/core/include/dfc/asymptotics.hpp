#pragma once

#include "dfc/chebrec.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace dfc {

struct PolygonEdge {
    Rational slope;                          ///< kappa
    int k_left = 0, k_right = 0;             ///< horizontal span [k_left, k_right]
    Poly chi;                                ///< sum over points on the edge of lc(b_k) a^{k - k_left}
    std::vector<std::complex<double>> roots; ///< numerical roots of chi, by increasing modulus
};

/// Lower convex hull of (k, -deg b_k), left to right.
struct NewtonPolygon {
    std::vector<PolygonEdge> edges;
};

NewtonPolygon newton_polygon(const RecOp& P);

struct Growth {
    Rational kappa;
    double alpha = 0;       ///< modulus of the characteristic root
    bool ambiguous = false; ///< a horizontal-edge root sits numerically on the unit circle
};

/// Growth n!^kappa alpha^n of the slowest-decaying convergent solution class;
/// nullopt when the polygon is degenerate (s = 0).
std::optional<Growth> convergent_growth(const RecOp& P);

/// ln of the growth model n!^kappa alpha^n.
double log_growth(const Growth& g, long n);

/// Start index for the solver: at least max(d, max S) + s; the smallest N with
/// N!^kappa alpha^N <= eps when the growth model is usable.
long choose_N(const RecOp& P, int d, const Rational& eps);

/// Same, with the accuracy target given by its natural logarithm.
long choose_N_log(const RecOp& P, int d, double log_eps);

} // namespace dfc
