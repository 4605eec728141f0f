#include "dfc/asymptotics.hpp"

#include "dfc/errors.hpp"

#include <Eigen/Core>
#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>

namespace dfc {

namespace {

std::vector<std::complex<double>> numeric_roots(const Poly& p) {
    std::vector<std::complex<double>> out;
    const int d = p.degree();
    if (d <= 0) return out;
    if (d == 1) {
        out.emplace_back(-to_double(p.coeff(0) / p.coeff(1)), 0.0);
        return out;
    }
    // normalize by the leading coefficient to keep doubles in range
    Eigen::VectorXd c(d + 1);
    for (int i = 0; i <= d; ++i) c[i] = to_double(p.coeff(i) / p.lc());
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver;
    solver.compute(c);
    for (Eigen::Index i = 0; i < solver.roots().size(); ++i) out.push_back(solver.roots()[i]);
    return out;
}

// cross product sign for the lower hull test
Rational cross(long x0, const Rational& y0, long x1, const Rational& y1, long x2, const Rational& y2) {
    return Rational(x1 - x0) * (y2 - y0) - (y1 - y0) * Rational(x2 - x0);
}

} // namespace

NewtonPolygon newton_polygon(const RecOp& P) {
    struct Pt {
        long k;
        Rational y;
    };
    std::vector<Pt> pts;
    for (int k = -P.s; k <= P.s; ++k)
        if (!P.coeff(k).is_zero()) pts.push_back({k, Rational(-P.coeff(k).degree())});
    if (pts.empty()) throw InputError("Newton polygon of the zero operator");
    std::vector<Pt> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2 &&
               cross(hull[hull.size() - 2].k, hull[hull.size() - 2].y, hull.back().k, hull.back().y, p.k, p.y) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    NewtonPolygon poly;
    for (size_t e = 0; e + 1 < hull.size(); ++e) {
        PolygonEdge edge;
        edge.k_left = static_cast<int>(hull[e].k);
        edge.k_right = static_cast<int>(hull[e + 1].k);
        edge.slope = (hull[e + 1].y - hull[e].y) / Rational(edge.k_right - edge.k_left);
        std::vector<Rational> chi(static_cast<size_t>(edge.k_right - edge.k_left) + 1);
        for (const auto& p : pts) {
            if (p.k < edge.k_left || p.k > edge.k_right) continue;
            // on the supporting line?
            if (hull[e].y + edge.slope * Rational(p.k - edge.k_left) != p.y) continue;
            chi[static_cast<size_t>(p.k - edge.k_left)] = P.coeff(static_cast<int>(p.k)).lc();
        }
        edge.chi = Poly(std::move(chi));
        edge.roots = numeric_roots(edge.chi);
        std::sort(edge.roots.begin(), edge.roots.end(),
                  [](auto a, auto b) { return std::abs(a) < std::abs(b); });
        poly.edges.push_back(std::move(edge));
    }
    return poly;
}

std::optional<Growth> convergent_growth(const RecOp& P) {
    if (P.s == 0) return std::nullopt;
    NewtonPolygon np = newton_polygon(P);
    int seen = 0;
    for (const auto& e : np.edges) {
        for (const auto& z : e.roots) {
            if (++seen == P.s) {
                Growth g{e.slope, std::abs(z), false};
                if (e.slope == 0 && std::fabs(g.alpha - 1.0) < 1e-9) g.ambiguous = true;
                return g;
            }
        }
    }
    return std::nullopt;
}

double log_growth(const Growth& g, long n) {
    return to_double(g.kappa) * std::lgamma(static_cast<double>(n) + 1.0) +
           static_cast<double>(n) * std::log(g.alpha);
}

long choose_N_log(const RecOp& P, int d, double log_eps) {
    auto S = singularities(P);
    long base = std::max<long>(d, S.empty() ? 0 : S.back()) + P.s;
    auto g = convergent_growth(P);
    if (!g || g->ambiguous || g->alpha <= 0) return base;
    bool decays = g->kappa < 0 || (g->kappa == 0 && g->alpha < 1);
    if (!decays) return base;
    constexpr long kCap = 1000000;
    for (long N = base; N < base + kCap; ++N)
        if (log_growth(*g, N) <= log_eps) return N;
    return base;
}

long choose_N(const RecOp& P, int d, const Rational& eps) {
    if (eps <= 0) throw InputError("accuracy target must be positive");
    return choose_N_log(P, d, log_abs(eps));
}

} // namespace dfc
