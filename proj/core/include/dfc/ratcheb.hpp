#pragma once

#include "dfc/ball.hpp"
#include "dfc/chebpoly.hpp"
#include "dfc/poly.hpp"

#include <vector>

namespace dfc {

/// Certified disk |z - (re + i im)| <= radius containing exactly one root.
struct RootEnclosure {
    Rational re, im, radius;
    ComplexBall ball() const { return ComplexBall::disk(re, im, radius); }
};

/// One squarefree factor beta_i of beta(z) = z^D b((z + 1/z)/2), with the
/// numerators of its partial fractions and its roots outside the unit disk.
struct PartialFractionFactor {
    int multiplicity = 1;           ///< i
    Poly beta;                      ///< monic, squarefree
    std::vector<Poly> h;            ///< h[j-1] = h_{i,j}, reduced modulo beta
    std::vector<RootEnclosure> outer;
    std::vector<RootEnclosure> inner;
};

/// Laurent-side view of y = g/b on the Joukowski circle:
/// y(x) = q(x) + sum_{i,j} sum_{beta_i(zeta)=0} h_{i,j}(zeta) / (zeta - z)^j,
/// x = (z + 1/z)/2, with |z| = 1.
struct PartialFractionForm {
    ChebPoly q;                     ///< polynomial part, Chebyshev basis
    Rational content;               ///< beta = content * prod beta_i^i
    std::vector<PartialFractionFactor> factors;
    int D = 0;                      ///< deg b
    long prec = 128;                ///< working precision of the enclosures (bits)

    /// Certified bounds rho_- <= |zeta| <= rho_+ over the outer roots
    /// (both 0 when there are no fractions).
    Rational rho_minus() const;
    Rational rho_plus() const;
};

/// Partial fraction form of g/b for g on the Chebyshev basis and b on the
/// monomial basis, with roots certified to radius below 2^-bits.
/// Throws DomainError if b vanishes on [-1, 1].
PartialFractionForm partial_fractions(const ChebPoly& g, const Poly& b, long bits = 128);
/// Same for a/b with a on the monomial basis; a/b is reduced first.
PartialFractionForm partial_fractions(const Poly& a, const Poly& b, long bits = 128);

/// Tightens every root enclosure to radius below `radius`, working with at least
/// `prec` bits. Throws RefinementError when this cannot be achieved.
void refine_roots(PartialFractionForm& pf, const Rational& radius, long prec);

/// Symmetric-convention coefficient y_n as a real enclosure.
Ball cheb_coeff(const PartialFractionForm& pf, long n);
/// Enclosures of y_0..y_upto (symmetric convention).
std::vector<Ball> cheb_coeffs(const PartialFractionForm& pf, long upto);

/// Rigorous upper bound on sup_{[-1,1]} |sum_{|n|>d} y_n T_n|. Requires d >= deg q.
Rational tail_bound(const PartialFractionForm& pf, long d);

/// Diagnostics of one expand_product call.
struct ExpansionInfo {
    long degree = 0;          ///< d'
    Rational rho_minus, rho_plus;
    Rational M;
    Rational eps_prime;
    Rational tail;            ///< tail bound at d'
    Rational coeff_error;     ///< sup-norm bound of the coefficient errors
    long prec = 0;
    int attempts = 0;
};

/// Polynomial within eps of f * a / b in sup norm on [-1, 1].
ChebPoly expand_product(const Poly& a, const Poly& b, const ChebPoly& f, const Rational& eps,
                        ExpansionInfo* info = nullptr);

} // namespace dfc
