#pragma once

#include "dfc/poly.hpp"
#include "dfc/rational.hpp"

#include <optional>
#include <vector>

namespace dfc {

/// L = a_r(x) D^r + ... + a_1(x) D + a_0(x), coefficients in the monomial basis.
struct DiffOp {
    std::vector<Poly> a;

    DiffOp() = default;
    explicit DiffOp(std::vector<Poly> coeffs);

    int order() const { return static_cast<int>(a.size()) - 1; }
    const Poly& leading() const { return a.back(); }
    int max_coeff_degree() const;

    /// L applied to a polynomial.
    Poly apply(const Poly& y) const;

    friend bool operator==(const DiffOp&, const DiffOp&) = default;
};

/// One term mu * y^{(order)}(point) of a linear boundary form.
struct ConditionTerm {
    Rational weight;
    int order = 0;
    Rational point;

    friend bool operator==(const ConditionTerm&, const ConditionTerm&) = default;
};

/// lambda(y) = sum_j mu_j y^{(r_j)}(x_j) = target.
struct BoundaryCondition {
    std::vector<ConditionTerm> terms;
    Rational target;

    static BoundaryCondition initial(int order, const Rational& value);
    friend bool operator==(const BoundaryCondition&, const BoundaryCondition&) = default;
};

struct IvpProblem {
    DiffOp op;
    std::vector<BoundaryCondition> conditions;

    /// y^{(i)}(0) = values[i] for i = 0..r-1.
    static IvpProblem from_initial_values(DiffOp op, const std::vector<Rational>& values);

    /// Initial values l_0..l_{r-1} when every condition is a single nonzero multiple of
    /// y^{(i)}(0), one per order; nullopt otherwise.
    std::optional<std::vector<Rational>> initial_values() const;

    /// Checks the structural invariants (order >= 1, r conditions, points in [-1,1],
    /// orders <= r, leading coefficient nonvanishing). Throws InputError/DomainError.
    void check() const;
};

/// Coefficients q_0..q_r with L = D^r q_r + ... + D q_1 + q_0.
std::vector<Poly> left_normal_form(const DiffOp& L);
inline std::vector<Poly> adjoint_alphas(const DiffOp& L) { return left_normal_form(L); }

/// Expands sum_i D^i q_i back into the form sum_i a_i D^i.
DiffOp from_left_normal_form(const std::vector<Poly>& q);

/// True iff a has no real root in [-1, 1] (exact Sturm count).
bool check_nonvanishing(const Poly& a);

/// alpha_r y = g + int_0^x K(x,t) y(t) dt with K(x,t) = sum_j beta_j(t) x^j.
struct VolterraSystem {
    std::vector<Poly> alpha;
    std::vector<Poly> beta;
    Poly g;
};

/// Requires pure initial conditions at 0; throws InputError otherwise.
VolterraSystem volterra_system(const IvpProblem& ivp);

/// Coefficients of K(x,t) = -sum_k (x-t)^k/k! alpha_{r-1-k}(t) by powers of x,
/// computed by direct expansion (used to cross-check beta_j).
std::vector<Poly> kernel_by_expansion(const std::vector<Poly>& alpha);

/// Maps a problem posed on [a, b] to [-1, 1] via X = (a+b)/2 + (b-a)/2 x.
DiffOp rescale_to_unit(const DiffOp& L, const Rational& a, const Rational& b);
IvpProblem rescale_to_unit(const IvpProblem& p, const Rational& a, const Rational& b);

} // namespace dfc
