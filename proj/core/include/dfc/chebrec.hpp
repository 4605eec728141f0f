#pragma once

#include "dfc/oreops.hpp"
#include "dfc/poly.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace dfc {

/// Reduced rational function num(n)/den(n), den monic.
struct RatFun {
    Poly num;
    Poly den = Poly::constant(1);

    RatFun() = default;
    RatFun(Poly p); // NOLINT(google-explicit-constructor)
    RatFun(Poly n, Poly d);

    bool is_zero() const { return num.is_zero(); }
    bool is_polynomial() const { return den.degree() == 0; }
    /// f(n + k)
    RatFun shift(int k) const;
    Rational eval(const Rational& n) const;

    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend bool operator==(const RatFun& a, const RatFun& b) { return a.num == b.num && a.den == b.den; }
};

/// Element sum_k f_k(n) S^k of the skew Laurent ring Q(n)<S, S^-1>, with S n = (n+1) S.
class SkewLaurent {
public:
    SkewLaurent() = default;
    static SkewLaurent shift_op(int k);                 // S^k
    static SkewLaurent scalar(const RatFun& f);         // f(n) S^0
    static SkewLaurent X();                             // (S + S^-1)/2
    static SkewLaurent I();                             // (S^-1 - S)/(2n)

    const std::map<int, RatFun>& terms() const { return t_; }
    RatFun coeff(int k) const;
    bool is_zero() const { return t_.empty(); }
    int min_shift() const { return t_.empty() ? 0 : t_.begin()->first; }
    int max_shift() const { return t_.empty() ? 0 : t_.rbegin()->first; }

    friend SkewLaurent operator+(const SkewLaurent& a, const SkewLaurent& b);
    friend SkewLaurent operator-(const SkewLaurent& a, const SkewLaurent& b);
    /// (f S^k)(g S^l) = f g(n+k) S^{k+l}
    friend SkewLaurent operator*(const SkewLaurent& a, const SkewLaurent& b);
    friend bool operator==(const SkewLaurent& a, const SkewLaurent& b) { return a.t_ == b.t_; }

    /// (A u)_n = sum_k f_k(n) u_{n+k}; coefficients must be defined at n.
    Rational apply(const std::function<Rational(long)>& u, long n) const;

private:
    void add_term(int k, const RatFun& f);
    std::map<int, RatFun> t_;
};

/// q(X) for a polynomial q with X = (S + S^-1)/2.
SkewLaurent eval_at_X(const Poly& q);

/// Recurrence operator P = sum_{k=-s}^{s} b_k(n) S^k with integer polynomial coefficients.
struct RecOp {
    int s = 0;
    std::vector<Poly> b;    ///< b[k + s] = b_k
    Rational scale = 1;     ///< unnormalized operator = scale * P

    const Poly& coeff(int k) const { return b[static_cast<size_t>(k + s)]; }
    /// b_k(n) as an exact integer.
    Integer eval_coeff(int k, long n) const;
    /// (P u)_n for a symmetric sequence given by its values u_0, u_1, ... (u_{-m} = u_m).
    Rational apply_symmetric(const std::vector<Rational>& u, long n) const;
    std::string to_string() const;

    // integer coefficient cache for fast evaluation
    std::vector<std::vector<Integer>> int_coeffs;
};

/// delta_r(n) = 2^r prod_{i=-r+1}^{r-1} (n - i).
Poly delta(int r);

/// Q_r = delta_r(n) I^r.
SkewLaurent build_Q(int r);

/// Unnormalized P = delta_r(n) sum_i I^{r-i} q_i(X), q_i from the left normal form of L.
SkewLaurent recurrence_operator(const DiffOp& L);

/// Normalized recurrence: integer coefficients, unit content, lc(b_s) > 0.
RecOp chebyshev_recurrence(const DiffOp& L);

/// {n >= s : b_{-s}(n) = 0}, sorted.
std::vector<long> singularities(const RecOp& P);

} // namespace dfc
