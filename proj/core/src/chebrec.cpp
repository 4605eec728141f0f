#include "dfc/chebrec.hpp"

#include "dfc/errors.hpp"

#include <sstream>

namespace dfc {

// ---- RatFun ----

RatFun::RatFun(Poly p) : num(std::move(p)) {}

RatFun::RatFun(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw InternalError("rational function with zero denominator");
    if (num.is_zero()) {
        den = Poly::constant(1);
        return;
    }
    if (den.degree() > 0) {
        Poly g = gcd(num, den);
        if (g.degree() > 0) {
            num = divrem(num, g).first;
            den = divrem(den, g).first;
        }
    }
    Rational l = den.lc();
    if (l != 1) {
        num /= l;
        den /= l;
    }
}

RatFun RatFun::shift(int k) const {
    if (k == 0) return *this;
    return RatFun(num.shift(k), den.shift(k));
}

Rational RatFun::eval(const Rational& n) const {
    Rational d = den.eval(n);
    if (d == 0) throw InternalError("rational function evaluated at a pole");
    return num.eval(n) / d;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den == b.den) return RatFun(a.num + b.num, a.den);
    return RatFun(a.num * b.den + b.num * a.den, a.den * b.den);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    return a + RatFun(-b.num, b.den);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun();
    return RatFun(a.num * b.num, a.den * b.den);
}

// ---- SkewLaurent ----

SkewLaurent SkewLaurent::shift_op(int k) {
    SkewLaurent r;
    r.t_[k] = RatFun(Poly::constant(1));
    return r;
}

SkewLaurent SkewLaurent::scalar(const RatFun& f) {
    SkewLaurent r;
    if (!f.is_zero()) r.t_[0] = f;
    return r;
}

SkewLaurent SkewLaurent::X() {
    SkewLaurent r;
    r.t_[1] = RatFun(Poly::constant(Rational(1, 2)));
    r.t_[-1] = RatFun(Poly::constant(Rational(1, 2)));
    return r;
}

SkewLaurent SkewLaurent::I() {
    SkewLaurent r;
    Poly twon = Poly::monomial(1, 2);
    r.t_[-1] = RatFun(Poly::constant(1), twon);
    r.t_[1] = RatFun(Poly::constant(-1), twon);
    return r;
}

RatFun SkewLaurent::coeff(int k) const {
    auto it = t_.find(k);
    return it == t_.end() ? RatFun() : it->second;
}

void SkewLaurent::add_term(int k, const RatFun& f) {
    if (f.is_zero()) return;
    auto it = t_.find(k);
    if (it == t_.end()) {
        t_.emplace(k, f);
        return;
    }
    it->second = it->second + f;
    if (it->second.is_zero()) t_.erase(it);
}

SkewLaurent operator+(const SkewLaurent& a, const SkewLaurent& b) {
    SkewLaurent r = a;
    for (const auto& [k, f] : b.t_) r.add_term(k, f);
    return r;
}

SkewLaurent operator-(const SkewLaurent& a, const SkewLaurent& b) {
    SkewLaurent r = a;
    for (const auto& [k, f] : b.t_) r.add_term(k, RatFun(-f.num, f.den));
    return r;
}

SkewLaurent operator*(const SkewLaurent& a, const SkewLaurent& b) {
    SkewLaurent r;
    for (const auto& [k, f] : a.t_)
        for (const auto& [l, g] : b.t_) r.add_term(k + l, f * g.shift(k));
    return r;
}

Rational SkewLaurent::apply(const std::function<Rational(long)>& u, long n) const {
    Rational s = 0;
    for (const auto& [k, f] : t_) s += f.eval(Rational(n)) * u(n + k);
    return s;
}

SkewLaurent eval_at_X(const Poly& q) {
    SkewLaurent acc;
    const SkewLaurent X = SkewLaurent::X();
    for (int i = q.degree(); i >= 0; --i)
        acc = acc * X + SkewLaurent::scalar(RatFun(Poly::constant(q.coeff(i))));
    return acc;
}

// ---- RecOp ----

Integer RecOp::eval_coeff(int k, long n) const {
    const auto& c = int_coeffs[static_cast<size_t>(k + s)];
    Integer acc = 0;
    for (size_t i = c.size(); i-- > 0;) {
        acc *= n;
        acc += c[i];
    }
    return acc;
}

Rational RecOp::apply_symmetric(const std::vector<Rational>& u, long n) const {
    Rational acc = 0;
    for (int k = -s; k <= s; ++k) {
        long idx = n + k;
        if (idx < 0) idx = -idx;
        if (idx >= static_cast<long>(u.size())) continue;
        if (u[static_cast<size_t>(idx)] == 0) continue;
        acc += Rational(coeff(k).eval(Rational(n))) * u[static_cast<size_t>(idx)];
    }
    return acc;
}

std::string RecOp::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int k = -s; k <= s; ++k) {
        if (coeff(k).is_zero()) continue;
        if (!first) os << ", ";
        first = false;
        os << "b_" << (k < 0 ? "{" + std::to_string(k) + "}" : std::to_string(k)) << "="
           << coeff(k).to_string("n");
    }
    return os.str();
}

// ---- construction ----

Poly delta(int r) {
    if (r < 0) throw InputError("delta: negative order");
    Poly p = Poly::constant(pow(Rational(2), static_cast<unsigned long>(r)));
    for (int i = -r + 1; i <= r - 1; ++i) p *= Poly{Rational(-i), Rational(1)};
    return p;
}

SkewLaurent build_Q(int r) {
    SkewLaurent acc = SkewLaurent::scalar(RatFun(delta(r)));
    const SkewLaurent I = SkewLaurent::I();
    for (int i = 0; i < r; ++i) acc = acc * I;
    return acc;
}

SkewLaurent recurrence_operator(const DiffOp& L) {
    const int r = L.order();
    auto q = left_normal_form(L);
    const SkewLaurent I = SkewLaurent::I();
    SkewLaurent acc = eval_at_X(q[0]);
    for (int i = 1; i <= r; ++i) acc = I * acc + eval_at_X(q[static_cast<size_t>(i)]);
    return SkewLaurent::scalar(RatFun(delta(r))) * acc;
}

RecOp chebyshev_recurrence(const DiffOp& L) {
    SkewLaurent raw = recurrence_operator(L);
    if (raw.is_zero()) throw InternalError("recurrence operator vanishes");
    int s = std::max(-raw.min_shift(), raw.max_shift());
    RecOp P;
    P.s = s;
    P.b.assign(static_cast<size_t>(2 * s + 1), Poly());
    Integer den = 1;
    for (const auto& [k, f] : raw.terms()) {
        if (!f.is_polynomial()) throw InternalError("recurrence coefficient is not a polynomial");
        for (const auto& c : f.num.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    Integer g = 0;
    for (const auto& [k, f] : raw.terms())
        for (const auto& c : f.num.coeffs()) {
            Rational v = c * den;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
        }
    Rational factor = Rational(den) / Rational(g); // P = factor * raw
    if (raw.coeff(s).num.lc() * factor < 0) factor = -factor;
    for (const auto& [k, f] : raw.terms()) P.b[static_cast<size_t>(k + s)] = f.num * factor;
    P.scale = 1 / factor;
    P.int_coeffs.resize(P.b.size());
    for (size_t i = 0; i < P.b.size(); ++i)
        for (const auto& c : P.b[i].coeffs()) {
            if (c.get_den() != 1) throw InternalError("non-integer normalized coefficient");
            P.int_coeffs[i].push_back(c.get_num());
        }
    return P;
}

std::vector<long> singularities(const RecOp& P) {
    std::vector<long> out;
    const Poly& t = P.coeff(-P.s);
    if (t.is_zero()) throw InternalError("trailing recurrence coefficient vanishes");
    for (const auto& z : integer_roots(t))
        if (z >= P.s) {
            if (!z.fits_slong_p()) throw InputError("singular index out of range");
            out.push_back(z.get_si());
        }
    return out;
}

} // namespace dfc
