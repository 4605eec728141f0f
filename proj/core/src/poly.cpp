#include "dfc/poly.hpp"

#include "dfc/errors.hpp"

#include <algorithm>
#include <sstream>

namespace dfc {

namespace {
const Rational kZero(0);
}

Poly::Poly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

Poly::Poly(std::initializer_list<Rational> c) : c_(c) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(int k, const Rational& c) {
    std::vector<Rational> v(static_cast<size_t>(k) + 1);
    v[static_cast<size_t>(k)] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return c_[static_cast<size_t>(i)];
}

const Rational& Poly::lc() const { return c_.empty() ? kZero : c_.back(); }

Rational Poly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(d));
}

Poly Poly::derivative(int k) const {
    Poly p = *this;
    for (int i = 0; i < k; ++i) p = p.derivative();
    return p;
}

Poly Poly::shift(const Rational& h) const {
    // Taylor shift by repeated synthetic division
    std::vector<Rational> a = c_;
    const size_t n = a.size();
    for (size_t i = 0; i + 1 < n; ++i)
        for (size_t j = n - 1; j > i; --j) a[j - 1] += h * a[j];
    return Poly(std::move(a));
}

Poly Poly::scale_arg(const Rational& c) const {
    std::vector<Rational> a = c_;
    Rational p = 1;
    for (auto& v : a) {
        v *= p;
        p *= c;
    }
    return Poly(std::move(a));
}

Poly Poly::compose(const Poly& q) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + Poly::constant(*it);
    return acc;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= c;
    return *this;
}

Poly& Poly::operator/=(const Rational& c) {
    if (c == 0) throw DomainError("polynomial division by zero scalar");
    for (auto& v : c_) v /= c;
    return *this;
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    return *this / lc();
}

Poly Poly::primitive() const {
    if (is_zero()) return {};
    Integer l = 1;
    for (const auto& v : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Rational> a(c_.size());
    Integer g = 0;
    for (size_t i = 0; i < c_.size(); ++i) {
        a[i] = c_[i] * l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a[i].get_num_mpz_t());
    }
    if (c_.back() < 0) g = -g;
    for (auto& v : a) v /= g;
    return Poly(std::move(a));
}

std::string Poly::to_string(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<size_t>(i)];
        if (c == 0) continue;
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = a == 1;
        if (!unit || i == 0) os << dfc::to_string(a);
        if (i > 0) {
            if (!unit && a.get_den() != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rational> r = a.coeffs();
    const int db = b.degree();
    std::vector<Rational> q(static_cast<size_t>(a.degree() - db) + 1);
    const Rational& lb = b.lc();
    for (int k = a.degree(); k >= db; --k) {
        Rational c = r[static_cast<size_t>(k)] / lb;
        q[static_cast<size_t>(k - db)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j)
            r[static_cast<size_t>(k - db + j)] -= c * b.coeffs()[static_cast<size_t>(j)];
    }
    r.resize(static_cast<size_t>(db));
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divrem(x, y).second;
        x = std::move(y);
        y = r.primitive();
    }
    return x.monic();
}

ExtendedGcd extended_gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(1), s1;
    Poly t0, t1 = Poly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {Poly(), Poly(), Poly()};
    Rational l = r0.lc();
    return {r0 / l, s0 / l, t0 / l};
}

std::vector<Poly> squarefree_factorization(const Poly& p) {
    std::vector<Poly> out;
    if (p.degree() <= 0) return out;
    Poly f = p.monic();
    Poly fp = f.derivative();
    Poly a0 = gcd(f, fp);
    Poly b = divrem(f, a0).first;
    Poly c = divrem(fp, a0).first;
    Poly d = c - b.derivative();
    while (b.degree() > 0) {
        Poly a = gcd(b, d);
        Poly bn = divrem(b, a).first;
        Poly cn = divrem(d, a).first;
        out.push_back(a.monic());
        b = std::move(bn);
        d = cn - b.derivative();
    }
    while (!out.empty() && out.back().degree() == 0) out.pop_back();
    return out;
}

namespace {

std::vector<Poly> sturm_sequence(const Poly& p) {
    std::vector<Poly> seq{p, p.derivative()};
    while (!seq.back().is_zero()) {
        Poly r = divrem(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero()) break;
        // keep signs, drop content for speed
        Poly pr = r.primitive();
        if (pr.lc() * r.lc() < 0) pr = -pr;
        seq.push_back(-pr);
    }
    if (seq.back().is_zero()) seq.pop_back();
    return seq;
}

int sign_changes(const std::vector<Poly>& seq, const Rational& x) {
    int changes = 0, last = 0;
    for (const auto& s : seq) {
        int v = sgn(s.eval(x));
        if (v == 0) continue;
        if (last != 0 && v != last) ++changes;
        last = v;
    }
    return changes;
}

Poly squarefree_part(const Poly& p) {
    Poly g = gcd(p, p.derivative());
    return divrem(p, g).first.monic();
}

} // namespace

int count_real_roots(const Poly& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw DomainError("root count of the zero polynomial");
    if (p.degree() == 0 || a > b) return 0;
    Poly q = squarefree_part(p);
    auto seq = sturm_sequence(q);
    int n = sign_changes(seq, a) - sign_changes(seq, b);
    if (q.eval(a) == 0) ++n;
    return n;
}

Rational root_bound(const Poly& p) {
    if (p.degree() <= 0) return 1;
    Rational m = 0;
    Rational l = abs(p.lc());
    for (int i = 0; i < p.degree(); ++i) {
        Rational v = abs(p.coeffs()[static_cast<size_t>(i)]) / l;
        if (v > m) m = v;
    }
    return m + 1;
}

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const Poly& p,
                                                              const Rational& width) {
    std::vector<std::pair<Rational, Rational>> out;
    if (p.is_zero()) throw DomainError("root isolation of the zero polynomial");
    if (p.degree() == 0) return out;
    Poly q = squarefree_part(p);
    auto seq = sturm_sequence(q);
    Rational R = root_bound(q) + 1;
    // work on half-open intervals (lo, hi]; endpoints -R, R are never roots
    struct Item {
        Rational lo, hi;
        int vlo, vhi;
    };
    std::vector<Item> stack{{-R, R, sign_changes(seq, -R), sign_changes(seq, R)}};
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        int n = it.vlo - it.vhi;
        if (n == 0) continue;
        if (q.eval(it.hi) == 0 && n == 1) {
            out.emplace_back(it.hi, it.hi);
            continue;
        }
        if (n == 1 && it.hi - it.lo <= width) {
            out.emplace_back(it.lo, it.hi);
            continue;
        }
        Rational mid = (it.lo + it.hi) / 2;
        int vm = sign_changes(seq, mid);
        stack.push_back({mid, it.hi, vm, it.vhi});
        stack.push_back({it.lo, mid, it.vlo, vm});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Integer> integer_roots(const Poly& p) {
    std::vector<Integer> out;
    for (auto [lo, hi] : isolate_real_roots(p, Rational(1, 2))) {
        for (Integer k = ceil(lo); k <= floor(hi); ++k)
            if (p.eval(Rational(k)) == 0) out.push_back(k);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace dfc
