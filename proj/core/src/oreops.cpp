#include "dfc/oreops.hpp"

#include "dfc/errors.hpp"

#include <algorithm>
#include <string>

namespace dfc {

DiffOp::DiffOp(std::vector<Poly> coeffs) : a(std::move(coeffs)) {
    while (a.size() > 1 && a.back().is_zero()) a.pop_back();
}

int DiffOp::max_coeff_degree() const {
    int m = 0;
    for (const auto& p : a) m = std::max(m, p.degree());
    return m;
}

Poly DiffOp::apply(const Poly& y) const {
    Poly out;
    Poly dy = y;
    for (size_t i = 0; i < a.size(); ++i) {
        out += a[i] * dy;
        dy = dy.derivative();
    }
    return out;
}

BoundaryCondition BoundaryCondition::initial(int order, const Rational& value) {
    return BoundaryCondition{{ConditionTerm{Rational(1), order, Rational(0)}}, value};
}

IvpProblem IvpProblem::from_initial_values(DiffOp op, const std::vector<Rational>& values) {
    IvpProblem p{std::move(op), {}};
    for (size_t i = 0; i < values.size(); ++i)
        p.conditions.push_back(BoundaryCondition::initial(static_cast<int>(i), values[i]));
    return p;
}

std::optional<std::vector<Rational>> IvpProblem::initial_values() const {
    const int r = op.order();
    if (static_cast<int>(conditions.size()) != r) return std::nullopt;
    std::vector<Rational> l(static_cast<size_t>(r));
    std::vector<bool> seen(static_cast<size_t>(r), false);
    for (const auto& c : conditions) {
        if (c.terms.size() != 1) return std::nullopt;
        const auto& t = c.terms[0];
        if (t.point != 0 || t.weight == 0 || t.order < 0 || t.order >= r) return std::nullopt;
        if (seen[static_cast<size_t>(t.order)]) return std::nullopt;
        seen[static_cast<size_t>(t.order)] = true;
        l[static_cast<size_t>(t.order)] = c.target / t.weight;
    }
    return l;
}

void IvpProblem::check() const {
    const int r = op.order();
    if (r < 1) throw InputError("operator must have order at least 1");
    if (op.leading().is_zero()) throw DomainError("leading coefficient is identically zero");
    if (static_cast<int>(conditions.size()) != r)
        throw InputError("expected " + std::to_string(r) + " conditions, got " +
                         std::to_string(conditions.size()));
    for (const auto& c : conditions) {
        if (c.terms.empty()) throw InputError("boundary condition without terms");
        for (const auto& t : c.terms) {
            if (t.order < 0 || t.order > r) throw InputError("derivative order out of range");
            if (abs(t.point) > 1) throw InputError("condition point outside [-1, 1]");
        }
    }
    if (!check_nonvanishing(op.leading()))
        throw DomainError("leading coefficient vanishes on [-1, 1]");
}

std::vector<Poly> left_normal_form(const DiffOp& L) {
    const int r = L.order();
    std::vector<Poly> c = L.a;
    std::vector<Poly> q(static_cast<size_t>(r) + 1);
    for (int i = r; i >= 0; --i) {
        q[static_cast<size_t>(i)] = c[static_cast<size_t>(i)];
        // D^i q = sum_k C(i,k) q^{(k)} D^{i-k}
        Poly dk = q[static_cast<size_t>(i)];
        for (int k = 1; k <= i; ++k) {
            dk = dk.derivative();
            if (dk.is_zero()) break;
            c[static_cast<size_t>(i - k)] -=
                dk * Rational(binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(k)));
        }
    }
    return q;
}

DiffOp from_left_normal_form(const std::vector<Poly>& q) {
    std::vector<Poly> a(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        Poly dk = q[i];
        for (size_t k = 0; k <= i; ++k) {
            if (dk.is_zero()) break;
            a[i - k] += dk * Rational(binomial(i, k));
            dk = dk.derivative();
        }
    }
    return DiffOp(std::move(a));
}

bool check_nonvanishing(const Poly& a) {
    if (a.is_zero()) throw DomainError("nonvanishing test on the zero polynomial");
    return count_real_roots(a, Rational(-1), Rational(1)) == 0;
}

VolterraSystem volterra_system(const IvpProblem& ivp) {
    auto l = ivp.initial_values();
    if (!l) throw InputError("validation requires initial conditions y^(i)(0) = l_i");
    const int r = ivp.op.order();
    VolterraSystem vs;
    vs.alpha = left_normal_form(ivp.op);
    const auto& al = vs.alpha;
    auto fact = [](int n) { return Rational(factorial(static_cast<unsigned long>(n))); };

    vs.beta.resize(static_cast<size_t>(r));
    for (int j = 0; j < r; ++j) {
        Poly bj;
        for (int i = 0; i <= r - 1 - j; ++i) {
            Rational c = Rational(i % 2 == 0 ? -1 : 1) / (fact(i) * fact(j));
            bj += Poly::monomial(i, c) * al[static_cast<size_t>(r - 1 - j - i)];
        }
        vs.beta[static_cast<size_t>(j)] = std::move(bj);
    }

    std::vector<Rational> gc(static_cast<size_t>(r));
    for (int k = 0; k < r; ++k) {
        Rational s = 0;
        for (int j = 0; j <= k; ++j)
            for (int i = j; i <= k; ++i)
                s += Rational(binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(j))) *
                     al[static_cast<size_t>(r - k + i)].derivative(i - j).eval(0) *
                     (*l)[static_cast<size_t>(j)];
        gc[static_cast<size_t>(k)] = s / fact(k);
    }
    vs.g = Poly(std::move(gc));
    return vs;
}

std::vector<Poly> kernel_by_expansion(const std::vector<Poly>& alpha) {
    const int r = static_cast<int>(alpha.size()) - 1;
    std::vector<Poly> out(static_cast<size_t>(std::max(r, 0)));
    for (int k = 0; k < r; ++k) {
        // (x - t)^k = sum_j C(k,j) x^j (-t)^{k-j}
        for (int j = 0; j <= k; ++j) {
            Rational c = Rational(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j))) /
                         Rational(factorial(static_cast<unsigned long>(k)));
            if ((k - j) % 2 == 1) c = -c;
            out[static_cast<size_t>(j)] -= Poly::monomial(k - j, c) * alpha[static_cast<size_t>(r - 1 - k)];
        }
    }
    return out;
}

DiffOp rescale_to_unit(const DiffOp& L, const Rational& a, const Rational& b) {
    if (!(a < b)) throw InputError("interval must satisfy a < b");
    Rational h = (b - a) / 2, m = (a + b) / 2;
    if (h == 1 && m == 0) return L;
    const int r = L.order();
    Poly arg{m, h};
    std::vector<Poly> out;
    for (int i = 0; i <= r; ++i)
        out.push_back(L.a[static_cast<size_t>(i)].compose(arg) * pow(h, static_cast<unsigned long>(r - i)));
    return DiffOp(std::move(out));
}

IvpProblem rescale_to_unit(const IvpProblem& p, const Rational& a, const Rational& b) {
    IvpProblem out{rescale_to_unit(p.op, a, b), p.conditions};
    Rational h = (b - a) / 2, m = (a + b) / 2;
    for (auto& c : out.conditions)
        for (auto& t : c.terms) {
            if (t.point < a || t.point > b) throw InputError("condition point outside the interval");
            t.point = (t.point - m) / h;
            t.weight /= pow(h, static_cast<unsigned long>(t.order));
        }
    return out;
}

} // namespace dfc
