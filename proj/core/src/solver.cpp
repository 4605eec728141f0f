#include "dfc/solver.hpp"

#include "dfc/asymptotics.hpp"
#include "dfc/errors.hpp"
#include "dfc/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace dfc {

int default_max_retries() {
    if (const char* env = std::getenv("DFC_MAX_RETRIES")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0 && v <= 1000) return static_cast<int>(v);
    }
    return 5;
}

long auto_start_index(const RecOp& P, int d) {
    auto g = convergent_growth(P);
    if (!g || g->ambiguous) return choose_N_log(P, d, 0.0);
    return choose_N_log(P, d, 2.0 * log_growth(*g, d));
}

Rational eval_condition(const BoundaryCondition& c, const ChebPoly& p) {
    Rational v = 0;
    for (const auto& t : c.terms) v += t.weight * eval(derivative(p, t.order), t.point);
    return v;
}

namespace {

// Weights of one condition term on symmetric coefficients, scaled to integers:
// W[m] = Q^M * w_m with w_0 = T_0^{(k)}(x), w_m = 2 T_m^{(k)}(x), x = P/Q.
struct TermWeights {
    Rational mu;
    Integer QM;
    std::vector<Integer> W;
};

TermWeights term_weights(const ConditionTerm& t, long M) {
    const Integer P = t.point.get_num();
    const Integer Q = t.point.get_den();
    const int k = t.order;
    const size_t len = static_cast<size_t>(M) + 1;
    // V[j][m] = Q^m T_m^{(j)}(x)
    std::vector<std::vector<Integer>> V(static_cast<size_t>(k) + 1, std::vector<Integer>(len));
    const Integer Q2 = Q * Q;
    for (int j = 0; j <= k; ++j) {
        auto& row = V[static_cast<size_t>(j)];
        row[0] = j == 0 ? 1 : 0;
        if (len > 1) row[1] = j == 0 ? P : (j == 1 ? Q : Integer(0));
        for (size_t m = 1; m + 1 < len; ++m) {
            Integer v = 2 * P * row[m] - Q2 * row[m - 1];
            if (j > 0) v += 2 * j * Q * V[static_cast<size_t>(j - 1)][m];
            row[m + 1] = std::move(v);
        }
    }
    TermWeights tw{t.weight, 1, std::vector<Integer>(len)};
    Integer qp = 1; // Q^{M-m}
    for (size_t m = len; m-- > 0;) {
        tw.W[m] = V[static_cast<size_t>(k)][m] * qp;
        if (m > 0) tw.W[m] *= 2;
        if (m > 0) qp *= Q;
    }
    tw.QM = qp; // Q^M
    return tw;
}

// a *= c, a += c * b with a fast path for single-limb c
void mul_small(Integer& a, const Integer& c) {
    if (c.fits_slong_p()) mpz_mul_si(a.get_mpz_t(), a.get_mpz_t(), c.get_si());
    else a *= c;
}

void addmul_small(Integer& a, const Integer& c, const Integer& b) {
    if (sgn(c) == 0) return;
    if (c.fits_slong_p()) {
        long v = c.get_si();
        if (v > 0) mpz_addmul_ui(a.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(v));
        else mpz_submul_ui(a.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(-(v + 1)) + 1);
    } else {
        mpz_addmul(a.get_mpz_t(), c.get_mpz_t(), b.get_mpz_t());
    }
}

// b_k(n) for k = -s..s into bk[k + s]
void load_coeffs(const RecOp& P, long n, std::vector<Integer>& bk) {
    for (long k = -P.s; k <= P.s; ++k) bk[static_cast<size_t>(k + P.s)] = P.eval_coeff(static_cast<int>(k), n);
}

// Divides the window, the condition sums and G by their common content.
void remove_content(std::vector<std::vector<Integer>>& X, std::vector<std::vector<Integer>>& Es,
                    const std::vector<bool>& active, Integer& G) {
    Integer g = G;
    for (size_t i = 0; i < X.size() && g != 1; ++i) {
        if (!active[i]) continue;
        for (const auto& v : X[i]) {
            if (g == 1) break;
            if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        }
        for (const auto& v : Es[i]) {
            if (g == 1) break;
            if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        }
    }
    if (g == 1) return;
    for (size_t i = 0; i < X.size(); ++i) {
        if (!active[i]) continue;
        for (auto& v : X[i]) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        for (auto& v : Es[i]) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
    mpz_divexact(G.get_mpz_t(), G.get_mpz_t(), g.get_mpz_t());
}

constexpr long kContentPeriod = 16;

struct Attempt {
    std::vector<Rational> eta;      // for the scaled test sequences
    std::vector<Rational> coeffs;   // symmetric c_0..c_kept
    std::map<long, Rational> eta_orig;
};

Attempt unroll_and_solve(const IvpProblem& ivp, const RecOp& P, const std::vector<long>& S, int d, long N,
                         bool keep_all) {
    const long s = P.s;
    const int r = ivp.op.order();
    std::vector<long> I = S;
    for (long i = N; i < N + s; ++i) I.push_back(i);
    std::sort(I.begin(), I.end());
    const size_t K = I.size();
    const long maxS = S.empty() ? -1 : S.back();
    const long keep = keep_all ? N + s - 1 : std::max<long>({static_cast<long>(d), std::max(s - 1, maxS) + s, 0});

    // unit position -> sequence index
    std::map<long, size_t> unit;
    for (size_t i = 0; i < K; ++i) unit[I[i] - s] = i;

    std::vector<std::vector<Integer>> keptF(K, std::vector<Integer>(static_cast<size_t>(keep) + 1));
    std::vector<Integer> keptG(static_cast<size_t>(keep) + 1);

    std::vector<TermWeights> terms;
    std::vector<size_t> term_cond;
    for (size_t c = 0; c < ivp.conditions.size(); ++c)
        for (const auto& t : ivp.conditions[c].terms) {
            terms.push_back(term_weights(t, N - 1));
            term_cond.push_back(c);
        }

    // Each sequence carries, after the step at position m, the window X_j = v_j Q_m
    // (j = m..m+2s-1) and the condition sums E_t = Q_m sum_{p >= m} w_t(p) v_p,
    // where Q_m is the product of the step factors at positions >= m.
    const size_t T = terms.size();
    std::vector<std::vector<Integer>> X(K, std::vector<Integer>(static_cast<size_t>(2 * s)));
    std::vector<std::vector<Integer>> Es(K, std::vector<Integer>(T));
    std::vector<bool> active(K, false);
    std::vector<Integer> bk(static_cast<size_t>(2 * s + 1));
    Integer G = 1, next;

    // Positions m >= N (relations n >= N + s) are zero.  Unit positions carry the
    // relation index n in I; for n in S this skips the relation at n entirely, the
    // constraint reappears in the selection system.
    long m = N - 1;
    while (m >= 0) {
        auto u = unit.find(m);
        const bool is_unit = u != unit.end();
        if (is_unit) {
            active[u->second] = true;
        } else {
            load_coeffs(P, m + s, bk);
            if (bk[0] == 0)
                throw InternalError("trailing coefficient vanishes outside the singular set at n = " + std::to_string(m + s));
        }
        for (size_t i = 0; i < K; ++i) {
            if (!active[i]) continue;
            auto& x = X[i];
            if (is_unit) {
                next = i == u->second ? 1 : 0;
            } else {
                next = 0;
                for (long c = 0; c < 2 * s; ++c) addmul_small(next, bk[static_cast<size_t>(c + 1)], x[static_cast<size_t>(c)]);
                mpz_neg(next.get_mpz_t(), next.get_mpz_t());
            }
            for (long c = 2 * s - 1; c > 0; --c) {
                x[static_cast<size_t>(c)].swap(x[static_cast<size_t>(c - 1)]);
                if (!is_unit) mul_small(x[static_cast<size_t>(c)], bk[0]);
            }
            if (s > 0) x[0] = next;
            for (size_t t = 0; t < T; ++t) {
                Integer& e = Es[i][t];
                if (!is_unit) mul_small(e, bk[0]);
                const Integer& w = terms[t].W[static_cast<size_t>(m)];
                if (w != 0 && next != 0) addmul_small(e, w, next);
            }
            if (m <= keep) keptF[i][static_cast<size_t>(m)] = next;
        }
        if (!is_unit) mul_small(G, bk[0]);
        if (m > keep && m % kContentPeriod == 0) remove_content(X, Es, active, G);
        if (m <= keep) keptG[static_cast<size_t>(m)] = G;
        --m;
    }
    std::vector<std::vector<Integer>> E(T, std::vector<Integer>(K));
    for (size_t t = 0; t < T; ++t)
        for (size_t i = 0; i < K; ++i) E[t][i] = std::move(Es[i][t]);
    for (long m = std::max<long>(N, 0); m <= keep; ++m) keptG[static_cast<size_t>(m)] = 1;

    // selection system
    RationalMatrix A;
    std::vector<Rational> rhs;
    for (size_t c = 0; c < ivp.conditions.size(); ++c) {
        std::vector<Rational> row(K);
        for (size_t t = 0; t < terms.size(); ++t) {
            if (term_cond[t] != c) continue;
            Rational scale = terms[t].mu / Rational(terms[t].QM * G);
            for (size_t i = 0; i < K; ++i) row[i] += Rational(E[t][i]) * scale;
        }
        A.push_back(std::move(row));
        rhs.push_back(ivp.conditions[c].target);
    }
    auto value = [&](size_t i, long m) -> Rational {
        if (m < 0) m = -m;
        if (m >= N) return 0;
        Rational v(keptF[i][static_cast<size_t>(m)], keptG[static_cast<size_t>(m)]);
        v.canonicalize();
        return v;
    };
    std::vector<long> rows;
    for (long n = r; n < s; ++n) rows.push_back(n);
    for (long n : S)
        if (std::find(rows.begin(), rows.end(), n) == rows.end()) rows.push_back(n);
    for (long n : rows) {
        std::vector<Rational> row(K);
        bool nonzero = false;
        for (long k = -s; k <= s; ++k) {
            Integer b = P.eval_coeff(static_cast<int>(k), n);
            if (b == 0) continue;
            for (size_t i = 0; i < K; ++i) row[i] += Rational(b) * value(i, n + k);
        }
        for (const auto& v : row) nonzero = nonzero || v != 0;
        if (!nonzero) continue;
        A.push_back(std::move(row));
        rhs.emplace_back(0);
    }
    if (A.size() < K) throw SingularSystemError("selection system is underdetermined");

    Attempt out;
    out.eta = solve_exact(std::move(A), std::move(rhs));
    const long upto = keep_all ? N + s - 1 : std::min<long>(d, keep);
    out.coeffs.assign(static_cast<size_t>(upto) + 1, Rational(0));
    // Coefficient m is sum_i eta_i F_i[m] / G_m. Sequences often decouple (even and
    // odd indices), so coefficients are grouped by the set of sequences that reach
    // them. A group puts all its coefficients over L * G_0, L the lcm of the eta
    // denominators involved, and keeps D, the lcm of the reduced denominators met so
    // far: a numerator divisible by L * G_0 / D is kept as trial / D without a gcd.
    // Coprimality with D is then settled by one gcd of D with the product of the
    // group's numerators mod D, so only primes of that gcd need per-coefficient work.
    struct Member {
        size_t m;
        Integer t, D; // value t / D
    };
    struct Group {
        std::vector<Integer> a; // eta_i * L, zero outside the group
        Integer den, D, h;      // den = L * G_0, h = den / D
        std::vector<Member> members;
    };
    std::map<std::vector<bool>, Group> groups;
    auto group_of = [&](const std::vector<bool>& mask) -> Group& {
        auto it = groups.find(mask);
        if (it != groups.end()) return it->second;
        Group gr;
        Integer L = 1;
        for (size_t i = 0; i < K; ++i)
            if (mask[i]) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), out.eta[i].get_den_mpz_t());
        gr.a.resize(K);
        for (size_t i = 0; i < K; ++i)
            if (mask[i]) gr.a[i] = out.eta[i].get_num() * (L / out.eta[i].get_den());
        gr.den = L * keptG[0];
        return groups.emplace(mask, std::move(gr)).first->second;
    };
    Integer num, q, rem, g;
    std::vector<bool> mask(K);
    for (long m = 0; m <= upto && m < N; ++m) {
        const size_t um = static_cast<size_t>(m);
        bool any = false;
        for (size_t i = 0; i < K; ++i) {
            mask[i] = out.eta[i] != 0 && keptF[i][um] != 0;
            any = any || mask[i];
        }
        if (!any) continue;
        Group& gr = group_of(mask);
        num = 0;
        for (size_t i = 0; i < K; ++i)
            if (mask[i]) mpz_addmul(num.get_mpz_t(), gr.a[i].get_mpz_t(), keptF[i][um].get_mpz_t());
        if (num == 0) continue;
        if (m > 0) num *= keptG[0] / keptG[um];
        if (gr.D != 0) {
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), gr.h.get_mpz_t());
            if (rem == 0) {
                gr.members.push_back({um, std::move(q), gr.D});
                continue;
            }
        }
        Rational v(num, gr.den);
        v.canonicalize();
        gr.D = gr.D == 0 ? Integer(v.get_den()) : Integer(lcm(gr.D, v.get_den()));
        mpz_divexact(gr.h.get_mpz_t(), gr.den.get_mpz_t(), gr.D.get_mpz_t());
        out.coeffs[um] = std::move(v);
    }
    for (auto& [key, gr] : groups) {
        if (gr.members.empty()) continue;
        Integer prod = 1, Dg;
        for (auto& mb : gr.members) {
            if (mb.D != gr.D) {
                mpz_divexact(q.get_mpz_t(), gr.D.get_mpz_t(), mb.D.get_mpz_t());
                mb.t *= q;
            }
            prod *= mb.t;
            mpz_mod(prod.get_mpz_t(), prod.get_mpz_t(), gr.D.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), gr.D.get_mpz_t(), prod.get_mpz_t());
        if (g != 1) {
            // Dg: the part of D built from the primes of g
            Integer rest = gr.D, e;
            for (;;) {
                mpz_gcd(e.get_mpz_t(), rest.get_mpz_t(), g.get_mpz_t());
                if (e == 1) break;
                mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), e.get_mpz_t());
            }
            mpz_divexact(Dg.get_mpz_t(), gr.D.get_mpz_t(), rest.get_mpz_t());
        }
        for (auto& mb : gr.members) {
            Rational v;
            mpz_swap(mpq_numref(v.get_mpq_t()), mb.t.get_mpz_t());
            mpz_set(mpq_denref(v.get_mpq_t()), gr.D.get_mpz_t());
            if (g != 1) {
                mpz_gcd(rem.get_mpz_t(), mpq_numref(v.get_mpq_t()), Dg.get_mpz_t());
                if (rem != 1) {
                    mpz_divexact(mpq_numref(v.get_mpq_t()), mpq_numref(v.get_mpq_t()), rem.get_mpz_t());
                    mpz_divexact(mpq_denref(v.get_mpq_t()), mpq_denref(v.get_mpq_t()), rem.get_mpz_t());
                }
            }
            out.coeffs[mb.m] = std::move(v);
        }
    }
    for (size_t i = 0; i < K; ++i) {
        long pos = I[i] - s;
        Rational g = I[i] >= N ? Rational(1) : Rational(keptG[static_cast<size_t>(pos)]);
        out.eta_orig[I[i]] = out.eta[i] / g;
    }
    return out;
}

} // namespace

SolveOutput approximate(const IvpProblem& ivp, int d, const SolveOptions& opts) {
    ivp.check();
    if (d < 0) throw InputError("degree must be nonnegative");
    SolveOutput out;
    out.P = chebyshev_recurrence(ivp.op);
    out.singular = singularities(out.P);
    const RecOp& P = out.P;
    const long s = P.s;
    if (d <= s) throw InputError("degree must exceed the recurrence half-order s = " + std::to_string(s));
    const long maxS = out.singular.empty() ? -1 : out.singular.back();
    long N = opts.N ? *opts.N : auto_start_index(P, d);
    if (N < d) throw InputError("start index N must be at least the degree");
    if (N < maxS || (s > 0 && N <= maxS))
        throw InputError("start index N must exceed the largest singular index " + std::to_string(maxS));
    const int max_retries = opts.max_retries >= 0 ? opts.max_retries : default_max_retries();
    for (int attempt = 0;; ++attempt) {
        try {
            Attempt a = unroll_and_solve(ivp, P, out.singular, d, N, opts.keep_sequence);
            std::vector<Rational> c(a.coeffs.begin(), a.coeffs.begin() + std::min<long>(d, static_cast<long>(a.coeffs.size()) - 1) + 1);
            out.poly = from_symmetric(c);
            out.N_used = N;
            out.retries = attempt;
            out.eta = std::move(a.eta_orig);
            if (opts.keep_sequence) out.sequence = std::move(a.coeffs);
            return out;
        } catch (const SingularSystemError& e) {
            if (attempt >= max_retries)
                throw SingularSystemError(std::string(e.what()) + " (N = " + std::to_string(N) + ", after " +
                                          std::to_string(attempt) + " retries)");
            N += std::max<long>(s, 1);
        }
    }
}

} // namespace dfc
