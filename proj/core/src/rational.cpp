#include "dfc/rational.hpp"

#include "dfc/errors.hpp"

#include <cctype>
#include <cmath>
#include <string>

namespace dfc {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw InputError("malformed rational '" + std::string(whole) + "'");
    Integer z(std::string(s), 10);
    return neg ? Integer(-z) : z;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// q * 2^k for signed k
Rational mul_2exp(const Rational& q, long k) {
    Rational r;
    if (k >= 0)
        mpq_mul_2exp(r.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(k));
    else
        mpq_div_2exp(r.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(-k));
    return r;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw InputError("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        Integer p = parse_integer(trim(s.substr(0, slash)), text);
        Integer q = parse_integer(trim(s.substr(slash + 1)), text);
        if (q == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
        Rational r(p, q);
        r.canonicalize();
        return r;
    }
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string_view::npos) {
        std::string_view es = s.substr(epos + 1);
        Integer e = parse_integer(es, text);
        if (!e.fits_slong_p() || abs(Rational(e)) > 100000000)
            throw InputError("exponent out of range in '" + std::string(text) + "'");
        exp10 = e.get_si();
        s = s.substr(0, epos);
    }
    std::string digits;
    auto dot = s.find('.');
    if (dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
            (!fp.empty() && !all_digits(fp)))
            throw InputError("malformed rational '" + std::string(text) + "'");
        digits = std::string(ip) + std::string(fp);
        exp10 -= static_cast<long>(fp.size());
    } else {
        if (!all_digits(s)) throw InputError("malformed rational '" + std::string(text) + "'");
        digits = std::string(s);
    }
    Rational r(Integer(digits, 10));
    r *= pow10(exp10);
    return neg ? Rational(-r) : r;
}

std::string to_string(const Rational& q) {
    return q.get_str(10);
}

std::string to_decimal(const Rational& q, int digits) {
    if (digits < 1) digits = 1;
    if (q == 0) return "0";
    Rational a = abs(q);
    // decimal exponent e with 10^e <= a < 10^(e+1)
    long e = static_cast<long>(std::floor(log_abs(a) / std::log(10.0)));
    while (pow10(e) > a) --e;
    while (pow10(e + 1) <= a) ++e;
    // round a * 10^(digits-1-e) to nearest integer
    Rational scaled = a * pow10(digits - 1 - e);
    Integer m = floor(scaled + Rational(1, 2));
    Integer limit;
    mpz_ui_pow_ui(limit.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    if (m >= limit) {
        m /= 10;
        ++e;
    }
    std::string ds = m.get_str(10);
    std::string out = q < 0 ? "-" : "";
    auto strip = [](std::string s) {
        if (s.find('.') == std::string::npos) return s;
        while (!s.empty() && s.back() == '0') s.pop_back();
        if (!s.empty() && s.back() == '.') s.pop_back();
        return s;
    };
    if (e < -5 || e >= digits) {
        std::string mant = ds.substr(0, 1);
        if (ds.size() > 1) mant += "." + ds.substr(1);
        mant = strip(mant);
        std::string es = std::to_string(e < 0 ? -e : e);
        if (es.size() < 2) es = "0" + es;
        out += mant + (e < 0 ? "e-" : "e+") + es;
    } else if (e >= 0) {
        std::string ip = ds.substr(0, static_cast<size_t>(e) + 1);
        std::string fp = ds.substr(static_cast<size_t>(e) + 1);
        out += strip(fp.empty() ? ip : ip + "." + fp);
    } else {
        out += strip("0." + std::string(static_cast<size_t>(-e - 1), '0') + ds);
    }
    return out;
}

Rational abs(const Rational& q) {
    Rational r;
    mpq_abs(r.get_mpq_t(), q.get_mpq_t());
    return r;
}

Integer floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rational pow(const Rational& base, unsigned long exponent) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    r.canonicalize();
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rational pow10(long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rational(p);
    return Rational(Integer(1), p);
}

Rational from_double(double x) {
    if (!std::isfinite(x)) throw InputError("non-finite value");
    Rational r;
    mpq_set_d(r.get_mpq_t(), x);
    return r;
}

double to_double(const Rational& q) {
    return mpq_get_d(q.get_mpq_t());
}

double log_abs(const Rational& q) {
    long en = 0, ed = 0;
    double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
    double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
    return std::log(std::fabs(mn / md)) + static_cast<double>(en - ed) * std::log(2.0);
}

long floor_log2(const Rational& q) {
    Integer a = q.get_num() < 0 ? Integer(-q.get_num()) : q.get_num();
    const Integer& b = q.get_den();
    long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2));
    // 2^e <= a/b < 2^(e+1): adjust the size-based estimate by at most one
    Rational aq(a, b);
    if (mul_2exp(Rational(1), e) > aq) --e;
    else if (mul_2exp(Rational(1), e + 1) <= aq) ++e;
    return e;
}

Rational upper_dyadic(const Rational& q, long bits) {
    if (q <= 0) {
        if (q == 0) return 0;
        return -lower_dyadic(-q, bits);
    }
    long k = bits - 1 - floor_log2(q);
    Integer m = ceil(mul_2exp(q, k));
    return mul_2exp(Rational(m), -k);
}

Rational lower_dyadic(const Rational& q, long bits) {
    if (q <= 0) {
        if (q == 0) return 0;
        return -upper_dyadic(-q, bits);
    }
    long k = bits - 1 - floor_log2(q);
    Integer m = floor(mul_2exp(q, k));
    return mul_2exp(Rational(m), -k);
}

DyadicRounding round_dyadic(const Rational& q, long prec) {
    if (q == 0) return {Rational(0), Rational(0)};
    long k = prec - 1 - floor_log2(q);
    Rational scaled = mul_2exp(q, k);
    Integer m;
    mpz_tdiv_q(m.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    Rational value = mul_2exp(Rational(m), -k);
    Rational err = value == q ? Rational(0) : mul_2exp(Rational(1), -k);
    return {value, err};
}

Rational sqrt_upper(const Rational& q, long bits) {
    if (q < 0) throw DomainError("square root of a negative number");
    if (q == 0) return 0;
    long e = floor_log2(q);
    long k = bits - e / 2;
    // s >= sqrt(q * 4^k)
    Integer t = ceil(mul_2exp(q, 2 * k));
    Integer s;
    mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
    if (s * s < t) s += 1;
    return mul_2exp(Rational(s), -k);
}

Rational sqrt_lower(const Rational& q, long bits) {
    if (q < 0) throw DomainError("square root of a negative number");
    if (q == 0) return 0;
    long e = floor_log2(q);
    long k = bits - e / 2;
    Integer t = floor(mul_2exp(q, 2 * k));
    Integer s;
    mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
    return mul_2exp(Rational(s), -k);
}

} // namespace dfc
