#include "dfc/ball.hpp"

#include "dfc/errors.hpp"

namespace dfc {

Rational Ball::abs_lower() const {
    Rational v = abs(mid) - rad;
    return v > 0 ? v : Rational(0);
}

Ball Ball::rounded(long prec) const {
    auto r = round_dyadic(mid, prec);
    return {r.value, upper_dyadic(rad + r.error, 32)};
}

Ball operator*(const Ball& a, const Ball& b) {
    return {a.mid * b.mid, abs(a.mid) * b.rad + abs(b.mid) * a.rad + a.rad * b.rad};
}

Ball inverse(const Ball& a) {
    Rational m = abs(a.mid);
    if (m <= a.rad) throw RefinementError("inverse of an enclosure containing zero");
    // |1/x - 1/m| <= r / (|m| (|m| - r)) for |x - m| <= r
    return {1 / a.mid, a.rad / (m * (m - a.rad))};
}

Rational ComplexBall::abs_upper() const {
    Rational x = re.abs_upper(), y = im.abs_upper();
    return sqrt_upper(x * x + y * y);
}

Rational ComplexBall::abs_lower() const {
    Rational x = re.abs_lower(), y = im.abs_lower();
    return sqrt_lower(x * x + y * y);
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexBall inverse(const ComplexBall& a) {
    // 1/(x + iy) = (x - iy)/(x^2 + y^2)
    Ball n2 = a.re * a.re + a.im * a.im;
    // x^2 + y^2 is nonnegative: tighten the lower end with the box bound
    Rational lo = a.re.abs_lower() * a.re.abs_lower() + a.im.abs_lower() * a.im.abs_lower();
    if (lo <= 0) throw RefinementError("inverse of a complex enclosure containing zero");
    Rational hi = n2.mid + n2.rad;
    Ball n2t((lo + hi) / 2, (hi - lo) / 2);
    Ball inv = inverse(n2t);
    return {a.re * inv, -(a.im * inv)};
}

ComplexBall eval(const Poly& p, const ComplexBall& z, long prec) {
    ComplexBall acc;
    for (int i = p.degree(); i >= 0; --i) {
        acc = (acc * z).rounded(prec);
        acc.re = acc.re + Ball(p.coeff(i));
    }
    return acc.rounded(prec);
}

ComplexBall pow(const ComplexBall& z, unsigned long n, long prec) {
    ComplexBall result(Ball(Rational(1)));
    ComplexBall base = z;
    while (n > 0) {
        if (n & 1UL) result = (result * base).rounded(prec);
        n >>= 1;
        if (n > 0) base = (base * base).rounded(prec);
    }
    return result;
}

} // namespace dfc
