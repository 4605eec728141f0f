#pragma once

#include "dfc/poly.hpp"
#include "dfc/rational.hpp"

namespace dfc {

/// Real enclosure [mid - rad, mid + rad]. Operations are exact on the
/// midpoints; call rounded() to trade midpoint size for radius.
struct Ball {
    Rational mid;
    Rational rad;

    Ball() = default;
    Ball(Rational m, Rational r = 0) : mid(std::move(m)), rad(std::move(r)) {} // NOLINT

    Rational abs_upper() const { return abs(mid) + rad; }
    /// max(0, |mid| - rad)
    Rational abs_lower() const;
    bool contains(const Rational& x) const { return abs(x - mid) <= rad; }

    /// Midpoint truncated to `prec` significant bits, radius grown accordingly
    /// and rounded up to a short dyadic.
    Ball rounded(long prec) const;

    friend Ball operator+(const Ball& a, const Ball& b) { return {a.mid + b.mid, a.rad + b.rad}; }
    friend Ball operator-(const Ball& a, const Ball& b) { return {a.mid - b.mid, a.rad + b.rad}; }
    friend Ball operator-(const Ball& a) { return {-a.mid, a.rad}; }
    friend Ball operator*(const Ball& a, const Ball& b);
    friend Ball operator*(const Ball& a, const Rational& c) { return {a.mid * c, a.rad * abs(c)}; }
    /// 1/a; throws RefinementError when a contains zero.
    friend Ball inverse(const Ball& a);
};

/// Rectangular complex enclosure re + i im.
struct ComplexBall {
    Ball re, im;

    ComplexBall() = default;
    ComplexBall(Ball r, Ball i = Ball()) : re(std::move(r)), im(std::move(i)) {} // NOLINT

    /// Disk of radius r around (x, y), enclosed by the square of half-width r.
    static ComplexBall disk(const Rational& x, const Rational& y, const Rational& r) {
        return {Ball(x, r), Ball(y, r)};
    }

    /// Upper bound on |z| over the enclosure.
    Rational abs_upper() const;
    /// Lower bound on |z| over the enclosure (0 if it may contain 0).
    Rational abs_lower() const;
    ComplexBall rounded(long prec) const { return {re.rounded(prec), im.rounded(prec)}; }

    friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) { return {a.re + b.re, a.im + b.im}; }
    friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) { return {a.re - b.re, a.im - b.im}; }
    friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
    friend ComplexBall operator*(const ComplexBall& a, const Rational& c) { return {a.re * c, a.im * c}; }
    friend ComplexBall inverse(const ComplexBall& a);
};

/// Horner evaluation of a rational polynomial, rounding to `prec` bits at each step.
ComplexBall eval(const Poly& p, const ComplexBall& z, long prec);

/// z^n by repeated squaring with rounding.
ComplexBall pow(const ComplexBall& z, unsigned long n, long prec);

} // namespace dfc
