#pragma once

#include "jred/errors.hpp"

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace jred {

/// Exact rational in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class q);

    static Rational parse(std::string_view text);

    const mpq_class& value() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }

    /// "p/q", denominator always written.
    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

/// An element a + b*sqrt(3) of the quadratic field Q(sqrt 3).
///
/// The representation is unique because sqrt(3) is irrational, so equality is
/// componentwise. Text form is "p/q" when b = 0 and "p/q+r/s*sqrt3" (or
/// "p/q-r/s*sqrt3") otherwise.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : rat_(value) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational rat) : rat_(std::move(rat)) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational rat, Rational irr) : rat_(std::move(rat)), irr_(std::move(irr)) {}

    static Scalar sqrt3() { return {Rational(0), Rational(1)}; }
    static Scalar parse(std::string_view text);

    const Rational& rat() const { return rat_; }
    const Rational& irr() const { return irr_; }

    bool is_zero() const { return rat_.is_zero() && irr_.is_zero(); }
    bool is_rational() const { return irr_.is_zero(); }

    /// a^2 - 3 b^2; nonzero for every nonzero element.
    Rational norm() const;
    Scalar conjugate() const { return {rat_, -irr_}; }
    Scalar inverse() const;

    /// Sign of the real number a + b*sqrt(3), decided exactly.
    int sign() const;
    double to_double() const;

    std::string to_string() const;

    Scalar operator-() const { return {-rat_, -irr_}; }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) = default;

private:
    Rational rat_;
    Rational irr_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace jred
