#include "jred/scalar.hpp"

#include <cctype>
#include <utility>

namespace jred {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Parses "[+-]digits[/digits]".
Rational parse_rational(std::string_view text, std::string_view whole) {
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed scalar '" + std::string(whole) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in scalar '" + std::string(whole) + "'");
    mpq_class q(negative ? mpz_class(-n) : n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) { return parse_rational(text, text); }

std::string Rational::to_string() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    q_ /= o.q_;
    return *this;
}

Scalar Scalar::parse(std::string_view text) {
    constexpr std::string_view kSuffix = "*sqrt3";
    if (text.empty()) throw ParseError("empty scalar");
    for (char c : text)
        if (std::isspace(static_cast<unsigned char>(c)))
            throw ParseError("whitespace in scalar '" + std::string(text) + "'");

    if (text.size() < kSuffix.size() || text.substr(text.size() - kSuffix.size()) != kSuffix)
        return Scalar(parse_rational(text, text));

    std::string_view body = text.substr(0, text.size() - kSuffix.size());
    // The irrational part starts at the last sign that is not the leading one.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if (body[i] == '+' || body[i] == '-') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) return {Rational(0), parse_rational(body, text)};
    if (split > 1 && body[split] == '-' && body[split - 1] == '+') --split;
    std::string_view rat = body.substr(0, split);
    std::string_view irr = body.substr(split);
    if (irr.size() > 1 && irr[0] == '+' && irr[1] == '-') irr.remove_prefix(1);
    if (rat.empty() || rat.back() == '+' || rat.back() == '-')
        throw ParseError("malformed scalar '" + std::string(text) + "'");
    return {parse_rational(rat, text), parse_rational(irr, text)};
}

Rational Scalar::norm() const { return rat_ * rat_ - Rational(3) * irr_ * irr_; }

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Rational n = norm();
    return {rat_ / n, -irr_ / n};
}

int Scalar::sign() const {
    int a = rat_.sign();
    int b = irr_.sign();
    if (b == 0) return a;
    if (a == 0) return b;
    if (a == b) return a;
    // Opposite signs: compare a^2 with 3 b^2.
    int c = cmp(rat_.value() * rat_.value(), 3 * irr_.value() * irr_.value());
    return c > 0 ? a : b;
}

double Scalar::to_double() const { return rat_.to_double() + irr_.to_double() * 1.7320508075688772; }

std::string Scalar::to_string() const {
    if (irr_.is_zero()) return rat_.to_string();
    std::string out = rat_.to_string();
    if (irr_.sign() > 0) out += '+';
    out += irr_.to_string();
    out += "*sqrt3";
    return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    rat_ += o.rat_;
    irr_ += o.irr_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    rat_ -= o.rat_;
    irr_ -= o.irr_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (irr_.is_zero() && o.irr_.is_zero()) {
        rat_ *= o.rat_;
        return *this;
    }
    Rational a = rat_ * o.rat_ + Rational(3) * irr_ * o.irr_;
    Rational b = rat_ * o.irr_ + irr_ * o.rat_;
    rat_ = std::move(a);
    irr_ = std::move(b);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw DivisionByZero();
    if (o.irr_.is_zero()) {
        rat_ /= o.rat_;
        irr_ /= o.rat_;
        return *this;
    }
    return *this *= o.inverse();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }
std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace jred
