#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "dedekind/error.hpp"

namespace dedekind {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction over arbitrary-precision integers.
///
/// Always kept in canonical form: denominator > 0 and
/// gcd(|numerator|, denominator) = 1, so structural equality is value
/// equality. Nothing here ever rounds.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    template <std::integral T>
    Rational(T n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}

    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0)
            throw invalid_rational("rational with zero denominator");
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_positive() const { return num_ > 0; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0)
            throw invalid_rational("division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const BigInt lhs = a.num_ * b.den_;
        const BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs)
            return std::strong_ordering::less;
        if (lhs == rhs)
            return std::strong_ordering::equal;
        return std::strong_ordering::greater;
    }

    /// Accepts `p`, `p/q`, optionally signed, no whitespace. Rejects q = 0.
    static Rational parse(std::string_view text);

    std::string str() const {
        if (den_ == 1)
            return num_.str();
        return num_.str() + "/" + den_.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
        return os << q.str();
    }

  private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        const BigInt g = boost::multiprecision::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    BigInt num_;
    BigInt den_;
};

inline Rational Rational::parse(std::string_view text) {
    const auto fail = [&] {
        throw invalid_rational("not a rational: '" + std::string(text) + "'");
    };
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    if (rest.empty())
        fail();
    const auto digits = [&](std::string_view s) {
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    BigInt num, den = 1;
    const auto slash = rest.find('/');
    if (slash == std::string_view::npos) {
        if (!digits(rest))
            fail();
        num = BigInt(std::string(rest));
    } else {
        const auto ntext = rest.substr(0, slash);
        const auto dtext = rest.substr(slash + 1);
        if (!digits(ntext) || !digits(dtext))
            fail();
        num = BigInt(std::string(ntext));
        den = BigInt(std::string(dtext));
        if (den == 0)
            throw invalid_rational("rational with zero denominator: '" +
                                   std::string(text) + "'");
    }
    if (negative)
        num = -num;
    return Rational(std::move(num), std::move(den));
}

inline Rational abs(const Rational& q) { return q.is_negative() ? -q : q; }

inline std::string to_string(const Rational& q) { return q.str(); }

} // namespace dedekind
