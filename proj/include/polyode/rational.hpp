#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include "polyode/errors.hpp"

namespace polyode {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational number in canonical form: denominator > 0,
/// gcd(|num|, den) = 1, zero is 0/1. Equality is structural.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int n) : num_(n), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    /// Accepts "num/den" or the integer shorthand "num".
    static Rational parse(std::string_view s) {
        size_t a = 0, b = s.size();
        while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
        s = s.substr(a, b - a);
        if (s.empty()) throw ParseError("empty rational literal");
        auto slash = s.find('/');
        try {
            if (slash == std::string_view::npos)
                return Rational(BigInt(std::string(s)));
            BigInt n{std::string(s.substr(0, slash))};
            BigInt d{std::string(s.substr(slash + 1))};
            if (d == 0) throw ParseError("zero denominator in rational literal");
            return Rational(std::move(n), std::move(d));
        } catch (const std::runtime_error& e) {
            throw ParseError("bad rational literal '" + std::string(s) + "': " + e.what());
        }
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }
    bool is_positive() const { return num_ > 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    /// Canonical serialization, always "num/den".
    std::string str() const {
        return num_.str() + "/" + den_.str();
    }

    /// Compact human-readable form: "5", "-3/2".
    std::string pretty() const {
        return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
    }

    double to_double() const {
        return boost::multiprecision::cpp_rational(num_, den_).convert_to<double>();
    }

    Rational operator-() const { return raw(-num_, den_); }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw Error("rational division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Rational& o) const {
        BigInt l = num_ * o.den_, r = o.num_ * den_;
        if (l < r) return std::strong_ordering::less;
        if (l > r) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational reciprocal() const {
        if (num_ == 0) throw Error("reciprocal of zero");
        return Rational(den_, num_);
    }

    /// Integer power; negative exponents allowed for nonzero values.
    Rational pow(long e) const {
        if (e < 0) return reciprocal().pow(-e);
        Rational r(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

private:
    BigInt num_, den_;

    static Rational raw(BigInt n, BigInt d) {
        Rational r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }

    void normalize() {
        if (den_ == 0) throw Error("rational with zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        num_ /= g;
        den_ /= g;
    }
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.pretty();
}

/// True iff q is the square of a rational; root receives the nonnegative root.
inline bool rational_sqrt(const Rational& q, Rational& root) {
    if (q.is_negative()) return false;
    if (q.is_zero()) {
        root = Rational(0);
        return true;
    }
    BigInt sn = boost::multiprecision::sqrt(q.num());
    BigInt sd = boost::multiprecision::sqrt(q.den());
    if (sn * sn != q.num() || sd * sd != q.den()) return false;
    root = Rational(sn, sd);
    return true;
}

/// Exact test for A == B * sqrt(d) with A, B, d rational (principal root,
/// possibly irrational or imaginary).
inline bool equals_times_sqrt(const Rational& A, const Rational& B, const Rational& d) {
    if (d.is_negative()) return A.is_zero() && B.is_zero();
    if (d.is_zero() || B.is_zero()) return A.is_zero();
    if (A.sign() != B.sign()) return false;
    return A * A == B * B * d;
}

} // namespace polyode
