#pragma once

#include <utility>

#include "polyode/polynomial.hpp"

namespace polyode {

/// Ratio of two polynomials in canonical form: gcd-reduced with a monic
/// denominator (so equality is structural). The zero function is 0/1.
class RationalFunction {
public:
    RationalFunction() : num_{}, den_{Polynomial::constant(Rational(1))} {}
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw Error("rational function with zero denominator");
        reduce();
    }
    explicit RationalFunction(Polynomial num)
        : num_(std::move(num)), den_(Polynomial::constant(Rational(1))) {}
    explicit RationalFunction(const Rational& c)
        : num_(Polynomial::constant(c)), den_(Polynomial::constant(Rational(1))) {
        if (c.is_zero()) num_ = Polynomial{};
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalFunction operator+(const RationalFunction& o) const {
        return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
    }
    RationalFunction operator-(const RationalFunction& o) const {
        return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
    }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RationalFunction operator*(const RationalFunction& o) const {
        return {num_ * o.num_, den_ * o.den_};
    }
    RationalFunction operator/(const RationalFunction& o) const {
        if (o.is_zero()) throw Error("division by the zero rational function");
        return {num_ * o.den_, den_ * o.num_};
    }
    RationalFunction operator*(const Rational& s) const { return {num_ * s, den_}; }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// Quotient-rule derivative, reduced.
    RationalFunction derivative() const {
        return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
    }

    template <class S>
    S eval(const S& x) const {
        return num_.eval(x) / den_.eval(x);
    }

    std::string str(const std::string& var = "x") const {
        if (is_polynomial()) return num_.str(var);
        return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
    }

private:
    Polynomial num_, den_;

    void reduce() {
        if (num_.is_zero()) {
            den_ = Polynomial::constant(Rational(1));
            return;
        }
        Polynomial g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divmod(g).first;
            den_ = den_.divmod(g).first;
        }
        Rational lead = den_.leading();
        if (!(lead == Rational(1))) {
            Rational inv = lead.reciprocal();
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }
};

} // namespace polyode
