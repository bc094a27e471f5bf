#pragma once

#include <complex>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "polyode/rational.hpp"

namespace polyode {

/// Dense univariate polynomial with exact rational coefficients.
/// coeffs[k] multiplies x^k; the top coefficient is nonzero unless the
/// polynomial is zero (empty coefficient list, degree -1).
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> ascending) : c_(ascending) { trim(); }
    explicit Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

    static Polynomial constant(const Rational& v) { return Polynomial{std::vector<Rational>{v}}; }
    static Polynomial monomial(const Rational& coeff, int k) {
        std::vector<Rational> c(static_cast<size_t>(k) + 1);
        c.back() = coeff;
        return Polynomial{std::move(c)};
    }
    /// x itself.
    static Polynomial x() { return monomial(Rational(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const std::vector<Rational>& coeffs() const { return c_; }

    /// Coefficient of x^k (zero beyond the stored range).
    Rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<size_t>(k)];
    }

    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
        return Polynomial{std::move(r)};
    }
    Polynomial operator-(const Polynomial& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
        return Polynomial{std::move(r)};
    }
    Polynomial operator-() const {
        std::vector<Rational> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return Polynomial{std::move(r)};
    }
    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<Rational> r(c_.size() + o.c_.size() - 1);
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] += c_[i] * o.c_[j];
        return Polynomial{std::move(r)};
    }
    Polynomial operator*(const Rational& s) const {
        if (s.is_zero()) return {};
        std::vector<Rational> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
        return Polynomial{std::move(r)};
    }
    friend Polynomial operator*(const Rational& s, const Polynomial& p) { return p * s; }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

    /// Exact formal derivative.
    Polynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> r(c_.size() - 1);
        for (size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * Rational(static_cast<long long>(k));
        return Polynomial{std::move(r)};
    }

    /// Horner evaluation; exact for Rational arguments.
    template <class S>
    S eval(const S& x) const {
        if (c_.empty()) return S(0);
        S acc = scalar_cast<S>(c_.back());
        for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + scalar_cast<S>(c_[i]);
        return acc;
    }

    double eval_d(double x) const { return eval<double>(x); }

    /// Exact division with remainder over the rationals.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw Error("polynomial division by zero");
        Polynomial q, r = *this;
        const Rational lead = d.leading();
        std::vector<Rational> qc;
        if (r.degree() >= d.degree()) qc.resize(static_cast<size_t>(r.degree() - d.degree()) + 1);
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int k = r.degree() - d.degree();
            Rational f = r.leading() / lead;
            qc[static_cast<size_t>(k)] = f;
            r = r - monomial(f, k) * d;
        }
        return {Polynomial{std::move(qc)}, std::move(r)};
    }

    Polynomial monic() const {
        if (is_zero()) return {};
        return *this * leading().reciprocal();
    }

    /// Human-readable form in descending powers.
    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            Rational a = coeff(k);
            if (a.is_zero()) continue;
            if (first) {
                if (a.is_negative()) os << "-";
            } else {
                os << (a.is_negative() ? " - " : " + ");
            }
            Rational m = abs(a);
            bool unit = (m == Rational(1));
            if (k == 0 || !unit) os << m.pretty();
            if (k > 0) {
                if (!unit) os << "*";
                os << var;
                if (k > 1) os << "^" << k;
            }
            first = false;
        }
        return os.str();
    }

private:
    std::vector<Rational> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    template <class S>
    static S scalar_cast(const Rational& r) {
        if constexpr (std::is_same_v<S, Rational>) {
            return r;
        } else {
            return S(r.to_double());
        }
    }
};

/// Monic gcd by Euclid over the rationals; remainders are normalized monic
/// at each step to keep coefficient growth in check.
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
    if (a.is_zero()) return b.is_zero() ? Polynomial{} : b.monic();
    if (b.is_zero()) return a.monic();
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = r.is_zero() ? Polynomial{} : r.monic();
    }
    return a;
}

} // namespace polyode
