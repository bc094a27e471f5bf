#pragma once

#include <string>

#include "polyode/polynomial.hpp"

namespace polyode {

/// The coefficient 5-tuple of (a20 x^2 + a21 x + a22) y'' + (a10 x + a11) y' = tau y.
struct EquationParams {
    Rational a20, a21, a22, a10, a11;

    /// Polynomial solutions require a20^2 + a10^2 != 0.
    bool valid() const { return !(a20.is_zero() && a10.is_zero()); }

    Polynomial p2() const { return Polynomial{a22, a21, a20}; }
    Polynomial p1() const { return Polynomial{a11, a10}; }

    std::string str() const {
        return "(" + a20.pretty() + ", " + a21.pretty() + ", " + a22.pretty() + ", " +
               a10.pretty() + ", " + a11.pretty() + ")";
    }
};

/// Classification by which of a20, a21, a22 vanish.
enum class CaseTag { General, I, II, III, IV, V, VI };

inline const char* to_string(CaseTag t) {
    switch (t) {
        case CaseTag::General: return "general";
        case CaseTag::I: return "I";
        case CaseTag::II: return "II";
        case CaseTag::III: return "III";
        case CaseTag::IV: return "IV";
        case CaseTag::V: return "V";
        case CaseTag::VI: return "VI";
    }
    return "?";
}

inline CaseTag classify(const EquationParams& p) {
    const bool z20 = p.a20.is_zero(), z21 = p.a21.is_zero(), z22 = p.a22.is_zero();
    if (z20 && z21 && z22)
        throw InvalidEquation("a20 = a21 = a22 = 0: no second-order equation");
    if (!p.valid())
        throw InvalidEquation("a20^2 + a10^2 = 0: no polynomial solution family");
    if (z20 && z21) return CaseTag::IV;
    if (z20 && z22) return CaseTag::V;
    if (z21 && z22) return CaseTag::VI;
    if (z20) return CaseTag::I;
    if (z22) return CaseTag::II;
    if (z21) return CaseTag::III;
    return CaseTag::General;
}

/// tau = n(n-1) a20 + n a10, the value admitting a degree-n polynomial solution.
inline Rational eigenvalue(const EquationParams& p, int n) {
    Rational nn(static_cast<long long>(n));
    return nn * (nn - Rational(1)) * p.a20 + nn * p.a10;
}

/// p2 y'' + p1 y' - tau y, exactly.
inline Polynomial residual(const EquationParams& p, const Rational& tau, const Polynomial& y) {
    return p.p2() * y.derivative().derivative() + p.p1() * y.derivative() - tau * y;
}

} // namespace polyode
