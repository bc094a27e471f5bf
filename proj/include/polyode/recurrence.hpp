#pragma once

#include <vector>

#include "polyode/equation.hpp"
#include "polyode/series_solver.hpp"

namespace polyode {

/// Coefficients of y_{n+2} = (A_n x + B_n) y_{n+1} + C_n y_n.
struct RecurrenceCoeffs {
    Rational A, B, C;
};

/// The general three-term coefficients. Requires (n a20 + a10) != 0 and
/// (2n a20 + a10) != 0; throws DegenerateDenominator otherwise.
inline RecurrenceCoeffs general_coeffs(const EquationParams& p, int n) {
    const Rational nn(static_cast<long long>(n));
    const Rational d1 = nn * p.a20 + p.a10;
    const Rational d2 = Rational(2) * nn * p.a20 + p.a10;
    if (d1.is_zero() || d2.is_zero()) throw DegenerateDenominator(n);

    const Rational t1 = (Rational(2) * nn + Rational(1)) * p.a20 + p.a10; // (2n+1)a20 + a10
    const Rational t2 = Rational(2) * (nn + Rational(1)) * p.a20 + p.a10; // 2(n+1)a20 + a10

    RecurrenceCoeffs rc;
    rc.A = t1 * t2 / d1;
    rc.B = t1 *
           (Rational(2) * nn * (nn + Rational(1)) * p.a20 * p.a21 +
            Rational(2) * (nn + Rational(1)) * p.a10 * p.a21 - Rational(2) * p.a11 * p.a20 +
            p.a10 * p.a11) /
           (d1 * d2);
    rc.C = (nn + Rational(1)) * t2 *
           ((Rational(4) * p.a22 * p.a20 * p.a20 - p.a20 * p.a21 * p.a21) * nn * nn +
            (Rational(4) * p.a20 * p.a10 * p.a22 - p.a10 * p.a21 * p.a21) * nn +
            p.a10 * p.a10 * p.a22 - p.a11 * p.a10 * p.a21 + p.a20 * p.a11 * p.a11) /
           (d1 * d2);
    return rc;
}

/// y_0 .. y_nmax by the general recurrence from seeds y0 = 1, y1 = a10 x + a11.
inline std::vector<Polynomial> generate(const EquationParams& p, int n_max) {
    if (!p.valid()) throw InvalidEquation("a20^2 + a10^2 = 0");
    std::vector<Polynomial> ys;
    ys.reserve(static_cast<size_t>(n_max) + 1);
    ys.push_back(Polynomial::constant(Rational(1)));
    if (n_max >= 1) ys.push_back(p.p1());
    for (int n = 0; n + 2 <= n_max; ++n) {
        RecurrenceCoeffs rc = general_coeffs(p, n);
        Polynomial lin{rc.B, rc.A};
        ys.push_back(lin * ys[static_cast<size_t>(n + 1)] + rc.C * ys[static_cast<size_t>(n)]);
    }
    return ys;
}

/// The specialized per-case recurrences, transcribed as printed; an
/// independent cross-check path against generate().
inline std::vector<Polynomial> case_recurrence(const EquationParams& p, CaseTag tag, int n_max) {
    if (classify(p) != tag) throw Error("case_recurrence: tag does not match classify(params)");
    std::vector<Polynomial> ys;
    ys.reserve(static_cast<size_t>(n_max) + 1);
    ys.push_back(Polynomial::constant(Rational(1)));
    if (n_max >= 1) ys.push_back(p.p1());

    auto step = [&](int n, const Rational& A, const Rational& B, const Rational& C) {
        Polynomial lin{B, A};
        ys.push_back(lin * ys[static_cast<size_t>(n + 1)] + C * ys[static_cast<size_t>(n)]);
    };

    for (int n = 0; n + 2 <= n_max; ++n) {
        const Rational nn(static_cast<long long>(n));
        const Rational one(1), two(2);
        switch (tag) {
            case CaseTag::I: {
                if (p.a21 * p.a11 - p.a22 * p.a10 != Rational(0)) {
                    // y_{n+2} = (a10 x + 2(n+1)a21 + a11) y_{n+1}
                    //           - (n+1)(a21^2 n + a11 a21 - a10 a22) y_n
                    step(n, p.a10, two * (nn + one) * p.a21 + p.a11,
                         -(nn + one) * (p.a21 * p.a21 * nn + p.a11 * p.a21 - p.a10 * p.a22));
                } else {
                    // degenerate branch: a11 = a22 a10 / a21
                    step(n, p.a10, two * (nn + one) * p.a21 + p.a22 * p.a10 / p.a21,
                         -nn * (nn + one) * p.a21 * p.a21);
                }
                break;
            }
            case CaseTag::II: {
                const Rational d1 = nn * p.a20 + p.a10;
                const Rational d2 = two * nn * p.a20 + p.a10;
                if (d1.is_zero() || d2.is_zero()) throw DegenerateDenominator(n);
                const Rational t1 = (two * nn + one) * p.a20 + p.a10;
                const Rational t2 = two * (nn + one) * p.a20 + p.a10;
                const Rational A = t1 * t2 / d1;
                if (p.a10 * p.a21 - p.a20 * p.a11 != Rational(0)) {
                    const Rational B =
                        t1 *
                        (two * p.a20 * p.a21 * nn * nn + two * p.a21 * (p.a20 + p.a10) * nn +
                         two * p.a10 * p.a21 - two * p.a11 * p.a20 + p.a10 * p.a11) /
                        (d1 * d2);
                    const Rational C =
                        -(nn + one) * t2 *
                        (p.a20 * p.a21 * p.a21 * nn * nn + p.a10 * p.a21 * p.a21 * nn +
                         p.a21 * p.a11 * p.a10 - p.a20 * p.a11 * p.a11) /
                        (d1 * d2);
                    step(n, A, B, C);
                } else {
                    const Rational B = p.a21 * t1 *
                                       (two * p.a20 * p.a20 * nn * nn +
                                        two * p.a20 * (p.a20 + p.a10) * nn + p.a10 * p.a10) /
                                       (p.a20 * d1 * d2);
                    const Rational C = -p.a21 * p.a21 * nn * (nn + one) * t2 / d2;
                    step(n, A, B, C);
                }
                break;
            }
            case CaseTag::III:
            case CaseTag::VI: {
                const Rational d1 = nn * p.a20 + p.a10;
                const Rational d2 = two * nn * p.a20 + p.a10;
                if (d1.is_zero() || d2.is_zero()) throw DegenerateDenominator(n);
                const Rational t1 = (two * nn + one) * p.a20 + p.a10;
                const Rational t2 = two * (nn + one) * p.a20 + p.a10;
                const Rational A = t1 * t2 / d1;
                const Rational B = p.a11 * t1 * (p.a10 - two * p.a20) / (d1 * d2);
                Rational Cnum;
                if (tag == CaseTag::III) {
                    Cnum = Rational(4) * p.a22 * p.a20 * p.a20 * nn * nn +
                           Rational(4) * p.a20 * p.a10 * p.a22 * nn + p.a10 * p.a10 * p.a22 +
                           p.a20 * p.a11 * p.a11;
                } else {
                    Cnum = p.a20 * p.a11 * p.a11;
                }
                step(n, A, B, (nn + one) * t2 * Cnum / (d1 * d2));
                break;
            }
            case CaseTag::IV:
                // y_{n+2} = (a10 x + a11) y_{n+1} + (n+1) a10 a22 y_n
                step(n, p.a10, p.a11, (nn + one) * p.a10 * p.a22);
                break;
            case CaseTag::V:
                // y_{n+2} = (a10 x + 2(n+1)a21 + a11) y_{n+1}
                //           - a21 (n+1)(a21 n + a11) y_n
                step(n, p.a10, two * (nn + one) * p.a21 + p.a11,
                     -p.a21 * (nn + one) * (p.a21 * nn + p.a11));
                break;
            case CaseTag::General: {
                RecurrenceCoeffs rc = general_coeffs(p, n);
                step(n, rc.A, rc.B, rc.C);
                break;
            }
        }
    }
    return ys;
}

} // namespace polyode
