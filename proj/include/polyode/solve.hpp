#pragma once

#include <vector>

#include "polyode/recurrence.hpp"

namespace polyode {

enum class Method { recurrence, closed_form, series_oracle };

inline const char* to_string(Method m) {
    switch (m) {
        case Method::recurrence: return "recurrence";
        case Method::closed_form: return "closed_form";
        case Method::series_oracle: return "series_oracle";
    }
    return "?";
}

struct SolveReport {
    int n = 0;
    Rational tau;
    Polynomial polynomial;
    Method method = Method::recurrence;
    bool residual_ok = false;
    bool degenerate_degree = false;
};

/// True when the recurrence path is safe for every degree up to n: all
/// (k a20 + a10) and (2k a20 + a10) nonzero for 0 <= k <= n. This is
/// stricter than Eq.-level necessity; it also rules out eigenvalue
/// coincidences touching the requested index.
inline bool recurrence_safe_up_to(const EquationParams& p, int n) {
    for (int k = 0; k <= n; ++k) {
        Rational kk(static_cast<long long>(k));
        if ((kk * p.a20 + p.a10).is_zero()) return false;
        if ((Rational(2) * kk * p.a20 + p.a10).is_zero()) return false;
    }
    return true;
}

/// y_0..y_nmax with automatic oracle fallback on degenerate denominators.
/// Throws DegenerateSpectrum if a fallback index has a kernel of dimension
/// > 1 (callers must use series_solve_full and pick explicitly).
inline std::vector<SolveReport> solve_family(const EquationParams& p, int n_max) {
    if (!p.valid()) throw InvalidEquation("a20^2 + a10^2 = 0");
    std::vector<SolveReport> out(static_cast<size_t>(n_max) + 1);
    std::vector<Polynomial> ys(static_cast<size_t>(n_max) + 1);

    for (int n = 0; n <= n_max; ++n) {
        SolveReport& r = out[static_cast<size_t>(n)];
        r.n = n;
        r.tau = eigenvalue(p, n);
        r.degenerate_degree = leading_product(p, n).is_zero();
        if (n == 0) {
            ys[0] = Polynomial::constant(Rational(1));
            r.method = Method::recurrence;
        } else if (n == 1) {
            ys[1] = p.p1();
            r.method = Method::recurrence;
        } else if (recurrence_safe_up_to(p, n) &&
                   out[static_cast<size_t>(n - 1)].method == Method::recurrence &&
                   out[static_cast<size_t>(n - 2)].method == Method::recurrence) {
            RecurrenceCoeffs rc = general_coeffs(p, n - 2);
            Polynomial lin{rc.B, rc.A};
            ys[static_cast<size_t>(n)] =
                lin * ys[static_cast<size_t>(n - 1)] + rc.C * ys[static_cast<size_t>(n - 2)];
            r.method = Method::recurrence;
        } else {
            ys[static_cast<size_t>(n)] = series_solve(p, n);
            r.method = Method::series_oracle;
        }
        r.polynomial = ys[static_cast<size_t>(n)];
        r.residual_ok = residual(p, r.tau, r.polynomial).is_zero();
    }
    return out;
}

inline SolveReport solve_one(const EquationParams& p, int n) {
    return solve_family(p, n).back();
}

} // namespace polyode
