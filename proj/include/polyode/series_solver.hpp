#pragma once

#include <vector>

#include "polyode/equation.hpp"

namespace polyode {

/// prod_{k=n-1}^{2n-2} (a10 + k a20): the leading coefficient the printed
/// solution families carry; it vanishes exactly when the degree degenerates.
inline Rational leading_product(const EquationParams& p, int n) {
    Rational prod(1);
    for (int k = n - 1; k <= 2 * n - 2; ++k)
        prod *= p.a10 + Rational(static_cast<long long>(k)) * p.a20;
    return prod;
}

struct SeriesSolveResult {
    /// Kernel basis of the coefficient system, each vector normalized:
    /// leading coefficient = leading_product when the vector has degree n and
    /// the product is nonzero, monic otherwise.
    std::vector<Polynomial> basis;
    bool degenerate_degree = false;   // leading_product vanished
    bool degenerate_spectrum = false; // basis.size() > 1
};

namespace detail {

/// Exact kernel of an integer matrix via fraction-free (Bareiss) elimination
/// with first-nonzero pivoting, then rational back-substitution.
inline std::vector<std::vector<Rational>> integer_kernel(std::vector<std::vector<BigInt>> m,
                                                         int rows, int cols) {
    std::vector<int> pivot_col_of_row(static_cast<size_t>(rows), -1);
    std::vector<int> pivot_cols;
    int r = 0;
    BigInt prev(1);
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (m[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[static_cast<size_t>(r)], m[static_cast<size_t>(pr)]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                BigInt v = m[static_cast<size_t>(r)][static_cast<size_t>(c)] *
                               m[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                           m[static_cast<size_t>(i)][static_cast<size_t>(c)] *
                               m[static_cast<size_t>(r)][static_cast<size_t>(j)];
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] = v / prev; // exact
            }
            m[static_cast<size_t>(i)][static_cast<size_t>(c)] = 0;
        }
        prev = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
        pivot_col_of_row[static_cast<size_t>(r)] = c;
        pivot_cols.push_back(c);
        ++r;
    }
    const int rank = r;

    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : pivot_cols) is_pivot[static_cast<size_t>(c)] = true;

    std::vector<std::vector<Rational>> kernel;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[static_cast<size_t>(fc)]) continue;
        std::vector<Rational> v(static_cast<size_t>(cols));
        v[static_cast<size_t>(fc)] = Rational(1);
        for (int i = rank - 1; i >= 0; --i) {
            int pc = pivot_col_of_row[static_cast<size_t>(i)];
            Rational s(0);
            for (int j = pc + 1; j < cols; ++j)
                s += Rational(m[static_cast<size_t>(i)][static_cast<size_t>(j)]) *
                     v[static_cast<size_t>(j)];
            v[static_cast<size_t>(pc)] =
                -s / Rational(m[static_cast<size_t>(i)][static_cast<size_t>(pc)]);
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

} // namespace detail

/// Brute-force oracle: write the ODE residual as a linear map on the
/// coefficient vector (c_0..c_n) with tau = eigenvalue(p, n) and extract the
/// kernel exactly.
inline SeriesSolveResult series_solve_full(const EquationParams& p, int n) {
    if (!p.valid()) throw InvalidEquation("a20^2 + a10^2 = 0");
    const Rational tau = eigenvalue(p, n);
    const int dim = n + 1;

    // Residual coefficient of x^m:
    //   [a20 m(m-1) + a10 m - tau] c_m
    // + [a21 (m+1)m + a11 (m+1)]  c_{m+1}
    // + [a22 (m+2)(m+1)]          c_{m+2}
    std::vector<std::vector<Rational>> a(static_cast<size_t>(dim),
                                         std::vector<Rational>(static_cast<size_t>(dim)));
    for (int m = 0; m < dim; ++m) {
        Rational mm(static_cast<long long>(m));
        a[static_cast<size_t>(m)][static_cast<size_t>(m)] =
            p.a20 * mm * (mm - Rational(1)) + p.a10 * mm - tau;
        if (m + 1 < dim)
            a[static_cast<size_t>(m)][static_cast<size_t>(m + 1)] =
                (p.a21 * mm + p.a11) * (mm + Rational(1));
        if (m + 2 < dim)
            a[static_cast<size_t>(m)][static_cast<size_t>(m + 2)] =
                p.a22 * (mm + Rational(2)) * (mm + Rational(1));
    }

    // Clear denominators row by row; scaling rows does not change the kernel.
    std::vector<std::vector<BigInt>> mi(static_cast<size_t>(dim),
                                        std::vector<BigInt>(static_cast<size_t>(dim)));
    for (int i = 0; i < dim; ++i) {
        BigInt l(1);
        for (int j = 0; j < dim; ++j) {
            const BigInt& d = a[static_cast<size_t>(i)][static_cast<size_t>(j)].den();
            l = l / boost::multiprecision::gcd(l, d) * d;
        }
        for (int j = 0; j < dim; ++j) {
            const Rational& v = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
            mi[static_cast<size_t>(i)][static_cast<size_t>(j)] = v.num() * (l / v.den());
        }
    }

    auto kernel = detail::integer_kernel(std::move(mi), dim, dim);
    if (kernel.empty())
        throw InternalError("series system has no kernel at tau = eigenvalue(n): inconsistency");

    SeriesSolveResult res;
    const Rational prod = leading_product(p, n);
    res.degenerate_degree = prod.is_zero();
    res.degenerate_spectrum = kernel.size() > 1;
    for (auto& v : kernel) {
        Polynomial y{std::move(v)};
        if (y.degree() == n && !prod.is_zero())
            y = y * (prod / y.leading());
        else
            y = y.monic();
        res.basis.push_back(std::move(y));
    }
    return res;
}

/// The unique kernel vector; throws DegenerateSpectrum when the kernel has
/// dimension > 1 (use series_solve_full and choose explicitly).
inline Polynomial series_solve(const EquationParams& p, int n) {
    SeriesSolveResult r = series_solve_full(p, n);
    if (r.basis.size() > 1)
        throw DegenerateSpectrum("kernel dimension " + std::to_string(r.basis.size()) +
                                 " at n=" + std::to_string(n));
    return r.basis.front();
}

} // namespace polyode
