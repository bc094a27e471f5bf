#include <catch2/catch_amalgamated.hpp>

#include "polyode/polynomial.hpp"
#include "polyode/rational_function.hpp"

#include <random>

using namespace polyode;

namespace {

Polynomial rnd_poly(std::mt19937_64& eng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), num(-6, 6), den(1, 3);
    std::vector<Rational> c(static_cast<size_t>(deg(eng)) + 1);
    for (auto& v : c) v = Rational(num(eng), den(eng));
    return Polynomial{std::move(c)};
}

} // namespace

TEST_CASE("polynomial basics") {
    Polynomial xp1{Rational(1), Rational(1)};  // x + 1
    Polynomial xm1{Rational(-1), Rational(1)}; // x - 1
    CHECK(xp1 * xm1 == Polynomial{Rational(-1), Rational(0), Rational(1)});

    Polynomial p{Rational(2), Rational(0), Rational(5)};
    CHECK(p + Polynomial{} == p);
    CHECK(Polynomial::monomial(Rational(2), 1) * Polynomial::monomial(Rational(3), 2) ==
          Polynomial::monomial(Rational(6), 3));

    CHECK(Polynomial{}.degree() == -1);
    CHECK(Polynomial{Rational(0), Rational(0)}.is_zero());
    CHECK(p.degree() == 2);
}

TEST_CASE("polynomial derivative") {
    CHECK(Polynomial::monomial(Rational(1), 3).derivative() == Polynomial::monomial(Rational(3), 2));
    CHECK(Polynomial::constant(Rational(7)).derivative().is_zero());
    // d/dx (a10 x + a11) = a10
    Polynomial p1{Rational(5, 3), Rational(-2, 7)};
    CHECK(p1.derivative() == Polynomial::constant(Rational(-2, 7)));
}

TEST_CASE("polynomial evaluation") {
    Polynomial q{Rational(-1), Rational(0), Rational(1)}; // x^2 - 1
    CHECK(q.eval(Rational(2)) == Rational(3));
    CHECK(q.eval(Rational(0)) == Rational(-1));
    Polynomial r{Rational(-2), Rational(0), Rational(4)}; // 4x^2 - 2
    CHECK(r.eval(Rational(1, 2)) == Rational(-1));
    CHECK(r.eval_d(0.5) == Catch::Approx(-1.0));
}

TEST_CASE("ring axioms and Leibniz rule on random polynomials") {
    std::mt19937_64 eng(7);
    for (int i = 0; i < 100; ++i) {
        Polynomial a = rnd_poly(eng, 4), b = rnd_poly(eng, 4), c = rnd_poly(eng, 3);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
        if (!a.is_zero() && !b.is_zero())
            CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("polynomial division and gcd") {
    Polynomial a{Rational(-1), Rational(0), Rational(1)};  // (x-1)(x+1)
    Polynomial b{Rational(1), Rational(1)};                // x + 1
    auto [q, r] = a.divmod(b);
    CHECK(r.is_zero());
    CHECK(q == Polynomial{Rational(-1), Rational(1)});
    CHECK(poly_gcd(a, b) == b.monic());
    CHECK(poly_gcd(a, Polynomial{Rational(1), Rational(2), Rational(1)}) == b.monic());
    CHECK(poly_gcd(Polynomial{}, Polynomial{}).is_zero());
}

TEST_CASE("rational function reduction and arithmetic") {
    RationalFunction inv_x(Polynomial::constant(Rational(1)), Polynomial::x());
    CHECK(inv_x + inv_x == RationalFunction(Polynomial::constant(Rational(2)), Polynomial::x()));

    RationalFunction f(Polynomial{Rational(1), Rational(3)}, Polynomial{Rational(2), Rational(0), Rational(1)});
    CHECK((f - f).is_zero());

    RationalFunction x_over_xp1(Polynomial::x(), Polynomial{Rational(1), Rational(1)});
    CHECK(inv_x * x_over_xp1 ==
          RationalFunction(Polynomial::constant(Rational(1)), Polynomial{Rational(1), Rational(1)}));

    CHECK_THROWS_AS(f / RationalFunction{}, Error);

    // canonical form: monic denominator
    RationalFunction g(Polynomial::constant(Rational(3)), Polynomial{Rational(0), Rational(2)});
    CHECK(g.den() == Polynomial::x());
    CHECK(g.num() == Polynomial::constant(Rational(3, 2)));
}

TEST_CASE("rational function derivative and float agreement") {
    std::mt19937_64 eng(11);
    std::uniform_real_distribution<double> pt(0.5, 3.0);
    for (int i = 0; i < 40; ++i) {
        Polynomial n = rnd_poly(eng, 3), d = rnd_poly(eng, 2);
        if (d.is_zero()) continue;
        RationalFunction f(n, d);
        RationalFunction fp = f.derivative();
        for (int k = 0; k < 10; ++k) {
            double x = pt(eng);
            double den = f.den().eval_d(x);
            if (std::abs(den) < 1e-3) continue;
            Rational xr(static_cast<long long>(std::lround(x * 64)), 64);
            if (f.den().eval(xr).is_zero()) continue;
            double exact = f.eval(xr).to_double();
            double approx = f.eval<double>(xr.to_double());
            CHECK(std::abs(exact - approx) <= 1e-12 * std::max(1.0, std::abs(exact)));
            // derivative consistency by finite difference
            double h = 1e-6;
            double fd = (f.eval<double>(x + h) - f.eval<double>(x - h)) / (2 * h);
            if (std::abs(f.den().eval_d(x + h)) > 1e-3 && std::abs(f.den().eval_d(x - h)) > 1e-3)
                CHECK(fp.eval<double>(x) == Catch::Approx(fd).margin(1e-3).epsilon(1e-4));
        }
    }
}
