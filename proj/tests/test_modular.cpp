#include <doctest.h>

#include "eo/modular.hpp"
#include "eo/verify.hpp"

using namespace eo;

TEST_CASE("pentagonal eta expansion") {
    auto e1 = eta_pow_series(1, 15);
    CHECK(e1.offset == Rational(1, 24));
    std::vector<long> expected{1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0};
    for (int n = 0; n < 15; ++n) CHECK(e1.series.coef(n) == Rational(expected[static_cast<size_t>(n)]));
    auto e3 = eta_pow_series(3, 16);
    CHECK(e3.offset == Rational(3, 24));
    CHECK(e3.series.coef(0) == Rational(1));
    CHECK(e3.series.coef(3) == Rational(-1));
    CHECK(e3.series.coef(6) == Rational(-1));
    CHECK(e3.series.coef(15) == Rational(1));
}

TEST_CASE("hauptmodul expansions and offsets") {
    auto h3 = hauptmodul(3, 8);
    CHECK(h3.coef(1) == Rational(1));
    CHECK(h3.coef(2) == Rational(12));
    auto h4 = hauptmodul(4, 8);  // offset 8*(4-1)/24 = 1 checked internally
    CHECK(h4.coef(1) == Rational(1));
    auto h6 = hauptmodul(6, 8);
    CHECK(h6.coef(1) == Rational(1));
    CHECK(h6.coef(2) == Rational(-3));
    // level 5: fifth power of the quadratic-character product
    auto h5 = hauptmodul(5, 8);
    CHECK(h5.coef(1) == Rational(1));
    CHECK(h5.coef(2) == Rational(-5));
    CHECK(h5.coef(3) == Rational(15));
    CHECK(h5.coef(4) == Rational(-30));
    CHECK(h5.coef(5) == Rational(40));
    CHECK(h5.coef(6) == Rational(-26));
    CHECK_THROWS_AS(hauptmodul(7, 8), UsageError);
}

TEST_CASE("hypergeometric series") {
    auto f = f21_series(Rational(1, 3), Rational(2, 3), Rational(2), Rational(27), 6);
    CHECK(f.coef(0) == Rational(1));
    CHECK(f.coef(1) == Rational(3));  // (1/3)(2/3)*27/(2*1)
    auto g = f21_series(Rational(1, 2), Rational(1, 2), Rational(2), Rational(16), 6);
    CHECK(g.coef(0) == Rational(1));
    CHECK(g.coef(1) == Rational(2));
    CHECK_THROWS_AS(f21_series(Rational(1), Rational(1), Rational(0), Rational(1), 4),
                    BadParameter);
    CHECK_THROWS_AS(f21_series(Rational(1), Rational(1), Rational(-3), Rational(1), 4),
                    BadParameter);
}

TEST_CASE("lattice sums by brute force") {
    auto hex = lattice_theta_sum(LatticeForm::Hex, 5);
    CHECK(hex.coef(0) == Rational(1));
    CHECK(hex.coef(1) == Rational(6));
    CHECK(hex.coef(2) == Rational(0));
    CHECK(hex.coef(3) == Rational(6));
    CHECK(hex.coef(4) == Rational(6));
    auto sq = lattice_theta_sum(LatticeForm::Square, 5);
    CHECK(sq.coef(0) == Rational(1));
    CHECK(sq.coef(1) == Rational(4));
    CHECK(sq.coef(2) == Rational(4));
    CHECK(sq.coef(3) == Rational(0));
    CHECK(sq.coef(4) == Rational(4));
}

TEST_CASE("identity suites at moderate order") {
    for (int n : {3, 4, 6}) {
        auto rep = verify_case(n, 24);
        INFO("case ", n);
        for (const auto& c : rep.checks) {
            INFO(c.name, " residual valuation ", c.residual_valuation);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("golden-ratio suite at moderate order") {
    auto rep = verify_case(5, 20);
    for (const auto& c : rep.checks) {
        INFO(c.name, " residual valuation ", c.residual_valuation);
        CHECK(c.pass);
    }
}

TEST_CASE("the misprinted golden-ratio equation variant stays nonzero") {
    // the variant with (11+sqrt5)/2 in the dt/dh denominator and the quartic
    // numerator on the t term is not an identity: its residual starts at h^0.
    // P must equal -R''/R' and Q must equal -S R'^2, which forces a simple
    // pole at h = 0 in Q; the variant has none.
    auto resid = golden_ratio_ode_misprint_residual(14);
    CHECK_FALSE(resid.is_identically_zero());
    CHECK(resid.first_nonzero_exponent() == 0);
}

TEST_CASE("ODE checks at arbitrary rational weight") {
    auto rep = verify_ode_at(Rational(2, 5), 16);
    for (const auto& c : rep.checks) CHECK(c.pass);
}
