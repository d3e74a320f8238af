#include <doctest.h>

#include "eo/series.hpp"
#include "eo/gamma_poly.hpp"

using namespace eo;
using QS = TruncSeries<Rational>;
using GS = TruncSeries<GammaPoly>;

namespace {

QS qs(int val, int order, std::vector<long> coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (long x : coeffs) c.emplace_back(x);
    return QS(val, order, std::move(c));
}

struct Rng {
    unsigned long long s = 0xfeedface12345678ULL;
    long next(long lo, long hi) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + static_cast<long>((s >> 33) % static_cast<unsigned long long>(hi - lo + 1));
    }
    QS series(int val, int order, bool unit_lead) {
        std::vector<Rational> c;
        for (int n = val; n < order; ++n) c.emplace_back(next(-6, 6), next(1, 4));
        if (unit_lead && !c.empty() && c[0].is_zero()) c[0] = Rational(1);
        return QS(val, order, std::move(c));
    }
};

}  // namespace

TEST_CASE("multiplication") {
    // (q + q^2)(1 - q) = q - q^3
    auto a = qs(1, 6, {1, 1, 0, 0, 0});
    auto b = qs(0, 6, {1, -1, 0, 0, 0, 0});
    auto p = a * b;
    CHECK(p.coef(1) == Rational(1));
    CHECK(p.coef(2) == Rational(0));
    CHECK(p.coef(3) == Rational(-1));
    CHECK(p.coef(4) == Rational(0));
    // f * 0 = 0 with a justified order
    auto z = QS::zero_to(6);
    CHECK((a * z).is_identically_zero());
    // order bookkeeping: min(N1+v2, N2+v1)
    CHECK((a * z).order() == 7);
    CHECK(p.order() == 6);  // min(6+0, 6+1)
}

TEST_CASE("coefficient access beyond the order is a hard error") {
    auto a = qs(1, 4, {1, 2, 3});
    CHECK(a.coef(0) == Rational(0));  // below valuation: a known zero
    CHECK(a.coef(3) == Rational(3));
    CHECK_THROWS_AS(a.coef(4), OrderExceeded);
    CHECK_THROWS_AS(a.coef(100), OrderExceeded);
}

TEST_CASE("inversion") {
    // 1/(1-q) = 1 + q + q^2 + ...
    auto geo = inverse(qs(0, 8, {1, -1, 0, 0, 0, 0, 0, 0}));
    for (int n = 0; n < 8; ++n) CHECK(geo.coef(n) == Rational(1));
    // q(1+q) inverts to q^-1 (1 - q + q^2 - ...)
    auto f = qs(1, 8, {1, 1, 0, 0, 0, 0, 0});
    auto fi = inverse(f);
    CHECK(fi.valuation() == -1);
    CHECK(fi.coef(-1) == Rational(1));
    CHECK(fi.coef(0) == Rational(-1));
    CHECK(fi.coef(1) == Rational(1));
    // non-unit leading over Q[g]
    GS g(0, 4, {GammaPoly::gamma(), GammaPoly(1), GammaPoly(1), GammaPoly(1)});
    CHECK_THROWS_AS(inverse(g), NonUnitLeading);
    // 1/(1 + 3(1+g) q + ...) has -3(1+g) at q^1
    GS h(0, 4, {GammaPoly(1), GammaPoly({Rational(3), Rational(3)}), GammaPoly(0), GammaPoly(0)});
    auto hi = inverse(h);
    CHECK(hi.coef(1) == GammaPoly({Rational(-3), Rational(-3)}));
}

TEST_CASE("composition") {
    // f = q^2, g = q + q^2: f(g) = q^2 + 2q^3 + q^4
    auto f = qs(2, 6, {1, 0, 0, 0});
    auto g = qs(1, 6, {1, 1, 0, 0, 0});
    auto c = compose(f, g);
    CHECK(c.coef(2) == Rational(1));
    CHECK(c.coef(3) == Rational(2));
    CHECK(c.coef(4) == Rational(1));
    CHECK(c.coef(5) == Rational(0));
    // composing with the identity is the identity operation
    auto any = qs(0, 6, {3, -1, 4, -1, 5, -9});
    CHECK(compose(any, QS::identity(6)) == any);
    CHECK_THROWS_AS(compose(any, qs(0, 6, {1, 1, 0, 0, 0, 0})), PositiveValuationRequired);
}

TEST_CASE("reversion: Catalan numbers from q - q^2") {
    // independent oracle: Catalan recurrence C_{n+1} = sum C_i C_{n-i}
    std::vector<Rational> cat{Rational(1)};
    for (int n = 0; n < 8; ++n) {
        Rational s(0);
        for (int i = 0; i <= n; ++i) s += cat[static_cast<size_t>(i)] * cat[static_cast<size_t>(n - i)];
        cat.push_back(s);
    }
    auto f = qs(1, 10, {1, -1, 0, 0, 0, 0, 0, 0, 0});
    auto g = revert(f);
    for (int n = 1; n < 10; ++n) CHECK(g.coef(n) == cat[static_cast<size_t>(n - 1)]);
    // direct substitution: f(g) = q
    auto back = compose(f, g);
    CHECK(back.coef(1) == Rational(1));
    for (int n = 2; n < back.order(); ++n) CHECK(back.coef(n) == Rational(0));
    // trivial and error cases
    CHECK(revert(QS::identity(6)) == QS::identity(6));
    CHECK_THROWS_AS(revert(qs(2, 6, {1, 0, 0, 0})), BadValuation);
}

TEST_CASE("reversion round-trip on random series") {
    Rng rng;
    for (int it = 0; it < 15; ++it) {
        auto f = rng.series(1, 9, true);
        auto g = revert(f);
        auto back = compose(g, f);
        CHECK(back.coef(1) == Rational(1));
        for (int n = 2; n < back.order(); ++n) CHECK(back.coef(n) == Rational(0));
    }
}

TEST_CASE("f times its inverse is one, on random series") {
    Rng rng;
    for (int it = 0; it < 15; ++it) {
        auto f = rng.series(static_cast<int>(rng.next(-2, 2)), 9, true);
        auto p = f * inverse(f);
        CHECK(p.coef(0) == Rational(1));
        for (int n = p.valuation(); n < p.order(); ++n)
            if (n != 0) CHECK(p.coef(n) == Rational(0));
    }
}

TEST_CASE("euler operator") {
    auto f = qs(-1, 4, {2, 7, 3, 0, 5});
    auto d = euler_d(f);
    CHECK(d.coef(-1) == Rational(-2));  // n = -1
    CHECK(d.coef(0) == Rational(0));
    CHECK(d.coef(1) == Rational(3));
    CHECK(euler_d(QS::identity(5)) == QS::identity(5));
    CHECK(euler_d(QS::constant(Rational(9), 5)).is_identically_zero());
}

TEST_CASE("euler operator is a derivation") {
    Rng rng;
    for (int it = 0; it < 15; ++it) {
        auto f = rng.series(0, 8, false);
        auto g = rng.series(0, 8, false);
        auto lhs = euler_d(f * g);
        auto rhs = euler_d(f) * g + f * euler_d(g);
        CHECK((lhs - rhs).is_identically_zero());
    }
}

TEST_CASE("derivative with respect to another series") {
    auto g = qs(1, 8, {1, 2, -1, 3, 0, 1, 2});
    CHECK((deriv_wrt(g, g) - QS::constant(Rational(1), 8)).normalized().is_identically_zero());
    // chain rule: d(g^2)/dg = 2g
    auto d = deriv_wrt(g * g, g);
    auto diff = d - g * Rational(2);
    CHECK(diff.is_identically_zero());
}

TEST_CASE("exact coefficient-wise division") {
    GammaPoly g2({Rational(2), Rational(1)});
    GS s(1, 4, {g2, g2 * g2, GammaPoly(0)});
    auto q = exact_div_coeffs(s, g2, "test");
    CHECK(q.coef(1) == GammaPoly(1));
    CHECK(q.coef(2) == g2);
    GS bad(1, 3, {GammaPoly(1), GammaPoly(1)});
    CHECK_THROWS_AS(exact_div_coeffs(bad, g2, "test"), CancellationFailure);
}
