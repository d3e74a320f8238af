#include <doctest.h>

#include <algorithm>
#include <map>

#include "eo/relation.hpp"
#include "eo/verify.hpp"

using namespace eo;
using QS = TruncSeries<Rational>;

TEST_CASE("exact kernel of a small rational matrix") {
    // rows of [1 2 3; 2 4 6; 1 1 1] -> kernel spanned by (1, -2, 1)... check
    std::vector<std::vector<Rational>> m = {
        {Rational(1), Rational(2), Rational(3)},
        {Rational(2), Rational(4), Rational(6)},
        {Rational(1), Rational(1), Rational(1)},
    };
    auto basis = exact_kernel(m);
    REQUIRE(basis.size() == 1);
    const auto& v = basis[0];
    // verify M v = 0 directly
    for (const auto& row : m) {
        Rational dot(0);
        for (size_t j = 0; j < 3; ++j) dot += row[j] * v[j];
        CHECK(dot == Rational(0));
    }
}

TEST_CASE("toy relation S = R^2") {
    auto R = QS::monomial(Rational(1), 1, 20);
    auto S = QS::monomial(Rational(1), 2, 20);
    auto rel = find_poly_relation<Rational>(R, S, {{2, 0}, {0, 1}});
    REQUIRE(rel.support.size() == 2);
    // leading monomial by (s_exp, r_exp) is S, normalized positive: S - R^2
    CHECK(rel.support[0] == std::make_pair(2, 0));
    CHECK(rel.coeffs[0] == Rational(-1));
    CHECK(rel.support[1] == std::make_pair(0, 1));
    CHECK(rel.coeffs[1] == Rational(1));
}

TEST_CASE("no relation and ambiguous relation are distinguished") {
    // R = q, S = exp-like series: no low-degree algebraic relation
    std::vector<Rational> c;
    Rational f(1);
    for (int n = 0; n < 24; ++n) {
        c.push_back(f);
        f = f / Rational(n + 1);
    }
    auto R = QS::monomial(Rational(1), 1, 24);
    auto S = QS(0, 24, std::move(c));
    CHECK_THROWS_AS((find_poly_relation<Rational>(R, S, {{1, 0}, {0, 1}, {1, 1}})), NoRelation);
    // S = R^2 with both R^2 S^0, R^2 S^0-redundant support: kernel dim 2
    auto S2 = QS::monomial(Rational(1), 2, 24);
    CHECK_THROWS_AS(
        (find_poly_relation<Rational>(R, S2, {{2, 0}, {0, 1}, {4, 0}, {2, 1}, {0, 2}})),
        AmbiguousRelation);
}

TEST_CASE("weight -1 relation matches the expected polynomial") {
    auto rel = find_relation_case6(44);
    // 256 R^4 S^2 - 264 R^3 S^2 + 3 R^2 S^2 + 128 R^2 S + 5 R S^2 - 64 R S - 10 S + 16
    std::map<std::pair<int, int>, long> expected = {
        {{0, 0}, 16},  {{0, 1}, -10}, {{1, 1}, -64}, {{2, 1}, 128},
        {{1, 2}, 5},   {{2, 2}, 3},   {{3, 2}, -264}, {{4, 2}, 256},
    };
    REQUIRE(rel.support.size() == expected.size());
    for (size_t i = 0; i < rel.support.size(); ++i) {
        auto it = expected.find(rel.support[i]);
        REQUIRE(it != expected.end());
        CHECK(rel.coeffs[i] == Rational(it->second));
    }
}

TEST_CASE("weight -1 relation still vanishes at doubled order") {
    auto rel = find_relation_case6(40);
    auto b = build_genfun<Rational>(Rational(-1), 80, BuildParts::QSideOnly);
    auto resid = relation_residual(rel, b.R_q, b.S_q);
    CHECK(resid.is_identically_zero());
    CHECK(resid.order() >= 70);
}

TEST_CASE("golden-ratio relation still vanishes at doubled order") {
    auto rel = find_relation_case5(40);
    auto b = build_genfun<QuadExtSqrt5>(QuadExtSqrt5::golden_ratio(), 80, BuildParts::QSideOnly);
    auto resid = relation_residual(rel, b.R_q, b.S_q);
    CHECK(resid.is_identically_zero());
    CHECK(resid.order() >= 70);
}

TEST_CASE("golden-ratio relation sits on the 13-dot polygon") {
    auto rel = find_relation_case5(40);
    const auto& dots = golden_ratio_relation_support();
    CHECK(rel.support.size() == dots.size());  // every dot is used
    for (const auto& mono : rel.support)
        CHECK(std::find(dots.begin(), dots.end(), mono) != dots.end());
    // spot values from an independent elimination: constant 2000, leading
    // monomial R^6 S^3 with coefficient 182250, R^4 S^2 with 121500
    for (size_t i = 0; i < rel.support.size(); ++i) {
        if (rel.support[i] == std::make_pair(0, 0))
            CHECK(rel.coeffs[i] == QuadExtSqrt5::from_rational(Rational(2000)));
        if (rel.support[i] == std::make_pair(6, 3))
            CHECK(rel.coeffs[i] == QuadExtSqrt5::from_rational(Rational(182250)));
        if (rel.support[i] == std::make_pair(4, 2))
            CHECK(rel.coeffs[i] == QuadExtSqrt5::from_rational(Rational(121500)));
        if (rel.support[i] == std::make_pair(0, 1))
            CHECK(rel.coeffs[i] == QuadExtSqrt5(Rational(-1880), Rational(840)));
    }
}
