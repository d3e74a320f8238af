#include <doctest.h>

#include "eo/genfun.hpp"
#include "eo/map_enum.hpp"

using namespace eo;

TEST_CASE("planar map counts match the classical formula") {
    CHECK(planar_quartic_count_formula(1) == Rational(2));
    CHECK(planar_quartic_count_formula(2) == Rational(9));
    CHECK(planar_quartic_count_formula(3) == Rational(54));
    CHECK(planar_quartic_count_formula(4) == Rational(378));
    for (int n = 1; n <= 4; ++n) {
        auto maps = gen_quartic_maps(n);
        CHECK(Rational(static_cast<long>(maps.size())) == planar_quartic_count_formula(n));
    }
}

TEST_CASE("the genus filter is active") {
    // one vertex: three pairings, one of them (the crossing one) has genus 1
    CHECK(gen_quartic_maps(1, 0).size() == 2);
    CHECK(gen_quartic_maps(1, 1).size() == 1);
    // genus adds up: total pairings of 4 darts is 3
    CHECK(gen_quartic_maps(1, 0).size() + gen_quartic_maps(1, 1).size() == 3);
}

TEST_CASE("orientation validity is exhaustive") {
    for (int n = 1; n <= 3; ++n) {
        for (const auto& m : gen_quartic_maps(n)) {
            // eo_polynomial only counts orientations with out-degree 2
            // everywhere and the root dart outgoing; the total over all maps
            // of evaluations at gamma=1 is bounded by 2^(2n-1) per map
            auto p = eo_polynomial(m);
            Rational total = p.eval(Rational(1));
            CHECK(total.sign() >= 0);
            // at most half of all 2^(2n) edge-direction choices keep the root
            // dart outgoing
            CHECK_FALSE(Rational(1L << (2 * n - 1)) < total);
        }
    }
}

TEST_CASE("hand count at one vertex") {
    CHECK(count_eo_gamma(1) == GammaPoly({Rational(2), Rational(2)}));  // 2 + 2g
    CHECK(count_eo_gamma(1).eval(Rational(1)) == Rational(4));
}

TEST_CASE("brute force equals the generating function") {
    auto bundle = build_genfun<GammaPoly>(GammaPoly::gamma(), 7, BuildParts::Full);
    for (int n = 1; n <= 3; ++n) CHECK(count_eo_gamma(n) == bundle.Q_of_t().coef(n));
}

TEST_CASE("vertex cap") {
    CHECK_THROWS_AS(gen_quartic_maps(9, 0), CapExceeded);
    CHECK_THROWS_AS(count_eo_gamma(5), CapExceeded);
}

TEST_CASE("five vertices behind the slow flag") {
    CHECK(gen_quartic_maps(5, 0, kDefaultVertexCap, true).size() == 2916);
    auto bundle = build_genfun<GammaPoly>(GammaPoly::gamma(), 9, BuildParts::Full);
    CHECK(count_eo_gamma(5, kDefaultVertexCap, true) == bundle.Q_of_t().coef(5));
}
