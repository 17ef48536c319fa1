#include <doctest.h>

#include "base3/ensemble.hpp"

using namespace base3;

TEST_CASE("weight tables match the fixed constants exactly") {
    for (int eb : {0, 1})
        for (int pt : {0, 1}) {
            auto w = weights_for(Scheme::uniform, eb, pt);
            CHECK(w.alpha == 1.0 / 3.0);
            CHECK(w.beta == 1.0 / 3.0);
            CHECK(w.delta == 1.0 / 3.0);
        }

    auto conf = weights_for(Scheme::eb_conf, 1, 0);
    CHECK(conf.alpha == 0.5);
    CHECK(conf.beta == 0.2);
    CHECK(conf.delta == 0.3);
    auto not_conf = weights_for(Scheme::eb_conf, 0, 1);
    CHECK(not_conf.alpha == 0.2);
    CHECK(not_conf.beta == 0.3);
    CHECK(not_conf.delta == 0.5);

    auto c11 = weights_for(Scheme::multi_conf, 1, 1);
    CHECK(c11.alpha == 0.35);
    CHECK(c11.beta == 0.45);
    CHECK(c11.delta == 0.20);
    auto c10 = weights_for(Scheme::multi_conf, 1, 0);
    CHECK(c10.alpha == 0.45);
    CHECK(c10.beta == 0.25);
    CHECK(c10.delta == 0.30);
    auto c01 = weights_for(Scheme::multi_conf, 0, 1);
    CHECK(c01.alpha == 0.15);
    CHECK(c01.beta == 0.70);
    CHECK(c01.delta == 0.15);
    auto c00 = weights_for(Scheme::multi_conf, 0, 0);
    CHECK(c00.alpha == 0.20);
    CHECK(c00.beta == 0.45);
    CHECK(c00.delta == 0.35);
}

TEST_CASE("ensemble_score spot values") {
    CHECK(ensemble_score({1, 1, 1.0}, Scheme::uniform) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ensemble_score({1, 0, 0.0}, Scheme::uniform) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    // multi_conf case 3: 0.15*0 + 0.70*1 + 0.15*0.5
    CHECK(ensemble_score({0, 1, 0.5}, Scheme::multi_conf) ==
          doctest::Approx(0.775).epsilon(1e-12));
    // eb_conf w_not: 0.2*0 + 0.3*0 + 0.5*1
    CHECK(ensemble_score({0, 0, 1.0}, Scheme::eb_conf) ==
          doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("ensemble_score stays in [0,1] and is monotone in s_cm") {
    for (Scheme scheme :
         {Scheme::uniform, Scheme::eb_conf, Scheme::multi_conf})
        for (int eb : {0, 1})
            for (int pt : {0, 1}) {
                double prev = -1.0;
                for (double cm : {0.0, 0.1, 0.4, 0.9, 1.0}) {
                    const double s = ensemble_score({eb, pt, cm}, scheme);
                    CHECK(s >= 0.0);
                    CHECK(s <= 1.0);
                    CHECK(s >= prev);
                    prev = s;
                }
            }
}

TEST_CASE("weights_for is pure") {
    for (int i = 0; i < 3; ++i) {
        auto w = weights_for(Scheme::multi_conf, 1, 0);
        CHECK(w.alpha == 0.45);
        CHECK(w.beta == 0.25);
        CHECK(w.delta == 0.30);
    }
}

TEST_CASE("manual override channel reduces to single components") {
    const ComponentScores s{1, 0, 0.37};
    CHECK(interpolate(s, {1, 0, 0}) == 1.0);
    CHECK(interpolate(s, {0, 1, 0}) == 0.0);
    CHECK(interpolate(s, {0, 0, 1}) == 0.37);
}

TEST_CASE("weights validation") {
    CHECK_NOTHROW(validate({0.2, 0.3, 0.5}));
    CHECK_THROWS_AS(validate({0.5, 0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(validate({-0.2, 0.7, 0.5}), std::invalid_argument);
}

TEST_CASE("scheme name round trip") {
    for (Scheme s : {Scheme::uniform, Scheme::eb_conf, Scheme::multi_conf})
        CHECK(scheme_from_string(to_string(s)) == s);
    CHECK_THROWS_AS(scheme_from_string("bogus"), std::invalid_argument);
}
