#include "riesz/constants.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace riesz;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("Params validates its domain") {
    CHECK_NOTHROW(Params(1.0, 0.001));
    CHECK_NOTHROW(Params(2.0, 1000.0));
    CHECK_THROWS_AS(Params(0.9, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Params(3.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Params(1.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Params(1.5, -2.0), std::invalid_argument);
    CHECK_THROWS_AS(Params(std::nan(""), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Params(1.5, std::nan("")), std::invalid_argument);
}

TEST_CASE("s_b closed form") {
    CHECK_THAT(s_b({2.0, 3.0}), WithinAbs(4.0, 1e-14));          // (1-b)^2
    CHECK_THAT(s_b({1.0, 7.0}), WithinAbs(64.0, 1e-12));         // (1+b)^2
    CHECK_THAT(s_b({1.0, 0.25}), WithinAbs(1.5625, 1e-14));
    // cross-check at b = 1 against S_1 = 4 cos^2(pi/p)
    for (const double p : {1.0, 1.2, 1.5, 1.8, 2.0}) {
        const double c = std::cos(kPi / p);
        CHECK_THAT(s_b({p, 1.0}), WithinAbs(4.0 * c * c, 1e-13));
    }
    CHECK_THAT(s_b({1.5, 1.0}), WithinAbs(1.0, 1e-14));
}

TEST_CASE("sharp constant A") {
    CHECK_THAT(sharp_constant_A({2.0, 4.0}), WithinAbs(1.0, 1e-15));
    CHECK_THAT(sharp_constant_A({2.0, 0.25}), WithinAbs(2.0, 1e-15));
    SECTION("b = 1 reduces to sqrt(2) sin(pi/(2p))") {
        for (int i = 0; i <= 100; ++i) {
            const double p = 1.0 + i / 100.0;
            CHECK_THAT(sharp_constant_A({p, 1.0}),
                       WithinAbs(std::sqrt(2.0) * std::sin(kPi / (2.0 * p)), 1e-12));
        }
    }
    SECTION("p = 2 reduces to max(1, b^{-1/2})") {
        for (int k = -4; k <= 4; ++k) {
            const double b = std::ldexp(1.0, k);
            CHECK_THAT(sharp_constant_A({2.0, b}),
                       WithinAbs(std::max(1.0, 1.0 / std::sqrt(b)), 1e-14));
        }
    }
    SECTION("swap identity A(p, 1/b) = sqrt(b) A(p, b)") {
        // spot values first, then a grid
        for (const auto& [p, b] : std::vector<std::pair<double, double>>{
                 {1.0, 5.0}, {1.3, 0.2}, {1.5, 2.0}, {1.7, 9.0}, {2.0, 0.3}})
            CHECK_THAT(sharp_constant_A({p, 1.0 / b}) / sharp_constant_A({p, b}),
                       WithinAbs(std::sqrt(b), 1e-12));
        for (int i = 0; i <= 20; ++i)
            for (const double b : {0.1, 0.5, 2.0, 30.0}) {
                const double p = 1.0 + i / 20.0;
                CHECK_THAT(sharp_constant_A({p, 1.0 / b}) / sharp_constant_A({p, b}),
                           WithinAbs(std::sqrt(b), 1e-12));
            }
    }
}

TEST_CASE("minorant constants D and E") {
    SECTION("D is exactly A^p") {
        for (const double p : {1.0, 1.25, 1.5, 1.75, 2.0})
            for (const double b : {0.25, 1.0, 4.0}) {
                const auto [d, e] = minorant_constants_DE({p, b});
                CHECK_THAT(d, WithinRel(std::pow(sharp_constant_A({p, b}), p), 1e-14));
            }
    }
    SECTION("p = 2 limit: E = 2, flagged") {
        const auto [d, e] = minorant_constants_DE({2.0, 3.0});
        CHECK_THAT(d, WithinAbs(1.0, 1e-15));
        CHECK(e == 2.0);
        CHECK(compute_constants({2.0, 3.0}).degenerate_p2);
        // the closed form approaches the limit from below as p -> 2
        double prev = 0.0;
        for (const double eps : {1e-3, 1e-4, 1e-5}) {
            const double ee = minorant_constants_DE({2.0 - eps, 3.0}).second;
            CHECK(ee > prev);
            CHECK(ee < 2.0);
            prev = ee;
        }
        CHECK_THAT(prev, WithinAbs(2.0, 2e-4));
    }
    SECTION("b = 1 values via the A reduction") {
        const auto [d, e] = minorant_constants_DE({1.5, 1.0});
        CHECK_THAT(d, WithinRel(std::pow(std::sqrt(2.0) * std::sin(kPi / 3.0), 1.5), 1e-14));
        CHECK_THAT(d, WithinRel(1.3554030054147672, 1e-14));
    }
    SECTION("p = 1: E vanishes with sin(pi/p)") {
        const auto [d, e] = minorant_constants_DE({1.0, 1.0});
        CHECK_THAT(d, WithinRel(std::sqrt(2.0), 1e-15));
        CHECK_THAT(e, WithinAbs(0.0, 1e-14));
    }
    SECTION("E >= 0 across the domain") {
        for (const double p : {1.0, 1.1, 1.5, 1.9, 1.999})
            for (const double b : {0.1, 1.0, 10.0})
                CHECK(minorant_constants_DE({p, b}).second >= 0.0);
    }
}

TEST_CASE("equality locus ratio R") {
    CHECK_THAT(equality_locus_R({1.0, 0.25}), WithinRel(0.25, 1e-14));
    CHECK_THAT(equality_locus_R({1.0, 7.0}), WithinRel(7.0, 1e-14));
    CHECK_THAT(equality_locus_R({1.5, 1.0}), WithinAbs(1.0, 1e-14));
    CHECK_THAT(equality_locus_R({2.0 - 1e-9, 1.0}), WithinAbs(1.0, 1e-6));
    CHECK_THROWS_AS(equality_locus_R({2.0, 1.0}), degenerate_p2_error);
    for (const double p : {1.0, 1.25, 1.5, 1.75, 1.999})
        for (const double b : {0.01, 0.25, 1.0, 4.0, 100.0}) CHECK(equality_locus_R({p, b}) > 0.0);
}

TEST_CASE("extremal coefficient r_bar") {
    for (const double p : {1.0, 1.25, 1.5, 1.75}) CHECK(extremal_rbar({p, 1.0}) == 1.0);
    CHECK_THAT(extremal_rbar({1.0, 4.0}), WithinRel(0.25, 1e-14));
    SECTION("reciprocal identity at p = 1, spot checks first") {
        for (const double b : {0.2, 0.5, 2.0, 3.0, 10.0})
            CHECK_THAT(extremal_rbar({1.0, b}) * extremal_rbar({1.0, 1.0 / b}),
                       WithinAbs(1.0, 1e-12));
        CHECK_THAT(extremal_rbar({1.0, 0.25}), WithinRel(4.0, 1e-13));
    }
    CHECK_THROWS_AS(extremal_rbar({2.0, 3.0}), degenerate_p2_error);
    for (const double p : {1.0, 1.3, 1.7})
        for (const double b : {0.2, 1.0, 5.0}) CHECK(extremal_rbar({p, b}) > 0.0);
}

TEST_CASE("sharpness weight beta") {
    for (const double p : {1.0, 1.25, 1.5, 1.75}) CHECK(sharpness_beta({p, 1.0}) == 0.5);
    CHECK_THROWS_AS(sharpness_beta({2.0, 3.0}), degenerate_p2_error);
    CHECK_THAT(sharpness_beta({1.0, 4.0}), WithinRel(0.8, 1e-14));  // continuous limit b/(1+b)
    CHECK_THAT(sharpness_beta({1.5, 0.5}), WithinRel(0.2679491924311227, 1e-13));
    SECTION("beta lies in [0,1] and pairs with r_bar") {
        for (const double p : {1.0, 1.2, 1.5, 1.8, 1.95})
            for (const double b : {0.1, 0.5, 2.0, 10.0}) {
                const double beta = sharpness_beta({p, b});
                CHECK(beta >= 0.0);
                CHECK(beta <= 1.0);
                CHECK_THAT((1.0 - beta) / beta, WithinRel(extremal_rbar({p, b}), 1e-11));
            }
    }
    SECTION("quasiconformality surrogate kappa in (0,1) for b != 1") {
        for (const double p : {1.0, 1.25, 1.5, 1.75})
            for (const double b : {0.25, 0.5, 2.0, 4.0}) {
                const double beta = sharpness_beta({p, b});
                const double kappa = std::min(beta / (1.0 - beta), (1.0 - beta) / beta);
                CHECK(kappa > 0.0);
                CHECK(kappa < 1.0);
            }
    }
}

TEST_CASE("compute_constants aggregates and degenerates consistently") {
    const ConstantSet cs = compute_constants({1.5, 2.0});
    CHECK_FALSE(cs.degenerate_p2);
    CHECK_THAT(cs.S_b, WithinAbs(3.0, 1e-13));
    CHECK_THAT(cs.A, WithinRel(1.0876638735805373, 1e-13));
    CHECK_THAT(cs.D, WithinRel(1.1343368890391727, 1e-13));
    CHECK_THAT(cs.R, WithinRel(1.0 + std::sqrt(3.0), 1e-13));
    CHECK(cs.S_b >= 0.0);

    const ConstantSet d2 = compute_constants({2.0, 0.5});
    CHECK(d2.degenerate_p2);
    CHECK(std::isnan(d2.R));
    CHECK(std::isnan(d2.r_bar));
    CHECK(std::isnan(d2.beta));
    CHECK(d2.E == 2.0);

    for (const double p : {1.0, 1.25, 1.5, 1.75})
        for (const double b : {0.25, 1.0, 4.0}) {
            const ConstantSet c = compute_constants({p, b});
            CHECK(c.S_b >= -1e-15);
            CHECK(c.R > 0.0);
            CHECK((c.beta >= 0.0 && c.beta <= 1.0));
        }
}
