#define CATCH_CONFIG_FAST_COMPILE
#include <catch2/catch.hpp>

#include <cmath>

#include "convharm/membership.hpp"
#include "convharm/oracle.hpp"
#include "convharm/sampling.hpp"

using namespace convharm;

namespace {

GridSpec small_grid(double r_max = 0.999) {
    GridSpec g;
    g.radii = 24;
    g.angles = 96;
    g.r_max = r_max;
    g.refine_rounds = 2;
    return g;
}

// finite difference of arg f(r e^{i theta}) in theta
double fd_arg_derivative(const HarmonicSeries& f, const DiskPoint& z, double step = 1e-5) {
    const double fwd = std::arg(evaluate(f, {z.r, z.theta + step}));
    const double bwd = std::arg(evaluate(f, {z.r, z.theta - step}));
    double d = fwd - bwd;
    const double pi = 3.14159265358979323846;
    while (d > pi) d -= 2.0 * pi;
    while (d <= -pi) d += 2.0 * pi;
    return d / (2.0 * step);
}

}  // namespace

TEST_CASE("defining inequality on the identity map") {
    const OracleReport r = check_defining_inequality(HarmonicSeries::identity(2),
                                                     named_kernel(NamedKernel::U, 0.3),
                                                     small_grid());
    CHECK(r.re_ratio.value == Approx(0.7).margin(1e-12));
    CHECK(r.jacobian.value == Approx(1.0).margin(1e-12));
    CHECK(r.starlike.value == Approx(1.0).margin(1e-9));
    CHECK(r.convex.value == Approx(1.0).margin(1e-6));
    CHECK(r.skipped_ratio == 0);
}

TEST_CASE("boundary extreme point pushes the ratio toward zero") {
    // h_2 of the starlike class at alpha 0 is z - z^2/2; on the positive real
    // axis the ratio approaches 0 as r -> 1
    const KernelPair k = named_kernel(NamedKernel::Starlike, 0.0);
    const OracleReport r = check_defining_inequality(extreme_point(k, ExtremeKind::H, 2), k,
                                                     small_grid());
    CHECK(r.re_ratio.value > 0.0);
    CHECK(r.re_ratio.value < 0.01);
}

TEST_CASE("violation search") {
    // Phi = z + z^2/2 (+ zbar), Psi = z: f = z - 2.5 z^2 has lhs = 1.25
    const KernelPair k([](int) { return 0.5; }, [](int) { return 1.0; }, [](int) { return 0.0; },
                       [](int) { return 0.0; }, 0, 0, 0.0);
    const HarmonicSeries bad = HarmonicSeries::th(2, {2.5}, {0.0, 0.0});
    const ViolationSearch v = find_inequality_violation(bad, k, small_grid());
    CHECK(v.found);
    CHECK(v.on_real_axis);
    CHECK(v.value < 0.0);
    CHECK(v.at.r > 0.8);  // 1 - 1.25 r < 0 needs r > 0.8

    const HarmonicSeries good = HarmonicSeries::th(2, {1.2}, {0.0, 0.0});
    CHECK_FALSE(find_inequality_violation(good, k, small_grid()).found);
}

TEST_CASE("off-axis violations are found by the grid fallback") {
    // u class: f = z + 1.3 zbar^2 fails only along cos(3 theta) = -1
    const KernelPair k = named_kernel(NamedKernel::U, 0.0);
    const HarmonicSeries f = HarmonicSeries::th(2, {0.0}, {0.0, 1.3});
    const ViolationSearch v = find_inequality_violation(f, k, small_grid());
    CHECK(v.found);
    CHECK_FALSE(v.on_real_axis);
    CHECK(v.value < 0.0);
}

TEST_CASE("sense preservation") {
    SECTION("identity has unit jacobian") {
        const auto [minimum, at] = sense_preserving_check(HarmonicSeries::identity(2), small_grid());
        CHECK(minimum == Approx(1.0));
    }
    SECTION("z + zbar^2 loses injectivity at |z| = 1/2") {
        const HarmonicSeries f = HarmonicSeries::th(2, {0.0}, {0.0, 1.0});
        const auto [minimum, at] = sense_preserving_check(f, small_grid());
        CHECK(minimum == Approx(1.0 - 4.0 * 0.999 * 0.999).margin(1e-6));
        CHECK(at.r == Approx(0.999));
        // jacobian changes sign at r = 1/2 exactly
        const WirtingerDerivatives d = wirtinger_derivatives(f, {0.5, 1.0});
        CHECK(std::norm(d.h_prime) - std::norm(d.g_prime) == Approx(0.0).margin(1e-12));
    }
    SECTION("z + zbar^2/4 stays sense-preserving") {
        const HarmonicSeries f = HarmonicSeries::th(2, {0.0}, {0.0, 0.25});
        const auto [minimum, at] = sense_preserving_check(f, small_grid());
        CHECK(minimum > 0.0);
        CHECK(minimum == Approx(1.0 - 0.25 * 0.999 * 0.999).margin(1e-6));
    }
}

TEST_CASE("starlike angular derivative") {
    SECTION("identity") {
        CHECK(starlike_derivative(HarmonicSeries::identity(2), {0.4, 2.0}) == Approx(1.0));
    }
    SECTION("hand algebra for z - z^2/2 on the real axis") {
        const HarmonicSeries f = HarmonicSeries::th(2, {0.5}, {0.0, 0.0});
        for (double r : {0.3, 0.6, 0.9})
            CHECK(starlike_derivative(f, {r, 0.0}) == Approx((1.0 - r) / (1.0 - r / 2.0)));
    }
    SECTION("agrees with the finite difference of arg f") {
        Rng rng(151);
        int checked = 0;
        double worst = 0.0;
        while (checked < 10000) {
            const KernelPair k = named_kernel(NamedKernel::Starlike, rng.uniform(0.0, 0.8));
            const HarmonicSeries f = random_member(k, rng, rng.uniform());
            const DiskPoint z{rng.uniform(0.05, 0.95), rng.uniform(0.0, 6.28)};
            if (std::abs(evaluate(f, z)) < 1e-3) continue;
            ++checked;
            worst = std::max(worst,
                             std::abs(starlike_derivative(f, z) - fd_arg_derivative(f, z)));
        }
        CHECK(worst <= 1e-6);
    }
    SECTION("vanishing denominator is rejected") {
        CHECK_THROWS_AS(starlike_derivative(HarmonicSeries::identity(2), {0.0, 0.0}),
                        std::domain_error);
    }
}

TEST_CASE("convex angular derivative") {
    SECTION("identity") {
        CHECK(convex_derivative(HarmonicSeries::identity(2), {0.5, 1.2}) ==
              Approx(1.0).margin(1e-6));
    }
    SECTION("analytic map: matches 1 + Re(z h''/h')") {
        const HarmonicSeries f = HarmonicSeries::th(2, {0.5}, {0.0, 0.0});  // z - z^2/2
        for (double th = 0.1; th < 6.2; th += 0.83) {
            const DiskPoint z{0.3, th};
            const Complex zc = z.point();
            const double expected = (1.0 + zc * Complex(-1.0) / (1.0 - zc)).real();
            CHECK(convex_derivative(f, z) == Approx(expected).margin(1e-6));
            CHECK(convex_derivative(f, z) > 0.0);
        }
    }
    SECTION("radius-of-convexity bracketing for z + (1-a) zbar^2") {
        const double alpha = 0.25;
        const HarmonicSeries f = HarmonicSeries::th(2, {0.0}, {0.0, 1.0 - alpha});
        const double rc = 1.0 / (4.0 * (1.0 - alpha));
        bool negative_above = false;
        for (double th = 0.0; th < 6.3; th += 0.01)
            if (convex_derivative(f, {rc * 1.05, th}) < 0.0) negative_above = true;
        CHECK(negative_above);
        bool negative_below = false;
        for (double th = 0.0; th < 6.3; th += 0.01)
            if (convex_derivative(f, {rc * 0.95, th}) < 0.0) negative_below = true;
        CHECK_FALSE(negative_below);
    }
}

TEST_CASE("radius search") {
    SECTION("extremal function of the u class") {
        const double alpha = 0.25;
        const HarmonicSeries f = HarmonicSeries::th(2, {0.0}, {0.0, 1.0 - alpha});
        CHECK(radius_search(f, RadiusProperty::Jacobian) ==
              Approx(1.0 / (2.0 * (1.0 - alpha))).margin(1e-3));
        CHECK(radius_search(f, RadiusProperty::Convex, 0.0) ==
              Approx(1.0 / (4.0 * (1.0 - alpha))).margin(1e-3));
        CHECK(radius_search(f, RadiusProperty::Starlike, 0.0) ==
              Approx(1.0 / (2.0 * (1.0 - alpha))).margin(1e-3));
    }
    SECTION("identity never fails") {
        CHECK(radius_search(HarmonicSeries::identity(2), RadiusProperty::Jacobian) ==
              Approx(1.0 - 1e-6));
    }
    SECTION("non-bracketing input throws") {
        const HarmonicSeries f(Convention::General, 2, {Complex(0.0)},
                               {Complex(2.0), Complex(0.0)});  // |g'| = 2 everywhere
        CHECK_THROWS_AS(radius_search(f, RadiusProperty::Jacobian), std::domain_error);
    }
}

TEST_CASE("half-plane map") {
    const HarmonicSeries L = halfplane_map(60);
    CHECK(L.analytic_coeff(2).real() == Approx(1.5));
    CHECK(L.coanalytic_coeff(2).real() == Approx(-0.5));
    CHECK(L.coanalytic_coeff(1) == Complex(0.0));
    REQUIRE(halfplane_truncation_bound(60, 0.5) < 1e-10);
    CHECK(std::abs(evaluate(L, {0.5, 0.0}) - halfplane_map_value(Complex(0.5))) < 1e-8);
}

TEST_CASE("figure-one scan certifies the counterexample") {
    GridSpec g;
    g.radii = 40;
    g.angles = 72;
    g.r_max = 0.98;
    const Figure1Scan scan = figure1_scan(300, g);
    CHECK(scan.min_stat < 0.0);
    CHECK(scan.worst.r >= 0.9);
    CHECK(scan.samples.size() == static_cast<std::size_t>(g.radii * g.angles));
    // normalization: L(z)/z -> 1 at the origin
    CHECK((halfplane_map_value(Complex(1e-6)) / Complex(1e-6)).real() == Approx(1.0).margin(1e-4));
    // order-300 series tracks the closed form wherever the tail bound is tiny
    CHECK(scan.agreement_points > 0);
    CHECK(scan.agreement_max < 1e-6);
    CHECK(scan.agreement_r_max > 0.85);
}

TEST_CASE("coefficient-sum sharpness shows up in the angular derivative") {
    // f = z + (lambda/2) zbar^2 has min angular derivative 2(1-lr)/(2+lr) at
    // theta = 0; at r = 0.999 this sits within 5e-3 of the sharp order
    for (double lambda : {0.25, 0.5, 1.0}) {
        const HarmonicSeries f = HarmonicSeries::th(2, {0.0}, {0.0, lambda / 2.0});
        double minimum = 1e9;
        const GridSpec g = small_grid();
        for (double r : g.radius_samples())
            for (double th : g.angle_samples())
                minimum = std::min(minimum, starlike_derivative(f, {r, th}));
        const double sharp = 2.0 * (1.0 - lambda) / (2.0 + lambda);
        CHECK(minimum == Approx(sharp).margin(5e-3));
        CHECK(minimum >= sharp - 1e-12);  // approached from above
    }
}

TEST_CASE("certified starlike functions pass the geometric checks") {
    Rng rng(157);
    const KernelPair k = named_kernel(NamedKernel::Convex, 0.0);
    for (int trial = 0; trial < 8; ++trial) {
        const HarmonicSeries f = random_member(k, rng, rng.uniform());
        const StarlikeCertificate cert = starlike_univalence_certificate(f, k);
        REQUIRE(cert.certified);
        const auto [min_j, at] = sense_preserving_check(f, small_grid());
        CHECK(min_j > 0.0);
        double min_star = 1e9;
        const GridSpec g = small_grid();
        for (double r : g.radius_samples())
            for (double th : g.angle_samples())
                min_star = std::min(min_star, starlike_derivative(f, {r, th}));
        CHECK(min_star > -1e-9);
    }
}

TEST_CASE("growth envelope contains every member") {
    // |f(z)| <= c1 r + c2 r^2 pointwise and, at each sampled radius, the
    // angular minimum stays above d1 r - d2 r^2 (members drawn with B_1 = 0)
    Rng rng(167);
    GridSpec g;
    g.radii = 16;
    g.angles = 64;
    const std::vector<double> radii = g.radius_samples();
    const std::vector<double> angles = g.angle_samples();
    MemberDrawOptions opts;
    opts.zero_b1 = true;
    for (const NamedKernel name : {NamedKernel::Starlike, NamedKernel::Convex, NamedKernel::U}) {
        double worst_over = 0.0, worst_under = 0.0;
        for (int trial = 0; trial < 1000; ++trial) {
            const KernelPair k = named_kernel(name, rng.uniform(0.0, 0.9));
            const HarmonicSeries f = random_member(k, rng, rng.uniform(), opts);
            const GrowthBounds bounds = growth_and_covering(k, 0.0);
            for (double r : radii) {
                double lo = 1e9;
                for (double th : angles) {
                    const double value = std::abs(evaluate(f, {r, th}));
                    worst_over = std::max(
                        value - (bounds.upper_c1 * r + bounds.upper_c2 * r * r), worst_over);
                    lo = std::min(lo, value);
                }
                worst_under = std::max(
                    (bounds.lower_d1 * r - bounds.lower_d2 * r * r) - lo, worst_under);
            }
        }
        CHECK(worst_over <= 1e-9);
        CHECK(worst_under <= 1e-9);
    }
}

TEST_CASE("grid validation") {
    GridSpec g;
    g.radii = 4;
    CHECK_THROWS_AS(g.require_valid(), std::invalid_argument);
    g.radii = 64;
    g.r_max = 1.0;
    CHECK_THROWS_AS(g.require_valid(), std::invalid_argument);
    g.r_max = 0.999;
    CHECK_NOTHROW(g.require_valid());
}
