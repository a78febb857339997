// Acceptance suite: one self-contained check per criterion, each printed as a
// single pass/fail line. Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "convharm/hypergeom.hpp"
#include "convharm/io.hpp"
#include "convharm/kernels.hpp"
#include "convharm/membership.hpp"
#include "convharm/oracle.hpp"
#include "convharm/sampling.hpp"
#include "convharm/series.hpp"
#include "convharm/transforms.hpp"
#include "support/quadrature.hpp"

using namespace convharm;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& message) {
        if (!ok && pass) {
            pass = false;
            detail = message;
        }
    }
};

const std::array<NamedKernel, 3> kNamedKernels{NamedKernel::Starlike, NamedKernel::Convex,
                                               NamedKernel::U};
const std::array<double, 4> kAlphaGrid{0.0, 0.25, 0.5, 0.75};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buffer[256];
    std::snprintf(buffer, sizeof buffer, pattern, a, b, c);
    return buffer;
}

// 1. Characterization equivalence: coefficient verdict vs disk oracle on 500
//    seeded functions per named class, zero disagreements, under 60 s.
Outcome criterion_characterization() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    GridSpec grid;
    grid.radii = 32;
    grid.angles = 96;
    grid.r_max = 0.999;
    grid.refine_rounds = 2;

    Rng rng(515151);
    int disagreements = 0;
    for (const NamedKernel name : kNamedKernels) {
        for (int i = 0; i < 500; ++i) {
            const double alpha = rng.uniform(0.0, 0.9);
            const KernelPair k = named_kernel(name, alpha);
            if (i % 2 == 0) {
                const HarmonicSeries f = random_member(k, rng, rng.uniform());
                const OracleReport r = check_defining_inequality(f, k, grid);
                if (!(r.re_ratio.value > -1e-9)) ++disagreements;
            } else {
                const HarmonicSeries f = random_nonmember(k, rng, rng.uniform(1.05, 2.0));
                if (!find_inequality_violation(f, k, grid).found) ++disagreements;
            }
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(disagreements == 0, fmt("%g disagreements", disagreements));
    out.require(seconds < 60.0, fmt("runtime %.1f s exceeds 60 s", seconds));
    out.detail = fmt("1500 functions, 0 disagreements, %.1f s", seconds);
    return out;
}

// 2. Sharpness: every extreme point sits at lhs = 1 within 1e-12.
Outcome criterion_sharpness() {
    Outcome out;
    double worst = 0.0;
    for (const NamedKernel name : kNamedKernels) {
        for (const double alpha : kAlphaGrid) {
            const KernelPair k = named_kernel(name, alpha);
            for (int n = 1; n <= 50; ++n) {
                if (n >= 2) {
                    const double lhs = condition_lhs(extreme_point(k, ExtremeKind::H, n), k).lhs;
                    worst = std::max(worst, std::abs(lhs - 1.0));
                }
                const double lhs = condition_lhs(extreme_point(k, ExtremeKind::G, n), k).lhs;
                worst = std::max(worst, std::abs(lhs - 1.0));
            }
        }
    }
    out.require(worst <= 1e-12, fmt("worst |lhs - 1| = %.3e", worst));
    out.detail = fmt("h_n, g_n for n <= 50, worst |lhs - 1| = %.2e", worst);
    return out;
}

// 3. Gauss summation: closed form vs adaptive series, 100 draws.
Outcome criterion_gauss() {
    Outcome out;
    Rng rng(333);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double a = rng.uniform(0.15, 2.5);
        const double b = rng.uniform(0.15, 2.5);
        const HyperParams p(a, b, a + b + rng.uniform(0.3, 5.0));
        const double closed = gauss_sum(p);
        const double rel = std::abs(series_value_at_one(p) - closed) / closed;
        worst = std::max(worst, rel);
    }
    out.require(worst <= 1e-8, fmt("worst relative error %.3e", worst));
    const double two = gauss_sum(HyperParams(1, 1, 3));
    out.require(std::abs(two - 2.0) <= 1e-12, fmt("F(1,1,3;1) = %.15f", two));
    out.detail = fmt("100 draws, worst rel err %.2e; F(1,1,3;1) - 2 = %.2e", worst,
                     std::abs(two - 2.0));
    return out;
}

// 4. Product law of the Re(f/z) classes, boundary attained by g_2 pairs.
Outcome criterion_tu_product() {
    Outcome out;
    Rng rng(4444);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double alpha = rng.uniform(0.0, 0.95);
        const double beta = rng.uniform(0.0, 0.95);
        const HarmonicSeries f = random_member(named_kernel(NamedKernel::U, alpha), rng, rng.uniform());
        const HarmonicSeries g = random_member(named_kernel(NamedKernel::U, beta), rng, rng.uniform());
        const KernelPair target =
            named_kernel(NamedKernel::U, 1.0 - (1.0 - alpha) * (1.0 - beta));
        const double lhs = condition_lhs(hat_product(f, g), target).lhs;
        out.require(lhs <= 1.0 + 1e-12, fmt("product lhs %.15f > 1", lhs));
        worst = std::max(worst, lhs);
    }
    for (const double alpha : kAlphaGrid) {
        for (const double beta : kAlphaGrid) {
            const HarmonicSeries ga =
                extreme_point(named_kernel(NamedKernel::U, alpha), ExtremeKind::G, 2);
            const HarmonicSeries gb =
                extreme_point(named_kernel(NamedKernel::U, beta), ExtremeKind::G, 2);
            const KernelPair target =
                named_kernel(NamedKernel::U, 1.0 - (1.0 - alpha) * (1.0 - beta));
            const double lhs = condition_lhs(hat_product(ga, gb), target).lhs;
            out.require(std::abs(lhs - 1.0) <= 1e-12,
                        fmt("boundary lhs %.15f at alpha %.2f beta %.2f", lhs, alpha, beta));
        }
    }
    out.detail = fmt("200 random pairs (max lhs %.6f), boundary attained by g_2 pairs", worst);
    return out;
}

// 5. Transform preservation plus the quadrature cross-check.
Outcome criterion_transforms() {
    Outcome out;
    Rng rng(5555);
    for (int i = 0; i < 500; ++i) {
        const NamedKernel name = kNamedKernels[static_cast<std::size_t>(i % 3)];
        const KernelPair k = named_kernel(name, rng.uniform(0.0, 0.9));
        const HarmonicSeries f = random_member(k, rng, rng.uniform());
        const double before = condition_lhs(f, k).lhs;
        const double gamma = rng.uniform(-0.999, 10.0);
        const double delta = rng.uniform(-1.0, 0.9999);
        const double after_l = condition_lhs(bernardi_transform(f, gamma), k).lhs;
        const double after_g = condition_lhs(difference_quotient_transform(f, delta), k).lhs;
        out.require(after_l <= before + 1e-12, fmt("L raised lhs by %.3e", after_l - before));
        out.require(after_g <= before + 1e-12, fmt("G raised lhs by %.3e", after_g - before));
    }
    double worst_quad = 0.0;
    for (int i = 0; i < 5; ++i) {
        const int order = rng.uniform_int(3, 6);
        std::vector<Complex> a, b;
        for (int n = 2; n <= order; ++n)
            a.emplace_back(rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4));
        for (int n = 1; n <= order; ++n)
            b.emplace_back(rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4));
        const HarmonicSeries f(Convention::General, order, a, b);
        const double gamma = rng.uniform(-0.5, 5.0);
        const double delta = rng.uniform(-0.95, 0.9);
        const HarmonicSeries lf = bernardi_transform(f, gamma);
        const HarmonicSeries gf = difference_quotient_transform(f, delta);
        for (int zi = 0; zi < 10; ++zi) {
            const DiskPoint zp{rng.uniform(0.1, 0.9), rng.uniform(0.0, 6.28)};
            const Complex z = zp.point();
            worst_quad = std::max(
                worst_quad, std::abs(testing::bernardi_integral_oracle(f, z, gamma) -
                                     evaluate(lf, zp)));
            worst_quad = std::max(
                worst_quad, std::abs(testing::difference_quotient_integral_oracle(f, z, delta) -
                                     evaluate(gf, zp)));
        }
    }
    out.require(worst_quad <= 1e-9, fmt("quadrature deviation %.3e", worst_quad));
    out.detail = fmt("500 members preserved; quadrature deviation %.2e", worst_quad);
    return out;
}

// 6. Radii of the Re(f/z) class on the extremal function, within 1e-3.
Outcome criterion_radii() {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    for (const double alpha : {0.0, 0.25, 0.5}) {
        const HarmonicSeries f = HarmonicSeries::th(2, {0.0}, {0.0, 1.0 - alpha});
        const double expected_u = std::min(1.0, 1.0 / (2.0 * (1.0 - alpha)));
        const double expected_c = std::min(1.0, 1.0 / (4.0 * (1.0 - alpha)));
        const double via_jacobian = radius_search(f, RadiusProperty::Jacobian);
        const double via_starlike = radius_search(f, RadiusProperty::Starlike, 0.0);
        const double via_convex = radius_search(f, RadiusProperty::Convex, 0.0);
        out.require(std::abs(via_jacobian - expected_u) <= 1e-3,
                    fmt("jacobian radius %.5f vs %.5f at alpha %.2f", via_jacobian, expected_u,
                        alpha));
        out.require(std::abs(via_starlike - expected_u) <= 1e-3,
                    fmt("starlike radius %.5f vs %.5f at alpha %.2f", via_starlike, expected_u,
                        alpha));
        out.require(std::abs(via_convex - expected_c) <= 1e-3,
                    fmt("convex radius %.5f vs %.5f at alpha %.2f", via_convex, expected_c,
                        alpha));
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(seconds < 30.0, fmt("runtime %.1f s exceeds 30 s", seconds));
    out.detail = fmt("univalence/starlike and convexity radii within 1e-3, %.1f s", seconds);
    return out;
}

// 7. Inclusions of the convex/starlike classes into the Re(f/z) classes.
Outcome criterion_inclusions() {
    Outcome out;
    Rng rng(7777);
    MemberDrawOptions opts;
    opts.zero_b1 = true;  // the inclusions concern the B_1 = 0 subclasses
    for (int i = 0; i < 200; ++i) {
        const double alpha = rng.uniform(0.0, 0.95);
        const HarmonicSeries from_convex =
            random_member(named_kernel(NamedKernel::Convex, alpha), rng, rng.uniform(), opts);
        const HarmonicSeries from_star =
            random_member(named_kernel(NamedKernel::Starlike, alpha), rng, rng.uniform(), opts);
        const double order_convex = tu_inclusion_order(SourceClass::ConvexClass, alpha);
        const double order_star = tu_inclusion_order(SourceClass::StarlikeClass, alpha);
        const double lhs_convex =
            condition_lhs(from_convex, named_kernel(NamedKernel::U, order_convex)).lhs;
        const double lhs_star =
            condition_lhs(from_star, named_kernel(NamedKernel::U, order_star)).lhs;
        out.require(lhs_convex <= 1.0 + 1e-12, fmt("convex inclusion lhs %.15f", lhs_convex));
        out.require(lhs_star <= 1.0 + 1e-12, fmt("starlike inclusion lhs %.15f", lhs_star));
    }
    for (const double alpha : kAlphaGrid) {
        const double order_convex = tu_inclusion_order(SourceClass::ConvexClass, alpha);
        const double order_star = tu_inclusion_order(SourceClass::StarlikeClass, alpha);
        const HarmonicSeries sharp_convex =
            HarmonicSeries::th(2, {(1.0 - alpha) / (2.0 * (2.0 - alpha))}, {0.0, 0.0});
        const HarmonicSeries sharp_star =
            HarmonicSeries::th(2, {(1.0 - alpha) / (2.0 - alpha)}, {0.0, 0.0});
        const double lhs_convex =
            condition_lhs(sharp_convex, named_kernel(NamedKernel::U, order_convex)).lhs;
        const double lhs_star =
            condition_lhs(sharp_star, named_kernel(NamedKernel::U, order_star)).lhs;
        out.require(std::abs(lhs_convex - 1.0) <= 1e-12,
                    fmt("sharp convex lhs %.15f at alpha %.2f", lhs_convex, alpha));
        out.require(std::abs(lhs_star - 1.0) <= 1e-12,
                    fmt("sharp starlike lhs %.15f at alpha %.2f", lhs_star, alpha));
    }
    out.detail = "400 members pass at the stated orders; sharp functions sit at lhs = 1";
    return out;
}

// 8. Figure-1 reproduction and the series/closed-form agreement at r <= 0.98.
Outcome criterion_figure1() {
    Outcome out;
    GridSpec grid;
    grid.radii = 120;
    grid.angles = 90;
    grid.r_max = 0.98;
    grid.refine_rounds = 0;

    const Figure1Scan scan = figure1_scan(60, grid);
    out.require(scan.min_stat < 0.0, fmt("min stat %.6f not negative", scan.min_stat));
    out.require(scan.samples.size() >= 10000,
                fmt("%g samples < 10000", double(scan.samples.size())));

    // agreement between series evaluation and the closed form over the whole
    // r <= 0.98 grid, at an order whose truncation bound allows it
    const int order = 1500;
    out.require(halfplane_truncation_bound(order, grid.r_max) <= 1e-8, "tail bound too large");
    const Figure1Scan high = figure1_scan(order, grid);
    out.require(high.agreement_points ==
                    static_cast<long>(grid.radii) * static_cast<long>(grid.angles),
                "not every grid point was comparable");
    out.require(high.agreement_max <= 1e-6, fmt("agreement %.3e", high.agreement_max));
    out.detail = fmt("min Re(L/z) = %.4f over %g samples; series agreement %.2e",
                     scan.min_stat, double(scan.samples.size()), high.agreement_max);
    return out;
}

// 9. Hypergeometric criterion consistency and the analytic boundary pairs.
Outcome criterion_hypergeometric() {
    Outcome out;
    Rng rng(999);
    int boundary_cases = 0;
    for (int i = 0; i < 50; ++i) {
        const NamedKernel name = kNamedKernels[static_cast<std::size_t>(i % 3)];
        const int degree = name == NamedKernel::Convex ? 2 : (name == NamedKernel::Starlike ? 1 : 0);
        const double alpha = rng.uniform(0.0, 0.8);
        const KernelPair k = named_kernel(name, alpha);
        const double a1 = rng.uniform(0.3, 1.4), b1 = rng.uniform(0.3, 1.4);
        const double a2 = rng.uniform(0.3, 1.4), b2 = rng.uniform(0.3, 1.4);
        const HyperParams p1(a1, b1, a1 + b1 + degree + rng.uniform(1.3, 3.0));
        const HyperParams p2(a2, b2, a2 + b2 + degree + rng.uniform(1.3, 3.0));

        const CriterionReport crit = criterion_phi(p1, p2, k);
        const MembershipReport mem = condition_lhs(th_from_pair(build_phi_pair(p1, p2, 200)), k);

        // independent partial sum of the same series to order 200
        double direct = 0.0;
        double hyper = p1.a * p1.b / p1.c;
        for (int n = 2; n <= 200; ++n) {
            direct += k.analytic_weight(n) * hyper;
            hyper *= (p1.a + n - 1) * (p1.b + n - 1) / ((p1.c + n - 1) * n);
        }
        hyper = p2.a * p2.b / p2.c;
        for (int n = 1; n <= 200; ++n) {
            direct += k.coanalytic_weight(n) * hyper;
            hyper *= (p2.a + n) * (p2.b + n) / ((p2.c + n) * (n + 1.0));
        }
        out.require(std::abs(direct - mem.lhs) <= 1e-9 * (1.0 + direct),
                    fmt("materialized sum %.12f vs direct %.12f", mem.lhs, direct));

        const double truncated_mass = (crit.lhs - mem.lhs) + crit.tail_bound;
        out.require(mem.lhs <= crit.lhs + 1e-9, "truncation added mass");
        if (std::abs(crit.lhs - 1.0) > truncated_mass + 1e-9) {
            out.require(crit.verdict == mem.verdict, "verdicts disagree outside the tail band");
        } else {
            ++boundary_cases;
        }
    }
    const ProductCondition phi = product_condition_phi(HyperParams(1, 1, 4), HyperParams(1, 1, 4));
    out.require(std::abs(phi.sum - 3.0) <= 1e-12 && phi.verdict,
                fmt("phi boundary sum %.15f", phi.sum));
    const ProductCondition psi = product_condition_psi(HyperParams(1, 1, 3), HyperParams(1, 1, 3));
    out.require(std::abs(psi.sum - 4.0) <= 1e-12 && psi.verdict,
                fmt("psi boundary sum %.15f", psi.sum));
    out.detail = fmt("50 draws consistent (%g within the tail band); boundary sums exact",
                     double(boundary_cases));
    return out;
}

// 10. Coefficient-sum sharpness through the angular derivative.
Outcome criterion_sum_sharpness() {
    Outcome out;
    for (const double lambda : {0.25, 0.5, 1.0}) {
        const HarmonicSeries f = HarmonicSeries::th(2, {0.0}, {0.0, lambda / 2.0});
        double minimum = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 720; ++i)
            minimum = std::min(minimum,
                               starlike_derivative(f, {0.999, 6.283185307179586 * i / 720.0}));
        const double sharp = 2.0 * (1.0 - lambda) / (2.0 + lambda);
        out.require(std::abs(minimum - sharp) <= 5e-3,
                    fmt("min %.6f vs order %.6f at lambda %.2f", minimum, sharp, lambda));
    }
    out.detail = "minimum angular derivative at r = 0.999 within 5e-3 of 2(1-l)/(2+l)";
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"characterization equivalence (coefficient test vs disk oracle)",
         criterion_characterization},
        {"extreme-point sharpness (lhs = 1 within 1e-12)", criterion_sharpness},
        {"gauss summation (closed form vs adaptive series)", criterion_gauss},
        {"product law of the Re(f/z) classes", criterion_tu_product},
        {"integral-transform preservation and quadrature oracle", criterion_transforms},
        {"radii of univalence/starlikeness/convexity", criterion_radii},
        {"inclusion orders into the Re(f/z) classes", criterion_inclusions},
        {"figure-1 counterexample scan", criterion_figure1},
        {"hypergeometric criteria consistency", criterion_hypergeometric},
        {"coefficient-sum sharpness", criterion_sum_sharpness},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        if (!outcome.pass) ++failures;
        std::printf("[%s] criterion %2zu: %s (%s)\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), outcome.detail.c_str());
        std::fflush(stdout);
    }
    if (failures == 0)
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures;
}
