#pragma once

// Coefficient criteria, bounds, extreme points, products and combination laws
// for the convolution-defined classes.

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "convharm/kernels.hpp"
#include "convharm/series.hpp"

namespace convharm {

// The coefficient inequality is non-strict; extreme points sit exactly at 1.
inline constexpr double kMembershipTol = 1e-12;

struct MembershipTerm {
    int n = 0;
    bool coanalytic = false;
    double weight = 0.0;       // sigma_n/(1-alpha) or Gamma_n/(1-alpha)
    double coefficient = 0.0;  // |A_n| or |B_n|
    double product = 0.0;
};

struct MembershipReport {
    double lhs = 0.0;
    double margin = 1.0;  // 1 - lhs
    bool verdict = true;
    std::vector<MembershipTerm> terms;
};

namespace detail {

inline void require_valid_kernel(const KernelPair& k, int order) {
    const KernelValidation v = k.validate(k.default_horizon(order));
    if (!v.valid)
        throw std::invalid_argument("kernel hypothesis fails at n = " +
                                    std::to_string(v.first_violation) + ": " + v.reason);
}

inline MembershipReport weighted_sum(const HarmonicSeries& f, const KernelPair& k) {
    MembershipReport report;
    for (int n = 2; n <= f.order(); ++n) {
        const double c = std::abs(f.analytic_coeff(n));
        if (c == 0.0) continue;
        const double w = k.analytic_weight(n);
        report.terms.push_back({n, false, w, c, w * c});
    }
    for (int n = 1; n <= f.order(); ++n) {
        const double c = std::abs(f.coanalytic_coeff(n));
        if (c == 0.0) continue;
        const double w = k.coanalytic_weight(n);
        report.terms.push_back({n, true, w, c, w * c});
    }
    double lhs = 0.0;
    for (const MembershipTerm& t : report.terms) lhs += t.product;
    report.lhs = lhs;
    report.margin = 1.0 - lhs;
    report.verdict = lhs <= 1.0 + kMembershipTol;
    return report;
}

}  // namespace detail

// Exact membership test for TH-form functions (necessary and sufficient):
//   sum sigma_n/(1-a) A_n + sum Gamma_n/(1-a) B_n <= 1.
inline MembershipReport condition_lhs(const HarmonicSeries& f, const KernelPair& k) {
    if (f.convention() != Convention::TH)
        throw std::invalid_argument(
            "condition_lhs: requires a TH-form series; use sufficient_condition for the "
            "general representation");
    detail::require_valid_kernel(k, f.order());
    return detail::weighted_sum(f, k);
}

// Sufficiency certificate for arbitrary coefficients: the same sum over moduli.
// A true verdict certifies membership in the full class; a false one decides nothing.
inline MembershipReport sufficient_condition(const HarmonicSeries& f, const KernelPair& k) {
    detail::require_valid_kernel(k, f.order());
    return detail::weighted_sum(f.convention() == Convention::TH ? f.to_general() : f, k);
}

// Sharp bounds A_n <= (1-a)/sigma_n (n >= 2) and B_n <= (1-a)/Gamma_n (n >= 1).
struct CoefficientBounds {
    std::optional<double> a_bound;  // absent for n = 1
    double b_bound = 0.0;
};

inline CoefficientBounds coefficient_bounds(const KernelPair& k, int n) {
    if (n < 1) throw std::invalid_argument("coefficient_bounds: n must be >= 1");
    CoefficientBounds b;
    if (n >= 2) b.a_bound = (1.0 - k.alpha()) / k.sigma(n);
    b.b_bound = (1.0 - k.alpha()) / k.gamma(n);
    return b;
}

struct GrowthBounds {
    double eta = 0.0;       // min(sigma_2, Gamma_2)
    double upper_c1 = 0.0;  // |f(z)| <= c1 |z| + c2 |z|^2
    double upper_c2 = 0.0;
    double lower_d1 = 0.0;  // |f(z)| >= d1 |z| - d2 |z|^2
    double lower_d2 = 0.0;
    double covering_radius = 0.0;  // disk |w| < covering_radius lies in f(D)
};

// Growth envelope and covering disk. B_1 is a free input, checked against its
// sharp bound; the sequences sigma_n, Gamma_n must be non-decreasing (probed
// up to the horizon).
inline GrowthBounds growth_and_covering(const KernelPair& k, double b1, int horizon = 64) {
    detail::require_valid_kernel(k, horizon);
    for (int n = 2; n < horizon; ++n) {
        if (k.sigma(n + 1) < k.sigma(n))
            throw std::domain_error("growth_and_covering: sigma_n not non-decreasing at n = " +
                                    std::to_string(n + 1));
        if (k.gamma(n + 1) < k.gamma(n))
            throw std::domain_error("growth_and_covering: Gamma_n not non-decreasing at n = " +
                                    std::to_string(n + 1));
    }
    if (k.gamma(2) < k.gamma(1))
        throw std::domain_error("growth_and_covering: Gamma_n not non-decreasing at n = 2");
    const double alpha = k.alpha();
    const double g1 = k.gamma(1);
    if (!(b1 >= 0.0) || b1 > (1.0 - alpha) / g1 + kMembershipTol)
        throw std::domain_error("growth_and_covering: B_1 exceeds its sharp bound");

    GrowthBounds out;
    out.eta = std::min(k.sigma(2), k.gamma(2));
    const double factor = (1.0 - alpha) / out.eta * (1.0 - g1 * b1 / (1.0 - alpha));
    out.upper_c1 = 1.0 + b1;
    out.lower_d1 = 1.0 - b1;
    out.upper_c2 = out.lower_d2 = std::max(factor, 0.0);
    const double cov = (out.eta - 1.0 + alpha + (g1 - out.eta) * b1) / out.eta;
    out.covering_radius = std::clamp(cov, 0.0, 1.0);
    return out;
}

enum class ExtremeKind { H, G };

// h_1 = z, h_n = z - (1-a)/sigma_n z^n, g_n = z + (1-a)/Gamma_n zbar^n.
inline HarmonicSeries extreme_point(const KernelPair& k, ExtremeKind kind, int n) {
    if (n < 1) throw std::invalid_argument("extreme_point: n must be >= 1");
    if (kind == ExtremeKind::H && n == 1) return HarmonicSeries::identity(1);
    const int order = n;
    std::vector<double> a(static_cast<std::size_t>(order - 1), 0.0);
    std::vector<double> b(static_cast<std::size_t>(order), 0.0);
    if (kind == ExtremeKind::H)
        a[static_cast<std::size_t>(n - 2)] = (1.0 - k.alpha()) / k.sigma(n);
    else
        b[static_cast<std::size_t>(n - 1)] = (1.0 - k.alpha()) / k.gamma(n);
    return HarmonicSeries::th(order, a, b);
}

// Weights of the extreme-point representation f = sum (X_n h_n + Y_n g_n).
struct ExtremeDecomposition {
    std::vector<double> x;  // x[n-1] = X_n, n = 1..order
    std::vector<double> y;  // y[n-1] = Y_n, n = 1..order
};

inline ExtremeDecomposition decompose(const HarmonicSeries& f, const KernelPair& k) {
    const MembershipReport r = condition_lhs(f, k);
    if (!r.verdict)
        throw std::invalid_argument("decompose: the series is not a member (lhs > 1)");
    ExtremeDecomposition d;
    d.x.assign(static_cast<std::size_t>(f.order()), 0.0);
    d.y.assign(static_cast<std::size_t>(f.order()), 0.0);
    double rest = 0.0;
    for (int n = 2; n <= f.order(); ++n) {
        const double xn = k.analytic_weight(n) * f.analytic_coeff(n).real();
        d.x[static_cast<std::size_t>(n - 1)] = xn;
        rest += xn;
    }
    for (int n = 1; n <= f.order(); ++n) {
        const double yn = k.coanalytic_weight(n) * f.coanalytic_coeff(n).real();
        d.y[static_cast<std::size_t>(n - 1)] = yn;
        rest += yn;
    }
    d.x[0] = 1.0 - rest;
    return d;
}

// Rebuilds sum (X_n h_n + Y_n g_n); inverse of decompose on members.
inline HarmonicSeries reconstruct(const ExtremeDecomposition& d, const KernelPair& k) {
    const int order = static_cast<int>(std::max(d.x.size(), d.y.size()));
    std::vector<double> a(static_cast<std::size_t>(std::max(order - 1, 0)), 0.0);
    std::vector<double> b(static_cast<std::size_t>(order), 0.0);
    for (int n = 2; n <= static_cast<int>(d.x.size()); ++n)
        a[static_cast<std::size_t>(n - 2)] =
            d.x[static_cast<std::size_t>(n - 1)] * (1.0 - k.alpha()) / k.sigma(n);
    for (int n = 1; n <= static_cast<int>(d.y.size()); ++n)
        b[static_cast<std::size_t>(n - 1)] =
            d.y[static_cast<std::size_t>(n - 1)] * (1.0 - k.alpha()) / k.gamma(n);
    return HarmonicSeries::th(order, a, b);
}

// Coefficientwise mixture sum t_k f_k of TH-form functions.
inline HarmonicSeries convex_combination(std::span<const HarmonicSeries> fs,
                                         std::span<const double> weights) {
    if (fs.empty() || fs.size() != weights.size())
        throw std::invalid_argument("convex_combination: need matching nonempty inputs");
    double total = 0.0;
    for (double t : weights) {
        if (t < 0.0) throw std::invalid_argument("convex_combination: negative weight");
        total += t;
    }
    if (std::abs(total - 1.0) > kMembershipTol)
        throw std::invalid_argument("convex_combination: weights must sum to 1");
    int order = 1;
    for (const HarmonicSeries& f : fs) {
        if (f.convention() != Convention::TH)
            throw std::invalid_argument("convex_combination: TH-form inputs required");
        order = std::max(order, f.order());
    }
    std::vector<double> a(static_cast<std::size_t>(order - 1), 0.0);
    std::vector<double> b(static_cast<std::size_t>(order), 0.0);
    for (std::size_t k = 0; k < fs.size(); ++k) {
        for (int n = 2; n <= fs[k].order(); ++n)
            a[static_cast<std::size_t>(n - 2)] += weights[k] * fs[k].analytic_coeff(n).real();
        for (int n = 1; n <= fs[k].order(); ++n)
            b[static_cast<std::size_t>(n - 1)] += weights[k] * fs[k].coanalytic_coeff(n).real();
    }
    return HarmonicSeries::th(order, a, b);
}

// Closure of the class under hat products with TH functions whose coefficients
// do not exceed 1: returns the report for f hat* F (verdict guaranteed when f
// is a member).
inline MembershipReport hat_product_membership(const HarmonicSeries& f, const HarmonicSeries& F,
                                               const KernelPair& k) {
    const MembershipReport base = condition_lhs(f, k);
    if (!base.verdict)
        throw std::invalid_argument("hat_product_membership: f is not a member");
    for (int n = 2; n <= F.order(); ++n)
        if (F.analytic_coeff(n).real() > 1.0 + kMembershipTol)
            throw std::invalid_argument("hat_product_membership: analytic coefficient of F "
                                        "exceeds 1 at n = " + std::to_string(n));
    for (int n = 1; n <= F.order(); ++n)
        if (F.coanalytic_coeff(n).real() > 1.0 + kMembershipTol)
            throw std::invalid_argument("hat_product_membership: co-analytic coefficient of F "
                                        "exceeds 1 at n = " + std::to_string(n));
    return condition_lhs(hat_product(f, F), k);
}

// Starlike-univalence certificate: when p_n >= n, q_n >= n on the support and
// the sufficiency sum is <= 1, the n-weighted coefficient sum is <= 1 as well,
// which places f among sense-preserving univalent maps onto a starlike domain.
struct StarlikeCertificate {
    bool hypothesis_holds = false;  // p_n >= n and q_n >= n on the support
    bool certified = false;
    double n_weighted_sum = 0.0;  // sum n(|A_n| + |B_n|)
};

inline StarlikeCertificate starlike_univalence_certificate(const HarmonicSeries& f,
                                                         const KernelPair& k) {
    StarlikeCertificate cert;
    cert.hypothesis_holds = true;
    for (int n = 2; n <= f.order(); ++n)
        if (std::abs(f.analytic_coeff(n)) > 0.0 && k.p(n) < static_cast<double>(n))
            cert.hypothesis_holds = false;
    for (int n = 1; n <= f.order(); ++n)
        if (std::abs(f.coanalytic_coeff(n)) > 0.0 && k.q(n) < static_cast<double>(n))
            cert.hypothesis_holds = false;
    double sum = 0.0;
    for (int n = 2; n <= f.order(); ++n) sum += n * std::abs(f.analytic_coeff(n));
    for (int n = 1; n <= f.order(); ++n) sum += n * std::abs(f.coanalytic_coeff(n));
    cert.n_weighted_sum = sum;
    if (!cert.hypothesis_holds) return cert;
    const MembershipReport r = sufficient_condition(f, k);
    cert.certified = r.verdict && sum <= 1.0 + kMembershipTol;
    return cert;
}

// Sharp orders of the inclusions of the convex/starlike classes into the
// Re(f/z) class (for vanishing B_1).
enum class SourceClass { StarlikeClass, ConvexClass };

inline double tu_inclusion_order(SourceClass source, double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("tu_inclusion_order: alpha must lie in [0, 1)");
    return source == SourceClass::ConvexClass ? (3.0 - alpha) / (2.0 * (2.0 - alpha))
                                              : 1.0 / (2.0 - alpha);
}

// Orders delivered by the two coefficient-sum bounds: a bound
// sum (|A_n|+|B_n|) <= lambda gives Re(f/z) > 1-lambda; the n-weighted bound
// gives order 1-lambda/2 plus starlikeness of order 2(1-lambda)/(2+lambda).
struct CoefficientSumOrders {
    double u_order_plain = 0.0;
    double u_order_weighted = 0.0;
    double starlike_order = 0.0;
};

inline CoefficientSumOrders coefficient_sum_orders(double lambda) {
    if (!(lambda > 0.0 && lambda <= 1.0))
        throw std::invalid_argument("coefficient_sum_orders: lambda must lie in (0, 1]");
    return {1.0 - lambda, 1.0 - lambda / 2.0, 2.0 * (1.0 - lambda) / (2.0 + lambda)};
}

// Radii of univalence, starlikeness and convexity of the Re(f/z) class with
// B_1 = 0, each capped at 1. The extremal function is z + (1-a) zbar^2.
struct ClassRadii {
    double univalence = 0.0;
    double starlike = 0.0;
    double convex = 0.0;
};

inline ClassRadii class_radii(double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("class_radii: alpha must lie in [0, 1)");
    const double ru = std::min(1.0, 1.0 / (2.0 * (1.0 - alpha)));
    const double rc = std::min(1.0, 1.0 / (4.0 * (1.0 - alpha)));
    return {ru, ru, rc};
}

}  // namespace convharm
