#pragma once

// Independent numerical ground truth: evaluates the defining inequality on
// disk grids, checks sense-preservation and the angular derivatives behind
// full starlikeness/convexity, searches property radii, and reproduces the
// half-plane-map counterexample scan.

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "convharm/kernels.hpp"
#include "convharm/series.hpp"

namespace convharm {

inline constexpr double kDegenerateTol = 1e-12;

struct FocusRegion {
    double r_lo = 0.0, r_hi = 0.0;
    double theta_lo = 0.0, theta_hi = 0.0;
};

struct GridSpec {
    int radii = 64;
    double r_max = 0.999;
    int angles = 720;
    int refine_rounds = 3;
    std::optional<FocusRegion> focus;

    void require_valid() const {
        if (radii < 8 || angles < 8)
            throw std::invalid_argument("GridSpec: radii and angles must be >= 8");
        if (!(r_max > 0.0) || r_max > 1.0 - 1e-6)
            throw std::invalid_argument("GridSpec: r_max must lie in (0, 1 - 1e-6]");
        if (refine_rounds < 0)
            throw std::invalid_argument("GridSpec: refine_rounds must be >= 0");
    }

    // Radii clustered toward r_max, where the interesting behavior lives.
    std::vector<double> radius_samples() const {
        std::vector<double> out(static_cast<std::size_t>(radii));
        const double pi = 3.14159265358979323846;
        for (int k = 0; k < radii; ++k)
            out[static_cast<std::size_t>(k)] =
                r_max * std::sin(0.5 * pi * (k + 1) / static_cast<double>(radii));
        return out;
    }

    std::vector<double> angle_samples() const {
        std::vector<double> out(static_cast<std::size_t>(angles));
        const double two_pi = 6.28318530717958647692;
        for (int k = 0; k < angles; ++k)
            out[static_cast<std::size_t>(k)] = two_pi * k / static_cast<double>(angles);
        return out;
    }
};

struct StatMinimum {
    double value = std::numeric_limits<double>::infinity();
    DiskPoint at;

    void merge(double v, const DiskPoint& z) {
        if (v < value) {
            value = v;
            at = z;
        }
    }
};

struct OracleReport {
    StatMinimum re_ratio;   // min of Re((f*Phi)/(f*Psi)) - alpha
    StatMinimum jacobian;   // min of |h'|^2 - |g'|^2
    StatMinimum starlike;   // min of the angular derivative of arg f
    StatMinimum convex;     // min of the angular derivative of arg f_theta
    long skipped_ratio = 0;   // |f*Psi| below the degeneracy tolerance
    long skipped_angular = 0; // |f| or |f_theta| below it
    long points = 0;
    GridSpec grid;
};

// d/dtheta arg f(re^itheta) via the analytic identity
// Re[(z h' - conj(z g')) / f].
inline double starlike_derivative(const HarmonicSeries& f, const DiskPoint& zp) {
    const Complex value = evaluate(f, zp);
    if (std::abs(value) < kDegenerateTol)
        throw std::domain_error("starlike_derivative: f vanishes at the sample point");
    const WirtingerDerivatives d = wirtinger_derivatives(f, zp);
    const Complex z = zp.point();
    return ((z * d.h_prime - std::conj(z * d.g_prime)) / value).real();
}

namespace detail {

// f_theta = i (z h' - conj(z g')), the tangent direction of the image circle.
inline Complex angular_tangent(const HarmonicSeries& f, const DiskPoint& zp) {
    const WirtingerDerivatives d = wirtinger_derivatives(f, zp);
    const Complex z = zp.point();
    return Complex(0.0, 1.0) * (z * d.h_prime - std::conj(z * d.g_prime));
}

inline double wrap_angle(double a) {
    const double pi = 3.14159265358979323846;
    while (a > pi) a -= 2.0 * pi;
    while (a <= -pi) a += 2.0 * pi;
    return a;
}

}  // namespace detail

// d/dtheta arg(f_theta) by a second-order central difference with
// nearest-branch unwrapping; step fixed at 1e-5 radians.
inline double convex_derivative(const HarmonicSeries& f, const DiskPoint& zp) {
    constexpr double step = 1e-5;
    const Complex center = detail::angular_tangent(f, zp);
    if (std::abs(center) < kDegenerateTol)
        throw std::domain_error("convex_derivative: vanishing angular derivative");
    const Complex fwd = detail::angular_tangent(f, {zp.r, zp.theta + step});
    const Complex bwd = detail::angular_tangent(f, {zp.r, zp.theta - step});
    if (std::abs(fwd) < kDegenerateTol || std::abs(bwd) < kDegenerateTol)
        throw std::domain_error("convex_derivative: vanishing angular derivative");
    const double d = detail::wrap_angle(std::arg(fwd) - std::arg(bwd));
    return d / (2.0 * step);
}

namespace detail {

struct ConvolvedPair {
    HarmonicSeries numerator;    // f * Phi
    HarmonicSeries denominator;  // f * Psi
};

inline ConvolvedPair convolve_with_kernels(const HarmonicSeries& f, const KernelPair& k) {
    return {harmonic_convolution(f, k.materialize(KernelPart::Phi, f.order())),
            harmonic_convolution(f, k.materialize(KernelPart::Psi, f.order()))};
}

inline void scan_point(const HarmonicSeries& f, const ConvolvedPair& pair, double alpha,
                       const DiskPoint& z, OracleReport& report) {
    ++report.points;

    const Complex den = evaluate(pair.denominator, z);
    if (std::abs(den) < kDegenerateTol) {
        ++report.skipped_ratio;
    } else {
        const Complex num = evaluate(pair.numerator, z);
        report.re_ratio.merge((num / den).real() - alpha, z);
    }

    const WirtingerDerivatives d = wirtinger_derivatives(f, z);
    report.jacobian.merge(std::norm(d.h_prime) - std::norm(d.g_prime), z);

    const Complex value = evaluate(f, z);
    const Complex zc = z.point();
    const Complex tangent = zc * d.h_prime - std::conj(zc * d.g_prime);
    if (std::abs(value) < kDegenerateTol) {
        ++report.skipped_angular;
    } else {
        report.starlike.merge((tangent / value).real(), z);
    }

    constexpr double step = 1e-5;
    const Complex a0 = Complex(0.0, 1.0) * tangent;
    if (std::abs(a0) < kDegenerateTol) {
        ++report.skipped_angular;
    } else {
        const Complex fwd = angular_tangent(f, {z.r, z.theta + step});
        const Complex bwd = angular_tangent(f, {z.r, z.theta - step});
        if (std::abs(fwd) < kDegenerateTol || std::abs(bwd) < kDegenerateTol) {
            ++report.skipped_angular;
        } else {
            const double dd = wrap_angle(std::arg(fwd) - std::arg(bwd));
            report.convex.merge(dd / (2.0 * step), z);
        }
    }
}

inline void scan_rectangle(const HarmonicSeries& f, const ConvolvedPair& pair, double alpha,
                           double r_lo, double r_hi, double th_lo, double th_hi, int steps,
                           OracleReport& report) {
    for (int ri = 0; ri <= steps; ++ri) {
        const double r = r_lo + (r_hi - r_lo) * ri / static_cast<double>(steps);
        if (r <= 0.0) continue;
        for (int ti = 0; ti <= steps; ++ti) {
            const double th = th_lo + (th_hi - th_lo) * ti / static_cast<double>(steps);
            scan_point(f, pair, alpha, {r, th}, report);
        }
    }
}

}  // namespace detail

// Pointwise minimum statistics of the defining inequality and the geometric
// derivatives over the grid, with refinement rounds around the worst ratio
// point. Degenerate denominators are skipped and counted.
inline OracleReport check_defining_inequality(const HarmonicSeries& f, const KernelPair& k,
                                              const GridSpec& grid) {
    grid.require_valid();
    const detail::ConvolvedPair pair = detail::convolve_with_kernels(f, k);
    OracleReport report;
    report.grid = grid;

    const std::vector<double> radii = grid.radius_samples();
    const std::vector<double> angles = grid.angle_samples();
    for (double r : radii)
        for (double th : angles) detail::scan_point(f, pair, k.alpha(), {r, th}, report);

    if (grid.focus)
        detail::scan_rectangle(f, pair, k.alpha(), grid.focus->r_lo, grid.focus->r_hi,
                               grid.focus->theta_lo, grid.focus->theta_hi, 24, report);

    if (report.points == report.skipped_ratio)
        throw std::domain_error("check_defining_inequality: every grid point had a degenerate "
                                "denominator");

    double dr = grid.r_max / grid.radii;
    double dth = 6.28318530717958647692 / grid.angles;
    for (int round = 0; round < grid.refine_rounds; ++round) {
        const DiskPoint worst = report.re_ratio.at;
        const double r_lo = std::max(worst.r - dr, 1e-6);
        const double r_hi = std::min(worst.r + dr, grid.r_max);
        detail::scan_rectangle(f, pair, k.alpha(), r_lo, r_hi, worst.theta - dth,
                               worst.theta + dth, 16, report);
        dr *= 0.5;
        dth *= 0.5;
    }
    return report;
}

// Minimum Jacobian |h'|^2 - |g'|^2 over the grid.
inline std::pair<double, DiskPoint> sense_preserving_check(const HarmonicSeries& f,
                                                           const GridSpec& grid) {
    grid.require_valid();
    StatMinimum minimum;
    for (double r : grid.radius_samples()) {
        for (double th : grid.angle_samples()) {
            const DiskPoint z{r, th};
            const WirtingerDerivatives d = wirtinger_derivatives(f, z);
            minimum.merge(std::norm(d.h_prime) - std::norm(d.g_prime), z);
        }
    }
    return {minimum.value, minimum.at};
}

struct ViolationSearch {
    bool found = false;
    double value = 0.0;
    DiskPoint at;
    bool on_real_axis = false;
};

// Searches for a point where the defining inequality fails. Violations of the
// coefficient condition concentrate toward z = 1 on the positive real axis,
// so a dense axis scan runs first; a full refined grid is the fallback.
inline ViolationSearch find_inequality_violation(const HarmonicSeries& f, const KernelPair& k,
                                                 const GridSpec& grid) {
    grid.require_valid();
    const detail::ConvolvedPair pair = detail::convolve_with_kernels(f, k);
    ViolationSearch out;

    constexpr int kAxisSamples = 512;
    const double pi = 3.14159265358979323846;
    for (int i = 0; i < kAxisSamples; ++i) {
        const double r = grid.r_max * std::sin(0.5 * pi * (i + 1) / kAxisSamples);
        const Complex den = evaluate(pair.denominator, {r, 0.0});
        if (std::abs(den) < kDegenerateTol) continue;
        const double stat = (evaluate(pair.numerator, {r, 0.0}) / den).real() - k.alpha();
        if (stat < -kDegenerateTol && stat < out.value) {
            out.found = true;
            out.on_real_axis = true;
            out.value = stat;
            out.at = {r, 0.0};
        }
    }
    if (out.found) return out;

    const OracleReport report = check_defining_inequality(f, k, grid);
    if (report.re_ratio.value < -kDegenerateTol) {
        out.found = true;
        out.value = report.re_ratio.value;
        out.at = report.re_ratio.at;
    }
    return out;
}

enum class RadiusProperty { Jacobian, Starlike, Convex };

namespace detail {

inline bool property_holds_on_circle(const HarmonicSeries& f, RadiusProperty property,
                                     double order, double r, int angles) {
    const double two_pi = 6.28318530717958647692;
    for (int i = 0; i < angles; ++i) {
        const DiskPoint z{r, two_pi * i / static_cast<double>(angles)};
        double stat = 0.0;
        switch (property) {
            case RadiusProperty::Jacobian: {
                const WirtingerDerivatives d = wirtinger_derivatives(f, z);
                stat = std::norm(d.h_prime) - std::norm(d.g_prime);
                break;
            }
            case RadiusProperty::Starlike: {
                const Complex value = evaluate(f, z);
                if (std::abs(value) < kDegenerateTol) return false;
                stat = starlike_derivative(f, z) - order;
                break;
            }
            case RadiusProperty::Convex: {
                if (std::abs(angular_tangent(f, z)) < kDegenerateTol) return false;
                stat = convex_derivative(f, z) - order;
                break;
            }
        }
        if (!(stat > 0.0)) return false;
    }
    return true;
}

}  // namespace detail

// Largest radius (within tol) below which the property holds on every sampled
// circle, found by bisection over a 720-point angular sweep. Returns the top
// of the search interval when the property never fails; throws when it
// already fails at r = 1e-3.
inline double radius_search(const HarmonicSeries& f, RadiusProperty property,
                            double property_order = 0.0, double tol = 1e-4,
                            double r_max = 1.0 - 1e-6) {
    constexpr int kAngles = 720;
    double lo = 1e-3;
    if (!detail::property_holds_on_circle(f, property, property_order, lo, kAngles))
        throw std::domain_error("radius_search: property already fails at r = 1e-3");
    if (detail::property_holds_on_circle(f, property, property_order, r_max, kAngles))
        return r_max;
    double hi = r_max;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (detail::property_holds_on_circle(f, property, property_order, mid, kAngles))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

// The harmonic half-plane map L(z) = (z - z^2/2)/(1-z)^2 + conj(-z^2/2/(1-z)^2),
// truncated: h-coefficients (n+1)/2, g-coefficients -(n-1)/2.
inline HarmonicSeries halfplane_map(int order) {
    if (order < 2) throw std::invalid_argument("halfplane_map: order must be >= 2");
    std::vector<Complex> a(static_cast<std::size_t>(order - 1));
    std::vector<Complex> b(static_cast<std::size_t>(order));
    for (int n = 2; n <= order; ++n) {
        a[static_cast<std::size_t>(n - 2)] = (n + 1.0) / 2.0;
        b[static_cast<std::size_t>(n - 1)] = -(n - 1.0) / 2.0;
    }
    return HarmonicSeries(Convention::General, order, std::move(a), std::move(b));
}

inline Complex halfplane_map_value(Complex z) {
    const Complex d = (1.0 - z) * (1.0 - z);
    return (z - 0.5 * z * z) / d + std::conj(-0.5 * z * z / d);
}

// Exact bound on the truncation error of halfplane_map(order) at radius r:
// the missing coefficient mass is sum_{n > order} n r^n.
inline double halfplane_truncation_bound(int order, double r) {
    const double n1 = order + 1.0;
    return std::pow(r, n1) * (n1 * (1.0 - r) + r) / ((1.0 - r) * (1.0 - r));
}

struct Figure1Sample {
    double r = 0.0, theta = 0.0;
    Complex value;   // L(z)/z
    double stat = 0.0;  // Re(L(z)/z)
};

struct Figure1Scan {
    double min_stat = std::numeric_limits<double>::infinity();
    DiskPoint worst;
    std::vector<Figure1Sample> samples;
    int order = 0;
    // series-vs-closed-form agreement over the points whose truncation bound
    // is below 1e-8
    double agreement_max = 0.0;
    double agreement_r_max = 0.0;
    long agreement_points = 0;
};

// Scans Re(L(z)/z) over the grid via the closed form (the certification of
// the counterexample) and cross-checks the order-N series against it wherever
// the truncation bound allows a meaningful comparison.
inline Figure1Scan figure1_scan(int order, const GridSpec& grid) {
    grid.require_valid();
    Figure1Scan scan;
    scan.order = order;
    const HarmonicSeries series = halfplane_map(order);
    for (double r : grid.radius_samples()) {
        const bool comparable = halfplane_truncation_bound(order, r) <= 1e-8;
        for (double th : grid.angle_samples()) {
            const DiskPoint zp{r, th};
            const Complex z = zp.point();
            Figure1Sample s;
            s.r = r;
            s.theta = th;
            const Complex value = halfplane_map_value(z);
            s.value = value / z;
            s.stat = s.value.real();
            if (s.stat < scan.min_stat) {
                scan.min_stat = s.stat;
                scan.worst = zp;
            }
            if (comparable) {
                scan.agreement_max =
                    std::max(scan.agreement_max, std::abs(evaluate(series, zp) - value));
                scan.agreement_r_max = std::max(scan.agreement_r_max, r);
                ++scan.agreement_points;
            }
            scan.samples.push_back(s);
        }
    }
    return scan;
}

}  // namespace convharm
