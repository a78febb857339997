#pragma once

// The two integral transforms of the theory, implemented as coefficient
// multipliers (quadrature exists only as a test oracle). Both multipliers lie
// in [0, 1] and fix the leading coefficient, so class membership is preserved.

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "convharm/series.hpp"

namespace convharm {

struct MultiplierSequence {
    std::string label;
    std::function<double(int)> m;  // m(1) must equal 1
};

// Coefficientwise multiply both families by m(n); convention preserved.
inline HarmonicSeries apply_multiplier(const HarmonicSeries& f, const MultiplierSequence& t) {
    std::vector<Complex> a(static_cast<std::size_t>(f.order() - 1));
    std::vector<Complex> b(static_cast<std::size_t>(f.order()));
    for (int n = 2; n <= f.order(); ++n)
        a[static_cast<std::size_t>(n - 2)] = t.m(n) * f.analytic_coeff(n);
    for (int n = 1; n <= f.order(); ++n)
        b[static_cast<std::size_t>(n - 1)] = t.m(n) * f.coanalytic_coeff(n);
    return HarmonicSeries(f.convention(), f.order(), std::move(a), std::move(b));
}

// Bernardi-type transform: multiplier (gamma+1)/(gamma+n), gamma > -1.
inline MultiplierSequence bernardi_multiplier(double gamma) {
    if (!(gamma > -1.0))
        throw std::invalid_argument("bernardi_multiplier: requires gamma > -1");
    return {"L[gamma=" + std::to_string(gamma) + "]",
            [gamma](int n) { return (gamma + 1.0) / (gamma + n); }};
}

// Difference-quotient transform: multiplier (1 - delta^n)/((1 - delta) n),
// -1 <= delta < 1. delta^n by repeated multiplication; pow drifts for
// negative delta.
inline MultiplierSequence difference_quotient_multiplier(double delta) {
    if (!(delta >= -1.0 && delta < 1.0))
        throw std::invalid_argument("difference_quotient_multiplier: requires -1 <= delta < 1");
    return {"G[delta=" + std::to_string(delta) + "]", [delta](int n) {
                double dn = 1.0;
                for (int k = 0; k < n; ++k) dn *= delta;
                return (1.0 - dn) / ((1.0 - delta) * n);
            }};
}

inline HarmonicSeries bernardi_transform(const HarmonicSeries& f, double gamma) {
    return apply_multiplier(f, bernardi_multiplier(gamma));
}

inline HarmonicSeries difference_quotient_transform(const HarmonicSeries& f, double delta) {
    return apply_multiplier(f, difference_quotient_multiplier(delta));
}

// TH-form function whose hat product with f reproduces the transform:
//   z - sum m(n) z^n + sum m(n) zbar^n.
inline HarmonicSeries as_hat_kernel(const MultiplierSequence& t, int order) {
    if (order < 1) throw std::invalid_argument("as_hat_kernel: order must be >= 1");
    std::vector<double> a(static_cast<std::size_t>(order - 1));
    std::vector<double> b(static_cast<std::size_t>(order));
    for (int n = 2; n <= order; ++n) a[static_cast<std::size_t>(n - 2)] = t.m(n);
    for (int n = 1; n <= order; ++n) b[static_cast<std::size_t>(n - 1)] = t.m(n);
    return HarmonicSeries::th(order, a, b);
}

}  // namespace convharm
