#pragma once

// Gaussian hypergeometric machinery: partial sums of 2F1, the closed form at
// z = 1, the two hypergeometric harmonic constructions and every criterion
// built on them.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "convharm/kernels.hpp"
#include "convharm/membership.hpp"
#include "convharm/series.hpp"

namespace convharm {

// Log-gamma for x > 0, Lanczos approximation (g = 7, 9 terms). Relative error
// is a few ulp on (0, 50]; validated against factorials in the test suite.
inline double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");
    static constexpr double coeff[9] = {
        0.99999999999980993,  676.5203681218851,   -1259.1392167224028,
        771.32342877765313,   -176.61502916214059, 12.507343278686905,
        -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    if (x < 0.5) {
        // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        const double pi = 3.14159265358979323846;
        return std::log(pi / std::sin(pi * x)) - log_gamma(1.0 - x);
    }
    const double z = x - 1.0;
    double acc = coeff[0];
    for (int i = 1; i < 9; ++i) acc += coeff[i] / (z + i);
    const double t = z + 7.5;
    return 0.5 * std::log(2.0 * 3.14159265358979323846) + (z + 0.5) * std::log(t) - t +
           std::log(acc);
}

// Rising factorial (theta)_n by running product.
inline double pochhammer(double theta, int n) {
    if (n < 0) throw std::invalid_argument("pochhammer: n must be >= 0");
    double out = 1.0;
    for (int k = 0; k < n; ++k) out *= theta + k;
    return out;
}

struct HyperParams {
    double a, b, c;

    HyperParams(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
        if (!(a > 0.0 && b > 0.0 && c > 0.0))
            throw std::invalid_argument("HyperParams: parameters must be positive");
    }

    double convergence_margin() const { return c - a - b; }
};

// Partial sum of F(a,b,c;z) to N terms via the term-ratio recurrence.
inline Complex hyper2f1_partial(const HyperParams& p, Complex z, int terms) {
    if (std::abs(z) >= 1.0)
        throw std::domain_error("hyper2f1_partial: |z| must be < 1");
    Complex sum(1.0);
    Complex term(1.0);
    for (int n = 0; n < terms; ++n) {
        term *= (p.a + n) * (p.b + n) / ((p.c + n) * (1.0 + n)) * z;
        sum += term;
    }
    return sum;
}

// Gauss's summation: F(a,b,c;1) = G(c) G(c-a-b) / (G(c-a) G(c-b)), c-a-b > 0.
inline double gauss_sum(const HyperParams& p) {
    if (!(p.convergence_margin() > 0.0))
        throw std::domain_error("gauss_sum: requires c - a - b > 0");
    return std::exp(log_gamma(p.c) + log_gamma(p.c - p.a - p.b) - log_gamma(p.c - p.a) -
                    log_gamma(p.c - p.b));
}

// F(a,b,c;1) summed directly. Terms decay like n^(-1-s) with s = c-a-b. For
// comfortable margins the raw sum converges; for small s it is accelerated by
// Richardson extrapolation in the known tail powers s, s+1, ..., doubling the
// base length until two extrapolation towers agree.
inline double series_value_at_one(const HyperParams& p, double rel_tol = 1e-9) {
    const double s = p.convergence_margin();
    if (!(s > 0.0)) throw std::domain_error("series_value_at_one: requires c - a - b > 0");
    if (s > 2.5) {
        // tail(N) ~ term(N) * N / s: stop once it is negligible
        double sum = 1.0, term = 1.0;
        for (int n = 0; n < 4000000; ++n) {
            term *= (p.a + n) * (p.b + n) / ((p.c + n) * (1.0 + n));
            sum += term;
            if (term * (n + 1.0) / s < 0.1 * rel_tol * sum) break;
        }
        return sum;
    }
    auto richardson_tower = [&](int base) {
        // partial sums at base, 2 base, ..., 16 base
        double sums[5];
        double sum = 1.0, term = 1.0;
        int next = base, idx = 0;
        for (int n = 0; n < 16 * base; ++n) {
            term *= (p.a + n) * (p.b + n) / ((p.c + n) * (1.0 + n));
            sum += term;
            if (n + 1 == next) {
                sums[idx++] = sum;
                next *= 2;
            }
        }
        // S_N = S - c1 N^-s - c2 N^-(s+1) - ...: eliminate four tail powers
        double level[5];
        for (int i = 0; i < 5; ++i) level[i] = sums[i];
        for (int lev = 0; lev < 4; ++lev) {
            const double w = std::pow(2.0, s + lev);
            for (int i = 0; i < 4 - lev; ++i)
                level[i] = (w * level[i + 1] - level[i]) / (w - 1.0);
        }
        return level[0];
    };
    double value = richardson_tower(400);
    for (int base = 800; base <= 51200; base *= 2) {
        const double refined = richardson_tower(base);
        if (std::abs(refined - value) <= 0.2 * rel_tol * std::abs(refined)) return refined;
        value = refined;
    }
    return value;
}

// Coefficient sequences of the two analytic pieces, indexed by the power of z
// (entry n-1 holds the coefficient of z^n).
struct AnalyticPair {
    std::vector<double> first;
    std::vector<double> second;
};

// phi_1(z) = z F(a1,b1,c1;z), phi_2(z) = F(a2,b2,c2;z) - 1.
inline AnalyticPair build_phi_pair(const HyperParams& p1, const HyperParams& p2, int order) {
    if (order < 1) throw std::invalid_argument("build_phi_pair: order must be >= 1");
    AnalyticPair out;
    out.first.resize(static_cast<std::size_t>(order), 0.0);
    out.second.resize(static_cast<std::size_t>(order), 0.0);
    double t1 = 1.0;  // (a1)_{n-1} (b1)_{n-1} / ((c1)_{n-1} (1)_{n-1})
    for (int n = 1; n <= order; ++n) {
        out.first[static_cast<std::size_t>(n - 1)] = t1;
        t1 *= (p1.a + n - 1) * (p1.b + n - 1) / ((p1.c + n - 1) * n);
    }
    double t2 = 1.0;  // (a2)_n (b2)_n / ((c2)_n (1)_n)
    for (int n = 1; n <= order; ++n) {
        t2 *= (p2.a + n - 1) * (p2.b + n - 1) / ((p2.c + n - 1) * n);
        out.second[static_cast<std::size_t>(n - 1)] = t2;
    }
    return out;
}

// psi_k(z) = integral of F (resp. F - 1) from 0 to z, termwise.
inline AnalyticPair build_psi_pair(const HyperParams& p1, const HyperParams& p2, int order) {
    if (order < 1) throw std::invalid_argument("build_psi_pair: order must be >= 1");
    const AnalyticPair phi = build_phi_pair(p1, p2, order);
    AnalyticPair out;
    out.first.resize(static_cast<std::size_t>(order), 0.0);
    out.second.resize(static_cast<std::size_t>(order), 0.0);
    out.first[0] = 1.0;
    for (int n = 2; n <= order; ++n) {
        // phi_1 coefficient (a)_{n-1}(b)_{n-1}/((c)_{n-1}(1)_{n-1}) gains 1/n
        out.first[static_cast<std::size_t>(n - 1)] =
            phi.first[static_cast<std::size_t>(n - 1)] / n;
        // psi_2 at z^n integrates the z^{n-1} term of F - 1
        out.second[static_cast<std::size_t>(n - 1)] =
            phi.second[static_cast<std::size_t>(n - 2)] / n;
    }
    return out;
}

// phi_1 + conj(phi_2) in the general representation.
inline HarmonicSeries harmonic_from_pair(const AnalyticPair& pair) {
    const int order = static_cast<int>(pair.first.size());
    std::vector<Complex> a(static_cast<std::size_t>(order - 1));
    std::vector<Complex> b(pair.second.begin(), pair.second.end());
    for (int n = 2; n <= order; ++n)
        a[static_cast<std::size_t>(n - 2)] = pair.first[static_cast<std::size_t>(n - 1)];
    return HarmonicSeries(Convention::General, order, std::move(a), std::move(b));
}

// 2z - phi_1 + conj(phi_2) in TH form (all hypergeometric coefficients are
// positive, so the magnitudes are exactly the pair entries).
inline HarmonicSeries th_from_pair(const AnalyticPair& pair) {
    const int order = static_cast<int>(pair.first.size());
    std::vector<double> a(static_cast<std::size_t>(std::max(order - 1, 0)));
    for (int n = 2; n <= order; ++n)
        a[static_cast<std::size_t>(n - 2)] = pair.first[static_cast<std::size_t>(n - 1)];
    return HarmonicSeries::th(order, a, pair.second);
}

struct CriterionReport {
    double lhs = 0.0;
    double tail_bound = 0.0;
    double threshold = 1.0;
    bool verdict = false;
    long terms_used = 0;
};

namespace detail {

// Adaptive sum of w(n) * hyper_term(n) for n >= start. hyper_ratio(n) is the
// factor taking term n to term n+1. Terminates when the term is negligible
// and the ratio is safely below 1; otherwise runs to the horizon and reports
// a geometric tail bound. Ratios still >= 1 at the horizon mean divergence.
template <typename WeightFn, typename RatioFn>
void criterion_sum(WeightFn weight, double first_hyper_term, RatioFn hyper_ratio, int start,
                   CriterionReport& report) {
    constexpr int kHorizon = 100000;
    double hyper = first_hyper_term;
    double sum = 0.0;
    int n = start;
    double term = weight(n) * hyper;
    double ratio = 1.0;
    while (n < kHorizon) {
        sum += term;
        const double next_hyper = hyper * hyper_ratio(n);
        const double next_term = weight(n + 1) * next_hyper;
        ratio = term > 0.0 ? next_term / term : 0.0;
        hyper = next_hyper;
        term = next_term;
        ++n;
        if (term < 1e-14 * sum && ratio <= 1.0 - 1e-3) break;
    }
    if (ratio >= 1.0)
        throw std::domain_error("criterion sum diverges: term ratio >= 1 at the horizon");
    report.lhs += sum;
    report.tail_bound += term / (1.0 - ratio);
    report.terms_used += n - start;
}

}  // namespace detail

// Coefficient criterion for the hypergeometric harmonic function built from
// phi_1, phi_2 (exact membership for 2z - phi_1 + conj(phi_2) in TH form, a
// sufficiency certificate for phi_1 + conj(phi_2)).
inline CriterionReport criterion_phi(const HyperParams& p1, const HyperParams& p2,
                                     const KernelPair& k) {
    detail::require_valid_kernel(k, 64);
    CriterionReport report;
    detail::criterion_sum([&k](int n) { return k.analytic_weight(n); },
                          p1.a * p1.b / p1.c,
                          [&p1](int n) {
                              return (p1.a + n - 1) * (p1.b + n - 1) /
                                     ((p1.c + n - 1) * static_cast<double>(n));
                          },
                          2, report);
    detail::criterion_sum([&k](int n) { return k.coanalytic_weight(n); },
                          p2.a * p2.b / p2.c,
                          [&p2](int n) {
                              return (p2.a + n) * (p2.b + n) /
                                     ((p2.c + n) * (n + 1.0));
                          },
                          1, report);
    report.threshold = 1.0;
    report.verdict = report.lhs <= 1.0 + kMembershipTol;
    return report;
}

// Same criterion with the integrated coefficients of psi_1, psi_2 (both sums
// start at n = 2; the displayed co-analytic series has no n = 1 term).
inline CriterionReport criterion_psi(const HyperParams& p1, const HyperParams& p2,
                                     const KernelPair& k) {
    detail::require_valid_kernel(k, 64);
    CriterionReport report;
    detail::criterion_sum([&k](int n) { return k.analytic_weight(n); },
                          p1.a * p1.b / (2.0 * p1.c),
                          [&p1](int n) {
                              return (p1.a + n - 1) * (p1.b + n - 1) /
                                     ((p1.c + n - 1) * (n + 1.0));
                          },
                          2, report);
    detail::criterion_sum([&k](int n) { return k.coanalytic_weight(n); },
                          p2.a * p2.b / (2.0 * p2.c),
                          [&p2](int n) {
                              return (p2.a + n - 1) * (p2.b + n - 1) /
                                     ((p2.c + n - 1) * (n + 1.0));
                          },
                          2, report);
    report.threshold = 1.0;
    report.verdict = report.lhs <= 1.0 + kMembershipTol;
    return report;
}

struct ProductCondition {
    double sum = 0.0;
    double threshold = 0.0;
    bool verdict = false;
};

namespace detail {

inline ProductCondition gauss_pair_condition(const HyperParams& p1, const HyperParams& p2,
                                             double threshold) {
    if (!(p1.convergence_margin() > 0.0 && p2.convergence_margin() > 0.0))
        throw std::domain_error("product condition: requires c > a + b for both parameter sets");
    ProductCondition out;
    out.sum = gauss_sum(p1) + gauss_sum(p2);
    out.threshold = threshold;
    out.verdict = out.sum <= threshold + kMembershipTol;
    return out;
}

}  // namespace detail

// Hat products with the hypergeometric TH functions stay in the class when
// F(a1,b1,c1;1) + F(a2,b2,c2;1) is at most 3 (phi construction) or 4 (psi).
inline ProductCondition product_condition_phi(const HyperParams& p1, const HyperParams& p2) {
    return detail::gauss_pair_condition(p1, p2, 3.0);
}

inline ProductCondition product_condition_psi(const HyperParams& p1, const HyperParams& p2) {
    return detail::gauss_pair_condition(p1, p2, 4.0);
}

// Exact membership of 2z - phi_1 + conj(phi_2) in the Re(f/z) > alpha class:
// F(a1,b1,c1;1) + F(a2,b2,c2;1) <= 3 - alpha.
inline ProductCondition tu_phi_condition(const HyperParams& p1, const HyperParams& p2,
                                         double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("tu_phi_condition: alpha must lie in [0, 1)");
    return detail::gauss_pair_condition(p1, p2, 3.0 - alpha);
}

}  // namespace convharm
