#pragma once

// Reproducible random members and non-members of a class. A draw picks a
// support set and positive weights, scales the weights to a target condition
// sum, then inverts the condition weights into coefficients, so the resulting
// lhs equals the target up to roundoff.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "convharm/kernels.hpp"
#include "convharm/membership.hpp"
#include "convharm/series.hpp"

namespace convharm {

// mt19937_64 with hand-rolled uniforms so that streams are identical across
// standard libraries (std distributions are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

struct MemberDrawOptions {
    int max_order = 20;
    int max_terms = 6;
    bool zero_b1 = false;  // restrict to f_zbar(0) = 0 (the "0" subclasses)
};

namespace detail {

struct SupportTerm {
    int n;
    bool coanalytic;
};

inline HarmonicSeries invert_weights(const KernelPair& k,
                                     const std::vector<SupportTerm>& support,
                                     std::vector<double> weights, double target_lhs) {
    double total = 0.0;
    for (double w : weights) total += w;
    int order = 1;
    for (const SupportTerm& t : support) order = std::max(order, t.n);
    std::vector<double> a(static_cast<std::size_t>(order - 1), 0.0);
    std::vector<double> b(static_cast<std::size_t>(order), 0.0);
    for (std::size_t idx = 0; idx < support.size(); ++idx) {
        const SupportTerm& t = support[idx];
        const double share = weights[idx] / total * target_lhs;
        if (t.coanalytic)
            b[static_cast<std::size_t>(t.n - 1)] += share / k.coanalytic_weight(t.n);
        else
            a[static_cast<std::size_t>(t.n - 2)] += share / k.analytic_weight(t.n);
    }
    return HarmonicSeries::th(order, a, b);
}

}  // namespace detail

// TH-form member with condition lhs equal to target_lhs (must be <= 1).
// Support may fall on both coefficient families.
inline HarmonicSeries random_member(const KernelPair& k, Rng& rng, double target_lhs,
                                    const MemberDrawOptions& opt = {}) {
    const int terms = rng.uniform_int(1, opt.max_terms);
    std::vector<detail::SupportTerm> support;
    std::vector<double> weights;
    for (int t = 0; t < terms; ++t) {
        const bool coanalytic = rng.uniform() < 0.5;
        int n;
        if (coanalytic)
            n = rng.uniform_int(opt.zero_b1 ? 2 : 1, opt.max_order);
        else
            n = rng.uniform_int(2, opt.max_order);
        support.push_back({n, coanalytic});
        weights.push_back(rng.uniform(0.1, 1.0));
    }
    return detail::invert_weights(k, support, weights, target_lhs);
}

// TH-form non-member with condition lhs equal to target_lhs (> 1). The support
// is restricted to shapes whose failure of the defining inequality inside the
// disk is provable, so a disk search is guaranteed to find a witness:
//   - analytic-only support: the inequality fails near z = 1 on the real axis
//     for every admissible kernel;
//   - a single co-analytic harmonic: it fails along the ray aligning that term
//     against the leading one;
//   - spread co-analytic support additionally requires i = 1, which makes all
//     co-analytic terms align on the positive real axis.
inline HarmonicSeries random_nonmember(const KernelPair& k, Rng& rng, double target_lhs,
                                       const MemberDrawOptions& opt = {}) {
    const bool allow_spread_coanalytic = k.i() == 1;
    const int mode = rng.uniform_int(0, allow_spread_coanalytic ? 2 : 1);
    std::vector<detail::SupportTerm> support;
    std::vector<double> weights;
    if (mode == 0) {  // analytic side only
        const int terms = rng.uniform_int(1, opt.max_terms);
        for (int t = 0; t < terms; ++t) {
            support.push_back({rng.uniform_int(2, opt.max_order), false});
            weights.push_back(rng.uniform(0.1, 1.0));
        }
    } else if (mode == 1) {  // single co-analytic harmonic
        support.push_back({rng.uniform_int(opt.zero_b1 ? 2 : 1, opt.max_order), true});
        weights.push_back(1.0);
    } else {  // spread co-analytic support (i = 1 kernels)
        const int terms = rng.uniform_int(1, opt.max_terms);
        for (int t = 0; t < terms; ++t) {
            support.push_back({rng.uniform_int(opt.zero_b1 ? 2 : 1, opt.max_order), true});
            weights.push_back(rng.uniform(0.1, 1.0));
        }
    }
    return detail::invert_weights(k, support, weights, target_lhs);
}

}  // namespace convharm
