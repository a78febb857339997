#pragma once

// Kernel pairs (Phi_i, Psi_j) given by coefficient generators. A kernel pair
// plus an order alpha fixes one convolution-defined class; the three named
// specializations cover the fully starlike, fully convex and Re(f/z) classes.

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "convharm/series.hpp"

namespace convharm {

using CoeffGenerator = std::function<double(int)>;

enum class KernelPart { Phi, Psi };
enum class NamedKernel { Starlike, Convex, U };

struct KernelValidation {
    bool valid = true;
    int first_violation = 0;  // 0 when valid
    std::string reason;
};

class KernelPair {
public:
    KernelPair(CoeffGenerator p, CoeffGenerator q, CoeffGenerator u, CoeffGenerator v,
               int sign_i, int sign_j, double alpha)
        : p_(std::move(p)), q_(std::move(q)), u_(std::move(u)), v_(std::move(v)),
          i_(sign_i), j_(sign_j), alpha_(alpha) {
        if (i_ != 0 && i_ != 1) throw std::invalid_argument("KernelPair: i must be 0 or 1");
        if (j_ != 0 && j_ != 1) throw std::invalid_argument("KernelPair: j must be 0 or 1");
        if (!(alpha_ >= 0.0 && alpha_ < 1.0))
            throw std::invalid_argument("KernelPair: alpha must lie in [0, 1)");
    }

    double p(int n) const { return p_(n); }  // n >= 2
    double q(int n) const { return q_(n); }  // n >= 1
    double u(int n) const { return u_(n); }
    double v(int n) const { return v_(n); }
    int i() const { return i_; }
    int j() const { return j_; }
    double alpha() const { return alpha_; }

    // (-1)^(j-i) by integer parity.
    int parity_sign() const { return i_ == j_ ? +1 : -1; }

    // sigma_n = p_n - alpha u_n, the analytic condition factor (n >= 2).
    double sigma(int n) const { return p_(n) - alpha_ * u_(n); }

    // Gamma_n = q_n - (-1)^(j-i) alpha v_n, the co-analytic factor (n >= 1).
    double gamma(int n) const { return q_(n) - parity_sign() * alpha_ * v_(n); }

    // Weights of the coefficient condition: sigma_n/(1-alpha), Gamma_n/(1-alpha).
    double analytic_weight(int n) const { return sigma(n) / (1.0 - alpha_); }
    double coanalytic_weight(int n) const { return gamma(n) / (1.0 - alpha_); }

    // General-convention truncation of Phi_i or Psi_j.
    HarmonicSeries materialize(KernelPart which, int order) const {
        if (order < 1) throw std::invalid_argument("materialize: order must be >= 1");
        const bool phi = which == KernelPart::Phi;
        const double sign = (phi ? i_ : j_) == 1 ? -1.0 : 1.0;
        std::vector<Complex> an(static_cast<std::size_t>(order - 1));
        std::vector<Complex> bn(static_cast<std::size_t>(order));
        for (int n = 2; n <= order; ++n)
            an[static_cast<std::size_t>(n - 2)] = phi ? p_(n) : u_(n);
        for (int n = 1; n <= order; ++n)
            bn[static_cast<std::size_t>(n - 1)] = sign * (phi ? q_(n) : v_(n));
        return HarmonicSeries(Convention::General, order, std::move(an), std::move(bn));
    }

    // Checks the class hypotheses p_n > u_n >= 0 (n >= 2) and q_n > v_n >= 0
    // (n >= 2) up to the horizon. At n = 1 only q_1 >= v_1 >= 0 and q_1 > 0 are
    // required: the flagship starlike pair has q_1 = v_1 = 1, and every result
    // used here needs no more than Gamma_1 > 0.
    KernelValidation validate(int horizon) const {
        if (horizon < 2) throw std::invalid_argument("validate: horizon must be >= 2");
        if (!(q_(1) >= v_(1)) || !(v_(1) >= 0.0) || !(q_(1) > 0.0))
            return {false, 1, "requires q_1 >= v_1 >= 0 and q_1 > 0"};
        for (int n = 2; n <= horizon; ++n) {
            if (!(u_(n) >= 0.0) || !(p_(n) > u_(n)))
                return {false, n, "requires p_n > u_n >= 0"};
            if (!(v_(n) >= 0.0) || !(q_(n) > v_(n)))
                return {false, n, "requires q_n > v_n >= 0"};
        }
        return {};
    }

    int default_horizon(int order) const { return std::max(2 * order, 64); }

private:
    CoeffGenerator p_, q_, u_, v_;
    int i_, j_;
    double alpha_;
};

// The three classes shipped with named constructors:
//   Starlike: TH(z/(1-z)^2 - conj-part, z/(1-z) + conj-part; alpha)
//   Convex:   TH((z+z^2)/(1-z)^3 + conj-part, z/(1-z)^2 - conj-part; alpha)
//   U:        TH(z/(1-z) + conj-part, z; alpha), i.e. Re(f(z)/z) > alpha
inline KernelPair named_kernel(NamedKernel name, double alpha) {
    switch (name) {
        case NamedKernel::Starlike:
            return KernelPair([](int n) { return double(n); }, [](int n) { return double(n); },
                              [](int) { return 1.0; }, [](int) { return 1.0; }, 1, 0, alpha);
        case NamedKernel::Convex:
            return KernelPair([](int n) { return double(n) * n; },
                              [](int n) { return double(n) * n; },
                              [](int n) { return double(n); }, [](int n) { return double(n); },
                              0, 1, alpha);
        case NamedKernel::U:
            return KernelPair([](int) { return 1.0; }, [](int) { return 1.0; },
                              [](int) { return 0.0; }, [](int) { return 0.0; }, 0, 0, alpha);
    }
    throw std::invalid_argument("named_kernel: unknown kernel name");
}

}  // namespace convharm
