#pragma once

// Truncated planar harmonic power series f = h + conj(g) with evaluation,
// Wirtinger derivatives and both coefficientwise products.

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace convharm {

using Complex = std::complex<double>;

// Sign convention of the stored coefficients.
//   General:  f(z) = z + sum A_n z^n + sum conj(B_n) zbar^n  (A_n, B_n complex)
//   TH:       f(z) = z - sum A_n z^n + sum B_n zbar^n        (A_n, B_n real >= 0,
//             the minus sign is implicit; magnitudes are stored)
enum class Convention { General, TH };

struct DiskPoint {
    double r = 0.0;      // in [0, 1)
    double theta = 0.0;  // radians

    Complex point() const { return std::polar(r, theta); }
};

class HarmonicSeries {
public:
    // analytic holds A_2..A_N (size order-1), coanalytic holds B_1..B_N (size order).
    HarmonicSeries(Convention convention, int order,
                   std::vector<Complex> analytic, std::vector<Complex> coanalytic)
        : convention_(convention), order_(order),
          analytic_(std::move(analytic)), coanalytic_(std::move(coanalytic)) {
        if (order_ < 1)
            throw std::invalid_argument("HarmonicSeries: order must be >= 1");
        if (analytic_.size() != static_cast<std::size_t>(order_ - 1) ||
            coanalytic_.size() != static_cast<std::size_t>(order_))
            throw std::invalid_argument("HarmonicSeries: coefficient count does not match order");
        if (convention_ == Convention::TH) {
            for (const Complex& c : analytic_) require_th_coefficient(c);
            for (const Complex& c : coanalytic_) require_th_coefficient(c);
        }
    }

    // f(z) = z
    static HarmonicSeries identity(int order = 1, Convention convention = Convention::TH) {
        if (order < 1) throw std::invalid_argument("HarmonicSeries: order must be >= 1");
        return HarmonicSeries(convention, order,
                              std::vector<Complex>(static_cast<std::size_t>(order - 1)),
                              std::vector<Complex>(static_cast<std::size_t>(order)));
    }

    // Convenience for TH-form input: nonnegative magnitudes only.
    static HarmonicSeries th(int order, const std::vector<double>& analytic,
                             const std::vector<double>& coanalytic) {
        if (order < 1) throw std::invalid_argument("HarmonicSeries: order must be >= 1");
        std::vector<Complex> a(analytic.begin(), analytic.end());
        std::vector<Complex> b(coanalytic.begin(), coanalytic.end());
        a.resize(static_cast<std::size_t>(order - 1));
        b.resize(static_cast<std::size_t>(order));
        return HarmonicSeries(Convention::TH, order, std::move(a), std::move(b));
    }

    Convention convention() const { return convention_; }
    int order() const { return order_; }

    // Stored coefficients. For TH these are the magnitudes A_n, B_n >= 0.
    Complex analytic_coeff(int n) const {
        return (n < 2 || n > order_) ? Complex(0.0) : analytic_[static_cast<std::size_t>(n - 2)];
    }
    Complex coanalytic_coeff(int n) const {
        return (n < 1 || n > order_) ? Complex(0.0) : coanalytic_[static_cast<std::size_t>(n - 1)];
    }

    // Taylor coefficient of the analytic part h at z^n (sign applied for TH).
    Complex analytic_taylor(int n) const {
        Complex a = analytic_coeff(n);
        return convention_ == Convention::TH ? -a : a;
    }
    // Taylor coefficient of the co-analytic generator g at z^n.
    Complex coanalytic_taylor(int n) const { return coanalytic_coeff(n); }

    // TH magnitudes reinterpreted in the Eq.-(1.1)-style representation.
    HarmonicSeries to_general() const {
        if (convention_ == Convention::General) return *this;
        std::vector<Complex> a(analytic_.size());
        for (std::size_t k = 0; k < analytic_.size(); ++k) a[k] = -analytic_[k];
        return HarmonicSeries(Convention::General, order_, std::move(a), coanalytic_);
    }

    bool is_polynomial_identity() const {
        for (const Complex& c : analytic_)
            if (c != Complex(0.0)) return false;
        for (const Complex& c : coanalytic_)
            if (c != Complex(0.0)) return false;
        return true;
    }

private:
    static void require_th_coefficient(const Complex& c) {
        if (c.imag() != 0.0 || c.real() < 0.0)
            throw std::invalid_argument(
                "HarmonicSeries: TH convention requires real nonnegative coefficients");
    }

    Convention convention_;
    int order_;
    std::vector<Complex> analytic_;    // A_2..A_N
    std::vector<Complex> coanalytic_;  // B_1..B_N
};

namespace detail {

inline void require_inside_disk(const DiskPoint& z) {
    if (!(z.r >= 0.0) || !(z.r < 1.0))
        throw std::domain_error("DiskPoint: radius must lie in [0, 1)");
}

}  // namespace detail

// h(z) + conj(g(z)) at z, exact for polynomial input.
inline Complex evaluate(const HarmonicSeries& f, const DiskPoint& zp) {
    detail::require_inside_disk(zp);
    const Complex z = zp.point();
    const int n = f.order();

    Complex h_inner(0.0);  // A_2 + A_3 z + ... by Horner
    for (int k = n; k >= 2; --k) h_inner = h_inner * z + f.analytic_taylor(k);
    const Complex h = z + z * z * h_inner;

    Complex g_inner(0.0);
    for (int k = n; k >= 1; --k) g_inner = g_inner * z + f.coanalytic_taylor(k);
    const Complex g = z * g_inner;

    return h + std::conj(g);
}

struct WirtingerDerivatives {
    Complex h_prime;  // f_z
    Complex g_prime;  // conj(f_zbar)
};

inline WirtingerDerivatives wirtinger_derivatives(const HarmonicSeries& f, const DiskPoint& zp) {
    detail::require_inside_disk(zp);
    const Complex z = zp.point();
    const int n = f.order();

    Complex hp(0.0);
    for (int k = n; k >= 2; --k) hp = hp * z + static_cast<double>(k) * f.analytic_taylor(k);
    hp = 1.0 + z * hp;

    Complex gp(0.0);
    for (int k = n; k >= 1; --k) gp = gp * z + static_cast<double>(k) * f.coanalytic_taylor(k);

    return {hp, gp};
}

// Hadamard product part by part: f*F = h*H + conj(g*G).
// TH operands are lifted to the General representation first, so the result is
// always General. Result order is the smaller operand order.
inline HarmonicSeries harmonic_convolution(const HarmonicSeries& f, const HarmonicSeries& F) {
    const HarmonicSeries a = f.to_general();
    const HarmonicSeries b = F.to_general();
    const int order = std::min(a.order(), b.order());
    std::vector<Complex> an(static_cast<std::size_t>(order - 1));
    std::vector<Complex> bn(static_cast<std::size_t>(order));
    for (int n = 2; n <= order; ++n)
        an[static_cast<std::size_t>(n - 2)] = a.analytic_coeff(n) * b.analytic_coeff(n);
    for (int n = 1; n <= order; ++n)
        bn[static_cast<std::size_t>(n - 1)] = a.coanalytic_coeff(n) * b.coanalytic_coeff(n);
    return HarmonicSeries(Convention::General, order, std::move(an), std::move(bn));
}

// The modified product on TH-form functions:
//   (f hat* F)(z) = z - sum A_n A'_n z^n + sum B_n B'_n zbar^n.
// Defined only on TH operands; nonnegativity is closed under it.
inline HarmonicSeries hat_product(const HarmonicSeries& f, const HarmonicSeries& F) {
    if (f.convention() != Convention::TH || F.convention() != Convention::TH)
        throw std::invalid_argument("hat_product: both operands must use the TH convention");
    const int order = std::min(f.order(), F.order());
    std::vector<Complex> an(static_cast<std::size_t>(order - 1));
    std::vector<Complex> bn(static_cast<std::size_t>(order));
    for (int n = 2; n <= order; ++n)
        an[static_cast<std::size_t>(n - 2)] = f.analytic_coeff(n) * F.analytic_coeff(n);
    for (int n = 1; n <= order; ++n)
        bn[static_cast<std::size_t>(n - 1)] = f.coanalytic_coeff(n) * F.coanalytic_coeff(n);
    return HarmonicSeries(Convention::TH, order, std::move(an), std::move(bn));
}

}  // namespace convharm
