// Smeared Minkowski-vacuum two-point kernels for Gaussian spatial profiles.
//
// K_ij(t, t') = 2 (2 pi)^3 int d^3x d^3x' F_i(x) F_j(x') W(t, x; t', x')
//             = int d^3k / |k| exp(i k.(x_i - x_j)) exp(-k^2 sigma^2) exp(-i |k| dt).
//
// The 1/(2 (2 pi)^3) that undoes the prefactor lives in the harvesting
// integrals. Natural units, c = 1.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "harvest/background.hpp"
#include "harvest/quadrature.hpp"
#include "harvest/specialfn.hpp"

namespace harvest::kernels {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSqrtPi = 1.7724538509055160273;
inline constexpr double kPi32 = kPi * kSqrtPi; // pi^{3/2}

struct KernelParams {
    double sigma = 1.0;
    double d = 0.0;
};

/// I(z) = (sqrt(pi)/2 sigma) exp(-z^2/4 sigma^2) - (i/sigma) D(z / 2 sigma).
[[nodiscard]] inline cplx script_i(double z, double sigma) noexcept
{
    const double x = z / (2.0 * sigma);
    return {kSqrtPi / (2.0 * sigma) * std::exp(-x * x), -specialfn::dawson(x) / sigma};
}

/// Cross-detector kernel, d = |x_a - x_b| > 0.
/// K_ab = (2 pi i / d) [I(dt + d) - I(dt - d)].
[[nodiscard]] inline cplx k_ab(double delta_t, double d, double sigma)
{
    if (!(d > 0.0)) {
        throw std::domain_error("k_ab: d must be > 0; use k_jj for coincident detectors");
    }
    const cplx diff = script_i(delta_t + d, sigma) - script_i(delta_t - d, sigma);
    // (2 pi i / d) * diff
    return {-2.0 * kPi / d * diff.imag(), 2.0 * kPi / d * diff.real()};
}

/// Same-detector kernel.
/// K_jj = (2 pi / sigma^2)[1 - (dt / sqrt2 sigma)(i sqrt(pi/2) e^{-dt^2/4 sigma^2} + sqrt2 D(dt / 2 sigma))].
[[nodiscard]] inline cplx k_jj(double delta_t, double sigma) noexcept
{
    const double x = delta_t / (2.0 * sigma);
    const double pref = 2.0 * kPi / (sigma * sigma);
    // (dt / sqrt2 sigma) * sqrt2 * D = 2 x D ;  (dt / sqrt2 sigma) * sqrt(pi/2) = x sqrt(pi)
    const double re = pref * (1.0 - 2.0 * x * specialfn::dawson(x));
    const double im = -pref * x * kSqrtPi * std::exp(-x * x);
    return {re, im};
}

/// Antisymmetric (commutator) part of K_ab: purely imaginary, supported near |dt| = d.
/// K_ab^- = (pi^{3/2} i / sigma d)[e^{-(dt+d)^2/4 sigma^2} - e^{-(dt-d)^2/4 sigma^2}].
[[nodiscard]] inline cplx k_ab_minus(double delta_t, double d, double sigma)
{
    if (!(d > 0.0)) {
        throw std::domain_error("k_ab_minus: d must be > 0");
    }
    const double s2 = 4.0 * sigma * sigma;
    const double ep = std::exp(-(delta_t + d) * (delta_t + d) / s2);
    const double em = std::exp(-(delta_t - d) * (delta_t - d) / s2);
    return {0.0, kPi32 / (sigma * d) * (ep - em)};
}

/// Antisymmetric part of K_jj, i.e. i Im K_jj.
[[nodiscard]] inline cplx k_jj_minus(double delta_t, double sigma) noexcept
{
    return {0.0, k_jj(delta_t, sigma).imag()};
}

/// Width of the combined smearing exp(-k^2 (sigma_a^2 + sigma_b^2)/2) between two detectors.
[[nodiscard]] inline double pair_sigma(double sigma_a, double sigma_b) noexcept
{
    return std::sqrt(0.5 * (sigma_a * sigma_a + sigma_b * sigma_b));
}

/// Delta t in Minkowski, Delta eta in FRW.
[[nodiscard]] inline double effective_delta(const Background &bg, double t, double t_prime)
{
    return bg.conformal_difference(t, t_prime);
}

struct OracleResult {
    cplx value;
    double err_est;
};

/// Momentum-space evaluation of K_ij by direct radial quadrature:
///   d > 0 : (4 pi / d) int_0^inf dk sin(k d) exp(-k^2 sigma^2) exp(-i k dt)
///   d = 0 : 4 pi int_0^inf dk k exp(-k^2 sigma^2) exp(-i k dt)
/// Composite 32-point Gauss-Legendre on panels of width sigma / 4 up to
/// k sigma = 7, refined until two successive passes agree to 1e-10 absolute.
[[nodiscard]] inline OracleResult k_oracle(double delta_t, double d, double sigma)
{
    if (!(sigma > 0.0) || !(d >= 0.0)) {
        throw std::domain_error("k_oracle: need sigma > 0 and d >= 0");
    }
    const auto &gl = gauss_legendre(32);
    const double k_max = 7.0 / sigma; // exp(-49) tail
    auto integrand = [&](double k) {
        const double env = std::exp(-k * k * sigma * sigma);
        const double radial = d > 0.0 ? std::sin(k * d) * 4.0 * kPi / d : 4.0 * kPi * k;
        return env * radial * cplx(std::cos(k * delta_t), -std::sin(k * delta_t));
    };
    auto pass = [&](int panels) {
        const double h = k_max / panels;
        cplx sum{};
        for (int p = 0; p < panels; ++p) {
            const double c = (p + 0.5) * h;
            cplx s{};
            for (std::size_t i = 0; i < gl.x.size(); ++i) {
                s += gl.w[i] * integrand(c + 0.5 * h * gl.x[i]);
            }
            sum += 0.5 * h * s;
        }
        return sum;
    };
    // Oscillation period in k is 2 pi / max(|dt|, d); keep several panels per period.
    const double freq = std::max({std::fabs(delta_t) + d, 1.0 / sigma});
    int panels = std::max(28, static_cast<int>(std::ceil(k_max * freq / (2.0 * kPi) * 2.0)));
    cplx prev = pass(panels);
    for (int it = 0; it < 8; ++it) {
        panels *= 2;
        const cplx cur = pass(panels);
        const double err = std::abs(cur - prev);
        if (err <= 1e-10) {
            return {cur, err};
        }
        prev = cur;
    }
    throw std::runtime_error("k_oracle: radial quadrature did not converge");
}

} // namespace harvest::kernels
