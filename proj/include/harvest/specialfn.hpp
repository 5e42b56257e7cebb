// Real special functions used by the vacuum kernels and switching profiles.
#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace harvest::specialfn {

namespace detail {

inline constexpr double kInvSqrtPi = 0.56418958354775628695; // 1/sqrt(pi)

// Maclaurin series D(x) = sum_n (-1)^n 2^n x^{2n+1} / (2n+1)!!, |x| < 1.
inline double dawson_series(double x) noexcept
{
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int n = 1; n < 60; ++n) {
        term *= -2.0 * x2 / (2.0 * n + 1.0);
        sum += term;
        if (std::fabs(term) < 1e-17 * std::fabs(sum)) {
            break;
        }
    }
    return sum;
}

// Rybicki's sampled-exponential representation
//   D(x) ~ (1/sqrt(pi)) sum_{n odd} exp(-(x - n h)^2) / n,
// truncation error ~ exp(-(pi / 2h)^2). h = 1/4 gives ~7e-18.
struct RybickiTable {
    static constexpr double h = 0.25;
    static constexpr int nterms = 18; // odd offsets +-1, +-3, ..., +-(2*nterms-1)
    std::array<double, nterms> c{};   // exp(-((2i+1) h)^2)

    RybickiTable() noexcept
    {
        for (int i = 0; i < nterms; ++i) {
            const double a = (2.0 * i + 1.0) * h;
            c[static_cast<std::size_t>(i)] = std::exp(-a * a);
        }
    }
};

inline const RybickiTable &rybicki_table() noexcept
{
    static const RybickiTable table;
    return table;
}

// Valid for x >= 1 (the nearest even grid point n0 is then >= 4, so no 1/0).
inline double dawson_rybicki(double x) noexcept
{
    const auto &tab = rybicki_table();
    constexpr double h = RybickiTable::h;
    const int n0 = 2 * static_cast<int>(std::lround(0.5 * x / h));
    const double xp = x - n0 * h;
    double e1 = std::exp(2.0 * xp * h);
    const double e2 = e1 * e1;
    double d1 = n0 + 1;
    double d2 = d1 - 2.0;
    double sum = 0.0;
    // exp(-(xp - n h)^2) = exp(-xp^2) * exp(2 xp n h) * exp(-(n h)^2), for n = +-(2i+1)
    for (int i = 0; i < RybickiTable::nterms; ++i) {
        const double ci = tab.c[static_cast<std::size_t>(i)];
        sum += ci * (e1 / d1 + 1.0 / (d2 * e1));
        d1 += 2.0;
        d2 -= 2.0;
        e1 *= e2;
    }
    return kInvSqrtPi * std::exp(-xp * xp) * sum;
}

// Asymptotic series D(x) ~ 1/(2x) sum_n (2n-1)!! / (2x^2)^n, x > 6.
inline double dawson_asymptotic(double x) noexcept
{
    const double y = 1.0 / (2.0 * x * x);
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n < 80; ++n) {
        const double next = term * (2.0 * n - 1.0) * y;
        if (next >= term) {
            break; // smallest term reached
        }
        term = next;
        sum += term;
        if (term < 1e-17 * sum) {
            break;
        }
    }
    return sum / (2.0 * x);
}

} // namespace detail

/// Largest magnitude reached by the Dawson function (at x ~ 0.9241).
inline constexpr double kDawsonMax = 0.5410442246351818;

/// Dawson function D(x) = exp(-x^2) * int_0^x exp(y^2) dy.
///
/// Piecewise: Maclaurin series below 1, Rybicki's sampled exponential on
/// [1, 6], asymptotic expansion above 6. Relative error is below 1e-13 on
/// the whole real line; NaN propagates.
[[nodiscard]] inline double dawson(double x) noexcept
{
    if (std::isnan(x)) {
        return x;
    }
    const double ax = std::fabs(x);
    double r;
    if (ax < 1.0) {
        r = detail::dawson_series(ax);
    } else if (ax <= 6.0) {
        r = detail::dawson_rybicki(ax);
    } else if (std::isinf(ax)) {
        r = 0.0;
    } else {
        r = detail::dawson_asymptotic(ax);
    }
    return std::signbit(x) ? -r : r;
}

/// Error function. Thin wrapper over the C library implementation.
[[nodiscard]] inline double erf(double x) noexcept { return std::erf(x); }

/// Largest |x| accepted by erfi before exp(x^2) leaves the double range.
inline constexpr double kErfiMaxArg = 26.0;

/// Imaginary error function erfi(x) = (2/sqrt(pi)) exp(x^2) D(x).
/// Throws std::overflow_error for |x| > 26.
[[nodiscard]] inline double erfi(double x)
{
    if (std::isnan(x)) {
        return x;
    }
    if (std::fabs(x) > kErfiMaxArg) {
        throw std::overflow_error("erfi: |x| > 26 overflows double range");
    }
    return 2.0 * detail::kInvSqrtPi * std::exp(x * x) * dawson(x);
}

} // namespace harvest::specialfn
