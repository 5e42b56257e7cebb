// Switching profiles chi(t): Gaussian and calibrated skew-normal.
#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "harvest/specialfn.hpp"

namespace harvest {

enum class SwitchingKind { Gaussian, SkewNormal };

/// Peak normalization and peak location of the skew-normal family.
struct SkewCalibration {
    double norm = 1.0;  // N(alpha): makes the peak value exactly 1
    double t_max = 0.0; // argmax of the uncalibrated profile (absolute time)
};

namespace switching_detail {

inline constexpr double kTwoOverSqrtPi = 1.1283791670955125739;

// Uncalibrated profile in units of T: u(tau) = exp(-tau^2) (1 + erf(alpha tau)).
inline double raw_unit(double tau, double alpha) noexcept
{
    return std::exp(-tau * tau) * (1.0 + specialfn::erf(alpha * tau));
}

// exp(tau^2) u'(tau): carries the sign of the derivative.
inline double slope_unit(double tau, double alpha) noexcept
{
    return -2.0 * tau * (1.0 + specialfn::erf(alpha * tau)) +
           kTwoOverSqrtPi * alpha * std::exp(-alpha * alpha * tau * tau);
}

inline double slope_unit_prime(double tau, double alpha) noexcept
{
    const double g = std::exp(-alpha * alpha * tau * tau);
    return -2.0 * (1.0 + specialfn::erf(alpha * tau)) - 2.0 * kTwoOverSqrtPi * alpha * tau * g -
           2.0 * kTwoOverSqrtPi * alpha * alpha * alpha * tau * g;
}

} // namespace switching_detail

/// Peak normalization and location for S(t; alpha) = N exp(-t^2/T^2)(1 + erf(alpha t/T)).
///
/// Golden-section search on [-3T, 3T] followed by Newton polishing of the
/// stationarity condition. The family is unimodal for every alpha, so a
/// failure to converge is reported as std::logic_error.
[[nodiscard]] inline SkewCalibration calibrate_skew(double T, double alpha)
{
    using namespace switching_detail;
    if (!(T > 0.0)) {
        throw std::invalid_argument("calibrate_skew: T must be positive");
    }
    if (alpha == 0.0) {
        return {1.0, 0.0};
    }
    // u(-tau; alpha) = u(tau; -alpha), so solve for |alpha| and mirror.
    const double a = std::fabs(alpha);
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = -3.0;
    double hi = 3.0;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = raw_unit(x1, a);
    double f2 = raw_unit(x2, a);
    while (hi - lo > 1e-7) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = raw_unit(x2, a);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = raw_unit(x1, a);
        }
    }
    double tau = 0.5 * (lo + hi);
    for (int it = 0; it < 20; ++it) {
        const double step = slope_unit(tau, a) / slope_unit_prime(tau, a);
        tau -= step;
        if (std::fabs(step) < 1e-16) {
            break;
        }
    }
    if (!(tau > -3.0 && tau < 3.0) || std::fabs(slope_unit(tau, a)) > 1e-12) {
        throw std::logic_error("calibrate_skew: maximizer failed to converge");
    }
    const double t_max = (alpha > 0.0 ? tau : -tau) * T;
    return {1.0 / raw_unit(tau, a), t_max};
}

/// Calibrated S(t; alpha): peak value 1, attained at calibrate_skew(T, alpha).t_max.
[[nodiscard]] inline double skew_normal_raw(double t, double T, double alpha)
{
    const auto cal = calibrate_skew(T, alpha);
    return cal.norm * switching_detail::raw_unit(t / T, alpha);
}

/// Time window used to truncate a profile for quadrature.
struct TimeWindow {
    double lo = 0.0;
    double hi = 0.0;
    [[nodiscard]] double width() const noexcept { return hi - lo; }
};

/// Immutable switching function, peaked at t0 with value 1.
///
/// The skew-normal variant evaluates the calibrated S at t - t0 + t_max, so the
/// peak sits at t0 regardless of alpha. Calibration happens once, at construction.
class SwitchingProfile {
public:
    [[nodiscard]] static SwitchingProfile gaussian(double T, double t0)
    {
        return SwitchingProfile(SwitchingKind::Gaussian, T, t0, 0.0);
    }

    [[nodiscard]] static SwitchingProfile skew_normal(double T, double t0, double alpha)
    {
        return SwitchingProfile(SwitchingKind::SkewNormal, T, t0, alpha);
    }

    [[nodiscard]] SwitchingKind kind() const noexcept { return kind_; }
    [[nodiscard]] double width() const noexcept { return T_; }
    [[nodiscard]] double center() const noexcept { return t0_; }
    [[nodiscard]] double alpha() const noexcept { return alpha_; }
    [[nodiscard]] const SkewCalibration &calibration() const noexcept { return cal_; }

    /// Same shape, peak moved to t0.
    [[nodiscard]] SwitchingProfile recentered(double t0) const
    {
        SwitchingProfile p = *this;
        p.t0_ = t0;
        return p;
    }

    /// True when chi(t0 + s) == chi(t0 - s) for all s.
    [[nodiscard]] bool time_symmetric() const noexcept
    {
        return kind_ == SwitchingKind::Gaussian || alpha_ == 0.0;
    }

    /// True when both profiles differ only by a time shift.
    [[nodiscard]] bool same_shape(const SwitchingProfile &o) const noexcept
    {
        const bool ga = time_symmetric();
        const bool gb = o.time_symmetric();
        if (ga && gb) {
            return T_ == o.T_;
        }
        return kind_ == o.kind_ && T_ == o.T_ && alpha_ == o.alpha_;
    }

    [[nodiscard]] double evaluate(double t) const noexcept
    {
        if (kind_ == SwitchingKind::Gaussian) {
            const double u = (t - t0_) / T_;
            return std::exp(-u * u);
        }
        const double tau = (t - t0_ + cal_.t_max) / T_;
        return cal_.norm * switching_detail::raw_unit(tau, alpha_);
    }

    [[nodiscard]] double operator()(double t) const noexcept { return evaluate(t); }

    /// [t0 - k T, t0 + k T], widened by one extra T on the heavy skew side.
    [[nodiscard]] TimeWindow support_window(double k_sigma) const
    {
        if (!(k_sigma >= 1.0)) {
            throw std::invalid_argument("support_window: k_sigma must be >= 1");
        }
        TimeWindow w{t0_ - k_sigma * T_, t0_ + k_sigma * T_};
        if (kind_ == SwitchingKind::SkewNormal) {
            if (alpha_ > 0.0) {
                w.hi += T_;
            } else if (alpha_ < 0.0) {
                w.lo -= T_;
            }
        }
        return w;
    }

private:
    SwitchingProfile(SwitchingKind kind, double T, double t0, double alpha)
        : kind_(kind), T_(T), t0_(t0), alpha_(alpha)
    {
        if (!(T > 0.0) || !std::isfinite(T)) {
            throw std::invalid_argument("SwitchingProfile: T must be positive and finite");
        }
        if (!std::isfinite(t0) || !std::isfinite(alpha)) {
            throw std::invalid_argument("SwitchingProfile: t0 and alpha must be finite");
        }
        if (kind_ == SwitchingKind::SkewNormal) {
            cal_ = calibrate_skew(T, alpha);
        }
    }

    SwitchingKind kind_;
    double T_;
    double t0_;
    double alpha_;
    SkewCalibration cal_{};
};

} // namespace harvest
