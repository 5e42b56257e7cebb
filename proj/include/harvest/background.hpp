// Spacetime backgrounds: Minkowski and spatially flat FRW.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace harvest {

/// a(t) = exp(H t).
struct DeSitter {
    double H = 0.0;
};

/// a(t) = cosh(H t). Time-symmetric about t = 0.
struct CoshSymmetric {
    double H = 0.0;
};

/// Scale factor sampled on a strictly increasing time grid, interpolated by a
/// monotone (Fritsch-Carlson) cubic.
class TabulatedScaleFactor {
public:
    TabulatedScaleFactor(std::vector<double> t, std::vector<double> a)
        : t_(std::move(t)), a_(std::move(a))
    {
        const std::size_t n = t_.size();
        if (n < 2 || a_.size() != n) {
            throw std::invalid_argument("tabulated scale factor: need >= 2 matching samples");
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!(a_[i] > 0.0) || !std::isfinite(a_[i]) || !std::isfinite(t_[i])) {
                throw std::invalid_argument("tabulated scale factor: samples must be finite, a > 0");
            }
            if (i > 0 && !(t_[i] > t_[i - 1])) {
                throw std::invalid_argument("tabulated scale factor: times must increase strictly");
            }
        }
        if (!(t_.front() <= 0.0 && t_.back() >= 0.0)) {
            throw std::invalid_argument("tabulated scale factor: grid must contain t = 0");
        }
        build_slopes();
        build_eta();
    }

    [[nodiscard]] double t_min() const noexcept { return t_.front(); }
    [[nodiscard]] double t_max() const noexcept { return t_.back(); }

    [[nodiscard]] double a(double t) const
    {
        const std::size_t i = locate(t);
        return interp(i, t);
    }

    /// eta(t) = int_0^t dt'/a(t'); cumulative nodes plus a partial panel.
    [[nodiscard]] double eta(double t) const
    {
        const std::size_t i = locate(t);
        return eta_nodes_[i] + integrate_inverse(i, t_[i], t);
    }

private:
    [[nodiscard]] std::size_t locate(double t) const
    {
        if (!(t >= t_.front() && t <= t_.back())) {
            throw std::out_of_range("tabulated scale factor: t outside sampled window");
        }
        auto it = std::upper_bound(t_.begin(), t_.end(), t);
        std::size_t i = static_cast<std::size_t>(it - t_.begin());
        i = (i == 0) ? 0 : i - 1;
        return std::min(i, t_.size() - 2);
    }

    [[nodiscard]] double interp(std::size_t i, double t) const noexcept
    {
        const double h = t_[i + 1] - t_[i];
        const double s = (t - t_[i]) / h;
        const double s2 = s * s;
        const double s3 = s2 * s;
        const double h00 = 2 * s3 - 3 * s2 + 1;
        const double h10 = s3 - 2 * s2 + s;
        const double h01 = -2 * s3 + 3 * s2;
        const double h11 = s3 - s2;
        return h00 * a_[i] + h10 * h * m_[i] + h01 * a_[i + 1] + h11 * h * m_[i + 1];
    }

    void build_slopes()
    {
        const std::size_t n = t_.size();
        std::vector<double> delta(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            delta[i] = (a_[i + 1] - a_[i]) / (t_[i + 1] - t_[i]);
        }
        m_.assign(n, 0.0);
        m_[0] = delta[0];
        m_[n - 1] = delta[n - 2];
        for (std::size_t i = 1; i + 1 < n; ++i) {
            m_[i] = (delta[i - 1] * delta[i] <= 0.0) ? 0.0 : 0.5 * (delta[i - 1] + delta[i]);
        }
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (delta[i] == 0.0) {
                m_[i] = m_[i + 1] = 0.0;
                continue;
            }
            const double al = m_[i] / delta[i];
            const double be = m_[i + 1] / delta[i];
            const double r = al * al + be * be;
            if (r > 9.0) {
                const double tau = 3.0 / std::sqrt(r);
                m_[i] = tau * al * delta[i];
                m_[i + 1] = tau * be * delta[i];
            }
        }
    }

    // 20-point Gauss-Legendre over [lo, hi] of 1/a, with the interpolant of cell i.
    [[nodiscard]] double integrate_inverse(std::size_t cell, double lo, double hi) const noexcept
    {
        static constexpr std::array<double, 10> x = {
            0.0765265211334973338, 0.2277858511416450781, 0.3737060887154195607,
            0.5108670019508270980, 0.6360536807265150255, 0.7463319064601507926,
            0.8391169718222188234, 0.9122344282513259059, 0.9639719272779137913,
            0.9931285991850949248};
        static constexpr std::array<double, 10> w = {
            0.1527533871307258507, 0.1491729864726037467, 0.1420961093183820513,
            0.1316886384491766269, 0.1181945319615184174, 0.1019301198172404351,
            0.0832767415767047487, 0.0626720483341090636, 0.0406014298003869413,
            0.0176140071391521183};
        const double c = 0.5 * (lo + hi);
        const double r = 0.5 * (hi - lo);
        double sum = 0.0;
        for (std::size_t k = 0; k < x.size(); ++k) {
            sum += w[k] * (1.0 / interp(cell, c - r * x[k]) + 1.0 / interp(cell, c + r * x[k]));
        }
        return r * sum;
    }

    void build_eta()
    {
        const std::size_t n = t_.size();
        std::vector<double> cum(n, 0.0);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            cum[i + 1] = cum[i] + integrate_inverse(i, t_[i], t_[i + 1]);
        }
        // Shift so that eta(0) = 0.
        const std::size_t i0 = locate(0.0);
        const double offset = cum[i0] + integrate_inverse(i0, t_[i0], 0.0);
        eta_nodes_.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            eta_nodes_[i] = cum[i] - offset;
        }
    }

    std::vector<double> t_;
    std::vector<double> a_;
    std::vector<double> m_;
    std::vector<double> eta_nodes_;
};

struct Minkowski {};

/// Minkowski, or spatially flat FRW with one of the supported scale factors.
///
/// Conformal time is anchored at eta(0) = 0; any constant offset cancels in
/// the differences that enter the kernels.
class Background {
public:
    using Model = std::variant<Minkowski, DeSitter, CoshSymmetric, std::shared_ptr<const TabulatedScaleFactor>>;

    Background() = default;

    [[nodiscard]] static Background minkowski() { return Background(Minkowski{}); }
    [[nodiscard]] static Background de_sitter(double H) { return Background(DeSitter{check_rate(H)}); }
    [[nodiscard]] static Background cosh_symmetric(double H)
    {
        return Background(CoshSymmetric{check_rate(H)});
    }
    [[nodiscard]] static Background tabulated(std::vector<double> t, std::vector<double> a)
    {
        return Background(std::make_shared<const TabulatedScaleFactor>(std::move(t), std::move(a)));
    }

    [[nodiscard]] const Model &model() const noexcept { return model_; }
    [[nodiscard]] bool is_minkowski() const noexcept { return std::holds_alternative<Minkowski>(model_); }

    [[nodiscard]] std::string name() const
    {
        struct V {
            std::string operator()(const Minkowski &) const { return "minkowski"; }
            std::string operator()(const DeSitter &) const { return "desitter"; }
            std::string operator()(const CoshSymmetric &) const { return "cosh"; }
            std::string operator()(const std::shared_ptr<const TabulatedScaleFactor> &) const
            {
                return "tabulated";
            }
        };
        return std::visit(V{}, model_);
    }

    [[nodiscard]] double scale_factor(double t) const
    {
        struct V {
            double t;
            double operator()(const Minkowski &) const { return 1.0; }
            double operator()(const DeSitter &m) const { return std::exp(m.H * t); }
            double operator()(const CoshSymmetric &m) const { return std::cosh(m.H * t); }
            double operator()(const std::shared_ptr<const TabulatedScaleFactor> &m) const { return m->a(t); }
        };
        return std::visit(V{t}, model_);
    }

    [[nodiscard]] double conformal_time(double t) const
    {
        struct V {
            double t;
            double operator()(const Minkowski &) const { return t; }
            double operator()(const DeSitter &m) const
            {
                return m.H == 0.0 ? t : -std::expm1(-m.H * t) / m.H;
            }
            double operator()(const CoshSymmetric &m) const
            {
                // Gudermannian: int_0^t sech(H s) ds = 2 atan(tanh(H t / 2)) / H.
                return m.H == 0.0 ? t : 2.0 * std::atan(std::tanh(0.5 * m.H * t)) / m.H;
            }
            double operator()(const std::shared_ptr<const TabulatedScaleFactor> &m) const
            {
                return m->eta(t);
            }
        };
        return std::visit(V{t}, model_);
    }

    /// eta(t) - eta(t'), evaluated without cancellation where a closed form exists.
    [[nodiscard]] double conformal_difference(double t, double tp) const
    {
        if (const auto *ds = std::get_if<DeSitter>(&model_)) {
            if (ds->H == 0.0) {
                return t - tp;
            }
            // Evaluated for the ordered pair so that swapping the arguments flips the sign exactly.
            const double hi = std::max(t, tp);
            const double lo = std::min(t, tp);
            const double v = std::exp(-ds->H * lo) * (-std::expm1(-ds->H * (hi - lo))) / ds->H;
            return t >= tp ? v : -v;
        }
        if (std::holds_alternative<Minkowski>(model_)) {
            return t - tp;
        }
        return conformal_time(t) - conformal_time(tp);
    }

    /// Measure factor 1 / (a(t) a(t')) of the conformal replacement dt dt' -> dt dt'/(a a').
    [[nodiscard]] double measure_weight(double t, double tp) const
    {
        if (std::holds_alternative<Minkowski>(model_)) {
            return 1.0;
        }
        if (const auto *ds = std::get_if<DeSitter>(&model_)) {
            return std::exp(-ds->H * (t + tp));
        }
        return 1.0 / (scale_factor(t) * scale_factor(tp));
    }

    /// a(t_r + s) == a(t_r - s) for the sampled s values, to relative tol.
    [[nodiscard]] bool reflection_symmetric_about(double t_r, const std::vector<double> &offsets,
                                                  double tol = 1e-12) const
    {
        for (double s : offsets) {
            const double ap = scale_factor(t_r + s);
            const double am = scale_factor(t_r - s);
            if (std::fabs(ap - am) > tol * std::max(ap, am)) {
                return false;
            }
        }
        return true;
    }

private:
    explicit Background(Model m) : model_(std::move(m)) {}

    static double check_rate(double H)
    {
        if (!std::isfinite(H) || H < 0.0) {
            throw std::invalid_argument("background: Hubble rate must be finite and >= 0");
        }
        return H;
    }

    Model model_{Minkowski{}};
};

} // namespace harvest
