// Adaptive tensor-product Gauss-Legendre integration of complex integrands over
// the (t, t') plane or the time-ordered wedge t' <= t.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "harvest/switching.hpp"

namespace harvest {

using cplx = std::complex<double>;

struct QuadratureSpec {
    double rel_tol = 1e-9;
    double abs_tol = 1e-14;
    int max_depth = 40;    // bisections allowed below an initial cell
    double window_k = 8.0; // truncation half-width in units of each switching width
    int panel_order = 16;  // Gauss-Legendre nodes per panel per axis

    void validate() const
    {
        if (!(rel_tol > 0.0) || !(abs_tol >= 0.0)) {
            throw std::invalid_argument("quad: rel_tol must be > 0 and abs_tol >= 0");
        }
        if (panel_order < 8 || panel_order > 64) {
            throw std::invalid_argument("quad: panel_order must lie in [8, 64]");
        }
        if (!(window_k >= 5.0)) {
            throw std::invalid_argument("quad: window_k must be >= 5");
        }
        if (max_depth < 1) {
            throw std::invalid_argument("quad: max_depth must be >= 1");
        }
    }
};

enum class Ordering {
    Full,         // whole rectangle t in tw, t' in tpw
    OrderedLower, // t in tw and t' <= t, integrated in (t, s = t - t')
};

struct Domain2D {
    TimeWindow t;
    TimeWindow tp;
    Ordering ordering = Ordering::Full;
    // Largest side of the initial cells; adaptivity refines from there.
    double initial_width = std::numeric_limits<double>::infinity();

    /// Extent of s = t - t' in the OrderedLower parametrization.
    [[nodiscard]] double s_max() const noexcept { return t.hi - tp.lo; }
};

struct QuadResult {
    cplx value{};
    double err_est = 0.0;
    long evaluations = 0;
    int panels = 0;
};

/// Quadrature did not reach its tolerance. Carries the best estimate.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string &what, QuadResult partial)
        : std::runtime_error(what), partial_(partial)
    {
    }
    [[nodiscard]] const QuadResult &partial() const noexcept { return partial_; }

private:
    QuadResult partial_;
};

/// Gauss-Legendre rule on [-1, 1] plus the Legendre polynomials at its nodes
/// (used to measure per-axis resolution from the spectral tail).
struct GaussLegendreRule {
    std::vector<double> x;
    std::vector<double> w;
    std::vector<double> p_top;  // P_{n-1}(x_i)
    std::vector<double> p_next; // P_{n-2}(x_i)
};

namespace quad_detail {

inline GaussLegendreRule make_rule(int n)
{
    GaussLegendreRule r;
    r.x.resize(static_cast<std::size_t>(n));
    r.w.resize(static_cast<std::size_t>(n));
    r.p_top.resize(static_cast<std::size_t>(n));
    r.p_next.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = 0.0;
            for (int k = 1; k <= n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
            }
            dp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / dp;
            z -= dz;
            if (std::fabs(dz) < 1e-16) {
                break;
            }
        }
        // Recompute the derivative at the converged node for the weight.
        double p0 = 1.0;
        double p1 = 0.0;
        double pm = 0.0;
        for (int k = 1; k <= n; ++k) {
            pm = p1;
            p1 = p0;
            p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * pm) / k;
        }
        dp = n * (z * p0 - p1) / (z * z - 1.0);
        const auto idx = static_cast<std::size_t>(i);
        r.x[idx] = -z; // ascending order
        r.w[idx] = 2.0 / ((1.0 - z * z) * dp * dp);
        // P_{n-1}, P_{n-2} at -z: parity (-1)^k.
        r.p_top[idx] = ((n - 1) % 2 == 0 ? 1.0 : -1.0) * p1;
        r.p_next[idx] = ((n - 2) % 2 == 0 ? 1.0 : -1.0) * pm;
    }
    return r;
}

inline const GaussLegendreRule &rule(int n)
{
    static const std::vector<GaussLegendreRule> table = [] {
        std::vector<GaussLegendreRule> t(65);
        for (int k = 2; k <= 64; ++k) {
            t[static_cast<std::size_t>(k)] = make_rule(k);
        }
        return t;
    }();
    if (n < 2 || n > 64) {
        throw std::invalid_argument("Gauss-Legendre order out of range");
    }
    return table[static_cast<std::size_t>(n)];
}

struct Panel {
    double u0, u1, v0, v1;
    cplx value;
    double err;
    double abs_mass; // integral of |f| (roundoff floor reference)
    double tail_u;
    double tail_v;
    int depth;
};

struct PanelOrder {
    bool operator()(const Panel &a, const Panel &b) const noexcept { return a.err < b.err; }
};

} // namespace quad_detail

/// Exposes the cached Gauss-Legendre rule of order n (2..64).
[[nodiscard]] inline const GaussLegendreRule &gauss_legendre(int n) { return quad_detail::rule(n); }

/// Integrates f(t, t') over the domain.
///
/// Each panel carries an n x n Gauss-Legendre estimate and an (n/2) x (n/2)
/// companion estimate; their difference is the panel error. The worst panel
/// is bisected along the axis whose Legendre tail is larger. For
/// OrderedLower the wedge is parametrized by (t, s = t - t') with
/// s in [0, s_max], so the time-ordering step never enters the integrand.
template <class F>
[[nodiscard]] QuadResult integrate_2d(F &&f, const Domain2D &dom, const QuadratureSpec &spec)
{
    using namespace quad_detail;
    spec.validate();
    if (!(dom.t.hi > dom.t.lo) || !(dom.tp.hi > dom.tp.lo)) {
        throw std::invalid_argument("integrate_2d: empty window");
    }
    const bool ordered = dom.ordering == Ordering::OrderedLower;
    const double v_lo = ordered ? 0.0 : dom.tp.lo;
    const double v_hi = ordered ? dom.s_max() : dom.tp.hi;
    if (!(v_hi > v_lo)) {
        throw std::invalid_argument("integrate_2d: time-ordered wedge is empty");
    }

    const int n = spec.panel_order;
    const int m = n / 2;
    const GaussLegendreRule &hi_rule = rule(n);
    const GaussLegendreRule &lo_rule = rule(m);
    const auto nn = static_cast<std::size_t>(n);
    std::vector<cplx> grid(nn * nn);
    std::vector<cplx> col(nn);
    long evaluations = 0;

    auto eval = [&](double u, double v) -> cplx {
        ++evaluations;
        return ordered ? f(u, u - v) : f(u, v);
    };

    // Spectral tail of a column of n values: |c_{n-1}| + |c_{n-2}| in the Legendre basis.
    auto tail = [&](auto &&at) {
        cplx c1{};
        cplx c2{};
        for (std::size_t i = 0; i < nn; ++i) {
            const cplx val = at(i);
            c1 += hi_rule.w[i] * hi_rule.p_top[i] * val;
            c2 += hi_rule.w[i] * hi_rule.p_next[i] * val;
        }
        return 0.5 * ((2.0 * n - 1.0) * std::abs(c1) + (2.0 * n - 3.0) * std::abs(c2));
    };

    auto make_panel = [&](double u0, double u1, double v0, double v1, int depth) {
        const double cu = 0.5 * (u0 + u1);
        const double ru = 0.5 * (u1 - u0);
        const double cv = 0.5 * (v0 + v1);
        const double rv = 0.5 * (v1 - v0);
        cplx q_hi{};
        double mass = 0.0;
        for (std::size_t i = 0; i < nn; ++i) {
            const double u = cu + ru * hi_rule.x[i];
            for (std::size_t j = 0; j < nn; ++j) {
                const cplx val = eval(u, cv + rv * hi_rule.x[j]);
                grid[i * nn + j] = val;
                const double w = hi_rule.w[i] * hi_rule.w[j];
                q_hi += w * val;
                mass += w * std::abs(val);
            }
        }
        cplx q_lo{};
        const auto mm = static_cast<std::size_t>(m);
        for (std::size_t i = 0; i < mm; ++i) {
            const double u = cu + ru * lo_rule.x[i];
            for (std::size_t j = 0; j < mm; ++j) {
                q_lo += lo_rule.w[i] * lo_rule.w[j] * eval(u, cv + rv * lo_rule.x[j]);
            }
        }
        double tail_u = 0.0;
        double tail_v = 0.0;
        for (std::size_t j = 0; j < nn; ++j) {
            tail_u += hi_rule.w[j] * tail([&](std::size_t i) { return grid[i * nn + j]; });
        }
        for (std::size_t i = 0; i < nn; ++i) {
            tail_v += hi_rule.w[i] * tail([&](std::size_t j) { return grid[i * nn + j]; });
        }
        const double area = ru * rv;
        Panel p{u0, u1, v0, v1, area * q_hi, area * std::abs(q_hi - q_lo), area * mass,
                area * tail_u, area * tail_v, depth};
        return p;
    };

    std::priority_queue<Panel, std::vector<Panel>, PanelOrder> open;
    std::vector<Panel> done;

    const double init_w = dom.initial_width;
    auto cells = [&](double len) {
        if (!std::isfinite(init_w) || !(init_w > 0.0)) {
            return 1;
        }
        return std::max(1, static_cast<int>(std::ceil(len / init_w - 1e-12)));
    };
    const int nu = cells(dom.t.hi - dom.t.lo);
    const int nv = cells(v_hi - v_lo);
    const double du = (dom.t.hi - dom.t.lo) / nu;
    const double dv = (v_hi - v_lo) / nv;
    for (int i = 0; i < nu; ++i) {
        for (int j = 0; j < nv; ++j) {
            const double u0 = dom.t.lo + i * du;
            const double u1 = (i + 1 == nu) ? dom.t.hi : u0 + du;
            const double v0 = v_lo + j * dv;
            const double v1 = (j + 1 == nv) ? v_hi : v0 + dv;
            open.push(make_panel(u0, u1, v0, v1, 0));
        }
    }

    constexpr double eps = std::numeric_limits<double>::epsilon();
    auto totals = [&]() {
        cplx value{};
        double err = 0.0;
        // Fixed summation order: settled panels first, then the heap's storage order.
        for (const auto &p : done) {
            value += p.value;
            err += p.err;
        }
        auto copy = open;
        while (!copy.empty()) {
            value += copy.top().value;
            err += copy.top().err;
            copy.pop();
        }
        return std::pair{value, err};
    };

    cplx value{};
    double err = 0.0;
    for (;;) {
        std::tie(value, err) = totals();
        const double target = std::max(spec.abs_tol, spec.rel_tol * std::abs(value));
        if (err <= target) {
            break;
        }
        // Refine the worst panels in a batch before re-summing.
        bool refined = false;
        const std::size_t batch = std::max<std::size_t>(1, open.size() / 8);
        for (std::size_t b = 0; b < batch && !open.empty(); ++b) {
            Panel p = open.top();
            if (p.err <= 0.25 * target / static_cast<double>(open.size() + done.size())) {
                break;
            }
            open.pop();
            if (p.err <= 16.0 * eps * p.abs_mass) {
                done.push_back(p); // at the roundoff floor
                continue;
            }
            if (p.depth >= spec.max_depth) {
                done.push_back(p);
                std::tie(value, err) = totals();
                throw QuadratureError("integrate_2d: max_depth exceeded (err_est " +
                                          std::to_string(err) + ")",
                                      QuadResult{value, err, evaluations,
                                                 static_cast<int>(open.size() + done.size())});
            }
            if (p.tail_u >= p.tail_v) {
                const double um = 0.5 * (p.u0 + p.u1);
                open.push(make_panel(p.u0, um, p.v0, p.v1, p.depth + 1));
                open.push(make_panel(um, p.u1, p.v0, p.v1, p.depth + 1));
            } else {
                const double vm = 0.5 * (p.v0 + p.v1);
                open.push(make_panel(p.u0, p.u1, p.v0, vm, p.depth + 1));
                open.push(make_panel(p.u0, p.u1, vm, p.v1, p.depth + 1));
            }
            refined = true;
        }
        if (!refined) {
            if (open.empty() || open.top().err <= 16.0 * eps * open.top().abs_mass) {
                throw QuadratureError("integrate_2d: roundoff floor above tolerance (err_est " +
                                          std::to_string(err) + ")",
                                      QuadResult{value, err, evaluations,
                                                 static_cast<int>(open.size() + done.size())});
            }
            // The batch threshold skipped everything; force one split of the worst panel.
            Panel p = open.top();
            open.pop();
            const double um = 0.5 * (p.u0 + p.u1);
            const double vm = 0.5 * (p.v0 + p.v1);
            if (p.tail_u >= p.tail_v) {
                open.push(make_panel(p.u0, um, p.v0, p.v1, p.depth + 1));
                open.push(make_panel(um, p.u1, p.v0, p.v1, p.depth + 1));
            } else {
                open.push(make_panel(p.u0, p.u1, p.v0, vm, p.depth + 1));
                open.push(make_panel(p.u0, p.u1, vm, p.v1, p.depth + 1));
            }
        }
    }
    return QuadResult{value, err, evaluations, static_cast<int>(open.size() + done.size())};
}

/// Truncated integration domain for a pair of switchings (t follows the first
/// profile, t' the second).
[[nodiscard]] inline Domain2D build_domain(const SwitchingProfile &first, const SwitchingProfile &second,
                                           const QuadratureSpec &spec, Ordering ordering)
{
    Domain2D dom;
    dom.t = first.support_window(spec.window_k);
    dom.tp = second.support_window(spec.window_k);
    dom.ordering = ordering;
    if (ordering == Ordering::OrderedLower && !(dom.s_max() > 0.0)) {
        throw std::invalid_argument("build_domain: time-ordered wedge is empty for these windows");
    }
    dom.initial_width = 0.5 * std::min(first.width(), second.width());
    return dom;
}

} // namespace harvest
