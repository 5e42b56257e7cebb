#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "harvest/quadrature.hpp"

using harvest::Domain2D;
using harvest::integrate_2d;
using harvest::Ordering;
using harvest::QuadratureSpec;
using harvest::SwitchingProfile;
using cplx = std::complex<double>;

namespace {

Domain2D square(double k, Ordering o)
{
    Domain2D d;
    d.t = {-k, k};
    d.tp = {-k, k};
    d.ordering = o;
    return d;
}

} // namespace

TEST(GaussLegendre, IntegratesPolynomialsExactly)
{
    for (int n : {8, 16, 33}) {
        const auto &r = harvest::gauss_legendre(n);
        double sum_w = 0.0;
        double sum_x2n = 0.0;
        for (std::size_t i = 0; i < r.x.size(); ++i) {
            sum_w += r.w[i];
            sum_x2n += r.w[i] * std::pow(r.x[i], 2 * n - 2);
        }
        EXPECT_NEAR(sum_w, 2.0, 1e-14);
        EXPECT_NEAR(sum_x2n, 2.0 / (2 * n - 1), 1e-14);
    }
}

TEST(Integrate, SeparableGaussian)
{
    const QuadratureSpec spec;
    auto f = [](double t, double tp) { return cplx(std::exp(-t * t - tp * tp), 0.0); };
    const auto full = integrate_2d(f, square(8.0, Ordering::Full), spec);
    EXPECT_NEAR(full.value.real(), std::numbers::pi, 1e-10);
    const auto half = integrate_2d(f, square(8.0, Ordering::OrderedLower), spec);
    EXPECT_NEAR(half.value.real(), std::numbers::pi / 2.0, 1e-10);
    EXPECT_LE(full.err_est, std::max(spec.abs_tol, spec.rel_tol * std::abs(full.value)));
}

TEST(Integrate, OscillatoryGaussian)
{
    const double omega = 5.0;
    auto f = [omega](double t, double tp) {
        return std::exp(-t * t - tp * tp) * cplx(std::cos(omega * (t + tp)), std::sin(omega * (t + tp)));
    };
    const auto r = integrate_2d(f, square(8.0, Ordering::Full), QuadratureSpec{});
    const double exact = std::numbers::pi * std::exp(-omega * omega / 2.0);
    EXPECT_NEAR(r.value.real(), exact, 1e-9 * exact + 1e-14);
    EXPECT_LT(std::fabs(r.value.imag()), 1e-14);
}

TEST(Integrate, WedgePlusReversedWedgeIsSquare)
{
    auto f = [](double t, double tp) {
        return std::exp(-0.5 * t * t - (tp - 0.7) * (tp - 0.7)) * cplx(std::cos(3.0 * t - tp), std::sin(2.0 * tp));
    };
    auto g = [&f](double t, double tp) { return f(tp, t); };
    const QuadratureSpec spec;
    const Domain2D full = square(9.0, Ordering::Full);
    const Domain2D lower = square(9.0, Ordering::OrderedLower);
    const cplx sum = integrate_2d(f, lower, spec).value + integrate_2d(g, lower, spec).value;
    const cplx ref = integrate_2d(f, full, spec).value;
    EXPECT_LT(std::abs(sum - ref), 1e-10 * std::abs(ref));
}

TEST(Integrate, HalvingToleranceStaysWithinErrorEstimate)
{
    auto f1 = [](double t, double tp) { return cplx(std::exp(-t * t - 2.0 * tp * tp), 0.0); };
    auto f2 = [](double t, double tp) {
        return std::exp(-t * t - tp * tp) * cplx(std::cos(4.0 * (t - tp)), std::sin(4.0 * (t + 0.5 * tp)));
    };
    auto f3 = [](double t, double tp) { return cplx(std::exp(-(t - tp) * (t - tp) / 0.02 - 0.1 * t * t), 0.0); };
    QuadratureSpec loose;
    loose.rel_tol = 1e-6;
    QuadratureSpec tight = loose;
    tight.rel_tol = 0.5e-6;
    const Domain2D dom = square(8.0, Ordering::Full);
    auto check = [&](auto f) {
        const auto a = integrate_2d(f, dom, loose);
        const auto b = integrate_2d(f, dom, tight);
        EXPECT_LE(std::abs(a.value - b.value), a.err_est + 1e-16);
    };
    check(f1);
    check(f2);
    check(f3);
}

TEST(Integrate, ErrorCarriesPartialResult)
{
    QuadratureSpec spec;
    spec.max_depth = 1;
    spec.rel_tol = 1e-13;
    auto f = [](double t, double tp) { return cplx(std::exp(-(t - tp) * (t - tp) / 1e-4), 0.0); };
    try {
        (void)integrate_2d(f, square(8.0, Ordering::Full), spec);
        FAIL() << "expected QuadratureError";
    } catch (const harvest::QuadratureError &e) {
        EXPECT_GT(e.partial().evaluations, 0);
        EXPECT_TRUE(std::isfinite(e.partial().err_est));
    }
}

TEST(Spec, Validation)
{
    QuadratureSpec s;
    EXPECT_NO_THROW(s.validate());
    s.panel_order = 4;
    EXPECT_THROW(s.validate(), std::invalid_argument);
    s = {};
    s.window_k = 4.0;
    EXPECT_THROW(s.validate(), std::invalid_argument);
    s = {};
    s.rel_tol = 0.0;
    EXPECT_THROW(s.validate(), std::invalid_argument);
}

TEST(BuildDomain, Windows)
{
    QuadratureSpec spec;
    spec.window_k = 6.0;
    const auto g0 = SwitchingProfile::gaussian(1.0, 0.0);
    const auto g4 = SwitchingProfile::gaussian(1.0, 4.0);
    const auto d = harvest::build_domain(g0, g0, spec, Ordering::Full);
    EXPECT_EQ(d.t.lo, -6.0);
    EXPECT_EQ(d.t.hi, 6.0);
    EXPECT_EQ(d.tp.lo, -6.0);
    EXPECT_EQ(d.tp.hi, 6.0);
    const auto e = harvest::build_domain(g0, g4, spec, Ordering::Full);
    EXPECT_EQ(e.tp.lo, -2.0);
    EXPECT_EQ(e.tp.hi, 10.0);
    const auto far = SwitchingProfile::gaussian(1.0, 20.0);
    EXPECT_THROW((void)harvest::build_domain(g0, far, spec, Ordering::OrderedLower), std::invalid_argument);
    EXPECT_NO_THROW((void)harvest::build_domain(far, g0, spec, Ordering::OrderedLower));
}
