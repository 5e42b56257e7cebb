#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "harvest/kernels.hpp"
#include "harvest/specialfn.hpp"

namespace k = harvest::kernels;
using cplx = std::complex<double>;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

} // namespace

TEST(ScriptI, Values)
{
    const cplx z0 = k::script_i(0.0, 0.3);
    EXPECT_DOUBLE_EQ(z0.real(), std::sqrt(std::numbers::pi) / 0.6);
    EXPECT_EQ(z0.imag(), 0.0);
    const cplx z1 = k::script_i(1.0, 1.0);
    EXPECT_DOUBLE_EQ(z1.real(), std::sqrt(std::numbers::pi) / 2.0 * std::exp(-0.25));
    EXPECT_DOUBLE_EQ(z1.imag(), -harvest::specialfn::dawson(0.5));
    EXPECT_NEAR(z1.imag(), -0.4244363835020223, 1e-15);
    for (double z : {0.2, 1.7, 5.0}) {
        EXPECT_EQ(k::script_i(-z, 0.4), std::conj(k::script_i(z, 0.4)));
    }
}

TEST(KAb, EqualTimeValueIsReal)
{
    const double d = 2.1;
    const double s = 0.3;
    const cplx v = k::k_ab(0.0, d, s);
    EXPECT_NEAR(v.real(), 4.0 * std::numbers::pi / (s * d) * harvest::specialfn::dawson(d / (2 * s)), 1e-13);
    EXPECT_EQ(v.imag(), 0.0);
}

TEST(KAb, DecaysFarFromLightcone)
{
    const double d = 2.1;
    const double s = 0.3;
    // The Gaussian (imaginary) part dies off; the real part keeps the
    // algebraic vacuum tail -4 pi / (dt^2 - d^2) of a massless field.
    for (double dt : {d + 20 * s, d + 40 * s, 50.0}) {
        const cplx v = k::k_ab(dt, d, s);
        EXPECT_LT(std::fabs(v.imag()), 1e-10) << dt;
        const double tail = -4.0 * std::numbers::pi / (dt * dt - d * d);
        EXPECT_NEAR(v.real(), tail, 0.05 * std::fabs(tail)) << dt;
    }
    EXPECT_LT(std::abs(k::k_ab(1e6, d, s)), 1e-10);
}

TEST(KAb, RejectsZeroSeparation)
{
    EXPECT_THROW((void)k::k_ab(0.1, 0.0, 0.3), std::domain_error);
    EXPECT_THROW((void)k::k_ab_minus(0.1, 0.0, 0.3), std::domain_error);
}

TEST(KJj, ValuesAndParity)
{
    EXPECT_EQ(k::k_jj(0.0, 0.3), cplx(2.0 * std::numbers::pi / 0.09, 0.0));
    for (double dt : {0.1, 0.9, 4.0}) {
        EXPECT_EQ(k::k_jj(-dt, 0.3), std::conj(k::k_jj(dt, 0.3)));
    }
}

TEST(KMinus, ShapeAndParity)
{
    const double d = 2.1;
    const double s = 0.3;
    EXPECT_EQ(k::k_ab_minus(0.0, d, s), cplx(0.0, 0.0));
    for (double dt : {0.5, 2.1, 3.3}) {
        EXPECT_EQ(k::k_ab_minus(dt, d, s).real(), 0.0);
        EXPECT_EQ(k::k_ab_minus(-dt, d, s), -k::k_ab_minus(dt, d, s));
    }
    const double peak = std::pow(std::numbers::pi, 1.5) / (s * d);
    EXPECT_NEAR(std::abs(k::k_ab_minus(d, d, s)), peak * (1.0 - std::exp(-d * d / (s * s))), 1e-12 * peak);
    EXPECT_NEAR(std::abs(k::k_ab_minus(d, d, s)), peak, 1e-12 * peak);
    // Deep inside and far outside the lightcone band |dt| = d +- 10 sigma.
    const double far_d = 5.0;
    const double far_peak = std::pow(std::numbers::pi, 1.5) / (s * far_d);
    for (double dt : {0.0, far_d - 10 * s - 0.01, far_d + 10 * s + 0.01, 20.0}) {
        EXPECT_LT(std::abs(k::k_ab_minus(dt, far_d, s)), 1e-9 * far_peak) << dt;
        EXPECT_LT(std::abs(k::k_ab_minus(-dt, far_d, s)), 1e-9 * far_peak) << dt;
    }
}

TEST(KMinus, IsOddPartOfFullKernel)
{
    for (double d : {0.3, 2.1, 5.0}) {
        for (double dt : {-4.0, -0.7, 0.0, 0.4, 2.1, 6.0}) {
            const cplx kp = k::k_ab(dt, d, 0.3);
            const cplx km = k::k_ab(-dt, d, 0.3);
            EXPECT_LT(std::abs(kp - std::conj(km)), 1e-10);
            EXPECT_LT(std::abs(kp - km - 2.0 * k::k_ab_minus(dt, d, 0.3)), 1e-10) << d << " " << dt;
        }
    }
    for (double dt : {-1.0, 0.2, 3.0}) {
        const cplx full = k::k_jj(dt, 0.3);
        EXPECT_EQ(k::k_jj_minus(dt, 0.3), cplx(0.0, full.imag()));
    }
}

TEST(KMinus, SmallSeparationApproachesSameDetectorPart)
{
    const double s = 0.3;
    for (double dt : {0.1, 0.4, 1.0}) {
        EXPECT_NEAR(k::k_ab_minus(dt, 1e-5, s).imag(), k::k_jj_minus(dt, s).imag(),
                    1e-6 * std::fabs(k::k_jj_minus(dt, s).imag()));
    }
}

TEST(Oracle, MatchesClosedFormsOnGrid)
{
    const double s = 0.3;
    for (double dt_s : {0.0, 0.5, 1.0, 3.0, 8.0}) {
        for (double d_s : {1.0, 3.0, 7.0}) {
            const cplx ref = k::k_oracle(dt_s * s, d_s * s, s).value;
            EXPECT_LT(rel(k::k_ab(dt_s * s, d_s * s, s), ref), 1e-8) << dt_s << " " << d_s;
        }
        const cplx ref0 = k::k_oracle(dt_s * s, 0.0, s).value;
        EXPECT_LT(rel(k::k_jj(dt_s * s, s), ref0), 1e-8) << dt_s;
    }
}

TEST(Oracle, SpecialPoints)
{
    EXPECT_LT(rel(k::k_ab(1.0, 2.1, 0.3), k::k_oracle(1.0, 2.1, 0.3).value), 1e-9);
    EXPECT_LT(rel(k::k_jj(0.3, 0.3), k::k_oracle(0.3, 0.0, 0.3).value), 1e-9);
    EXPECT_NEAR(k::k_oracle(0.0, 0.0, 0.5).value.real(), 2.0 * std::numbers::pi / 0.25, 1e-9);
    EXPECT_EQ(k::k_oracle(0.0, 1.3, 0.5).value.imag(), 0.0);
    EXPECT_THROW((void)k::k_oracle(0.0, -1.0, 0.5), std::domain_error);
}

TEST(Kernels, PairSigmaAndDelta)
{
    EXPECT_DOUBLE_EQ(k::pair_sigma(0.3, 0.3), 0.3);
    EXPECT_DOUBLE_EQ(k::pair_sigma(0.1, 0.3), std::sqrt(0.05));
    const auto m = harvest::Background::minkowski();
    EXPECT_EQ(k::effective_delta(m, 3.0, 1.0), 2.0);
    const auto ds = harvest::Background::de_sitter(0.1);
    EXPECT_EQ(k::effective_delta(ds, 2.0, -1.0), -k::effective_delta(ds, -1.0, 2.0));
    EXPECT_NEAR(k::effective_delta(ds, 2.0, -1.0), (std::exp(0.1) - std::exp(-0.2)) / 0.1, 1e-14);
}
