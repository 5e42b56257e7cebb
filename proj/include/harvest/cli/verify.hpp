// `harvest verify <suite>`: numerical checks of the interference symmetries
// and of the closed-form kernels.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "harvest/cli/config.hpp"
#include "harvest/harvesting.hpp"
#include "harvest/kernels.hpp"

namespace harvest::cli {

enum class VerifyStatus { Pass, Fail, ViolationExpected, Skipped };

[[nodiscard]] inline const char *to_string(VerifyStatus s) noexcept
{
    switch (s) {
    case VerifyStatus::Pass: return "PASS";
    case VerifyStatus::Fail: return "FAIL";
    case VerifyStatus::ViolationExpected: return "VIOLATION-EXPECTED";
    case VerifyStatus::Skipped: return "SKIPPED";
    }
    return "FAIL";
}

struct VerifyRow {
    std::string check;
    double tolerance = 0.0;
    double achieved = 0.0;
    VerifyStatus status = VerifyStatus::Fail;
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyRow> rows;

    [[nodiscard]] bool passed() const
    {
        return std::none_of(rows.begin(), rows.end(), [](const VerifyRow &r) { return r.status == VerifyStatus::Fail; });
    }
};

[[nodiscard]] inline const std::vector<std::string> &verify_suites()
{
    static const std::vector<std::string> s = {"prop1", "prop3", "prop5", "prop6", "prop7", "appendixA", "kernels"};
    return s;
}

namespace verify_detail {

inline RunConfig preset(const std::string &name, const QuadratureSpec &quad)
{
    RunConfig c;
    c.quad = quad;
    apply_preset(c, name);
    return c;
}

inline std::string label(const char *fmt, double x)
{
    char buf[128];
    std::snprintf(buf, sizeof buf, fmt, x);
    return buf;
}

inline VerifyRow from_check(std::string name, const CheckResult &c)
{
    VerifyRow r{std::move(name), c.tolerance, c.achieved, VerifyStatus::Skipped};
    if (c.applicable) {
        r.status = c.pass ? VerifyStatus::Pass : VerifyStatus::Fail;
    }
    return r;
}

inline VerifyReport kernels_suite()
{
    VerifyReport rep{"kernels", {}};
    constexpr double tol = 1e-8;
    for (double sigma : {0.3, 1.0}) {
        for (double dt_s : {0.0, 0.5, 1.0, 3.0, 8.0}) {
            for (double d_s : {0.0, 1.0, 3.0, 7.0}) {
                const double dt = dt_s * sigma;
                const double d = d_s * sigma;
                const cplx closed = d > 0.0 ? kernels::k_ab(dt, d, sigma) : kernels::k_jj(dt, sigma);
                const cplx oracle = kernels::k_oracle(dt, d, sigma).value;
                const double dev = std::abs(closed - oracle) / std::abs(oracle);
                char buf[96];
                std::snprintf(buf, sizeof buf, "%s sigma=%g dt/sigma=%g d/sigma=%g", d > 0.0 ? "k_ab" : "k_jj", sigma,
                              dt_s, d_s);
                rep.rows.push_back({buf, tol, dev, dev <= tol ? VerifyStatus::Pass : VerifyStatus::Fail});
            }
        }
    }
    return rep;
}

inline VerifyReport prop1_suite(const QuadratureSpec &quad)
{
    VerifyReport rep{"prop1", {}};
    const RunConfig c = preset("fig2_skew", quad);
    const Background bg = make_background(c);
    for (double dt : {-2.0, 0.0, 2.0}) {
        const auto [a, b] = make_pair(c, c.d, dt);
        rep.rows.push_back(from_check(label("fig2_skew gap reversal dt=%g", dt), check_prop1(a, b, bg, quad, 1e-8)));
    }
    return rep;
}

inline VerifyReport prop3_suite(const QuadratureSpec &quad)
{
    VerifyReport rep{"prop3", {}};
    RunConfig c = preset("fig2_symmetric", quad);
    c.sweep.steps = 21;
    const Background bg = make_background(c);
    for (int i = 0; i < c.sweep.steps; ++i) {
        const double dt = c.sweep.value(i);
        const auto [a, b] = make_pair(c, c.d, dt);
        const double cosg = std::fabs(analyze(a, b, bg, quad).report.cos_dgamma);
        rep.rows.push_back({label("fig2_symmetric |cos dgamma| dt=%g", dt), 1e-4, cosg,
                            cosg < 1e-4 ? VerifyStatus::Pass : VerifyStatus::Fail});
    }
    return rep;
}

inline VerifyReport prop5_suite(const QuadratureSpec &quad)
{
    VerifyReport rep{"prop5", {}};
    RunConfig c = preset("fig5", quad);
    c.sweep.steps = 9;
    auto max_cos = [&](const Background &bg) {
        double worst = 0.0;
        for (int i = 0; i < c.sweep.steps; ++i) {
            const auto [a, b] = make_pair(c, c.d, c.sweep.value(i));
            worst = std::max(worst, std::fabs(analyze(a, b, bg, quad).report.cos_dgamma));
        }
        return worst;
    };
    const double cosh_cos = max_cos(Background::cosh_symmetric(c.background.H));
    rep.rows.push_back({"cosh H=0.1 max |cos dgamma| (reflection-symmetric)", 1e-3, cosh_cos,
                        cosh_cos < 1e-3 ? VerifyStatus::Pass : VerifyStatus::Fail});
    const double ds_cos = max_cos(Background::de_sitter(c.background.H));
    // De Sitter breaks the reflection hypothesis; a clearly nonzero phase is the expected outcome.
    rep.rows.push_back({"desitter H=0.1 max |cos dgamma| (hypothesis unmet)", 0.1, ds_cos,
                        ds_cos > 0.1 ? VerifyStatus::ViolationExpected : VerifyStatus::Fail});
    return rep;
}

inline VerifyReport prop6_suite(const QuadratureSpec &quad)
{
    VerifyReport rep{"prop6", {}};
    for (const char *name : {"fig2_skew", "fig2_symmetric"}) {
        const RunConfig c = preset(name, quad);
        const Background bg = make_background(c);
        for (double dt : {1.0, 2.5}) {
            const auto [a, b] = make_pair(c, c.d, dt);
            const auto e = check_appendixE(a, b, bg, quad, 1e-8);
            rep.rows.push_back(from_check(std::string(name) + label(" swap t_a<->t_b dt=%g", dt), e.prop6));
        }
    }
    return rep;
}

inline VerifyReport prop7_suite(const QuadratureSpec &quad)
{
    VerifyReport rep{"prop7", {}};
    const RunConfig c = preset("fig4", quad);
    const Background bg = make_background(c);
    for (double dt : {1.0, 2.0, 3.0}) {
        const auto [a, b] = make_pair(c, c.d, dt);
        const auto e = check_appendixE(a, b, bg, quad, 1e-8);
        rep.rows.push_back(from_check(label("fig4 swap t_a<->t_b dt=%g", dt), e.prop7));
    }
    return rep;
}

inline VerifyReport appendixA_suite(const QuadratureSpec &quad)
{
    VerifyReport rep{"appendixA", {}};
    RunConfig c = preset("fig2_symmetric", quad);
    c.sweep.steps = 21;
    const Background bg = make_background(c);
    for (int i = 0; i < c.sweep.steps; ++i) {
        const double dt = c.sweep.value(i);
        const auto [a, b] = make_pair(c, c.d, dt);
        const auto r = analyze(a, b, bg, quad).report;
        rep.rows.push_back(from_check(label("fig2_symmetric N >= hypot(N+, N-) dt=%g", dt),
                                      check_appendixA(r, 1e-9, c.tol_orth)));
    }
    return rep;
}

} // namespace verify_detail

/// Runs one named suite. Unknown names throw std::invalid_argument.
[[nodiscard]] inline VerifyReport run_verify(const std::string &suite, const QuadratureSpec &quad = {})
{
    using namespace verify_detail;
    if (suite == "kernels") {
        return kernels_suite();
    }
    if (suite == "prop1") {
        return prop1_suite(quad);
    }
    if (suite == "prop3") {
        return prop3_suite(quad);
    }
    if (suite == "prop5") {
        return prop5_suite(quad);
    }
    if (suite == "prop6") {
        return prop6_suite(quad);
    }
    if (suite == "prop7") {
        return prop7_suite(quad);
    }
    if (suite == "appendixA") {
        return appendixA_suite(quad);
    }
    throw std::invalid_argument("unknown verify suite '" + suite + "'");
}

inline void print_report(std::ostream &out, const VerifyReport &rep)
{
    std::size_t width = 5;
    for (const auto &r : rep.rows) {
        width = std::max(width, r.check.size());
    }
    out << "suite " << rep.suite << "\n";
    out << "  " << "check" << std::string(width - 5 + 2, ' ') << "tolerance    achieved     status\n";
    for (const auto &r : rep.rows) {
        char nums[64];
        std::snprintf(nums, sizeof nums, "%-12.3e %-12.3e ", r.tolerance, r.achieved);
        out << "  " << r.check << std::string(width - r.check.size() + 2, ' ') << nums << to_string(r.status) << "\n";
    }
    out << (rep.passed() ? "PASS" : "FAIL") << "\n";
}

} // namespace harvest::cli
