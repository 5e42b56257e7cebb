// Detector-pair moments, negativities and the communication/harvesting
// interference analysis. All quantities are per lambda^2 (lambda = 1).
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "harvest/background.hpp"
#include "harvest/kernels.hpp"
#include "harvest/quadrature.hpp"
#include "harvest/switching.hpp"

namespace harvest {

using Vec3 = std::array<double, 3>;

/// One Unruh-DeWitt detector on an inertial comoving trajectory.
///
/// The initial state is cos(alpha)|g> + e^{i beta} sin(alpha)|e>; alpha = 0 is
/// the ground state. A negative gap is allowed.
struct DetectorSpec {
    double gap = 0.0;
    Vec3 position{0.0, 0.0, 0.0};
    double sigma = 1.0;
    SwitchingProfile switching = SwitchingProfile::gaussian(1.0, 0.0);
    double state_alpha = 0.0;
    double state_beta = 0.0;

    void validate() const
    {
        if (!(sigma > 0.0) || !std::isfinite(sigma)) {
            throw std::invalid_argument("detector: sigma must be positive and finite");
        }
        if (!std::isfinite(gap)) {
            throw std::invalid_argument("detector: gap must be finite");
        }
        constexpr double two_pi = 2.0 * std::numbers::pi;
        if (!(state_alpha >= 0.0 && state_alpha <= two_pi) || !(state_beta >= -two_pi && state_beta <= two_pi)) {
            throw std::invalid_argument("detector: state angles must lie in [0, 2 pi]");
        }
    }

    [[nodiscard]] bool ground() const noexcept { return state_alpha == 0.0; }
};

[[nodiscard]] inline double separation(const DetectorSpec &a, const DetectorSpec &b) noexcept
{
    const double dx = a.position[0] - b.position[0];
    const double dy = a.position[1] - b.position[1];
    const double dz = a.position[2] - b.position[2];
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

struct BlockResult {
    cplx value{};
    double err = 0.0;
};

enum class MPart { Full, MinusOnly };

namespace harvesting_detail {

inline constexpr double kPrefactor = 1.0 / (2.0 * 8.0 * std::numbers::pi * std::numbers::pi * std::numbers::pi);

inline cplx phase(double x) noexcept { return {std::cos(x), std::sin(x)}; }

// Initial panels no wider than the switching scale and a few smearing widths.
inline void tune_domain(Domain2D &dom, const DetectorSpec &i, const DetectorSpec &j)
{
    const double t_min = std::min(i.switching.width(), j.switching.width());
    const double s_min = std::min(i.sigma, j.sigma);
    dom.initial_width = std::min(0.75 * t_min, 8.0 * s_min);
}

} // namespace harvesting_detail

/// L_ij(w_i, w_j) = (1 / 2(2 pi)^3) int dt dt' w(t, t') e^{-i(w_i t - w_j t')} chi_i(t) chi_j(t') K_ij.
///
/// K_ij is k_jj when the detectors coincide and k_ab otherwise, evaluated at
/// Delta eta, with w the FRW measure factor (1 in Minkowski).
[[nodiscard]] inline BlockResult l_block(const DetectorSpec &di, const DetectorSpec &dj, double omega_i,
                                         double omega_j, const Background &bg, const QuadratureSpec &spec)
{
    using namespace harvesting_detail;
    const double d = separation(di, dj);
    const double sig = kernels::pair_sigma(di.sigma, dj.sigma);
    const SwitchingProfile &chi_i = di.switching;
    const SwitchingProfile &chi_j = dj.switching;
    auto f = [&](double t, double tp) -> cplx {
        const double delta = bg.conformal_difference(t, tp);
        const cplx k = d > 0.0 ? kernels::k_ab(delta, d, sig) : kernels::k_jj(delta, sig);
        const double w = kPrefactor * chi_i(t) * chi_j(tp) * bg.measure_weight(t, tp);
        return w * phase(-(omega_i * t - omega_j * tp)) * k;
    };
    Domain2D dom = build_domain(chi_i, chi_j, spec, Ordering::Full);
    tune_domain(dom, di, dj);
    const QuadResult r = integrate_2d(f, dom, spec);
    return {r.value, r.err_est};
}

/// M(w_a, w_b) over the time-ordered wedge t' <= t:
///   -(1 / 2(2 pi)^3) int_{t' <= t} w [e^{i(w_a t + w_b t')} chi_a(t) chi_b(t')
///                                     + e^{i(w_a t' + w_b t)} chi_a(t') chi_b(t)] K_ab.
/// MinusOnly swaps K_ab for its commutator part K_ab^-.
[[nodiscard]] inline BlockResult m_block(const DetectorSpec &da, const DetectorSpec &db, double omega_a,
                                         double omega_b, const Background &bg, const QuadratureSpec &spec,
                                         MPart part)
{
    using namespace harvesting_detail;
    const double d = separation(da, db);
    const double sig = kernels::pair_sigma(da.sigma, db.sigma);
    const bool minus = part == MPart::MinusOnly;
    auto kernel = [&](double delta) -> cplx {
        if (d > 0.0) {
            return minus ? kernels::k_ab_minus(delta, d, sig) : kernels::k_ab(delta, d, sig);
        }
        return minus ? kernels::k_jj_minus(delta, sig) : kernels::k_jj(delta, sig);
    };
    const SwitchingProfile &chi_a = da.switching;
    const SwitchingProfile &chi_b = db.switching;

    BlockResult out;
    // Term 1: a at the later time t, b at t'.
    auto f1 = [&](double t, double tp) -> cplx {
        const double w = -kPrefactor * chi_a(t) * chi_b(tp) * bg.measure_weight(t, tp);
        return w * phase(omega_a * t + omega_b * tp) * kernel(bg.conformal_difference(t, tp));
    };
    // Term 2: b at the later time t, a at t'.
    auto f2 = [&](double t, double tp) -> cplx {
        const double w = -kPrefactor * chi_a(tp) * chi_b(t) * bg.measure_weight(t, tp);
        return w * phase(omega_a * tp + omega_b * t) * kernel(bg.conformal_difference(t, tp));
    };
    const TimeWindow wa = chi_a.support_window(spec.window_k);
    const TimeWindow wb = chi_b.support_window(spec.window_k);
    // A wedge is empty only when the later-time window lies entirely before the
    // earlier one; its contribution is then below the truncation level.
    if (wa.hi > wb.lo) {
        Domain2D dom = build_domain(chi_a, chi_b, spec, Ordering::OrderedLower);
        tune_domain(dom, da, db);
        const QuadResult r = integrate_2d(f1, dom, spec);
        out.value += r.value;
        out.err += r.err_est;
    }
    if (wb.hi > wa.lo) {
        Domain2D dom = build_domain(chi_b, chi_a, spec, Ordering::OrderedLower);
        tune_domain(dom, da, db);
        const QuadResult r = integrate_2d(f2, dom, spec);
        out.value += r.value;
        out.err += r.err_est;
    }
    return out;
}

/// Four frequency blocks X(s_a Omega_a, s_b Omega_b), indexed [sign_a][sign_b]
/// with 0 for +Omega and 1 for -Omega.
using FrequencyBlocks = std::array<std::array<cplx, 2>, 2>;

struct StateAngles {
    double alpha = 0.0;
    double beta = 0.0;
};

/// General-state non-local term:
///   c_a c_b M(+,+) - c_a s_b e^{2i b_b} M(+,-) - s_a c_b e^{2i b_a} M(-,+) + s_a s_b e^{2i(b_a+b_b)} M(-,-)
/// with c = cos^2(alpha), s = sin^2(alpha).
[[nodiscard]] inline cplx combine_general_M(const FrequencyBlocks &m, StateAngles a, StateAngles b)
{
    using harvesting_detail::phase;
    const double ca = std::cos(a.alpha) * std::cos(a.alpha);
    const double sa = std::sin(a.alpha) * std::sin(a.alpha);
    const double cb = std::cos(b.alpha) * std::cos(b.alpha);
    const double sb = std::sin(b.alpha) * std::sin(b.alpha);
    return ca * cb * m[0][0] - ca * sb * phase(2.0 * b.beta) * m[0][1] - sa * cb * phase(2.0 * a.beta) * m[1][0] +
           sa * sb * phase(2.0 * (a.beta + b.beta)) * m[1][1];
}

/// General-state local term:
///   c_i c_j L(+,+) - c_i s_j e^{-2i b_j} L(+,-) - s_i c_j e^{2i b_i} L(-,+) + s_i s_j e^{2i(b_i-b_j)} L(-,-)
[[nodiscard]] inline cplx combine_general_L(const FrequencyBlocks &l, StateAngles i, StateAngles j)
{
    using harvesting_detail::phase;
    const double ci = std::cos(i.alpha) * std::cos(i.alpha);
    const double si = std::sin(i.alpha) * std::sin(i.alpha);
    const double cj = std::cos(j.alpha) * std::cos(j.alpha);
    const double sj = std::sin(j.alpha) * std::sin(j.alpha);
    return ci * cj * l[0][0] - ci * sj * phase(-2.0 * j.beta) * l[0][1] - si * cj * phase(2.0 * i.beta) * l[1][0] +
           si * sj * phase(2.0 * (i.beta - j.beta)) * l[1][1];
}

/// N = max(0, sqrt(|M|^2 + ((L_aa - L_bb)/2)^2) - (L_aa + L_bb)/2).
[[nodiscard]] inline double negativity(double l_aa, double l_bb, cplx m)
{
    if (!(l_aa >= 0.0) || !(l_bb >= 0.0)) {
        throw std::domain_error("negativity: local noise terms must be non-negative");
    }
    const double half_diff = 0.5 * (l_aa - l_bb);
    const double v = std::hypot(std::abs(m), half_diff) - 0.5 * (l_aa + l_bb);
    return std::max(0.0, v);
}

struct BipartiteMoments {
    cplx L_aa{};
    cplx L_bb{};
    cplx L_ab{};
    cplx M{};
    cplx M_minus{};
    cplx M_plus{};
    double err_budget = 0.0;
};

enum class Interference { FullyDestructive, Destructive, Orthogonal, Constructive, FullyConstructive, Undefined };

[[nodiscard]] inline const char *to_string(Interference c) noexcept
{
    switch (c) {
    case Interference::FullyDestructive: return "fully_destructive";
    case Interference::Destructive: return "destructive";
    case Interference::Orthogonal: return "orthogonal";
    case Interference::Constructive: return "constructive";
    case Interference::FullyConstructive: return "fully_constructive";
    case Interference::Undefined: return "undefined";
    }
    return "undefined";
}

struct InterferenceReport {
    double N = 0.0;
    double N_plus = 0.0;
    double N_minus = 0.0;
    double abs_M = 0.0;
    double abs_M_plus = 0.0;
    double abs_M_minus = 0.0;
    double cos_dgamma = 0.0;
    double dgamma = 0.0;
    Interference classification = Interference::Undefined;
};

struct AnalysisOptions {
    double tol_orth = 1e-3;
    // Blocks whose state weight falls below this are skipped.
    double weight_cutoff = 1e-20;
};

struct Analysis {
    BipartiteMoments moments;
    InterferenceReport report;
};

/// Relative phase and classification of M = M+ + M-.
[[nodiscard]] inline InterferenceReport interference(cplx m_plus, cplx m_minus, double abs_tol, double tol_orth)
{
    InterferenceReport r;
    r.abs_M = std::abs(m_plus + m_minus);
    r.abs_M_plus = std::abs(m_plus);
    r.abs_M_minus = std::abs(m_minus);
    const double prod = r.abs_M_plus * r.abs_M_minus;
    if (prod > 0.0) {
        const cplx rel = m_plus * std::conj(m_minus);
        r.cos_dgamma = std::clamp(rel.real() / prod, -1.0, 1.0);
        r.dgamma = std::arg(rel);
        if (r.dgamma <= -std::numbers::pi) {
            r.dgamma += 2.0 * std::numbers::pi;
        }
    }
    if (prod < abs_tol) {
        r.classification = Interference::Undefined;
    } else if (std::fabs(r.cos_dgamma) < tol_orth) {
        r.classification = Interference::Orthogonal;
    } else if (std::fabs(r.cos_dgamma) > 1.0 - tol_orth) {
        r.classification = r.cos_dgamma > 0 ? Interference::FullyConstructive : Interference::FullyDestructive;
    } else {
        r.classification = r.cos_dgamma > 0 ? Interference::Constructive : Interference::Destructive;
    }
    return r;
}

namespace harvesting_detail {

// Local noise must be a non-negative real up to quadrature error.
inline double local_noise(cplx l, double err)
{
    const double slack = 10.0 * err + 1e-300;
    if (std::fabs(l.imag()) > slack + 1e-9 * std::fabs(l.real()) || l.real() < -slack) {
        throw std::runtime_error("local noise term is not a non-negative real within its error budget");
    }
    return std::max(0.0, l.real());
}

inline double state_weight(const DetectorSpec &d, int sign)
{
    const double c = std::cos(d.state_alpha);
    const double s = std::sin(d.state_alpha);
    return sign == 0 ? c * c : s * s;
}

} // namespace harvesting_detail

/// Full pipeline for one configuration: local noise, M and its split, the
/// negativities N, N+, N- and the interference classification.
[[nodiscard]] inline Analysis analyze(const DetectorSpec &a, const DetectorSpec &b, const Background &bg,
                                      const QuadratureSpec &spec, const AnalysisOptions &opt = {})
{
    using namespace harvesting_detail;
    a.validate();
    b.validate();
    spec.validate();

    double err = 0.0;
    auto blocks_l = [&](const DetectorSpec &di, const DetectorSpec &dj) {
        FrequencyBlocks out{};
        for (int si = 0; si < 2; ++si) {
            for (int sj = 0; sj < 2; ++sj) {
                if (state_weight(di, si) * state_weight(dj, sj) < opt.weight_cutoff) {
                    continue;
                }
                const double wi = si == 0 ? di.gap : -di.gap;
                const double wj = sj == 0 ? dj.gap : -dj.gap;
                const BlockResult r = l_block(di, dj, wi, wj, bg, spec);
                out[static_cast<std::size_t>(si)][static_cast<std::size_t>(sj)] = r.value;
                err += r.err;
            }
        }
        return out;
    };
    auto blocks_m = [&](MPart part) {
        FrequencyBlocks out{};
        for (int sa = 0; sa < 2; ++sa) {
            for (int sb = 0; sb < 2; ++sb) {
                if (state_weight(a, sa) * state_weight(b, sb) < opt.weight_cutoff) {
                    continue;
                }
                const double wa = sa == 0 ? a.gap : -a.gap;
                const double wb = sb == 0 ? b.gap : -b.gap;
                const BlockResult r = m_block(a, b, wa, wb, bg, spec, part);
                out[static_cast<std::size_t>(sa)][static_cast<std::size_t>(sb)] = r.value;
                err += r.err;
            }
        }
        return out;
    };

    const StateAngles sa{a.state_alpha, a.state_beta};
    const StateAngles sb{b.state_alpha, b.state_beta};

    BipartiteMoments mom;
    mom.L_aa = combine_general_L(blocks_l(a, a), sa, sa);
    const double err_aa = err;
    mom.L_bb = combine_general_L(blocks_l(b, b), sb, sb);
    const double err_bb = err - err_aa;
    mom.L_ab = combine_general_L(blocks_l(a, b), sa, sb);
    mom.M = combine_general_M(blocks_m(MPart::Full), sa, sb);
    mom.M_minus = combine_general_M(blocks_m(MPart::MinusOnly), sa, sb);
    mom.M_plus = mom.M - mom.M_minus;
    mom.err_budget = err;

    const double l_aa = local_noise(mom.L_aa, err_aa);
    const double l_bb = local_noise(mom.L_bb, err_bb);

    Analysis out;
    out.moments = mom;
    out.report = interference(mom.M_plus, mom.M_minus, spec.abs_tol, opt.tol_orth);
    out.report.N = negativity(l_aa, l_bb, mom.M);
    out.report.N_plus = negativity(l_aa, l_bb, mom.M_plus);
    out.report.N_minus = negativity(l_aa, l_bb, mom.M_minus);
    return out;
}

/// Outcome of a hypothesis-gated check.
struct CheckResult {
    bool applicable = false;
    bool pass = false;
    double achieved = 0.0; // worst deviation observed
    double tolerance = 0.0;
    std::string note;
};

/// N + tol >= sqrt(N+^2 + N-^2), applied only when |cos dgamma| < tol_orth.
[[nodiscard]] inline CheckResult check_appendixA(const InterferenceReport &r, double tol, double tol_orth = 1e-3)
{
    CheckResult c;
    c.tolerance = tol;
    if (!(std::fabs(r.cos_dgamma) < tol_orth)) {
        c.note = "skipped: cos(dgamma) not orthogonal";
        return c;
    }
    c.applicable = true;
    const double rhs = std::hypot(r.N_plus, r.N_minus);
    c.achieved = rhs - r.N; // violation if > tol
    c.pass = r.N + tol >= rhs;
    return c;
}

namespace harvesting_detail {

inline double rel_dev(double x, double y) noexcept
{
    const double scale = std::max(std::fabs(x), std::fabs(y));
    return scale > 0.0 ? std::fabs(x - y) / scale : 0.0;
}

inline double rel_dev(cplx x, cplx y) noexcept
{
    const double scale = std::max(std::abs(x), std::abs(y));
    return scale > 0.0 ? std::abs(x - y) / scale : 0.0;
}

} // namespace harvesting_detail

/// Gap-and-phase reversal (Omega_j -> -Omega_j, beta_j -> -beta_j) keeps |M+-|
/// and flips the sign of cos(dgamma).
[[nodiscard]] inline CheckResult check_prop1(const DetectorSpec &a, const DetectorSpec &b, const Background &bg,
                                             const QuadratureSpec &spec, double tol = 1e-8)
{
    using harvesting_detail::rel_dev;
    DetectorSpec ra = a;
    DetectorSpec rb = b;
    ra.gap = -a.gap;
    rb.gap = -b.gap;
    ra.state_beta = -a.state_beta;
    rb.state_beta = -b.state_beta;
    const Analysis orig = analyze(a, b, bg, spec);
    const Analysis rev = analyze(ra, rb, bg, spec);
    CheckResult c;
    c.applicable = true;
    c.tolerance = tol;
    const double dev_p = rel_dev(orig.report.abs_M_plus, rev.report.abs_M_plus);
    const double dev_m = rel_dev(orig.report.abs_M_minus, rev.report.abs_M_minus);
    const double dev_c = std::fabs(orig.report.cos_dgamma + rev.report.cos_dgamma);
    c.achieved = std::max({dev_p, dev_m, dev_c});
    c.pass = dev_p <= tol && dev_m <= tol && dev_c <= tol;
    c.note = "cos=" + std::to_string(orig.report.cos_dgamma) + " -> " + std::to_string(rev.report.cos_dgamma);
    return c;
}

struct AppendixEResult {
    CheckResult prop6; // equal switching shapes and gaps: M, M+- invariant under t_a <-> t_b
    CheckResult prop7; // individually time-symmetric switchings: |M+-| invariant, cos flips
};

/// Swaps the switching centers of the two detectors and compares the analyses.
[[nodiscard]] inline AppendixEResult check_appendixE(const DetectorSpec &a, const DetectorSpec &b,
                                                     const Background &bg, const QuadratureSpec &spec,
                                                     double tol = 1e-8)
{
    using harvesting_detail::rel_dev;
    AppendixEResult out;
    out.prop6.tolerance = tol;
    out.prop7.tolerance = tol;
    const bool flat = bg.is_minkowski();
    const bool ground = a.ground() && b.ground();
    const bool six = flat && ground && a.switching.same_shape(b.switching) && a.gap == b.gap;
    const bool seven = flat && ground && a.switching.time_symmetric() && b.switching.time_symmetric();
    if (!six) {
        out.prop6.note = "skipped: hypotheses unmet";
    }
    if (!seven) {
        out.prop7.note = "skipped: hypotheses unmet";
    }
    if (!six && !seven) {
        return out;
    }
    DetectorSpec sa = a;
    DetectorSpec sb = b;
    sa.switching = a.switching.recentered(b.switching.center());
    sb.switching = b.switching.recentered(a.switching.center());
    const Analysis orig = analyze(a, b, bg, spec);
    const Analysis swap = analyze(sa, sb, bg, spec);
    if (six) {
        const double dev = std::max({rel_dev(orig.moments.M, swap.moments.M),
                                     rel_dev(orig.moments.M_plus, swap.moments.M_plus),
                                     rel_dev(orig.moments.M_minus, swap.moments.M_minus)});
        out.prop6.applicable = true;
        out.prop6.achieved = dev;
        out.prop6.pass = dev <= tol;
    }
    if (seven) {
        const double dev_p = rel_dev(orig.report.abs_M_plus, swap.report.abs_M_plus);
        const double dev_m = rel_dev(orig.report.abs_M_minus, swap.report.abs_M_minus);
        const double dev_c = std::fabs(orig.report.cos_dgamma + swap.report.cos_dgamma);
        out.prop7.applicable = true;
        out.prop7.achieved = std::max({dev_p, dev_m, dev_c});
        out.prop7.pass = dev_p <= tol && dev_m <= tol && dev_c <= tol;
    }
    return out;
}

} // namespace harvest
