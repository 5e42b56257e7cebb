// Parameter sweeps over delta_t and/or d, a worker pool and CSV output.
#pragma once

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <limits>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "harvest/cli/config.hpp"
#include "harvest/harvesting.hpp"

namespace harvest::cli {

struct SweepPoint {
    int index = 0;
    double sweep_value = 0.0;
    double d = 0.0;
    double delta_t = 0.0;
};

struct SweepRow {
    SweepPoint point;
    Analysis analysis;
    bool ok = false;
    std::string status;
};

/// Points in output order. With an outer axis the inner axis varies fastest.
[[nodiscard]] inline std::vector<SweepPoint> sweep_points(const RunConfig &c)
{
    std::vector<SweepPoint> pts;
    const int outer_steps = c.outer ? c.outer->steps : 1;
    for (int o = 0; o < outer_steps; ++o) {
        for (int i = 0; i < c.sweep.steps; ++i) {
            SweepPoint p;
            p.index = static_cast<int>(pts.size());
            p.d = c.d;
            p.delta_t = c.delta_t;
            if (c.outer) {
                (c.outer->axis == AxisKind::D ? p.d : p.delta_t) = c.outer->value(o);
            }
            p.sweep_value = c.sweep.value(i);
            (c.sweep.axis == AxisKind::D ? p.d : p.delta_t) = p.sweep_value;
            pts.push_back(p);
        }
    }
    return pts;
}

namespace sweep_detail {

inline std::string sanitize(std::string s)
{
    for (char &ch : s) {
        if (ch == ',' || ch == '\n' || ch == '\r' || ch == '"') {
            ch = ';';
        }
    }
    return s;
}

} // namespace sweep_detail

[[nodiscard]] inline SweepRow run_point(const RunConfig &c, const Background &bg, const SweepPoint &p)
{
    SweepRow row;
    row.point = p;
    try {
        const auto [a, b] = make_pair(c, p.d, p.delta_t);
        row.analysis = analyze(a, b, bg, c.quad, AnalysisOptions{c.tol_orth});
        row.ok = true;
        row.status = "ok";
    } catch (const QuadratureError &e) {
        row.status = sweep_detail::sanitize(std::string("quadrature: ") + e.what());
    } catch (const std::exception &e) {
        row.status = sweep_detail::sanitize(std::string("error: ") + e.what());
    }
    return row;
}

/// Runs every point on `jobs` workers. Rows come back in index order, and each
/// row depends only on its own point, so the output is independent of `jobs`.
[[nodiscard]] inline std::vector<SweepRow> run_sweep(const RunConfig &c, int jobs = 1)
{
    const Background bg = make_background(c);
    const std::vector<SweepPoint> pts = sweep_points(c);
    std::vector<SweepRow> rows(pts.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < pts.size(); i = next++) {
            rows[i] = run_point(c, bg, pts[i]);
        }
    };
    const int n = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(pts.size(), 1)));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            pool.emplace_back(worker);
        }
    }
    return rows;
}

inline constexpr const char *kCsvHeader =
    "index,sweep_value,d,delta_t,L_aa,L_bb,re_L_ab,im_L_ab,re_M,im_M,re_M_plus,im_M_plus,re_M_minus,im_M_minus,"
    "abs_M,abs_M_plus,abs_M_minus,cos_dgamma,dgamma,N,N_plus,N_minus,quad_err,status";

/// Shortest round-trip decimal form.
[[nodiscard]] inline std::string format_double(double x)
{
    if (std::isnan(x)) {
        return "nan";
    }
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, p);
}

inline void write_csv(std::ostream &out, const std::vector<SweepRow> &rows)
{
    out << kCsvHeader << '\n';
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (const auto &r : rows) {
        const auto &m = r.analysis.moments;
        const auto &rep = r.analysis.report;
        auto v = [&](double x) { return format_double(r.ok ? x : nan); };
        out << r.point.index << ',' << format_double(r.point.sweep_value) << ',' << format_double(r.point.d) << ','
            << format_double(r.point.delta_t) << ',' << v(m.L_aa.real()) << ',' << v(m.L_bb.real()) << ','
            << v(m.L_ab.real()) << ',' << v(m.L_ab.imag()) << ',' << v(m.M.real()) << ',' << v(m.M.imag()) << ','
            << v(m.M_plus.real()) << ',' << v(m.M_plus.imag()) << ',' << v(m.M_minus.real()) << ','
            << v(m.M_minus.imag()) << ',' << v(rep.abs_M) << ',' << v(rep.abs_M_plus) << ',' << v(rep.abs_M_minus)
            << ',' << v(rep.cos_dgamma) << ',' << v(rep.dgamma) << ',' << v(rep.N) << ',' << v(rep.N_plus) << ','
            << v(rep.N_minus) << ',' << v(m.err_budget) << ',' << r.status << '\n';
    }
}

} // namespace harvest::cli
