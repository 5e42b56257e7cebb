#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "harvest/cli/config.hpp"
#include "harvest/cli/sweep.hpp"
#include "harvest/cli/verify.hpp"

using namespace harvest::cli;

namespace {

std::vector<std::string> split(const std::string &line)
{
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        out.push_back(cell);
    }
    return out;
}

RunConfig small_sweep(const std::string &preset, int steps)
{
    return parse_config("preset = " + preset + "\nsweep.steps = " + std::to_string(steps) +
                        "\nsweep.start = -3\nsweep.stop = 3\n");
}

int line_of_error(const std::string &text)
{
    try {
        (void)parse_config(text);
    } catch (const ConfigError &e) {
        return e.line();
    }
    return -1;
}

} // namespace

TEST(Config, DefaultsAndOverrides)
{
    const RunConfig c = parse_config("# comment\n\ndetector_a.gap = 3.5  # trailing\nquad.panel_order = 20\n");
    EXPECT_EQ(c.a.gap, 3.5);
    EXPECT_EQ(c.b.gap, 5.0);
    EXPECT_EQ(c.quad.panel_order, 20);
    EXPECT_EQ(c.placement, Placement::Symmetric);
}

TEST(Config, PresetAppliesBeforeOtherKeys)
{
    const RunConfig c = parse_config("geometry.d = 4.0\npreset = fig2_skew\nquad.rel_tol = 1e-8\n");
    EXPECT_EQ(c.d, 4.0);
    EXPECT_EQ(c.switching_kind, harvest::SwitchingKind::SkewNormal);
    EXPECT_EQ(c.switching_alpha, 2.35);
    EXPECT_EQ(c.sweep.steps, 61);
    EXPECT_EQ(c.quad.rel_tol, 1e-8);
}

TEST(Config, Presets)
{
    for (const auto &name : preset_names()) {
        EXPECT_NO_THROW((void)parse_config("preset = " + name + "\n")) << name;
    }
    const RunConfig f4 = parse_config("preset = fig4\n");
    EXPECT_EQ(f4.b.switching.T.value(), 1.3);
    EXPECT_EQ(f4.d, 3.0);
    const RunConfig f5 = parse_config("preset = fig5\n");
    EXPECT_EQ(f5.background.kind, "desitter");
    EXPECT_EQ(f5.background.H, 0.1);
    const RunConfig f3 = parse_config("preset = fig3\n");
    ASSERT_TRUE(f3.outer.has_value());
    EXPECT_EQ(f3.outer->axis, AxisKind::D);
}

TEST(Config, ErrorsCarryLineNumbers)
{
    EXPECT_EQ(line_of_error("detector_a.gap = 1\nnot_a_key = 2\n"), 2);
    EXPECT_EQ(line_of_error("\n\ndetector_a.gap 1\n"), 3);
    EXPECT_EQ(line_of_error("detector_a.gap = one\n"), 1);
    EXPECT_EQ(line_of_error("sweep.steps = 1\n"), 1);
    EXPECT_EQ(line_of_error("sweep.start = 2\nsweep.stop = 1\n"), 2);
    EXPECT_EQ(line_of_error("preset = fig9\n"), 1);
    EXPECT_EQ(line_of_error("geometry.d = 1\ngeometry.d = 2\n"), 2);
    EXPECT_EQ(line_of_error("\nbackground.kind = tabulated\n"), 2);
    EXPECT_EQ(line_of_error("switching.kind = boxcar\n"), 1);
    EXPECT_EQ(line_of_error("detector_b.sigma = 0\n"), 1);
}

TEST(Config, SchemaListsKeysAndPresets)
{
    const std::string s = schema_text();
    EXPECT_NE(s.find("background.H"), std::string::npos);
    EXPECT_NE(s.find("[1/T]"), std::string::npos);
    for (const char *k : {"quad.rel_tol", "quad.abs_tol", "quad.window_k", "quad.panel_order", "quad.max_depth"}) {
        EXPECT_NE(s.find(k), std::string::npos) << k;
    }
    for (const auto &p : preset_names()) {
        EXPECT_NE(s.find(p), std::string::npos) << p;
    }
    // Every accepted key is documented.
    for (const auto &k : config_keys()) {
        EXPECT_NE(s.find(k.key), std::string::npos) << k.key;
    }
}

TEST(Config, Placement)
{
    RunConfig c = parse_config("switching.t0 = 1\n");
    auto [a, b] = make_pair(c, 2.0, 3.0);
    EXPECT_EQ(a.switching.center(), -0.5);
    EXPECT_EQ(b.switching.center(), 2.5);
    EXPECT_EQ(b.position[0], 2.0);
    c = parse_config("switching.t0 = 1\nsweep.placement = fixed_a\ndetector_b.switching.T = 1.3\n");
    auto [fa, fb] = make_pair(c, 2.0, 3.0);
    EXPECT_EQ(fa.switching.center(), 1.0);
    EXPECT_EQ(fb.switching.center(), 4.0);
    EXPECT_EQ(fb.switching.width(), 1.3);
    EXPECT_EQ(fa.switching.width(), 1.0);
}

TEST(Config, TabulatedScaleFactorFile)
{
    const auto dir = std::filesystem::temp_directory_path() / "harvest_cli_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream f(dir / "a.txt");
        f << "# t a\n";
        f.precision(17);
        for (int i = 0; i <= 1000; ++i) {
            const double t = -10.0 + 0.02 * i;
            f << t << " " << std::cosh(0.1 * t) << "\n";
        }
    }
    {
        std::ofstream f(dir / "run.cfg");
        f << "background.kind = tabulated\nbackground.scale_factor = a.txt\n";
    }
    const RunConfig c = load_config(dir / "run.cfg");
    const auto bg = make_background(c);
    EXPECT_NEAR(bg.conformal_time(1.0), harvest::Background::cosh_symmetric(0.1).conformal_time(1.0), 1e-8);
    EXPECT_THROW((void)load_config(dir / "missing.cfg"), ConfigError);
}

TEST(Sweep, PointsOrdering)
{
    const RunConfig c = parse_config("preset = fig3\nsweep.steps = 3\nsweep.outer.steps = 2\n");
    const auto pts = sweep_points(c);
    ASSERT_EQ(pts.size(), 6u);
    EXPECT_EQ(pts[0].d, 1.0);
    EXPECT_EQ(pts[2].d, 1.0);
    EXPECT_EQ(pts[3].d, 5.0);
    EXPECT_EQ(pts[0].delta_t, -4.0);
    EXPECT_EQ(pts[1].delta_t, 0.0);
    EXPECT_EQ(pts[5].delta_t, 4.0);
    EXPECT_EQ(pts[4].sweep_value, 0.0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        EXPECT_EQ(pts[i].index, static_cast<int>(i));
    }
}

TEST(Sweep, CsvIsDeterministicAndSchemaOrdered)
{
    const RunConfig c = small_sweep("fig2_skew", 4);
    std::ostringstream one;
    std::ostringstream two;
    write_csv(one, run_sweep(c, 1));
    write_csv(two, run_sweep(c, 3));
    EXPECT_EQ(one.str(), two.str());
    std::istringstream in(one.str());
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, kCsvHeader);
    EXPECT_EQ(split(header).size(), 24u);
}

TEST(Sweep, CsvRoundTripKeepsLawOfCosines)
{
    const RunConfig c = small_sweep("fig2_skew", 5);
    std::ostringstream out;
    write_csv(out, run_sweep(c, 1));
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    int rows = 0;
    while (std::getline(in, line)) {
        const auto cells = split(line);
        ASSERT_EQ(cells.size(), 24u);
        EXPECT_EQ(cells[23], "ok");
        const double m = std::strtod(cells[14].c_str(), nullptr);
        const double mp = std::strtod(cells[15].c_str(), nullptr);
        const double mm = std::strtod(cells[16].c_str(), nullptr);
        const double cg = std::strtod(cells[17].c_str(), nullptr);
        const double lhs = m * m;
        EXPECT_NEAR(lhs, mp * mp + mm * mm + 2.0 * mp * mm * cg, 1e-10 * lhs);
        ++rows;
    }
    EXPECT_EQ(rows, 5);
}

TEST(Sweep, FailingRowsAreRecorded)
{
    RunConfig c = small_sweep("fig2_symmetric", 2);
    c.quad.max_depth = 1;
    c.quad.rel_tol = 1e-15;
    c.quad.abs_tol = 0.0;
    const auto rows = run_sweep(c, 1);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_FALSE(rows[0].ok);
    EXPECT_NE(rows[0].status.find("quadrature"), std::string::npos);
    std::ostringstream out;
    write_csv(out, rows);
    EXPECT_NE(out.str().find("nan"), std::string::npos);
}

TEST(Sweep, ShortestRoundTripFormat)
{
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(-6.0), "-6");
    const double x = 1.0 / 3.0;
    EXPECT_EQ(std::strtod(format_double(x).c_str(), nullptr), x);
}

TEST(Verify, KernelsSuitePasses)
{
    const auto rep = run_verify("kernels");
    EXPECT_TRUE(rep.passed());
    EXPECT_GE(rep.rows.size(), 20u);
    std::ostringstream out;
    print_report(out, rep);
    EXPECT_NE(out.str().find("tolerance"), std::string::npos);
    EXPECT_THROW((void)run_verify("nope"), std::invalid_argument);
}
