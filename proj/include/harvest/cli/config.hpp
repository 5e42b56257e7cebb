// Run configuration: flat `key = value` files with dotted keys, figure presets
// and the key reference printed by `harvest schema`.
#pragma once

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "harvest/background.hpp"
#include "harvest/harvesting.hpp"
#include "harvest/quadrature.hpp"
#include "harvest/switching.hpp"

namespace harvest::cli {

class ConfigError : public std::runtime_error {
public:
    ConfigError(int line, const std::string &msg)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line)
    {
    }
    [[nodiscard]] int line() const noexcept { return line_; }

private:
    int line_;
};

enum class Placement { Symmetric, FixedA };
enum class AxisKind { DeltaT, D };

struct AxisRange {
    AxisKind axis = AxisKind::DeltaT;
    double start = -6.0;
    double stop = 6.0;
    int steps = 61;

    [[nodiscard]] double value(int i) const noexcept
    {
        if (i == steps - 1) {
            return stop;
        }
        return start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
    }
};

struct SwitchingOverride {
    std::optional<SwitchingKind> kind;
    std::optional<double> T;
    std::optional<double> alpha;
};

struct DetectorConfig {
    double gap = 5.0;
    double sigma = 0.3;
    double state_alpha = 0.0;
    double state_beta = 0.0;
    SwitchingOverride switching;
};

struct BackgroundConfig {
    std::string kind = "minkowski";
    double H = 0.0;
    std::string scale_factor; // path to a two-column "t a" table
};

struct RunConfig {
    std::string preset;
    BackgroundConfig background;
    SwitchingKind switching_kind = SwitchingKind::Gaussian;
    double switching_T = 1.0;
    double switching_t0 = 0.0;
    double switching_alpha = 0.0;
    DetectorConfig a;
    DetectorConfig b;
    double d = 2.1;
    double delta_t = 0.0;
    AxisRange sweep;
    std::optional<AxisRange> outer;
    Placement placement = Placement::Symmetric;
    QuadratureSpec quad;
    double tol_orth = 1e-3;
    std::string output_path = "sweep.csv";
    std::filesystem::path base_dir; // resolves relative paths in the file
};

// ---------------------------------------------------------------------------
// Value parsing and formatting

namespace config_detail {

inline std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

inline double to_double(const std::string &v)
{
    double x = 0.0;
    const char *end = v.data() + v.size();
    auto [p, ec] = std::from_chars(v.data(), end, x);
    if (ec != std::errc{} || p != end || !std::isfinite(x)) {
        throw std::invalid_argument("expected a finite number, got '" + v + "'");
    }
    return x;
}

inline int to_int(const std::string &v)
{
    int x = 0;
    const char *end = v.data() + v.size();
    auto [p, ec] = std::from_chars(v.data(), end, x);
    if (ec != std::errc{} || p != end) {
        throw std::invalid_argument("expected an integer, got '" + v + "'");
    }
    return x;
}

inline std::string fmt(double x)
{
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, p);
}

inline SwitchingKind to_switching_kind(const std::string &v)
{
    if (v == "gaussian") {
        return SwitchingKind::Gaussian;
    }
    if (v == "skew_normal") {
        return SwitchingKind::SkewNormal;
    }
    throw std::invalid_argument("switching kind must be gaussian or skew_normal, got '" + v + "'");
}

inline std::string name(SwitchingKind k) { return k == SwitchingKind::Gaussian ? "gaussian" : "skew_normal"; }

inline AxisKind to_axis(const std::string &v)
{
    if (v == "delta_t") {
        return AxisKind::DeltaT;
    }
    if (v == "d") {
        return AxisKind::D;
    }
    throw std::invalid_argument("sweep axis must be delta_t or d, got '" + v + "'");
}

inline std::string name(AxisKind k) { return k == AxisKind::DeltaT ? "delta_t" : "d"; }

inline Placement to_placement(const std::string &v)
{
    if (v == "symmetric") {
        return Placement::Symmetric;
    }
    if (v == "fixed_a") {
        return Placement::FixedA;
    }
    throw std::invalid_argument("placement must be symmetric or fixed_a, got '" + v + "'");
}

inline std::string name(Placement p) { return p == Placement::Symmetric ? "symmetric" : "fixed_a"; }

inline std::string opt_fmt(const std::optional<double> &x) { return x ? fmt(*x) : "(shared)"; }

} // namespace config_detail

// ---------------------------------------------------------------------------
// Presets

[[nodiscard]] inline const std::vector<std::string> &preset_names()
{
    static const std::vector<std::string> names = {"fig2_skew", "fig2_symmetric", "fig3", "fig4", "fig5"};
    return names;
}

/// Replaces the physical parameters of `cfg` with a named figure setup.
/// Quadrature settings and the output path are left untouched.
inline void apply_preset(RunConfig &cfg, const std::string &name)
{
    RunConfig p;
    p.quad = cfg.quad;
    p.tol_orth = cfg.tol_orth;
    p.output_path = cfg.output_path;
    p.base_dir = cfg.base_dir;
    p.preset = name;
    if (name == "fig2_skew" || name == "fig2_symmetric") {
        p.a.gap = p.b.gap = 5.0;
        p.a.sigma = p.b.sigma = 0.3;
        p.d = 2.1;
        p.switching_kind = name == "fig2_skew" ? SwitchingKind::SkewNormal : SwitchingKind::Gaussian;
        p.switching_alpha = name == "fig2_skew" ? 2.35 : 0.0;
        p.sweep = {AxisKind::DeltaT, -6.0, 6.0, 61};
    } else if (name == "fig3") {
        p.a.gap = p.b.gap = 4.0;
        p.a.sigma = p.b.sigma = 0.2;
        p.b.switching.T = 1.3;
        p.sweep = {AxisKind::DeltaT, -4.0, 4.0, 41};
        p.outer = AxisRange{AxisKind::D, 1.0, 5.0, 21};
    } else if (name == "fig4") {
        p.a.gap = p.b.gap = 4.0;
        p.a.sigma = p.b.sigma = 0.2;
        p.b.switching.T = 1.3;
        p.d = 3.0;
        p.sweep = {AxisKind::DeltaT, -6.0, 6.0, 61};
    } else if (name == "fig5") {
        p.background = {"desitter", 0.1, {}};
        p.a.gap = p.b.gap = 4.0;
        p.a.sigma = p.b.sigma = 0.1;
        p.d = 2.0;
        p.sweep = {AxisKind::DeltaT, -4.0, 4.0, 41};
    } else {
        throw std::invalid_argument("unknown preset '" + name + "'");
    }
    cfg = std::move(p);
}

// ---------------------------------------------------------------------------
// Key table: one entry per accepted key, shared by the parser and the schema.

struct KeyInfo {
    std::string key;
    std::string unit;
    std::string doc;
    std::function<void(RunConfig &, const std::string &)> set;
    std::function<std::string(const RunConfig &)> get;
};

namespace config_detail {

template <class Member>
KeyInfo number_key(std::string key, std::string unit, std::string doc, Member member)
{
    return {std::move(key), std::move(unit), std::move(doc),
            [member](RunConfig &c, const std::string &v) { member(c) = to_double(v); },
            [member](const RunConfig &c) { return fmt(member(c)); }};
}

template <class Member>
KeyInfo int_key(std::string key, std::string unit, std::string doc, Member member)
{
    return {std::move(key), std::move(unit), std::move(doc),
            [member](RunConfig &c, const std::string &v) { member(c) = to_int(v); },
            [member](const RunConfig &c) { return std::to_string(member(c)); }};
}

inline void add_detector_keys(std::vector<KeyInfo> &keys, const std::string &prefix, DetectorConfig RunConfig::*det)
{
    keys.push_back(number_key(prefix + ".gap", "1/T", "energy gap Omega (may be negative)",
                              [det](auto &c) -> auto & { return (c.*det).gap; }));
    keys.push_back(number_key(prefix + ".sigma", "T", "Gaussian smearing width",
                              [det](auto &c) -> auto & { return (c.*det).sigma; }));
    keys.push_back(number_key(prefix + ".state.alpha", "rad", "initial state cos(a)|g> + e^{ib} sin(a)|e>",
                              [det](auto &c) -> auto & { return (c.*det).state_alpha; }));
    keys.push_back(number_key(prefix + ".state.beta", "rad", "initial state relative phase",
                              [det](auto &c) -> auto & { return (c.*det).state_beta; }));
    keys.push_back({prefix + ".switching.kind", "-", "override of switching.kind",
                    [det](RunConfig &c, const std::string &v) { (c.*det).switching.kind = to_switching_kind(v); },
                    [det](const RunConfig &c) {
                        const auto &k = (c.*det).switching.kind;
                        return k ? name(*k) : std::string("(shared)");
                    }});
    keys.push_back({prefix + ".switching.T", "T", "override of switching.T",
                    [det](RunConfig &c, const std::string &v) { (c.*det).switching.T = to_double(v); },
                    [det](const RunConfig &c) { return opt_fmt((c.*det).switching.T); }});
    keys.push_back({prefix + ".switching.alpha", "-", "override of switching.alpha",
                    [det](RunConfig &c, const std::string &v) { (c.*det).switching.alpha = to_double(v); },
                    [det](const RunConfig &c) { return opt_fmt((c.*det).switching.alpha); }});
}

inline void add_axis_keys(std::vector<KeyInfo> &keys, const std::string &prefix, bool outer)
{
    auto axis = [outer](RunConfig &c) -> AxisRange & {
        if (!outer) {
            return c.sweep;
        }
        if (!c.outer) {
            c.outer = AxisRange{AxisKind::D, 1.0, 5.0, 21};
        }
        return *c.outer;
    };
    auto read = [outer](const RunConfig &c) -> std::optional<AxisRange> {
        return outer ? c.outer : std::optional<AxisRange>(c.sweep);
    };
    const std::string what = outer ? "outer grid axis (rows vary slowest)" : "swept axis";
    keys.push_back({prefix + ".axis", "-", what + ": delta_t or d",
                    [axis](RunConfig &c, const std::string &v) { axis(c).axis = to_axis(v); },
                    [read](const RunConfig &c) { auto r = read(c); return r ? name(r->axis) : std::string("(none)"); }});
    keys.push_back({prefix + ".start", "T", "first axis value",
                    [axis](RunConfig &c, const std::string &v) { axis(c).start = to_double(v); },
                    [read](const RunConfig &c) { auto r = read(c); return r ? fmt(r->start) : std::string("(none)"); }});
    keys.push_back({prefix + ".stop", "T", "last axis value",
                    [axis](RunConfig &c, const std::string &v) { axis(c).stop = to_double(v); },
                    [read](const RunConfig &c) { auto r = read(c); return r ? fmt(r->stop) : std::string("(none)"); }});
    keys.push_back({prefix + ".steps", "-", "number of points, >= 2",
                    [axis](RunConfig &c, const std::string &v) { axis(c).steps = to_int(v); },
                    [read](const RunConfig &c) {
                        auto r = read(c);
                        return r ? std::to_string(r->steps) : std::string("(none)");
                    }});
}

} // namespace config_detail

[[nodiscard]] inline const std::vector<KeyInfo> &config_keys()
{
    using namespace config_detail;
    static const std::vector<KeyInfo> keys = [] {
        std::vector<KeyInfo> k;
        k.push_back({"preset", "-", "figure preset applied before the other keys",
                     [](RunConfig &c, const std::string &v) { apply_preset(c, v); },
                     [](const RunConfig &c) { return c.preset.empty() ? std::string("(none)") : c.preset; }});
        k.push_back({"background.kind", "-", "minkowski, desitter, cosh or tabulated",
                     [](RunConfig &c, const std::string &v) {
                         if (v != "minkowski" && v != "desitter" && v != "cosh" && v != "tabulated") {
                             throw std::invalid_argument("unknown background kind '" + v + "'");
                         }
                         c.background.kind = v;
                     },
                     [](const RunConfig &c) { return c.background.kind; }});
        k.push_back(number_key("background.H", "1/T", "Hubble rate for desitter and cosh",
                               [](auto &c) -> auto & { return c.background.H; }));
        k.push_back({"background.scale_factor", "path", "two-column 't a' table for tabulated (relative to config)",
                     [](RunConfig &c, const std::string &v) { c.background.scale_factor = v; },
                     [](const RunConfig &c) {
                         return c.background.scale_factor.empty() ? std::string("(none)") : c.background.scale_factor;
                     }});
        k.push_back({"switching.kind", "-", "gaussian or skew_normal, shared by both detectors",
                     [](RunConfig &c, const std::string &v) { c.switching_kind = to_switching_kind(v); },
                     [](const RunConfig &c) { return name(c.switching_kind); }});
        k.push_back(number_key("switching.T", "T", "switching time scale (the unit of time)",
                               [](auto &c) -> auto & { return c.switching_T; }));
        k.push_back(number_key("switching.t0", "T", "reference peak time; detectors sit at t0 -+ delta_t/2",
                               [](auto &c) -> auto & { return c.switching_t0; }));
        k.push_back(number_key("switching.alpha", "-", "skewness of skew_normal",
                               [](auto &c) -> auto & { return c.switching_alpha; }));
        add_detector_keys(k, "detector_a", &RunConfig::a);
        add_detector_keys(k, "detector_b", &RunConfig::b);
        k.push_back(number_key("geometry.d", "T", "detector separation when not swept",
                               [](auto &c) -> auto & { return c.d; }));
        k.push_back(number_key("geometry.delta_t", "T", "peak delay t_b - t_a when not swept",
                               [](auto &c) -> auto & { return c.delta_t; }));
        add_axis_keys(k, "sweep", false);
        k.push_back({"sweep.placement", "-",
                     "symmetric (t_a = t0 - dt/2, t_b = t0 + dt/2) or fixed_a (t_a = t0, t_b = t0 + dt)",
                     [](RunConfig &c, const std::string &v) { c.placement = to_placement(v); },
                     [](const RunConfig &c) { return name(c.placement); }});
        add_axis_keys(k, "sweep.outer", true);
        k.push_back(number_key("quad.rel_tol", "-", "relative tolerance per integral",
                               [](auto &c) -> auto & { return c.quad.rel_tol; }));
        k.push_back(number_key("quad.abs_tol", "-", "absolute tolerance per integral",
                               [](auto &c) -> auto & { return c.quad.abs_tol; }));
        k.push_back(int_key("quad.max_depth", "-", "maximum panel bisection depth",
                            [](auto &c) -> auto & { return c.quad.max_depth; }));
        k.push_back(number_key("quad.window_k", "T", "truncation window half-width in switching widths",
                               [](auto &c) -> auto & { return c.quad.window_k; }));
        k.push_back(int_key("quad.panel_order", "-", "Gauss-Legendre nodes per panel axis, 8..64",
                            [](auto &c) -> auto & { return c.quad.panel_order; }));
        k.push_back(number_key("analysis.tol_orth", "-", "|cos dgamma| threshold for orthogonal/fully classes",
                               [](auto &c) -> auto & { return c.tol_orth; }));
        k.push_back({"output.path", "path", "CSV destination (overridden by --out)",
                     [](RunConfig &c, const std::string &v) { c.output_path = v; },
                     [](const RunConfig &c) { return c.output_path; }});
        return k;
    }();
    return keys;
}

namespace config_detail {

inline const KeyInfo *find_key(const std::string &key)
{
    for (const auto &k : config_keys()) {
        if (k.key == key) {
            return &k;
        }
    }
    return nullptr;
}

} // namespace config_detail

/// Checks ranges and cross-key constraints. `lines` maps keys to source lines
/// for error messages.
inline void validate(const RunConfig &c, const std::map<std::string, int> &lines = {})
{
    auto line_of = [&](const std::string &key) {
        auto it = lines.find(key);
        return it == lines.end() ? 0 : it->second;
    };
    auto check_axis = [&](const AxisRange &r, const std::string &prefix) {
        if (r.steps < 2) {
            throw ConfigError(line_of(prefix + ".steps"), prefix + ".steps must be >= 2");
        }
        if (!(r.start < r.stop)) {
            throw ConfigError(std::max(line_of(prefix + ".start"), line_of(prefix + ".stop")),
                              prefix + ".start must be < " + prefix + ".stop");
        }
        if (r.axis == AxisKind::D && r.start < 0.0) {
            throw ConfigError(line_of(prefix + ".start"), "separation axis must be >= 0");
        }
    };
    check_axis(c.sweep, "sweep");
    if (c.outer) {
        check_axis(*c.outer, "sweep.outer");
        if (c.outer->axis == c.sweep.axis) {
            throw ConfigError(line_of("sweep.outer.axis"), "sweep.outer.axis must differ from sweep.axis");
        }
    }
    if (!(c.switching_T > 0.0)) {
        throw ConfigError(line_of("switching.T"), "switching.T must be > 0");
    }
    for (const auto *det : {&c.a, &c.b}) {
        const std::string p = det == &c.a ? "detector_a" : "detector_b";
        if (!(det->sigma > 0.0)) {
            throw ConfigError(line_of(p + ".sigma"), p + ".sigma must be > 0");
        }
        if (det->switching.T && !(*det->switching.T > 0.0)) {
            throw ConfigError(line_of(p + ".switching.T"), p + ".switching.T must be > 0");
        }
        constexpr double two_pi = 2.0 * std::numbers::pi;
        if (det->state_alpha < 0.0 || det->state_alpha > two_pi) {
            throw ConfigError(line_of(p + ".state.alpha"), p + ".state.alpha must lie in [0, 2 pi]");
        }
        if (det->state_beta < -two_pi || det->state_beta > two_pi) {
            throw ConfigError(line_of(p + ".state.beta"), p + ".state.beta must lie in [-2 pi, 2 pi]");
        }
    }
    if (c.d < 0.0) {
        throw ConfigError(line_of("geometry.d"), "geometry.d must be >= 0");
    }
    if (c.background.H < 0.0) {
        throw ConfigError(line_of("background.H"), "background.H must be >= 0");
    }
    if (c.background.kind == "tabulated" && c.background.scale_factor.empty()) {
        throw ConfigError(line_of("background.kind"), "tabulated background needs background.scale_factor");
    }
    if (!(c.tol_orth > 0.0 && c.tol_orth < 0.5)) {
        throw ConfigError(line_of("analysis.tol_orth"), "analysis.tol_orth must lie in (0, 0.5)");
    }
    try {
        c.quad.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(0, e.what());
    }
}

/// Parses configuration text. A `preset` key is applied first wherever it
/// appears; the remaining keys are then applied in file order.
[[nodiscard]] inline RunConfig parse_config(std::string_view text, std::filesystem::path base_dir = {})
{
    using namespace config_detail;
    struct Entry {
        int line;
        std::string key;
        std::string value;
    };
    std::vector<Entry> entries;
    std::map<std::string, int> lines;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        const std::string line = trim(raw);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(lineno, "expected 'key = value'");
        }
        Entry e{lineno, trim(std::string_view(line).substr(0, eq)), trim(std::string_view(line).substr(eq + 1))};
        if (e.key.empty() || e.value.empty()) {
            throw ConfigError(lineno, "empty key or value");
        }
        if (!find_key(e.key)) {
            throw ConfigError(lineno, "unknown key '" + e.key + "'");
        }
        if (lines.count(e.key)) {
            throw ConfigError(lineno, "duplicate key '" + e.key + "' (first on line " +
                                          std::to_string(lines[e.key]) + ")");
        }
        lines[e.key] = lineno;
        entries.push_back(std::move(e));
    }

    RunConfig cfg;
    cfg.base_dir = std::move(base_dir);
    auto apply = [&](const Entry &e) {
        try {
            find_key(e.key)->set(cfg, e.value);
        } catch (const std::invalid_argument &ex) {
            throw ConfigError(e.line, e.key + ": " + ex.what());
        }
    };
    for (const auto &e : entries) {
        if (e.key == "preset") {
            apply(e);
        }
    }
    for (const auto &e : entries) {
        if (e.key != "preset") {
            apply(e);
        }
    }
    validate(cfg, lines);
    return cfg;
}

[[nodiscard]] inline RunConfig load_config(const std::filesystem::path &path)
{
    std::ifstream f(path);
    if (!f) {
        throw ConfigError(0, "cannot open config file '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str(), path.parent_path());
}

/// Reads whitespace-separated `t a` pairs; `#` starts a comment.
[[nodiscard]] inline Background load_tabulated(const std::filesystem::path &path)
{
    std::ifstream f(path);
    if (!f) {
        throw ConfigError(0, "cannot open scale factor table '" + path.string() + "'");
    }
    std::vector<double> t;
    std::vector<double> a;
    std::string raw;
    int lineno = 0;
    while (std::getline(f, raw)) {
        ++lineno;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream ls(raw);
        std::string ts;
        std::string as;
        if (!(ls >> ts)) {
            continue;
        }
        if (!(ls >> as)) {
            throw ConfigError(lineno, path.string() + ": expected two columns");
        }
        try {
            t.push_back(config_detail::to_double(ts));
            a.push_back(config_detail::to_double(as));
        } catch (const std::invalid_argument &e) {
            throw ConfigError(lineno, path.string() + ": " + e.what());
        }
    }
    try {
        return Background::tabulated(std::move(t), std::move(a));
    } catch (const std::invalid_argument &e) {
        throw ConfigError(0, path.string() + ": " + e.what());
    }
}

[[nodiscard]] inline Background make_background(const RunConfig &c)
{
    const auto &b = c.background;
    if (b.kind == "desitter") {
        return Background::de_sitter(b.H);
    }
    if (b.kind == "cosh") {
        return Background::cosh_symmetric(b.H);
    }
    if (b.kind == "tabulated") {
        std::filesystem::path p = b.scale_factor;
        if (p.is_relative()) {
            p = c.base_dir / p;
        }
        return load_tabulated(p);
    }
    return Background::minkowski();
}

/// Detector pair for separation d and peak delay delta_t = t_b - t_a.
[[nodiscard]] inline std::pair<DetectorSpec, DetectorSpec> make_pair(const RunConfig &c, double d, double delta_t)
{
    const double ta = c.placement == Placement::Symmetric ? c.switching_t0 - 0.5 * delta_t : c.switching_t0;
    const double tb = ta + delta_t;
    auto build = [&](const DetectorConfig &dc, double t0, double x) {
        DetectorSpec s;
        s.gap = dc.gap;
        s.sigma = dc.sigma;
        s.position = {x, 0.0, 0.0};
        s.state_alpha = dc.state_alpha;
        s.state_beta = dc.state_beta;
        const SwitchingKind kind = dc.switching.kind.value_or(c.switching_kind);
        const double T = dc.switching.T.value_or(c.switching_T);
        const double alpha = dc.switching.alpha.value_or(c.switching_alpha);
        s.switching = kind == SwitchingKind::Gaussian ? SwitchingProfile::gaussian(T, t0)
                                                      : SwitchingProfile::skew_normal(T, t0, alpha);
        return s;
    };
    return {build(c.a, ta, 0.0), build(c.b, tb, d)};
}

[[nodiscard]] inline std::string schema_text()
{
    const RunConfig defaults;
    std::ostringstream out;
    out << "Configuration keys (flat 'key = value', '#' comments).\n"
        << "Times and lengths are in units of T (c = 1); rates in 1/T.\n\n";
    std::size_t width = 0;
    for (const auto &k : config_keys()) {
        width = std::max(width, k.key.size());
    }
    for (const auto &k : config_keys()) {
        out << "  " << k.key << std::string(width + 2 - k.key.size(), ' ') << "[" << k.unit << "] "
            << k.doc << " (default: " << k.get(defaults) << ")\n";
    }
    out << "\nPresets:";
    for (const auto &p : preset_names()) {
        out << " " << p;
    }
    out << "\n";
    return out.str();
}

} // namespace harvest::cli
