#include "dce/scenarios_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <CLI11.hpp>

#include "dce/errors.hpp"
#include "dce/quadrature.hpp"
#include "dce/selftest.hpp"

namespace dce {

namespace {

// ---------------------------------------------------------------------------
// number formatting: locale-independent, deterministic

std::string format_shortest(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

std::string format_sig17(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, end);
}

std::string format_fixed2(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
    return std::string(buf, end);
}

// ---------------------------------------------------------------------------
// scenario-file parsing

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_tokens(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

double parse_double(const std::string& tok, int line, const std::string& field) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw scenario_parse_error(line, field + ": not a number: '" + tok + "'");
    if (!std::isfinite(v))
        throw scenario_parse_error(line, field + ": value must be finite");
    return v;
}

int parse_int(const std::string& tok, int line, const std::string& field) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw scenario_parse_error(line, field + ": not an integer: '" + tok + "'");
    return v;
}

// Consumes one medium model from the token stream of a `media = ...` value:
// `constant <eta> <kappa>` or `lorentz <resonance> <plasma> <damping>`.
MediumModel parse_medium(const std::vector<std::string>& toks, size_t& pos, int line) {
    if (pos >= toks.size())
        throw scenario_parse_error(line, "media: expected a model kind, got end of line");
    const std::string kind = toks[pos++];
    auto next = [&](const char* what) {
        if (pos >= toks.size())
            throw scenario_parse_error(line, std::string("media: missing ") + what);
        return parse_double(toks[pos++], line, "media");
    };
    if (kind == "constant") {
        double eta = next("eta");
        double kappa = next("kappa");
        if (!(eta > 0.0))
            throw scenario_parse_error(line, "media: constant eta must be positive");
        if (kappa < 0.0)
            throw scenario_parse_error(line, "media: constant kappa must be non-negative");
        if (kappa == 0.0)
            return ConstantReal{eta};
        return ConstantComplex{eta, kappa};
    }
    if (kind == "lorentz") {
        double resonance = next("resonance_y");
        double plasma = next("plasma_y");
        double damping = next("damping_y");
        if (!(resonance > 0.0))
            throw scenario_parse_error(line, "media: lorentz resonance_y must be positive");
        if (plasma < 0.0 || damping < 0.0)
            throw scenario_parse_error(
                line, "media: lorentz plasma_y and damping_y must be non-negative");
        return LorentzOscillator{resonance, plasma, damping};
    }
    throw scenario_parse_error(line, "media: unknown model kind '" + kind +
                                         "' (expected constant or lorentz)");
}

Method parse_method_token(const std::string& tok, int line) {
    if (tok == "quadrature")
        return Method::quadrature;
    if (tok == "closed_form")
        return Method::closed_form;
    if (tok == "expansion")
        return Method::expansion;
    if (tok == "mirror_limit")
        return Method::mirror_limit;
    throw scenario_parse_error(line, "method: unknown value '" + tok + "'");
}

const char* method_token(Method m) {
    switch (m) {
    case Method::quadrature:
        return "quadrature";
    case Method::closed_form:
        return "closed_form";
    case Method::expansion:
        return "expansion";
    case Method::mirror_limit:
        return "mirror_limit";
    }
    return "?";
}

} // namespace

std::vector<double> ScenarioFile::grid() const {
    std::vector<double> ys;
    ys.reserve(static_cast<size_t>(y_count));
    if (y_count == 1) {
        ys.push_back(y_min);
        return ys;
    }
    // Endpoint-exact affine blend; strictly increasing for y_min < y_max.
    for (int i = 0; i < y_count; ++i)
        ys.push_back(((y_count - 1 - i) * y_min + i * y_max) / (y_count - 1));
    return ys;
}

std::vector<Scenario> ScenarioFile::scenarios() const {
    std::vector<Scenario> out;
    std::vector<double> ys = grid();
    out.reserve(entries.size());
    for (const ReflectionEntry& entry : entries) {
        Scenario s;
        s.slab_L = slab_L;
        s.reflection = entry.spec;
        s.y_grid = ys;
        s.method = method;
        s.quad_order = quad_order;
        s.profile = profile;
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::string> ScenarioFile::labels() const {
    std::vector<std::string> out;
    out.reserve(entries.size());
    for (const ReflectionEntry& entry : entries)
        out.push_back(entry.label);
    return out;
}

std::string ScenarioFile::serialize() const {
    std::string out;
    out += "name = " + name + "\n";
    out += "slab_L = " + format_shortest(slab_L) + "\n";
    for (const ReflectionEntry& entry : entries)
        out += entry.key + " = " + entry.raw + "\n";
    out += "y_min = " + format_shortest(y_min) + "\n";
    out += "y_max = " + format_shortest(y_max) + "\n";
    out += "y_count = " + std::to_string(y_count) + "\n";
    out += "method = " + std::string(method_token(method)) + "\n";
    out += "quad_order = " + std::to_string(quad_order) + "\n";
    out += "profile = ";
    out += (profile == SlabProfile::sharp) ? "sharp" : "exponential";
    out += "\n";
    return out;
}

ScenarioFile parse_scenario_file(const std::string& text) {
    ScenarioFile file;
    std::map<std::string, int> seen; // scalar keys already set -> line

    std::optional<double> slab_L, y_min, y_max;
    std::optional<int> y_count;
    bool have_name = false;

    auto set_once = [&](const std::string& key, int line) {
        auto [it, inserted] = seen.emplace(key, line);
        if (!inserted)
            throw scenario_parse_error(line, "duplicate key '" + key + "' (first on line " +
                                                 std::to_string(it->second) + ")");
    };

    std::istringstream in(text);
    std::string raw_line;
    int line_no = 0;
    while (std::getline(in, raw_line)) {
        ++line_no;
        if (size_t hash = raw_line.find('#'); hash != std::string::npos)
            raw_line.erase(hash);
        std::string line = trim(raw_line);
        if (line.empty())
            continue;

        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw scenario_parse_error(line_no, "expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw scenario_parse_error(line_no, "empty key");
        if (value.empty())
            throw scenario_parse_error(line_no, "empty value for key '" + key + "'");

        if (key == "name") {
            set_once(key, line_no);
            if (value.find_first_of(", \t") != std::string::npos)
                throw scenario_parse_error(line_no,
                                           "name: must not contain spaces or commas");
            file.name = value;
            have_name = true;
        } else if (key == "slab_L") {
            set_once("slab_L", line_no);
            if (seen.count("slab_L_pi"))
                throw scenario_parse_error(line_no, "slab_L conflicts with slab_L_pi");
            slab_L = parse_double(value, line_no, "slab_L");
        } else if (key == "slab_L_pi") {
            set_once("slab_L_pi", line_no);
            if (seen.count("slab_L"))
                throw scenario_parse_error(line_no, "slab_L_pi conflicts with slab_L");
            slab_L = parse_double(value, line_no, "slab_L_pi") * std::numbers::pi;
        } else if (key == "reflection") {
            ReflectionEntry entry;
            entry.key = "reflection";
            entry.raw = value;
            if (value == "mirror") {
                entry.spec = PerfectMirror{};
                entry.label = "mirror";
            } else {
                double r = parse_double(value, line_no, "reflection");
                if (!(r > -1.0) || !(r <= 0.0))
                    throw scenario_parse_error(
                        line_no, "reflection: must lie in (-1, 0] or be 'mirror'");
                entry.spec = FixedReflection{r};
                entry.label = "RL=" + value;
            }
            file.entries.push_back(std::move(entry));
        } else if (key == "media") {
            std::vector<std::string> toks = split_tokens(value);
            size_t pos = 0;
            MediumModel m1 = parse_medium(toks, pos, line_no);
            MediumModel m2 = parse_medium(toks, pos, line_no);
            if (pos != toks.size())
                throw scenario_parse_error(line_no,
                                           "media: trailing tokens after two models");
            ReflectionEntry entry;
            entry.key = "media";
            entry.raw = value;
            entry.spec = MediaPair{std::move(m1), std::move(m2)};
            entry.label = "media" + std::to_string(file.entries.size() + 1);
            file.entries.push_back(std::move(entry));
        } else if (key == "y_min") {
            set_once(key, line_no);
            y_min = parse_double(value, line_no, "y_min");
        } else if (key == "y_max") {
            set_once(key, line_no);
            y_max = parse_double(value, line_no, "y_max");
        } else if (key == "y_count") {
            set_once(key, line_no);
            y_count = parse_int(value, line_no, "y_count");
        } else if (key == "method") {
            set_once(key, line_no);
            file.method = parse_method_token(value, line_no);
        } else if (key == "quad_order") {
            set_once(key, line_no);
            file.quad_order = parse_int(value, line_no, "quad_order");
        } else if (key == "profile") {
            set_once(key, line_no);
            if (value == "sharp")
                file.profile = SlabProfile::sharp;
            else if (value == "exponential")
                file.profile = SlabProfile::exponential;
            else
                throw scenario_parse_error(line_no, "profile: unknown value '" + value + "'");
        } else {
            throw scenario_parse_error(line_no, "unknown key '" + key + "'");
        }
    }

    if (!have_name)
        throw scenario_parse_error(0, "missing required key 'name'");
    if (!slab_L)
        throw scenario_parse_error(0, "missing required key 'slab_L' (or 'slab_L_pi')");
    if (file.entries.empty())
        throw scenario_parse_error(0, "need at least one 'reflection' or 'media' entry");
    if (!y_min || !y_max || !y_count)
        throw scenario_parse_error(0, "missing required keys 'y_min', 'y_max', 'y_count'");

    file.slab_L = *slab_L;
    file.y_min = *y_min;
    file.y_max = *y_max;
    file.y_count = *y_count;

    if (!(file.slab_L > 0.0))
        throw scenario_parse_error(0, "slab_L: must be positive");
    if (!(file.y_min > 0.0) || !(file.y_min < file.y_max) || !(file.y_max <= 1.0))
        throw scenario_parse_error(0, "y_min/y_max: need 0 < y_min < y_max <= 1");
    if (file.y_count < 1)
        throw scenario_parse_error(0, "y_count: must be at least 1");
    if (file.quad_order < 1 || file.quad_order > 256)
        throw scenario_parse_error(0, "quad_order: must be between 1 and 256");

    // Method/reflection compatibility and everything else the spectrum layer
    // enforces, surfaced as parse-time errors.
    try {
        for (const Scenario& s : file.scenarios())
            validate_scenario(s);
    } catch (const unsupported_regime_error&) {
        throw;
    } catch (const std::exception& e) {
        throw scenario_parse_error(0, e.what());
    }
    return file;
}

// ---------------------------------------------------------------------------
// bundled scenarios

namespace {

const std::string kBundledFig3 = R"(# Thick-slab scenario: three near-mirror reflections, visibly asymmetric spectra.
name = fig3
slab_L_pi = 0.1
reflection = -0.988
reflection = -0.980
reflection = -0.967
y_min = 0.005
y_max = 1.0
y_count = 200
method = quadrature
quad_order = 32
profile = sharp
)";

const std::string kBundledFig4 = R"(# Thin-slab scenario: reflections within 6e-5 of a perfect mirror.
name = fig4
slab_L_pi = 0.001
reflection = -0.99998
reflection = -0.99997
reflection = -0.99994
y_min = 0.005
y_max = 1.0
y_count = 200
method = quadrature
quad_order = 32
profile = sharp
)";

} // namespace

const std::string& bundled_scenario_text(const std::string& name) {
    if (name == "fig3")
        return kBundledFig3;
    if (name == "fig4")
        return kBundledFig4;
    throw std::invalid_argument("unknown bundled scenario '" + name + "'");
}

std::vector<std::string> bundled_scenario_names() { return {"fig3", "fig4"}; }

// ---------------------------------------------------------------------------
// CSV

namespace {

void check_csv_inputs(const std::vector<SpectrumResult>& results,
                      const std::vector<std::string>& labels) {
    if (results.empty())
        throw std::invalid_argument("write_csv: need at least one result");
    if (labels.size() != results.size())
        throw std::invalid_argument("write_csv: one label per result required");
    const auto& first = results.front().points;
    for (const SpectrumResult& r : results) {
        if (r.points.size() != first.size())
            throw std::invalid_argument("write_csv: results have mismatched grids");
        for (size_t i = 0; i < first.size(); ++i)
            if (r.points[i].y != first[i].y)
                throw std::invalid_argument("write_csv: results have mismatched grids");
    }
}

} // namespace

void write_csv(const std::vector<SpectrumResult>& results,
               const std::vector<std::string>& labels, std::ostream& out) {
    check_csv_inputs(results, labels);

    out << "y";
    for (const std::string& label : labels)
        out << ',' << label;
    out << '\n';

    for (size_t i = 0; i < results.front().points.size(); ++i) {
        out << format_sig17(results.front().points[i].y);
        for (const SpectrumResult& r : results)
            out << ',' << format_sig17(r.points[i].density);
        out << '\n';
    }
    if (!out)
        throw std::runtime_error("write_csv: output stream failure");
}

void write_csv_file(const std::vector<SpectrumResult>& results,
                    const std::vector<std::string>& labels, const std::string& path) {
    check_csv_inputs(results, labels); // nothing touches the disk on bad input

    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("write_csv: cannot open '" + tmp + "'");
        write_csv(results, labels, out);
        out.flush();
        if (!out) {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw std::runtime_error("write_csv: I/O failure writing '" + tmp + "'");
        }
    }
    std::filesystem::rename(tmp, path);
}

// ---------------------------------------------------------------------------
// SVG

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

const char* dash_for(size_t index) {
    switch (index % 3) {
    case 0:
        return "9,5"; // dashed
    case 1:
        return "2,4"; // dotted
    default:
        return "";    // solid
    }
}

} // namespace

void render_svg(const std::vector<SpectrumResult>& results,
                const std::vector<std::string>& labels, std::ostream& out) {
    if (results.empty())
        throw std::invalid_argument("render_svg: need at least one result");
    if (labels.size() != results.size())
        throw std::invalid_argument("render_svg: one label per result required");

    const double width = 720, height = 480;
    const double ml = 84, mr = 168, mt = 24, mb = 56;
    const double pw = width - ml - mr, ph = height - mt - mb;

    // Horizontal axis is always y in [0, 1]; vertical axis auto-scales to the
    // data (including 0 so the baseline is visible).
    double vmin = 0.0, vmax = 0.0;
    for (const SpectrumResult& r : results)
        for (const SpectrumPoint& p : r.points) {
            vmin = std::min(vmin, p.density);
            vmax = std::max(vmax, p.density);
        }
    if (vmax == vmin)
        vmax = vmin + 1.0; // all-zero data: flat line along the baseline
    const double span = vmax - vmin;
    vmax += 0.05 * span;
    vmin -= (vmin < 0.0) ? 0.05 * span : 0.0;

    auto px = [&](double y) { return ml + y * pw; };
    auto py = [&](double v) { return mt + ph - (v - vmin) / (vmax - vmin) * ph; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n";
    out << "<rect x=\"" << format_fixed2(ml) << "\" y=\"" << format_fixed2(mt)
        << "\" width=\"" << format_fixed2(pw) << "\" height=\"" << format_fixed2(ph)
        << "\" fill=\"none\" stroke=\"black\"/>\n";

    // x ticks at 0, 0.2, ..., 1
    for (int i = 0; i <= 5; ++i) {
        double y = i / 5.0;
        double x = px(y);
        out << "<line x1=\"" << format_fixed2(x) << "\" y1=\"" << format_fixed2(mt + ph)
            << "\" x2=\"" << format_fixed2(x) << "\" y2=\"" << format_fixed2(mt + ph + 5)
            << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << format_fixed2(x) << "\" y=\"" << format_fixed2(mt + ph + 20)
            << "\" font-size=\"12\" text-anchor=\"middle\">" << format_shortest(y)
            << "</text>\n";
    }
    out << "<text x=\"" << format_fixed2(ml + pw / 2) << "\" y=\""
        << format_fixed2(height - 12)
        << "\" font-size=\"13\" text-anchor=\"middle\">y</text>\n";

    // vertical ticks: 5 evenly spaced values
    for (int i = 0; i <= 4; ++i) {
        double v = vmin + (vmax - vmin) * i / 4.0;
        double yy = py(v);
        out << "<line x1=\"" << format_fixed2(ml - 5) << "\" y1=\"" << format_fixed2(yy)
            << "\" x2=\"" << format_fixed2(ml) << "\" y2=\"" << format_fixed2(yy)
            << "\" stroke=\"black\"/>\n";
        char vbuf[32];
        std::snprintf(vbuf, sizeof vbuf, "%.3g", v);
        out << "<text x=\"" << format_fixed2(ml - 8) << "\" y=\"" << format_fixed2(yy + 4)
            << "\" font-size=\"12\" text-anchor=\"end\">" << vbuf << "</text>\n";
    }
    out << "<text x=\"16\" y=\"" << format_fixed2(mt - 6)
        << "\" font-size=\"13\">dN/dy (reduced units)</text>\n";

    // one polyline per result
    for (size_t idx = 0; idx < results.size(); ++idx) {
        const auto& pts = results[idx].points;
        out << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.4\"";
        if (const char* dash = dash_for(idx); *dash)
            out << " stroke-dasharray=\"" << dash << "\"";
        out << " points=\"";
        for (size_t i = 0; i < pts.size(); ++i) {
            if (i)
                out << ' ';
            out << format_fixed2(px(pts[i].y)) << ',' << format_fixed2(py(pts[i].density));
        }
        out << "\"/>\n";
        if (pts.size() == 1) {
            // Degenerate grid: a polyline with one point is invisible, mark it.
            out << "<circle cx=\"" << format_fixed2(px(pts[0].y)) << "\" cy=\""
                << format_fixed2(py(pts[0].density)) << "\" r=\"3\" fill=\"black\"/>\n";
        }
    }

    // legend
    const double lx = ml + pw + 14;
    for (size_t idx = 0; idx < results.size(); ++idx) {
        double ly = mt + 16 + 20.0 * static_cast<double>(idx);
        out << "<line x1=\"" << format_fixed2(lx) << "\" y1=\"" << format_fixed2(ly)
            << "\" x2=\"" << format_fixed2(lx + 30) << "\" y2=\"" << format_fixed2(ly)
            << "\" stroke=\"black\" stroke-width=\"1.4\"";
        if (const char* dash = dash_for(idx); *dash)
            out << " stroke-dasharray=\"" << dash << "\"";
        out << "/>\n";
        out << "<text x=\"" << format_fixed2(lx + 36) << "\" y=\"" << format_fixed2(ly + 4)
            << "\" font-size=\"12\">" << xml_escape(labels[idx]) << "</text>\n";
    }

    out << "</svg>\n";
    if (!out)
        throw std::runtime_error("render_svg: output stream failure");
}

void render_svg_file(const std::vector<SpectrumResult>& results,
                     const std::vector<std::string>& labels, const std::string& path) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("render_svg: cannot open '" + tmp + "'");
        render_svg(results, labels, out);
        out.flush();
        if (!out) {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw std::runtime_error("render_svg: I/O failure writing '" + tmp + "'");
        }
    }
    std::filesystem::rename(tmp, path);
}

// ---------------------------------------------------------------------------
// CLI

namespace {

std::string load_scenario_text(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::exists(arg, ec) && !std::filesystem::is_directory(arg, ec)) {
        std::ifstream in(arg, std::ios::binary);
        if (!in)
            throw std::runtime_error("cannot read scenario '" + arg + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        if (in.bad())
            throw std::runtime_error("cannot read scenario '" + arg + "'");
        return buf.str();
    }
    for (const std::string& name : bundled_scenario_names())
        if (arg == name)
            return bundled_scenario_text(name);
    throw std::runtime_error("cannot read scenario '" + arg +
                             "': no such file or bundled name (bundled: fig3, fig4)");
}

void print_summaries(const std::vector<SpectrumResult>& results,
                     const std::vector<std::string>& labels, std::ostream& out) {
    for (size_t i = 0; i < results.size(); ++i) {
        const auto& pts = results[i].points;
        if (pts.empty()) {
            out << labels[i] << ": no points\n";
            continue;
        }
        const SpectrumPoint* peak = &pts.front();
        for (const SpectrumPoint& p : pts)
            if (std::abs(p.density) > std::abs(peak->density))
                peak = &p;
        out << labels[i] << ": peak y = " << format_shortest(peak->y)
            << ", peak density = " << format_shortest(peak->density)
            << ", max imag residual = " << format_shortest(results[i].max_imag_residual)
            << '\n';
    }
}

int run_command(const std::string& scenario_arg, const std::string& method_override,
                const std::string& out_path, const std::string& svg_path,
                int order_override) {
    ScenarioFile file = parse_scenario_file(load_scenario_text(scenario_arg));
    if (!method_override.empty())
        file.method = parse_method_token(method_override, 0);
    if (order_override > 0)
        file.quad_order = order_override;

    std::vector<Scenario> scenarios = file.scenarios();
    std::vector<std::string> labels = file.labels();
    std::vector<SpectrumResult> results;
    results.reserve(scenarios.size());
    for (size_t i = 0; i < scenarios.size(); ++i) {
        try {
            results.push_back(run_scenario(scenarios[i]));
        } catch (const unsupported_regime_error& e) {
            throw unsupported_regime_error(labels[i] + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(labels[i] + ": " + e.what());
        }
    }

    const bool csv_to_stdout = (out_path == "-");
    // Keep machine-readable output clean: summaries move to stderr when the
    // CSV itself goes to stdout.
    print_summaries(results, labels, csv_to_stdout ? std::cerr : std::cout);

    if (csv_to_stdout) {
        write_csv(results, labels, std::cout);
        std::cout.flush();
        if (!std::cout)
            throw std::runtime_error("write_csv: stdout failure");
    } else if (!out_path.empty()) {
        write_csv_file(results, labels, out_path);
    }
    if (!svg_path.empty())
        render_svg_file(results, labels, svg_path);
    return 0;
}

} // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Photon spectral density from a moving dielectric interface"};
    app.name("dcespec");
    app.require_subcommand(1);

    std::string scenario_arg, method_override, out_path, svg_path;
    int order_override = 0;
    CLI::App* run = app.add_subcommand("run", "evaluate a scenario, write CSV and/or SVG");
    run->add_option("--scenario", scenario_arg,
                    "scenario file path, or a bundled name (fig3, fig4)")
        ->required();
    run->add_option("--method", method_override,
                    "override the scenario method "
                    "(quadrature|closed_form|expansion|mirror_limit)");
    run->add_option("--out", out_path, "CSV output path, or '-' for stdout");
    run->add_option("--svg", svg_path, "SVG plot output path");
    run->add_option("--quad-order", order_override, "override the quadrature order")
        ->check(CLI::Range(1, 256));

    int rules_order = 0;
    CLI::App* rules = app.add_subcommand("rules", "print Gauss-Legendre nodes and weights");
    rules->add_option("--order", rules_order, "rule order")
        ->required()
        ->check(CLI::Range(1, 256));

    CLI::App* selftest =
        app.add_subcommand("selftest", "run the built-in invariant checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e); // prints help or the error message itself
        return code == 0 ? 0 : 1;
    }

    try {
        if (run->parsed())
            return run_command(scenario_arg, method_override, out_path, svg_path,
                               order_override);
        if (rules->parsed()) {
            QuadratureRule rule = gauss_legendre(rules_order);
            for (int i = 0; i < rule.order; ++i)
                std::cout << format_sig17(rule.nodes[i]) << ' '
                          << format_sig17(rule.weights[i]) << '\n';
            return 0;
        }
        if (selftest->parsed()) {
            std::vector<SelfTestResult> checks = run_selftest();
            bool all_ok = true;
            for (const SelfTestResult& c : checks) {
                if (c.passed) {
                    std::cout << "[ok]   " << c.name << '\n';
                } else {
                    all_ok = false;
                    std::cout << "[FAIL] " << c.name << ": " << c.detail << '\n';
                }
            }
            std::cout << (all_ok ? "selftest passed\n" : "selftest FAILED\n");
            return all_ok ? 0 : 1;
        }
    } catch (const unsupported_regime_error& e) {
        std::cerr << "error (numeric regime): " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

} // namespace dce
