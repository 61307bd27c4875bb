#pragma once
#include <iosfwd>
#include <string>
#include <vector>

#include "dce/spectrum.hpp"

namespace dce {

// One `reflection = ...` or `media = ...` entry from a scenario file: the
// parsed specification plus the verbatim right-hand side (kept so that
// serialization round-trips exactly) and the label used for CSV columns and
// the SVG legend.
struct ReflectionEntry {
    std::string key;  // "reflection" or "media"
    std::string raw;  // verbatim value text
    ReflectionSpec spec;
    std::string label;

    friend bool operator==(const ReflectionEntry&, const ReflectionEntry&) = default;
};

// A parsed scenario file: shared slab/grid/method settings plus one curve
// per reflection entry.
struct ScenarioFile {
    std::string name;
    double slab_L = 0.0;
    std::vector<ReflectionEntry> entries;
    double y_min = 0.0;
    double y_max = 0.0;
    int y_count = 0;
    Method method = Method::quadrature;
    int quad_order = 32;
    SlabProfile profile = SlabProfile::sharp;

    std::vector<double> grid() const;
    std::vector<Scenario> scenarios() const; // one per entry, sharing the grid
    std::vector<std::string> labels() const;
    std::string serialize() const;           // canonical key = value text

    friend bool operator==(const ScenarioFile&, const ScenarioFile&) = default;
};

// Parses the line-oriented `key = value` format ('#' starts a comment).
// Strict: unknown or duplicate keys, missing required keys, and
// out-of-range values are errors (scenario_parse_error with line number).
ScenarioFile parse_scenario_file(const std::string& text);

// Text of a scenario shipped inside the binary ("fig3", "fig4"); throws
// invalid_argument for unknown names.  bundled_scenario_names lists them.
const std::string& bundled_scenario_text(const std::string& name);
std::vector<std::string> bundled_scenario_names();

// CSV with header `y,<label-1>,...,<label-k>` and one row per grid point,
// every number printed with 17 significant digits, LF line endings, '.'
// decimal separator regardless of locale.  All results must share the grid
// bit-for-bit; mismatches throw before anything is written.
void write_csv(const std::vector<SpectrumResult>& results,
               const std::vector<std::string>& labels, std::ostream& out);

// Atomic file variant: writes to a temporary sibling then renames.
void write_csv_file(const std::vector<SpectrumResult>& results,
                    const std::vector<std::string>& labels, const std::string& path);

// Standalone SVG line plot: y in [0,1] horizontally, auto-scaled vertical
// axis, one polyline per result with dashed/dotted/solid styles cycling in
// that order, and a legend.  Single-point results get a circle marker.
void render_svg(const std::vector<SpectrumResult>& results,
                const std::vector<std::string>& labels, std::ostream& out);

void render_svg_file(const std::vector<SpectrumResult>& results,
                     const std::vector<std::string>& labels, const std::string& path);

// Full command-line entry point (subcommands: run, rules, selftest).
// Returns the process exit code: 0 success, 1 usage/configuration error,
// 2 numeric-regime error.
int cli_main(int argc, const char* const* argv);

} // namespace dce
