#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "holestress/assembler.hpp"
#include "holestress/field.hpp"
#include "holestress/shapes.hpp"

namespace holestress::cli {

// Exit codes of run().
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;
inline constexpr int kUsage = 2;

struct ShapeSpec {
    std::string kind = "circle";  // circle | ellipse | overlap | custom
    std::optional<double> m, alpha, corner_beta;
    std::string samples_file;
};

struct RunConfig {
    std::string command;
    ShapeSpec shape;
    double chi = 0.0;
    int N = 64;
    std::optional<bool> corner;  // unset: on whenever the shape has a corner
    int corner_terms = 1;
    int quad_n = 16;
    double quad_eps = 1e-15;
    int trace_points = 181;
    std::string goursat_out = "goursat.json";
    std::string trace_out = "trace.csv";
    std::string report_out = "-";
    std::string convergence_out = "-";
    std::string grid_out = "grid.csv";
    std::string meta_out;  // defaults to grid_out + ".json"
    BBox bbox{-3.0, 3.0, -3.0, 3.0};
    int nx = 101, ny = 101;
    std::vector<int> n_list{8, 16, 24, 32};
    std::optional<double> beta;
};

// Radians, or a multiple of pi: "pi/3", "2pi/3", "2*pi/3", "-pi", "0.5pi".
double parse_angle(const std::string& text);

// Overlay the keys of a JSON config object onto cfg. Unknown keys and bad
// types raise ConfigError.
void apply_config_json(const std::string& text, RunConfig& cfg);

BoundaryShape make_shape(const ShapeSpec& spec);
SolverConfig solver_config(const RunConfig& cfg, const BoundaryShape& shape);

// Oracle comparison used by verify and convergence. phi is compared for the
// circle and the ellipse, sigma_x + sigma_y for overlapping circles.
struct ErrorReport {
    std::string quantity;
    double l2_error = 0.0;
    double max_rel_error_near_corner = 0.0;
};
ErrorReport oracle_errors(const RunConfig& cfg, const BoundaryShape& shape, const AugmentedGoursat& g);

// 17 significant digits.
std::string format_number(double v);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace holestress::cli
