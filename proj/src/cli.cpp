#include "holestress/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "holestress/chebyshev.hpp"
#include "holestress/corner.hpp"
#include "holestress/errors.hpp"
#include "holestress/oracles.hpp"

namespace holestress::cli {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// "-" is the supplied stream.
void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
    if (!f) throw std::runtime_error("write failed for " + path);
}

std::vector<double> read_samples_csv(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<std::pair<double, double>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw InvalidData(path + ":" + std::to_string(lineno) + ": expected theta,r");
        try {
            std::size_t p1 = 0, p2 = 0;
            const std::string a = line.substr(0, comma), b = line.substr(comma + 1);
            const double t = std::stod(a, &p1), r = std::stod(b, &p2);
            rows.emplace_back(t, r);
        } catch (const std::exception&) {
            if (rows.empty() && lineno == 1) continue;  // header
            throw InvalidData(path + ":" + std::to_string(lineno) + ": not a number");
        }
    }
    if (rows.size() < 2) throw InvalidData(path + ": need at least two samples");
    std::sort(rows.begin(), rows.end());
    const auto nodes = chebyshev_nodes(static_cast<int>(rows.size()), 0.0, kHalfPi);
    std::vector<double> r;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (std::abs(rows[i].first - nodes[i]) > 1e-8) {
            std::ostringstream os;
            os << path << ": theta " << rows[i].first << " is not the Chebyshev node " << nodes[i] << " on [0, pi/2]";
            throw InvalidData(os.str());
        }
        r.push_back(rows[i].second);
    }
    return r;
}

std::string csv_line(std::initializer_list<double> vals) {
    std::string s;
    bool first = true;
    for (double v : vals) {
        if (!first) s += ',';
        s += format_number(v);
        first = false;
    }
    s += '\n';
    return s;
}

void report_solve(const Solution& sol, const BoundaryShape& shape, double secs, std::ostream& err) {
    const auto& d = sol.diagnostics;
    err << "shape=" << shape.label << " N=" << sol.goursat.N() << " rows=" << d.rows << " cols=" << d.cols
        << " pivoting=" << (d.pivoting ? "on" : "off") << '\n';
    err << "residual_norm=" << format_number(d.residual_norm)
        << " condition_estimate=" << format_number(d.condition_estimate) << '\n';
    err << "quadrature nested_runs=" << d.quadrature.nested_runs << " max_levels=" << d.quadrature.max_levels
        << " max_gap=" << format_number(d.quadrature.max_gap) << '\n';
    if (auto l = sol.goursat.lambda()) err << "corner lambda=" << format_number(*l) << '\n';
    err << "solve_seconds=" << secs << '\n';
}

// Largest |a_k|, |b_k| among the last two Chebyshev coefficients.
double tail_coefficient(const AugmentedGoursat& g) {
    const int cheb = g.N() - g.corner_terms();
    double t = 0.0;
    for (int k = std::max(0, cheb - 2); k < cheb; ++k)
        t = std::max({t, std::abs(g.a()[k]), std::abs(g.b()[k])});
    return t;
}

struct Solved {
    BoundaryShape shape;
    Solution sol;
};

Solved solve_from(const RunConfig& cfg, std::ostream& err) {
    auto shape = make_shape(cfg.shape);
    const auto sc = solver_config(cfg, shape);
    const auto t0 = Clock::now();
    auto sol = solve(shape, sc);
    report_solve(sol, shape, seconds_since(t0), err);
    return {std::move(shape), std::move(sol)};
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto [shape, sol] = solve_from(cfg, err);
    err << "tail_coefficient=" << format_number(tail_coefficient(sol.goursat)) << '\n';
    write_text(cfg.goursat_out, to_json(sol.goursat) + "\n", out);
    if (cfg.trace_points < 2) throw ConfigError("--trace-points must be at least 2");
    std::string csv = "theta,sigma_sum\n";
    int skipped = 0;
    for (int k = 0; k < cfg.trace_points; ++k) {
        const double t = kHalfPi * k / (cfg.trace_points - 1);
        try {
            csv += csv_line({t, boundary_trace(sol.goursat, shape, cfg.chi, t)});
        } catch (const SingularEvaluation&) {
            ++skipped;
        }
    }
    if (skipped) err << "trace: skipped " << skipped << " sample(s) at the singular corner\n";
    write_text(cfg.trace_out, csv, out);
    return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto [shape, sol] = solve_from(cfg, err);
    const auto rep = oracle_errors(cfg, shape, sol.goursat);
    nlohmann::ordered_json j;
    j["l2_error"] = rep.l2_error;
    j["max_rel_error_near_corner"] = rep.max_rel_error_near_corner;
    j["N"] = cfg.N;
    j["shape"] = cfg.shape.kind;
    j["quantity"] = rep.quantity;
    j["chi"] = cfg.chi;
    j["corner"] = sol.goursat.lambda().has_value();
    write_text(cfg.report_out, j.dump(2) + "\n", out);
    return kOk;
}

int cmd_convergence(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.n_list.empty()) throw ConfigError("--n-list is empty");
    const auto shape = make_shape(cfg.shape);
    std::string csv = "N,l2_error\n";
    for (int N : cfg.n_list) {
        RunConfig c = cfg;
        c.N = N;
        const auto t0 = Clock::now();
        const auto sol = solve(shape, solver_config(c, shape));
        const auto rep = oracle_errors(c, shape, sol.goursat);
        err << "N=" << N << " l2_error=" << format_number(rep.l2_error) << " seconds=" << seconds_since(t0) << '\n';
        csv += std::to_string(N) + "," + format_number(rep.l2_error) + "\n";
    }
    write_text(cfg.convergence_out, csv, out);
    return kOk;
}

int cmd_field(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto [shape, sol] = solve_from(cfg, err);
    const BoundaryField field(sol.goursat, shape, cfg.chi);
    const auto t0 = Clock::now();
    const auto grid = field_grid(field, cfg.bbox, cfg.nx, cfg.ny);
    std::string csv = "x,y,valid,sigma_x,sigma_y,tau_xy\n";
    int valid = 0;
    for (const auto& s : grid) {
        csv += format_number(s.x) + "," + format_number(s.y) + "," + (s.valid ? "1" : "0") + ",";
        if (s.valid) {
            ++valid;
            csv += format_number(s.sigma_x) + "," + format_number(s.sigma_y) + "," + format_number(s.tau_xy) + "\n";
        } else {
            csv += "nan,nan,nan\n";
        }
    }
    err << "grid " << cfg.nx << "x" << cfg.ny << " valid=" << valid << " seconds=" << seconds_since(t0) << '\n';
    write_text(cfg.grid_out, csv, out);

    nlohmann::ordered_json meta;
    meta["shape"] = cfg.shape.kind;
    if (cfg.shape.kind == "ellipse") meta["m"] = *cfg.shape.m;
    if (cfg.shape.kind == "overlap") meta["alpha"] = *cfg.shape.alpha;
    meta["chi"] = cfg.chi;
    meta["N"] = cfg.N;
    meta["bbox"] = {cfg.bbox.xmin, cfg.bbox.xmax, cfg.bbox.ymin, cfg.bbox.ymax};
    meta["nx"] = cfg.nx;
    meta["ny"] = cfg.ny;
    meta["near_band"] = BoundaryField::kNearBand;
    if (auto l = sol.goursat.lambda()) meta["lambda"] = *l;
    else meta["lambda"] = nullptr;
    const std::string meta_path = cfg.meta_out.empty() ? (cfg.grid_out == "-" ? "-" : cfg.grid_out + ".json") : cfg.meta_out;
    if (meta_path == "-") err << meta.dump(2) << '\n';
    else write_text(meta_path, meta.dump(2) + "\n", out);
    return kOk;
}

int cmd_corner_exponent(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!cfg.beta) throw ConfigError("corner-exponent needs --beta");
    const auto c = williams_exponent(*cfg.beta);
    out << "lambda " << format_number(c.lambda) << '\n';
    out << "lambda_minus_1 " << format_number(c.exponent) << '\n';
    if (!c.real_root) err << "no real root for this angle; lambda is the real part of the dominant complex root\n";
    return kOk;
}

template <class T>
T json_get(const nlohmann::json& j, const char* key) {
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config key '") + key + "': " + e.what());
    }
}

double json_angle(const nlohmann::json& j, const char* key) {
    if (j.at(key).is_string()) return parse_angle(j.at(key).get<std::string>());
    return json_get<double>(j, key);
}

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_angle(const std::string& text) {
    static const std::regex pi_form(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*\*?\s*pi\s*(?:/\s*(\d+\.?\d*))?\s*$)");
    static const std::regex minus_pi(R"(^\s*-\s*pi\s*(?:/\s*(\d+\.?\d*))?\s*$)");
    std::smatch m;
    if (std::regex_match(text, m, minus_pi)) {
        const double den = m[1].matched ? std::stod(m[1].str()) : 1.0;
        if (den == 0.0) throw ConfigError("angle '" + text + "': division by zero");
        return -std::numbers::pi / den;
    }
    if (std::regex_match(text, m, pi_form)) {
        const double num = m[1].matched ? std::stod(m[1].str()) : 1.0;
        const double den = m[2].matched ? std::stod(m[2].str()) : 1.0;
        if (den == 0.0) throw ConfigError("angle '" + text + "': division by zero");
        return num * std::numbers::pi / den;
    }
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw ConfigError("cannot read angle '" + text + "'");
    }
    if (text.find_first_not_of(" \t", pos) != std::string::npos) throw ConfigError("cannot read angle '" + text + "'");
    return v;
}

void apply_config_json(const std::string& text, RunConfig& cfg) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config: top level must be an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        const char* key = k.c_str();
        if (k == "shape") cfg.shape.kind = json_get<std::string>(j, key);
        else if (k == "m") cfg.shape.m = json_get<double>(j, key);
        else if (k == "alpha") cfg.shape.alpha = json_angle(j, key);
        else if (k == "corner_beta") cfg.shape.corner_beta = json_angle(j, key);
        else if (k == "samples_file") cfg.shape.samples_file = json_get<std::string>(j, key);
        else if (k == "chi") cfg.chi = json_get<double>(j, key);
        else if (k == "n" || k == "N") cfg.N = json_get<int>(j, key);
        else if (k == "corner") cfg.corner = json_get<bool>(j, key);
        else if (k == "corner_terms") cfg.corner_terms = json_get<int>(j, key);
        else if (k == "quad_n") cfg.quad_n = json_get<int>(j, key);
        else if (k == "quad_eps") cfg.quad_eps = json_get<double>(j, key);
        else if (k == "trace_points") cfg.trace_points = json_get<int>(j, key);
        else if (k == "goursat_out") cfg.goursat_out = json_get<std::string>(j, key);
        else if (k == "trace_out") cfg.trace_out = json_get<std::string>(j, key);
        else if (k == "report_out") cfg.report_out = json_get<std::string>(j, key);
        else if (k == "convergence_out") cfg.convergence_out = json_get<std::string>(j, key);
        else if (k == "grid_out") cfg.grid_out = json_get<std::string>(j, key);
        else if (k == "meta_out") cfg.meta_out = json_get<std::string>(j, key);
        else if (k == "nx") cfg.nx = json_get<int>(j, key);
        else if (k == "ny") cfg.ny = json_get<int>(j, key);
        else if (k == "n_list") cfg.n_list = json_get<std::vector<int>>(j, key);
        else if (k == "beta") cfg.beta = json_angle(j, key);
        else if (k == "bbox") {
            const auto b = json_get<std::vector<double>>(j, key);
            if (b.size() != 4) throw ConfigError("config key 'bbox': expected [xmin, xmax, ymin, ymax]");
            cfg.bbox = {b[0], b[1], b[2], b[3]};
        } else {
            throw ConfigError("config: unknown key '" + k + "'");
        }
    }
}

BoundaryShape make_shape(const ShapeSpec& spec) {
    if (spec.kind == "circle") return circle();
    if (spec.kind == "ellipse") {
        if (!spec.m) throw ConfigError("--m is required for --shape ellipse");
        if (!(*spec.m > 0.0 && *spec.m < 1.0)) throw ConfigError("--m must lie in (0, 1)");
        return ellipse(*spec.m);
    }
    if (spec.kind == "overlap") {
        if (!spec.alpha) throw ConfigError("--alpha is required for --shape overlap");
        if (!(*spec.alpha > 0.0 && *spec.alpha < std::numbers::pi))
            throw ConfigError("--alpha must lie in (0, pi)");
        return overlapping_circles(*spec.alpha);
    }
    if (spec.kind == "custom") {
        if (spec.samples_file.empty()) throw ConfigError("--samples-file is required for --shape custom");
        return custom_from_samples(read_samples_csv(spec.samples_file), spec.corner_beta);
    }
    throw ConfigError("unknown shape '" + spec.kind + "'");
}

SolverConfig solver_config(const RunConfig& cfg, const BoundaryShape& shape) {
    SolverConfig s;
    s.N = cfg.N;
    s.chi = cfg.chi;
    s.use_corner = cfg.corner.value_or(shape.corner.has_value());
    s.corner_terms = cfg.corner_terms;
    s.quad_n = cfg.quad_n;
    s.quad_eps = cfg.quad_eps;
    validate(s, shape);
    return s;
}

ErrorReport oracle_errors(const RunConfig& cfg, const BoundaryShape& shape, const AugmentedGoursat& g) {
    ErrorReport r;
    const double chi = cfg.chi;
    const auto& kind = cfg.shape.kind;
    if (kind == "circle") {
        r.quantity = "phi";
        r.l2_error = l2_error_phi(g, [chi](double t) { return (1.0 - chi) * circle_phi(t); });
        r.max_rel_error_near_corner =
            max_rel_error_near_corner(g, shape, chi, [chi](double t) { return circle_trace(t, chi); });
    } else if (kind == "ellipse") {
        if (chi != 0.0) throw NumericalError("no exact ellipse solution for chi != 0");
        const double m = *cfg.shape.m;
        r.quantity = "phi";
        r.l2_error = l2_error_phi(g, [m](double t) { return ellipse_phi(t, m); });
        r.max_rel_error_near_corner = max_rel_error_near_corner(g, shape, chi, [m](double t) { return ellipse_trace(t, m); });
    } else if (kind == "overlap") {
        const LingTrace exact(ling_params(*cfg.shape.alpha, 1.0, chi));
        auto oracle = [&exact](double t) { return exact(t); };
        r.quantity = "sigma_sum";
        r.l2_error = l2_error_trace(g, shape, chi, oracle);
        r.max_rel_error_near_corner = max_rel_error_near_corner(g, shape, chi, oracle);
    } else {
        throw NumericalError("no exact solution is available for shape '" + kind + "'");
    }
    return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Goursat function and stresses around a hole in an infinite plate under uniaxial tension"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path, shape_kind, alpha_text, beta_text, corner_beta_text, samples_file, bbox_text;
    double m = 0.0, chi = 0.0, quad_eps = 0.0;
    int N = 0, quad_n = 0, corner_terms = 0, trace_points = 0, nx = 0, ny = 0;
    bool corner = false;
    std::vector<int> n_list;
    std::string goursat_out, trace_out, report_out, convergence_out, grid_out, meta_out;

    auto* o_config = app.add_option("--config", config_path, "JSON config; flags override its keys")->check(CLI::ExistingFile);
    auto* o_shape = app.add_option("--shape", shape_kind, "circle | ellipse | overlap | custom")
                        ->check(CLI::IsMember({"circle", "ellipse", "overlap", "custom"}));
    auto* o_m = app.add_option("--m", m, "ellipse parameter, r(0) = 1 + m");
    auto* o_alpha = app.add_option("--alpha", alpha_text, "overlap half-angle in radians or as 'pi/3', '2pi/3'");
    auto* o_samples = app.add_option("--samples-file", samples_file, "CSV of theta,r at Chebyshev nodes on [0, pi/2]");
    auto* o_cbeta = app.add_option("--corner-beta", corner_beta_text, "wedge angle of a custom shape's corner");
    auto* o_chi = app.add_option("--chi", chi, "far-field sigma_y / sigma_x");
    auto* o_n = app.add_option("--n,-N", N, "collocation points (default 64)");
    auto* o_corner = app.add_flag("--corner,!--no-corner", corner, "corner basis term (default: on when the shape has a corner)");
    auto* o_terms = app.add_option("--corner-terms", corner_terms, "corner powers lambda-1, lambda, ... (default 1)");
    auto* o_qn = app.add_option("--quad-n", quad_n, "Gauss nodes per panel (default 16)");
    auto* o_qeps = app.add_option("--quad-eps", quad_eps, "nested quadrature tolerance (default 1e-15)");

    auto* solve_cmd = app.add_subcommand("solve", "solve for phi; write coefficients and the boundary trace");
    auto* o_gout = solve_cmd->add_option("--goursat-out", goursat_out, "coefficient JSON (default goursat.json)");
    auto* o_tout = solve_cmd->add_option("--trace-out", trace_out, "theta,sigma_sum CSV (default trace.csv)");
    auto* o_tpts = solve_cmd->add_option("--trace-points", trace_points, "uniform trace samples (default 181)");

    auto* verify_cmd = app.add_subcommand("verify", "solve and compare with the exact solution");
    auto* o_rout = verify_cmd->add_option("--out,--report-out", report_out, "report JSON, '-' for stdout");

    auto* conv_cmd = app.add_subcommand("convergence", "L2 error against N");
    auto* o_nlist = conv_cmd->add_option("--n-list", n_list, "comma separated N values")->delimiter(',');
    auto* o_cout = conv_cmd->add_option("--out", convergence_out, "N,l2_error CSV, '-' for stdout");

    auto* field_cmd = app.add_subcommand("field", "stress grid in the plate");
    auto* o_bbox = field_cmd->add_option("--bbox", bbox_text, "xmin,xmax,ymin,ymax (default -3,3,-3,3)");
    auto* o_nx = field_cmd->add_option("--nx", nx, "grid columns (default 101)");
    auto* o_ny = field_cmd->add_option("--ny", ny, "grid rows (default 101)");
    auto* o_grid = field_cmd->add_option("--out,--grid-out", grid_out, "grid CSV (default grid.csv)");
    auto* o_meta = field_cmd->add_option("--meta-out", meta_out, "JSON sidecar (default <grid>.json)");

    auto* corner_cmd = app.add_subcommand("corner-exponent", "Williams exponent of a wedge");
    auto* o_beta = corner_cmd->add_option("--beta", beta_text, "wedge angle through the solid, radians or 'k pi/n'")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    RunConfig cfg;
    try {
        if (*o_config) apply_config_json(read_file(config_path), cfg);
        if (*o_shape) cfg.shape.kind = shape_kind;
        if (*o_m) cfg.shape.m = m;
        if (*o_alpha) cfg.shape.alpha = parse_angle(alpha_text);
        if (*o_samples) cfg.shape.samples_file = samples_file;
        if (*o_cbeta) cfg.shape.corner_beta = parse_angle(corner_beta_text);
        if (*o_chi) cfg.chi = chi;
        if (*o_n) cfg.N = N;
        if (*o_corner) cfg.corner = corner;
        if (*o_terms) cfg.corner_terms = corner_terms;
        if (*o_qn) cfg.quad_n = quad_n;
        if (*o_qeps) cfg.quad_eps = quad_eps;
        if (*o_gout) cfg.goursat_out = goursat_out;
        if (*o_tout) cfg.trace_out = trace_out;
        if (*o_tpts) cfg.trace_points = trace_points;
        if (*o_rout) cfg.report_out = report_out;
        if (*o_nlist) cfg.n_list = n_list;
        if (*o_cout) cfg.convergence_out = convergence_out;
        if (*o_nx) cfg.nx = nx;
        if (*o_ny) cfg.ny = ny;
        if (*o_grid) cfg.grid_out = grid_out;
        if (*o_meta) cfg.meta_out = meta_out;
        if (*o_beta) cfg.beta = parse_angle(beta_text);
        if (*o_bbox) {
            std::vector<double> b;
            std::istringstream in(bbox_text);
            std::string tok;
            while (std::getline(in, tok, ',')) {
                try {
                    b.push_back(std::stod(tok));
                } catch (const std::exception&) {
                    throw ConfigError("--bbox: cannot read '" + tok + "'");
                }
            }
            if (b.size() != 4) throw ConfigError("--bbox expects xmin,xmax,ymin,ymax");
            cfg.bbox = {b[0], b[1], b[2], b[3]};
        }
        if (!std::isfinite(cfg.chi)) throw ConfigError("--chi must be finite");
        if (!(cfg.bbox.xmin < cfg.bbox.xmax && cfg.bbox.ymin < cfg.bbox.ymax)) throw ConfigError("--bbox is empty");
        if (cfg.nx < 2 || cfg.ny < 2) throw ConfigError("--nx and --ny must be at least 2");

        if (solve_cmd->parsed()) return cmd_solve(cfg, out, err);
        if (verify_cmd->parsed()) return cmd_verify(cfg, out, err);
        if (conv_cmd->parsed()) return cmd_convergence(cfg, out, err);
        if (field_cmd->parsed()) return cmd_field(cfg, out, err);
        if (corner_cmd->parsed()) return cmd_corner_exponent(cfg, out, err);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace holestress::cli
