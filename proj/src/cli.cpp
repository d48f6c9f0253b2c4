#include "angleopt/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "angleopt/displacement.hpp"
#include "angleopt/geometry.hpp"
#include "angleopt/graph.hpp"
#include "angleopt/layout.hpp"
#include "angleopt/metrics.hpp"
#include "angleopt/svg.hpp"

namespace angleopt {
namespace {

using nlohmann::json;

double to_deg(double rad) { return rad * 180.0 / kPi; }

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

Point parse_point(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw std::runtime_error("expected 'x,y', got '" + text + "'");
    }
    std::size_t ux = 0, uy = 0;
    const std::string xs = text.substr(0, comma);
    const std::string ys = text.substr(comma + 1);
    double x = 0.0, y = 0.0;
    try {
        x = std::stod(xs, &ux);
        y = std::stod(ys, &uy);
    } catch (const std::exception&) {
        throw std::runtime_error("expected 'x,y', got '" + text + "'");
    }
    if (ux != xs.size() || uy != ys.size()) {
        throw std::runtime_error("expected 'x,y', got '" + text + "'");
    }
    return {x, y};
}

Drawing load_drawing(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return parse_drawing(in);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

json metrics_json(const Metrics& m) {
    json j;
    j["angular_resolution_deg"] = to_deg(m.angular_resolution);
    j["angular_resolution_rad"] = m.angular_resolution;
    j["edge_length_rmse"] = m.edge_length_rmse;
    j["crossings"] = m.crossings;
    j["degenerate"] = m.degenerate;
    return j;
}

void print_metrics_text(std::ostream& out, const Metrics& m) {
    out << "angular_resolution_deg: " << fixed6(to_deg(m.angular_resolution)) << "\n";
    out << "edge_length_rmse: " << fixed6(m.edge_length_rmse) << "\n";
    out << "crossings: " << m.crossings << "\n";
    out << "degenerate: " << (m.degenerate ? "true" : "false") << "\n";
}

/// Graph input: --graph accepts a built-in name or a file path; --named and
/// --input force one interpretation.
struct GraphSource {
    std::string any;
    std::string named;
    std::string input;

    void attach(CLI::App* cmd) {
        cmd->add_option("--graph", any,
                        "Built-in graph name or edge-list file path");
        cmd->add_option("--named", named,
                        "Built-in graph: petersen, heawood, herschel, cycle:n, path:n, "
                        "complete:n");
        cmd->add_option("--input", input, "Edge-list file ('u v [length]' per line)");
    }
    bool valid() const {
        return (any.empty() ? 0 : 1) + (named.empty() ? 0 : 1) + (input.empty() ? 0 : 1) == 1;
    }
    Graph load() const {
        if (!named.empty()) return named_graph(named);
        std::string path = input;
        if (!any.empty()) {
            try {
                return named_graph(any);
            } catch (const std::invalid_argument&) {
                if (!std::filesystem::exists(any)) {
                    throw std::runtime_error("'" + any +
                                             "' is neither a built-in graph nor a file");
                }
                path = any;
            }
        }
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open '" + path + "'");
        return parse_edge_list(in);
    }
};

/// Layout options shared by `layout` and `compare`.
struct LayoutFlags {
    LayoutConfig config;
    std::string spring_model = "log";

    void attach(CLI::App* cmd) {
        cmd->add_option("--iterations", config.iterations, "Maximum iterations");
        cmd->add_option("--seed", config.seed, "Random seed for the initial placement");
        cmd->add_option("--edge-length", config.default_edge_length,
                        "Desired length for edges without one");
        cmd->add_option("--spring-model", spring_model, "Spring force: log or linear");
        cmd->add_option("--subdivide", config.subdivide_edges,
                        "Extra vertices inserted per edge");
        cmd->add_option("--angle-weight", config.angle_weight,
                        "Weight of the angular displacement");
        cmd->add_option("--spring-weight", config.spring_weight,
                        "Weight of the spring displacement");
        cmd->add_option("--radius-start", config.angle_radius_start,
                        "Initial displacement radius");
        cmd->add_option("--radius-decay", config.angle_radius_decay,
                        "Per-iteration radius decay factor");
    }
    /// Returns false (after writing a message) for an unknown spring model.
    bool resolve(std::ostream& err) {
        if (spring_model == "log") {
            config.spring_model = SpringModel::logarithmic;
        } else if (spring_model == "linear") {
            config.spring_model = SpringModel::linear;
        } else {
            err << "error: --spring-model must be 'log' or 'linear'\n";
            return false;
        }
        return true;
    }
};

int cmd_layout(const GraphSource& src, const LayoutConfig& config, const std::string& output,
               const std::string& svg_path, bool labels, bool as_json, std::ostream& out) {
    const Graph g = src.load();
    const LayoutResult result = layout(g, config);
    const Metrics m =
        compute_metrics(result.graph, result.drawing, config.default_edge_length);

    if (!output.empty()) {
        write_file(output, serialize_drawing(result.drawing));
    }
    if (!svg_path.empty()) {
        SvgStyle style;
        style.labels = labels;
        write_file(svg_path, render_svg(result.graph, result.drawing, style));
    }
    if (as_json) {
        json j = metrics_json(m);
        j["vertices"] = result.graph.vertex_count();
        j["edges"] = result.graph.edge_count();
        j["iterations"] = result.trace.size();
        j["converged"] = result.converged;
        out << j.dump(2) << "\n";
    } else if (output.empty() && svg_path.empty()) {
        out << serialize_drawing(result.drawing);
    } else {
        out << "iterations: " << result.trace.size()
            << (result.converged ? " (converged)" : "") << "\n";
        print_metrics_text(out, m);
    }
    return 0;
}

int cmd_solve(const std::string& p_text, const std::vector<std::string>& neighbor_texts,
              double r, double grid_delta, bool as_json, std::ostream& out) {
    DisplacementQuery q;
    q.p = parse_point(p_text);
    for (const std::string& t : neighbor_texts) q.neighbors.push_back(parse_point(t));
    q.r = r;
    GridParams grid;
    grid.delta_ratio = grid_delta;
    const DisplacementResult res = solve(q, grid);

    if (as_json) {
        json j;
        j["p_star"] = {res.p_star.x, res.p_star.y};
        j["min_angle_rad"] = res.min_angle;
        j["min_angle_deg"] = to_deg(res.min_angle);
        j["method"] = std::string(method_name(res.method));
        j["degenerate"] = res.degenerate;
        out << j.dump(2) << "\n";
    } else {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "p_star: %.12g %.12g\n", res.p_star.x, res.p_star.y);
        out << buf;
        out << "min_angle_deg: " << fixed6(to_deg(res.min_angle)) << "\n";
        out << "method: " << method_name(res.method) << "\n";
        out << "degenerate: " << (res.degenerate ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_metrics(const GraphSource& src, const std::string& drawing_path, double edge_length,
                bool as_json, std::ostream& out) {
    const Graph g = src.load();
    const Drawing d = load_drawing(drawing_path);
    const Metrics m = compute_metrics(g, d, edge_length);
    if (as_json) {
        out << metrics_json(m).dump(2) << "\n";
    } else {
        print_metrics_text(out, m);
    }
    return 0;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

/// Paired-seed comparison: the same layout run with the angular force enabled
/// and disabled, seed by seed.
int cmd_compare(const GraphSource& src, const LayoutConfig& base, int seeds, bool as_json,
                std::ostream& out) {
    const Graph g = src.load();
    std::vector<double> on_deg, off_deg;
    json rows = json::array();
    for (int s = 1; s <= seeds; ++s) {
        LayoutConfig cfg = base;
        cfg.seed = static_cast<std::uint64_t>(s);
        const LayoutResult with_angle = layout(g, cfg);
        cfg.angle_weight = 0.0;
        const LayoutResult without_angle = layout(g, cfg);
        const Metrics m_on =
            compute_metrics(with_angle.graph, with_angle.drawing, base.default_edge_length);
        const Metrics m_off = compute_metrics(without_angle.graph, without_angle.drawing,
                                              base.default_edge_length);
        on_deg.push_back(to_deg(m_on.angular_resolution));
        off_deg.push_back(to_deg(m_off.angular_resolution));
        json row;
        row["seed"] = s;
        row["angle_on"] = metrics_json(m_on);
        row["angle_off"] = metrics_json(m_off);
        rows.push_back(row);
    }
    if (as_json) {
        json j;
        j["seeds"] = rows;
        j["median_on_deg"] = median(on_deg);
        j["median_off_deg"] = median(off_deg);
        out << j.dump(2) << "\n";
    } else {
        out << "seed  angle_on_deg  angle_off_deg\n";
        for (std::size_t i = 0; i < on_deg.size(); ++i) {
            char buf[96];
            std::snprintf(buf, sizeof(buf), "%4zu  %12.3f  %13.3f\n", i + 1, on_deg[i],
                          off_deg[i]);
            out << buf;
        }
        out << "median angle_on: " << fixed6(median(on_deg)) << "\n";
        out << "median angle_off: " << fixed6(median(off_deg)) << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Force-directed graph layout with exact angular-resolution displacement"};
    app.name("angleopt");
    app.require_subcommand(1);

    // layout
    CLI::App* layout_cmd = app.add_subcommand("layout", "Lay out a graph and write results");
    GraphSource layout_src;
    layout_src.attach(layout_cmd);
    LayoutFlags layout_flags;
    layout_flags.attach(layout_cmd);
    std::string output, svg_path;
    bool labels = false, layout_json = false;
    layout_cmd->add_option("--output", output, "Write the drawing ('id x y' lines) here");
    layout_cmd->add_option("--svg,--out", svg_path, "Write an SVG rendering here");
    layout_cmd->add_flag("--labels", labels, "Label vertices in the SVG");
    layout_cmd->add_flag("--json", layout_json, "Print a JSON summary to stdout");

    // solve
    CLI::App* solve_cmd =
        app.add_subcommand("solve", "Best displacement for one vertex and its neighbors");
    std::string p_text;
    std::vector<std::string> neighbor_texts;
    double r = 1.0, grid_delta = GridParams{}.delta_ratio;
    bool solve_json = false;
    solve_cmd->add_option("--p", p_text, "Vertex position 'x,y'")->required();
    solve_cmd->add_option("--neighbor", neighbor_texts, "Neighbor position 'x,y' (repeat)")
        ->required();
    solve_cmd->add_option("--r", r, "Displacement radius")->required();
    solve_cmd->add_option("--grid-delta", grid_delta,
                          "Grid spacing as a fraction of r (degree >= 4)");
    solve_cmd->add_flag("--json", solve_json, "Print the result as JSON");

    // metrics
    CLI::App* metrics_cmd = app.add_subcommand("metrics", "Evaluate a drawing of a graph");
    GraphSource metrics_src;
    metrics_src.attach(metrics_cmd);
    std::string drawing_path;
    double metrics_edge_length = 1.0;
    bool metrics_json_flag = false;
    metrics_cmd->add_option("--drawing", drawing_path, "Drawing file ('id x y' lines)")
        ->required();
    metrics_cmd->add_option("--edge-length", metrics_edge_length,
                            "Desired length for edges without one");
    metrics_cmd->add_flag("--json", metrics_json_flag, "Print metrics as JSON");

    // compare
    CLI::App* compare_cmd = app.add_subcommand(
        "compare", "Paired-seed comparison: angular force on vs. off");
    GraphSource compare_src;
    compare_src.attach(compare_cmd);
    LayoutFlags compare_flags;
    compare_flags.attach(compare_cmd);
    int compare_seeds = 10;
    bool compare_json = false;
    compare_cmd->add_option("--seeds", compare_seeds, "Number of paired seeds (1..N)")
        ->check(CLI::PositiveNumber);
    compare_cmd->add_flag("--json", compare_json, "Print comparison as JSON");

    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.push_back("angleopt");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const std::string& s : full) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(layout_cmd)) {
            if (!layout_src.valid()) {
                err << "error: give exactly one of --graph, --named or --input\n";
                return 2;
            }
            if (!layout_flags.resolve(err)) return 2;
            return cmd_layout(layout_src, layout_flags.config, output, svg_path, labels,
                              layout_json, out);
        }
        if (app.got_subcommand(solve_cmd)) {
            return cmd_solve(p_text, neighbor_texts, r, grid_delta, solve_json, out);
        }
        if (app.got_subcommand(metrics_cmd)) {
            if (!metrics_src.valid()) {
                err << "error: give exactly one of --graph, --named or --input\n";
                return 2;
            }
            return cmd_metrics(metrics_src, drawing_path, metrics_edge_length,
                               metrics_json_flag, out);
        }
        if (app.got_subcommand(compare_cmd)) {
            if (!compare_src.valid()) {
                err << "error: give exactly one of --graph, --named or --input\n";
                return 2;
            }
            if (!compare_flags.resolve(err)) return 2;
            return cmd_compare(compare_src, compare_flags.config, compare_seeds, compare_json,
                               out);
        }
        err << "error: no subcommand\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace angleopt
