#include "angleopt/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace angleopt {
namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

/// Splits a line into whitespace-delimited tokens, dropping `#` comments.
std::vector<std::string> tokenize(const std::string& line) {
    std::string body = line;
    if (const auto hash = body.find('#'); hash != std::string::npos) {
        body.erase(hash);
    }
    std::istringstream in(body);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

double parse_number(const std::string& tok, int line, const char* what) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(tok, &used);
    } catch (const std::exception&) {
        parse_fail(line, std::string("invalid ") + what + " '" + tok + "'");
    }
    if (used != tok.size()) {
        parse_fail(line, std::string("invalid ") + what + " '" + tok + "'");
    }
    return value;
}

std::string format_coord(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Graph cycle_graph(int n) {
    Graph g;
    for (int i = 0; i < n; ++i) {
        g.add_edge("v" + std::to_string(i), "v" + std::to_string((i + 1) % n));
    }
    return g;
}

Graph path_graph(int n) {
    Graph g;
    for (int i = 0; i + 1 < n; ++i) {
        g.add_edge("v" + std::to_string(i), "v" + std::to_string(i + 1));
    }
    return g;
}

Graph complete_graph(int n) {
    Graph g;
    g.add_vertex("v0");
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            g.add_edge("v" + std::to_string(i), "v" + std::to_string(j));
        }
    }
    return g;
}

Graph petersen_graph() {
    Graph g;
    for (int i = 0; i < 5; ++i) {
        g.add_edge("o" + std::to_string(i), "o" + std::to_string((i + 1) % 5));
    }
    for (int i = 0; i < 5; ++i) {
        g.add_edge("o" + std::to_string(i), "i" + std::to_string(i));
    }
    for (int i = 0; i < 5; ++i) {
        g.add_edge("i" + std::to_string(i), "i" + std::to_string((i + 2) % 5));
    }
    return g;
}

Graph heawood_graph() {
    Graph g;
    for (int i = 0; i < 14; ++i) {
        g.add_edge("v" + std::to_string(i), "v" + std::to_string((i + 1) % 14));
    }
    const int chords[7][2] = {{0, 5}, {1, 10}, {2, 7}, {3, 12}, {4, 9}, {6, 11}, {8, 13}};
    for (const auto& c : chords) {
        g.add_edge("v" + std::to_string(c[0]), "v" + std::to_string(c[1]));
    }
    return g;
}

Graph herschel_graph() {
    Graph g;
    const int edges[18][2] = {{0, 2}, {0, 3}, {0, 4},  {1, 2},  {1, 3},  {1, 5},
                              {2, 6}, {2, 7}, {3, 8},  {3, 9},  {4, 6},  {4, 8},
                              {5, 7}, {5, 9}, {6, 10}, {7, 10}, {8, 10}, {9, 10}};
    for (const auto& e : edges) {
        g.add_edge("v" + std::to_string(e[0]), "v" + std::to_string(e[1]));
    }
    return g;
}

}  // namespace

int Graph::add_vertex(const std::string& id) {
    const auto it = index_.find(id);
    if (it != index_.end()) return it->second;
    const int v = static_cast<int>(ids_.size());
    ids_.push_back(id);
    index_.emplace(id, v);
    return v;
}

void Graph::add_edge(const std::string& u, const std::string& v, std::optional<double> length) {
    if (u == v) {
        throw std::invalid_argument("self-loop on vertex '" + u + "'");
    }
    const int ui = add_vertex(u);
    const int vi = add_vertex(v);
    if (has_edge(ui, vi)) return;  // first occurrence wins
    edges_.push_back({ui, vi, length});
}

int Graph::find(const std::string& id) const {
    const auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

bool Graph::has_edge(int u, int v) const {
    for (const Edge& e : edges_) {
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return true;
    }
    return false;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (const Edge& e : edges_) {
        if (e.u == v) out.push_back(e.v);
        if (e.v == v) out.push_back(e.u);
    }
    return out;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(ids_.size(), 0);
    for (const Edge& e : edges_) {
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
    }
    return deg;
}

int Drawing::find(const std::string& id) const {
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] == id) return static_cast<int>(i);
    }
    return -1;
}

Graph parse_edge_list(std::istream& in) {
    Graph g;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens.size() < 2 || tokens.size() > 3) {
            parse_fail(line_no, "expected 'u v [length]'");
        }
        std::optional<double> length;
        if (tokens.size() == 3) {
            const double value = parse_number(tokens[2], line_no, "edge length");
            if (!(value > 0.0)) {
                parse_fail(line_no, "edge length must be positive");
            }
            length = value;
        }
        try {
            g.add_edge(tokens[0], tokens[1], length);
        } catch (const std::invalid_argument& e) {
            parse_fail(line_no, e.what());
        }
    }
    return g;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    for (const Graph::Edge& e : g.edges()) {
        out << g.id(e.u) << ' ' << g.id(e.v);
        if (e.length) out << ' ' << format_coord(*e.length);
        out << '\n';
    }
    return out.str();
}

Drawing parse_drawing(std::istream& in) {
    Drawing d;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::vector<std::string> tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 3) {
            parse_fail(line_no, "expected 'id x y'");
        }
        if (d.find(tokens[0]) >= 0) {
            parse_fail(line_no, "duplicate vertex '" + tokens[0] + "'");
        }
        const double x = parse_number(tokens[1], line_no, "coordinate");
        const double y = parse_number(tokens[2], line_no, "coordinate");
        d.ids.push_back(tokens[0]);
        d.positions.push_back({x, y});
    }
    return d;
}

Drawing parse_drawing(const std::string& text) {
    std::istringstream in(text);
    return parse_drawing(in);
}

std::string serialize_drawing(const Drawing& d) {
    std::ostringstream out;
    for (std::size_t i = 0; i < d.ids.size(); ++i) {
        out << d.ids[i] << ' ' << format_coord(d.positions[i].x) << ' '
            << format_coord(d.positions[i].y) << '\n';
    }
    return out.str();
}

Graph named_graph(const std::string& name) {
    if (name == "petersen") return petersen_graph();
    if (name == "heawood") return heawood_graph();
    if (name == "herschel") return herschel_graph();
    const auto colon = name.find(':');
    if (colon != std::string::npos) {
        const std::string family = name.substr(0, colon);
        const std::string param = name.substr(colon + 1);
        int n = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(param, &used);
            if (used != param.size()) throw std::invalid_argument(param);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid graph parameter '" + param + "'");
        }
        if (family == "cycle") {
            if (n < 3) throw std::invalid_argument("cycle:n requires n >= 3");
            return cycle_graph(n);
        }
        if (family == "path") {
            if (n < 2) throw std::invalid_argument("path:n requires n >= 2");
            return path_graph(n);
        }
        if (family == "complete") {
            if (n < 1) throw std::invalid_argument("complete:n requires n >= 1");
            return complete_graph(n);
        }
    }
    throw std::invalid_argument("unknown graph '" + name + "'");
}

}  // namespace angleopt
