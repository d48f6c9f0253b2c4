#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "angleopt/geometry.hpp"

namespace angleopt {

/// Undirected simple graph with string vertex ids. Vertices are numbered in
/// first-appearance order; that order is the canonical one everywhere
/// (serialization, layout, metrics).
class Graph {
public:
    struct Edge {
        int u = 0;
        int v = 0;
        std::optional<double> length;  // desired drawing length, if specified
    };

    /// Returns the index of `id`, inserting it if new.
    int add_vertex(const std::string& id);

    /// Adds an undirected edge. Duplicate edges are merged, keeping the first
    /// occurrence's length. Throws std::invalid_argument on self-loops.
    void add_edge(const std::string& u, const std::string& v,
                  std::optional<double> length = std::nullopt);

    int vertex_count() const { return static_cast<int>(ids_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& ids() const { return ids_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::string& id(int v) const { return ids_.at(static_cast<std::size_t>(v)); }

    /// Index of `id`, or -1 if absent.
    int find(const std::string& id) const;

    bool has_edge(int u, int v) const;

    /// Neighbor indices of v, in edge insertion order.
    std::vector<int> neighbors(int v) const;

    std::vector<int> degrees() const;

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, int> index_;
    std::vector<Edge> edges_;
};

/// Vertex positions keyed by id; `ids` and `positions` run in parallel.
struct Drawing {
    std::vector<std::string> ids;
    std::vector<Point> positions;

    int find(const std::string& id) const;
};

/// Parses the edge-list format: one `u v [length]` per line, `#` starts a
/// comment, blank lines ignored. Errors report 1-based line numbers.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

/// One `u v [length]` line per edge, insertion order. Isolated vertices are
/// not representable in this format and are dropped.
std::string serialize_edge_list(const Graph& g);

/// Parses the drawing format: one `id x y` per line, same comment and error
/// conventions as the edge list.
Drawing parse_drawing(std::istream& in);
Drawing parse_drawing(const std::string& text);

/// One `id x y` line per vertex with round-trip-exact coordinates.
std::string serialize_drawing(const Drawing& d);

/// Built-in graphs: "petersen", "heawood", "herschel", and the parametric
/// families "cycle:n" (n >= 3), "path:n" (n >= 2), "complete:n" (n >= 1).
/// Throws std::invalid_argument for unknown names or bad parameters.
Graph named_graph(const std::string& name);

}  // namespace angleopt
