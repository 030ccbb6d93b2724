#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rwmeet {

/// Thrown by load_edge_list on malformed input; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct Edge {
    int u;
    int v;
    double w;
};

/// Degree statistics of a weighted graph.
///
/// d_std uses the population (divide-by-n) convention so that
/// s2 == n * (d_avg^2 + d_std^2) holds as an identity.
struct GraphStats {
    int n = 0;
    double s1 = 0.0;     // sum of weighted degrees
    double s2 = 0.0;     // sum of squared weighted degrees
    double d_avg = 0.0;
    double d_std = 0.0;
    double d_min = 0.0;
    double w_max = 0.0;

    /// CSV row: n,s1,s2,d_avg,d_std,d_min,w_max
    std::string csv_row() const;
};

struct AssumptionReport {
    bool connected = false;
    bool bipartite = false;
    /// 2-coloring (0/1 per node), meaningful only when bipartite.
    std::vector<std::int8_t> side;
};

/// Undirected, positively weighted simple graph with 0-based contiguous
/// node ids. Immutable after construction; safe to share across threads.
class WeightedGraph {
public:
    /// Validates: n >= 2, no self-loops, weights > 0, no duplicate edges.
    /// Edges are stored canonically (u < v, sorted).
    static WeightedGraph from_edges(int n, std::vector<Edge> edges);

    int node_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// (neighbor, weight) pairs of node i, sorted by neighbor id.
    const std::vector<std::pair<int, double>>& neighbors(int i) const {
        check_node(i);
        return adj_[i];
    }

    double weighted_degree(int i) const {
        check_node(i);
        return degree_[i];
    }
    const std::vector<double>& degrees() const { return degree_; }

    /// w_ij / d_i; throws std::domain_error when i and j are not adjacent.
    double transition_probability(int i, int j) const;

    GraphStats compute_stats() const;
    AssumptionReport check_assumptions() const;

private:
    WeightedGraph() = default;
    void check_node(int i) const {
        if (i < 0 || i >= n_)
            throw std::domain_error("node id " + std::to_string(i) + " out of range [0, " +
                                    std::to_string(n_) + ")");
    }

    int n_ = 0;
    std::vector<Edge> edges_;  // canonical: u < v, sorted
    std::vector<std::vector<std::pair<int, double>>> adj_;
    std::vector<double> degree_;
};

/// Parses lines of the form "i j [w]" (w defaults to 1.0); '#' starts a comment.
/// Node count is max id + 1.
WeightedGraph load_edge_list(std::istream& in);
WeightedGraph load_edge_list(const std::string& text);

/// Writes canonical edge order; load(save(g)) reproduces g exactly.
void save_edge_list(const WeightedGraph& g, std::ostream& out);
std::string save_edge_list(const WeightedGraph& g);

}  // namespace rwmeet
