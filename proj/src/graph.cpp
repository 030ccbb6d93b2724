#include "rwmeet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>

namespace rwmeet {

namespace {

std::string fmt_double(double x) {
    char buf[40];
    // %.17g round-trips doubles; trim to the shortest representation that does.
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, x);
        if (std::strtod(buf, nullptr) == x) break;
    }
    return buf;
}

}  // namespace

std::string GraphStats::csv_row() const {
    std::ostringstream os;
    char buf[40];
    os << n;
    for (double v : {s1, s2, d_avg, d_std, d_min, w_max}) {
        std::snprintf(buf, sizeof buf, "%.9g", v);
        os << ',' << buf;
    }
    return os.str();
}

WeightedGraph WeightedGraph::from_edges(int n, std::vector<Edge> edges) {
    if (n < 2) throw std::domain_error("graph needs at least 2 nodes");
    for (auto& e : edges) {
        if (e.u == e.v)
            throw std::domain_error("self-loop at node " + std::to_string(e.u));
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw std::domain_error("edge endpoint out of range");
        if (!(e.w > 0.0))
            throw std::domain_error("non-positive edge weight");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v)
            throw std::domain_error("duplicate edge (" + std::to_string(edges[i].u) + ", " +
                                    std::to_string(edges[i].v) + ")");

    WeightedGraph g;
    g.n_ = n;
    g.adj_.resize(n);
    g.degree_.assign(n, 0.0);
    for (const auto& e : edges) {
        g.adj_[e.u].emplace_back(e.v, e.w);
        g.adj_[e.v].emplace_back(e.u, e.w);
        g.degree_[e.u] += e.w;
        g.degree_[e.v] += e.w;
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    g.edges_ = std::move(edges);
    return g;
}

double WeightedGraph::transition_probability(int i, int j) const {
    check_node(i);
    check_node(j);
    const auto& nb = adj_[i];
    auto it = std::lower_bound(nb.begin(), nb.end(), j,
                               [](const std::pair<int, double>& p, int v) { return p.first < v; });
    if (it == nb.end() || it->first != j)
        throw std::domain_error("nodes " + std::to_string(i) + " and " + std::to_string(j) +
                                " are not adjacent");
    return it->second / degree_[i];
}

GraphStats WeightedGraph::compute_stats() const {
    GraphStats st;
    st.n = n_;
    st.d_min = degree_.empty() ? 0.0 : degree_[0];
    for (double d : degree_) {
        st.s1 += d;
        st.s2 += d * d;
        st.d_min = std::min(st.d_min, d);
    }
    for (const auto& e : edges_) st.w_max = std::max(st.w_max, e.w);
    st.d_avg = st.s1 / n_;
    st.d_std = std::sqrt(std::max(0.0, st.s2 / n_ - st.d_avg * st.d_avg));
    return st;
}

AssumptionReport WeightedGraph::check_assumptions() const {
    AssumptionReport rep;
    rep.side.assign(n_, -1);
    rep.bipartite = true;
    int components = 0;
    for (int start = 0; start < n_; ++start) {
        if (rep.side[start] != -1) continue;
        ++components;
        rep.side[start] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (const auto& [v, w] : adj_[u]) {
                (void)w;
                if (rep.side[v] == -1) {
                    rep.side[v] = static_cast<std::int8_t>(1 - rep.side[u]);
                    queue.push_back(v);
                } else if (rep.side[v] == rep.side[u]) {
                    rep.bipartite = false;
                }
            }
        }
    }
    rep.connected = (components == 1);
    if (!rep.bipartite) rep.side.clear();
    return rep;
}

WeightedGraph load_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    int max_id = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u)) {
            ls.clear();
            std::string tok;
            if (ls >> tok) throw ParseError(lineno, "expected node id, got '" + tok + "'");
            continue;  // blank / comment-only line
        }
        if (!(ls >> v)) throw ParseError(lineno, "expected two node ids");
        double w = 1.0;
        if (ls >> w) {
            std::string rest;
            if (ls >> rest) throw ParseError(lineno, "trailing tokens after weight");
        } else if (!ls.eof()) {
            throw ParseError(lineno, "malformed weight");
        }
        if (u < 0 || v < 0) throw ParseError(lineno, "negative node id");
        if (u == v) throw ParseError(lineno, "self-loop");
        if (!(w > 0.0)) throw ParseError(lineno, "non-positive weight");
        if (u > std::numeric_limits<int>::max() || v > std::numeric_limits<int>::max())
            throw ParseError(lineno, "node id too large");
        edges.push_back({static_cast<int>(u), static_cast<int>(v), w});
        max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
    }
    if (edges.empty()) throw ParseError(lineno, "no edges");
    try {
        return WeightedGraph::from_edges(max_id + 1, std::move(edges));
    } catch (const std::domain_error& e) {
        throw ParseError(lineno, e.what());
    }
}

WeightedGraph load_edge_list(const std::string& text) {
    std::istringstream in(text);
    return load_edge_list(in);
}

void save_edge_list(const WeightedGraph& g, std::ostream& out) {
    for (const auto& e : g.edges())
        out << e.u << ' ' << e.v << ' ' << fmt_double(e.w) << '\n';
}

std::string save_edge_list(const WeightedGraph& g) {
    std::ostringstream os;
    save_edge_list(g, os);
    return os.str();
}

}  // namespace rwmeet
