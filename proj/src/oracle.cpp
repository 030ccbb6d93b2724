#include "rwmeet/oracle.hpp"

#include <Eigen/Dense>
#include <deque>
#include <stdexcept>
#include <string>

namespace rwmeet::oracle {

namespace {

void check_cap(int n, int n_cap, const char* what) {
    if (n > n_cap)
        throw std::domain_error(std::string(what) + ": graph too large for the oracle (" +
                                std::to_string(n) + " > " + std::to_string(n_cap) + ")");
}

// Product chain over unordered pairs {u, v}, u < v. The two-walker dynamics
// are symmetric under swapping, so collapsing ordered pairs halves the solve.
struct PairChain {
    int n = 0;
    std::vector<int> index;              // n*n, ordered (u,v) -> state id or -1
    std::vector<std::pair<int, int>> states;
    Eigen::MatrixXd transient;           // state -> state transition probs
    Eigen::MatrixXd absorb;              // state -> absorbing node c probs

    int id(int u, int v) const { return index[static_cast<std::size_t>(u) * n + v]; }
};

PairChain build_pair_chain(const WeightedGraph& g) {
    PairChain ch;
    const int n = ch.n = g.node_count();
    ch.index.assign(static_cast<std::size_t>(n) * n, -1);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            ch.index[static_cast<std::size_t>(u) * n + v] = static_cast<int>(ch.states.size());
            ch.index[static_cast<std::size_t>(v) * n + u] = static_cast<int>(ch.states.size());
            ch.states.emplace_back(u, v);
        }
    const int m = static_cast<int>(ch.states.size());
    ch.transient = Eigen::MatrixXd::Zero(m, m);
    ch.absorb = Eigen::MatrixXd::Zero(m, n);
    for (int s = 0; s < m; ++s) {
        auto [u, v] = ch.states[s];
        double du = g.weighted_degree(u), dv = g.weighted_degree(v);
        for (const auto& [up, wu] : g.neighbors(u))
            for (const auto& [vp, wv] : g.neighbors(v)) {
                double p = (wu / du) * (wv / dv);
                if (up == vp)
                    ch.absorb(s, up) += p;
                else
                    ch.transient(s, ch.id(up, vp)) += p;
            }
    }
    return ch;
}

// States from which some absorbing (diagonal) state is reachable.
std::vector<char> can_absorb(const PairChain& ch) {
    const int m = static_cast<int>(ch.states.size());
    // reverse reachability from states with direct absorption probability
    std::vector<std::vector<int>> preds(m);
    for (int p = 0; p < m; ++p)
        for (int s = 0; s < m; ++s)
            if (ch.transient(p, s) > 0.0) preds[s].push_back(p);
    std::vector<char> reach(m, 0);
    std::deque<int> queue;
    for (int s = 0; s < m; ++s)
        if (ch.absorb.row(s).sum() > 0.0) {
            reach[s] = 1;
            queue.push_back(s);
        }
    while (!queue.empty()) {
        int s = queue.front();
        queue.pop_front();
        for (int p : preds[s])
            if (!reach[p]) {
                reach[p] = 1;
                queue.push_back(p);
            }
    }
    return reach;
}

}  // namespace

std::optional<double> exact_hitting_time(const WeightedGraph& g, int a, int i, int n_cap) {
    const int n = g.node_count();
    check_cap(n, n_cap, "exact_hitting_time");
    if (a < 0 || a >= n || i < 0 || i >= n) throw std::domain_error("node id out of range");
    if (a == i) return 0.0;

    // reachability of i from a
    {
        std::vector<char> seen(n, 0);
        std::deque<int> queue{a};
        seen[a] = 1;
        bool found = false;
        while (!queue.empty() && !found) {
            int u = queue.front();
            queue.pop_front();
            for (const auto& [v, w] : g.neighbors(u)) {
                (void)w;
                if (v == i) found = true;
                if (!seen[v]) {
                    seen[v] = 1;
                    queue.push_back(v);
                }
            }
        }
        if (!found) return std::nullopt;
    }

    // transient states: all nodes except i
    std::vector<int> idx(n, -1);
    int m = 0;
    for (int u = 0; u < n; ++u)
        if (u != i) idx[u] = m++;
    Eigen::MatrixXd M = Eigen::MatrixXd::Identity(m, m);
    for (int u = 0; u < n; ++u) {
        if (u == i) continue;
        double du = g.weighted_degree(u);
        for (const auto& [v, w] : g.neighbors(u))
            if (v != i) M(idx[u], idx[v]) -= w / du;
    }
    Eigen::VectorXd tau = M.partialPivLu().solve(Eigen::VectorXd::Ones(m));
    return tau(idx[a]);
}

std::optional<double> exact_first_meeting_time(const WeightedGraph& g, int a, int b, int n_cap) {
    const int n = g.node_count();
    check_cap(n, n_cap, "exact_first_meeting_time");
    if (a < 0 || a >= n || b < 0 || b >= n) throw std::domain_error("node id out of range");
    if (a == b) return 0.0;  // coincident starts meet immediately

    PairChain ch = build_pair_chain(g);
    auto reach = can_absorb(ch);
    int start = ch.id(a, b);
    if (!reach[start]) return std::nullopt;

    // restrict to states that can absorb; others form parity-locked classes
    const int m = static_cast<int>(ch.states.size());
    std::vector<int> sub(m, -1);
    int msub = 0;
    for (int s = 0; s < m; ++s)
        if (reach[s]) sub[s] = msub++;
    Eigen::MatrixXd M = Eigen::MatrixXd::Identity(msub, msub);
    for (int s = 0; s < m; ++s) {
        if (!reach[s]) continue;
        for (int t = 0; t < m; ++t)
            if (reach[t] && ch.transient(s, t) != 0.0) M(sub[s], sub[t]) -= ch.transient(s, t);
    }
    Eigen::VectorXd tau = M.partialPivLu().solve(Eigen::VectorXd::Ones(msub));
    return tau(sub[start]);
}

std::optional<std::vector<double>> exact_meeting_node_distribution(const WeightedGraph& g, int a,
                                                                   int b, int n_cap) {
    const int n = g.node_count();
    check_cap(n, n_cap, "exact_meeting_node_distribution");
    if (a < 0 || a >= n || b < 0 || b >= n) throw std::domain_error("node id out of range");
    if (a == b) {  // meeting happens at the shared start node, at time 0
        std::vector<double> dist(n, 0.0);
        dist[a] = 1.0;
        return dist;
    }

    PairChain ch = build_pair_chain(g);
    auto reach = can_absorb(ch);
    int start = ch.id(a, b);
    if (!reach[start]) return std::nullopt;

    const int m = static_cast<int>(ch.states.size());
    std::vector<int> sub(m, -1);
    int msub = 0;
    for (int s = 0; s < m; ++s)
        if (reach[s]) sub[s] = msub++;
    Eigen::MatrixXd M = Eigen::MatrixXd::Identity(msub, msub);
    Eigen::MatrixXd R = Eigen::MatrixXd::Zero(msub, n);
    for (int s = 0; s < m; ++s) {
        if (!reach[s]) continue;
        R.row(sub[s]) = ch.absorb.row(s);
        for (int t = 0; t < m; ++t)
            if (reach[t] && ch.transient(s, t) != 0.0) M(sub[s], sub[t]) -= ch.transient(s, t);
    }
    Eigen::MatrixXd B = M.partialPivLu().solve(R);
    std::vector<double> dist(n);
    for (int c = 0; c < n; ++c) dist[c] = B(sub[start], c);
    return dist;
}

}  // namespace rwmeet::oracle
