#include "rwmeet/generators.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "rwmeet/rng.hpp"

namespace rwmeet {

WeightedGraph generate_ba(int n, int m, std::uint64_t seed) {
    if (m < 1 || m >= n)
        throw std::domain_error("BA requires 1 <= m < n, got m=" + std::to_string(m) +
                                " n=" + std::to_string(n));
    Rng rng(seed);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m) * (m - 1) / 2 +
                  static_cast<std::size_t>(m) * (n - m));
    // Attachment sampling: every created link contributes both endpoints to
    // this list, so a uniform pick is degree-proportional.
    std::vector<int> endpoints;
    endpoints.reserve(2 * edges.capacity());

    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            edges.push_back({i, j, 1.0});
            endpoints.push_back(i);
            endpoints.push_back(j);
        }

    std::unordered_set<int> targets;
    for (int t = m; t < n; ++t) {
        targets.clear();
        const int want = m;
        while (static_cast<int>(targets.size()) < want) {
            int j;
            if (endpoints.empty()) {
                // m = 1 seed has no edges yet; the only choice is uniform.
                j = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(t)));
            } else {
                j = endpoints[uniform_below(rng, endpoints.size())];
            }
            targets.insert(j);  // resample on collision
        }
        // Deterministic edge order: sort the chosen targets.
        std::vector<int> chosen(targets.begin(), targets.end());
        std::sort(chosen.begin(), chosen.end());
        for (int j : chosen) {
            edges.push_back({t, j, 1.0});
            endpoints.push_back(t);
            endpoints.push_back(j);
        }
    }
    return WeightedGraph::from_edges(n, std::move(edges));
}

namespace {

WeightedGraph er_attempt(int n, double p, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (uniform01(rng) < p) edges.push_back({i, j, 1.0});
    if (edges.empty()) edges.push_back({0, 1, 1.0});  // from_edges needs an edge; disconnected anyway for n > 2
    return WeightedGraph::from_edges(n, std::move(edges));
}

}  // namespace

WeightedGraph generate_er(int n, double p, std::uint64_t seed, int max_retries) {
    if (!(p > 0.0) || p > 1.0) throw std::domain_error("ER requires 0 < p <= 1");
    if (n < 2) throw std::domain_error("ER requires n >= 2");
    int attempts = 0;
    for (int k = 0; k <= max_retries; ++k) {
        ++attempts;
        WeightedGraph g = er_attempt(n, p, k == 0 ? seed : derive_seed(seed, static_cast<std::uint64_t>(k)));
        if (g.check_assumptions().connected) return g;
    }
    throw GenerationError(attempts, "no connected ER graph after " + std::to_string(attempts) +
                                        " attempts (n=" + std::to_string(n) +
                                        ", p=" + std::to_string(p) + ")");
}

GeneratorParams params_for_target_degree(Model model, int n, double d_avg_target,
                                         std::uint64_t seed) {
    GeneratorParams params;
    params.model = model;
    params.n = n;
    params.seed = seed;
    if (model == Model::BA) {
        if (d_avg_target < 2.0)
            throw std::domain_error("BA target degree must be >= 2 (m >= 1)");
        params.m = static_cast<int>(std::floor(d_avg_target / 2.0));
        if (params.m >= n) params.m = n - 1;
    } else {
        params.p = d_avg_target / (n - 1);
        if (!(params.p > 0.0) || params.p > 1.0)
            throw std::domain_error("ER target degree out of range for given n");
    }
    return params;
}

WeightedGraph generate(const GeneratorParams& params) {
    if (params.model == Model::BA) return generate_ba(params.n, params.m, params.seed);
    return generate_er(params.n, params.p, params.seed, params.max_retries);
}

}  // namespace rwmeet
