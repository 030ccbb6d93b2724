#include "rwmeet/walk_sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace rwmeet {

std::string SimulationReport::csv_row() const {
    std::ostringstream os;
    char buf[40];
    os << a << ',' << b << ',' << runs << ',';
    if (mean_defined) {
        std::snprintf(buf, sizeof buf, "%.9g", mean_time);
        os << buf << ',';
        std::snprintf(buf, sizeof buf, "%.9g", std_error);
        os << buf;
    } else {
        os << "nan,nan";
    }
    os << ',' << truncated_runs << ',' << seed;
    return os.str();
}

WalkSampler::WalkSampler(const WeightedGraph& g) {
    const int n = g.node_count();
    offsets_.assign(n + 1, 0);
    degree_.resize(n);
    for (int i = 0; i < n; ++i) {
        offsets_[i + 1] = offsets_[i] + g.neighbors(i).size();
        degree_[i] = g.weighted_degree(i);
        if (g.neighbors(i).empty())
            throw std::domain_error("node " + std::to_string(i) + " has no neighbors");
    }
    targets_.resize(offsets_[n]);
    cumweight_.resize(offsets_[n]);
    for (int i = 0; i < n; ++i) {
        double running = 0.0;
        std::size_t off = offsets_[i];
        for (const auto& [j, w] : g.neighbors(i)) {
            running += w;
            targets_[off] = j;
            cumweight_[off] = running;
            ++off;
        }
    }
}

int WalkSampler::step(int node, Rng& rng) const {
    double r = uniform01(rng) * degree_[node];
    auto first = cumweight_.begin() + static_cast<std::ptrdiff_t>(offsets_[node]);
    auto last = cumweight_.begin() + static_cast<std::ptrdiff_t>(offsets_[node + 1]);
    auto it = std::upper_bound(first, last, r);
    if (it == last) --it;  // r can tie the total weight through rounding
    return targets_[static_cast<std::size_t>(it - cumweight_.begin())];
}

std::optional<FirstMeetingSample> simulate_first_meeting(const WalkSampler& sampler, int a, int b,
                                                         Rng& rng, long t_max) {
    if (a == b) throw std::domain_error("start nodes must differ");
    if (t_max < 1) throw std::domain_error("t_max must be >= 1");
    int u = a, v = b;
    for (long t = 1; t <= t_max; ++t) {
        u = sampler.step(u, rng);
        v = sampler.step(v, rng);
        if (u == v) return FirstMeetingSample{t, u};
    }
    return std::nullopt;
}

std::optional<FirstMeetingSample> simulate_first_meeting(const WeightedGraph& g, int a, int b,
                                                         Rng& rng, long t_max) {
    WalkSampler sampler(g);
    return simulate_first_meeting(sampler, a, b, rng, t_max);
}

namespace {

SimulationReport run_monte_carlo(const WeightedGraph& g, int a, int b, long runs,
                                 std::uint64_t master_seed, long t_max, bool parallel) {
    if (runs < 1) throw std::domain_error("runs must be >= 1");
    WalkSampler sampler(g);
    const int n = g.node_count();

    // integer accumulators: order-insensitive, so thread count cannot change
    // the report
    unsigned long long time_sum = 0;
    unsigned __int128 time_sq_sum = 0;
    long truncated = 0;
    std::vector<long> freq(n, 0);

#pragma omp parallel if (parallel)
    {
        unsigned long long l_sum = 0;
        unsigned __int128 l_sq = 0;
        long l_trunc = 0;
        std::vector<long> l_freq(n, 0);
#pragma omp for schedule(static) nowait
        for (long r = 0; r < runs; ++r) {
            Rng rng(derive_seed(master_seed, static_cast<std::uint64_t>(r)));
            auto sample = simulate_first_meeting(sampler, a, b, rng, t_max);
            if (sample) {
                l_sum += static_cast<unsigned long long>(sample->time);
                l_sq += static_cast<unsigned __int128>(sample->time) *
                        static_cast<unsigned __int128>(sample->time);
                ++l_freq[sample->node];
            } else {
                ++l_trunc;
            }
        }
#pragma omp critical
        {
            time_sum += l_sum;
            time_sq_sum += l_sq;
            truncated += l_trunc;
            for (int i = 0; i < n; ++i) freq[i] += l_freq[i];
        }
    }

    SimulationReport rep;
    rep.a = a;
    rep.b = b;
    rep.runs = runs;
    rep.seed = master_seed;
    rep.truncated_runs = truncated;
    rep.node_frequency = std::move(freq);
    long completed = runs - truncated;
    if (completed > 0) {
        rep.mean_defined = true;
        double mean = static_cast<double>(time_sum) / static_cast<double>(completed);
        double mean_sq = static_cast<double>(time_sq_sum) / static_cast<double>(completed);
        rep.mean_time = mean;
        rep.std_dev = std::sqrt(std::max(0.0, mean_sq - mean * mean));
        rep.std_error = rep.std_dev / std::sqrt(static_cast<double>(runs));
    }
    return rep;
}

}  // namespace

SimulationReport monte_carlo_meeting(const WeightedGraph& g, int a, int b, long runs,
                                     std::uint64_t master_seed, long t_max) {
    return run_monte_carlo(g, a, b, runs, master_seed, t_max, true);
}

SimulationReport monte_carlo_meeting_serial(const WeightedGraph& g, int a, int b, long runs,
                                            std::uint64_t master_seed, long t_max) {
    return run_monte_carlo(g, a, b, runs, master_seed, t_max, false);
}

double relative_error(double mu_analytic, const SimulationReport& report) {
    if (!report.mean_defined) throw std::domain_error("simulation mean undefined (all runs truncated)");
    return std::abs(mu_analytic - report.mean_time) / report.mean_time;
}

double relative_error_principal(const GraphStats& stats, const SimulationReport& report) {
    return relative_error(stats.s1 * stats.s1 / stats.s2, report);
}

FrequencyFit meeting_frequency_fit(const SimulationReport& report, const WeightedGraph& g) {
    long meetings = 0;
    for (long c : report.node_frequency) meetings += c;
    if (meetings < 1000)
        throw std::domain_error("frequency fit needs >= 1000 recorded meetings, have " +
                                std::to_string(meetings));

    std::vector<double> xs, ys;
    std::vector<double> distinct;
    for (int i = 0; i < g.node_count(); ++i) {
        if (report.node_frequency[i] == 0) continue;
        double d = g.weighted_degree(i);
        xs.push_back(std::log(d));
        ys.push_back(std::log(static_cast<double>(report.node_frequency[i])));
        distinct.push_back(d);
    }
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 3)
        throw std::domain_error("frequency fit needs >= 3 distinct degree values");

    const double m = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        syy += ys[i] * ys[i];
        sxy += xs[i] * ys[i];
    }
    double cov = sxy - sx * sy / m;
    double varx = sxx - sx * sx / m;
    double vary = syy - sy * sy / m;
    FrequencyFit fit;
    fit.exponent = cov / varx;
    fit.correlation = cov / std::sqrt(varx * vary);
    return fit;
}

}  // namespace rwmeet
