#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rwmeet/graph.hpp"
#include "rwmeet/rng.hpp"

namespace rwmeet {

struct FirstMeetingSample {
    long time = 0;  // >= 1 for distinct start nodes
    int node = 0;   // where the meeting happened
};

struct SimulationReport {
    long runs = 0;
    double mean_time = 0.0;
    double std_dev = 0.0;
    double std_error = 0.0;
    std::vector<long> node_frequency;
    std::uint64_t seed = 0;
    long truncated_runs = 0;  // runs that hit t_max without meeting
    bool mean_defined = false;
    int a = 0;
    int b = 0;

    /// CSV row: a,b,runs,mean,std_err,truncated,seed
    std::string csv_row() const;
};

inline constexpr long kDefaultTMax = 10'000'000;

/// Per-node cumulative-weight tables for O(log deg) transition sampling.
/// Build once, share across runs and threads.
class WalkSampler {
public:
    explicit WalkSampler(const WeightedGraph& g);
    int step(int node, Rng& rng) const;
    int node_count() const { return static_cast<int>(offsets_.size()) - 1; }

private:
    std::vector<std::size_t> offsets_;
    std::vector<int> targets_;
    std::vector<double> cumweight_;  // per-node running sums
    std::vector<double> degree_;
};

/// Both walkers move synchronously; a meeting is co-location after both moved
/// (edge-crossing swaps do not count, and the a != b start never counts).
/// Empty optional means the walk was truncated at t_max.
std::optional<FirstMeetingSample> simulate_first_meeting(const WalkSampler& sampler, int a, int b,
                                                         Rng& rng, long t_max = kDefaultTMax);
std::optional<FirstMeetingSample> simulate_first_meeting(const WeightedGraph& g, int a, int b,
                                                         Rng& rng, long t_max = kDefaultTMax);

/// Runs independent samples with per-run streams derived from master_seed;
/// the report is identical regardless of thread count. Mean is over
/// non-truncated runs only.
SimulationReport monte_carlo_meeting(const WeightedGraph& g, int a, int b, long runs,
                                     std::uint64_t master_seed, long t_max = kDefaultTMax);

/// Serial reference implementation; produces byte-identical reports.
SimulationReport monte_carlo_meeting_serial(const WeightedGraph& g, int a, int b, long runs,
                                            std::uint64_t master_seed,
                                            long t_max = kDefaultTMax);

/// eps = |mu_analytic - mu_sim| / mu_sim
double relative_error(double mu_analytic, const SimulationReport& report);
/// eps' = |s1^2/s2 - mu_sim| / mu_sim
double relative_error_principal(const GraphStats& stats, const SimulationReport& report);

struct FrequencyFit {
    double correlation = 0.0;  // Pearson r of log(freq) vs log(degree)
    double exponent = 0.0;     // fitted slope; the d_c^2 assumption predicts 2
};

/// Log-log regression of per-node meeting counts on weighted degree.
/// Requires >= 1000 recorded meetings and >= 3 distinct degree values.
FrequencyFit meeting_frequency_fit(const SimulationReport& report, const WeightedGraph& g);

}  // namespace rwmeet
