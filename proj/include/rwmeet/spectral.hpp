#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "rwmeet/graph.hpp"

namespace rwmeet {

class NumericError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Full eigendecomposition of W = D^{-1/2} A D^{-1/2}.
///
/// Eigenvalues sorted descending, lambda(0) == 1; eigenvector columns are
/// sign-canonicalized (largest-magnitude entry positive). Immutable after
/// decompose(); all evaluators below are pure and thread-safe.
struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;   // descending
    Eigen::MatrixXd eigenvectors;  // column k pairs with eigenvalues(k)
    Eigen::VectorXd degrees;
    double s1 = 0.0;
    bool bipartite = false;  // flagged, not rejected; meeting formulas reject it

    int size() const { return static_cast<int>(eigenvalues.size()); }
    double lambda2() const { return eigenvalues(1); }
};

/// Default cap on dense decomposition size (n^2 doubles of storage).
inline constexpr int kDefaultSpectralCap = 5000;

/// Throws std::domain_error on disconnected input; bipartite input is
/// decomposed but flagged.
SpectralDecomposition decompose(const WeightedGraph& g, int n_cap = kDefaultSpectralCap);

/// x_{a:i}(t) = sqrt(d_i/d_a) * sum_k q_k(a) q_k(i) lambda_k^t
double occupancy_probability(const SpectralDecomposition& dec, int a, int i, long t);

/// Power iteration of x(t+1) = A D^{-1} x(t) from the indicator at a.
/// Independent of the eigendecomposition; cross-check for occupancy_probability.
std::vector<double> occupancy_evolution(const WeightedGraph& g, int a, long t);

/// Entry i is d_i / s1.
std::vector<double> stationary_distribution(const WeightedGraph& g);

/// Expected first hitting time mu_{a:i}; mu_{a:a} = 0 by convention.
double hitting_time(const SpectralDecomposition& dec, int a, int i);

/// (2 w_max / d_min^2) (1/(1 - lambda2) + 1): bound on |mu_{a:i}/s1 - 1/d_i|.
double hitting_time_bound(const GraphStats& stats, double lambda2);

/// s1 / d_i
double hitting_time_approx(const GraphStats& stats, const WeightedGraph& g, int i);

}  // namespace rwmeet
