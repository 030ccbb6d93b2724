#pragma once

#include <Eigen/Dense>
#include <string>

#include "rwmeet/graph.hpp"
#include "rwmeet/spectral.hpp"

namespace rwmeet {

/// Spectral meeting-time results for one (graph, a, b) triple.
struct MeetingAnalysis {
    int a = 0;
    int b = 0;
    double mu_ab = 0.0;             // direct spectral evaluation
    double mu_ab_decomposed = 0.0;  // node-wise decomposition route
    double principal = 0.0;         // s1^2 / s2
    double error_bound_rhs = 0.0;
    double lambda2 = 0.0;

    /// CSV row: a,b,mu_spectral,mu_decomposed,principal,error_bound,lambda2
    std::string csv_row() const;
};

/// Count of (k, k') terms with 1 - lambda_k lambda_k' below 1e-12; such terms
/// are computed as-is (only (1,1) is exactly singular and always excluded).
/// Nonzero counts indicate a (near-)bipartite graph.
struct EvalDiagnostics {
    long near_singular_terms = 0;
};

/// Precomputed per-eigenpair aggregates for the meeting-time formula.
///
/// After construction (O(n^3), dominated by G = Q^T diag(d) Q) each
/// mu(a, b) evaluation costs O(n^2). Immutable; concurrent calls are safe.
class MeetingEvaluator {
public:
    /// Throws std::domain_error for bipartite input unless allow_bipartite;
    /// forced bipartite evaluation yields near-singular terms and is only
    /// meant for demonstrating where the formula breaks down.
    MeetingEvaluator(const SpectralDecomposition& dec, const GraphStats& stats,
                     bool allow_bipartite = false);

    /// Expected first meeting time of walkers starting at a != b.
    double mu(int a, int b, EvalDiagnostics* diag = nullptr) const;

    /// mu_{a,b:c}: expected time until the walkers first meet at node c.
    /// a == b is permitted (used by the decomposition route internally).
    double mu_at_node(int a, int b, int c, EvalDiagnostics* diag = nullptr) const;

    /// Node-wise decomposition route to the same quantity as mu();
    /// O(n^3) per pair. The two routes agree to ~1e-8 relative.
    double mu_decomposed(int a, int b, EvalDiagnostics* diag = nullptr) const;

    MeetingAnalysis analyze(int a, int b) const;

    const SpectralDecomposition& decomposition() const { return dec_; }
    const GraphStats& stats() const { return stats_; }

private:
    void check_pair(int a, int b) const;

    SpectralDecomposition dec_;
    GraphStats stats_;
    Eigen::VectorXd h_;        // h_k = sum_c d_c^{3/2} q_k(c)
    Eigen::MatrixXd G_;        // G(k,k') = sum_c d_c q_k(c) q_k'(c)
    double pair_base_ = 0.0;   // sum_{(k,k') != (1,1)} G^2 / (1 - lam_k lam_k')
    double hit_base_ = 0.0;    // 2 s1 / s2^2 * sum_{k>=2} h_k^2 / (1 - lam_k)
    long pair_base_singular_ = 0;
};

/// Quadruple-loop reference evaluator, intended for n <= 12 cross-checks.
double first_meeting_time_naive(const SpectralDecomposition& dec, const GraphStats& stats,
                                int a, int b);

double first_meeting_time_spectral(const MeetingEvaluator& eval, int a, int b);
double first_meeting_time_at_node(const MeetingEvaluator& eval, int a, int b, int c);
double first_meeting_decomposed(const MeetingEvaluator& eval, int a, int b);

/// s1^2 / s2 == n / (1 + d_std^2 / d_avg^2)
double principal_component(const GraphStats& stats);

/// (2 w_max^2 / d_min^4) (1/(1 - lambda2) + 1): bound on |mu_{a,b}/s1^2 - 1/s2|.
double meeting_error_bound(const GraphStats& stats, double lambda2);

/// sum_c x_{a:c}(t) x_{b:c}(t): probability both walkers share a node at time t.
double joint_meeting_probability(const SpectralDecomposition& dec, int a, int b, long t);

/// Closed-form generating function of the joint meeting probability at z < 1.
double joint_gf(const SpectralDecomposition& dec, int a, int b, double z);

}  // namespace rwmeet
