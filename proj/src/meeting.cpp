#include "rwmeet/meeting.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "rwmeet/kernels.hpp"

namespace rwmeet {

std::string MeetingAnalysis::csv_row() const {
    std::ostringstream os;
    char buf[40];
    os << a << ',' << b;
    for (double v : {mu_ab, mu_ab_decomposed, principal, error_bound_rhs, lambda2}) {
        std::snprintf(buf, sizeof buf, "%.9g", v);
        os << ',' << buf;
    }
    return os.str();
}

MeetingEvaluator::MeetingEvaluator(const SpectralDecomposition& dec, const GraphStats& stats,
                                   bool allow_bipartite)
    : dec_(dec), stats_(stats) {
    if (dec_.bipartite && !allow_bipartite)
        throw std::domain_error(
            "meeting-time formulas require a non-bipartite graph (walkers on opposite "
            "sides of a bipartition never meet)");
    const int n = dec_.size();
    const auto& Q = dec_.eigenvectors;
    const auto& d = dec_.degrees;
    const auto& lam = dec_.eigenvalues;

    Eigen::VectorXd d32 = d.array().pow(1.5);
    h_ = Q.transpose() * d32;
    G_ = Q.transpose() * d.asDiagonal() * Q;

    auto ps = kernels::pair_self_sum_omp(lam, G_);
    pair_base_ = ps.value;
    pair_base_singular_ = ps.near_singular;

    double hb = 0.0;
    for (int k = 1; k < n; ++k) hb += h_(k) * h_(k) / (1.0 - lam(k));
    hit_base_ = 2.0 * stats_.s1 / (stats_.s2 * stats_.s2) * hb;
}

void MeetingEvaluator::check_pair(int a, int b) const {
    const int n = dec_.size();
    if (a < 0 || a >= n || b < 0 || b >= n) throw std::domain_error("node id out of range");
    if (a == b)
        throw std::domain_error(
            "first meeting time requires distinct start nodes (re-encountering time is a "
            "different quantity)");
}

double MeetingEvaluator::mu(int a, int b, EvalDiagnostics* diag) const {
    check_pair(a, b);
    const int n = dec_.size();
    const auto& Q = dec_.eigenvectors;
    const auto& lam = dec_.eigenvalues;
    const double s1 = stats_.s1, s2 = stats_.s2;
    const double sdab = std::sqrt(dec_.degrees(a) * dec_.degrees(b));

    double single = 0.0;
    for (int k = 1; k < n; ++k)
        single += h_(k) *
                  (Q(a, k) / std::sqrt(dec_.degrees(a)) + Q(b, k) / std::sqrt(dec_.degrees(b))) /
                  (1.0 - lam(k));

    auto cross = kernels::pair_cross_sum_omp(lam, G_, Q.row(a).transpose(), Q.row(b).transpose());
    if (diag) diag->near_singular_terms += pair_base_singular_ + cross.near_singular;

    return hit_base_ - s1 / s2 * single + s1 * s1 / (s2 * s2) * pair_base_ -
           s1 * s1 / s2 * cross.value / sdab;
}

double MeetingEvaluator::mu_at_node(int a, int b, int c, EvalDiagnostics* diag) const {
    const int n = dec_.size();
    if (a < 0 || a >= n || b < 0 || b >= n || c < 0 || c >= n)
        throw std::domain_error("node id out of range");
    const auto& Q = dec_.eigenvectors;
    const auto& lam = dec_.eigenvalues;
    const double dc = dec_.degrees(c);
    const double sdab = std::sqrt(dec_.degrees(a) * dec_.degrees(b));

    // u(k) u(k') = q_k(c) q_k'(c) / d_c; wa(k) wb(k') = q_k(a) q_k'(b) / sqrt(d_a d_b)
    Eigen::VectorXd u = Q.row(c).transpose() / std::sqrt(dc);
    Eigen::VectorXd wa = Q.row(a).transpose() / std::sqrt(sdab);
    Eigen::VectorXd wb = Q.row(b).transpose() / std::sqrt(sdab);
    auto res = kernels::node_pair_sum_omp(lam, u, u, wa, wb);
    if (diag) diag->near_singular_terms += res.near_singular;

    double hit_a = hitting_time(dec_, a, c);
    double hit_b = hitting_time(dec_, b, c);
    return hit_a + hit_b + stats_.s1 * stats_.s1 * res.value;
}

double MeetingEvaluator::mu_decomposed(int a, int b, EvalDiagnostics* diag) const {
    check_pair(a, b);
    const int n = dec_.size();
    const auto& d = dec_.degrees;
    const double s2 = stats_.s2;

    double term1 = 0.0;
    for (int c = 0; c < n; ++c) term1 += d(c) * d(c) * mu_at_node(a, b, c, diag);

    // sum_{c'} d_{c'}^2 mu_{c',c':c} with the c' sum pulled inside each factor
    const auto& Q = dec_.eigenvectors;
    const auto& lam = dec_.eigenvalues;
    const double s1 = stats_.s1;
    double term2 = 0.0;
    for (int c = 0; c < n; ++c) {
        double dc = d(c);
        double hit_part = 0.0;
        for (int k = 1; k < n; ++k)
            hit_part += (s2 * Q(c, k) * Q(c, k) / dc - h_(k) * Q(c, k) / std::sqrt(dc)) /
                        (1.0 - lam(k));
        double pair_part = 0.0;
        long sing = 0;
        for (int k = 0; k < n; ++k)
            for (int kp = 0; kp < n; ++kp) {
                if (k == 0 && kp == 0) continue;
                double denom = 1.0 - lam(k) * lam(kp);
                if (denom < 1e-12) ++sing;
                pair_part += Q(c, k) * Q(c, kp) / (denom * dc) *
                             (Q(c, k) * Q(c, kp) * s2 / dc - G_(k, kp));
            }
        if (diag) diag->near_singular_terms += sing;
        term2 += d(c) * d(c) * (2.0 * s1 * hit_part + s1 * s1 * pair_part);
    }
    return term1 / s2 - term2 / (s2 * s2);
}

MeetingAnalysis MeetingEvaluator::analyze(int a, int b) const {
    MeetingAnalysis res;
    res.a = a;
    res.b = b;
    res.mu_ab = mu(a, b);
    res.mu_ab_decomposed = mu_decomposed(a, b);
    res.principal = principal_component(stats_);
    res.lambda2 = dec_.lambda2();
    res.error_bound_rhs = meeting_error_bound(stats_, res.lambda2);
    return res;
}

double first_meeting_time_naive(const SpectralDecomposition& dec, const GraphStats& stats,
                                int a, int b) {
    const int n = dec.size();
    const auto& Q = dec.eigenvectors;
    const auto& lam = dec.eigenvalues;
    const auto& d = dec.degrees;
    const double s1 = stats.s1, s2 = stats.s2;
    double total = 0.0;
    for (int c = 0; c < n; ++c)
        for (int cp = 0; cp < n; ++cp) {
            double inner = 0.0;
            for (int k = 1; k < n; ++k)
                inner += s1 / (1.0 - lam(k)) *
                         (2.0 * Q(c, k) * Q(cp, k) / std::sqrt(d(c) * d(cp)) -
                          Q(c, k) / std::sqrt(d(c)) *
                              (Q(a, k) / std::sqrt(d(a)) + Q(b, k) / std::sqrt(d(b))));
            for (int k = 0; k < n; ++k)
                for (int kp = 0; kp < n; ++kp) {
                    if (k == 0 && kp == 0) continue;
                    inner += s1 * s1 * Q(c, k) * Q(c, kp) /
                             ((1.0 - lam(k) * lam(kp)) * d(c)) *
                             (Q(cp, k) * Q(cp, kp) / d(cp) -
                              Q(a, k) * Q(b, kp) / std::sqrt(d(a) * d(b)));
                }
            total += d(c) * d(c) * d(cp) * d(cp) * inner;
        }
    return total / (s2 * s2);
}

double first_meeting_time_spectral(const MeetingEvaluator& eval, int a, int b) {
    return eval.mu(a, b);
}

double first_meeting_time_at_node(const MeetingEvaluator& eval, int a, int b, int c) {
    if (a == b) throw std::domain_error("first meeting time requires distinct start nodes");
    return eval.mu_at_node(a, b, c);
}

double first_meeting_decomposed(const MeetingEvaluator& eval, int a, int b) {
    return eval.mu_decomposed(a, b);
}

double principal_component(const GraphStats& stats) {
    if (stats.n < 2) throw std::domain_error("principal component needs n >= 2");
    return stats.s1 * stats.s1 / stats.s2;
}

double meeting_error_bound(const GraphStats& stats, double lambda2) {
    if (lambda2 >= 1.0 - 1e-12) throw NumericError("lambda2 too close to 1 (near-disconnected)");
    double d2 = stats.d_min * stats.d_min;
    return 2.0 * stats.w_max * stats.w_max / (d2 * d2) * (1.0 / (1.0 - lambda2) + 1.0);
}

double joint_meeting_probability(const SpectralDecomposition& dec, int a, int b, long t) {
    const int n = dec.size();
    if (a < 0 || a >= n || b < 0 || b >= n) throw std::domain_error("node id out of range");
    if (t < 0) throw std::domain_error("t must be >= 0");
    double sum = 0.0;
    for (int c = 0; c < n; ++c)
        sum += occupancy_probability(dec, a, c, t) * occupancy_probability(dec, b, c, t);
    return sum;
}

double joint_gf(const SpectralDecomposition& dec, int a, int b, double z) {
    const int n = dec.size();
    if (a < 0 || a >= n || b < 0 || b >= n) throw std::domain_error("node id out of range");
    if (z >= 1.0) throw std::domain_error("joint_gf requires z < 1");
    const auto& Q = dec.eigenvectors;
    const auto& lam = dec.eigenvalues;
    const auto& d = dec.degrees;
    double sum = 0.0;
    for (int c = 0; c < n; ++c) {
        double inner = 0.0;
        for (int k = 0; k < n; ++k)
            for (int kp = 0; kp < n; ++kp)
                inner += Q(a, k) * Q(c, k) * Q(b, kp) * Q(c, kp) /
                         (1.0 - lam(k) * lam(kp) * z);
        sum += d(c) / std::sqrt(d(a) * d(b)) * inner;
    }
    return sum;
}

}  // namespace rwmeet
