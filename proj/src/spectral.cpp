#include "rwmeet/spectral.hpp"

#include <cmath>

namespace rwmeet {

namespace {

void canonicalize_sign(Eigen::MatrixXd& Q) {
    for (int k = 0; k < Q.cols(); ++k) {
        int imax = 0;
        double best = 0.0;
        for (int i = 0; i < Q.rows(); ++i) {
            double m = std::abs(Q(i, k));
            if (m > best) {
                best = m;
                imax = i;
            }
        }
        if (Q(imax, k) < 0.0) Q.col(k) = -Q.col(k);
    }
}

bool lex_less(const Eigen::MatrixXd& Q, int a, int b) {
    for (int i = 0; i < Q.rows(); ++i) {
        if (Q(i, a) < Q(i, b)) return true;
        if (Q(i, a) > Q(i, b)) return false;
    }
    return false;
}

void verify(const SpectralDecomposition& dec, const Eigen::MatrixXd& W) {
    const int n = dec.size();
    if (std::abs(dec.eigenvalues(0) - 1.0) > 1e-9)
        throw NumericError("largest eigenvalue deviates from 1");
    const auto& Q = dec.eigenvectors;
    if (n <= 500) {
        double resid = (W * Q - Q * dec.eigenvalues.asDiagonal()).norm() / W.norm();
        if (resid > 1e-8) throw NumericError("eigendecomposition residual too large");
        double ortho = (Q.transpose() * Q - Eigen::MatrixXd::Identity(n, n)).norm();
        if (ortho > 1e-9 * n) throw NumericError("eigenvectors not orthonormal");
    } else {
        // sampled residual check; full matrix products get expensive here
        for (int k : {0, 1, n / 2, n - 1}) {
            double resid = (W * Q.col(k) - dec.eigenvalues(k) * Q.col(k)).norm();
            if (resid > 1e-8 * std::sqrt(static_cast<double>(n)))
                throw NumericError("eigenpair residual too large");
        }
    }
}

}  // namespace

SpectralDecomposition decompose(const WeightedGraph& g, int n_cap) {
    const int n = g.node_count();
    if (n > n_cap)
        throw std::domain_error("graph exceeds dense eigensolver cap (" + std::to_string(n) +
                                " > " + std::to_string(n_cap) + ")");
    auto rep = g.check_assumptions();
    if (!rep.connected) throw std::domain_error("decompose requires a connected graph");

    Eigen::VectorXd d(n);
    for (int i = 0; i < n; ++i) d(i) = g.weighted_degree(i);
    Eigen::VectorXd dinv_sqrt = d.cwiseSqrt().cwiseInverse();

    Eigen::MatrixXd W = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : g.edges()) {
        double w = e.w * dinv_sqrt(e.u) * dinv_sqrt(e.v);
        W(e.u, e.v) = w;
        W(e.v, e.u) = w;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(W);
    if (solver.info() != Eigen::Success) throw NumericError("eigensolver failed to converge");

    SpectralDecomposition dec;
    dec.degrees = d;
    dec.s1 = d.sum();
    dec.bipartite = rep.bipartite;
    dec.eigenvalues = solver.eigenvalues().reverse();
    dec.eigenvectors = Eigen::MatrixXd(n, n);
    for (int k = 0; k < n; ++k) dec.eigenvectors.col(k) = solver.eigenvectors().col(n - 1 - k);
    canonicalize_sign(dec.eigenvectors);

    // Stable order within exactly tied eigenvalues (log reproducibility only).
    for (int k = 0; k + 1 < n; ++k) {
        if (dec.eigenvalues(k) == dec.eigenvalues(k + 1) &&
            lex_less(dec.eigenvectors, k + 1, k)) {
            dec.eigenvectors.col(k).swap(dec.eigenvectors.col(k + 1));
        }
    }

    verify(dec, W);
    return dec;
}

double occupancy_probability(const SpectralDecomposition& dec, int a, int i, long t) {
    const int n = dec.size();
    if (a < 0 || a >= n || i < 0 || i >= n) throw std::domain_error("node id out of range");
    if (t < 0) throw std::domain_error("t must be >= 0");
    const auto& Q = dec.eigenvectors;
    double sum = 0.0;
    for (int k = 0; k < n; ++k)
        sum += Q(a, k) * Q(i, k) * std::pow(dec.eigenvalues(k), static_cast<double>(t));
    return std::sqrt(dec.degrees(i) / dec.degrees(a)) * sum;
}

std::vector<double> occupancy_evolution(const WeightedGraph& g, int a, long t) {
    const int n = g.node_count();
    if (a < 0 || a >= n) throw std::domain_error("node id out of range");
    if (t < 0) throw std::domain_error("t must be >= 0");
    std::vector<double> x(n, 0.0), next(n);
    x[a] = 1.0;
    for (long step = 0; step < t; ++step) {
        std::fill(next.begin(), next.end(), 0.0);
        for (int j = 0; j < n; ++j) {
            if (x[j] == 0.0) continue;
            double dj = g.weighted_degree(j);
            for (const auto& [i, w] : g.neighbors(j)) next[i] += x[j] * w / dj;
        }
        x.swap(next);
    }
    return x;
}

std::vector<double> stationary_distribution(const WeightedGraph& g) {
    const int n = g.node_count();
    std::vector<double> pi(n);
    double s1 = 0.0;
    for (int i = 0; i < n; ++i) s1 += g.weighted_degree(i);
    for (int i = 0; i < n; ++i) pi[i] = g.weighted_degree(i) / s1;
    return pi;
}

double hitting_time(const SpectralDecomposition& dec, int a, int i) {
    const int n = dec.size();
    if (a < 0 || a >= n || i < 0 || i >= n) throw std::domain_error("node id out of range");
    if (a == i) return 0.0;
    const auto& Q = dec.eigenvectors;
    const auto& lam = dec.eigenvalues;
    double di = dec.degrees(i), da = dec.degrees(a);
    double sum = 0.0;
    for (int k = 1; k < n; ++k)
        sum += 1.0 / (1.0 - lam(k)) *
               (Q(i, k) * Q(i, k) / di - Q(a, k) * Q(i, k) / std::sqrt(da * di));
    return dec.s1 * sum;
}

double hitting_time_bound(const GraphStats& stats, double lambda2) {
    if (lambda2 >= 1.0 - 1e-12) throw NumericError("lambda2 too close to 1 (near-disconnected)");
    return 2.0 * stats.w_max / (stats.d_min * stats.d_min) * (1.0 / (1.0 - lambda2) + 1.0);
}

double hitting_time_approx(const GraphStats& stats, const WeightedGraph& g, int i) {
    return stats.s1 / g.weighted_degree(i);
}

}  // namespace rwmeet
