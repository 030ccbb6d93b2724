#pragma once

#include <Eigen/Dense>

namespace rwmeet::kernels {

/// Reduction over all eigenpair couples (k, k') != (1, 1) of
///   G(k,k')^2 / (1 - lam_k lam_k').
/// Also counts near-singular couples (1 - lam_k lam_k' < 1e-12).
///
/// The parallel variants accumulate one row per k serially and sum the row
/// results in a fixed order, so the value does not depend on thread count.
struct PairSumResult {
    double value = 0.0;
    long near_singular = 0;
};

PairSumResult pair_self_sum_serial(const Eigen::VectorXd& lam, const Eigen::MatrixXd& G);
PairSumResult pair_self_sum_omp(const Eigen::VectorXd& lam, const Eigen::MatrixXd& G);

/// sum over (k, k') != (1, 1) of G(k,k') va(k) vb(k') / (1 - lam_k lam_k').
PairSumResult pair_cross_sum_serial(const Eigen::VectorXd& lam, const Eigen::MatrixXd& G,
                                    const Eigen::VectorXd& va, const Eigen::VectorXd& vb);
PairSumResult pair_cross_sum_omp(const Eigen::VectorXd& lam, const Eigen::MatrixXd& G,
                                 const Eigen::VectorXd& va, const Eigen::VectorXd& vb);

/// sum over (k, k') != (1, 1) of u(k) u(k') (v(k) v(k') - wa(k) wb(k')) / (1 - lam_k lam_k').
/// This is the (k, k') part of the meeting-at-node formula.
PairSumResult node_pair_sum_serial(const Eigen::VectorXd& lam, const Eigen::VectorXd& u,
                                   const Eigen::VectorXd& v, const Eigen::VectorXd& wa,
                                   const Eigen::VectorXd& wb);
PairSumResult node_pair_sum_omp(const Eigen::VectorXd& lam, const Eigen::VectorXd& u,
                                const Eigen::VectorXd& v, const Eigen::VectorXd& wa,
                                const Eigen::VectorXd& wb);

}  // namespace rwmeet::kernels
