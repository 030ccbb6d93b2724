#include "rwmeet/kernels.hpp"

#include <vector>

namespace rwmeet::kernels {

namespace {

constexpr double kSingularTol = 1e-12;

template <typename RowTerm>
PairSumResult rows_serial(int n, RowTerm row_term) {
    PairSumResult res;
    for (int k = 0; k < n; ++k) res.value += row_term(k, res.near_singular);
    return res;
}

template <typename RowTerm>
PairSumResult rows_omp(int n, RowTerm row_term) {
    std::vector<double> rows(n, 0.0);
    std::vector<long> sing(n, 0);
#pragma omp parallel for schedule(static)
    for (int k = 0; k < n; ++k) rows[k] = row_term(k, sing[k]);
    PairSumResult res;
    for (int k = 0; k < n; ++k) {
        res.value += rows[k];
        res.near_singular += sing[k];
    }
    return res;
}

}  // namespace

namespace {

struct SelfRow {
    const Eigen::VectorXd& lam;
    const Eigen::MatrixXd& G;
    double operator()(int k, long& sing) const {
        const int n = static_cast<int>(lam.size());
        double sum = 0.0;
        for (int kp = 0; kp < n; ++kp) {
            if (k == 0 && kp == 0) continue;
            double denom = 1.0 - lam(k) * lam(kp);
            if (denom < kSingularTol) ++sing;
            sum += G(k, kp) * G(k, kp) / denom;
        }
        return sum;
    }
};

struct CrossRow {
    const Eigen::VectorXd& lam;
    const Eigen::MatrixXd& G;
    const Eigen::VectorXd& va;
    const Eigen::VectorXd& vb;
    double operator()(int k, long& sing) const {
        const int n = static_cast<int>(lam.size());
        double sum = 0.0;
        for (int kp = 0; kp < n; ++kp) {
            if (k == 0 && kp == 0) continue;
            double denom = 1.0 - lam(k) * lam(kp);
            if (denom < kSingularTol) ++sing;
            sum += G(k, kp) * va(k) * vb(kp) / denom;
        }
        return sum;
    }
};

struct NodeRow {
    const Eigen::VectorXd& lam;
    const Eigen::VectorXd& u;
    const Eigen::VectorXd& v;
    const Eigen::VectorXd& wa;
    const Eigen::VectorXd& wb;
    double operator()(int k, long& sing) const {
        const int n = static_cast<int>(lam.size());
        double sum = 0.0;
        for (int kp = 0; kp < n; ++kp) {
            if (k == 0 && kp == 0) continue;
            double denom = 1.0 - lam(k) * lam(kp);
            if (denom < kSingularTol) ++sing;
            sum += u(k) * u(kp) * (v(k) * v(kp) - wa(k) * wb(kp)) / denom;
        }
        return sum;
    }
};

}  // namespace

PairSumResult pair_self_sum_serial(const Eigen::VectorXd& lam, const Eigen::MatrixXd& G) {
    return rows_serial(static_cast<int>(lam.size()), SelfRow{lam, G});
}
PairSumResult pair_self_sum_omp(const Eigen::VectorXd& lam, const Eigen::MatrixXd& G) {
    return rows_omp(static_cast<int>(lam.size()), SelfRow{lam, G});
}

PairSumResult pair_cross_sum_serial(const Eigen::VectorXd& lam, const Eigen::MatrixXd& G,
                                    const Eigen::VectorXd& va, const Eigen::VectorXd& vb) {
    return rows_serial(static_cast<int>(lam.size()), CrossRow{lam, G, va, vb});
}
PairSumResult pair_cross_sum_omp(const Eigen::VectorXd& lam, const Eigen::MatrixXd& G,
                                 const Eigen::VectorXd& va, const Eigen::VectorXd& vb) {
    return rows_omp(static_cast<int>(lam.size()), CrossRow{lam, G, va, vb});
}

PairSumResult node_pair_sum_serial(const Eigen::VectorXd& lam, const Eigen::VectorXd& u,
                                   const Eigen::VectorXd& v, const Eigen::VectorXd& wa,
                                   const Eigen::VectorXd& wb) {
    return rows_serial(static_cast<int>(lam.size()), NodeRow{lam, u, v, wa, wb});
}
PairSumResult node_pair_sum_omp(const Eigen::VectorXd& lam, const Eigen::VectorXd& u,
                                const Eigen::VectorXd& v, const Eigen::VectorXd& wa,
                                const Eigen::VectorXd& wb) {
    return rows_omp(static_cast<int>(lam.size()), NodeRow{lam, u, v, wa, wb});
}

}  // namespace rwmeet::kernels
