// Compares the serial reference kernels against the OpenMP variants: same
// values, different wall time. Run with OMP_NUM_THREADS to vary parallelism.

#include <chrono>
#include <cstdio>

#include "rwmeet/generators.hpp"
#include "rwmeet/kernels.hpp"
#include "rwmeet/meeting.hpp"
#include "rwmeet/spectral.hpp"
#include "rwmeet/walk_sim.hpp"

using Clock = std::chrono::steady_clock;

static double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 800;
    long runs = argc > 2 ? std::atol(argv[2]) : 20000;

    auto g = rwmeet::generate_ba(n, 3, 7);
    auto stats = g.compute_stats();

    auto t0 = Clock::now();
    auto dec = rwmeet::decompose(g);
    std::printf("decompose            n=%-5d            %10.1f ms\n", n, ms_since(t0));

    Eigen::MatrixXd G = dec.eigenvectors.transpose() * dec.degrees.asDiagonal() * dec.eigenvectors;

    t0 = Clock::now();
    auto serial = rwmeet::kernels::pair_self_sum_serial(dec.eigenvalues, G);
    double t_serial = ms_since(t0);
    t0 = Clock::now();
    auto parallel = rwmeet::kernels::pair_self_sum_omp(dec.eigenvalues, G);
    double t_omp = ms_since(t0);
    std::printf("pair_self_sum        serial %10.1f ms   omp %10.1f ms   diff %.3e\n", t_serial,
                t_omp, std::abs(serial.value - parallel.value) / std::abs(serial.value));

    rwmeet::MeetingEvaluator eval(dec, stats);
    t0 = Clock::now();
    double mu = eval.mu(0, n - 1);
    std::printf("mu(a, b)             once   %10.1f ms   value %.6f\n", ms_since(t0), mu);

    t0 = Clock::now();
    auto rep_s = rwmeet::monte_carlo_meeting_serial(g, 0, n - 1, runs, 99);
    double mc_serial = ms_since(t0);
    t0 = Clock::now();
    auto rep_p = rwmeet::monte_carlo_meeting(g, 0, n - 1, runs, 99);
    double mc_omp = ms_since(t0);
    std::printf("monte_carlo %7ld  serial %10.1f ms   omp %10.1f ms   identical %s\n", runs,
                mc_serial, mc_omp,
                (rep_s.mean_time == rep_p.mean_time && rep_s.node_frequency == rep_p.node_frequency)
                    ? "yes"
                    : "NO");
    return 0;
}
