// rwmeet: expected first meeting times of two random walkers on weighted
// graphs. Subcommands: generate | analyze | simulate | sweep | oracle.
//
// Node ids are 1-based on the command line and in printed node columns
// (pass --zero-based to switch); edge-list files are always 0-based.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rwmeet/generators.hpp"
#include "rwmeet/graph.hpp"
#include "rwmeet/meeting.hpp"
#include "rwmeet/oracle.hpp"
#include "rwmeet/rng.hpp"
#include "rwmeet/spectral.hpp"
#include "rwmeet/walk_sim.hpp"

namespace {

constexpr const char* kVersion = "rwmeet 0.1.0";

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("RWMEET_SEED")) return std::strtoull(env, nullptr, 10);
    return 1;
}

struct IdConvention {
    bool zero_based = false;
    int to_internal(int id) const { return zero_based ? id : id - 1; }
    int to_external(int id) const { return zero_based ? id : id + 1; }
};

struct GraphSource {
    std::string file;
    std::string model = "ba";
    int n = 1000;
    double davg = 6.0;  // Table-1 style defaults
    int retries = 50;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--graph", file, "edge-list file to load instead of generating");
        cmd->add_option("--model", model, "ba|er")->check(CLI::IsMember({"ba", "er"}));
        cmd->add_option("--n", n, "node count");
        cmd->add_option("--davg", davg, "target average weighted degree");
        cmd->add_option("--retries", retries, "ER connectivity retries");
    }

    rwmeet::WeightedGraph load(std::uint64_t seed, std::string& desc) const {
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw std::runtime_error("cannot open " + file);
            desc = "graph=" + file;
            return rwmeet::load_edge_list(in);
        }
        auto params = rwmeet::params_for_target_degree(
            model == "ba" ? rwmeet::Model::BA : rwmeet::Model::ER, n, davg, seed);
        params.max_retries = retries;
        std::ostringstream os;
        os << "model=" << model << " n=" << n << " davg=" << davg;
        desc = os.str();
        return rwmeet::generate(params);
    }
};

void print_header(std::ostream& out, const std::string& config, const std::string& columns) {
    out << "# " << kVersion << " " << config << '\n' << columns << '\n';
}

// ---------------------------------------------------------------- generate
int cmd_generate(const GraphSource& src, std::uint64_t seed, const std::string& out_path) {
    std::string desc;
    rwmeet::WeightedGraph g = src.load(seed, desc);
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write " + out_path);
        rwmeet::save_edge_list(g, out);
    } else {
        rwmeet::save_edge_list(g, std::cout);
    }
    auto stats = g.compute_stats();
    print_header(std::cerr, desc + " seed=" + std::to_string(seed),
                 "n,s1,s2,d_avg,d_std,d_min,w_max");
    std::cerr << stats.csv_row() << '\n';
    return 0;
}

// ----------------------------------------------------------------- analyze
int cmd_analyze(const GraphSource& src, std::uint64_t seed, const IdConvention& ids, int a_ext,
                std::vector<int> b_ext, int sweep, bool allow_bipartite, bool skip_decomposed) {
    std::string desc;
    rwmeet::WeightedGraph g = src.load(seed, desc);
    auto rep = g.check_assumptions();
    if (!rep.connected) throw std::domain_error("graph is disconnected; analysis undefined");
    if (rep.bipartite && !allow_bipartite)
        throw std::domain_error("graph is bipartite; rerun with --allow-bipartite to force "
                                "(results will be dominated by near-singular terms)");
    auto stats = g.compute_stats();
    auto dec = rwmeet::decompose(g);
    rwmeet::MeetingEvaluator eval(dec, stats, allow_bipartite);

    int a = ids.to_internal(a_ext);
    std::vector<int> bs;
    for (int b : b_ext) bs.push_back(ids.to_internal(b));
    if (sweep > 0) {
        rwmeet::Rng rng(rwmeet::derive_seed(seed, 0xB5));
        while (static_cast<int>(bs.size()) < sweep) {
            int b = static_cast<int>(rwmeet::uniform_below(rng, g.node_count()));
            if (b == a) continue;
            if (rep.bipartite && rep.side[b] != rep.side[a]) continue;  // parity: must share a side
            if (std::find(bs.begin(), bs.end(), b) == bs.end()) bs.push_back(b);
        }
    }
    if (bs.empty()) throw std::domain_error("no b nodes requested (use --b or --sweep)");

    std::ostringstream cfg;
    cfg << desc << " a=" << a_ext << " seed=" << seed;
    print_header(std::cout, cfg.str(),
                 "a,b,mu_spectral,mu_decomposed,principal,error_bound,lambda2");
    for (int b : bs) {
        rwmeet::MeetingAnalysis row;
        row.a = a;
        row.b = b;
        row.mu_ab = eval.mu(a, b);
        row.mu_ab_decomposed =
            skip_decomposed ? std::numeric_limits<double>::quiet_NaN() : eval.mu_decomposed(a, b);
        row.principal = rwmeet::principal_component(stats);
        row.lambda2 = dec.lambda2();
        row.error_bound_rhs = rwmeet::meeting_error_bound(stats, row.lambda2);
        row.a = ids.to_external(a);
        row.b = ids.to_external(b);
        std::cout << row.csv_row() << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------- simulate
int cmd_simulate(const GraphSource& src, std::uint64_t seed, const IdConvention& ids, int a_ext,
                 int b_ext, long runs, long t_max, const std::string& freq_out) {
    std::string desc;
    rwmeet::WeightedGraph g = src.load(seed, desc);
    int a = ids.to_internal(a_ext), b = ids.to_internal(b_ext);
    auto asum = g.check_assumptions();
    if (asum.bipartite && !asum.side.empty() && asum.side[a] != asum.side[b])
        std::cerr << "# warning: bipartite graph with walkers on opposite sides; "
                     "they can never meet (parity)\n";
    auto report = rwmeet::monte_carlo_meeting(g, a, b, runs, seed, t_max);
    report.a = ids.to_external(a);
    report.b = ids.to_external(b);

    std::ostringstream cfg;
    cfg << desc << " runs=" << runs << " t_max=" << t_max << " seed=" << seed;
    print_header(std::cout, cfg.str(), "a,b,runs,mean,std_err,truncated,seed");
    std::cout << report.csv_row() << '\n';

    if (!freq_out.empty()) {
        std::ofstream out(freq_out);
        if (!out) throw std::runtime_error("cannot write " + freq_out);
        print_header(out, cfg.str(), "node,frequency");
        for (int c = 0; c < g.node_count(); ++c)
            if (report.node_frequency[c] > 0)
                out << ids.to_external(c) << ',' << report.node_frequency[c] << '\n';
    }
    return 0;
}

// ------------------------------------------------------------------- sweep
int cmd_sweep(std::vector<int> n_list, std::vector<double> davg_list,
              std::vector<std::string> models, std::uint64_t seed, long runs, int pairs,
              long t_max, int retries) {
    std::cout << "# " << kVersion << " sweep runs=" << runs << " pairs=" << pairs
              << " t_max=" << t_max << " seed=" << seed << '\n';
    std::cout << "n,d_avg,model,eps_avg,eps_max,epsp_avg,principal,mu_sim,error\n";
    bool all_ok = true;
    for (int n : n_list)
        for (double davg : davg_list)
            for (const std::string& model : models) {
                std::ostringstream row;
                row << n << ',' << num(davg) << ',' << model << ',';
                try {
                    std::uint64_t cell_seed = rwmeet::derive_seed(
                        seed, (static_cast<std::uint64_t>(n) << 20) ^
                                  static_cast<std::uint64_t>(davg * 16) ^
                                  (model == "ba" ? 0u : 1u));
                    auto params = rwmeet::params_for_target_degree(
                        model == "ba" ? rwmeet::Model::BA : rwmeet::Model::ER, n, davg,
                        cell_seed);
                    params.max_retries = retries;
                    auto g = rwmeet::generate(params);
                    auto rep = g.check_assumptions();
                    auto stats = g.compute_stats();
                    auto dec = rwmeet::decompose(g);
                    rwmeet::MeetingEvaluator eval(dec, stats, /*allow_bipartite=*/true);

                    int a = 0;
                    rwmeet::Rng rng(rwmeet::derive_seed(cell_seed, 0xB5));
                    double eps_sum = 0, eps_max = 0, epsp_sum = 0, mu_sim_sum = 0;
                    int done = 0;
                    std::vector<int> seen;
                    while (done < pairs) {
                        int b = static_cast<int>(rwmeet::uniform_below(rng, n));
                        if (b == a) continue;
                        if (rep.bipartite && rep.side[b] != rep.side[a]) continue;
                        if (std::find(seen.begin(), seen.end(), b) != seen.end()) continue;
                        seen.push_back(b);
                        double mu_spec = eval.mu(a, b);
                        auto sim = rwmeet::monte_carlo_meeting(
                            g, a, b, runs,
                            rwmeet::derive_seed(cell_seed, 0x1000u + static_cast<unsigned>(done)),
                            t_max);
                        double eps = rwmeet::relative_error(mu_spec, sim);
                        eps_sum += eps;
                        eps_max = std::max(eps_max, eps);
                        epsp_sum += rwmeet::relative_error_principal(stats, sim);
                        mu_sim_sum += sim.mean_time;
                        ++done;
                    }
                    row << num(eps_sum / pairs) << ',' << num(eps_max) << ','
                        << num(epsp_sum / pairs) << ','
                        << num(rwmeet::principal_component(stats)) << ','
                        << num(mu_sim_sum / pairs) << ',';
                } catch (const std::exception& e) {
                    std::string msg = e.what();
                    for (char& ch : msg)
                        if (ch == ',' || ch == '\n') ch = ';';
                    row << "nan,nan,nan,nan,nan," << msg;
                    all_ok = false;
                }
                std::cout << row.str() << '\n';
            }
    return all_ok ? 0 : 1;
}

// ------------------------------------------------------------------ oracle
int cmd_oracle(const GraphSource& src, std::uint64_t seed, const IdConvention& ids,
               const std::string& op, int a_ext, int b_ext) {
    std::string desc;
    rwmeet::WeightedGraph g = src.load(seed, desc);
    int a = ids.to_internal(a_ext), b = ids.to_internal(b_ext);
    std::ostringstream cfg;
    cfg << desc << " op=" << op << " seed=" << seed;
    if (op == "hitting") {
        auto t = rwmeet::oracle::exact_hitting_time(g, a, b);
        print_header(std::cout, cfg.str(), "a,i,hitting_time");
        std::cout << a_ext << ',' << b_ext << ',' << (t ? num(*t) : "never") << '\n';
    } else if (op == "meeting") {
        auto t = rwmeet::oracle::exact_first_meeting_time(g, a, b);
        print_header(std::cout, cfg.str(), "a,b,meeting_time");
        std::cout << a_ext << ',' << b_ext << ',' << (t ? num(*t) : "never") << '\n';
    } else {
        auto dist = rwmeet::oracle::exact_meeting_node_distribution(g, a, b);
        print_header(std::cout, cfg.str(), "node,probability");
        if (!dist) {
            std::cout << "never,never\n";
        } else {
            for (int c = 0; c < g.node_count(); ++c)
                if ((*dist)[c] > 0.0) std::cout << ids.to_external(c) << ',' << num((*dist)[c]) << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"expected first meeting times of two random walkers on weighted graphs"};
    app.require_subcommand(1);

    IdConvention ids;
    std::uint64_t seed = default_seed();
    app.add_flag("--zero-based", ids.zero_based, "node ids on the CLI are 0-based");
    app.add_option("--seed", seed, "master seed (env RWMEET_SEED)");

    GraphSource gen_src, ana_src, sim_src, orc_src;

    auto* gen = app.add_subcommand("generate", "generate a graph and write its edge list");
    gen_src.add_options(gen);
    std::string gen_out;
    gen->add_option("--out", gen_out, "output edge-list file (default stdout)");

    auto* ana = app.add_subcommand("analyze", "spectral meeting-time analysis");
    ana_src.add_options(ana);
    int ana_a = 1;
    std::vector<int> ana_b;
    int ana_sweep = 0;
    bool ana_force = false, ana_skip_dec = false;
    ana->add_option("--a", ana_a, "start node a");
    ana->add_option("--b", ana_b, "start node(s) b");
    ana->add_option("--sweep", ana_sweep, "analyze this many random b nodes");
    ana->add_flag("--allow-bipartite", ana_force, "force evaluation on bipartite graphs");
    ana->add_flag("--skip-decomposed", ana_skip_dec, "skip the O(n^3) decomposition route");

    auto* sim = app.add_subcommand("simulate", "Monte Carlo first-meeting simulation");
    sim_src.add_options(sim);
    int sim_a = 1, sim_b = 2;
    long sim_runs = 10000, sim_tmax = rwmeet::kDefaultTMax;
    std::string freq_out;
    sim->add_option("--a", sim_a, "start node a");
    sim->add_option("--b", sim_b, "start node b");
    sim->add_option("--runs", sim_runs, "number of runs");
    sim->add_option("--tmax", sim_tmax, "per-run step cap");
    sim->add_option("--freq-out", freq_out, "write node,frequency CSV here");

    auto* swp = app.add_subcommand("sweep", "analysis-vs-simulation sweep over (n, d_avg, model)");
    std::vector<int> swp_n{1000};
    std::vector<double> swp_davg{6.0};
    std::vector<std::string> swp_models{"ba", "er"};
    long swp_runs = 10000, swp_tmax = rwmeet::kDefaultTMax;
    int swp_pairs = 10, swp_retries = 50;
    swp->add_option("--n-list", swp_n, "node counts");
    swp->add_option("--davg-list", swp_davg, "target average degrees");
    swp->add_option("--models", swp_models, "ba and/or er");
    swp->add_option("--runs", swp_runs, "Monte Carlo runs per pair");
    swp->add_option("--pairs", swp_pairs, "number of (a, b) pairs per cell");
    swp->add_option("--tmax", swp_tmax, "per-run step cap");
    swp->add_option("--retries", swp_retries, "ER connectivity retries");

    auto* orc = app.add_subcommand("oracle", "exact absorbing-chain values on small graphs");
    orc_src.add_options(orc);
    std::string orc_op = "meeting";
    int orc_a = 1, orc_b = 2;
    orc->add_option("--op", orc_op, "hitting|meeting|distribution")
        ->check(CLI::IsMember({"hitting", "meeting", "distribution"}));
    orc->add_option("--a", orc_a, "start node a");
    orc->add_option("--b", orc_b, "node b (target node for --op hitting)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_generate(gen_src, seed, gen_out);
        if (ana->parsed())
            return cmd_analyze(ana_src, seed, ids, ana_a, ana_b, ana_sweep, ana_force,
                               ana_skip_dec);
        if (sim->parsed())
            return cmd_simulate(sim_src, seed, ids, sim_a, sim_b, sim_runs, sim_tmax, freq_out);
        if (swp->parsed())
            return cmd_sweep(swp_n, swp_davg, swp_models, seed, swp_runs, swp_pairs, swp_tmax,
                             swp_retries);
        if (orc->parsed()) return cmd_oracle(orc_src, seed, ids, orc_op, orc_a, orc_b);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
