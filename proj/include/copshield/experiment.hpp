#ifndef COPSHIELD_EXPERIMENT_HPP
#define COPSHIELD_EXPERIMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "copshield/bounds.hpp"
#include "copshield/game.hpp"
#include "copshield/graph.hpp"
#include "copshield/strategies.hpp"

namespace copshield {

struct ExperimentConfig {
    std::string graph_path;  // exactly one of graph_path / family
    std::string family;
    int n = 12;
    double p = 0.3;
    uint64_t seed = 1;
    int count = 1;  // batch size for experiment runs
    std::string strategy = "meyniel";  // geodesic | patrol | epsilon | main | meyniel
    Rational epsilon{1, 1};
    int k = 2;
    int d = 2;
    std::optional<double> alpha_override;
    std::optional<long long> base_threshold;
    std::string robber = "best";  // best | greedy | random
    long long horizon = 0;
    int jobs = 1;
    int k_max = 8;
    long long solver_budget = 50'000'000;  // COPSHIELD_BUDGET
    size_t search_budget = 2'000'000;
};

struct ResultRow {
    std::string graph_id;
    int n = 0;
    int m = 0;
    std::optional<int> vc;
    std::optional<int> cop;
    std::string strategy;
    int budget = 0;
    bool captured = false;
    long long capture_step = -1;
    double log2_f_value = 0.0;
    int t = 0;
    double log2_alpha = 0.0;
    double theorem1_exponent = 0.0;
    double theorem2_log2_bound = 0.0;
    std::string epsilon_c_value;
    double wall_ms = 0.0;
    std::string error;

    static std::string csv_header();
    std::string to_csv() const;
};

Graph load_or_generate_graph(const ExperimentConfig& config, int batch_index = 0);

/// Builds the configured strategy and certificate for a graph.
ProtectedStrategy make_named_strategy(const Graph& g, const ExperimentConfig& config);

std::unique_ptr<RobberStrategy> make_robber(const std::string& name, uint64_t seed);

struct SimulateOutcome {
    Trace trace;
    ResultRow row;
};

ResultRow cmd_solve(const ExperimentConfig& config, const Graph& g);
SimulateOutcome cmd_simulate(const ExperimentConfig& config, const Graph& g);

struct ExperimentSummary {
    std::vector<ResultRow> rows;
    double capture_rate = 0.0;
    double max_budget_vc_ratio = 0.0;
    std::string to_csv() const;  // header + rows; wall time is the last column
    std::string summary_line() const;
};

ExperimentSummary cmd_experiment(const ExperimentConfig& config);

BoundReport cmd_bounds(int k, int d, long long x, const Rational& eps);

// Strips the trailing wall-time column from a results CSV, for determinism
// comparisons.
std::string strip_wall_column(const std::string& csv);

}  // namespace copshield

#endif
