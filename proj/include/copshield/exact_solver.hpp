#ifndef COPSHIELD_EXACT_SOLVER_HPP
#define COPSHIELD_EXACT_SOLVER_HPP

#include <memory>

#include "copshield/game.hpp"
#include "copshield/graph.hpp"

namespace copshield {

struct SolverOptions {
    long long budget = 50'000'000;  // maximum number of configurations
};

/// Ground-truth oracle for "do k cops win on g". Configurations are
/// (sorted cop multiset, robber vertex, side to move); capture states seed a
/// retrograde breadth-first marking whose fixed point yields, for every
/// configuration, whether the cops win and the number of plies to capture
/// under optimal play. Cop placements are canonicalized to sorted multisets,
/// which collapses cop symmetry.
class CopsWinSolver {
public:
    CopsWinSolver(const Graph& g, int k, SolverOptions options = {});

    const Graph& graph() const { return *graph_; }
    int cop_count() const { return k_; }

    bool cops_win() const;  // exists a placement beating every robber reply

    // cops must be sorted ascending. cop_turn means the cops move next.
    bool winning(const std::vector<int>& cops, int robber, bool cop_turn) const;
    // Plies to capture under optimal play; -1 on robber-winning configurations.
    long long capture_plies(const std::vector<int>& cops, int robber, bool cop_turn) const;

    // Lexicographically first placement that wins against every robber reply.
    std::vector<int> best_initial_placement() const;

    long long configuration_count() const { return config_count_; }

    // Replays the marking rule over every configuration and throws if any
    // verdict would change: one extra iteration past convergence is a no-op.
    void verify_fixed_point() const;

private:
    std::shared_ptr<const Graph> graph_;
    int k_;
    int n_;
    long long multiset_count_;
    long long config_count_;
    std::vector<std::vector<long long>> binom_;
    std::vector<char> win_;          // per configuration
    std::vector<long long> plies_;

    long long rank_multiset(const std::vector<int>& cops) const;
    void unrank_multiset(long long rank, std::vector<int>& out) const;
    long long config_index(long long multiset_rank, int robber, bool cop_turn) const;
    void solve();
    std::vector<long long> joint_move_ranks(const std::vector<int>& cops) const;
};

bool k_cops_win(const Graph& g, int k, SolverOptions options = {});

// Least k with k_cops_win; throws BudgetExceeded when k_max is exhausted.
int cop_number(const Graph& g, int k_max, SolverOptions options = {});

/// Robber side extracted from the solved tables: stays inside robber-winning
/// configurations when possible, otherwise maximizes the capture time.
std::unique_ptr<RobberStrategy> optimal_robber_policy(std::shared_ptr<const CopsWinSolver> solver);

/// Cop side extracted from the solved tables: plays the lexicographically
/// first winning placement and always decreases the capture-time metric.
std::unique_ptr<CopStrategy> optimal_cop_policy(std::shared_ptr<const CopsWinSolver> solver);

}  // namespace copshield

#endif
