#include "copshield/exact_solver.hpp"

#include <algorithm>
#include <deque>

#include "copshield/errors.hpp"

namespace copshield {

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

}  // namespace

CopsWinSolver::CopsWinSolver(const Graph& g, int k, SolverOptions options)
    : graph_(std::make_shared<Graph>(g)), k_(k), n_(g.vertex_count()) {
    if (k < 1) throw InvalidArgument("solver needs at least one cop");
    if (n_ < 1) throw InvalidArgument("solver needs a nonempty graph");
    if (!g.is_connected()) throw InvalidArgument("solver requires a connected graph");

    int universe = n_ + k_ - 1;
    binom_.assign(universe + 1, std::vector<long long>(k_ + 1, 0));
    for (int i = 0; i <= universe; ++i) {
        binom_[i][0] = 1;
        for (int j = 1; j <= std::min(i, k_); ++j)
            binom_[i][j] = binom_[i - 1][j - 1] + (i - 1 >= j ? binom_[i - 1][j] : 0);
    }
    multiset_count_ = binomial(universe, k_);
    config_count_ = multiset_count_ * n_ * 2;
    if (config_count_ > options.budget)
        throw BudgetExceeded("solver: " + std::to_string(config_count_) +
                             " configurations exceed budget " +
                             std::to_string(options.budget));
    solve();
}

// Combinatorial number system: a sorted multiset (c_1 <= ... <= c_k) maps to
// the strictly increasing tuple (c_i + i - 1), ranked in colex order.
long long CopsWinSolver::rank_multiset(const std::vector<int>& cops) const {
    long long rank = 0;
    for (int i = 0; i < k_; ++i) rank += binom_[cops[i] + i][i + 1];
    return rank;
}

void CopsWinSolver::unrank_multiset(long long rank, std::vector<int>& out) const {
    out.resize(k_);
    for (int i = k_; i >= 1; --i) {
        int a = i - 1;
        while (a + 1 <= n_ + k_ - 1 && binom_[a + 1][i] <= rank) ++a;
        rank -= binom_[a][i];
        out[i - 1] = a - (i - 1);
    }
}

long long CopsWinSolver::config_index(long long multiset_rank, int robber,
                                      bool cop_turn) const {
    return (multiset_rank * n_ + robber) * 2 + (cop_turn ? 1 : 0);
}

std::vector<long long> CopsWinSolver::joint_move_ranks(const std::vector<int>& cops) const {
    std::vector<const std::vector<int>*> menus(k_);
    std::vector<int> option(k_, -1);  // -1 encodes "stay"
    std::vector<long long> ranks;
    std::vector<int> moved(k_);
    // Odometer over each cop's stay-or-neighbor options.
    long long total = 1;
    for (int i = 0; i < k_; ++i) {
        menus[i] = &graph_->neighbors(cops[i]);
        total *= static_cast<long long>(menus[i]->size()) + 1;
    }
    ranks.reserve(total);
    while (true) {
        for (int i = 0; i < k_; ++i)
            moved[i] = option[i] < 0 ? cops[i] : (*menus[i])[option[i]];
        std::sort(moved.begin(), moved.end());
        ranks.push_back(rank_multiset(moved));
        int i = 0;
        for (; i < k_; ++i) {
            if (option[i] + 1 < static_cast<int>(menus[i]->size())) {
                ++option[i];
                break;
            }
            option[i] = -1;
        }
        if (i == k_) break;
    }
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    return ranks;
}

void CopsWinSolver::solve() {
    win_.assign(config_count_, 0);
    plies_.assign(config_count_, -1);
    std::vector<int> pending(multiset_count_ * n_, 0);  // robber-turn successor counters

    std::deque<long long> queue;
    std::vector<int> cops(k_);
    for (long long m = 0; m < multiset_count_; ++m) {
        unrank_multiset(m, cops);
        for (int r = 0; r < n_; ++r) {
            pending[m * n_ + r] = graph_->degree(r) + 1;
            if (std::binary_search(cops.begin(), cops.end(), r)) {
                for (bool turn : {false, true}) {
                    long long c = config_index(m, r, turn);
                    win_[c] = 1;
                    plies_[c] = 0;
                    queue.push_back(c);
                }
            }
        }
    }

    while (!queue.empty()) {
        long long c = queue.front();
        queue.pop_front();
        long long mr = c / 2 / n_;
        int robber = static_cast<int>(c / 2 % n_);
        bool cop_turn = c & 1;
        unrank_multiset(mr, cops);

        if (!cop_turn) {
            // Cops win the robber-turn configuration: every cop-turn
            // predecessor reaching it by a joint move is now winning.
            for (long long pm : joint_move_ranks(cops)) {
                long long p = config_index(pm, robber, true);
                if (win_[p]) continue;
                win_[p] = 1;
                plies_[p] = plies_[c] + 1;
                queue.push_back(p);
            }
        } else {
            // A robber-turn predecessor is winning once all robber options
            // (stay or move one edge) lead to winning cop-turn configurations.
            std::vector<int> from = graph_->neighbors(robber);
            from.push_back(robber);
            for (int r0 : from) {
                long long p = config_index(mr, r0, false);
                if (win_[p]) continue;
                plies_[p] = std::max(plies_[p], plies_[c] + 1);
                if (--pending[mr * n_ + r0] == 0) {
                    win_[p] = 1;
                    queue.push_back(p);
                }
            }
        }
    }
}

void CopsWinSolver::verify_fixed_point() const {
    std::vector<int> cops(k_);
    for (long long m = 0; m < multiset_count_; ++m) {
        unrank_multiset(m, cops);
        for (int r = 0; r < n_; ++r) {
            bool captured = std::binary_search(cops.begin(), cops.end(), r);
            // Cop turn: winning iff captured or some joint move wins.
            bool cop_expect = captured;
            if (!cop_expect)
                for (long long s : joint_move_ranks(cops))
                    if (win_[config_index(s, r, false)]) {
                        cop_expect = true;
                        break;
                    }
            if (cop_expect != static_cast<bool>(win_[config_index(m, r, true)]))
                throw Error("solver fixed point unstable at a cop-turn configuration");
            // Robber turn: winning iff captured or all robber options lose.
            bool rob_expect = captured;
            if (!rob_expect) {
                rob_expect = true;
                std::vector<int> to = graph_->neighbors(r);
                to.push_back(r);
                for (int r2 : to)
                    if (!win_[config_index(m, r2, true)]) {
                        rob_expect = false;
                        break;
                    }
            }
            if (rob_expect != static_cast<bool>(win_[config_index(m, r, false)]))
                throw Error("solver fixed point unstable at a robber-turn configuration");
        }
    }
}

bool CopsWinSolver::winning(const std::vector<int>& cops, int robber, bool cop_turn) const {
    return win_[config_index(rank_multiset(cops), robber, cop_turn)];
}

long long CopsWinSolver::capture_plies(const std::vector<int>& cops, int robber,
                                       bool cop_turn) const {
    long long c = config_index(rank_multiset(cops), robber, cop_turn);
    return win_[c] ? plies_[c] : -1;
}

bool CopsWinSolver::cops_win() const {
    std::vector<int> cops(k_);
    for (long long m = 0; m < multiset_count_; ++m) {
        bool all = true;
        for (int r = 0; r < n_ && all; ++r)
            if (!win_[config_index(m, r, true)]) all = false;
        if (all) return true;
    }
    return false;
}

std::vector<int> CopsWinSolver::best_initial_placement() const {
    std::vector<int> best;
    std::vector<int> cops(k_);
    for (long long m = 0; m < multiset_count_; ++m) {
        bool all = true;
        for (int r = 0; r < n_ && all; ++r)
            if (!win_[config_index(m, r, true)]) all = false;
        if (!all) continue;
        unrank_multiset(m, cops);
        if (best.empty() || cops < best) best = cops;
    }
    return best;  // empty when the cops cannot win
}

bool k_cops_win(const Graph& g, int k, SolverOptions options) {
    return CopsWinSolver(g, k, options).cops_win();
}

int cop_number(const Graph& g, int k_max, SolverOptions options) {
    for (int k = 1; k <= k_max; ++k)
        if (k_cops_win(g, k, options)) return k;
    throw BudgetExceeded("cop number exceeds k_max = " + std::to_string(k_max));
}

namespace {

class TableRobber final : public RobberStrategy {
public:
    explicit TableRobber(std::shared_ptr<const CopsWinSolver> solver)
        : solver_(std::move(solver)) {}

    int initial_placement(const Graph& g, const std::vector<int>& cop_positions) override {
        std::vector<int> cops = cop_positions;
        std::sort(cops.begin(), cops.end());
        std::vector<int> options(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) options[v] = v;
        return pick(cops, options);
    }

    int move(const Observation& obs) override {
        std::vector<int> cops = obs.cop_positions;
        std::sort(cops.begin(), cops.end());
        std::vector<int> options = obs.graph->neighbors(obs.robber_position);
        options.push_back(obs.robber_position);
        std::sort(options.begin(), options.end());
        return pick(cops, options);
    }

private:
    int pick(const std::vector<int>& cops, const std::vector<int>& options) const {
        for (int v : options)
            if (!solver_->winning(cops, v, true)) return v;  // stay free forever
        int best = options.front();
        long long best_plies = -1;
        for (int v : options) {
            long long p = solver_->capture_plies(cops, v, true);
            if (p > best_plies) {
                best_plies = p;
                best = v;
            }
        }
        return best;
    }

    std::shared_ptr<const CopsWinSolver> solver_;
};

class TableCops final : public CopStrategy {
public:
    explicit TableCops(std::shared_ptr<const CopsWinSolver> solver)
        : solver_(std::move(solver)) {}

    int cop_count() const override { return solver_->cop_count(); }

    std::vector<int> initial_placements(const Graph&) override {
        auto placement = solver_->best_initial_placement();
        if (!placement.empty()) return placement;
        return std::vector<int>(solver_->cop_count(), 0);  // losing side: park
    }

    std::vector<int> move(const Observation& obs) override {
        const Graph& g = *obs.graph;
        int k = cop_count();
        std::vector<int> option(k, -1);
        std::vector<int> moved(k), sorted(k);
        std::vector<int> best = obs.cop_positions;
        long long best_plies = -2;  // -2: nothing chosen, -1 used for losing moves
        bool best_win = false;
        while (true) {
            for (int i = 0; i < k; ++i)
                moved[i] = option[i] < 0 ? obs.cop_positions[i]
                                         : g.neighbors(obs.cop_positions[i])[option[i]];
            sorted = moved;
            std::sort(sorted.begin(), sorted.end());
            bool win = solver_->winning(sorted, obs.robber_position, false);
            long long plies = solver_->capture_plies(sorted, obs.robber_position, false);
            bool better = false;
            if (win && !best_win)
                better = true;
            else if (win == best_win && best_plies == -2)
                better = true;
            else if (win && best_win && plies < best_plies)
                better = true;
            if (better) {
                best = moved;
                best_win = win;
                best_plies = plies;
            }
            int i = 0;
            for (; i < k; ++i) {
                if (option[i] + 1 < static_cast<int>(g.neighbors(obs.cop_positions[i]).size())) {
                    ++option[i];
                    break;
                }
                option[i] = -1;
            }
            if (i == k) break;
        }
        return best;
    }

    std::string digest() const override { return ""; }  // memoryless: tables are static

    std::unique_ptr<CopStrategy> clone() const override {
        return std::make_unique<TableCops>(*this);
    }

private:
    std::shared_ptr<const CopsWinSolver> solver_;
};

}  // namespace

std::unique_ptr<RobberStrategy> optimal_robber_policy(
    std::shared_ptr<const CopsWinSolver> solver) {
    return std::make_unique<TableRobber>(std::move(solver));
}

std::unique_ptr<CopStrategy> optimal_cop_policy(std::shared_ptr<const CopsWinSolver> solver) {
    return std::make_unique<TableCops>(std::move(solver));
}

}  // namespace copshield
