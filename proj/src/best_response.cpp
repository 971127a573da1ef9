#include "copshield/best_response.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "copshield/errors.hpp"

namespace copshield {

namespace {

// A node is a step boundary: the robber has just rested, nobody is captured.
// The cop side is deterministic, so the game tree branches on robber choices
// only, and the reachable boundary graph is finite once the strategy state is
// finitely encoded (the digest contract).
struct Node {
    std::vector<int> cops;
    int robber;
    bool flag;          // has rested on the protected set at a step >= threshold
    long long sat_step; // step saturated at the threshold (0 when not tracking)
    std::vector<int> succ;
    int out_pending = 0;    // successors not yet known captured
    bool captured = false;  // every continuation from here ends in capture
    long long capture_steps = 0;
};

struct Search {
    const Graph& g;
    SearchLimits limits;
    // Protection inputs; threshold < 0 disables flag and step tracking.
    const VertexSet* protected_set = nullptr;
    long long threshold = -1;

    std::unordered_map<std::string, int> index;
    std::vector<Node> nodes;
    std::vector<std::unique_ptr<CopStrategy>> pending;  // instance per unexpanded node
    std::vector<int> roots;

    std::string key_of(const CopStrategy& strat, const std::vector<int>& cops, int robber,
                       bool flag, long long sat_step) const {
        std::string key = strat.digest();
        key += '#';
        for (int v : cops) {
            key += std::to_string(v);
            key += ',';
        }
        key += '|';
        key += std::to_string(robber);
        if (threshold >= 0) {
            key += flag ? "|1|" : "|0|";
            key += std::to_string(sat_step);
        }
        return key;
    }

    bool flag_after_rest(bool flag, int robber, long long step) const {
        if (threshold < 0 || flag) return flag;
        return step >= threshold && protected_set->contains(robber);
    }

    long long saturate(long long step) const {
        return threshold < 0 ? 0 : std::min(step, threshold);
    }

    int intern(std::unique_ptr<CopStrategy> instance, const std::vector<int>& cops,
               int robber, bool flag, long long sat_step) {
        std::string key = key_of(*instance, cops, robber, flag, sat_step);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        if (nodes.size() >= limits.max_states)
            throw BudgetExceeded("best-response search exceeded " +
                                 std::to_string(limits.max_states) + " states");
        int id = static_cast<int>(nodes.size());
        index.emplace(std::move(key), id);
        nodes.push_back(Node{cops, robber, flag, sat_step, {}, 0, false, 0});
        pending.push_back(std::move(instance));
        return id;
    }

    void seed(const CopStrategy& prototype) {
        auto base = prototype.clone();
        auto placement = base->initial_placements(g);
        if (static_cast<int>(placement.size()) != base->cop_count())
            throw IllegalMove("strategy placed a wrong number of cops", 0);
        for (int v : placement) g.check_vertex(v);
        for (int r = 0; r < g.vertex_count(); ++r) {
            if (std::find(placement.begin(), placement.end(), r) != placement.end())
                continue;  // placing on a cop is immediate capture
            bool flag = flag_after_rest(false, r, 0);
            roots.push_back(intern(base->clone(), placement, r, flag, saturate(0)));
        }
    }

    void expand(int id) {
        auto instance = std::move(pending[id]);
        const std::vector<int> cops_before = nodes[id].cops;
        const int robber = nodes[id].robber;
        const bool flag_before = nodes[id].flag;
        const long long sat_step = nodes[id].sat_step;

        // Strategies are driven by their internal state; the step field is
        // only advisory and saturates here, so it must not be relied upon.
        Observation obs{&g, sat_step + 1, Phase::CopMove, cops_before, robber};
        auto moved = instance->move(obs);
        if (moved.size() != cops_before.size())
            throw IllegalMove("cop move changed the number of cops", sat_step + 1);
        for (size_t i = 0; i < moved.size(); ++i)
            if (moved[i] != cops_before[i] && !g.has_edge(cops_before[i], moved[i]))
                throw IllegalMove("cop " + std::to_string(i) + " jumped " +
                                      std::to_string(cops_before[i]) + "->" +
                                      std::to_string(moved[i]),
                                  sat_step + 1);

        if (std::find(moved.begin(), moved.end(), robber) != moved.end()) {
            nodes[id].captured = true;  // caught during the cop half-step
            nodes[id].capture_steps = 1;
            return;
        }
        long long next_sat = saturate(sat_step + 1);
        std::vector<int> options = g.neighbors(robber);
        options.push_back(robber);
        std::vector<int> successors;
        for (int r : options) {
            if (std::find(moved.begin(), moved.end(), r) != moved.end())
                continue;  // that move walks into a cop
            bool flag = flag_after_rest(flag_before, r, next_sat);
            successors.push_back(intern(instance->clone(), moved, r, flag, next_sat));
        }
        nodes[id].succ = std::move(successors);
        if (nodes[id].succ.empty()) {
            nodes[id].captured = true;  // every robber option steps onto a cop
            nodes[id].capture_steps = 1;
        }
    }

    void run(const CopStrategy& prototype) {
        seed(prototype);
        for (size_t cursor = 0; cursor < nodes.size(); ++cursor) {
            expand(static_cast<int>(cursor));
            pending[cursor].reset();
        }
    }

    // Back-propagate capture: a node is captured when all successors are.
    void propagate_capture() {
        std::vector<std::vector<int>> preds(nodes.size());
        std::deque<int> queue;
        for (size_t i = 0; i < nodes.size(); ++i) {
            nodes[i].out_pending = static_cast<int>(nodes[i].succ.size());
            for (int s : nodes[i].succ) preds[s].push_back(static_cast<int>(i));
            if (nodes[i].captured) queue.push_back(static_cast<int>(i));
        }
        while (!queue.empty()) {
            int id = queue.front();
            queue.pop_front();
            for (int p : preds[id]) {
                if (nodes[p].captured) continue;
                nodes[p].capture_steps =
                    std::max(nodes[p].capture_steps, nodes[id].capture_steps + 1);
                if (--nodes[p].out_pending == 0) {
                    nodes[p].captured = true;
                    queue.push_back(p);
                }
            }
        }
    }

    // Walk from a surviving node, always through surviving successors, until
    // a node repeats, then append one extra lap so the engine's repetition
    // detector sees a full cycle.
    std::vector<int> surviving_walk(int start) const {
        std::vector<int> walk{start};
        std::vector<char> on_walk(nodes.size(), 0);
        on_walk[start] = 1;
        int at = start;
        while (true) {
            int next = -1;
            for (int s : nodes[at].succ)
                if (!nodes[s].captured) {
                    next = s;
                    break;
                }
            if (next == -1) throw Error("internal: surviving node without surviving successor");
            walk.push_back(next);
            if (on_walk[next]) break;
            on_walk[next] = 1;
            at = next;
        }
        int lap_entry = walk.back();
        size_t cycle_start = 0;
        while (walk[cycle_start] != lap_entry) ++cycle_start;
        std::vector<int> lap(walk.begin() + cycle_start + 1, walk.end());
        walk.insert(walk.end(), lap.begin(), lap.end());
        return walk;
    }

    std::vector<int> slowest_walk(int start) const {
        std::vector<int> walk{start};
        int at = start;
        while (!nodes[at].succ.empty()) {
            int next = -1;
            long long best = -1;
            for (int s : nodes[at].succ)
                if (nodes[s].capture_steps > best) {
                    best = nodes[s].capture_steps;
                    next = s;
                }
            walk.push_back(next);
            at = next;
        }
        return walk;
    }

    Trace replay(const CopStrategy& prototype, const std::vector<int>& walk) const {
        std::vector<int> moves;
        for (size_t i = 1; i < walk.size(); ++i) moves.push_back(nodes[walk[i]].robber);
        // The slowest line ends one rest short of capture; pad with stays so
        // the engine can play the final cop half-step.
        moves.push_back(nodes[walk.back()].robber);
        moves.push_back(nodes[walk.back()].robber);
        auto cops = prototype.clone();
        ScriptedRobber robber(nodes[walk.front()].robber, moves);
        long long horizon = static_cast<long long>(walk.size()) + 4;
        return run_game(g, *cops, robber, horizon);
    }
};

}  // namespace

BestResponseResult best_response_robber(const Graph& g, const CopStrategy& cops,
                                        SearchLimits limits) {
    if (!g.is_connected())
        throw InvalidArgument("best_response_robber requires a connected graph");
    Search search{g, limits};
    search.run(cops);
    search.propagate_capture();

    BestResponseResult result;
    result.states_explored = search.nodes.size();

    int surviving_root = -1;
    int slowest_root = -1;
    long long slowest = -1;
    for (int r : search.roots) {
        if (!search.nodes[r].captured && surviving_root == -1) surviving_root = r;
        if (search.nodes[r].captured && search.nodes[r].capture_steps > slowest) {
            slowest = search.nodes[r].capture_steps;
            slowest_root = r;
        }
    }

    if (surviving_root != -1) {
        result.robber_survives = true;
        result.trace = search.replay(cops, search.surviving_walk(surviving_root));
        return result;
    }
    result.robber_survives = false;
    result.max_capture_step = std::max<long long>(0, slowest);
    if (slowest_root != -1) {
        result.trace = search.replay(cops, search.slowest_walk(slowest_root));
    } else {
        // Cops cover every vertex: any placement is an immediate capture.
        auto instance = cops.clone();
        StationaryRobber robber(0);
        result.trace = run_game(g, *instance, robber, 1);
    }
    return result;
}

ProtectionVerdict verify_protection(const Graph& g, const CopStrategy& cops,
                                    const ProtectionCertificate& cert,
                                    SearchLimits limits) {
    if (!g.is_connected())
        throw InvalidArgument("verify_protection requires a connected graph");
    ProtectionVerdict verdict;
    if (cert.protected_set.empty()) {  // vacuous certificate
        verdict.protected_ok = true;
        return verdict;
    }
    Search search{g, limits};
    search.protected_set = &cert.protected_set;
    search.threshold = std::max<long long>(0, cert.threshold_step);
    search.run(cops);
    search.propagate_capture();
    verdict.states_explored = search.nodes.size();

    for (size_t i = 0; i < search.nodes.size(); ++i) {
        if (!search.nodes[i].flag || search.nodes[i].captured) continue;
        // A line rested on the protected set past the threshold and still
        // evades forever: the certificate is refuted. Build the witness.
        verdict.protected_ok = false;
        std::vector<int> parent(search.nodes.size(), -2);
        std::deque<int> queue;
        for (int r : search.roots)
            if (parent[r] == -2) {
                parent[r] = -1;
                queue.push_back(r);
            }
        while (!queue.empty()) {
            int at = queue.front();
            queue.pop_front();
            for (int s : search.nodes[at].succ)
                if (parent[s] == -2) {
                    parent[s] = at;
                    queue.push_back(s);
                }
        }
        std::vector<int> path;
        for (int at = static_cast<int>(i); at != -1; at = parent[at]) path.push_back(at);
        std::reverse(path.begin(), path.end());
        auto tail = search.surviving_walk(static_cast<int>(i));
        path.insert(path.end(), tail.begin() + 1, tail.end());
        verdict.witness = search.replay(cops, path);
        return verdict;
    }
    verdict.protected_ok = true;
    return verdict;
}

}  // namespace copshield
