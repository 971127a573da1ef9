#include "copshield/executor.hpp"

#include <algorithm>
#include <sstream>

#include "copshield/errors.hpp"

namespace copshield {

int greedy_step(const Graph& g, int from, int to) {
    if (from == to) return from;
    auto dist = bfs_distances(g, to);
    if (dist[from] == kUnreachable)
        throw Error("greedy_step: target unreachable from " + std::to_string(from));
    for (int w : g.neighbors(from))
        if (dist[w] == dist[from] - 1) return w;
    throw Error("greedy_step: no descending neighbor");
}

namespace {

int to_sub(const Subgraph& host, int root_id) {
    int s = host.from_parent[root_id];
    if (s < 0) throw Error("vertex not in host subgraph");
    return s;
}

bool in_host(const Subgraph& host, int root_id) {
    return root_id >= 0 && root_id < static_cast<int>(host.from_parent.size()) &&
           host.from_parent[root_id] >= 0;
}

// One canonical step inside the node's host, expressed in root ids.
int host_step(const Subgraph& host, int from_root, int to_root) {
    int next = greedy_step(host.graph, to_sub(host, from_root), to_sub(host, to_root));
    return host.to_parent[next];
}

int host_dist(const Subgraph& host, int a_root, int b_root) {
    auto dist = bfs_distances(host.graph, to_sub(host, a_root));
    return dist[to_sub(host, b_root)];
}

}  // namespace

PlanExecutor::PlanExecutor(std::shared_ptr<const ProtectionPlan> plan)
    : plan_(std::move(plan)) {
    if (!plan_ || !plan_->root) throw InvalidArgument("executor needs a finalized plan");
}

void PlanExecutor::set_initial_override(std::vector<int> positions) {
    initial_override_ = std::move(positions);
}

int PlanExecutor::cop_count() const { return plan_->total_budget; }

void PlanExecutor::note(const std::string& kind, const std::string& data) {
    if (logging_) log_.push_back({kind, data});
}

void PlanExecutor::append_entry(const PlanNode* node) {
    Entry e;
    e.node = node;
    e.slot_begin = next_slot_;
    e.slot_count = node->own_cops;
    if (node->kind == PlanNodeKind::Patrol || node->kind == PlanNodeKind::CoverDispatch)
        e.targets.assign(node->own_cops, -1);
    next_slot_ += node->own_cops;
    if (next_slot_ > plan_->total_budget)
        throw Error("plan chain exceeds its computed budget");
    chain_.push_back(std::move(e));
    note("activate", std::string(plan_node_kind_tag(node->kind)));
}

std::vector<int> PlanExecutor::initial_placements(const Graph& g) {
    if (placed_) throw Error("initial_placements called twice");
    placed_ = true;
    append_entry(plan_->root.get());

    std::vector<int> positions;
    if (!initial_override_.empty()) {
        if (static_cast<int>(initial_override_.size()) != plan_->total_budget)
            throw InvalidArgument("initial override has the wrong cop count");
        positions = initial_override_;
    } else {
        auto posts = plan_->root->station_posts();
        int park = posts.empty() ? 0 : posts.front();
        positions.assign(plan_->total_budget, park);
        for (size_t q = 0; q < posts.size() && q < positions.size(); ++q)
            positions[q] = posts[q];
    }
    for (int v : positions) g.check_vertex(v);
    return positions;
}

void PlanExecutor::process_activations(const Observation& obs) {
    while (true) {
        size_t idx = chain_.size() - 1;
        const PlanNode* node = chain_[idx].node;
        if (node->kind == PlanNodeKind::ComponentBranch) {
            if (chain_[idx].chosen >= 0) return;  // child already running
            const PlanNode* parent = chain_[idx - 1].node;
            if (parent->protected_set.contains(obs.robber)) return;  // capture imminent
            int pick = -1;
            for (size_t c = 0; c < node->children.size(); ++c)
                if (node->children[c]->component_vertices.contains(obs.robber)) {
                    pick = static_cast<int>(c);
                    break;
                }
            if (pick < 0) return;  // robber outside this host; ancestors handle it
            chain_[idx].chosen = pick;
            note("branch", "component=" +
                               node->children[pick]->component_vertices.to_string());
            append_entry(node->children[pick].get());
            continue;
        }
        if (!node->children.empty() && chain_[idx].settled) {
            append_entry(node->children.front().get());
            continue;
        }
        return;
    }
}

std::vector<int> PlanExecutor::move(const Observation& obs) {
    process_activations(obs);
    std::vector<int> moves = obs.cop_positions;
    for (size_t i = 0; i < chain_.size(); ++i) entry_move(i, obs, moves);
    for (size_t i = 0; i < chain_.size(); ++i) post_update(i, moves, obs.robber);
    return moves;
}

void PlanExecutor::entry_move(size_t idx, const Observation& obs, std::vector<int>& moves) {
    Entry& e = chain_[idx];
    const PlanNode* node = e.node;

    // Surface a broken outer certificate instead of masking it: a settled
    // node must catch any rest on its protected set within one half-step.
    if (node->kind != PlanNodeKind::ComponentBranch && e.settled) {
        if (node->protected_set.contains(obs.robber)) {
            if (++e.u_streak >= 2)
                throw ProtectionViolation(
                    "robber rested twice on a protected set after the threshold");
        } else {
            e.u_streak = 0;
        }
    }

    switch (node->kind) {
        case PlanNodeKind::GeodesicGuard: guard_move(e, obs, moves); break;
        case PlanNodeKind::OneBallGuard: {
            int slot = e.slot_begin;
            int pos = moves[slot];
            if (pos != node->anchor) {
                moves[slot] = greedy_step(*plan_->root_graph, pos, node->anchor);
            } else if (plan_->root_graph->has_edge(node->anchor, obs.robber)) {
                moves[slot] = obs.robber;  // pin: capture on contact with the ball
                note("lunge", std::to_string(obs.robber));
            }
            break;
        }
        case PlanNodeKind::Patrol: patrol_move(e, obs, moves); break;
        case PlanNodeKind::BaseCase: base_move(e, obs, moves); break;
        case PlanNodeKind::CoverDispatch: cover_move(e, obs, moves); break;
        case PlanNodeKind::ComponentBranch: break;
    }
}

void PlanExecutor::guard_move(Entry& e, const Observation& obs, std::vector<int>& moves) {
    const PlanNode* node = e.node;
    int slot = e.slot_begin;
    int pos = moves[slot];
    int p0 = node->geodesic.front();
    if (!e.on_path) {
        if (pos == p0)
            e.on_path = true;
        else {
            moves[slot] = greedy_step(*plan_->root_graph, pos, p0);
            if (moves[slot] == p0) e.on_path = true;
            return;
        }
    }
    // On the path: close in on the robber's shadow.
    int shadow = node->shadow_index[obs.robber];
    if (shadow < 0) return;  // robber outside the host; hold position
    auto it = std::find(node->geodesic.begin(), node->geodesic.end(), pos);
    if (it == node->geodesic.end()) throw Error("guard left its geodesic");
    int at = static_cast<int>(it - node->geodesic.begin());
    if (at < shadow)
        moves[slot] = node->geodesic[at + 1];
    else if (at > shadow)
        moves[slot] = node->geodesic[at - 1];
}

void PlanExecutor::patrol_move(Entry& e, const Observation& obs, std::vector<int>& moves) {
    const PlanNode* node = e.node;
    const Subgraph& host = *node->host;
    int s = node->patrol_s;
    int cap = node->patrol_cap;
    int v = node->anchor;

    if (!e.gathered) {
        for (int q = 0; q < e.slot_count; ++q) {
            int slot = e.slot_begin + q;
            if (moves[slot] != v) moves[slot] = greedy_step(*plan_->root_graph, moves[slot], v);
        }
        return;
    }

    // Local step i: counters were primed when the gather completed, so the
    // first call here is local step 0 (no dispatch yet).
    int i_mod = e.cycle;
    if (e.local_count >= 1) {
        int j = i_mod;  // patrol dispatched this step
        VertexSet targets;
        if (in_host(host, obs.robber)) {
            VertexSet near_robber;
            {
                auto dist = bfs_distances(host.graph, to_sub(host, obs.robber));
                std::vector<int> members;
                for (int sv = 0; sv < host.graph.vertex_count(); ++sv)
                    if (dist[sv] != kUnreachable && dist[sv] <= s - 1)
                        members.push_back(host.to_parent[sv]);
                near_robber = VertexSet(std::move(members));
            }
            targets = node->protected_set.set_intersection(near_robber);
        }
        if (targets.size() > cap)
            throw ProtectionViolation("patrol dispatch target set exceeds the squad size");
        const auto& tv = targets.members();
        for (int m = 0; m < cap; ++m) {
            int slot_local = j * cap + m;
            e.targets[slot_local] = tv.empty() ? -1 : tv[m % tv.size()];
            if (logging_ && e.targets[slot_local] != -1)
                note("dispatch", "patrol=" + std::to_string(j) + " cop=" +
                                     std::to_string(slot_local) + " target=" +
                                     std::to_string(e.targets[slot_local]) + " dist=" +
                                     std::to_string(host_dist(host, v, e.targets[slot_local])) +
                                     " local=" + std::to_string(e.local_count) +
                                     " span=" + std::to_string(2 * s));
        }
    }

    for (int q = 0; q < e.slot_count; ++q) {
        int slot = e.slot_begin + q;
        int patrol = q / cap;
        int target = e.targets[q];
        if (target == -1) continue;  // idle at the hub
        int p = ((i_mod - patrol) % (2 * s) + 2 * s) % (2 * s);
        int d_out = host_dist(host, v, target);
        int pos = moves[slot];
        if (p < d_out) {
            moves[slot] = host_step(host, pos, target);
        } else if (p < s) {
            if (pos != target) throw ProtectionViolation("patrol cop missed its dwell window");
        } else if (p < s + d_out) {
            moves[slot] = host_step(host, pos, v);
        } else {
            if (pos != v) throw ProtectionViolation("patrol cop missed its return deadline");
        }
    }
}

void PlanExecutor::base_move(Entry& e, const Observation& obs, std::vector<int>& moves) {
    const PlanNode* node = e.node;
    const auto& posts = node->posts.members();
    if (!e.settled) {
        for (int q = 0; q < e.slot_count; ++q) {
            int slot = e.slot_begin + q;
            if (moves[slot] != posts[q])
                moves[slot] = greedy_step(*plan_->root_graph, moves[slot], posts[q]);
        }
        return;
    }
    // Settled: pounce on a robber resting next to a post.
    for (int q = 0; q < e.slot_count; ++q) {
        if (plan_->root_graph->has_edge(posts[q], obs.robber)) {
            moves[e.slot_begin + q] = obs.robber;
            note("lunge", std::to_string(obs.robber));
            return;
        }
    }
}

void PlanExecutor::cover_move(Entry& e, const Observation& obs, std::vector<int>& moves) {
    const PlanNode* node = e.node;
    const Subgraph& host = *node->host;
    auto posts = node->station_posts();

    if (e.phase == 0) {
        for (size_t q = 0; q < posts.size(); ++q) {
            int slot = e.slot_begin + static_cast<int>(q);
            if (moves[slot] != posts[q])
                moves[slot] = greedy_step(*plan_->root_graph, moves[slot], posts[q]);
        }
        return;
    }

    if (e.r0 == -1) {
        if (!in_host(host, obs.robber)) return;  // wait for the robber to be confined
        e.r0 = obs.robber;
        e.local_count = 1;
        note("observe-start", "r0=" + std::to_string(e.r0));
        // Dispatch assignments are a pure function of r0.
        const AdaptiveLevels& levels = node->levels_by_start.at(e.r0);
        for (int lvl = 2; lvl < static_cast<int>(levels.phi.size()); ++lvl) {
            for (const auto& [target, post] : levels.phi[lvl]) {
                // The post lives in C_{lvl-1}; find its squad slot.
                int base = 0;
                for (int j = 1; j < lvl - 1; ++j) base += node->cover.level(j).size();
                const auto& squad = node->cover.level(lvl - 1).members();
                auto it = std::lower_bound(squad.begin(), squad.end(), post);
                int q = base + static_cast<int>(it - squad.begin());
                e.targets[q] = target;
                note("dispatch", "level=" + std::to_string(lvl) + " post=" +
                                     std::to_string(post) + " target=" +
                                     std::to_string(target) + " deadline=" +
                                     std::to_string((1 << (lvl - 1)) + node->cover.d));
            }
        }
    } else {
        int cap = (1 << node->cover.t) + node->cover.d + 1;
        int old = e.local_count;
        e.local_count = std::min(e.local_count + 1, cap);
        if (e.local_count != old) {
            // The rest we now observe closed local step local_count-1; run the
            // confinement audit for any level whose checkpoint that was.
            for (int lvl = 1; lvl <= node->cover.t + 1; ++lvl)
                if (e.local_count - 1 == (1 << (lvl - 1)) + node->cover.d)
                    cover_audit(e, lvl, obs.robber);
        }
    }

    for (int q = 0; q < e.slot_count; ++q) {
        int slot = e.slot_begin + q;
        int target = e.targets[q];
        if (target == -1 || moves[slot] == target) continue;
        moves[slot] = host_step(host, moves[slot], target);
    }
}

void PlanExecutor::cover_audit(const Entry& e, int level, int robber) {
    const PlanNode* node = e.node;
    if (!in_host(*node->host, robber)) {
        note("audit-skip", "level=" + std::to_string(level) + " robber-outside-host");
        return;
    }
    const AdaptiveLevels& levels = node->levels_by_start.at(e.r0);
    if (node->x_set.contains(robber)) {
        if (!levels.a_sets[level].contains(robber))
            throw ProtectionViolation("confinement audit: robber in x outside A_" +
                                      std::to_string(level));
        note("audit-A", "level=" + std::to_string(level) + " robber=" + std::to_string(robber));
        return;
    }
    for (const auto& [component, boundary] : node->x_components) {
        if (!component.contains(robber)) continue;
        if (!boundary.is_subset_of(levels.n_sets[level]))
            throw ProtectionViolation("confinement audit: component boundary escapes N_" +
                                      std::to_string(level));
        note("audit-B", "level=" + std::to_string(level) + " robber=" + std::to_string(robber));
        return;
    }
    throw ProtectionViolation("confinement audit: robber in no component of host - x");
}

void PlanExecutor::post_update(size_t idx, const std::vector<int>& moves, int robber) {
    Entry& e = chain_[idx];
    const PlanNode* node = e.node;
    switch (node->kind) {
        case PlanNodeKind::GeodesicGuard: {
            int pos = moves[e.slot_begin];
            if (!e.on_path && pos == node->geodesic.front()) e.on_path = true;
            if (e.on_path && node->shadow_index[robber] >= 0) {
                auto it = std::find(node->geodesic.begin(), node->geodesic.end(), pos);
                int at = static_cast<int>(it - node->geodesic.begin());
                if (at == node->shadow_index[robber]) {
                    if (!e.settled) note("settle", "guard");
                    e.settled = true;
                }
            }
            break;
        }
        case PlanNodeKind::OneBallGuard: {
            if (moves[e.slot_begin] == node->anchor && !e.settled) {
                e.settled = true;
                note("settle", "one-ball");
            }
            break;
        }
        case PlanNodeKind::Patrol: {
            if (!e.gathered) {
                bool all = true;
                for (int q = 0; q < e.slot_count && all; ++q)
                    if (moves[e.slot_begin + q] != node->anchor) all = false;
                if (all) {
                    e.gathered = true;
                    e.cycle = 0;
                    e.local_count = 0;  // next call is local step 0
                    note("gathered", std::to_string(node->anchor));
                }
            } else {
                e.cycle = (e.cycle + 1) % (2 * node->patrol_s);
                e.local_count = std::min(e.local_count + 1, node->patrol_s + 1);
                if (!e.settled && e.local_count >= node->patrol_s) {
                    e.settled = true;
                    note("settle", "patrol");
                }
            }
            break;
        }
        case PlanNodeKind::BaseCase: {
            if (!e.settled) {
                const auto& posts = node->posts.members();
                bool all = true;
                for (int q = 0; q < e.slot_count && all; ++q)
                    if (moves[e.slot_begin + q] != posts[q]) all = false;
                if (all) {
                    e.settled = true;
                    note("settle", "base");
                }
            }
            break;
        }
        case PlanNodeKind::CoverDispatch: {
            if (e.phase == 0) {
                auto posts = node->station_posts();
                bool all = true;
                for (size_t q = 0; q < posts.size() && all; ++q)
                    if (moves[e.slot_begin + static_cast<int>(q)] != posts[q]) all = false;
                if (all) {
                    e.phase = 1;
                    note("stationed", "");
                }
            } else if (e.r0 != -1) {
                // Dispatch deadline check: by the end of local step 2^(i-1)+d
                // every level-i target must be occupied by its cop.
                const AdaptiveLevels& levels = node->levels_by_start.at(e.r0);
                for (int lvl = 2; lvl <= node->cover.t + 1; ++lvl) {
                    if (e.local_count < (1 << (lvl - 1)) + node->cover.d) continue;
                    for (int q = 0; q < e.slot_count; ++q)
                        if (e.targets[q] != -1 && levels.d_sets[lvl].contains(e.targets[q]) &&
                            moves[e.slot_begin + q] != e.targets[q])
                            throw ProtectionViolation("cover dispatch missed its deadline");
                }
                if (!e.settled && e.local_count >= (1 << node->cover.t) + node->cover.d) {
                    e.settled = true;
                    note("settle", "cover-dispatch");
                }
            }
            break;
        }
        case PlanNodeKind::ComponentBranch:
            e.settled = true;
            break;
    }
}

std::string PlanExecutor::digest() const {
    std::ostringstream os;
    os << (placed_ ? 1 : 0) << ';' << next_slot_ << ';';
    for (const auto& e : chain_) {
        os << static_cast<int>(e.node->kind) << ',' << (e.settled ? 1 : 0) << ','
           << e.u_streak << ',' << (e.on_path ? 1 : 0) << ',' << (e.gathered ? 1 : 0) << ','
           << e.cycle << ',' << e.local_count << ',' << e.phase << ',' << e.r0 << ','
           << e.chosen << ':';
        for (int t : e.targets) os << t << '.';
        os << '|';
    }
    return os.str();
}

std::unique_ptr<CopStrategy> PlanExecutor::clone() const {
    return std::make_unique<PlanExecutor>(*this);
}

}  // namespace copshield
