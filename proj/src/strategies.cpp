#include "copshield/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "copshield/errors.hpp"
#include "copshield/vertex_cover.hpp"

namespace copshield {

namespace {

std::shared_ptr<const Subgraph> whole_graph_host(const Graph& g) {
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    return std::make_shared<Subgraph>(induced_subgraph(g, VertexSet(all), g.name()));
}

VertexSet to_root_set(const Subgraph& host, const VertexSet& sub_set) {
    std::vector<int> members;
    for (int v : sub_set) members.push_back(host.to_parent[v]);
    return VertexSet(std::move(members));
}

VertexSet to_sub_set(const Subgraph& host, const VertexSet& root_set) {
    std::vector<int> members;
    for (int v : root_set)
        if (host.from_parent[v] >= 0) members.push_back(host.from_parent[v]);
    return VertexSet(std::move(members));
}

VertexSet host_ball_root(const Subgraph& host, int center_root, int radius) {
    return to_root_set(host, ball(host.graph, host.from_parent[center_root], radius));
}

std::unique_ptr<PlanNode> make_guard_node(const Graph& root,
                                          std::shared_ptr<const Subgraph> host,
                                          std::vector<int> geodesic_root) {
    auto node = std::make_unique<PlanNode>();
    node->kind = PlanNodeKind::GeodesicGuard;
    node->own_cops = 1;
    node->host = std::move(host);
    node->geodesic = std::move(geodesic_root);
    node->protected_set = VertexSet(node->geodesic);
    node->removed = node->protected_set;
    int L = static_cast<int>(node->geodesic.size()) - 1;
    node->shadow_index.assign(root.vertex_count(), -1);
    auto dist = bfs_distances(node->host->graph,
                              node->host->from_parent[node->geodesic.front()]);
    for (int sv = 0; sv < node->host->graph.vertex_count(); ++sv)
        if (dist[sv] != kUnreachable)
            node->shadow_index[node->host->to_parent[sv]] = std::min(L, dist[sv]);
    return node;
}

std::unique_ptr<PlanNode> make_oneball_node(std::shared_ptr<const Subgraph> host, int w_root) {
    auto node = std::make_unique<PlanNode>();
    node->kind = PlanNodeKind::OneBallGuard;
    node->own_cops = 1;
    node->anchor = w_root;
    node->protected_set = host_ball_root(*host, w_root, 1);
    node->removed = node->protected_set;
    node->host = std::move(host);
    return node;
}

std::unique_ptr<PlanNode> make_patrol_node(std::shared_ptr<const Subgraph> host,
                                           const VertexSet& x_root, int v_root, int s,
                                           int cap) {
    if (s < 1 || cap < 1) throw InvalidArgument("patrol needs s >= 1 and squad size >= 1");
    VertexSet x_sub = to_sub_set(*host, x_root);
    for (int w = 0; w < host->graph.vertex_count(); ++w) {
        int load = ball(host->graph, w, s - 1).set_intersection(x_sub).size();
        if (load > cap)
            throw PreconditionViolation(
                "patrol precondition violated: a radius-" + std::to_string(s - 1) +
                " ball holds " + std::to_string(load) + " x-vertices, cap " +
                std::to_string(cap));
    }
    auto node = std::make_unique<PlanNode>();
    node->kind = PlanNodeKind::Patrol;
    node->own_cops = 2 * s * cap;
    node->anchor = v_root;
    node->patrol_s = s;
    node->patrol_cap = cap;
    node->x_set = x_root.set_intersection(
        VertexSet(std::vector<int>(host->to_parent.begin(), host->to_parent.end())));
    node->protected_set = host_ball_root(*host, v_root, s).set_intersection(x_root);
    node->removed = node->protected_set;
    node->host = std::move(host);
    return node;
}

std::unique_ptr<PlanNode> make_base_node(std::shared_ptr<const Subgraph> host,
                                         const VertexSet& x_root) {
    auto node = std::make_unique<PlanNode>();
    node->kind = PlanNodeKind::BaseCase;
    node->posts = x_root.empty() ? VertexSet{host->to_parent.front()} : x_root;
    node->own_cops = node->posts.size();
    node->protected_set = node->posts;
    node->removed = node->posts;
    node->host = std::move(host);
    return node;
}

struct LevelBuild {
    std::map<int, AdaptiveLevels> levels_by_start;  // root ids
    bool top_level_empty = true;
};

// Verifies the dispatch endgame for every possible robber start: the final
// adaptive level must vanish and every dispatch wave must admit a matching
// into the previous cover set. Hall failures trigger a resample of the
// offending cover set (at most 32 in total); a nonempty final level cannot be
// fixed by resampling and reports failure so the caller can fall back.
std::optional<std::unique_ptr<PlanNode>> try_cover_node(
    std::shared_ptr<const Subgraph> host, const VertexSet& x_root, int k, int d,
    double alpha, uint64_t seed, std::string& fail_note) {
    VertexSet x_sub = to_sub_set(*host, x_root);
    CoverSets cs = sample_cover_sets(x_root, k, d, alpha, seed);
    LevelParams params{k, d, cs.t, alpha};

    int hall_resamples = 0;
    std::map<int, AdaptiveLevels> by_start;
restart:
    by_start.clear();
    for (int r0_sub = 0; r0_sub < host->graph.vertex_count(); ++r0_sub) {
        AdaptiveLevels lv = build_adaptive_levels(host->graph, x_sub, r0_sub, params);
        if (!lv.a_sets[params.t + 1].empty()) {
            fail_note = "final level nonempty for start " +
                        std::to_string(host->to_parent[r0_sub]);
            return std::nullopt;
        }
        for (int i = 2; i <= params.t + 1; ++i) {
            VertexSet c_sub = to_sub_set(*host, cs.level(i - 1));
            auto hm = hall_match(host->graph, lv.d_sets[i], c_sub, (1 << (i - 1)) + d);
            if (!hm.success) {
                if (++hall_resamples > 32)
                    throw RetryExhausted("no saturating matching after 32 cover resamples");
                resample_level(cs, x_root, i - 1);
                goto restart;
            }
            lv.phi[i] = std::move(hm.matching);
        }
        // Translate to root ids.
        AdaptiveLevels out = lv;
        out.r0 = host->to_parent[r0_sub];
        for (int i = 1; i <= params.t + 1; ++i) {
            out.a_sets[i] = to_root_set(*host, lv.a_sets[i]);
            out.d_sets[i] = to_root_set(*host, lv.d_sets[i]);
            out.n_sets[i] = to_root_set(*host, lv.n_sets[i]);
            out.phi[i].clear();
            if (i >= 2)
                for (auto [dv, cv] : lv.phi[i])
                    out.phi[i][host->to_parent[dv]] = host->to_parent[cv];
        }
        by_start[out.r0] = std::move(out);
    }

    auto node = std::make_unique<PlanNode>();
    node->kind = PlanNodeKind::CoverDispatch;
    node->x_set = x_root;
    node->protected_set = x_root;
    node->removed = x_root;
    node->cover = std::move(cs);
    node->levels_by_start = std::move(by_start);
    int own = 0;
    for (const auto& level : node->cover.sets) own += level.size();
    node->own_cops = std::max(own, 1);
    for (const auto& comp_sub : components_after_removal(host->graph, x_sub)) {
        VertexSet comp_root = to_root_set(*host, comp_sub);
        VertexSet boundary = to_root_set(*host, open_neighborhood_of_set(host->graph, comp_sub));
        node->x_components.emplace_back(comp_root, boundary);
    }
    node->host = std::move(host);
    return node;
}

// Canonical geodesic with the largest x-intersection over all ordered pairs.
struct GeodesicPick {
    std::vector<int> path_root;
    int x_hits = -1;
};

GeodesicPick best_geodesic_for(const Graph& root, const Subgraph& host,
                               const VertexSet& x_root) {
    GeodesicPick pick;
    int n = host.graph.vertex_count();
    for (int u = 0; u < n; ++u) {
        std::vector<int> parent(n, -1), dist(n, kUnreachable);
        std::vector<int> queue{u};
        dist[u] = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            int a = queue[head];
            for (int w : host.graph.neighbors(a))
                if (dist[w] == kUnreachable) {
                    dist[w] = dist[a] + 1;
                    parent[w] = a;
                    queue.push_back(w);
                }
        }
        for (int v = 0; v < n; ++v) {
            if (dist[v] == kUnreachable) continue;
            int hits = 0;
            std::vector<int> path;
            for (int w = v; w != -1; w = parent[w]) path.push_back(w);
            std::reverse(path.begin(), path.end());
            for (int w : path)
                if (x_root.contains(host.to_parent[w])) ++hits;
            if (hits > pick.x_hits) {
                pick.x_hits = hits;
                pick.path_root.clear();
                for (int w : path) pick.path_root.push_back(host.to_parent[w]);
            }
        }
    }
    (void)root;
    return pick;
}

void attach_component_children(const Graph& root, PlanNode& node,
                               const std::function<std::unique_ptr<PlanNode>(
                                   std::shared_ptr<const Subgraph>, const VertexSet&)>& build,
                               bool skip_empty_x, const VertexSet& x_root) {
    VertexSet removed_sub = to_sub_set(*node.host, node.removed);
    auto comps = components_after_removal(node.host->graph, removed_sub);
    auto branch = std::make_unique<PlanNode>();
    branch->kind = PlanNodeKind::ComponentBranch;
    branch->host = node.host;
    for (const auto& comp_sub : comps) {
        VertexSet comp_root = to_root_set(*node.host, comp_sub);
        VertexSet x_in = x_root.set_intersection(comp_root);
        if (skip_empty_x && x_in.empty()) continue;
        auto comp_host = std::make_shared<Subgraph>(induced_subgraph(root, comp_root));
        auto child = build(comp_host, x_in);
        child->component_vertices = comp_root;
        branch->children.push_back(std::move(child));
    }
    if (!branch->children.empty()) node.children.push_back(std::move(branch));
}

// --- epsilon-threshold recursion --------------------------------------------

std::unique_ptr<PlanNode> build_epsilon_node(const Graph& root,
                                             std::shared_ptr<const Subgraph> host,
                                             const Rational& eps, int depth) {
    if (depth > root.vertex_count() + 2) throw Error("epsilon recursion too deep");
    const Graph& h = host->graph;
    if (h.vertex_count() == 1) return make_base_node(host, {});

    VertexSet cover_sub = min_vertex_cover(h);
    VertexSet cover_root = to_root_set(*host, cover_sub);
    auto recurse = [&](std::shared_ptr<const Subgraph> comp_host, const VertexSet&) {
        return build_epsilon_node(root, comp_host, eps, depth + 1);
    };

    Geodesic longest = longest_geodesic(h);
    if (static_cast<long long>(longest.length()) * eps.num >= 2 * eps.den) {
        std::vector<int> path_root;
        for (int v : longest.vertices) path_root.push_back(host->to_parent[v]);
        auto node = make_guard_node(root, host, path_root);
        attach_component_children(root, *node, recurse, false, {});
        return node;
    }

    int best_w = -1, best_w_count = -1;
    int best_v2 = -1, best_v2_count = -1;
    for (int v = 0; v < h.vertex_count(); ++v) {
        int c1 = ball(h, v, 1).set_intersection(cover_sub).size();
        int c2 = ball(h, v, 2).set_intersection(cover_sub).size();
        if (c1 > best_w_count) {
            best_w_count = c1;
            best_w = v;
        }
        if (c2 > best_v2_count) {
            best_v2_count = c2;
            best_v2 = v;
        }
    }
    if (static_cast<long long>(best_w_count) * eps.num >= eps.den) {
        auto node = make_oneball_node(host, host->to_parent[best_w]);
        attach_component_children(root, *node, recurse, false, {});
        return node;
    }
    if (static_cast<long long>(best_v2_count) * eps.num * eps.num >= 4 * eps.den * eps.den) {
        int squad = static_cast<int>(eps.den / eps.num);  // floor(1/eps)
        auto node = make_patrol_node(host, cover_root, host->to_parent[best_v2], 2, squad);
        attach_component_children(root, *node, recurse, false, {});
        return node;
    }
    // No reduction applies: the remaining cover is below the additive
    // constant, so parking a cop on each cover vertex finishes the job.
    return make_base_node(host, cover_root);
}

// --- protection of a set x with budget |x|/k + threshold ---------------------

uint64_t mix_seed(uint64_t seed, int depth) {
    return seed * 1000003ull + static_cast<uint64_t>(depth) * 97ull + 17ull;
}

std::unique_ptr<PlanNode> build_main_node(const Graph& root,
                                          std::shared_ptr<const Subgraph> host,
                                          const VertexSet& x_root, int k, int d,
                                          const MainOverrides& ov, int depth) {
    if (depth > root.vertex_count() + 2) throw Error("recursion too deep");
    const Graph& h = host->graph;
    VertexSet x_sub = to_sub_set(*host, x_root);

    for (const auto& comp : components_after_removal(h, x_sub))
        if (set_diameter(h, comp) >= d)
            throw PreconditionViolation(
                "a component of host - x has diameter >= " + std::to_string(d));

    bool base;
    if (ov.base_threshold)
        base = x_root.size() <= *ov.base_threshold;
    else
        base = x_root.empty() ||
               std::log2(static_cast<double>(x_root.size())) <= log2_f(k, d);
    if (base) return make_base_node(host, x_root);

    auto recurse = [&](std::shared_ptr<const Subgraph> comp_host, const VertexSet& x_in) {
        return build_main_node(root, comp_host, x_in, k, d, ov, depth + 1);
    };

    if (!ov.alpha) {
        // Reduction: a geodesic or unit ball holding >= k x-vertices is
        // guarded by one cop and removed.
        GeodesicPick geo = best_geodesic_for(root, *host, x_root);
        int best_w = -1, best_w_count = -1;
        for (int v = 0; v < h.vertex_count(); ++v) {
            int c = ball(h, v, 1).set_intersection(x_sub).size();
            if (c > best_w_count) {
                best_w_count = c;
                best_w = v;
            }
        }
        if (geo.x_hits >= k || best_w_count >= k) {
            std::unique_ptr<PlanNode> node;
            if (geo.x_hits >= best_w_count)
                node = make_guard_node(root, host, geo.path_root);
            else
                node = make_oneball_node(host, host->to_parent[best_w]);
            attach_component_children(root, *node, recurse, true, x_root);
            return node;
        }

        // Reduction: smallest radius s whose densest ball crosses the growth
        // threshold s! 2^(s-1) k^s gets a patrol. Thresholds saturate once
        // they pass |x|, which caps the scan.
        long long squad_cap = static_cast<long long>(k);  // threshold at radius s-1
        for (int s = 2;; ++s) {
            long long threshold = squad_cap * 2 * k * s;
            if (threshold > x_root.size()) break;
            int best_v = -1, best_count = -1;
            for (int v = 0; v < h.vertex_count(); ++v) {
                int c = ball(h, v, s).set_intersection(x_sub).size();
                if (c > best_count) {
                    best_count = c;
                    best_v = v;
                }
            }
            if (best_count >= threshold) {
                auto node = make_patrol_node(host, x_root, host->to_parent[best_v], s,
                                             static_cast<int>(squad_cap));
                attach_component_children(root, *node, recurse, true, x_root);
                return node;
            }
            squad_cap = threshold;
        }
    }

    // Dispatch endgame: cops stationed on sampled cover sets, adaptive levels
    // computed per robber start and dispatched along Hall matchings.
    double alpha = ov.alpha ? *ov.alpha
                            : t_alpha(k, d, std::max<long long>(2, x_root.size())).alpha;
    std::string fail_note;
    auto cover = try_cover_node(host, x_root, k, d, alpha, mix_seed(ov.seed, depth),
                                fail_note);
    if (cover) return std::move(*cover);
    auto fallback = make_base_node(host, x_root);
    fallback->fallback = true;
    fallback->note = "dispatch endgame unavailable: " + fail_note;
    return fallback;
}

void collect_leaves(PlanNode& node, std::vector<PlanNode*>& out, PlanNodeKind kind) {
    if (node.kind == kind && node.children.empty()) out.push_back(&node);
    for (auto& child : node.children) collect_leaves(*child, out, kind);
}

}  // namespace

StrategyBundle geodesic_guard(const Graph& g, const Geodesic& p) {
    if (!is_geodesic(g, p.vertices))
        throw InvalidArgument("geodesic_guard: path is not a certified geodesic");
    auto plan = std::make_shared<ProtectionPlan>();
    plan->root_graph = std::make_shared<Graph>(g);
    plan->root = make_guard_node(*plan->root_graph, whole_graph_host(*plan->root_graph),
                                 p.vertices);
    finalize_plan(*plan);
    return {plan, plan_certificate(*plan, p.vertex_set())};
}

StrategyBundle build_patrol(const Graph& g, const VertexSet& x, int v, int s, int cap) {
    g.check_vertex(v);
    auto plan = std::make_shared<ProtectionPlan>();
    plan->root_graph = std::make_shared<Graph>(g);
    plan->root = make_patrol_node(whole_graph_host(*plan->root_graph), x, v, s, cap);
    finalize_plan(*plan);
    return {plan, plan_certificate(*plan, plan->root->protected_set)};
}

EpsilonResult epsilon_strategy(const Graph& g, const Rational& eps) {
    if (eps.num <= 0 || eps.value() > 1.0)
        throw InvalidArgument("epsilon must be in (0, 1]");
    if (!g.is_connected()) throw InvalidArgument("epsilon_strategy needs a connected graph");
    EpsilonResult result;
    result.vertex_cover_size = min_vertex_cover(g).size();
    result.additive_constant = epsilon_c(eps).c;

    auto plan = std::make_shared<ProtectionPlan>();
    plan->root_graph = std::make_shared<Graph>(g);
    plan->root = build_epsilon_node(*plan->root_graph, whole_graph_host(*plan->root_graph),
                                    eps, 0);
    finalize_plan(*plan);

    BigInt lhs = BigInt(plan->total_budget) * eps.den;
    BigInt rhs = BigInt(eps.num) * result.vertex_cover_size +
                 BigInt(eps.den) * result.additive_constant;
    if (lhs > rhs) throw Error("epsilon strategy exceeded its budget bound");

    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    result.bundle = {plan, plan_certificate(*plan, VertexSet(all))};
    return result;
}

StrategyBundle main_strategy(const Graph& g, const VertexSet& x, int k, int d,
                             const MainOverrides& overrides) {
    if (k < 2 || d < 2) throw InvalidArgument("main_strategy requires k, d >= 2");
    if (!g.is_connected()) throw InvalidArgument("main_strategy needs a connected graph");
    for (int v : x) g.check_vertex(v);
    auto plan = std::make_shared<ProtectionPlan>();
    plan->root_graph = std::make_shared<Graph>(g);
    plan->root = build_main_node(*plan->root_graph, whole_graph_host(*plan->root_graph), x,
                                 k, d, overrides, 0);
    finalize_plan(*plan);
    return {plan, plan_certificate(*plan, x)};
}

MeynielResult meyniel_vc_strategy(const Graph& g, const MainOverrides& overrides,
                                  std::optional<int> k_override) {
    if (!g.is_connected()) throw InvalidArgument("meyniel_vc_strategy needs a connected graph");
    MeynielResult result;
    result.cover = min_vertex_cover(g);
    long long x = result.cover.size();

    auto t2 = theorem2_k(std::max<long long>(2, x), 2);
    result.k = k_override ? std::max(2, *k_override) : static_cast<int>(t2.k);
    result.k_clamped = k_override ? (*k_override < 2) : t2.clamped;
    result.report = make_bound_report(result.k, 2, x, x, Rational(1, 1));

    auto plan = std::make_shared<ProtectionPlan>();
    plan->root_graph = std::make_shared<Graph>(g);
    const Graph& root = *plan->root_graph;
    plan->root = build_main_node(root, whole_graph_host(root), result.cover, result.k, 2,
                                 overrides, 0);

    // Every component of g - cover is a single vertex; after the cover is
    // protected, one extra cop walks into the robber's component and wins.
    // Base-case leaves already capture by pouncing from the cover, so only
    // dispatch-endgame leaves need the extra cop.
    auto comps = components_after_removal(root, result.cover);
    std::vector<PlanNode*> leaves;
    collect_leaves(*plan->root, leaves, PlanNodeKind::CoverDispatch);
    for (PlanNode* leaf : leaves) {
        auto branch = std::make_unique<PlanNode>();
        branch->kind = PlanNodeKind::ComponentBranch;
        branch->host = leaf->host;
        for (const auto& comp : comps) {
            if (comp.size() != 1)
                throw Error("complement of a vertex cover must be an independent set");
            auto comp_host = std::make_shared<Subgraph>(induced_subgraph(root, comp));
            auto child = make_base_node(comp_host, comp);
            child->component_vertices = comp;
            branch->children.push_back(std::move(child));
        }
        if (!branch->children.empty()) leaf->children.push_back(std::move(branch));
    }
    finalize_plan(*plan);

    std::vector<int> all(root.vertex_count());
    for (int v = 0; v < root.vertex_count(); ++v) all[v] = v;
    result.bundle = {plan, plan_certificate(*plan, VertexSet(all))};
    return result;
}

// --- Generic protect-and-confine composition --------------------------------

namespace {

struct CompositeShared {
    std::shared_ptr<const Graph> graph;
    ProtectedStrategy outer;
    VertexSet u;  // outer.certificate.protected_set
    std::vector<std::shared_ptr<const Subgraph>> components;
    std::vector<ProtectedStrategy> inners;  // aligned with components
    int outer_cops = 0;
    int pool = 0;  // max inner budget
};

class CompositeStrategy final : public CopStrategy {
public:
    explicit CompositeStrategy(std::shared_ptr<const CompositeShared> shared)
        : shared_(std::move(shared)) {}

    CompositeStrategy(const CompositeStrategy& other)
        : shared_(other.shared_),
          outer_(other.outer_ ? other.outer_->clone() : nullptr),
          inner_(other.inner_ ? other.inner_->clone() : nullptr),
          phase_(other.phase_),
          wait_count_(other.wait_count_),
          chosen_(other.chosen_),
          homes_(other.homes_),
          u_streak_(other.u_streak_) {}

    int cop_count() const override { return shared_->outer_cops + shared_->pool; }

    std::vector<int> initial_placements(const Graph& g) override {
        outer_ = shared_->outer.prototype->clone();
        auto placement = outer_->initial_placements(g);
        int park = placement.empty() ? 0 : placement.front();
        placement.resize(cop_count(), park);
        return placement;
    }

    std::vector<int> move(const Observation& obs) override {
        const Graph& g = *shared_->graph;
        std::vector<int> moves = obs.cop_positions;

        // Outer strategy always runs on its own slots.
        Observation outer_obs{&g, obs.step, Phase::CopMove,
                              std::vector<int>(moves.begin(), moves.begin() + shared_->outer_cops),
                              obs.robber_position};
        auto outer_moves = outer_->move(outer_obs);
        std::copy(outer_moves.begin(), outer_moves.end(), moves.begin());

        if (phase_ == 0) {
            wait_count_ = std::min(wait_count_ + 1,
                                   shared_->outer.certificate.threshold_step + 1);
            if (wait_count_ > shared_->outer.certificate.threshold_step &&
                !shared_->u.contains(obs.robber_position)) {
                for (size_t c = 0; c < shared_->components.size(); ++c) {
                    if (shared_->components[c]->from_parent[obs.robber_position] >= 0) {
                        chosen_ = static_cast<int>(c);
                        break;
                    }
                }
                if (chosen_ >= 0) {
                    inner_ = shared_->inners[chosen_].prototype->clone();
                    auto sub_homes =
                        inner_->initial_placements(shared_->components[chosen_]->graph);
                    homes_.clear();
                    for (int sv : sub_homes)
                        homes_.push_back(shared_->components[chosen_]->to_parent[sv]);
                    phase_ = 1;
                }
            }
        }

        if (phase_ == 1) {
            bool all_home = true;
            for (size_t q = 0; q < homes_.size(); ++q) {
                int slot = shared_->outer_cops + static_cast<int>(q);
                if (moves[slot] != homes_[q]) {
                    moves[slot] = greedy_step(g, moves[slot], homes_[q]);
                    if (moves[slot] != homes_[q]) all_home = false;
                }
            }
            if (all_home) phase_ = 2;
            return moves;
        }

        if (phase_ == 2) {
            const Subgraph& comp = *shared_->components[chosen_];
            int robber_sub = comp.from_parent[obs.robber_position];
            if (shared_->u.contains(obs.robber_position)) {
                if (++u_streak_ >= 2)
                    throw ProtectionViolation(
                        "robber rested twice on the outer protected set after the threshold");
            } else {
                u_streak_ = 0;
            }
            if (robber_sub < 0) return moves;  // outside the component: hold and let the outer act
            std::vector<int> inner_pos;
            for (size_t q = 0; q < homes_.size(); ++q)
                inner_pos.push_back(comp.from_parent[moves[shared_->outer_cops + q]]);
            Observation inner_obs{&comp.graph, obs.step, Phase::CopMove, inner_pos,
                                  robber_sub};
            auto inner_moves = inner_->move(inner_obs);
            for (size_t q = 0; q < inner_moves.size(); ++q)
                moves[shared_->outer_cops + q] = comp.to_parent[inner_moves[q]];
        }
        return moves;
    }

    std::string digest() const override {
        std::string s = outer_ ? outer_->digest() : "";
        s += '~';
        s += std::to_string(phase_) + "," + std::to_string(wait_count_) + "," +
             std::to_string(chosen_) + "," + std::to_string(u_streak_) + "~";
        if (inner_) s += inner_->digest();
        return s;
    }

    std::unique_ptr<CopStrategy> clone() const override {
        return std::make_unique<CompositeStrategy>(*this);
    }

private:
    std::shared_ptr<const CompositeShared> shared_;
    std::unique_ptr<CopStrategy> outer_;
    std::unique_ptr<CopStrategy> inner_;
    int phase_ = 0;
    long long wait_count_ = 0;
    int chosen_ = -1;
    std::vector<int> homes_;
    int u_streak_ = 0;
};

}  // namespace

ProtectedStrategy compose_protection(const Graph& g, const ProtectedStrategy& outer,
                                     const InnerFactory& inner_factory, VertexSet w) {
    auto shared = std::make_shared<CompositeShared>();
    shared->graph = std::make_shared<Graph>(g);
    shared->outer = outer;
    shared->u = outer.certificate.protected_set;
    shared->outer_cops = outer.prototype->cop_count();

    long long max_inner_threshold = 0;
    for (const auto& comp : components_after_removal(g, shared->u)) {
        auto sub = std::make_shared<Subgraph>(induced_subgraph(g, comp));
        ProtectedStrategy inner = inner_factory(*sub);
        shared->pool = std::max(shared->pool, inner.prototype->cop_count());
        max_inner_threshold =
            std::max(max_inner_threshold, inner.certificate.threshold_step);
        shared->components.push_back(std::move(sub));
        shared->inners.push_back(std::move(inner));
    }

    ProtectedStrategy result;
    result.certificate.protected_set = std::move(w);
    result.certificate.cop_budget = shared->outer_cops + shared->pool;
    result.certificate.threshold_step = outer.certificate.threshold_step + 1 +
                                        (g.vertex_count() - 1) + max_inner_threshold + 1;
    result.prototype = std::make_shared<CompositeStrategy>(
        std::static_pointer_cast<const CompositeShared>(shared));
    return result;
}

}  // namespace copshield
