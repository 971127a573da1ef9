#ifndef COPSHIELD_PLAN_HPP
#define COPSHIELD_PLAN_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "copshield/adaptive_levels.hpp"
#include "copshield/cover_sets.hpp"
#include "copshield/game.hpp"
#include "copshield/graph.hpp"

namespace copshield {

enum class PlanNodeKind {
    GeodesicGuard,   // one cop shadowing a geodesic
    OneBallGuard,    // one cop pinning a radius-1 ball
    Patrol,          // 2sK cops cycling between a hub and dispatch targets
    BaseCase,        // one cop parked on each vertex of a set
    CoverDispatch,   // sampled cover posts plus adaptive dispatches
    ComponentBranch  // robber-dependent selection of a per-component subplan
};

const char* plan_node_kind_tag(PlanNodeKind k);

/// One protect-and-confine step. All vertex data is in root-graph ids; the
/// host subgraph retains the id maps for metric queries inside the component
/// the node plays in. Children: an operational node carries at most one
/// ComponentBranch child, which activates once the node has settled and the
/// robber sits outside the protected set; a ComponentBranch carries one child
/// subplan per component of host - removed.
struct PlanNode {
    PlanNodeKind kind;
    int own_cops = 0;
    int budget = 0;              // own + max over branch children (subtree)
    long long threshold = 0;     // conservative global settle bound
    VertexSet protected_set;     // U: what this node's certificate covers
    VertexSet removed;           // deleted before recursing (components of host-removed)
    std::shared_ptr<const Subgraph> host;  // from_parent indexed by root ids
    VertexSet component_vertices;  // when this node is a branch child: its component

    // GeodesicGuard
    std::vector<int> geodesic;     // root ids, p0..pL
    std::vector<int> shadow_index; // per root id: min(L, dist_host(p0, v)), -1 off-host
    // OneBallGuard / Patrol hub
    int anchor = -1;
    // Patrol
    int patrol_s = 0;
    int patrol_cap = 0;  // cops per squad
    VertexSet x_set;     // X within the host, for patrol targets and dispatch
    // BaseCase
    VertexSet posts;
    // CoverDispatch
    CoverSets cover;
    std::map<int, AdaptiveLevels> levels_by_start;  // robber start (root id) -> levels
    // Components of host - x with their open neighborhoods, for the per-level
    // confinement audits.
    std::vector<std::pair<VertexSet, VertexSet>> x_components;
    bool fallback = false;  // construction degraded this subtree to a base case
    std::string note;

    std::vector<std::unique_ptr<PlanNode>> children;

    std::vector<int> station_posts() const;  // where this node's cops stand
    const PlanNode* branch_child() const;    // the ComponentBranch below, if any
};

struct ProtectionPlan {
    std::shared_ptr<const Graph> root_graph;
    std::unique_ptr<PlanNode> root;
    int total_budget = 0;                 // max over root-to-leaf chains
    long long certificate_threshold = 0;  // max leaf threshold
    bool has_fallback = false;

    std::string to_json_text() const;  // nested records for inspection/replay
};

// Fills budgets and thresholds bottom-up/top-down and the plan totals.
void finalize_plan(ProtectionPlan& plan);

ProtectionCertificate plan_certificate(const ProtectionPlan& plan, VertexSet protected_set);

}  // namespace copshield

#endif
