#include "copshield/plan.hpp"

#include <json.hpp>

#include "copshield/errors.hpp"

namespace copshield {

const char* plan_node_kind_tag(PlanNodeKind k) {
    switch (k) {
        case PlanNodeKind::GeodesicGuard: return "geodesic-guard";
        case PlanNodeKind::OneBallGuard: return "one-ball-guard";
        case PlanNodeKind::Patrol: return "patrol";
        case PlanNodeKind::BaseCase: return "base-case";
        case PlanNodeKind::CoverDispatch: return "cover-dispatch";
        case PlanNodeKind::ComponentBranch: return "component-branch";
    }
    return "?";
}

std::vector<int> PlanNode::station_posts() const {
    switch (kind) {
        case PlanNodeKind::GeodesicGuard: return {geodesic.front()};
        case PlanNodeKind::OneBallGuard: return {anchor};
        case PlanNodeKind::Patrol: return std::vector<int>(own_cops, anchor);
        case PlanNodeKind::BaseCase: {
            return posts.members();
        }
        case PlanNodeKind::CoverDispatch: {
            std::vector<int> out;
            for (const auto& level : cover.sets)
                for (int v : level) out.push_back(v);
            return out;
        }
        case PlanNodeKind::ComponentBranch: return {};
    }
    return {};
}

const PlanNode* PlanNode::branch_child() const {
    if (kind == PlanNodeKind::ComponentBranch) return nullptr;
    return children.empty() ? nullptr : children.front().get();
}

namespace {

int subtree_budget(PlanNode& node) {
    int below = 0;
    if (node.kind == PlanNodeKind::ComponentBranch) {
        for (auto& child : node.children) below = std::max(below, subtree_budget(*child));
        node.budget = below;
        return below;
    }
    if (!node.children.empty()) below = subtree_budget(*node.children.front());
    node.budget = node.own_cops + below;
    return node.budget;
}

long long walk_bound(const Graph& root, const PlanNode& node) {
    long long bound = 0;
    for (int post : node.station_posts()) bound = std::max<long long>(bound, eccentricity(root, post));
    return bound;
}

long long settle_offset(const PlanNode& node) {
    switch (node.kind) {
        case PlanNodeKind::GeodesicGuard:
            return 2LL * (static_cast<long long>(node.geodesic.size()) - 1) + 1;
        case PlanNodeKind::OneBallGuard: return 1;
        case PlanNodeKind::Patrol: return node.patrol_s + 2;
        case PlanNodeKind::BaseCase: return 1;
        case PlanNodeKind::CoverDispatch:
            return (1LL << node.cover.t) + node.cover.d + 2;
        case PlanNodeKind::ComponentBranch: return 0;
    }
    return 0;
}

// threshold(node) = steps by which the node is guaranteed settled, assuming
// activation no later than `activation`. Conservative: approach walks are
// bounded by post eccentricities in the root graph.
long long assign_thresholds(const Graph& root, PlanNode& node, long long activation) {
    if (node.kind == PlanNodeKind::ComponentBranch) {
        node.threshold = activation;
        long long deepest = activation;
        for (auto& child : node.children)
            deepest = std::max(deepest,
                               assign_thresholds(root, *child, activation + 1));
        return deepest;
    }
    node.threshold = activation + walk_bound(root, node) + settle_offset(node);
    long long deepest = node.threshold;
    if (!node.children.empty())
        deepest = std::max(deepest,
                           assign_thresholds(root, *node.children.front(), node.threshold + 1));
    return deepest;
}

nlohmann::json node_json(const PlanNode& node) {
    nlohmann::json j;
    j["kind"] = plan_node_kind_tag(node.kind);
    j["cops"] = node.own_cops;
    j["budget"] = node.budget;
    j["threshold"] = node.threshold;
    j["protected"] = node.protected_set.members();
    j["removed"] = node.removed.members();
    if (!node.component_vertices.empty())
        j["component"] = node.component_vertices.members();
    switch (node.kind) {
        case PlanNodeKind::GeodesicGuard: j["geodesic"] = node.geodesic; break;
        case PlanNodeKind::OneBallGuard: j["anchor"] = node.anchor; break;
        case PlanNodeKind::Patrol:
            j["anchor"] = node.anchor;
            j["s"] = node.patrol_s;
            j["squad"] = node.patrol_cap;
            j["x"] = node.x_set.members();
            break;
        case PlanNodeKind::BaseCase:
            j["posts"] = node.posts.members();
            if (node.fallback) j["fallback"] = true;
            break;
        case PlanNodeKind::CoverDispatch: {
            j["x"] = node.x_set.members();
            nlohmann::json sets = nlohmann::json::array();
            for (const auto& level : node.cover.sets) sets.push_back(level.members());
            j["cover_sets"] = sets;
            j["t"] = node.cover.t;
            j["alpha"] = node.cover.alpha;
            j["seed"] = node.cover.seed;
            j["resamples"] = node.cover.resample_counts;
            break;
        }
        case PlanNodeKind::ComponentBranch: break;
    }
    if (!node.note.empty()) j["note"] = node.note;
    if (!node.children.empty()) {
        nlohmann::json kids = nlohmann::json::array();
        for (const auto& child : node.children) kids.push_back(node_json(*child));
        j["children"] = kids;
    }
    return j;
}

}  // namespace

void finalize_plan(ProtectionPlan& plan) {
    if (!plan.root) throw Error("finalize_plan: empty plan");
    subtree_budget(*plan.root);
    plan.total_budget = plan.root->budget;
    plan.certificate_threshold = assign_thresholds(*plan.root_graph, *plan.root, 1);
    // Fallbacks anywhere in the tree taint the whole plan's budget law.
    std::vector<const PlanNode*> stack{plan.root.get()};
    plan.has_fallback = false;
    while (!stack.empty()) {
        const PlanNode* at = stack.back();
        stack.pop_back();
        if (at->fallback) plan.has_fallback = true;
        for (const auto& child : at->children) stack.push_back(child.get());
    }
}

ProtectionCertificate plan_certificate(const ProtectionPlan& plan, VertexSet protected_set) {
    ProtectionCertificate cert;
    cert.protected_set = std::move(protected_set);
    cert.cop_budget = plan.total_budget;
    cert.threshold_step = plan.certificate_threshold;
    return cert;
}

std::string ProtectionPlan::to_json_text() const {
    nlohmann::json j;
    j["graph"] = root_graph->name();
    j["n"] = root_graph->vertex_count();
    j["budget"] = total_budget;
    j["threshold"] = certificate_threshold;
    j["fallback"] = has_fallback;
    j["root"] = node_json(*root);
    return j.dump(2);
}

}  // namespace copshield
