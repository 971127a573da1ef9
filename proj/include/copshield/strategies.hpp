#ifndef COPSHIELD_STRATEGIES_HPP
#define COPSHIELD_STRATEGIES_HPP

#include <functional>
#include <memory>
#include <optional>

#include "copshield/bounds.hpp"
#include "copshield/executor.hpp"
#include "copshield/plan.hpp"

namespace copshield {

/// A plan-backed strategy together with its protection certificate.
struct StrategyBundle {
    std::shared_ptr<const ProtectionPlan> plan;
    ProtectionCertificate certificate;

    std::unique_ptr<PlanExecutor> make() const {
        return std::make_unique<PlanExecutor>(plan);
    }
};

/// One cop protects the vertex set of a geodesic by walking to its first
/// vertex and then tracking the robber's shadow, the path vertex indexed by
/// the robber's distance from the start (clamped to the path length). The
/// shadow shifts by at most one per robber move, so once the cop stands on
/// it, any robber rest on the path is caught within a half-step.
StrategyBundle geodesic_guard(const Graph& g, const Geodesic& p);

/// 2sK cops protect the x-vertices within distance s of hub v, provided every
/// radius-(s-1) ball holds at most K x-vertices: squads rotate on a 2s-step
/// shift cycle, each dispatch covering every x-vertex the robber could be on
/// s-1 steps later.
StrategyBundle build_patrol(const Graph& g, const VertexSet& x, int v, int s, int cap);

struct EpsilonResult {
    StrategyBundle bundle;
    long long vertex_cover_size = 0;
    BigInt additive_constant;  // (3/eps)^(2/eps) + 1
};

/// Recursive capture strategy with budget at most eps*vc(G) + c: protect a
/// diameter geodesic, a heavy unit ball, or a heavy radius-2 ball (in that
/// order) and recurse on the robber's component; when no reduction applies
/// the vertex cover is small and the cops simply occupy a minimum cover.
EpsilonResult epsilon_strategy(const Graph& g, const Rational& eps);

struct MainOverrides {
    std::optional<double> alpha;             // research mode: forces the dispatch endgame
    std::optional<long long> base_threshold; // replaces the f(k,d) base-case bound
    uint64_t seed = 1;
};

/// Protection of an arbitrary set x with budget |x|/k plus an additive term:
/// reduce through geodesics and heavy balls while they exist, otherwise
/// station cops on sampled cover sets and dispatch them along Hall matchings
/// to the adaptive levels computed from the robber's observed start.
StrategyBundle main_strategy(const Graph& g, const VertexSet& x, int k, int d,
                             const MainOverrides& overrides = {});

struct MeynielResult {
    StrategyBundle bundle;
    VertexSet cover;
    int k = 2;
    bool k_clamped = true;
    BoundReport report;
};

/// End-to-end capture strategy: protect a minimum vertex cover via
/// main_strategy (d=2, components of the complement are single vertices),
/// then send one final cop into the robber's confined component.
MeynielResult meyniel_vc_strategy(const Graph& g, const MainOverrides& overrides = {},
                                  std::optional<int> k_override = std::nullopt);

// --- Generic protect-and-confine composition --------------------------------

struct ProtectedStrategy {
    std::shared_ptr<const CopStrategy> prototype;  // cloned per game
    ProtectionCertificate certificate;
};

/// Builds the inner strategy for one component of g - U. The strategy plays
/// on the component subgraph (sub ids); the composition translates moves.
using InnerFactory = std::function<ProtectedStrategy(const Subgraph& component)>;

/// Runs the outer strategy until its threshold passes and the robber rests
/// outside U, reads the robber's component of g - U, walks the inner cops to
/// the placements the component strategy asks for, and runs it there. The
/// combined budget is outer plus the maximum inner budget over components.
ProtectedStrategy compose_protection(const Graph& g, const ProtectedStrategy& outer,
                                     const InnerFactory& inner_factory, VertexSet w);

}  // namespace copshield

#endif
