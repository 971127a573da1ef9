#ifndef COPSHIELD_GAME_HPP
#define COPSHIELD_GAME_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "copshield/graph.hpp"

namespace copshield {

inline constexpr int kUnplaced = -1;

enum class Phase { CopPlacement, RobberPlacement, CopMove, RobberMove };

const char* phase_tag(Phase p);

/// Full-information view handed to both sides before each half-step.
struct Observation {
    const Graph* graph;
    long long step;                  // 0 during placement
    Phase phase;
    std::vector<int> cop_positions;  // positions before the move being requested
    int robber_position;             // kUnplaced until the robber places
};

/// Deterministic cop controller. A strategy must be replayable: digest()
/// encodes all mutable state, and together with future observations it
/// determines all future outputs. That contract is what makes exhaustive
/// best-response search sound. Strategies must track time in their own state
/// (with bounded counters) rather than reading Observation::step: the search
/// saturates the step field, and unbounded counters would make the reachable
/// state space infinite.
class CopStrategy {
public:
    virtual ~CopStrategy() = default;
    virtual int cop_count() const = 0;
    virtual std::vector<int> initial_placements(const Graph& g) = 0;
    virtual std::vector<int> move(const Observation& obs) = 0;
    virtual std::string digest() const = 0;
    virtual std::unique_ptr<CopStrategy> clone() const = 0;
};

class RobberStrategy {
public:
    virtual ~RobberStrategy() = default;
    virtual int initial_placement(const Graph& g, const std::vector<int>& cop_positions) = 0;
    virtual int move(const Observation& obs) = 0;
};

struct Snapshot {
    long long step;
    Phase phase;
    std::vector<int> cops;
    int robber;
    bool captured;
};

enum class Outcome { Captured, SurvivedToHorizon, RepetitionDetected };

struct Trace {
    std::vector<Snapshot> snapshots;
    Outcome outcome = Outcome::SurvivedToHorizon;
    long long capture_step = -1;

    bool captured() const { return outcome == Outcome::Captured; }
    // One line per half-step: step, phase tag, cop list, robber, captured flag.
    std::string to_text() const;
};

struct GameState {
    std::vector<int> cop_positions;
    int robber_position = kUnplaced;
    long long step = 0;
    Phase phase = Phase::CopPlacement;
    bool captured = false;
};

long long default_horizon(const Graph& g);  // 4 |V|^2

/// Plays cops-then-robber rounds with capture checked after every half-step.
/// Ends at capture, at the horizon, or when the full state (cop digest, all
/// positions) repeats at a step boundary, which against a deterministic cop
/// strategy certifies that the robber can evade forever.
Trace run_game(const Graph& g, CopStrategy& cops, RobberStrategy& robber,
               long long horizon = 0);

struct ProtectionCertificate {
    VertexSet protected_set;
    int cop_budget = 1;
    long long threshold_step = 0;  // the constant c of the protection guarantee
};

// --- Basic strategies -------------------------------------------------------

class StationaryCops final : public CopStrategy {
public:
    explicit StationaryCops(std::vector<int> positions);
    int cop_count() const override;
    std::vector<int> initial_placements(const Graph& g) override;
    std::vector<int> move(const Observation& obs) override;
    std::string digest() const override { return ""; }
    std::unique_ptr<CopStrategy> clone() const override;

private:
    std::vector<int> positions_;
};

class ScriptedCops final : public CopStrategy {
public:
    // moves[i] is the position vector after the cop half-step of step i+1.
    ScriptedCops(std::vector<int> placement, std::vector<std::vector<int>> moves);
    int cop_count() const override;
    std::vector<int> initial_placements(const Graph& g) override;
    std::vector<int> move(const Observation& obs) override;
    std::string digest() const override;
    std::unique_ptr<CopStrategy> clone() const override;

private:
    std::vector<int> placement_;
    std::vector<std::vector<int>> moves_;
    size_t next_ = 0;
};

class StationaryRobber final : public RobberStrategy {
public:
    explicit StationaryRobber(int vertex) : vertex_(vertex) {}
    int initial_placement(const Graph&, const std::vector<int>&) override { return vertex_; }
    int move(const Observation&) override { return vertex_; }

private:
    int vertex_;
};

class ScriptedRobber final : public RobberStrategy {
public:
    ScriptedRobber(int placement, std::vector<int> moves);
    int initial_placement(const Graph&, const std::vector<int>&) override;
    int move(const Observation& obs) override;

private:
    int placement_;
    std::vector<int> moves_;
    size_t next_ = 0;
};

/// Moves to maximize distance to the nearest cop; prefers the current vertex
/// on ties, then the lowest id. Places at a vertex maximizing that distance.
class GreedyEvader final : public RobberStrategy {
public:
    int initial_placement(const Graph& g, const std::vector<int>& cops) override;
    int move(const Observation& obs) override;
};

class RandomWalker final : public RobberStrategy {
public:
    explicit RandomWalker(uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {}
    int initial_placement(const Graph& g, const std::vector<int>& cops) override;
    int move(const Observation& obs) override;

private:
    uint64_t next_raw();
    uint64_t state_;
};

// Replays a trace through a fresh engine run and checks that every snapshot
// is reproduced. Returns false on the first divergence.
bool replay_matches(const Graph& g, const Trace& trace);

}  // namespace copshield

#endif
