#include "copshield/game.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "copshield/errors.hpp"

namespace copshield {

const char* phase_tag(Phase p) {
    switch (p) {
        case Phase::CopPlacement: return "cop-placement";
        case Phase::RobberPlacement: return "robber-placement";
        case Phase::CopMove: return "cop-move";
        case Phase::RobberMove: return "robber-move";
    }
    return "?";
}

std::string Trace::to_text() const {
    std::ostringstream os;
    for (const auto& s : snapshots) {
        os << s.step << ' ' << phase_tag(s.phase) << ' ';
        if (s.cops.empty()) {
            os << '-';
        } else {
            for (size_t i = 0; i < s.cops.size(); ++i) {
                if (i) os << ',';
                os << s.cops[i];
            }
        }
        os << ' ';
        if (s.robber == kUnplaced)
            os << '-';
        else
            os << s.robber;
        os << ' ' << (s.captured ? 1 : 0) << '\n';
    }
    switch (outcome) {
        case Outcome::Captured: os << "outcome captured " << capture_step << '\n'; break;
        case Outcome::SurvivedToHorizon: os << "outcome survived -\n"; break;
        case Outcome::RepetitionDetected: os << "outcome repetition -\n"; break;
    }
    return os.str();
}

long long default_horizon(const Graph& g) {
    long long n = g.vertex_count();
    return 4 * n * n;
}

namespace {

void check_placement(const Graph& g, const std::vector<int>& positions, int expected,
                     long long step) {
    if (static_cast<int>(positions.size()) != expected)
        throw IllegalMove("strategy placed " + std::to_string(positions.size()) +
                              " cops, declared " + std::to_string(expected),
                          step);
    for (int v : positions)
        if (v < 0 || v >= g.vertex_count())
            throw IllegalMove("placement at invalid vertex " + std::to_string(v), step);
}

void check_cop_moves(const Graph& g, const std::vector<int>& before,
                     const std::vector<int>& after, long long step) {
    if (after.size() != before.size())
        throw IllegalMove("cop move changed the number of cops", step);
    for (size_t i = 0; i < after.size(); ++i) {
        int from = before[i], to = after[i];
        if (to < 0 || to >= g.vertex_count())
            throw IllegalMove("cop " + std::to_string(i) + " moved to invalid vertex " +
                                  std::to_string(to),
                              step);
        if (to != from && !g.has_edge(from, to))
            throw IllegalMove("cop " + std::to_string(i) + " jumped " +
                                  std::to_string(from) + "->" + std::to_string(to),
                              step);
    }
}

void check_robber_move(const Graph& g, int from, int to, long long step) {
    if (to < 0 || to >= g.vertex_count())
        throw IllegalMove("robber moved to invalid vertex " + std::to_string(to), step);
    if (to != from && !g.has_edge(from, to))
        throw IllegalMove("robber jumped " + std::to_string(from) + "->" +
                              std::to_string(to),
                          step);
}

bool on_cop(const std::vector<int>& cops, int robber) {
    return std::find(cops.begin(), cops.end(), robber) != cops.end();
}

std::string state_key(const CopStrategy& cops, const std::vector<int>& positions,
                      int robber) {
    std::string key = cops.digest();
    key += '#';
    for (int v : positions) {
        key += std::to_string(v);
        key += ',';
    }
    key += '|';
    key += std::to_string(robber);
    return key;
}

}  // namespace

Trace run_game(const Graph& g, CopStrategy& cops, RobberStrategy& robber,
               long long horizon) {
    if (!g.is_connected()) throw InvalidArgument("run_game requires a connected graph");
    if (horizon <= 0) horizon = default_horizon(g);

    Trace trace;
    GameState state;

    state.cop_positions = cops.initial_placements(g);
    check_placement(g, state.cop_positions, cops.cop_count(), 0);
    trace.snapshots.push_back({0, Phase::CopPlacement, state.cop_positions, kUnplaced, false});

    state.robber_position = robber.initial_placement(g, state.cop_positions);
    g.check_vertex(state.robber_position);
    state.captured = on_cop(state.cop_positions, state.robber_position);
    trace.snapshots.push_back(
        {0, Phase::RobberPlacement, state.cop_positions, state.robber_position, state.captured});
    if (state.captured) {
        trace.outcome = Outcome::Captured;
        trace.capture_step = 0;
        return trace;
    }

    std::unordered_set<std::string> seen;
    seen.insert(state_key(cops, state.cop_positions, state.robber_position));

    for (state.step = 1; state.step <= horizon; ++state.step) {
        Observation obs{&g, state.step, Phase::CopMove, state.cop_positions,
                        state.robber_position};
        auto moved = cops.move(obs);
        check_cop_moves(g, state.cop_positions, moved, state.step);
        state.cop_positions = std::move(moved);
        state.captured = on_cop(state.cop_positions, state.robber_position);
        trace.snapshots.push_back({state.step, Phase::CopMove, state.cop_positions,
                                   state.robber_position, state.captured});
        if (state.captured) {
            trace.outcome = Outcome::Captured;
            trace.capture_step = state.step;
            return trace;
        }

        Observation robs{&g, state.step, Phase::RobberMove, state.cop_positions,
                         state.robber_position};
        int to = robber.move(robs);
        check_robber_move(g, state.robber_position, to, state.step);
        state.robber_position = to;
        state.captured = on_cop(state.cop_positions, state.robber_position);
        trace.snapshots.push_back({state.step, Phase::RobberMove, state.cop_positions,
                                   state.robber_position, state.captured});
        if (state.captured) {
            trace.outcome = Outcome::Captured;
            trace.capture_step = state.step;
            return trace;
        }

        if (!seen.insert(state_key(cops, state.cop_positions, state.robber_position)).second) {
            trace.outcome = Outcome::RepetitionDetected;
            return trace;
        }
    }
    trace.outcome = Outcome::SurvivedToHorizon;
    return trace;
}

// --- Basic strategies -------------------------------------------------------

StationaryCops::StationaryCops(std::vector<int> positions)
    : positions_(std::move(positions)) {
    if (positions_.empty()) throw InvalidArgument("a cop strategy needs at least one cop");
}

int StationaryCops::cop_count() const { return static_cast<int>(positions_.size()); }

std::vector<int> StationaryCops::initial_placements(const Graph& g) {
    for (int v : positions_) g.check_vertex(v);
    return positions_;
}

std::vector<int> StationaryCops::move(const Observation& obs) {
    return obs.cop_positions;
}

std::unique_ptr<CopStrategy> StationaryCops::clone() const {
    return std::make_unique<StationaryCops>(*this);
}

ScriptedCops::ScriptedCops(std::vector<int> placement, std::vector<std::vector<int>> moves)
    : placement_(std::move(placement)), moves_(std::move(moves)) {}

int ScriptedCops::cop_count() const { return static_cast<int>(placement_.size()); }

std::vector<int> ScriptedCops::initial_placements(const Graph&) { return placement_; }

std::vector<int> ScriptedCops::move(const Observation& obs) {
    if (next_ < moves_.size()) return moves_[next_++];
    return obs.cop_positions;  // script exhausted: hold position
}

std::string ScriptedCops::digest() const { return std::to_string(next_); }

std::unique_ptr<CopStrategy> ScriptedCops::clone() const {
    return std::make_unique<ScriptedCops>(*this);
}

ScriptedRobber::ScriptedRobber(int placement, std::vector<int> moves)
    : placement_(placement), moves_(std::move(moves)) {}

int ScriptedRobber::initial_placement(const Graph&, const std::vector<int>&) {
    return placement_;
}

int ScriptedRobber::move(const Observation& obs) {
    if (next_ < moves_.size()) return moves_[next_++];
    return obs.robber_position;
}

int GreedyEvader::initial_placement(const Graph& g, const std::vector<int>& cops) {
    std::vector<int> nearest(g.vertex_count(), g.vertex_count());
    for (int c : cops) {
        auto dist = bfs_distances(g, c);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (dist[v] != kUnreachable) nearest[v] = std::min(nearest[v], dist[v]);
    }
    int best = 0;
    for (int v = 1; v < g.vertex_count(); ++v)
        if (nearest[v] > nearest[best]) best = v;
    return best;
}

int GreedyEvader::move(const Observation& obs) {
    const Graph& g = *obs.graph;
    std::vector<int> nearest(g.vertex_count(), g.vertex_count());
    for (int c : obs.cop_positions) {
        auto dist = bfs_distances(g, c);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (dist[v] != kUnreachable) nearest[v] = std::min(nearest[v], dist[v]);
    }
    int best = obs.robber_position;
    for (int w : g.neighbors(obs.robber_position))
        if (nearest[w] > nearest[best]) best = w;
    return best;
}

uint64_t RandomWalker::next_raw() {
    // splitmix64
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

int RandomWalker::initial_placement(const Graph& g, const std::vector<int>& cops) {
    // Pick uniformly among vertices without a cop if any exist.
    std::vector<int> free;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (std::find(cops.begin(), cops.end(), v) == cops.end()) free.push_back(v);
    if (free.empty()) return static_cast<int>(next_raw() % g.vertex_count());
    return free[next_raw() % free.size()];
}

int RandomWalker::move(const Observation& obs) {
    const auto& nb = obs.graph->neighbors(obs.robber_position);
    size_t options = nb.size() + 1;
    size_t pick = next_raw() % options;
    return pick == nb.size() ? obs.robber_position : nb[pick];
}

bool replay_matches(const Graph& g, const Trace& trace) {
    if (trace.snapshots.size() < 2) return false;
    std::vector<int> placement = trace.snapshots[0].cops;
    std::vector<std::vector<int>> cop_moves;
    int robber_placement = trace.snapshots[1].robber;
    std::vector<int> robber_moves;
    for (const auto& s : trace.snapshots) {
        if (s.phase == Phase::CopMove) cop_moves.push_back(s.cops);
        if (s.phase == Phase::RobberMove) robber_moves.push_back(s.robber);
    }
    ScriptedCops cops(placement, cop_moves);
    ScriptedRobber robber(robber_placement, robber_moves);
    long long horizon = std::max<long long>(1, trace.snapshots.back().step + 1);
    Trace replay = run_game(g, cops, robber, horizon);
    size_t upto = std::min(replay.snapshots.size(), trace.snapshots.size());
    for (size_t i = 0; i < upto; ++i) {
        const auto& a = replay.snapshots[i];
        const auto& b = trace.snapshots[i];
        if (a.step != b.step || a.phase != b.phase || a.cops != b.cops ||
            a.robber != b.robber || a.captured != b.captured)
            return false;
    }
    return upto == trace.snapshots.size();
}

}  // namespace copshield
