#ifndef COPSHIELD_EXECUTOR_HPP
#define COPSHIELD_EXECUTOR_HPP

#include <memory>

#include "copshield/plan.hpp"

namespace copshield {

struct ExecEvent {
    std::string kind;
    std::string data;
};

/// Interprets a ProtectionPlan as a deterministic cop strategy. Nodes on the
/// active root-to-leaf chain run simultaneously; a node's branch child
/// activates once the node has settled and the robber rests outside its
/// protected set. All runtime counters saturate, so the strategy state space
/// stays finite and best-response search terminates.
class PlanExecutor final : public CopStrategy {
public:
    explicit PlanExecutor(std::shared_ptr<const ProtectionPlan> plan);

    // Test hook: adversarial starting positions instead of the plan's posts.
    void set_initial_override(std::vector<int> positions);
    void set_logging(bool on) { logging_ = on; }
    const std::vector<ExecEvent>& log() const { return log_; }

    int cop_count() const override;
    std::vector<int> initial_placements(const Graph& g) override;
    std::vector<int> move(const Observation& obs) override;
    std::string digest() const override;
    std::unique_ptr<CopStrategy> clone() const override;

    const ProtectionPlan& plan() const { return *plan_; }
    size_t chain_length() const { return chain_.size(); }
    const PlanNode* chain_node(size_t i) const { return chain_[i].node; }
    bool chain_settled(size_t i) const { return chain_[i].settled; }

private:
    struct Entry {
        const PlanNode* node = nullptr;
        int slot_begin = 0;
        int slot_count = 0;
        bool settled = false;
        int u_streak = 0;   // consecutive rests seen inside the protected set
        // guard
        bool on_path = false;
        // patrol / cover
        bool gathered = false;
        int cycle = 0;        // local step mod 2s
        int local_count = 0;  // saturating local step counter
        std::vector<int> targets;  // per own slot: current target vertex or -1
        int phase = 0;             // cover: 0 station, 1 running
        int r0 = -1;
        // branch
        int chosen = -1;
    };

    void append_entry(const PlanNode* node);
    void process_activations(const Observation& obs);
    void entry_move(size_t idx, const Observation& obs, std::vector<int>& moves);
    void post_update(size_t idx, const std::vector<int>& moves, int robber);

    void guard_move(Entry& e, const Observation& obs, std::vector<int>& moves);
    void patrol_move(Entry& e, const Observation& obs, std::vector<int>& moves);
    void base_move(Entry& e, const Observation& obs, std::vector<int>& moves);
    void cover_move(Entry& e, const Observation& obs, std::vector<int>& moves);
    void cover_audit(const Entry& e, int level, int robber);

    void note(const std::string& kind, const std::string& data);

    std::shared_ptr<const ProtectionPlan> plan_;
    std::vector<Entry> chain_;
    int next_slot_ = 0;
    bool placed_ = false;
    std::vector<int> initial_override_;
    bool logging_ = false;
    std::vector<ExecEvent> log_;
};

// One step along the canonical shortest path from `from` toward `to`
// (ascending-id BFS tie-breaking); returns `from` when already there.
int greedy_step(const Graph& g, int from, int to);

}  // namespace copshield

#endif
