#ifndef COPSHIELD_BEST_RESPONSE_HPP
#define COPSHIELD_BEST_RESPONSE_HPP

#include <cstddef>
#include <optional>

#include "copshield/game.hpp"

namespace copshield {

struct SearchLimits {
    size_t max_states = 2'000'000;
};

struct BestResponseResult {
    bool robber_survives = false;
    Trace trace;                     // surviving line, or the slowest losing line
    long long max_capture_step = 0;  // meaningful when every line is captured
    size_t states_explored = 0;
};

/// Exhaustive search over robber choices against a fixed deterministic cop
/// strategy. States are memoized on (strategy digest, cop positions, robber
/// position); the robber survives exactly when a cycle of uncaptured states
/// is reachable, otherwise every line ends in capture and the slowest line
/// is reported. Throws BudgetExceeded past limits.max_states.
BestResponseResult best_response_robber(const Graph& g, const CopStrategy& cops,
                                        SearchLimits limits = {});

struct ProtectionVerdict {
    bool protected_ok = false;
    std::optional<Trace> witness;  // a surviving line that visited the set
    size_t states_explored = 0;
};

/// Adversarial check of a protection certificate: searches for a robber line
/// that rests on the protected set at some step >= threshold and still evades
/// forever. Such a line refutes the certificate and is returned as a witness.
ProtectionVerdict verify_protection(const Graph& g, const CopStrategy& cops,
                                    const ProtectionCertificate& cert,
                                    SearchLimits limits = {});

}  // namespace copshield

#endif
