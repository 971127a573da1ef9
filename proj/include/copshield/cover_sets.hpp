#ifndef COPSHIELD_COVER_SETS_HPP
#define COPSHIELD_COVER_SETS_HPP

#include <cstdint>
#include <optional>

#include "copshield/graph.hpp"

namespace copshield {

/// The randomly sampled sets C_1..C_t that pre-position cops so that each
/// dispatch wave can be matched injectively to nearby posts.
struct CoverSets {
    std::vector<VertexSet> sets;  // C_1..C_t (0-indexed storage)
    int k = 0;
    int d = 0;
    int t = 0;
    double alpha = 0.0;
    uint64_t seed = 0;
    std::vector<int> resample_counts;  // size-bound resamples per level

    const VertexSet& level(int i) const;  // 1-based accessor
};

/// Samples each C_i by independent inclusion with probability 1/(2kt) and
/// resamples any level whose size exceeds |x|/(kt). alpha defaults to the
/// closed form 32 t log2(2 t |x|); the override exists for research-mode runs
/// at desk scale. Deterministic for a fixed seed.
CoverSets sample_cover_sets(const VertexSet& x, int k, int d,
                            std::optional<double> alpha_override, uint64_t seed);

// Resamples only the given level (1-based), advancing its resample count.
void resample_level(CoverSets& cs, const VertexSet& x, int level);

struct ClaimCheck {
    bool holds = true;
    std::optional<VertexSet> counterexample;  // first violating Y in subset order
};

/// Brute force over all nonempty Y subsets of x: whenever the ball of Y with
/// radius 2^i + d captures at least alpha*k*|Y| vertices of x, it must also
/// capture at least |Y| vertices of C_i. Exponential in |x|; capped at 16.
ClaimCheck claim_property_check(const Graph& g, const VertexSet& x, const CoverSets& cs,
                                int i);

}  // namespace copshield

#endif
