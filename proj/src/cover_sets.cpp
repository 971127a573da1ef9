#include "copshield/cover_sets.hpp"

#include <cmath>
#include <random>

#include "copshield/bounds.hpp"
#include "copshield/errors.hpp"
#include "copshield/generators.hpp"

namespace copshield {

const VertexSet& CoverSets::level(int i) const {
    if (i < 1 || i > t) throw InvalidArgument("cover set level out of range");
    return sets[i - 1];
}

namespace {

VertexSet draw_level(const VertexSet& x, double p, std::mt19937_64& rng) {
    std::vector<int> members;
    for (int v : x)
        if (seeded_flip(rng(), p)) members.push_back(v);
    return VertexSet(std::move(members));
}

}  // namespace

CoverSets sample_cover_sets(const VertexSet& x, int k, int d,
                            std::optional<double> alpha_override, uint64_t seed) {
    if (k < 2 || d < 2) throw InvalidArgument("sample_cover_sets requires k, d >= 2");
    if (x.empty()) throw InvalidArgument("sample_cover_sets requires a nonempty set");
    CoverSets cs;
    cs.k = k;
    cs.d = d;
    cs.t = ceil_log2(2LL * d * k);
    cs.seed = seed;
    cs.alpha = alpha_override ? *alpha_override
                              : 32.0 * cs.t * std::log2(2.0 * cs.t * x.size());
    double p = 1.0 / (2.0 * k * cs.t);
    if (p >= 1.0) throw InvalidArgument("degenerate inclusion probability");

    long long size_cap = x.size() / (static_cast<long long>(k) * cs.t);
    std::mt19937_64 rng(seed);
    cs.resample_counts.assign(cs.t, 0);
    for (int i = 0; i < cs.t; ++i) {
        VertexSet level = draw_level(x, p, rng);
        constexpr int kMaxResamples = 10'000;
        while (level.size() > size_cap) {
            if (++cs.resample_counts[i] > kMaxResamples)
                throw RetryExhausted("cover set size bound not met after " +
                                     std::to_string(kMaxResamples) + " resamples");
            level = draw_level(x, p, rng);
        }
        cs.sets.push_back(std::move(level));
    }
    return cs;
}

void resample_level(CoverSets& cs, const VertexSet& x, int level) {
    if (level < 1 || level > cs.t) throw InvalidArgument("cover set level out of range");
    // A fresh stream keyed off the base seed, the level, and the resample
    // epoch keeps the operation deterministic and independent of prior draws.
    long long size_cap = x.size() / (static_cast<long long>(cs.k) * cs.t);
    double p = 1.0 / (2.0 * cs.k * cs.t);
    for (;;) {
        ++cs.resample_counts[level - 1];
        std::mt19937_64 rng(cs.seed ^ (0x5bd1e995u * static_cast<uint64_t>(level)) ^
                            (static_cast<uint64_t>(cs.resample_counts[level - 1]) << 32));
        VertexSet fresh = draw_level(x, p, rng);
        if (fresh.size() <= size_cap) {
            cs.sets[level - 1] = std::move(fresh);
            return;
        }
    }
}

ClaimCheck claim_property_check(const Graph& g, const VertexSet& x, const CoverSets& cs,
                                int i) {
    if (x.size() > 16)
        throw BudgetExceeded("claim_property_check is exponential; |x| capped at 16");
    if (i < 1 || i > cs.t) throw InvalidArgument("claim level out of range");
    int radius = (1 << i) + cs.d;
    const VertexSet& ci = cs.level(i);

    // Per-vertex ball masks over the indices of x, then subset sweep.
    int m = x.size();
    const auto& xs = x.members();
    std::vector<uint32_t> ball_mask_x(m, 0), ball_mask_c(m, 0);
    for (int a = 0; a < m; ++a) {
        VertexSet b = ball(g, xs[a], radius);
        for (int bidx = 0; bidx < m; ++bidx)
            if (b.contains(xs[bidx])) ball_mask_x[a] |= 1u << bidx;
        for (int bidx = 0; bidx < m; ++bidx)
            if (b.contains(xs[bidx]) && ci.contains(xs[bidx])) ball_mask_c[a] |= 1u << bidx;
    }

    double threshold_factor = cs.alpha * cs.k;
    for (uint32_t y = 1; y < (1u << m); ++y) {
        uint32_t bx = 0, bc = 0;
        uint32_t rest = y;
        while (rest) {
            int a = __builtin_ctz(rest);
            rest &= rest - 1;
            bx |= ball_mask_x[a];
            bc |= ball_mask_c[a];
        }
        int ysize = __builtin_popcount(y);
        if (__builtin_popcount(bx) >= threshold_factor * ysize &&
            __builtin_popcount(bc) < ysize) {
            std::vector<int> members;
            for (int a = 0; a < m; ++a)
                if (y >> a & 1) members.push_back(xs[a]);
            return {false, VertexSet(std::move(members))};
        }
    }
    return {true, std::nullopt};
}

}  // namespace copshield
