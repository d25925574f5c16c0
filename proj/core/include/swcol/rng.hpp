#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

namespace swcol {

/// Default is mt19937_64 (its output stream is pinned by the standard, so
/// runs reproduce across platforms). MitchellMoore is the additive
/// lagged-Fibonacci generator X_n = X_{n-24} + X_{n-55} mod 2^64, kept for
/// cross-checks against the default stream.
enum class RngAlgorithm { Default, MitchellMoore };

std::string_view rng_name(RngAlgorithm alg);
std::optional<RngAlgorithm> rng_from_name(std::string_view name);

/// Seeded deterministic random stream: identical (seed, algorithm) pairs
/// yield identical streams. Not shareable between threads; each trial owns
/// its own derived source.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed, RngAlgorithm alg = RngAlgorithm::Default);

    std::uint64_t next_u64();

    /// Uniform in [0, bound), bound >= 1. Unbiased (rejection sampling).
    std::uint64_t uniform_index(std::uint64_t bound);

    /// Uniform in [0,1) with 53 random bits.
    double uniform_unit();

    /// True with probability p. p=0 never fires, p=1 always does.
    bool bernoulli(double p);

    RngAlgorithm algorithm() const { return alg_; }

private:
    struct MitchellMoore {
        std::array<std::uint64_t, 55> lag{};
        std::uint32_t pos = 0;

        void seed(std::uint64_t s);
        std::uint64_t next();
    };

    RngAlgorithm alg_;
    std::mt19937_64 mt_;
    MitchellMoore mm_;
};

/// SplitMix64 finalizer; also used to seed generator state from a single word.
std::uint64_t mix64(std::uint64_t z);

/// Deterministic, order-independent per-trial stream: a collision-resistant
/// hash of (master_seed, trial_index) seeds a fresh RandomSource, so trials
/// can run in any schedule and still reproduce bit-exactly.
RandomSource derive_trial_rng(std::uint64_t master_seed, std::uint64_t trial_index,
                              RngAlgorithm alg = RngAlgorithm::Default);

} // namespace swcol
