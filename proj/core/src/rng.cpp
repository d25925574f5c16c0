#include "swcol/rng.hpp"

#include <stdexcept>

namespace swcol {

std::string_view rng_name(RngAlgorithm alg) {
    return alg == RngAlgorithm::Default ? "default" : "mitchell-moore";
}

std::optional<RngAlgorithm> rng_from_name(std::string_view name) {
    if (name == "default") return RngAlgorithm::Default;
    if (name == "mitchell-moore") return RngAlgorithm::MitchellMoore;
    return std::nullopt;
}

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

void RandomSource::MitchellMoore::seed(std::uint64_t s) {
    std::uint64_t x = s;
    for (auto& w : lag) {
        x += 0x9E3779B97F4A7C15ULL;
        w = mix64(x);
    }
    pos = 0;
    for (int i = 0; i < 550; ++i) // run the recurrence in before use
        next();
}

std::uint64_t RandomSource::MitchellMoore::next() {
    // X_n = X_{n-24} + X_{n-55}; with pos = n mod 55 the two lags live at
    // lag[(pos+31) % 55] and lag[pos].
    std::uint64_t v = lag[(pos + 31) % 55] + lag[pos];
    lag[pos] = v;
    pos = (pos + 1) % 55;
    return v;
}

RandomSource::RandomSource(std::uint64_t seed, RngAlgorithm alg) : alg_(alg), mt_(seed) {
    if (alg_ == RngAlgorithm::MitchellMoore)
        mm_.seed(seed);
}

std::uint64_t RandomSource::next_u64() {
    return alg_ == RngAlgorithm::Default ? mt_() : mm_.next();
}

std::uint64_t RandomSource::uniform_index(std::uint64_t bound) {
    if (bound == 0)
        throw std::invalid_argument("rng: uniform_index bound must be >= 1");
    const std::uint64_t reject_below = (-bound) % bound; // 2^64 mod bound
    for (;;) {
        std::uint64_t r = next_u64();
        if (r >= reject_below)
            return r % bound;
    }
}

double RandomSource::uniform_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

bool RandomSource::bernoulli(double p) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("rng: bernoulli p must lie in [0,1]");
    return uniform_unit() < p;
}

RandomSource derive_trial_rng(std::uint64_t master_seed, std::uint64_t trial_index, RngAlgorithm alg) {
    std::uint64_t stream = mix64(mix64(master_seed) ^ mix64(trial_index * 0x9E3779B97F4A7C15ULL + 0x9E3779B97F4A7C15ULL));
    return RandomSource(stream, alg);
}

} // namespace swcol
