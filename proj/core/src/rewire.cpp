#include "swcol/rewire.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace swcol {

RewireResult rewire(const Graph& g, double p, RandomSource& rng) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("rewire: p must lie in [0,1]");
    if (g.node_count() < 3)
        throw std::invalid_argument("rewire: graph must have at least 3 nodes");

    RewireResult result{g, 0, 0};
    Graph& out = result.graph;
    const std::uint32_t n = g.node_count();

    for (const auto& [u, v] : g.edges()) {
        if (!rng.bernoulli(p))
            continue;
        const std::uint32_t keep = rng.uniform_index(2) == 0 ? u : v;

        // Resample the new endpoint until it is neither `keep` itself nor an
        // existing neighbour of `keep`. The original edge is still present
        // here, so the dropped endpoint is excluded automatically.
        bool placed = false;
        for (std::uint32_t attempt = 0; attempt < n; ++attempt) {
            const auto candidate = static_cast<std::uint32_t>(rng.uniform_index(n));
            if (candidate == keep || out.has_edge(keep, candidate))
                continue;
            out.remove_edge(u, v);
            out.add_edge(keep, candidate);
            placed = true;
            break;
        }
        if (placed)
            ++result.rewired;
        else
            ++result.skipped;
    }
    return result;
}

RewireResult rewire(const Graph& g, const RewireParams& params) {
    RandomSource rng(params.seed, params.rng);
    return rewire(g, params.p, rng);
}

namespace {

// Pairs (u,v), u < v, in lexicographic order; pair_offset(u) is the index of
// (u, u+1).
std::uint64_t pair_offset(std::uint64_t u, std::uint64_t n) {
    return u * (2 * n - u - 1) / 2;
}

Edge decode_pair(std::uint64_t index, const std::vector<std::uint64_t>& offsets) {
    auto it = std::upper_bound(offsets.begin(), offsets.end(), index);
    const auto u = static_cast<std::uint32_t>(it - offsets.begin() - 1);
    const auto v = static_cast<std::uint32_t>(u + 1 + (index - offsets[u]));
    return {u, v};
}

} // namespace

Graph random_graph(std::uint32_t n, std::uint64_t m, RandomSource& rng) {
    Graph g(n);
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (m > pairs)
        throw std::invalid_argument("random_graph: m = " + std::to_string(m) + " exceeds n(n-1)/2 = " +
                                    std::to_string(pairs));
    if (m == 0)
        return g;

    if (pairs <= (1u << 22)) {
        // Exact m-subset via a partial Fisher-Yates shuffle of all pair indices.
        std::vector<std::uint32_t> deck(pairs);
        for (std::uint64_t i = 0; i < pairs; ++i)
            deck[i] = static_cast<std::uint32_t>(i);
        std::vector<std::uint64_t> offsets(n);
        for (std::uint32_t u = 0; u < n; ++u)
            offsets[u] = pair_offset(u, n);
        for (std::uint64_t i = 0; i < m; ++i) {
            const std::uint64_t j = i + rng.uniform_index(pairs - i);
            std::swap(deck[i], deck[j]);
            const auto [u, v] = decode_pair(deck[i], offsets);
            g.add_edge(u, v);
        }
    } else {
        // Sparse regime: rejection sampling of fresh pairs.
        std::unordered_set<std::uint64_t> chosen;
        chosen.reserve(m * 2);
        while (chosen.size() < m) {
            auto u = static_cast<std::uint32_t>(rng.uniform_index(n));
            auto v = static_cast<std::uint32_t>(rng.uniform_index(n));
            if (u == v)
                continue;
            if (u > v)
                std::swap(u, v);
            if (chosen.insert(static_cast<std::uint64_t>(u) * n + v).second)
                g.add_edge(u, v);
        }
    }
    return g;
}

} // namespace swcol
