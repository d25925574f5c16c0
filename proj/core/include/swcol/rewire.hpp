#pragma once

#include "swcol/graph.hpp"
#include "swcol/rng.hpp"

#include <cstdint>

namespace swcol {

struct RewireParams {
    double p = 0.0; // per-edge rewiring probability, in [0,1]
    std::uint64_t seed = 1;
    RngAlgorithm rng = RngAlgorithm::Default;
};

struct RewireResult {
    Graph graph;
    std::uint64_t rewired = 0; // edges replaced by a shortcut
    std::uint64_t skipped = 0; // edges selected but left unchanged (no legal endpoint)
};

/// One rewiring pass over the edges of g, visited exactly once each in
/// lexicographic (min,max) order. Each edge is independently selected with
/// probability p; a selected edge keeps one of its two endpoints (chosen
/// uniformly) and is reattached to a uniformly drawn new endpoint that
/// creates neither a self-loop nor a duplicate of an existing edge. The new
/// endpoint is resampled on conflict; after n consecutive failures the edge
/// is left unchanged and counted in `skipped`. Edge count is conserved
/// exactly; edges created by the pass are never revisited within it.
///
/// Requires a simple graph with n >= 3.
RewireResult rewire(const Graph& g, double p, RandomSource& rng);

/// Convenience overload that builds the stream from params.seed/params.rng.
RewireResult rewire(const Graph& g, const RewireParams& params);

/// Uniform G(n,m): exactly m edges drawn without replacement from all
/// unordered pairs. Throws std::invalid_argument if m > n(n-1)/2.
Graph random_graph(std::uint32_t n, std::uint64_t m, RandomSource& rng);

} // namespace swcol
