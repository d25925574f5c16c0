#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace swcol {

/// Exact rational, used for mean degree (2M/n) so tests can compare without
/// floating-point rounding. Stored reduced.
struct Ratio {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Ratio&, const Ratio&) = default;
};

using Edge = std::pair<std::uint32_t, std::uint32_t>;

/// Undirected simple graph on nodes 0..n-1. Adjacency is kept as per-node
/// sorted neighbour lists; membership tests are binary searches over lists
/// whose length is the node degree, which for the sparse graphs handled here
/// is effectively constant time.
///
/// Invariants maintained by construction: no self-loops, symmetric adjacency,
/// at most one edge per unordered pair.
class Graph {
public:
    /// n >= 1 nodes, no edges.
    explicit Graph(std::uint32_t n);

    std::uint32_t node_count() const { return static_cast<std::uint32_t>(adj_.size()); }
    std::uint64_t edge_count() const { return edge_count_; }

    /// Inserts {u,v}. Returns false (and changes nothing) if the edge is
    /// already present; duplicate insertion is a reported no-op so rewiring
    /// can probe-and-retry cheaply. Throws std::invalid_argument on a
    /// self-loop or an out-of-range endpoint.
    bool add_edge(std::uint32_t u, std::uint32_t v);

    /// Removes {u,v} if present; returns whether an edge was removed.
    bool remove_edge(std::uint32_t u, std::uint32_t v);

    bool has_edge(std::uint32_t u, std::uint32_t v) const;

    std::uint32_t degree(std::uint32_t v) const;

    /// Sorted neighbour indices of v; view valid until the graph is modified.
    std::span<const std::uint32_t> neighbours(std::uint32_t v) const;

    /// All edges as (min,max) pairs in lexicographic order.
    std::vector<Edge> edges() const;

    /// Mean degree 2M/n as an exact reduced ratio.
    Ratio mean_degree() const;

    bool connected() const;

    /// Audits the representation invariants (symmetry, sortedness, no
    /// self-loops, no duplicates, edge-count bookkeeping). Throws
    /// std::logic_error on the first violation. Used as a guard by the
    /// experiment harness before every solve.
    void check_invariants() const;

private:
    void require_node(std::uint32_t v) const;

    std::vector<std::vector<std::uint32_t>> adj_;
    std::uint64_t edge_count_ = 0;
};

/// Per-node colour assignment; `unassigned` marks holes. A colouring is
/// "complete" when no entry is unassigned.
struct Colouring {
    static constexpr std::int32_t unassigned = -1;

    std::vector<std::int32_t> values;

    Colouring() = default;
    explicit Colouring(std::size_t n) : values(n, unassigned) {}

    std::size_t size() const { return values.size(); }
    bool complete() const;
};

/// True iff every edge of g has differently coloured endpoints. The colouring
/// must be complete, match the graph's node count, and use only colours in
/// [0,k); anything else throws std::invalid_argument.
bool is_valid_colouring(const Graph& g, const Colouring& c, int k);

} // namespace swcol
