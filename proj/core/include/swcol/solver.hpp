#pragma once

#include "swcol/graph.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace swcol {

/// Optional cap on search-tree nodes; absent means unlimited.
struct SolveBudget {
    std::optional<std::uint64_t> max_nodes;
};

enum class SolveStatus { Colourable, Uncolourable, BudgetExhausted };

std::string_view to_string(SolveStatus status);

struct SolveOutcome {
    SolveStatus status = SolveStatus::Uncolourable;
    std::optional<Colouring> witness; // present iff status == Colourable
    std::uint64_t nodes_visited = 0;
    bool first_vertex_fixed = true; // whether the root colour was pinned to 0
};

/// Exact k-colourability decision by backtracking search with the Brelaz
/// (DSATUR) branching rule: branch on the uncoloured vertex with the most
/// distinct neighbour colours, break ties by degree within the uncoloured
/// subgraph, then by lowest index; colours are tried in ascending order.
/// Deterministic: identical input gives identical outcome and node count.
///
/// nodes_visited counts every locally consistent (vertex, colour) assignment
/// pushed onto the search path, so a backtrack-free run on an n-node graph
/// costs exactly n. When the budget runs out the status is BudgetExhausted
/// (never an exception) and nodes_visited equals the cap.
///
/// fix_first_vertex pins the root vertex's colour to 0. Colour classes are
/// interchangeable, so this divides the search k-fold without affecting the
/// decision; it is on by default and echoed in the outcome.
///
/// Uses an explicit stack; no recursion, so n is bounded only by memory.
SolveOutcome solve(const Graph& g, int k, SolveBudget budget = {}, bool fix_first_vertex = true);

/// Exhaustive test-oracle decision, independent of the DSATUR search path:
/// enumerates assignments in plain vertex-index order. Guarded: throws
/// std::invalid_argument when k^n exceeds ~4.3e7 (n = 16 at k = 3).
bool brute_force_colourable(const Graph& g, int k);

} // namespace swcol
