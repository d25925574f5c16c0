#include "swcol/solver.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace swcol {

std::string_view to_string(SolveStatus status) {
    switch (status) {
    case SolveStatus::Colourable: return "colourable";
    case SolveStatus::Uncolourable: return "uncolourable";
    case SolveStatus::BudgetExhausted: return "budget-exhausted";
    }
    throw std::logic_error("solver: unknown status");
}

namespace {

struct Frame {
    std::uint32_t vertex;
    std::int32_t assigned;    // colour currently held, -1 while none
    std::int32_t next_colour; // first colour index not yet tried
};

class Searcher {
public:
    Searcher(const Graph& g, int k) : g_(g), k_(k), n_(g.node_count()) {
        colour_.assign(n_, -1);
        counts_.assign(static_cast<std::size_t>(n_) * k_, 0);
        sat_.assign(n_, 0);
        unc_degree_.assign(n_, 0);
        for (std::uint32_t v = 0; v < n_; ++v)
            unc_degree_[v] = g_.degree(v);
    }

    SolveOutcome run(SolveBudget budget, bool fix_first_vertex) {
        SolveOutcome out;
        out.first_vertex_fixed = fix_first_vertex;

        std::vector<Frame> path;
        path.reserve(n_);
        path.push_back({select(), -1, 0});
        std::uint32_t coloured = 0;

        while (!path.empty()) {
            Frame& frame = path.back();
            const std::uint32_t v = frame.vertex;

            if (frame.assigned >= 0) { // back from a failed subtree
                unassign(v, frame.assigned);
                --coloured;
                frame.assigned = -1;
            }

            // Root frame only ever tries colour 0 when symmetry fixing is on.
            const std::int32_t limit = (fix_first_vertex && path.size() == 1) ? 1 : k_;
            std::int32_t c = frame.next_colour;
            while (c < limit && counts_[static_cast<std::size_t>(v) * k_ + c] != 0)
                ++c;

            if (c >= limit) { // no consistent colour left here
                path.pop_back();
                continue;
            }

            if (budget.max_nodes && out.nodes_visited == *budget.max_nodes) {
                out.status = SolveStatus::BudgetExhausted;
                return out;
            }
            assign(v, c);
            ++coloured;
            ++out.nodes_visited;
            frame.assigned = c;
            frame.next_colour = c + 1;

            if (coloured == n_) {
                Colouring witness(n_);
                for (std::uint32_t u = 0; u < n_; ++u)
                    witness.values[u] = colour_[u];
                if (!is_valid_colouring(g_, witness, k_))
                    throw std::logic_error("solver: produced an invalid witness");
                out.status = SolveStatus::Colourable;
                out.witness = std::move(witness);
                return out;
            }
            path.push_back({select(), -1, 0});
        }

        out.status = SolveStatus::Uncolourable;
        return out;
    }

private:
    // Brelaz rule over the uncoloured vertices: max saturation, then max
    // degree in the uncoloured subgraph, then lowest index.
    std::uint32_t select() const {
        std::uint32_t best = 0;
        std::int32_t best_sat = -1;
        std::int64_t best_deg = -1;
        for (std::uint32_t v = 0; v < n_; ++v) {
            if (colour_[v] >= 0)
                continue;
            const std::int32_t s = sat_[v];
            const std::int64_t d = unc_degree_[v];
            if (s > best_sat || (s == best_sat && d > best_deg)) {
                best = v;
                best_sat = s;
                best_deg = d;
            }
        }
        return best;
    }

    void assign(std::uint32_t v, std::int32_t c) {
        colour_[v] = c;
        for (std::uint32_t u : g_.neighbours(v)) {
            if (colour_[u] >= 0)
                continue;
            if (counts_[static_cast<std::size_t>(u) * k_ + c]++ == 0)
                ++sat_[u];
            --unc_degree_[u];
        }
    }

    void unassign(std::uint32_t v, std::int32_t c) {
        for (std::uint32_t u : g_.neighbours(v)) {
            if (colour_[u] >= 0)
                continue;
            if (--counts_[static_cast<std::size_t>(u) * k_ + c] == 0)
                --sat_[u];
            ++unc_degree_[u];
        }
        colour_[v] = -1;
    }

    const Graph& g_;
    const int k_;
    const std::uint32_t n_;
    std::vector<std::int32_t> colour_;
    std::vector<std::uint16_t> counts_; // coloured-neighbour count per (node, colour)
    std::vector<std::uint16_t> sat_;
    std::vector<std::uint32_t> unc_degree_;
};

} // namespace

SolveOutcome solve(const Graph& g, int k, SolveBudget budget, bool fix_first_vertex) {
    if (k < 1)
        throw std::invalid_argument("solver: k must be >= 1");
    if (budget.max_nodes && *budget.max_nodes == 0)
        throw std::invalid_argument("solver: max_nodes must be >= 1 when given");
    return Searcher(g, k).run(budget, fix_first_vertex);
}

namespace {

bool extend_in_index_order(const Graph& g, int k, std::vector<std::int32_t>& colour, std::uint32_t v) {
    if (v == g.node_count())
        return true;
    for (std::int32_t c = 0; c < k; ++c) {
        bool clash = false;
        for (std::uint32_t u : g.neighbours(v)) {
            if (u < v && colour[u] == c) {
                clash = true;
                break;
            }
        }
        if (!clash) {
            colour[v] = c;
            if (extend_in_index_order(g, k, colour, v + 1))
                return true;
        }
    }
    return false;
}

} // namespace

bool brute_force_colourable(const Graph& g, int k) {
    if (k < 1)
        throw std::invalid_argument("solver: k must be >= 1");
    constexpr std::uint64_t enumeration_limit = 43'046'721; // 3^16
    std::uint64_t assignments = 1;
    for (std::uint32_t i = 0; i < g.node_count(); ++i) {
        assignments *= static_cast<std::uint64_t>(k);
        if (assignments > enumeration_limit)
            throw std::invalid_argument("brute_force_colourable: k^n exceeds the enumeration guard (" +
                                        std::to_string(enumeration_limit) + ")");
    }
    std::vector<std::int32_t> colour(g.node_count(), -1);
    return extend_in_index_order(g, k, colour, 0);
}

} // namespace swcol
