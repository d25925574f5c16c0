#include "swcol/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace swcol {

Graph::Graph(std::uint32_t n) {
    if (n == 0)
        throw std::invalid_argument("graph: node count must be >= 1");
    adj_.resize(n);
}

void Graph::require_node(std::uint32_t v) const {
    if (v >= adj_.size())
        throw std::invalid_argument("graph: node index " + std::to_string(v) + " out of range (n=" +
                                    std::to_string(adj_.size()) + ")");
}

bool Graph::add_edge(std::uint32_t u, std::uint32_t v) {
    require_node(u);
    require_node(v);
    if (u == v)
        throw std::invalid_argument("graph: self-loop on node " + std::to_string(u) + " rejected");

    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v)
        return false; // already present
    nu.insert(it, v);
    auto& nv = adj_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
    return true;
}

bool Graph::remove_edge(std::uint32_t u, std::uint32_t v) {
    require_node(u);
    require_node(v);
    auto& nu = adj_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it == nu.end() || *it != v)
        return false;
    nu.erase(it);
    auto& nv = adj_[v];
    nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
    --edge_count_;
    return true;
}

bool Graph::has_edge(std::uint32_t u, std::uint32_t v) const {
    require_node(u);
    require_node(v);
    const auto& nu = adj_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::uint32_t Graph::degree(std::uint32_t v) const {
    require_node(v);
    return static_cast<std::uint32_t>(adj_[v].size());
}

std::span<const std::uint32_t> Graph::neighbours(std::uint32_t v) const {
    require_node(v);
    return {adj_[v].data(), adj_[v].size()};
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::uint32_t u = 0; u < adj_.size(); ++u)
        for (std::uint32_t v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out; // u ascending, each list sorted -> lexicographic
}

Ratio Graph::mean_degree() const {
    std::uint64_t num = 2 * edge_count_;
    std::uint64_t den = adj_.size();
    std::uint64_t g = std::gcd(num, den);
    if (g == 0)
        return {0, den};
    return {num / g, den / g};
}

bool Graph::connected() const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<std::uint32_t> stack{0};
    seen[0] = 1;
    std::size_t visited = 1;
    while (!stack.empty()) {
        std::uint32_t v = stack.back();
        stack.pop_back();
        for (std::uint32_t w : adj_[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++visited;
                stack.push_back(w);
            }
        }
    }
    return visited == adj_.size();
}

void Graph::check_invariants() const {
    std::uint64_t degree_sum = 0;
    for (std::uint32_t u = 0; u < adj_.size(); ++u) {
        const auto& nu = adj_[u];
        degree_sum += nu.size();
        for (std::size_t i = 0; i < nu.size(); ++i) {
            std::uint32_t v = nu[i];
            if (v >= adj_.size())
                throw std::logic_error("graph invariant: neighbour index out of range");
            if (v == u)
                throw std::logic_error("graph invariant: self-loop at node " + std::to_string(u));
            if (i > 0 && nu[i - 1] >= v)
                throw std::logic_error("graph invariant: adjacency list not strictly sorted at node " +
                                       std::to_string(u));
            const auto& nv = adj_[v];
            if (!std::binary_search(nv.begin(), nv.end(), u))
                throw std::logic_error("graph invariant: edge {" + std::to_string(u) + "," + std::to_string(v) +
                                       "} not symmetric");
        }
    }
    if (degree_sum != 2 * edge_count_)
        throw std::logic_error("graph invariant: degree sum " + std::to_string(degree_sum) +
                               " != 2M = " + std::to_string(2 * edge_count_));
}

bool Colouring::complete() const {
    for (std::int32_t v : values)
        if (v == unassigned)
            return false;
    return true;
}

bool is_valid_colouring(const Graph& g, const Colouring& c, int k) {
    if (k < 1)
        throw std::invalid_argument("colouring: k must be >= 1");
    if (c.values.size() != g.node_count())
        throw std::invalid_argument("colouring: length " + std::to_string(c.values.size()) +
                                    " does not match node count " + std::to_string(g.node_count()));
    for (std::int32_t value : c.values) {
        if (value == Colouring::unassigned)
            throw std::invalid_argument("colouring: incomplete (unassigned entry)");
        if (value < 0 || value >= k)
            throw std::invalid_argument("colouring: colour " + std::to_string(value) + " out of range [0," +
                                        std::to_string(k) + ")");
    }
    for (std::uint32_t u = 0; u < g.node_count(); ++u)
        for (std::uint32_t v : g.neighbours(u))
            if (u < v && c.values[u] == c.values[v])
                return false;
    return true;
}

} // namespace swcol
