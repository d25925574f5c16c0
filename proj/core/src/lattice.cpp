#include "swcol/lattice.hpp"

#include <stdexcept>
#include <string>

namespace swcol {

std::string_view family_name(LatticeFamily family) {
    switch (family) {
    case LatticeFamily::Square: return "square";
    case LatticeFamily::Triangular: return "triangular";
    case LatticeFamily::Cubic6: return "cubic6";
    case LatticeFamily::Cubic5: return "cubic5";
    }
    throw std::logic_error("lattice: unknown family");
}

std::optional<LatticeFamily> family_from_name(std::string_view name) {
    if (name == "square") return LatticeFamily::Square;
    if (name == "triangular") return LatticeFamily::Triangular;
    if (name == "cubic6") return LatticeFamily::Cubic6;
    if (name == "cubic5") return LatticeFamily::Cubic5;
    return std::nullopt;
}

int family_gamma(LatticeFamily family) {
    switch (family) {
    case LatticeFamily::Square: return 4;
    case LatticeFamily::Triangular: return 6;
    case LatticeFamily::Cubic6: return 6;
    case LatticeFamily::Cubic5: return 5;
    }
    throw std::logic_error("lattice: unknown family");
}

int family_dimensions(LatticeFamily family) {
    return (family == LatticeFamily::Square || family == LatticeFamily::Triangular) ? 2 : 3;
}

std::uint64_t LatticeSpec::node_count() const {
    std::uint64_t n = L;
    return family_dimensions(family) == 2 ? n * n : n * n * n;
}

void LatticeSpec::validate() const {
    const std::string base = std::string(family_name(family)) + " lattice: ";
    if (L < 3)
        throw std::invalid_argument(base + "L must be >= 3, got " + std::to_string(L));
    if (family == LatticeFamily::Triangular && L % 3 != 0)
        throw std::invalid_argument(base + "L must be divisible by 3, got " + std::to_string(L));
    if (family == LatticeFamily::Cubic5) {
        if (L % 2 != 0)
            throw std::invalid_argument(base + "L must be even, got " + std::to_string(L));
        if (L < 4)
            throw std::invalid_argument(base + "L must be >= 4, got " + std::to_string(L));
    }
}

std::uint32_t node_index(const LatticeSpec& spec, std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    const std::uint64_t L = spec.L;
    if (x >= L || y >= L || (family_dimensions(spec.family) == 3 ? z >= L : z != 0))
        throw std::invalid_argument("lattice: coordinate out of range");
    return static_cast<std::uint32_t>(x + L * y + L * L * z);
}

std::array<std::uint32_t, 3> node_coords(const LatticeSpec& spec, std::uint32_t index) {
    if (index >= spec.node_count())
        throw std::invalid_argument("lattice: node index out of range");
    const std::uint32_t L = spec.L;
    return {index % L, (index / L) % L, index / (L * L)};
}

namespace {

Graph generate_2d(const LatticeSpec& spec) {
    const std::uint32_t L = spec.L;
    Graph g(static_cast<std::uint32_t>(spec.node_count()));
    const bool triangular = spec.family == LatticeFamily::Triangular;
    for (std::uint32_t y = 0; y < L; ++y) {
        for (std::uint32_t x = 0; x < L; ++x) {
            const std::uint32_t v = node_index(spec, x, y);
            g.add_edge(v, node_index(spec, (x + 1) % L, y));
            g.add_edge(v, node_index(spec, x, (y + 1) % L));
            if (triangular)
                g.add_edge(v, node_index(spec, (x + 1) % L, (y + 1) % L));
        }
    }
    return g;
}

Graph generate_3d(const LatticeSpec& spec) {
    const std::uint32_t L = spec.L;
    Graph g(static_cast<std::uint32_t>(spec.node_count()));
    const bool decimated = spec.family == LatticeFamily::Cubic5;
    for (std::uint32_t z = 0; z < L; ++z) {
        for (std::uint32_t y = 0; y < L; ++y) {
            for (std::uint32_t x = 0; x < L; ++x) {
                const std::uint32_t v = node_index(spec, x, y, z);
                g.add_edge(v, node_index(spec, (x + 1) % L, y, z));
                g.add_edge(v, node_index(spec, x, (y + 1) % L, z));
                // Chess-board decimation: keep the vertical edge out of
                // (x,y,z) only on odd parity sites. With even L the parity
                // alternates along every column, so each node keeps exactly
                // one of its two vertical edges.
                if (!decimated || (x + y + z) % 2 == 1)
                    g.add_edge(v, node_index(spec, x, y, (z + 1) % L));
            }
        }
    }
    return g;
}

} // namespace

Graph generate(const LatticeSpec& spec) {
    spec.validate();
    Graph g = family_dimensions(spec.family) == 2 ? generate_2d(spec) : generate_3d(spec);

    const auto gamma = static_cast<std::uint32_t>(family_gamma(spec.family));
    for (std::uint32_t v = 0; v < g.node_count(); ++v)
        if (g.degree(v) != gamma)
            throw std::logic_error("lattice: generated node " + std::to_string(v) + " has degree " +
                                   std::to_string(g.degree(v)) + ", expected " + std::to_string(gamma));
    if (!g.connected())
        throw std::logic_error("lattice: generated graph is not connected");
    return g;
}

} // namespace swcol
