#pragma once

#include "swcol/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace swcol {

/// The four starting lattices. All are generated with periodic boundaries so
/// that every node has degree exactly gamma(family):
///   Square      2-D, gamma 4
///   Triangular  2-D, gamma 6 (square grid plus the (+1,+1)/(-1,-1) diagonal)
///   Cubic6      3-D simple cubic, gamma 6
///   Cubic5      3-D cubic with every second vertical edge removed in a
///               chess-board pattern, gamma 5
enum class LatticeFamily { Square, Triangular, Cubic6, Cubic5 };

std::string_view family_name(LatticeFamily family);
std::optional<LatticeFamily> family_from_name(std::string_view name);
int family_gamma(LatticeFamily family);
int family_dimensions(LatticeFamily family); // 2 or 3

struct LatticeSpec {
    LatticeFamily family = LatticeFamily::Square;
    std::uint32_t L = 0;

    std::uint64_t node_count() const; // L^2 or L^3

    /// Throws std::invalid_argument naming the violated constraint:
    ///   Square: L >= 3.  Triangular: L >= 3 and L % 3 == 0 (the repeating
    ///   three-colour pattern must close under the periodic wrap).
    ///   Cubic6: L >= 3.  Cubic5: L >= 4 and L even (the chess-board edge
    ///   deletion is only consistent under the wrap for even L).
    /// L >= 3 everywhere because L = 2 with periodic wrap would collapse
    /// the two edges between a node pair into one, breaking regularity.
    void validate() const;

    friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;
};

/// Builds the lattice. Postconditions checked before returning: every node
/// has degree exactly family_gamma(...), and the graph is connected.
Graph generate(const LatticeSpec& spec);

/// Row-major coordinate convention, x fastest:
///   2-D: index = x + L*y          3-D: index = x + L*y + L^2*z
/// For 2-D families the z coordinate is 0.
std::uint32_t node_index(const LatticeSpec& spec, std::uint32_t x, std::uint32_t y, std::uint32_t z = 0);
std::array<std::uint32_t, 3> node_coords(const LatticeSpec& spec, std::uint32_t index);

} // namespace swcol
