#include "swcol/dimacs.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace swcol {

void write_dimacs(const Graph& g, std::ostream& os) {
    os << "p edge " << g.node_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges())
        os << "e " << (u + 1) << ' ' << (v + 1) << '\n';
}

std::string dimacs_string(const Graph& g) {
    std::ostringstream os;
    write_dimacs(g, os);
    return os.str();
}

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
    throw std::runtime_error("dimacs: line " + std::to_string(line_no) + ": " + what);
}

} // namespace

Graph read_dimacs(std::istream& is) {
    std::optional<Graph> g;
    std::uint64_t declared_edges = 0;
    std::uint64_t seen_edges = 0;
    std::string line;
    std::size_t line_no = 0;

    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream ls(line);
        char tag = 0;
        ls >> tag;
        if (tag == 'p') {
            if (g)
                parse_fail(line_no, "duplicate problem line");
            std::string kind;
            std::uint64_t n = 0, m = 0;
            if (!(ls >> kind >> n >> m) || kind != "edge")
                parse_fail(line_no, "expected 'p edge <N> <M>'");
            if (n == 0 || n > UINT32_MAX)
                parse_fail(line_no, "node count out of range");
            g.emplace(static_cast<std::uint32_t>(n));
            declared_edges = m;
        } else if (tag == 'e') {
            if (!g)
                parse_fail(line_no, "edge before problem line");
            std::uint64_t u = 0, v = 0;
            if (!(ls >> u >> v))
                parse_fail(line_no, "expected 'e <u> <v>'");
            if (u == 0 || v == 0 || u > g->node_count() || v > g->node_count())
                parse_fail(line_no, "endpoint out of range (endpoints are 1-indexed)");
            if (u == v)
                parse_fail(line_no, "self-loop rejected");
            if (!g->add_edge(static_cast<std::uint32_t>(u - 1), static_cast<std::uint32_t>(v - 1)))
                parse_fail(line_no, "duplicate edge");
            ++seen_edges;
        } else {
            parse_fail(line_no, std::string("unknown line tag '") + tag + "'");
        }
    }
    if (!g)
        throw std::runtime_error("dimacs: missing problem line");
    if (seen_edges != declared_edges)
        throw std::runtime_error("dimacs: header declares " + std::to_string(declared_edges) + " edges but " +
                                 std::to_string(seen_edges) + " were given");
    return std::move(*g);
}

Graph read_dimacs_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("dimacs: cannot open " + path.string());
    return read_dimacs(in);
}

} // namespace swcol
