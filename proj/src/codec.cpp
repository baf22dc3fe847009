#include "forcing/codec.hpp"

#include <sstream>

namespace forcing {

namespace {
constexpr int kG6Lo = 63;  // printable offset
constexpr int kG6Hi = 126;
constexpr std::string_view kHeader = ">>graph6<<";
} // namespace

std::string to_graph6(const SimpleGraph& g) {
    int n = g.vertex_count();
    if (n > 62) throw Error(errc::bad_parameter, "graph6 writer limited to n <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + kG6Lo));
    int acc = 0, nbits = 0;
    // upper triangle, column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kG6Lo));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kG6Lo));
    return out;
}

SimpleGraph from_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
    if (line.empty()) throw Error(errc::parse_error, "empty graph6 line");
    if (line[0] == ':' || line[0] == ';') throw Error(errc::parse_error, "sparse6 input not supported");
    if (line[0] == '&') throw Error(errc::parse_error, "digraph6 input not supported");
    if (line[0] == kG6Hi) throw Error(errc::parse_error, "multi-byte graph6 size (n > 62) not supported");
    int c = static_cast<unsigned char>(line[0]);
    if (c < kG6Lo || c > kG6Hi) throw Error(errc::parse_error, "invalid graph6 size byte");
    int n = c - kG6Lo;
    std::size_t pos = 1;
    int acc = 0, nbits = 0;
    std::vector<Edge> edges;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            if (nbits == 0) {
                if (pos >= line.size()) throw Error(errc::parse_error, "graph6 line truncated");
                int b = static_cast<unsigned char>(line[pos++]);
                if (b < kG6Lo || b > kG6Hi) throw Error(errc::parse_error, "invalid graph6 data byte");
                acc = b - kG6Lo;
                nbits = 6;
            }
            if (acc & (1 << (nbits - 1))) edges.emplace_back(row, col);
            --nbits;
        }
    if (pos != line.size()) throw Error(errc::parse_error, "trailing bytes after graph6 data");
    return build_graph(n, edges);
}

std::string to_edgelist(const SimpleGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

SimpleGraph from_edgelist(std::string_view text) {
    std::istringstream in{std::string(text)};
    int n;
    if (!(in >> n)) throw Error(errc::parse_error, "edgelist: missing vertex count");
    std::vector<Edge> edges;
    int u, v;
    while (in >> u) {
        if (!(in >> v)) throw Error(errc::parse_error, "edgelist: dangling endpoint");
        edges.emplace_back(u, v);
    }
    return build_graph(n, edges);
}

std::string to_multigraph_text(const Multigraph& m) {
    std::ostringstream out;
    out << m.vertex_count() << "\n";
    for (auto [u, v] : m.support()) out << u << " " << v << " " << m.multiplicity(u, v) << "\n";
    return out.str();
}

Multigraph from_multigraph_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    int n;
    if (!(in >> n)) throw Error(errc::parse_error, "multigraph: missing vertex count");
    if (n < 0) throw Error(errc::parse_error, "multigraph: negative vertex count");
    Multigraph m(n);
    int u, v, mult;
    while (in >> u) {
        if (!(in >> v >> mult)) throw Error(errc::parse_error, "multigraph: incomplete line");
        if (u < 0 || u >= n || v < 0 || v >= n) throw Error(errc::parse_error, "multigraph: endpoint out of range");
        if (u == v) throw Error(errc::parse_error, "multigraph: loop");
        if (mult <= 0) throw Error(errc::parse_error, "multigraph: non-positive multiplicity");
        if (m.multiplicity(u, v) != 0) throw Error(errc::parse_error, "multigraph: pair listed twice");
        m.set_multiplicity(u, v, mult);
    }
    return m;
}

} // namespace forcing
