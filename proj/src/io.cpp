#include "girthpath/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "girthpath/errors.hpp"

namespace girthpath {

namespace {

// Strips '#' comments and returns the next line with any payload.
bool next_payload_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
}

}  // namespace

Digraph parse_edge_list(std::istream& in) {
    std::string line;
    if (!next_payload_line(in, line)) throw parse_error("missing header line \"n m\"");
    long long n = 0, m = 0;
    {
        std::istringstream header(line);
        std::string extra;
        if (!(header >> n >> m) || (header >> extra))
            throw parse_error("malformed header line: " + line);
    }
    if (n < 0 || m < 0) throw parse_error("negative counts in header");

    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_payload_line(in, line))
            throw parse_error("expected " + std::to_string(m) + " arcs, found " + std::to_string(i));
        std::istringstream row(line);
        long long u = 0, v = 0;
        std::string extra;
        if (!(row >> u >> v) || (row >> extra)) throw parse_error("malformed arc line: " + line);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("arc endpoint out of range: " + line);
        arcs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (next_payload_line(in, line)) throw parse_error("trailing data after arc list: " + line);
    return Digraph(static_cast<int>(n), arcs);
}

Digraph parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    return parse_edge_list(in);
}

void write_edge_list(const Digraph& d, std::ostream& out) {
    out << d.vertex_count() << ' ' << d.arc_count() << '\n';
    for (const auto& [u, v] : d.arcs()) out << u << ' ' << v << '\n';
}

std::string canonical_edge_list(const Digraph& d) {
    std::ostringstream out;
    write_edge_list(d, out);
    return out.str();
}

void write_dot(const Digraph& d, std::ostream& out) {
    out << "digraph G {\n";
    for (Vertex v = 0; v < d.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const auto& [u, v] : d.arcs()) out << "  " << u << " -> " << v << ";\n";
    out << "}\n";
}

std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string hex(16, '0');
    for (int i = 15; i >= 0; --i) {
        hex[i] = digits[h & 0xf];
        h >>= 4;
    }
    return hex;
}

std::string digest(const Digraph& d) { return fnv1a64_hex(canonical_edge_list(d)); }

}  // namespace girthpath
