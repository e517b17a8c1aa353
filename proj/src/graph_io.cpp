#include "turan/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace turan {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

int body_bits(int n) { return n * (n - 1) / 2; }

}  // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph graph6_decode(std::string_view line) {
    std::size_t pos = 0;
    if (line.substr(0, kGraph6Header.size()) == kGraph6Header) pos = kGraph6Header.size();
    if (pos >= line.size()) throw FormatError("graph6: empty input", pos);

    auto chunk = [&](std::size_t at) -> int {
        unsigned char c = static_cast<unsigned char>(line[at]);
        if (c < 63 || c > 126) throw FormatError("graph6: byte out of range", at);
        return c - 63;
    };

    int n;
    if (static_cast<unsigned char>(line[pos]) == 126) {
        if (pos + 3 >= line.size()) throw FormatError("graph6: truncated size", line.size());
        if (static_cast<unsigned char>(line[pos + 1]) == 126)
            throw FormatError("graph6: vertex count beyond supported range", pos + 1);
        n = (chunk(pos + 1) << 12) | (chunk(pos + 2) << 6) | chunk(pos + 3);
        pos += 4;
    } else {
        n = chunk(pos);
        pos += 1;
    }
    if (n > kMaxVertices)
        throw FormatError("graph6: more than 64 vertices unsupported here", pos - 1);

    int bits = body_bits(n);
    std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() - pos < need) throw FormatError("graph6: truncated body", line.size());
    if (line.size() - pos > need) throw FormatError("graph6: trailing bytes", pos + need);

    Graph g(n);
    int bi = 0;
    for (std::size_t k = 0; k < need; ++k) {
        int v = chunk(pos + k);
        for (int b = 5; b >= 0; --b, ++bi) {
            int on = (v >> b) & 1;
            if (bi >= bits) {
                if (on) throw FormatError("graph6: nonzero padding bits", pos + k);
                continue;
            }
            if (on) {
                // bit index bi enumerates pairs (i,j), j=1..n-1, i<j, column-major
                int j = 1, before = 0;
                while (before + j <= bi) before += j++;
                g = g.with_edge(bi - before, j);
            }
        }
    }
    return g;
}

std::string edge_list_encode(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.vertex_count() << " " << es.size() << "\n";
    for (auto [u, v] : es) out << u << " " << v << "\n";
    return out.str();
}

Graph edge_list_decode(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n, m;
    if (!(in >> n >> m)) throw FormatError("edge list: expected \"n m\" header", 0);
    if (n < 0 || n > kMaxVertices) throw FormatError("edge list: bad vertex count", 0);
    if (m < 0) throw FormatError("edge list: bad edge count", 0);
    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v))
            throw FormatError("edge list: expected " + std::to_string(m) + " edges",
                              static_cast<std::size_t>(in.tellg() < 0 ? text.size()
                                                                      : std::size_t(in.tellg())));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw FormatError("edge list: vertex out of range", 0);
        if (u == v) throw FormatError("edge list: self-loop", 0);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return make_graph(static_cast<int>(n), edges);
}

std::vector<Graph> read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<Graph> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream probe(line);
        long long a, b;
        char extra;
        if (probe >> a >> b && !(probe >> extra)) {
            // Edge-list block: header plus b following edge lines.
            std::size_t header_line = lineno;
            std::string block = line;
            for (long long i = 0; i < b; ++i) {
                if (!std::getline(in, line))
                    throw FormatError(path + ": edge list truncated at line " +
                                          std::to_string(lineno),
                                      0);
                ++lineno;
                block += "\n" + line;
            }
            try {
                out.push_back(edge_list_decode(block));
            } catch (const FormatError& e) {
                throw FormatError(path + ":" + std::to_string(header_line) + ": " + e.what(),
                                  e.offset);
            }
            continue;
        }
        try {
            out.push_back(graph6_decode(line));
        } catch (const FormatError& e) {
            throw FormatError(path + ":" + std::to_string(lineno) + ": " + e.what() +
                                  " (byte " + std::to_string(e.offset) + ")",
                              e.offset);
        }
    }
    if (out.empty()) throw FormatError(path + ": no graphs found", 0);
    return out;
}

bool parse_graph_shortcut(std::string_view name, Graph& out) {
    if (name.empty()) return false;
    auto all_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    char kind = name[0];
    std::string_view rest = name.substr(1);
    if (kind == 'K') {
        std::vector<int> parts;
        std::size_t start = 0;
        while (start <= rest.size()) {
            std::size_t comma = rest.find(',', start);
            std::string_view tok =
                rest.substr(start, comma == std::string_view::npos ? comma : comma - start);
            if (!all_digits(tok)) return false;
            parts.push_back(std::stoi(std::string(tok)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (parts.empty()) return false;
        if (parts.size() == 1) {
            out = complete_graph(parts[0]);
        } else {
            out = complete_multipartite(PartComposition(parts));
        }
        return true;
    }
    if (kind == 'C' && all_digits(rest)) {
        out = cycle_graph(std::stoi(std::string(rest)));
        return true;
    }
    if (kind == 'P' && all_digits(rest)) {
        out = path_graph(std::stoi(std::string(rest)));
        return true;
    }
    if (kind == 'T') {
        std::size_t colon = rest.find(':');
        if (colon == std::string_view::npos) return false;
        std::string_view a = rest.substr(0, colon), b = rest.substr(colon + 1);
        if (!all_digits(a) || !all_digits(b)) return false;
        out = turan_graph(std::stoi(std::string(a)), std::stoi(std::string(b)));
        return true;
    }
    return false;
}

Graph load_graph_argument(const std::string& arg) {
    Graph g;
    if (parse_graph_shortcut(arg, g)) return g;
    return read_graph_file(arg).front();
}

}  // namespace turan
