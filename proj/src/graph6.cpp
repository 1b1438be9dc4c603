#include "brouwer/graph6.hpp"

namespace brouwer {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view line, size_t base, size_t pos) {
    unsigned char c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126)
        throw Graph6Error("character outside graph6 range [63,126]", base + pos);
    return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    size_t base = 0;
    if (line.substr(0, kHeader.size()) == kHeader) {
        base = kHeader.size();
        line.remove_prefix(kHeader.size());
    }
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw Graph6Error("empty graph6 line", base);

    size_t pos = 0;
    long long n;
    int first = sextet(line, base, pos++);
    if (first < 63) {
        n = first;
    } else {
        // 126 prefix: n in three sextets, big-endian.
        if (line.size() < 4) throw Graph6Error("truncated vertex-count prefix", base + line.size());
        int s1 = sextet(line, base, 1);
        if (s1 == 63) throw Graph6Error("vertex counts >= 258048 not supported", base + 1);
        int s2 = sextet(line, base, 2);
        int s3 = sextet(line, base, 3);
        n = (static_cast<long long>(s1) << 12) | (s2 << 6) | s3;
        pos = 4;
    }
    if (n < 1 || n > kMaxVertices)
        throw Graph6Error("vertex count " + std::to_string(n) + " outside [1," +
                              std::to_string(kMaxVertices) + "]",
                          base);

    const long long nbits = n * (n - 1) / 2;
    const size_t nchars = static_cast<size_t>((nbits + 5) / 6);
    if (line.size() - pos != nchars)
        throw Graph6Error("body length " + std::to_string(line.size() - pos) + ", expected " +
                              std::to_string(nchars),
                          base + line.size());

    Graph g(static_cast<int>(n));
    long long bit = 0;
    int i = 0, j = 1;
    for (size_t c = 0; c < nchars; ++c) {
        int v = sextet(line, base, pos + c);
        for (int b = 5; b >= 0; --b, ++bit) {
            bool set = (v >> b) & 1;
            if (bit < nbits) {
                if (set) g.add_edge(i, j);
                if (++i == j) {
                    i = 0;
                    ++j;
                }
            } else if (set) {
                throw Graph6Error("nonzero padding bits", base + pos + c);
            }
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    std::string out;
    const int n = g.n();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nb = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
    return out;
}

}  // namespace brouwer
