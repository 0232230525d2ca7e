#include "outerspread/graph6.hpp"

#include <stdexcept>

namespace osp {

namespace {

constexpr char kHeader[] = ">>graph6<<";

std::size_t bit_bytes(int n) {
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    return (bits + 5) / 6;
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        // 63 <= n <= 258047: '~' then 18 bits of n in three 6-bit groups.
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    if (n >= 2) {
        std::string bits(bit_bytes(n), static_cast<char>(0));
        std::size_t pos = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) {
                if (g.has_edge(u, v)) bits[pos / 6] = static_cast<char>(bits[pos / 6] | (1 << (5 - pos % 6)));
                ++pos;
            }
        for (char& c : bits) c = static_cast<char>(c + 63);
        out += bits;
    }
    return out;
}

Graph graph6_decode(const std::string& text) {
    std::string s = text;
    if (s.rfind(kHeader, 0) == 0) s.erase(0, sizeof(kHeader) - 1);
    if (s.empty()) throw std::invalid_argument("graph6: empty input");
    for (char c : s)
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte outside printable range");

    std::size_t at = 0;
    int n;
    if (s[0] == '~') {
        if (s.size() < 4) throw std::invalid_argument("graph6: truncated vertex count");
        n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
        at = 4;
    } else {
        n = s[0] - 63;
        at = 1;
    }
    if (n > Graph::max_vertices) throw std::invalid_argument("graph6: vertex count above supported cap");

    const std::size_t need = (n >= 2) ? bit_bytes(n) : 0;
    if (s.size() - at != need) throw std::invalid_argument("graph6: body length mismatch");

    Graph g(n);
    std::size_t pos = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            const int byte = s[at + pos / 6] - 63;
            if ((byte >> (5 - pos % 6)) & 1) g.add_edge(u, v);
            ++pos;
        }
    // padding bits past the triangle must be zero
    for (std::size_t tail = pos; tail < need * 6; ++tail) {
        const int byte = s[at + tail / 6] - 63;
        if ((byte >> (5 - tail % 6)) & 1) throw std::invalid_argument("graph6: nonzero padding bits");
    }
    return g;
}

}  // namespace osp
