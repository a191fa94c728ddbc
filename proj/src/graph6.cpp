#include "graph6.hpp"

#include <utility>
#include <vector>

#include "errors.hpp"

namespace bmp {

namespace {

constexpr int kBias = 63;
constexpr char kHeader[] = ">>graph6<<";

int take_sextet(std::string_view bytes, size_t& pos) {
    if (pos >= bytes.size()) throw FormatError("truncated graph6 string");
    unsigned char c = static_cast<unsigned char>(bytes[pos++]);
    if (c < 63 || c > 126)
        throw FormatError("byte " + std::to_string(static_cast<int>(c)) +
                          " outside graph6 range [63,126] at offset " + std::to_string(pos - 1));
    return c - kBias;
}

} // namespace

Graph parse_graph6(std::string_view bytes) {
    if (bytes.starts_with(kHeader)) bytes.remove_prefix(sizeof(kHeader) - 1);
    while (bytes.size() && (bytes.back() == '\n' || bytes.back() == '\r')) bytes.remove_suffix(1);
    if (bytes.empty()) throw FormatError("empty graph6 string");

    size_t pos = 0;
    long long n;
    int first = take_sextet(bytes, pos);
    if (first < 63) {
        n = first;
    } else {
        if (pos < bytes.size() && bytes[pos] == 126)
            throw FormatError("graph6 order beyond supported range");
        n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | take_sextet(bytes, pos);
        if (n < 63) throw FormatError("non-canonical graph6 order encoding");
    }

    const long long bit_count = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> edges;
    int sextet = 0;
    int bits_left = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bits_left == 0) {
                sextet = take_sextet(bytes, pos);
                bits_left = 6;
            }
            if (sextet & (1 << (bits_left - 1))) edges.emplace_back(i, j);
            --bits_left;
        }
    }
    // Trailing zero padding is mandatory; anything else is not graph6.
    if (bits_left > 0 && (sextet & ((1 << bits_left) - 1)) != 0)
        throw FormatError("nonzero padding bits");
    if (pos != bytes.size())
        throw FormatError("trailing bytes after " + std::to_string(bit_count) + " adjacency bits");

    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    } else {
        throw FormatError("graph6 order beyond supported range");
    }

    int sextet = 0;
    int bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            sextet = (sextet << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(sextet + kBias));
                sextet = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((sextet << (6 - bits)) + kBias));
    return out;
}

} // namespace bmp
