#include "rainbow/graph6.hpp"

#include "rainbow/error.hpp"

namespace rainbow {
namespace {

constexpr int kBias = 63;

int decode_char(char c, std::size_t pos) {
    const int value = static_cast<unsigned char>(c) - kBias;
    if (value < 0 || value > 63) {
        throw ParseError("graph6: character out of range at offset " + std::to_string(pos));
    }
    return value;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw ParseError("graph6: empty input");
    }
    if (text.front() == '>') {
        throw ParseError("graph6: headers are not supported");
    }
    if (text.front() == ':' || text.front() == ';' || text.front() == '&') {
        throw ParseError("graph6: sparse6/digraph6 input is not supported");
    }

    std::size_t pos = 0;
    int n = 0;
    if (text.front() == '~') {
        if (text.size() >= 2 && text[1] == '~') {
            throw ParseError("graph6: orders above 258047 are not supported");
        }
        if (text.size() < 4) {
            throw ParseError("graph6: truncated length header");
        }
        for (std::size_t i = 1; i <= 3; ++i) {
            n = (n << 6) | decode_char(text[i], i);
        }
        if (n <= 62) {
            throw ParseError("graph6: non-canonical length header");
        }
        pos = 4;
    } else {
        n = decode_char(text.front(), 0);
        pos = 1;
    }

    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t expected = (bits + 5) / 6;
    if (text.size() - pos != expected) {
        throw ParseError("graph6: expected " + std::to_string(expected) + " body characters for order " +
                         std::to_string(n) + ", got " + std::to_string(text.size() - pos));
    }

    Graph g(n);
    std::size_t bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            const int chunk = decode_char(text[pos + bit / 6], pos + bit / 6);
            if ((chunk >> (5 - static_cast<int>(bit % 6))) & 1) {
                g.add_edge(row, col);
            }
        }
    }
    if (bits % 6 != 0) {
        const int last = decode_char(text.back(), text.size() - 1);
        const int pad = 6 - static_cast<int>(bits % 6);
        if ((last & ((1 << pad) - 1)) != 0) {
            throw ParseError("graph6: trailing padding bits are nonzero");
        }
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder) {
        throw std::invalid_argument("graph6: order " + std::to_string(n) + " is too large");
    }
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int chunk = 0;
    int filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            chunk = (chunk << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
    }
    return out;
}

}  // namespace rainbow
