#include "eglocal/graph6.hpp"

#include <array>

namespace eglocal {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

int sextet(std::string_view s, std::size_t i) {
    if (i >= s.size()) throw Graph6Error("truncated record", i);
    const auto c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw Graph6Error("byte outside printable graph6 range", i);
    return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
    std::size_t base = 0;
    if (line.starts_with(kHeader)) base = kHeader.size();
    std::string_view s = line.substr(base);

    std::size_t pos = 0;
    int n = 0;
    const int first = sextet(s, 0);
    if (first == 63) {
        // "~" followed by 18 bits; "~~" (36-bit form) exceeds our cap.
        if (s.size() > 1 && s[1] == '~') throw Graph6Error("vertex count exceeds 64", base + 1);
        for (std::size_t i = 1; i <= 3; ++i) {
            try {
                n = (n << 6) | sextet(s, i);
            } catch (const Graph6Error& e) {
                throw Graph6Error("malformed length header", base + e.offset());
            }
        }
        if (n < 63) throw Graph6Error("non-canonical length header", base + 1);
        if (n > Graph::kMaxVertices) throw Graph6Error("vertex count exceeds 64", base + 1);
        pos = 4;
    } else {
        n = first;
        pos = 1;
    }

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (s.size() < pos + body) throw Graph6Error("truncated record", base + s.size());
    if (s.size() > pos + body) throw Graph6Error("trailing bytes after record", base + pos + body);

    std::array<std::uint64_t, Graph::kMaxVertices> rows{};
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = sextet(s, pos + k / 6);
            if ((byte >> (5 - k % 6)) & 1) {
                rows[i] |= std::uint64_t{1} << j;
                rows[j] |= std::uint64_t{1} << i;
            }
        }
    }
    if (bits % 6 != 0) {
        const std::size_t last = pos + body - 1;
        const int pad = static_cast<int>(6 - bits % 6);
        if (sextet(s, last) & ((1 << pad) - 1)) throw Graph6Error("nonzero padding bits", base + last);
    }
    // Bytes not reached by the edge loop still need validating.
    for (std::size_t i = pos; i < pos + body; ++i) {
        try {
            sextet(s, i);
        } catch (const Graph6Error& e) {
            throw Graph6Error("byte outside printable graph6 range", base + e.offset());
        }
    }
    return Graph::from_rows(n, std::span(rows).first(n));
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kBias + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(kBias + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(kBias + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(kBias + (n & 63)));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | ((g.row(i) >> j) & 1U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(kBias + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(kBias + (acc << (6 - filled))));
    return out;
}

std::vector<Graph6Record> read_graph6_records(std::istream& in) {
    std::vector<Graph6Record> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (line.empty() || line == kHeader) continue;
        out.push_back({lineno, line});
    }
    return out;
}

}  // namespace eglocal
