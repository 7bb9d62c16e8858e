#pragma once

#include "dompoly/config.hpp"
#include "dompoly/errors.hpp"
#include "dompoly/graph.hpp"

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace dompoly {

namespace detail {

inline bool blank_or_comment(const std::string& line) {
    for (char ch : line) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        return ch == '#';
    }
    return true;
}

inline void check_order_cap(long n) {
    const int cap = enumeration_cap();
    if (n > cap)
        throw size_limit_error(cap, "graph order " + std::to_string(n) + " exceeds the cap " +
                                        std::to_string(cap) + " (raise with --max-n or DOMPOLY_MAX_N, max " +
                                        std::to_string(kMaxVertices) + ")");
}

} // namespace detail

// Edge-list format: first line "n m", then m lines "u v". Lines whose
// first nonblank character is '#' are comments.
inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long line_no = 0;
    bool have_header = false;
    int n = 0, m = 0, edges_seen = 0;
    Graph g;

    while (std::getline(in, line)) {
        ++line_no;
        if (detail::blank_or_comment(line)) continue;
        std::istringstream fields(line);
        if (!have_header) {
            if (!(fields >> n >> m) || n < 0 || m < 0)
                throw parse_error(parse_error::Kind::malformed, line_no,
                                  "line " + std::to_string(line_no) + ": expected header \"n m\"");
            std::string extra;
            if (fields >> extra)
                throw parse_error(parse_error::Kind::malformed, line_no,
                                  "line " + std::to_string(line_no) + ": trailing tokens after header");
            detail::check_order_cap(n);
            g = Graph(n);
            have_header = true;
            continue;
        }
        if (edges_seen == m)
            throw parse_error(parse_error::Kind::malformed, line_no,
                              "line " + std::to_string(line_no) + ": more than " + std::to_string(m) +
                                  " edge lines");
        int u = 0, v = 0;
        std::string extra;
        if (!(fields >> u >> v) || (fields >> extra))
            throw parse_error(parse_error::Kind::malformed, line_no,
                              "line " + std::to_string(line_no) + ": expected edge \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error(parse_error::Kind::vertex_out_of_range, line_no,
                              "line " + std::to_string(line_no) + ": vertex out of range 0.." +
                                  std::to_string(n - 1));
        if (u == v)
            throw parse_error(parse_error::Kind::self_loop, line_no,
                              "line " + std::to_string(line_no) + ": self-loop at vertex " + std::to_string(u));
        if (g.has_edge(u, v))
            throw parse_error(parse_error::Kind::duplicate_edge, line_no,
                              "line " + std::to_string(line_no) + ": duplicate edge " + std::to_string(u) +
                                  " " + std::to_string(v));
        g.add_edge(u, v);
        ++edges_seen;
    }
    if (!have_header)
        throw parse_error(parse_error::Kind::malformed, line_no, "missing header line \"n m\"");
    if (edges_seen != m)
        throw parse_error(parse_error::Kind::truncated, line_no,
                          "expected " + std::to_string(m) + " edges, got " + std::to_string(edges_seen));
    return g;
}

// graph6: printable bytes 63..126, 6 bits each, upper adjacency triangle
// packed column by column. Optional ">>graph6<<" header is skipped.
inline Graph parse_graph6(const std::string& line_in) {
    std::string_view s(line_in);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
    constexpr std::string_view header = ">>graph6<<";
    if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
    if (s.empty())
        throw parse_error(parse_error::Kind::truncated, 1, "graph6: empty input");

    for (std::size_t i = 0; i < s.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126)
            throw parse_error(parse_error::Kind::invalid_character, static_cast<long>(i),
                              "graph6: invalid character at offset " + std::to_string(i));
    }

    std::size_t pos = 0;
    long n = 0;
    if (s[0] != '~') {
        n = s[0] - 63;
        pos = 1;
    } else {
        // Extended sizes exist in the format but always exceed our cap.
        if (s.size() >= 2 && s[1] == '~') {
            if (s.size() < 8)
                throw parse_error(parse_error::Kind::truncated, 1, "graph6: truncated size field");
            n = 0;
            for (int i = 2; i < 8; ++i) n = (n << 6) | (s[static_cast<std::size_t>(i)] - 63);
            pos = 8;
        } else {
            if (s.size() < 4)
                throw parse_error(parse_error::Kind::truncated, 1, "graph6: truncated size field");
            n = 0;
            for (int i = 1; i < 4; ++i) n = (n << 6) | (s[static_cast<std::size_t>(i)] - 63);
            pos = 4;
        }
    }
    detail::check_order_cap(n);

    const long bits = n * (n - 1) / 2;
    const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() - pos < bytes)
        throw parse_error(parse_error::Kind::truncated, 1,
                          "graph6: expected " + std::to_string(bytes) + " adjacency bytes, got " +
                              std::to_string(s.size() - pos));
    if (s.size() - pos > bytes)
        throw parse_error(parse_error::Kind::malformed, 1, "graph6: trailing characters");

    Graph g(static_cast<int>(n));
    long bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            int byte = s[pos + static_cast<std::size_t>(bit / 6)] - 63;
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(row, col);
        }
    }
    return g;
}

inline std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(n + 63)); // n <= 32 < 63, one size byte
    int acc = 0, filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

} // namespace dompoly
