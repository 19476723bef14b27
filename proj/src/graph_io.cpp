#include "aenergy/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <vector>

#include "aenergy/error.hpp"

namespace aenergy {

namespace {

constexpr int kBias = 63;
constexpr std::uint64_t kShortLimit = 62;
constexpr std::uint64_t kMediumLimit = 258047;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

[[noreturn]] void malformed(const std::string& why) { throw Error(ErrorCode::MalformedGraph6, why); }

int sextet(std::string_view text, std::size_t pos) {
    if (pos >= text.size()) malformed("truncated input");
    auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) malformed("byte " + std::to_string(c) + " at offset " + std::to_string(pos) + " outside 63..126");
    return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) text.remove_prefix(header.size());
    if (text.empty()) malformed("empty input");

    std::size_t pos = 0;
    std::uint64_t n = 0;
    int prefix_bytes = 1;
    if (text[0] != 126) {
        n = static_cast<std::uint64_t>(sextet(text, 0));
    } else if (text.size() > 1 && text[1] != 126) {
        prefix_bytes = 3;
        pos = 1;
    } else {
        prefix_bytes = 6;
        pos = 2;
    }
    if (prefix_bytes > 1) {
        for (int i = 0; i < prefix_bytes; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos + i));
        pos += prefix_bytes;
    } else {
        pos = 1;
    }
    if (n > 1'000'000) malformed("vertex count " + std::to_string(n) + " exceeds supported maximum");

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes) {
        malformed("expected " + std::to_string(bytes) + " data bytes for n=" + std::to_string(n) + ", got " +
                  std::to_string(text.size() - pos));
    }
    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (Vertex v = 1; v < n; ++v) {
        for (Vertex u = 0; u < v; ++u, ++k) {
            int byte = sextet(text, pos + k / 6);
            if (byte & (1 << (5 - k % 6))) edges.emplace_back(u, v);
        }
    }
    // Padding bits must be zero in canonical graph6.
    if (bits % 6 != 0) {
        int last = sextet(text, pos + bytes - 1);
        if (last & ((1 << (6 - bits % 6)) - 1)) malformed("nonzero padding bits");
    }
    return make_graph(n, edges);
}

std::string write_graph6(const Graph& g) {
    const std::uint64_t n = g.order();
    std::string out;
    if (n <= kShortLimit) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        int groups = n <= kMediumLimit ? 3 : 6;
        out.push_back(static_cast<char>(126));
        if (groups == 6) out.push_back(static_cast<char>(126));
        for (int i = groups - 1; i >= 0; --i) out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + kBias));
    }
    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::vector<std::uint8_t> data((bits + 5) / 6, 0);
    for (auto [u, v] : g.edges()) {
        // Column-major upper triangle: pair (u, v) with u < v sits at v(v-1)/2 + u.
        std::uint64_t k = static_cast<std::uint64_t>(v) * (v - 1) / 2 + u;
        data[k / 6] |= static_cast<std::uint8_t>(1u << (5 - k % 6));
    }
    for (auto b : data) out.push_back(static_cast<char>(b + kBias));
    return out;
}

namespace {

std::int64_t parse_int(std::string_view token, ErrorCode code, const char* what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
        throw Error(code, std::string(what) + ": not an integer: '" + std::string(token) + "'");
    }
    return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<std::vector<std::string_view>> lines;
    while (!text.empty()) {
        auto nl = text.find('\n');
        auto line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (line.empty() || line.front() == '#') continue;
        lines.push_back(split_ws(line));
    }
    if (lines.empty()) throw Error(ErrorCode::ParseError, "missing header line \"n m\"");
    const auto& header = lines.front();
    if (header.size() != 2) throw Error(ErrorCode::ParseError, "header must be \"n m\"");
    std::int64_t n = parse_int(header[0], ErrorCode::ParseError, "vertex count");
    std::int64_t m = parse_int(header[1], ErrorCode::ParseError, "edge count");
    if (n < 0 || m < 0) throw Error(ErrorCode::ParseError, "negative count in header");

    std::vector<Edge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& t = lines[i];
        if (t.size() != 2) throw Error(ErrorCode::ParseError, "edge line " + std::to_string(i) + " must hold two vertices");
        std::int64_t u = parse_int(t[0], ErrorCode::ParseError, "vertex");
        std::int64_t v = parse_int(t[1], ErrorCode::ParseError, "vertex");
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw Error(ErrorCode::InvalidEdge, "edge (" + std::string(t[0]) + "," + std::string(t[1]) + ") out of range");
        }
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    Graph g = make_graph(static_cast<std::size_t>(n), edges);
    if (static_cast<std::int64_t>(g.size()) != m) {
        throw Error(ErrorCode::EdgeCountMismatch,
                    "header declares " + std::to_string(m) + " edges, found " + std::to_string(g.size()));
    }
    return g;
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

FamilySpec parse_family_spec(std::string_view text) {
    text = trim(text);
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw Error(ErrorCode::ParseError, "family spec must look like name:int[,int]");
    }
    auto name = text.substr(0, colon);
    auto family = family_from_name(name);
    if (!family) throw Error(ErrorCode::UnknownFamily, "'" + std::string(name) + "'");

    FamilySpec spec{*family, {}};
    auto rest = text.substr(colon + 1);
    while (true) {
        auto comma = rest.find(',');
        auto token = trim(rest.substr(0, comma));
        spec.params.push_back(parse_int(token, ErrorCode::InvalidFamilyParam, "family parameter"));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    validate(spec);
    return spec;
}

std::string format_family_spec(const FamilySpec& spec) {
    std::string out = family_name(spec.family) + ":";
    for (std::size_t i = 0; i < spec.params.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(spec.params[i]);
    }
    return out;
}

}  // namespace aenergy
