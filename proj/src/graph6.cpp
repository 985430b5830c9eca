#include "dal/graph6.hpp"

#include "dal/error.hpp"

#include <cstdint>

namespace dal {

namespace {

constexpr int bias = 63;
constexpr std::string_view header = ">>graph6<<";

auto malformed(const std::string & message) -> Error
{
    return Error(ErrorCode::MalformedInput, "graph6: " + message);
}

auto append_order(std::string & out, std::uint64_t n) -> void
{
    auto put_bits = [&](int groups) {
        for (int g = groups - 1; g >= 0; --g)
            out.push_back(static_cast<char>(((n >> (6 * g)) & 63) + bias));
    };
    if (n <= 62)
        out.push_back(static_cast<char>(n + bias));
    else if (n <= 258047) {
        out.push_back(126);
        put_bits(3);
    }
    else {
        out.push_back(126);
        out.push_back(126);
        put_bits(6);
    }
}

} // namespace

auto encode_graph6(const Graph & g) -> std::string
{
    const std::uint64_t n = static_cast<std::uint64_t>(g.order());
    std::string out;
    append_order(out, n);

    int acc = 0, filled = 0;
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + bias));
                acc = filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + bias));
    return out;
}

auto decode_graph6(std::string_view line) -> Graph
{
    if (line.starts_with(header))
        line.remove_prefix(header.size());
    while (! line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty())
        throw malformed("empty line");
    if (line.front() == ':' || line.front() == '&')
        throw malformed("sparse6/digraph6 input is not supported");
    for (char c : line)
        if (c < 63 || c > 126)
            throw malformed("character out of range: code " + std::to_string(static_cast<int>(static_cast<unsigned char>(c))));

    auto value = [&](std::size_t at) { return static_cast<std::uint64_t>(line[at] - bias); };

    std::uint64_t n = 0;
    std::size_t pos = 0;
    if (line[0] != 126) {
        n = value(0);
        pos = 1;
    }
    else if (line.size() >= 2 && line[1] != 126) {
        if (line.size() < 4)
            throw malformed("truncated order field");
        n = (value(1) << 12) | (value(2) << 6) | value(3);
        pos = 4;
    }
    else {
        if (line.size() < 8)
            throw malformed("truncated order field");
        for (std::size_t i = 2; i < 8; ++i)
            n = (n << 6) | value(i);
        pos = 8;
    }
    if (n < 1)
        throw malformed("order must be at least 1");
    if (n > 1'000'000)
        throw malformed("order " + std::to_string(n) + " is too large");

    const std::uint64_t bits = n * (n - 1) / 2;
    const std::uint64_t expected = (bits + 5) / 6;
    if (line.size() - pos != expected)
        throw malformed("expected " + std::to_string(expected) + " adjacency bytes, found " + std::to_string(line.size() - pos));

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (std::uint64_t j = 1; j < n; ++j)
        for (std::uint64_t i = 0; i < j; ++i, ++k) {
            auto byte = value(pos + k / 6);
            if ((byte >> (5 - k % 6)) & 1)
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    if (k % 6 != 0) {
        auto last = value(pos + k / 6);
        if (last & ((std::uint64_t{1} << (6 - k % 6)) - 1))
            throw malformed("non-zero padding bits");
    }
    return Graph(static_cast<int>(n), edges);
}

} // namespace dal
