#include "dal/graph.hpp"

#include "dal/error.hpp"
#include "dal/graph6.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <sstream>

namespace dal {

namespace {

constexpr std::array family_names{
    std::pair{Family::Other, "other"},
    std::pair{Family::Cycle, "cycle"},
    std::pair{Family::Sun, "sun"},
    std::pair{Family::Prism, "prism"},
    std::pair{Family::Complete, "complete"},
    std::pair{Family::Wheel, "wheel"},
    std::pair{Family::Fan, "fan"},
    std::pair{Family::Friendship, "friendship"},
    std::pair{Family::Multipartite, "multipartite"},
};

auto invalid(const std::string & message) -> Error
{
    return Error(ErrorCode::InvalidParameter, message);
}

auto require_minimum(Family family, int n, int minimum) -> void
{
    if (n < minimum)
        throw invalid(to_string(family) + " needs n >= " + std::to_string(minimum) + ", got " + std::to_string(n));
}

auto parse_int(std::string_view text) -> int
{
    int value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size())
        throw invalid("not an integer: '" + std::string(text) + "'");
    return value;
}

} // namespace

auto to_string(Family family) -> std::string
{
    for (auto [f, name] : family_names)
        if (f == family)
            return name;
    return "other";
}

auto parse_family(const std::string & name) -> std::optional<Family>
{
    for (auto [f, n] : family_names)
        if (name == n)
            return f;
    return std::nullopt;
}

Graph::Graph(int order, const std::vector<Edge> & edges, FamilyInfo family) :
    _order(order),
    _words((order + 63) / 64),
    _family(std::move(family))
{
    if (order < 1)
        throw invalid("graph order must be at least 1");

    _rows.assign(static_cast<std::size_t>(order) * _words, 0);
    _adjacency.resize(order);
    _edges.reserve(edges.size());

    for (auto [u, w] : edges) {
        if (u < 0 || w < 0 || u >= order || w >= order)
            throw invalid("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(w));
        if (u == w)
            throw invalid("loop at vertex " + std::to_string(u));
        if (has_edge(u, w))
            throw invalid("repeated edge " + std::to_string(u) + "-" + std::to_string(w));
        _rows[static_cast<std::size_t>(u) * _words + w / 64] |= std::uint64_t{1} << (w % 64);
        _rows[static_cast<std::size_t>(w) * _words + u / 64] |= std::uint64_t{1} << (u % 64);
        _adjacency[u].push_back(w);
        _adjacency[w].push_back(u);
        _edges.emplace_back(std::min(u, w), std::max(u, w));
    }

    for (auto & list : _adjacency)
        std::sort(list.begin(), list.end());
    std::sort(_edges.begin(), _edges.end());
}

auto Graph::has_edge(Vertex u, Vertex w) const -> bool
{
    return (row(u)[w / 64] >> (w % 64)) & 1;
}

auto Graph::descriptor() const -> std::string
{
    switch (_family.family) {
        case Family::Other:
            return "graph6:" + encode_graph6(*this);
        case Family::Multipartite: {
            std::string out = "multipartite:";
            for (std::size_t i = 0; i < _family.parts.size(); ++i)
                out += (i ? "," : "") + std::to_string(_family.parts[i]);
            return out;
        }
        default:
            return to_string(_family.family) + ":" + std::to_string(_family.n);
    }
}

auto cycle(int n) -> Graph
{
    require_minimum(Family::Cycle, n, 3);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges, {Family::Cycle, n, {}});
}

auto sun(int n) -> Graph
{
    require_minimum(Family::Sun, n, 3);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(i, n + i);
    }
    return Graph(2 * n, edges, {Family::Sun, n, {}});
}

auto prism(int n) -> Graph
{
    require_minimum(Family::Prism, n, 3);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(n + i, n + (i + 1) % n);
        edges.emplace_back(i, n + i);
    }
    return Graph(2 * n, edges, {Family::Prism, n, {}});
}

auto complete(int n) -> Graph
{
    require_minimum(Family::Complete, n, 1);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph(n, edges, {Family::Complete, n, {}});
}

auto wheel(int n) -> Graph
{
    require_minimum(Family::Wheel, n, 3);
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(0, i);
        edges.emplace_back(i, i % n + 1);
    }
    return Graph(n + 1, edges, {Family::Wheel, n, {}});
}

auto fan(int n) -> Graph
{
    require_minimum(Family::Fan, n, 1);
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(0, i);
        if (i < n)
            edges.emplace_back(i, i + 1);
    }
    return Graph(n + 1, edges, {Family::Fan, n, {}});
}

auto friendship(int n) -> Graph
{
    require_minimum(Family::Friendship, n, 1);
    std::vector<Edge> edges;
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(0, 2 * i - 1);
        edges.emplace_back(0, 2 * i);
        edges.emplace_back(2 * i - 1, 2 * i);
    }
    return Graph(2 * n + 1, edges, {Family::Friendship, n, {}});
}

auto complete_multipartite(const std::vector<int> & parts) -> Graph
{
    if (parts.empty())
        throw invalid("multipartite needs at least one part");
    for (int p : parts)
        if (p < 1)
            throw invalid("multipartite part sizes must be >= 1");

    std::vector<int> start(parts.size() + 1, 0);
    std::partial_sum(parts.begin(), parts.end(), start.begin() + 1);
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (std::size_t b = a + 1; b < parts.size(); ++b)
            for (int u = start[a]; u < start[a + 1]; ++u)
                for (int w = start[b]; w < start[b + 1]; ++w)
                    edges.emplace_back(u, w);
    return Graph(start.back(), edges, {Family::Multipartite, static_cast<int>(parts.size()), parts});
}

auto build_family(Family family, int n, const std::vector<int> & parts) -> Graph
{
    switch (family) {
        case Family::Cycle: return cycle(n);
        case Family::Sun: return sun(n);
        case Family::Prism: return prism(n);
        case Family::Complete: return complete(n);
        case Family::Wheel: return wheel(n);
        case Family::Fan: return fan(n);
        case Family::Friendship: return friendship(n);
        case Family::Multipartite: return complete_multipartite(parts);
        case Family::Other: break;
    }
    throw invalid("no generator for family 'other'");
}

auto parse_family_spec(const std::string & spec) -> Graph
{
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw invalid("family spec must look like name:n, got '" + spec + "'");
    auto family = parse_family(spec.substr(0, colon));
    if (! family || *family == Family::Other)
        throw invalid("unknown family '" + spec.substr(0, colon) + "'");

    std::string_view rest(spec);
    rest.remove_prefix(colon + 1);
    if (*family == Family::Multipartite) {
        std::vector<int> parts;
        while (true) {
            auto comma = rest.find(',');
            parts.push_back(parse_int(rest.substr(0, comma)));
            if (comma == std::string_view::npos)
                break;
            rest.remove_prefix(comma + 1);
        }
        return complete_multipartite(parts);
    }
    return build_family(*family, parse_int(rest));
}

} // namespace dal
