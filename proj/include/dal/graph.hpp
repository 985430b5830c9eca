#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dal {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

enum class Family {
    Other,
    Cycle,
    Sun,
    Prism,
    Complete,
    Wheel,
    Fan,
    Friendship,
    Multipartite,
};

auto to_string(Family family) -> std::string;
auto parse_family(const std::string & name) -> std::optional<Family>;

struct FamilyInfo
{
    Family family = Family::Other;
    int n = 0;
    std::vector<int> parts; // only for Multipartite
};

/// Immutable simple undirected graph on vertices 0..order()-1.
///
/// Adjacency is kept twice: packed 64-bit rows for constant-time membership
/// and sorted neighbour lists / a sorted edge list for iteration.
class Graph
{
public:
    /// Throws Error(InvalidParameter) on loops, repeated edges, endpoints out of
    /// range or an order below one.
    Graph(int order, const std::vector<Edge> & edges, FamilyInfo family = {});

    auto order() const noexcept -> int { return _order; }
    auto size() const noexcept -> int { return static_cast<int>(_edges.size()); }

    auto has_edge(Vertex u, Vertex w) const -> bool;
    auto neighbors(Vertex u) const -> const std::vector<Vertex> & { return _adjacency[u]; }
    auto degree(Vertex u) const -> int { return static_cast<int>(_adjacency[u].size()); }

    /// Edges as (u, w) with u < w, sorted.
    auto edges() const noexcept -> const std::vector<Edge> & { return _edges; }

    auto family() const noexcept -> const FamilyInfo & { return _family; }

    /// e.g. "cycle:5", "multipartite:2,3"; "graph6:<code>" for untagged graphs.
    auto descriptor() const -> std::string;

    auto words_per_row() const noexcept -> int { return _words; }
    auto row(Vertex u) const -> const std::uint64_t * { return _rows.data() + static_cast<std::size_t>(u) * _words; }

    friend auto operator==(const Graph & a, const Graph & b) -> bool
    {
        return a._order == b._order && a._edges == b._edges;
    }

private:
    int _order;
    int _words;
    std::vector<std::uint64_t> _rows;
    std::vector<std::vector<Vertex>> _adjacency;
    std::vector<Edge> _edges;
    FamilyInfo _family;
};

/// Builds a member of a named family with the fixed vertex order:
///   cycle, sun, prism: rim x_1..x_n at 0..n-1; sun leaves / second prism cycle y_i at n+i-1.
///   wheel, fan, friendship: centre x_0 at 0, then x_1.. at 1..
///   multipartite: parts laid out consecutively.
/// Minimum n: cycle/sun/prism/wheel 3, complete/fan/friendship 1; every part size >= 1.
auto build_family(Family family, int n, const std::vector<int> & parts = {}) -> Graph;

auto cycle(int n) -> Graph;
auto sun(int n) -> Graph;
auto prism(int n) -> Graph;
auto complete(int n) -> Graph;
auto wheel(int n) -> Graph;
auto fan(int n) -> Graph;
auto friendship(int n) -> Graph;
auto complete_multipartite(const std::vector<int> & parts) -> Graph;

/// Parses "family:n" or "multipartite:a,b,..." (the descriptor syntax).
auto parse_family_spec(const std::string & spec) -> Graph;

} // namespace dal
