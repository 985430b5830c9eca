#pragma once

#include "dal/graph.hpp"

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

namespace dal {

/// A finite set of non-negative distances, kept sorted and unique.
/// Elements beyond a graph's diameter are allowed and select nothing.
class DistanceSet
{
public:
    DistanceSet() = default;
    DistanceSet(std::initializer_list<int> values);
    explicit DistanceSet(std::vector<int> values);

    auto contains(std::uint32_t distance) const noexcept -> bool;
    auto empty() const noexcept -> bool { return _values.empty(); }
    auto size() const noexcept -> std::size_t { return _values.size(); }
    auto values() const noexcept -> const std::vector<int> & { return _values; }

    /// "1", "0,2", "" for the empty set.
    auto to_string() const -> std::string;
    /// Comma-separated non-negative integers; throws Error(InvalidParameter).
    static auto parse(const std::string & text) -> DistanceSet;

    friend auto operator==(const DistanceSet &, const DistanceSet &) -> bool = default;

private:
    std::vector<int> _values;
};

/// All-pairs shortest path lengths of an unweighted graph.
class DistanceMatrix
{
public:
    static constexpr std::uint32_t infinite = std::numeric_limits<std::uint32_t>::max();

    DistanceMatrix(int order, std::vector<std::uint32_t> entries);

    auto order() const noexcept -> int { return _order; }
    auto at(Vertex x, Vertex y) const -> std::uint32_t { return _entries[static_cast<std::size_t>(x) * _order + y]; }

    /// Largest finite distance (0 for a single vertex or an edgeless graph).
    auto diameter() const -> int;
    auto connected() const -> bool;

    friend auto operator==(const DistanceMatrix &, const DistanceMatrix &) -> bool = default;

private:
    int _order;
    std::vector<std::uint32_t> _entries;
};

/// One BFS per source, sources distributed over OpenMP threads.
auto distance_matrix(const Graph & g) -> DistanceMatrix;
/// Single-threaded reference for the above.
auto distance_matrix_serial(const Graph & g) -> DistanceMatrix;

/// N_D(x) for every vertex, as sorted lists and as packed bit rows.
class DNeighborhoods
{
public:
    DNeighborhoods(const Graph & g, const DistanceSet & d);
    DNeighborhoods(const DistanceMatrix & dm, const DistanceSet & d);

    auto order() const noexcept -> int { return static_cast<int>(_members.size()); }
    auto members(Vertex x) const -> const std::vector<Vertex> & { return _members[x]; }
    auto degree(Vertex x) const -> int { return static_cast<int>(_members[x].size()); }
    auto contains(Vertex x, Vertex y) const -> bool;
    auto same(Vertex x, Vertex y) const -> bool;

    /// Some r with |N_D(x)| = r for all x, if one exists.
    auto regular_degree() const -> std::optional<int>;

private:
    int _words = 0;
    std::vector<std::vector<Vertex>> _members;
    std::vector<std::uint64_t> _rows;
};

auto d_neighborhood(const Graph & g, Vertex x, const DistanceSet & d) -> std::vector<Vertex>;

/// Every unordered pair {u, w}, u < w, with N_D(u) = N_D(w), in lexicographic order.
auto find_d_twins(const Graph & g, const DistanceSet & d) -> std::vector<Edge>;
auto find_d_twins(const DNeighborhoods & hoods) -> std::vector<Edge>;

} // namespace dal
