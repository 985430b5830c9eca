#include "dal/distance.hpp"

#include "dal/error.hpp"

#include <algorithm>
#include <charconv>

namespace dal {

DistanceSet::DistanceSet(std::initializer_list<int> values) :
    DistanceSet(std::vector<int>(values))
{
}

DistanceSet::DistanceSet(std::vector<int> values) :
    _values(std::move(values))
{
    for (int v : _values)
        if (v < 0)
            throw Error(ErrorCode::InvalidParameter, "distances must be non-negative");
    std::sort(_values.begin(), _values.end());
    _values.erase(std::unique(_values.begin(), _values.end()), _values.end());
}

auto DistanceSet::contains(std::uint32_t distance) const noexcept -> bool
{
    if (distance == DistanceMatrix::infinite)
        return false;
    return std::binary_search(_values.begin(), _values.end(), static_cast<int>(distance));
}

auto DistanceSet::to_string() const -> std::string
{
    std::string out;
    for (std::size_t i = 0; i < _values.size(); ++i)
        out += (i ? "," : "") + std::to_string(_values[i]);
    return out;
}

auto DistanceSet::parse(const std::string & text) -> DistanceSet
{
    std::vector<int> values;
    std::string_view rest(text);
    while (! rest.empty()) {
        auto comma = rest.find(',');
        auto piece = rest.substr(0, comma);
        int value = 0;
        auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || ec != std::errc{} || end != piece.data() + piece.size() || value < 0)
            throw Error(ErrorCode::InvalidParameter, "bad distance set '" + text + "'");
        values.push_back(value);
        if (comma == std::string_view::npos)
            break;
        rest.remove_prefix(comma + 1);
        if (rest.empty())
            throw Error(ErrorCode::InvalidParameter, "bad distance set '" + text + "'");
    }
    return DistanceSet(std::move(values));
}

DistanceMatrix::DistanceMatrix(int order, std::vector<std::uint32_t> entries) :
    _order(order),
    _entries(std::move(entries))
{
}

auto DistanceMatrix::diameter() const -> int
{
    std::uint32_t best = 0;
    for (auto e : _entries)
        if (e != infinite)
            best = std::max(best, e);
    return static_cast<int>(best);
}

auto DistanceMatrix::connected() const -> bool
{
    return std::find(_entries.begin(), _entries.end(), infinite) == _entries.end();
}

namespace {

auto bfs_row(const Graph & g, Vertex source, std::uint32_t * row) -> void
{
    std::fill(row, row + g.order(), DistanceMatrix::infinite);
    std::vector<Vertex> queue;
    queue.reserve(g.order());
    row[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto u = queue[head];
        for (auto w : g.neighbors(u))
            if (row[w] == DistanceMatrix::infinite) {
                row[w] = row[u] + 1;
                queue.push_back(w);
            }
    }
}

} // namespace

auto distance_matrix(const Graph & g) -> DistanceMatrix
{
    const int v = g.order();
    std::vector<std::uint32_t> entries(static_cast<std::size_t>(v) * v);
#pragma omp parallel for schedule(dynamic, 16) if (v >= 256)
    for (int s = 0; s < v; ++s)
        bfs_row(g, s, entries.data() + static_cast<std::size_t>(s) * v);
    return DistanceMatrix(v, std::move(entries));
}

auto distance_matrix_serial(const Graph & g) -> DistanceMatrix
{
    const int v = g.order();
    std::vector<std::uint32_t> entries(static_cast<std::size_t>(v) * v);
    for (int s = 0; s < v; ++s)
        bfs_row(g, s, entries.data() + static_cast<std::size_t>(s) * v);
    return DistanceMatrix(v, std::move(entries));
}

DNeighborhoods::DNeighborhoods(const Graph & g, const DistanceSet & d) :
    DNeighborhoods(distance_matrix(g), d)
{
}

DNeighborhoods::DNeighborhoods(const DistanceMatrix & dm, const DistanceSet & d) :
    _words((dm.order() + 63) / 64),
    _members(dm.order()),
    _rows(static_cast<std::size_t>(dm.order()) * _words, 0)
{
    const int v = dm.order();
    for (int x = 0; x < v; ++x)
        for (int y = 0; y < v; ++y)
            if (d.contains(dm.at(x, y))) {
                _members[x].push_back(y);
                _rows[static_cast<std::size_t>(x) * _words + y / 64] |= std::uint64_t{1} << (y % 64);
            }
}

auto DNeighborhoods::contains(Vertex x, Vertex y) const -> bool
{
    return (_rows[static_cast<std::size_t>(x) * _words + y / 64] >> (y % 64)) & 1;
}

auto DNeighborhoods::same(Vertex x, Vertex y) const -> bool
{
    auto a = _rows.begin() + static_cast<std::ptrdiff_t>(x) * _words;
    auto b = _rows.begin() + static_cast<std::ptrdiff_t>(y) * _words;
    return std::equal(a, a + _words, b);
}

auto DNeighborhoods::regular_degree() const -> std::optional<int>
{
    if (_members.empty())
        return std::nullopt;
    for (const auto & m : _members)
        if (m.size() != _members.front().size())
            return std::nullopt;
    return static_cast<int>(_members.front().size());
}

auto d_neighborhood(const Graph & g, Vertex x, const DistanceSet & d) -> std::vector<Vertex>
{
    std::vector<std::uint32_t> row(g.order());
    bfs_row(g, x, row.data());
    std::vector<Vertex> out;
    for (int y = 0; y < g.order(); ++y)
        if (d.contains(row[y]))
            out.push_back(y);
    return out;
}

auto find_d_twins(const DNeighborhoods & hoods) -> std::vector<Edge>
{
    std::vector<Edge> out;
    for (int u = 0; u < hoods.order(); ++u)
        for (int w = u + 1; w < hoods.order(); ++w)
            if (hoods.same(u, w))
                out.emplace_back(u, w);
    return out;
}

auto find_d_twins(const Graph & g, const DistanceSet & d) -> std::vector<Edge>
{
    return find_d_twins(DNeighborhoods(g, d));
}

} // namespace dal
