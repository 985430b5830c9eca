#pragma once

// Test-only oracles and generators. Nothing here calls into the code paths it checks.

#include "dal/graph.hpp"

#include <cstdint>
#include <fstream>
#include <random>
#include <string>
#include <vector>

namespace dal::testing {

inline auto random_graph(std::mt19937 & rng, int order, double p) -> Graph
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int i = 0; i < order; ++i)
        for (int j = i + 1; j < order; ++j)
            if (coin(rng))
                edges.emplace_back(i, j);
    return Graph(order, edges);
}

inline auto random_permutation(std::mt19937 & rng, int order) -> std::vector<int>
{
    std::vector<int> labels(order);
    for (int i = 0; i < order; ++i)
        labels[i] = i + 1;
    std::shuffle(labels.begin(), labels.end(), rng);
    return labels;
}

// Floyd-Warshall over the edge list; -1 for unreachable.
inline auto floyd_warshall(const Graph & g) -> std::vector<std::vector<int>>
{
    const int v = g.order(), inf = 1 << 28;
    std::vector<std::vector<int>> d(v, std::vector<int>(v, inf));
    for (int i = 0; i < v; ++i)
        d[i][i] = 0;
    for (auto [a, b] : g.edges())
        d[a][b] = d[b][a] = 1;
    for (int k = 0; k < v; ++k)
        for (int i = 0; i < v; ++i)
            for (int j = 0; j < v; ++j)
                if (d[i][k] + d[k][j] < d[i][j])
                    d[i][j] = d[i][k] + d[k][j];
    for (auto & row : d)
        for (auto & e : row)
            if (e >= inf)
                e = -1;
    return d;
}

// D-weights straight from pairwise distances.
inline auto oracle_weights(const Graph & g, const std::vector<int> & labels, const std::vector<int> & distances)
        -> std::vector<std::int64_t>
{
    auto d = floyd_warshall(g);
    std::vector<std::int64_t> w(g.order(), 0);
    for (int x = 0; x < g.order(); ++x)
        for (int y = 0; y < g.order(); ++y)
            for (int k : distances)
                if (d[x][y] == k)
                    w[x] += labels[y];
    return w;
}

inline auto read_lines(const std::string & path) -> std::vector<std::string>
{
    std::ifstream in(path);
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);)
        if (! line.empty())
            out.push_back(line);
    return out;
}

inline auto data_path(const std::string & name) -> std::string
{
    return std::string(DAL_TEST_DATA) + "/" + name;
}

} // namespace dal::testing
