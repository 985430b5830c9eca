#include "doctest.h"

#include "dal/distance.hpp"
#include "dal/error.hpp"
#include "dal/graph.hpp"
#include "dal/graph6.hpp"

#include "support.hpp"

#include <algorithm>
#include <map>

using namespace dal;

namespace {

auto degree_sequence(const Graph & g) -> std::vector<int>
{
    std::vector<int> out;
    for (int x = 0; x < g.order(); ++x)
        out.push_back(g.degree(x));
    std::sort(out.rbegin(), out.rend());
    return out;
}

auto expect_invalid(auto && f) -> void
{
    try {
        f();
        FAIL("expected InvalidParameter");
    }
    catch (const Error & e) {
        CHECK(e.code() == ErrorCode::InvalidParameter);
    }
}

} // namespace

TEST_CASE("family generators follow the documented vertex order")
{
    auto c4 = cycle(4);
    CHECK(c4.order() == 4);
    CHECK(c4.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

    auto s3 = sun(3);
    CHECK(s3.order() == 6);
    CHECK(s3.size() == 6);
    CHECK(degree_sequence(s3) == std::vector<int>{3, 3, 3, 1, 1, 1});
    for (int i = 0; i < 3; ++i)
        CHECK(s3.has_edge(i, 3 + i));

    auto f2 = friendship(2);
    CHECK(f2.order() == 5);
    CHECK(f2.size() == 6);
    CHECK(f2.degree(0) == 4);
    CHECK(f2.has_edge(1, 2));
    CHECK(f2.has_edge(3, 4));
    CHECK_FALSE(f2.has_edge(2, 3));

    auto p3 = prism(3);
    for (int i = 0; i < 3; ++i) {
        CHECK(p3.has_edge(i, 3 + i));
        CHECK(p3.has_edge(3 + i, 3 + (i + 1) % 3));
    }

    auto w5 = wheel(5);
    CHECK(w5.degree(0) == 5);
    CHECK(w5.has_edge(5, 1));

    auto f4 = fan(4);
    CHECK(f4.degree(0) == 4);
    CHECK_FALSE(f4.has_edge(4, 1));
    CHECK(fan(1).size() == 1);
}

TEST_CASE("family edge counts and degree sequences")
{
    for (int n = 3; n <= 30; ++n) {
        CHECK(cycle(n).size() == n);
        CHECK(sun(n).size() == 2 * n);
        CHECK(prism(n).size() == 3 * n);
        CHECK(wheel(n).size() == 2 * n);

        auto s = sun(n);
        auto seq = degree_sequence(s);
        CHECK(std::count(seq.begin(), seq.end(), 3) == n);
        CHECK(std::count(seq.begin(), seq.end(), 1) == n);
        for (int x = 0; x < prism(n).order(); ++x)
            CHECK(prism(n).degree(x) == 3);
    }
    for (int n = 1; n <= 30; ++n) {
        CHECK(complete(n).size() == n * (n - 1) / 2);
        CHECK(fan(n).size() == 2 * n - 1);
        CHECK(friendship(n).size() == 3 * n);
    }
    auto k23 = complete_multipartite({2, 3});
    CHECK(k23.order() == 5);
    CHECK(k23.size() == 6);
    CHECK(k23.descriptor() == "multipartite:2,3");
}

TEST_CASE("generators reject parameters below the family minimum")
{
    expect_invalid([] { cycle(2); });
    expect_invalid([] { sun(2); });
    expect_invalid([] { prism(2); });
    expect_invalid([] { complete(0); });
    expect_invalid([] { wheel(2); });
    expect_invalid([] { fan(0); });
    expect_invalid([] { friendship(0); });
    expect_invalid([] { complete_multipartite({2, 0}); });
    expect_invalid([] { complete_multipartite({}); });
    expect_invalid([] { parse_family_spec("torus:4"); });
    expect_invalid([] { parse_family_spec("cycle:x"); });
}

TEST_CASE("graph construction enforces simplicity")
{
    expect_invalid([] { Graph(3, {{0, 0}}); });
    expect_invalid([] { Graph(3, {{0, 1}, {1, 0}}); });
    expect_invalid([] { Graph(3, {{0, 3}}); });
    expect_invalid([] { Graph(0, {}); });
}

TEST_CASE("family specs round-trip through descriptors")
{
    for (auto spec : {"cycle:7", "sun:5", "prism:4", "complete:6", "wheel:5", "fan:4", "friendship:3", "multipartite:1,2,3"}) {
        auto g = parse_family_spec(spec);
        CHECK(g.descriptor() == spec);
    }
    CHECK(Graph(2, {{0, 1}}).descriptor() == "graph6:A_");
}

TEST_CASE("distance matrix examples")
{
    auto c4 = distance_matrix(cycle(4));
    CHECK(c4.at(0, 2) == 2);
    CHECK(c4.at(1, 3) == 2);
    CHECK(c4.diameter() == 2);

    auto k5 = distance_matrix(complete(5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            CHECK(k5.at(i, j) == (i == j ? 0u : 1u));

    CHECK(distance_matrix(prism(3)).diameter() == 2);

    auto split = distance_matrix(Graph(4, {{0, 1}, {2, 3}}));
    CHECK(split.at(0, 2) == DistanceMatrix::infinite);
    CHECK_FALSE(split.connected());
    CHECK(split.diameter() == 1);
}

TEST_CASE("distance matrix agrees with Floyd-Warshall and the serial kernel on random graphs")
{
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
        int order = 1 + trial % 12;
        auto g = testing::random_graph(rng, order, 0.1 + 0.8 * (trial % 7) / 7.0);
        auto dm = distance_matrix(g);
        CHECK(dm == distance_matrix_serial(g));
        auto oracle = testing::floyd_warshall(g);
        for (int x = 0; x < order; ++x)
            for (int y = 0; y < order; ++y) {
                auto expected = oracle[x][y] < 0 ? DistanceMatrix::infinite : static_cast<std::uint32_t>(oracle[x][y]);
                CHECK(dm.at(x, y) == expected);
                CHECK(dm.at(x, y) == dm.at(y, x));
            }
    }
    // large enough to take the threaded path
    auto big = prism(200);
    CHECK(distance_matrix(big) == distance_matrix_serial(big));
}

TEST_CASE("D-neighbourhoods")
{
    auto g = cycle(6);
    CHECK(d_neighborhood(g, 0, {0}) == std::vector<Vertex>{0});
    CHECK(d_neighborhood(g, 0, {2}) == std::vector<Vertex>{2, 4});
    CHECK(d_neighborhood(cycle(5), 3, {1, 2}) == std::vector<Vertex>{0, 1, 2, 4});
    CHECK(d_neighborhood(g, 0, {}).empty());
    CHECK(d_neighborhood(g, 0, {7, 9}).empty());
    CHECK(d_neighborhood(Graph(3, {{0, 1}}), 2, {0, 1, 2}) == std::vector<Vertex>{2});
}

TEST_CASE("D-neighbourhoods are symmetric")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = testing::random_graph(rng, 2 + trial % 10, 0.35);
        std::vector<int> values;
        for (int k = 0; k <= 4; ++k)
            if (rng() % 2)
                values.push_back(k);
        DNeighborhoods hoods(g, DistanceSet(values));
        for (int x = 0; x < g.order(); ++x)
            for (int y = 0; y < g.order(); ++y)
                CHECK(hoods.contains(x, y) == hoods.contains(y, x));
    }
}

TEST_CASE("twin detection")
{
    CHECK(find_d_twins(cycle(4), {1}) == std::vector<Edge>{{0, 2}, {1, 3}});
    for (int n = 2; n <= 8; ++n)
        CHECK(find_d_twins(complete(n), {1}).empty());

    auto k23 = find_d_twins(complete_multipartite({2, 3}), {1});
    CHECK(k23 == std::vector<Edge>{{0, 1}, {2, 3}, {2, 4}, {3, 4}});

    CHECK(find_d_twins(cycle(6), {1, 2}) == std::vector<Edge>{{0, 3}, {1, 4}, {2, 5}});
    CHECK(find_d_twins(fan(3), {1}) == std::vector<Edge>{{1, 3}});
    CHECK(find_d_twins(wheel(4), {1}) == std::vector<Edge>{{1, 3}, {2, 4}});
}

TEST_CASE("distance set parsing")
{
    CHECK(DistanceSet::parse("1").values() == std::vector<int>{1});
    CHECK(DistanceSet::parse("2,0,2").values() == std::vector<int>{0, 2});
    CHECK(DistanceSet::parse("").empty());
    CHECK(DistanceSet{0, 2}.to_string() == "0,2");
    expect_invalid([] { DistanceSet::parse("1,"); });
    expect_invalid([] { DistanceSet::parse("-1"); });
    expect_invalid([] { DistanceSet::parse("a"); });
}

TEST_CASE("graph6 encoding examples")
{
    CHECK(encode_graph6(cycle(4)) == "Cl");
    CHECK(encode_graph6(complete(4)) == "C~");
    CHECK(encode_graph6(Graph(1, {})) == "@");
    CHECK(encode_graph6(Graph(2, {{0, 1}})) == "A_");

    auto f2 = decode_graph6(encode_graph6(friendship(2)));
    CHECK(f2.order() == 5);
    CHECK(f2.size() == 6);
    CHECK(f2 == friendship(2));
}

TEST_CASE("graph6 round-trips the order <= 6 catalog byte for byte")
{
    auto lines = testing::read_lines(testing::data_path("graphs_order_le6.g6"));
    REQUIRE(lines.size() == 208);
    std::map<int, int> per_order;
    for (const auto & line : lines) {
        auto g = decode_graph6(line);
        ++per_order[g.order()];
        CHECK(encode_graph6(g) == line);
    }
    CHECK(per_order == std::map<int, int>{{1, 1}, {2, 2}, {3, 4}, {4, 11}, {5, 34}, {6, 156}});
}

TEST_CASE("graph6 multi-byte orders")
{
    for (int n : {62, 63, 64, 100, 300}) {
        auto g = cycle(n);
        auto code = encode_graph6(g);
        if (n <= 62)
            CHECK(code[0] == static_cast<char>(n + 63));
        else {
            CHECK(code[0] == '~');
            CHECK(code[1] != '~');
        }
        CHECK(decode_graph6(code) == g);
    }
    // n = 63 is ~ followed by 18 bits of 63
    CHECK(encode_graph6(Graph(63, {})).substr(0, 4) == "~??~");
}

TEST_CASE("graph6 decoding rejects malformed lines")
{
    auto malformed = [](std::string_view s) {
        try {
            decode_graph6(s);
            return false;
        }
        catch (const Error & e) {
            return e.code() == ErrorCode::MalformedInput;
        }
    };
    CHECK(malformed(""));
    CHECK(malformed("C"));       // missing adjacency byte
    CHECK(malformed("Cll"));     // one byte too many
    CHECK(malformed("BA"));      // padding bit set
    CHECK(malformed("C l"));     // character out of range
    CHECK(malformed(":Bw"));     // sparse6
    CHECK(malformed("?"));       // order zero
    CHECK_FALSE(malformed(">>graph6<<Cl\r\n"));
}
