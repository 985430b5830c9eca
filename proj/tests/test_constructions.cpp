#include "doctest.h"

#include "dal/constructions.hpp"
#include "dal/error.hpp"

#include "support.hpp"

#include <algorithm>
#include <numeric>

using namespace dal;

namespace {

auto weights_of(const ConstructionResult & r) -> std::vector<Weight>
{
    return r.profile.weights;
}

auto sorted(std::vector<Weight> w) -> std::vector<Weight>
{
    std::sort(w.begin(), w.end());
    return w;
}

auto range(Weight from, Weight to) -> std::vector<Weight>
{
    std::vector<Weight> out;
    for (Weight x = from; x <= to; ++x)
        out.push_back(x);
    return out;
}

template <class F>
auto twin_error(F && f) -> std::optional<Edge>
{
    try {
        f();
    }
    catch (const TwinObstructionError & e) {
        return e.twins();
    }
    return std::nullopt;
}

template <class F>
auto error_code(F && f) -> std::optional<ErrorCode>
{
    try {
        f();
    }
    catch (const Error & e) {
        return e.code();
    }
    return std::nullopt;
}

// Independent recomputation: weights from Floyd-Warshall, distinctness by sorting.
void check_distinct(const ConstructionResult & r)
{
    auto w = testing::oracle_weights(r.graph, r.labeling.labels(), {1});
    CHECK(w == r.profile.weights);
    auto s = sorted(w);
    CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
}

} // namespace

TEST_CASE("cycle")
{
    auto c6 = label_cycle(6);
    CHECK(c6.labeling.labels() == std::vector<int>{1, 4, 2, 6, 3, 5});
    CHECK(weights_of(c6) == std::vector<Weight>{9, 3, 10, 5, 11, 4});

    auto c5 = label_cycle(5);
    CHECK(c5.labeling.labels() == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(weights_of(c5) == std::vector<Weight>{7, 4, 6, 8, 5});

    auto twins = twin_error([] { label_cycle(4); });
    REQUIRE(twins);
    CHECK(*twins == Edge{0, 2});

    CHECK(error_code([] { label_cycle(2); }) == ErrorCode::InvalidParameter);

    for (int n = 3; n <= 60; ++n)
        if (n != 4)
            check_distinct(label_cycle(n));
}

TEST_CASE("odd cycle weights: exactly two odd values, n and n+2")
{
    for (int n = 3; n <= 99; n += 2) {
        std::vector<Weight> odd;
        for (auto w : label_cycle(n).profile.weights)
            if (w % 2)
                odd.push_back(w);
        CHECK(sorted(odd) == std::vector<Weight>{n, n + 2});
    }
}

TEST_CASE("cycle (a,d)")
{
    auto c3 = label_cycle_ap(3);
    CHECK(c3.labeling.labels() == std::vector<int>{1, 2, 3});
    CHECK(weights_of(c3) == std::vector<Weight>{5, 4, 3});
    CHECK(c3.profile.classification == Classification::arithmetic(3, 1));

    auto c5 = label_cycle_ap(5);
    CHECK(sorted(weights_of(c5)) == range(4, 8));

    auto c4 = label_cycle_ap(4);
    CHECK(c4.labeling.labels() == std::vector<int>{1, 2, 4, 3});
    CHECK(c4.profile.classification == Classification::magic(5));

    for (int n = 7; n <= 15; n += 2)
        CHECK(label_cycle_ap(n).profile.classification == Classification::arithmetic((n + 3) / 2, 1));

    for (int n = 6; n <= 20; n += 2)
        CHECK(error_code([n] { label_cycle_ap(n); }) == ErrorCode::ProvablyInfeasible);
    CHECK(error_code([] { label_cycle_ap(5, 2); }) == ErrorCode::ProvablyInfeasible);
    CHECK(error_code([] { label_cycle_ap(4, 1); }) == ErrorCode::ProvablyInfeasible);
    CHECK(error_code([] { label_cycle_ap(17); }) == ErrorCode::BudgetExceeded);
}

TEST_CASE("complete")
{
    auto k4 = label_complete(4);
    CHECK(weights_of(k4) == std::vector<Weight>{9, 8, 7, 6});
    CHECK(k4.profile.classification == Classification::arithmetic(6, 1));
    CHECK(weights_of(label_complete(2)) == std::vector<Weight>{2, 1});

    auto k1 = label_complete(1);
    CHECK(weights_of(k1) == std::vector<Weight>{0});
    CHECK(k1.profile.classification == Classification::magic(0));
    CHECK_FALSE(k1.notes.empty());

    for (int n = 2; n <= 40; ++n) {
        auto w = weights_of(label_complete(n));
        for (int i = 1; i < n; ++i)
            CHECK(w[i] == w[i - 1] - 1);
    }
}

TEST_CASE("sun")
{
    auto s4 = label_sun(4);
    CHECK(weights_of(s4) == std::vector<Weight>{15, 14, 17, 16, 5, 6, 7, 8});

    auto s6 = label_sun(6);
    CHECK(weights_of(s6) == std::vector<Weight>{21, 19, 20, 25, 26, 24, 7, 8, 9, 10, 11, 12});
    CHECK_FALSE(s6.notes.empty());

    auto s3 = label_sun(3);
    CHECK(weights_of(s3) == std::vector<Weight>{12, 13, 11, 4, 5, 6});

    CHECK(error_code([] { label_sun(2); }) == ErrorCode::InvalidParameter);

    for (int n = 3; n <= 60; ++n) {
        auto r = label_sun(n);
        check_distinct(r);
        for (int i = 0; i < n; ++i)
            CHECK(r.profile.weights[n + i] == r.labeling[i]);
    }
}

TEST_CASE("prism (a,1)")
{
    auto p3 = label_prism_ap(3);
    CHECK(p3.profile.classification == Classification::arithmetic(8, 1));
    CHECK(sorted(weights_of(p3)) == range(8, 13));

    auto p4 = label_prism_ap(4);
    CHECK(sorted(weights_of(p4)) == range(10, 17));

    for (int n = 5; n <= 8; ++n)
        CHECK(label_prism_ap(n).profile.classification == Classification::arithmetic(2 * n + 2, 1));

    // cached results are identical
    CHECK(label_prism_ap(4).labeling == p4.labeling);

    CHECK(error_code([] { label_prism_ap(4, 2); }) == ErrorCode::ProvablyInfeasible);
    CHECK(error_code([] { label_prism_ap(4, 0); }) == ErrorCode::ProvablyInfeasible);
    CHECK(error_code([] { label_prism_ap(11); }) == ErrorCode::BudgetExceeded);
}

TEST_CASE("wheel")
{
    auto w6 = label_wheel(6);
    CHECK(weights_of(w6) == std::vector<Weight>{21, 16, 10, 17, 12, 18, 11});
    auto w5 = label_wheel(5);
    CHECK(weights_of(w5) == std::vector<Weight>{15, 13, 10, 12, 14, 11});

    auto twins = twin_error([] { label_wheel(4); });
    REQUIRE(twins);
    CHECK(*twins == Edge{1, 3});

    for (int n = 3; n <= 60; ++n) {
        if (n == 4)
            continue;
        auto r = label_wheel(n);
        check_distinct(r);
        CHECK(r.profile.weights[0] == n * (n + 1) / 2);
        CHECK(r.labeling[0] == n + 1);
    }
}

TEST_CASE("fan")
{
    auto f2 = label_fan(2);
    CHECK(f2.labeling.labels() == std::vector<int>{2, 1, 3});
    CHECK(weights_of(f2) == std::vector<Weight>{4, 5, 3});

    auto f5 = label_fan(5);
    CHECK(f5.labeling.labels() == std::vector<int>{4, 1, 2, 3, 5, 6});
    CHECK(weights_of(f5) == std::vector<Weight>{17, 6, 8, 11, 13, 9});

    auto twins = twin_error([] { label_fan(3); });
    REQUIRE(twins);
    CHECK(*twins == Edge{1, 3});

    for (int n = 1; n <= 60; ++n)
        if (n != 3)
            check_distinct(label_fan(n));
}

TEST_CASE("friendship")
{
    auto f1 = label_friendship(1);
    CHECK(f1.labeling.labels() == std::vector<int>{3, 1, 2});
    CHECK(weights_of(f1) == std::vector<Weight>{3, 5, 4});

    auto f2 = label_friendship(2);
    CHECK(f2.labeling.labels() == std::vector<int>{5, 1, 2, 3, 4});
    CHECK(weights_of(f2) == std::vector<Weight>{10, 7, 6, 9, 8});

    CHECK(weights_of(label_friendship(3))[0] == 21);

    for (int n = 1; n <= 40; ++n) {
        auto r = label_friendship(n);
        check_distinct(r);
        CHECK(r.profile.weights[0] == n * (2 * n + 1));
    }
}

TEST_CASE("constructions are twin-free outside the documented exceptions")
{
    for (int n = 3; n <= 30; ++n) {
        CHECK(find_d_twins(cycle(n), {1}).empty() == (n != 4));
        CHECK(find_d_twins(sun(n), {1}).empty());
        CHECK(find_d_twins(wheel(n), {1}).empty() == (n != 4));
        CHECK(find_d_twins(fan(n), {1}).empty() == (n != 3));
        CHECK(find_d_twins(friendship(n), {1}).empty());
        CHECK(find_d_twins(complete(n), {1}).empty());
    }
}

TEST_CASE("construct dispatch")
{
    CHECK(construct(Family::Complete, 4).labeling == label_complete(4).labeling);
    CHECK(construct(Family::Fan, 5).labeling == label_fan(5).labeling);
    CHECK(construct(Family::Cycle, 5, true).profile.classification == Classification::arithmetic(4, 1));
    CHECK(construct(Family::Prism, 3, true).profile.classification == Classification::arithmetic(8, 1));
    CHECK(construct(Family::Prism, 3).profile.classification == Classification::arithmetic(8, 1));
    CHECK(error_code([] { construct(Family::Multipartite, 3); }) == ErrorCode::InvalidParameter);
}
