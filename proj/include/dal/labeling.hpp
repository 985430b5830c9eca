#pragma once

#include "dal/distance.hpp"
#include "dal/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dal {

using Weight = std::int64_t;

/// A bijection from vertices 0..v-1 onto labels 1..v.
class Labeling
{
public:
    /// Throws Error(InvalidLabeling) unless `labels` is a permutation of 1..size.
    explicit Labeling(std::vector<int> labels);

    auto size() const noexcept -> int { return static_cast<int>(_labels.size()); }
    auto operator[](Vertex x) const -> int { return _labels[x]; }
    auto labels() const noexcept -> const std::vector<int> & { return _labels; }

    /// Whitespace-separated labels in vertex order.
    auto to_string() const -> std::string;
    static auto parse(const std::string & text) -> Labeling;

    friend auto operator==(const Labeling &, const Labeling &) -> bool = default;

private:
    std::vector<int> _labels;
};

struct Classification
{
    enum class Kind {
        Magic,               // all weights equal `value`
        ArithmeticAntimagic, // sorted weights value, value+step, ..., step >= 1
        PlainAntimagic,      // distinct, not a progression
        None,                // some weight repeats
    };

    Kind kind = Kind::None;
    Weight value = 0;
    Weight step = 0;

    static auto magic(Weight k) -> Classification { return {Kind::Magic, k, 0}; }
    static auto arithmetic(Weight a, Weight d) -> Classification { return {Kind::ArithmeticAntimagic, a, d}; }
    static auto plain() -> Classification { return {Kind::PlainAntimagic, 0, 0}; }
    static auto none() -> Classification { return {Kind::None, 0, 0}; }

    auto distinct() const -> bool { return kind == Kind::ArithmeticAntimagic || kind == Kind::PlainAntimagic; }

    /// "Magic(5)", "ArithmeticAntimagic(6,1)", "PlainAntimagic", "None".
    auto to_string() const -> std::string;

    friend auto operator==(const Classification &, const Classification &) -> bool = default;
};

struct WeightProfile
{
    std::vector<Weight> weights;
    DistanceSet distances;
    Classification classification;
};

/// w_D(x) = sum of f(y) over y in N_D(x), vertices split across OpenMP threads.
auto weight_profile(const Graph & g, const Labeling & f, const DistanceSet & d) -> WeightProfile;
auto weight_profile(const DNeighborhoods & hoods, const Labeling & f, const DistanceSet & d) -> WeightProfile;
/// Single-threaded reference for weight_profile.
auto weight_profile_serial(const DNeighborhoods & hoods, const Labeling & f, const DistanceSet & d) -> WeightProfile;

/// A single weight is Magic; d = 0 is always reported as Magic.
auto classify(const std::vector<Weight> & weights) -> Classification;

auto all_distinct(const std::vector<Weight> & weights) -> bool;

struct AdPair
{
    Weight a;
    Weight d;

    friend auto operator==(const AdPair &, const AdPair &) -> bool = default;
};

struct FeasibleParams
{
    int degree;
    int order;
    std::vector<AdPair> pairs;
};

/// Necessary conditions on (a, d) for an (a,d)-distance antimagic labeling of an
/// r-regular graph of order v: d <= r(v-r)/(v-1), a = (r(v+1) - d(v-1))/2 an
/// integer, a >= r(r+1)/2. Throws Error(InvalidParameter) unless 0 <= r < v.
auto regular_ad_feasibility(int degree, int order) -> FeasibleParams;

} // namespace dal
