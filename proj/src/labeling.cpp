#include "dal/labeling.hpp"

#include "dal/error.hpp"

#include <algorithm>
#include <sstream>

namespace dal {

Labeling::Labeling(std::vector<int> labels) :
    _labels(std::move(labels))
{
    const int v = size();
    if (v == 0)
        throw Error(ErrorCode::InvalidLabeling, "labeling is empty");
    std::vector<char> seen(v + 1, 0);
    for (int label : _labels) {
        if (label < 1 || label > v)
            throw Error(ErrorCode::InvalidLabeling, "label " + std::to_string(label) + " outside 1.." + std::to_string(v));
        if (seen[label]++)
            throw Error(ErrorCode::InvalidLabeling, "label " + std::to_string(label) + " used twice");
    }
}

auto Labeling::to_string() const -> std::string
{
    std::string out;
    for (std::size_t i = 0; i < _labels.size(); ++i)
        out += (i ? " " : "") + std::to_string(_labels[i]);
    return out;
}

auto Labeling::parse(const std::string & text) -> Labeling
{
    std::istringstream in(text);
    std::vector<int> labels;
    std::string token;
    while (in >> token) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        }
        catch (const std::exception &) {
            used = 0;
        }
        if (used != token.size() || used == 0)
            throw Error(ErrorCode::InvalidLabeling, "not an integer label: '" + token + "'");
        labels.push_back(value);
    }
    return Labeling(std::move(labels));
}

auto Classification::to_string() const -> std::string
{
    switch (kind) {
        case Kind::Magic: return "Magic(" + std::to_string(value) + ")";
        case Kind::ArithmeticAntimagic: return "ArithmeticAntimagic(" + std::to_string(value) + "," + std::to_string(step) + ")";
        case Kind::PlainAntimagic: return "PlainAntimagic";
        case Kind::None: return "None";
    }
    return "None";
}

namespace {

auto check_sizes(const DNeighborhoods & hoods, const Labeling & f) -> void
{
    if (hoods.order() != f.size())
        throw Error(ErrorCode::InvalidLabeling, "labeling has " + std::to_string(f.size()) +
                " labels for a graph of order " + std::to_string(hoods.order()));
}

} // namespace

auto weight_profile(const Graph & g, const Labeling & f, const DistanceSet & d) -> WeightProfile
{
    return weight_profile(DNeighborhoods(g, d), f, d);
}

auto weight_profile(const DNeighborhoods & hoods, const Labeling & f, const DistanceSet & d) -> WeightProfile
{
    check_sizes(hoods, f);
    const int v = hoods.order();
    std::vector<Weight> weights(v, 0);
#pragma omp parallel for schedule(static) if (v >= 1024)
    for (int x = 0; x < v; ++x) {
        Weight sum = 0;
        for (auto y : hoods.members(x))
            sum += f[y];
        weights[x] = sum;
    }
    auto c = classify(weights);
    return {std::move(weights), d, c};
}

auto weight_profile_serial(const DNeighborhoods & hoods, const Labeling & f, const DistanceSet & d) -> WeightProfile
{
    check_sizes(hoods, f);
    const int v = hoods.order();
    std::vector<Weight> weights(v, 0);
    for (int x = 0; x < v; ++x)
        for (auto y : hoods.members(x))
            weights[x] += f[y];
    auto c = classify(weights);
    return {std::move(weights), d, c};
}

auto all_distinct(const std::vector<Weight> & weights) -> bool
{
    auto sorted = weights;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

auto classify(const std::vector<Weight> & weights) -> Classification
{
    if (weights.empty())
        return Classification::none();
    auto sorted = weights;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() == sorted.back())
        return Classification::magic(sorted.front());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return Classification::none();

    const Weight step = sorted[1] - sorted[0];
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] - sorted[i - 1] != step)
            return Classification::plain();
    return Classification::arithmetic(sorted.front(), step);
}

auto regular_ad_feasibility(int degree, int order) -> FeasibleParams
{
    if (order < 1 || degree < 0 || degree > order - 1)
        throw Error(ErrorCode::InvalidParameter, "need 0 <= r <= v-1, got r=" + std::to_string(degree) +
                ", v=" + std::to_string(order));

    FeasibleParams result{degree, order, {}};
    const Weight r = degree, v = order;
    if (v == 1) {
        result.pairs.push_back({0, 0});
        return result;
    }

    const Weight d_max = r * (v - r) / (v - 1);
    const Weight least = r * (r + 1) / 2;
    for (Weight d = 0; d <= d_max; ++d) {
        const Weight twice_a = r * (v + 1) - d * (v - 1);
        if (twice_a % 2 != 0)
            continue;
        const Weight a = twice_a / 2;
        if (a < 0 || a < least)
            continue;
        result.pairs.push_back({a, d});
    }
    return result;
}

} // namespace dal
