#pragma once

#include "dal/distance.hpp"
#include "dal/graph.hpp"
#include "dal/labeling.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dal {

/// What a labeling has to achieve. Unset `start` / `step` are quantified over.
/// For Magic, `start` is the magic constant k and `step` is unused.
struct TargetSpec
{
    enum class Kind { AnyAntimagic, Progression, Magic };

    Kind kind = Kind::AnyAntimagic;
    std::optional<Weight> start;
    std::optional<Weight> step;
    DistanceSet distances{1};

    static auto any_antimagic(DistanceSet d = {1}) -> TargetSpec;
    static auto progression(std::optional<Weight> a, std::optional<Weight> d, DistanceSet ds = {1}) -> TargetSpec;
    static auto magic(std::optional<Weight> k, DistanceSet d = {1}) -> TargetSpec;

    auto to_string() const -> std::string;
};

/// True when `weights` meet the target exactly.
auto satisfies(const std::vector<Weight> & weights, const TargetSpec & target) -> bool;

struct Budget
{
    std::optional<std::uint64_t> nodes;
    std::optional<double> seconds;

    static auto defaults() -> Budget { return {100'000'000, 300.0}; }
    static auto unlimited() -> Budget { return {}; }
};

/// Each rule can be switched off on its own; verdicts must not change.
struct PruningConfig
{
    bool finalize = true;       // check a weight once all its D-neighbours are labelled
    bool bounds = true;         // interval of reachable weights must meet a free target value
    bool sum_window = true;     // restrict the unknown start via sum of weights = sum f(y)|N_D(y)|

    auto to_string() const -> std::string;
};

struct SearchOptions
{
    Budget budget = Budget::defaults();
    PruningConfig pruning;
    int workers = 1;
};

struct SearchOutcome
{
    enum class Status { Found, ExhaustedNone, BudgetExceeded };

    Status status = Status::ExhaustedNone;
    std::uint64_t nodes = 0;
    std::optional<Labeling> labeling;
    std::optional<WeightProfile> profile;
    /// Number of concrete (start, step) instances examined.
    std::uint64_t instances = 0;
};

auto to_string(SearchOutcome::Status status) -> const char *;

/// Exact backtracking over all bijections. Vertices are labelled in order of
/// descending D-degree (ties by index), labels tried in ascending order, so the
/// first solution found is reproducible. With workers > 1 the first vertex's
/// label choices run as independent sub-searches on OpenMP threads; the merge
/// walks them in label order, so status, labeling and node count equal the
/// serial run whenever the wall-clock limit does not fire.
auto search(const Graph & g, const TargetSpec & target, const SearchOptions & options = {}) -> SearchOutcome;

/// Counts satisfying bijections by visiting all v! of them (v <= 10).
/// Throws Error(InvalidParameter) above that.
auto enumerate(const Graph & g, const TargetSpec & target) -> std::uint64_t;
auto enumerate_serial(const Graph & g, const TargetSpec & target) -> std::uint64_t;

struct TwinCertificate
{
    Vertex u;
    Vertex w;
    DistanceSet distances;
    std::vector<Vertex> shared;
};

/// Names the lexicographically first twin pair for D, if any.
auto prove_twin_shortcut(const Graph & g, const DistanceSet & d) -> std::optional<TwinCertificate>;

} // namespace dal
