#include "dal/constructions.hpp"

#include "dal/error.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace dal {

namespace {

auto verified(Graph g, std::vector<int> labels, ConstructionResult::Claim claim, Classification claimed,
        std::vector<std::string> notes = {}) -> ConstructionResult
{
    Labeling f(std::move(labels));
    auto profile = weight_profile(g, f, DistanceSet{1});
    bool ok = claim == ConstructionResult::Claim::Distinct ? all_distinct(profile.weights)
                                                           : profile.classification == claimed;
    if (! ok)
        throw std::logic_error("construction for " + g.descriptor() + " failed verification: got " +
                profile.classification.to_string());
    if (claim == ConstructionResult::Claim::Distinct)
        claimed = profile.classification;
    return {std::move(g), std::move(f), claim, claimed, std::move(profile), std::move(notes)};
}

auto reject_twins(const Graph & g) -> void
{
    auto twins = find_d_twins(g, DistanceSet{1});
    if (twins.empty())
        return;
    auto [u, w] = twins.front();
    throw TwinObstructionError(u, w, g.descriptor() + ": vertices " + std::to_string(u) + " and " +
            std::to_string(w) + " have the same neighbourhood, so no distance antimagic labeling exists");
}

auto rim_labels(int n) -> std::vector<int>
{
    std::vector<int> f(n);
    if (n % 2 == 1) {
        for (int i = 1; i <= n; ++i)
            f[i - 1] = i;
        return f;
    }
    const int k = n / 2;
    for (int i = 1; i <= n; ++i) {
        int label;
        if (i == 1)
            label = 1;
        else if (i % 2 == 1)
            label = i <= k + 1 ? i - 1 : n + 2 - i;
        else
            label = i <= k + 1 ? k - 1 + i : 3 * k + 2 - i;
        f[i - 1] = label;
    }
    return f;
}

auto search_construction(Graph g, const TargetSpec & target, Classification claimed, const std::string & note)
        -> ConstructionResult
{
    auto outcome = search(g, target);
    switch (outcome.status) {
        case SearchOutcome::Status::Found:
            return verified(std::move(g), outcome.labeling->labels(), ConstructionResult::Claim::Exact, claimed,
                    {note + " (search, " + std::to_string(outcome.nodes) + " nodes)"});
        case SearchOutcome::Status::BudgetExceeded:
            throw Error(ErrorCode::BudgetExceeded, g.descriptor() + ": search budget exhausted for " + target.to_string());
        case SearchOutcome::Status::ExhaustedNone:
            break;
    }
    throw std::logic_error(g.descriptor() + ": no labeling meets " + target.to_string());
}

} // namespace

auto label_cycle(int n) -> ConstructionResult
{
    auto g = cycle(n);
    reject_twins(g);
    auto note = n % 2 == 1 ? "identity labeling of an odd cycle" : "piecewise even-cycle labeling";
    return verified(std::move(g), rim_labels(n), ConstructionResult::Claim::Distinct, {}, {note});
}

auto label_cycle_ap(int n, std::optional<Weight> step, int max_n) -> ConstructionResult
{
    auto g = cycle(n);
    const Weight d = step.value_or(n == 4 ? 0 : 1);

    if (n == 4 && d == 0)
        return search_construction(std::move(g), TargetSpec::magic(5), Classification::magic(5),
                "distance magic labeling of C_4");
    if (n % 2 == 0 || d != 1)
        throw Error(ErrorCode::ProvablyInfeasible, "C_" + std::to_string(n) + " has no (a," + std::to_string(d) +
                ")-distance antimagic labeling: only d=1 with n odd, or d=0 with n=4");
    if (n > max_n)
        throw Error(ErrorCode::BudgetExceeded, "C_" + std::to_string(n) + " is above the search bound " +
                std::to_string(max_n));

    const Weight a = (n + 3) / 2;
    return search_construction(std::move(g), TargetSpec::progression(a, 1), Classification::arithmetic(a, 1),
            "(a,1) labeling of an odd cycle");
}

auto label_complete(int n) -> ConstructionResult
{
    auto g = complete(n);
    std::vector<int> f(n);
    for (int i = 1; i <= n; ++i)
        f[i - 1] = i;
    if (n == 1)
        return verified(std::move(g), f, ConstructionResult::Claim::Exact, Classification::magic(0),
                {"K_1 is degenerate: its only weight is 0"});
    const Weight a = static_cast<Weight>(n) * (n - 1) / 2;
    return verified(std::move(g), f, ConstructionResult::Claim::Exact, Classification::arithmetic(a, 1),
            {"identity labeling"});
}

auto label_sun(int n) -> ConstructionResult
{
    auto g = sun(n);
    std::vector<int> f(2 * n);
    std::vector<std::string> notes;
    for (int i = 1; i <= n; ++i) {
        f[i - 1] = n + i;
        f[n + i - 1] = i;
    }
    auto leaf = [&](int i) -> int & { return f[n + i - 1]; };

    if (n == 3) {
        leaf(2) = 3;
        leaf(3) = 2;
        notes.push_back("n=3: leaf labels 1 3 2");
    }
    else if (n % 3 == 0) {
        std::swap(leaf(n / 3 + 1), leaf(n / 3));
        std::swap(leaf(2 * n / 3), leaf(2 * n / 3 + 1));
        notes.push_back("swapped leaf labels y" + std::to_string(n / 3) + "<->y" + std::to_string(n / 3 + 1) +
                " and y" + std::to_string(2 * n / 3) + "<->y" + std::to_string(2 * n / 3 + 1));
    }
    return verified(std::move(g), std::move(f), ConstructionResult::Claim::Distinct, {}, std::move(notes));
}

auto label_prism_ap(int n, Weight step, int max_n) -> ConstructionResult
{
    static std::mutex cache_mutex;
    static std::map<int, std::vector<int>> cache;

    auto g = prism(n);
    // 3-regular of order v = 2n: the weight sum forces a = (3(v+1) - d(v-1))/2, i.e. v+2 for d = 1.
    std::optional<Weight> forced;
    for (auto p : regular_ad_feasibility(3, 2 * n).pairs)
        if (p.d == step)
            forced = p.a;
    if (! forced)
        throw Error(ErrorCode::ProvablyInfeasible, "prism:" + std::to_string(n) + " has no (a," +
                std::to_string(step) + ") labeling: a = (3(v+1) - d(v-1))/2 is not an admissible integer");
    if (n > max_n)
        throw Error(ErrorCode::BudgetExceeded, "prism:" + std::to_string(n) + " is above the search bound " +
                std::to_string(max_n));
    const Weight a = *forced;

    {
        std::lock_guard lock(cache_mutex);
        if (auto it = cache.find(n); it != cache.end())
            return verified(std::move(g), it->second, ConstructionResult::Claim::Exact,
                    Classification::arithmetic(a, 1), {"(v+2,1) prism labeling, v = 2n (cached search result)"});
    }
    auto result = search_construction(std::move(g), TargetSpec::progression(a, 1), Classification::arithmetic(a, 1),
            "(v+2,1) prism labeling, v = 2n");
    std::lock_guard lock(cache_mutex);
    cache.emplace(n, result.labeling.labels());
    return result;
}

auto label_wheel(int n) -> ConstructionResult
{
    auto g = wheel(n);
    reject_twins(g);
    auto rim = rim_labels(n);
    std::vector<int> f{n + 1};
    f.insert(f.end(), rim.begin(), rim.end());

    std::vector<std::string> notes{"rim labelled as the cycle, centre n+1"};
    auto distinct = [&](const std::vector<int> & labels) {
        return all_distinct(weight_profile(g, Labeling(labels), DistanceSet{1}).weights);
    };
    // Local repair: first rim transposition that separates the weights.
    for (int i = 1; i <= n && ! distinct(f); ++i)
        for (int j = i + 1; j <= n; ++j) {
            std::swap(f[i], f[j]);
            if (distinct(f)) {
                notes.push_back("repaired by swapping rim labels of x" + std::to_string(i) + " and x" + std::to_string(j));
                break;
            }
            std::swap(f[i], f[j]);
        }
    return verified(std::move(g), std::move(f), ConstructionResult::Claim::Distinct, {}, std::move(notes));
}

auto label_fan(int n) -> ConstructionResult
{
    auto g = fan(n);
    reject_twins(g);
    const int half = (n + 1) / 2;
    std::vector<int> f(n + 1);
    f[0] = (n + 3) / 2; // ceil((n+2)/2)
    for (int i = 1; i <= n; ++i)
        f[i] = i <= half ? i : i + 1;
    return verified(std::move(g), std::move(f), ConstructionResult::Claim::Distinct, {}, {"piecewise fan labeling"});
}

auto label_friendship(int n) -> ConstructionResult
{
    auto g = friendship(n);
    std::vector<int> f(2 * n + 1);
    f[0] = 2 * n + 1;
    for (int i = 1; i <= 2 * n; ++i)
        f[i] = i;
    return verified(std::move(g), std::move(f), ConstructionResult::Claim::Distinct, {},
            {"centre 2n+1, x_i = i"});
}

auto construct(Family family, int n, bool progression, std::optional<Weight> step) -> ConstructionResult
{
    if (progression) {
        switch (family) {
            case Family::Cycle: return label_cycle_ap(n, step);
            case Family::Prism: return label_prism_ap(n, step.value_or(1));
            case Family::Complete:
                if (step && *step != 1 && n >= 2)
                    throw Error(ErrorCode::ProvablyInfeasible, "K_n admits (a,d) labelings only for d = 1");
                return label_complete(n);
            default:
                throw Error(ErrorCode::InvalidParameter, "no (a,d) construction for family " + to_string(family));
        }
    }
    switch (family) {
        case Family::Cycle: return label_cycle(n);
        case Family::Sun: return label_sun(n);
        case Family::Complete: return label_complete(n);
        case Family::Wheel: return label_wheel(n);
        case Family::Fan: return label_fan(n);
        case Family::Friendship: return label_friendship(n);
        case Family::Prism: return label_prism_ap(n);
        default: break;
    }
    throw Error(ErrorCode::InvalidParameter, "no construction for family " + to_string(family));
}

} // namespace dal
