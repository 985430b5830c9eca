#pragma once

#include "dal/graph.hpp"
#include "dal/labeling.hpp"
#include "dal/search.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dal {

/// A labeling of a family member together with the profile that confirmed it.
/// Never built unless the profile meets the claim.
struct ConstructionResult
{
    enum class Claim {
        Distinct, // some distance antimagic labeling (weights pairwise distinct)
        Exact,    // exactly `claimed`
    };

    Graph graph;
    Labeling labeling;
    Claim claim;
    Classification claimed;
    WeightProfile profile;
    std::vector<std::string> notes;
};

/// Distance antimagic labeling of C_n, n >= 3, n != 4. Even n uses the piecewise
/// rim formula, odd n the identity labeling (odd weights n and n+2, the rest even).
/// n = 4 throws TwinObstructionError.
auto label_cycle(int n) -> ConstructionResult;

/// (a,d) labeling of C_n found by search: odd n with d = 1 (a = (n+3)/2), or
/// n = 4 with d = 0 (Magic(5)). `step` defaults to whichever of those applies.
/// Other combinations throw ProvablyInfeasible; odd n above `max_n` throws BudgetExceeded.
auto label_cycle_ap(int n, std::optional<Weight> step = std::nullopt, int max_n = 15) -> ConstructionResult;

/// Identity labeling of K_n, weights n(n+1)/2 - i.
auto label_complete(int n) -> ConstructionResult;

/// f(x_i) = n+i, f(y_i) = i, with the two leaf swaps when 3 | n (n >= 6) and
/// leaf order (1,3,2) for n = 3.
auto label_sun(int n) -> ConstructionResult;

/// (v+2,1) labeling of the prism C_n x P_2 (order v = 2n), found by search and
/// cached per n. The start is forced by the weight sum of a 3-regular graph.
/// Steps other than 1 throw ProvablyInfeasible; n above `max_n` BudgetExceeded.
auto label_prism_ap(int n, Weight step = 1, int max_n = 10) -> ConstructionResult;

/// Rim labelled as in label_cycle, centre n+1. n = 4 throws TwinObstructionError.
auto label_wheel(int n) -> ConstructionResult;

/// Centre ceil((n+2)/2), path vertex i gets i up to floor((n+1)/2) and i+1 after.
/// n = 3 throws TwinObstructionError.
auto label_fan(int n) -> ConstructionResult;

/// Centre 2n+1, x_i = i for i = 1..2n; centre weight n(2n+1).
auto label_friendship(int n) -> ConstructionResult;

/// Distance antimagic construction for a family by name (cycle, sun, complete,
/// wheel, fan, friendship). With `progression`, the (a,d) construction instead
/// (cycle, complete, prism).
auto construct(Family family, int n, bool progression = false, std::optional<Weight> step = std::nullopt) -> ConstructionResult;

} // namespace dal
