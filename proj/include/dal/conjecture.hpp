#pragma once

#include "dal/distance.hpp"
#include "dal/graph.hpp"
#include "dal/search.hpp"

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dal {

struct Verdict
{
    enum class Kind {
        ConsistentTwinFree, // no twins, labeling found
        ConsistentTwinned,  // twins present, so no labeling can exist
        Counterexample,     // no twins, yet the search exhausted without a labeling
        Undecided,          // no twins, search stopped on budget
        SoundnessFailure,   // twins present but a labeling was found: a bug, never a counterexample
    };

    std::size_t graph_id = 0; // 1-based input line, or caller-chosen id
    std::string graph6;
    DistanceSet distances;
    bool disconnected = false;
    std::optional<Edge> twins;
    std::optional<SearchOutcome::Status> search_status;
    std::uint64_t nodes = 0;
    std::optional<Labeling> labeling;
    Kind kind = Kind::Undecided;
};

auto to_string(Verdict::Kind kind) -> const char *;

struct ConjectureOptions
{
    Budget budget = Budget::defaults();
    PruningConfig pruning;
    /// Also run the search on twinned instances and flag any labeling it finds.
    bool cross_check_twins = false;
};

/// Twin check first; the search only runs when no twin pair exists.
auto check_conjecture(const Graph & g, const DistanceSet & d, const ConjectureOptions & options = {},
        std::size_t graph_id = 0) -> Verdict;

/// Which distance sets to try per graph.
struct DPolicy
{
    enum class Kind { Fixed, AllSubsets, SubsetsUpTo };
    Kind kind = Kind::Fixed;
    DistanceSet fixed{1};
    int cap = 0;

    static auto fixed_set(DistanceSet d) -> DPolicy { return {Kind::Fixed, std::move(d), 0}; }
    static auto all_subsets() -> DPolicy { return {Kind::AllSubsets, {}, 0}; }
    static auto subsets_up_to(int cap) -> DPolicy { return {Kind::SubsetsUpTo, {}, cap}; }

    /// "1", "0,2", "all", "upto:2".
    static auto parse(const std::string & text) -> DPolicy;
    auto to_string() const -> std::string;
};

/// Non-empty subsets of {0..diameter}, by size and then lexicographically,
/// truncated at `cap` elements when cap > 0.
auto canonical_subsets(int diameter, int cap = 0) -> std::vector<DistanceSet>;

struct InputError
{
    std::size_t line;
    std::string message;
};

struct ScanReport
{
    std::vector<Verdict> verdicts; // by line, then canonical D order
    std::vector<InputError> input_errors;
    std::map<Verdict::Kind, std::size_t> totals;
    std::size_t graphs = 0;
    std::size_t disconnected_pairs = 0;
    std::uint64_t nodes = 0;
    std::string input_digest; // SHA-256 of the raw input, hex
    double seconds = 0;       // wall clock; not part of the reproducible payload

    auto count(Verdict::Kind kind) const -> std::size_t;
};

struct ScanOptions
{
    DPolicy policy;
    ConjectureOptions conjecture;
    int workers = 1;
};

/// One graph6 graph per line; blank lines are skipped, bad lines recorded.
/// (graph, D) pairs are checked on OpenMP threads and merged in input order.
auto scan(std::istream & input, const ScanOptions & options) -> ScanReport;
auto scan_lines(const std::vector<std::string> & lines, const ScanOptions & options) -> ScanReport;

/// graph6 codes of all non-isomorphic graphs of order n (1 <= n <= 6), each
/// the least adjacency bitmask in its isomorphism class, sorted by that mask.
auto small_graph_catalog(int n) -> std::vector<std::string>;

} // namespace dal
