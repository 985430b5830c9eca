#include "dal/conjecture.hpp"

#include "dal/error.hpp"
#include "dal/graph6.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <charconv>
#include <iterator>
#include <numeric>
#include <sstream>

namespace dal {

auto to_string(Verdict::Kind kind) -> const char *
{
    switch (kind) {
        case Verdict::Kind::ConsistentTwinFree: return "ConsistentTwinFree";
        case Verdict::Kind::ConsistentTwinned: return "ConsistentTwinned";
        case Verdict::Kind::Counterexample: return "Counterexample";
        case Verdict::Kind::Undecided: return "Undecided";
        case Verdict::Kind::SoundnessFailure: return "SoundnessFailure";
    }
    return "?";
}

auto check_conjecture(const Graph & g, const DistanceSet & d, const ConjectureOptions & options,
        std::size_t graph_id) -> Verdict
{
    auto dm = distance_matrix(g);
    DNeighborhoods hoods(dm, d);

    Verdict verdict;
    verdict.graph_id = graph_id;
    verdict.graph6 = encode_graph6(g);
    verdict.distances = d;
    verdict.disconnected = ! dm.connected();

    SearchOptions search_options{options.budget, options.pruning, 1};
    auto twins = find_d_twins(hoods);
    if (! twins.empty()) {
        verdict.twins = twins.front();
        verdict.kind = Verdict::Kind::ConsistentTwinned;
        if (options.cross_check_twins) {
            auto outcome = search(g, TargetSpec::any_antimagic(d), search_options);
            verdict.search_status = outcome.status;
            verdict.nodes = outcome.nodes;
            if (outcome.status == SearchOutcome::Status::Found) {
                verdict.kind = Verdict::Kind::SoundnessFailure;
                verdict.labeling = outcome.labeling;
            }
        }
        return verdict;
    }

    auto outcome = search(g, TargetSpec::any_antimagic(d), search_options);
    verdict.search_status = outcome.status;
    verdict.nodes = outcome.nodes;
    switch (outcome.status) {
        case SearchOutcome::Status::Found:
            verdict.kind = Verdict::Kind::ConsistentTwinFree;
            verdict.labeling = outcome.labeling;
            break;
        case SearchOutcome::Status::ExhaustedNone:
            verdict.kind = Verdict::Kind::Counterexample;
            break;
        case SearchOutcome::Status::BudgetExceeded:
            verdict.kind = Verdict::Kind::Undecided;
            break;
    }
    return verdict;
}

auto DPolicy::parse(const std::string & text) -> DPolicy
{
    if (text == "all")
        return all_subsets();
    if (text.starts_with("upto:")) {
        int cap = 0;
        auto body = std::string_view(text).substr(5);
        auto [end, ec] = std::from_chars(body.data(), body.data() + body.size(), cap);
        if (ec != std::errc{} || end != body.data() + body.size() || cap < 1)
            throw Error(ErrorCode::InvalidParameter, "bad D policy '" + text + "'");
        return subsets_up_to(cap);
    }
    return fixed_set(DistanceSet::parse(text));
}

auto DPolicy::to_string() const -> std::string
{
    switch (kind) {
        case Kind::Fixed: return fixed.to_string();
        case Kind::AllSubsets: return "all";
        case Kind::SubsetsUpTo: return "upto:" + std::to_string(cap);
    }
    return "?";
}

auto canonical_subsets(int diameter, int cap) -> std::vector<DistanceSet>
{
    const int universe = diameter + 1;
    const int largest = cap > 0 ? std::min(cap, universe) : universe;
    std::vector<DistanceSet> out;
    for (int size = 1; size <= largest; ++size) {
        // lexicographic combinations of {0..diameter}
        std::vector<int> pick(size);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            out.emplace_back(pick);
            int i = size - 1;
            while (i >= 0 && pick[i] == universe - size + i)
                --i;
            if (i < 0)
                break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    return out;
}

auto ScanReport::count(Verdict::Kind kind) const -> std::size_t
{
    auto it = totals.find(kind);
    return it == totals.end() ? 0 : it->second;
}

namespace {

auto sha256_hex(std::string_view data) -> std::string
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < length; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 15]);
    }
    return out;
}

auto trim(std::string_view s) -> std::string_view
{
    while (! s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (! s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    return s;
}

struct Job
{
    std::size_t graph;
    DistanceSet distances;
};

auto scan_impl(const std::vector<std::string> & lines, std::string digest, const ScanOptions & options) -> ScanReport
{
    auto started = std::chrono::steady_clock::now();
    ScanReport report;
    report.input_digest = std::move(digest);

    std::vector<Graph> graphs;
    std::vector<std::size_t> line_of;
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto text = trim(lines[i]);
        if (text.empty())
            continue;
        try {
            graphs.push_back(decode_graph6(text));
        }
        catch (const Error & e) {
            report.input_errors.push_back({i + 1, e.what()});
            continue;
        }
        line_of.push_back(i + 1);
        const auto & g = graphs.back();
        std::vector<DistanceSet> sets;
        if (options.policy.kind == DPolicy::Kind::Fixed)
            sets = {options.policy.fixed};
        else
            sets = canonical_subsets(distance_matrix(g).diameter(),
                    options.policy.kind == DPolicy::Kind::SubsetsUpTo ? options.policy.cap : 0);
        for (auto & d : sets)
            jobs.push_back({graphs.size() - 1, std::move(d)});
    }
    report.graphs = graphs.size();

    std::vector<Verdict> verdicts(jobs.size());
    const auto count = static_cast<std::ptrdiff_t>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, options.workers))
    for (std::ptrdiff_t j = 0; j < count; ++j) {
        const auto & job = jobs[j];
        verdicts[j] = check_conjecture(graphs[job.graph], job.distances, options.conjecture, line_of[job.graph]);
    }

    for (auto & v : verdicts) {
        ++report.totals[v.kind];
        report.nodes += v.nodes;
        if (v.disconnected)
            ++report.disconnected_pairs;
    }
    report.verdicts = std::move(verdicts);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

} // namespace

auto scan_lines(const std::vector<std::string> & lines, const ScanOptions & options) -> ScanReport
{
    std::string joined;
    for (const auto & l : lines)
        joined += l + "\n";
    return scan_impl(lines, sha256_hex(joined), options);
}

auto scan(std::istream & input, const ScanOptions & options) -> ScanReport
{
    std::string content(std::istreambuf_iterator<char>(input), {});
    std::vector<std::string> lines;
    std::istringstream split(content);
    for (std::string line; std::getline(split, line);)
        lines.push_back(line);
    return scan_impl(lines, sha256_hex(content), options);
}

auto small_graph_catalog(int n) -> std::vector<std::string>
{
    if (n < 1 || n > 6)
        throw Error(ErrorCode::InvalidParameter, "small_graph_catalog supports 1 <= n <= 6");

    // Bit p of a mask is the pair pairs[p], in graph6 column order.
    std::vector<Edge> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            pairs.emplace_back(i, j);
    std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        index[pairs[p].first][pairs[p].second] = static_cast<int>(p);
        index[pairs[p].second][pairs[p].first] = static_cast<int>(p);
    }

    std::vector<std::vector<int>> images; // images[perm][p] = bit that pair p maps to
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> image(pairs.size());
        for (std::size_t p = 0; p < pairs.size(); ++p)
            image[p] = index[perm[pairs[p].first]][perm[pairs[p].second]];
        images.push_back(std::move(image));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::string> out;
    const std::uint32_t total = std::uint32_t{1} << pairs.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        bool least = true;
        for (const auto & image : images) {
            std::uint32_t mapped = 0;
            for (std::size_t p = 0; p < pairs.size(); ++p)
                if ((mask >> p) & 1)
                    mapped |= std::uint32_t{1} << image[p];
            if (mapped < mask) {
                least = false;
                break;
            }
        }
        if (! least)
            continue;
        std::vector<Edge> edges;
        for (std::size_t p = 0; p < pairs.size(); ++p)
            if ((mask >> p) & 1)
                edges.push_back(pairs[p]);
        out.push_back(encode_graph6(Graph(n, edges)));
    }
    return out;
}

} // namespace dal
