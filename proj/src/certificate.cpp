#include "dal/certificate.hpp"

#include "dal/error.hpp"
#include "dal/graph6.hpp"

namespace dal {

namespace {

auto base(const std::vector<std::string> & command, const char * kind_name) -> Json
{
    Json j;
    j["format_version"] = certificate_format_version;
    j["command"] = command;
    j["kind"] = kind_name;
    return j;
}

auto optional_json(const std::optional<Weight> & w) -> Json
{
    return w ? Json(*w) : Json(nullptr);
}

auto budget_json(const Budget & b) -> Json
{
    Json j;
    j["nodes"] = b.nodes ? Json(*b.nodes) : Json(nullptr);
    j["seconds"] = b.seconds ? Json(*b.seconds) : Json(nullptr);
    return j;
}

auto profile_payload(Json & payload, const Labeling & f, const WeightProfile & p) -> void
{
    payload["labeling"] = f.to_string();
    payload["weights"] = p.weights;
    payload["classification"] = classification_json(p.classification);
}

auto fail(std::string reason) -> RecheckResult
{
    return {false, std::move(reason)};
}

auto graph_from_json(const Json & j) -> Graph
{
    auto g = decode_graph6(j.at("graph6").get<std::string>());
    auto descriptor = j.at("descriptor").get<std::string>();
    if (! descriptor.starts_with("graph6:")) {
        auto family = parse_family_spec(descriptor);
        if (! (family == g))
            throw Error(ErrorCode::MalformedInput, "descriptor " + descriptor + " does not match graph6");
        return family;
    }
    return g;
}

auto target_from_json(const Json & j) -> TargetSpec
{
    auto opt = [&](const char * key) -> std::optional<Weight> {
        if (! j.contains(key) || j.at(key).is_null())
            return std::nullopt;
        return j.at(key).get<Weight>();
    };
    auto d = DistanceSet(j.at("D").get<std::vector<int>>());
    auto k = j.at("kind").get<std::string>();
    if (k == "AnyAntimagic")
        return TargetSpec::any_antimagic(d);
    if (k == "Magic")
        return TargetSpec::magic(opt("k"), d);
    if (k == "Progression")
        return TargetSpec::progression(opt("a"), opt("d"), d);
    throw Error(ErrorCode::MalformedInput, "unknown target kind " + k);
}

auto pruning_from_string(const std::string & s) -> PruningConfig
{
    PruningConfig p{false, false, false};
    p.finalize = s.find("finalize") != std::string::npos;
    p.bounds = s.find("bounds") != std::string::npos;
    p.sum_window = s.find("sum_window") != std::string::npos;
    return p;
}

// Recomputes weights and classification of a labeled-graph payload.
auto recheck_profile(const Graph & g, const DistanceSet & d, const Json & payload) -> RecheckResult
{
    auto f = Labeling::parse(payload.at("labeling").get<std::string>());
    auto p = weight_profile(g, f, d);
    if (payload.at("weights").get<std::vector<Weight>>() != p.weights)
        return fail("weights differ from recomputation");
    if (payload.at("classification") != classification_json(p.classification))
        return fail("classification differs from recomputation: " + p.classification.to_string());
    return {};
}

auto recheck_twins(const Graph & g, const DistanceSet & d, int u, int w) -> RecheckResult
{
    DNeighborhoods hoods(g, d);
    if (u < 0 || w < 0 || u >= g.order() || w >= g.order() || u == w)
        return fail("twin witness out of range");
    if (! hoods.same(u, w))
        return fail("witnesses " + std::to_string(u) + "," + std::to_string(w) + " have different D-neighbourhoods");
    return {};
}

auto recheck_scan(const Json & payload, bool rerun_search) -> RecheckResult
{
    const auto & verdicts = payload.at("verdicts");
    std::size_t total = 0;
    for (const auto & [name, count] : payload.at("totals").items())
        total += count.get<std::size_t>();
    if (total != verdicts.size())
        return fail("totals do not sum to the number of verdicts");
    if (payload.at("pairs").get<std::size_t>() != verdicts.size())
        return fail("pair count does not match verdicts");

    std::map<std::string, std::size_t> recount;
    for (const auto & v : verdicts) {
        auto g = decode_graph6(v.at("graph6").get<std::string>());
        DistanceSet d(v.at("D").get<std::vector<int>>());
        auto verdict = v.at("verdict").get<std::string>();
        ++recount[verdict];
        auto twins = find_d_twins(g, d);

        if (verdict == to_string(Verdict::Kind::ConsistentTwinned)) {
            auto pair = v.at("twins").get<std::vector<int>>();
            if (auto r = recheck_twins(g, d, pair.at(0), pair.at(1)); ! r.ok)
                return fail("line " + std::to_string(v.at("line").get<std::size_t>()) + ": " + r.reason);
        }
        else if (! twins.empty())
            return fail("line " + std::to_string(v.at("line").get<std::size_t>()) + ": twins exist but verdict is " + verdict);

        if (verdict == to_string(Verdict::Kind::ConsistentTwinFree)) {
            auto f = Labeling::parse(v.at("labeling").get<std::string>());
            if (! all_distinct(weight_profile(g, f, d).weights))
                return fail("line " + std::to_string(v.at("line").get<std::size_t>()) + ": labeling is not antimagic");
        }
        if (verdict == to_string(Verdict::Kind::Counterexample) && rerun_search) {
            auto outcome = search(g, TargetSpec::any_antimagic(d), {Budget::unlimited(), {}, 1});
            if (outcome.status != SearchOutcome::Status::ExhaustedNone)
                return fail("line " + std::to_string(v.at("line").get<std::size_t>()) + ": counterexample not reproduced");
        }
    }
    for (const auto & [name, count] : payload.at("totals").items())
        if (recount[name] != count.get<std::size_t>())
            return fail("total for " + name + " does not match verdicts");
    return {};
}

} // namespace

auto graph_json(const Graph & g) -> Json
{
    Json j;
    j["descriptor"] = g.descriptor();
    j["graph6"] = encode_graph6(g);
    j["order"] = g.order();
    j["size"] = g.size();
    return j;
}

auto classification_json(const Classification & c) -> Json
{
    Json j;
    switch (c.kind) {
        case Classification::Kind::Magic:
            j["kind"] = "Magic";
            j["k"] = c.value;
            break;
        case Classification::Kind::ArithmeticAntimagic:
            j["kind"] = "ArithmeticAntimagic";
            j["a"] = c.value;
            j["d"] = c.step;
            break;
        case Classification::Kind::PlainAntimagic:
            j["kind"] = "PlainAntimagic";
            break;
        case Classification::Kind::None:
            j["kind"] = "None";
            break;
    }
    return j;
}

auto target_json(const TargetSpec & t) -> Json
{
    Json j;
    switch (t.kind) {
        case TargetSpec::Kind::AnyAntimagic:
            j["kind"] = "AnyAntimagic";
            break;
        case TargetSpec::Kind::Magic:
            j["kind"] = "Magic";
            j["k"] = optional_json(t.start);
            break;
        case TargetSpec::Kind::Progression:
            j["kind"] = "Progression";
            j["a"] = optional_json(t.start);
            j["d"] = optional_json(t.step);
            break;
    }
    j["D"] = t.distances.values();
    return j;
}

auto construction_certificate(const std::vector<std::string> & command, const ConstructionResult & r) -> Json
{
    auto j = base(command, kind::construction);
    j["graph"] = graph_json(r.graph);
    j["D"] = r.profile.distances.values();
    Json payload;
    payload["claim"] = r.claim == ConstructionResult::Claim::Distinct ? "distinct" : "exact";
    if (r.claim == ConstructionResult::Claim::Exact)
        payload["claimed"] = classification_json(r.claimed);
    profile_payload(payload, r.labeling, r.profile);
    payload["notes"] = r.notes;
    j["payload"] = payload;
    return j;
}

auto verification_certificate(const std::vector<std::string> & command, const Graph & g, const Labeling & f,
        const WeightProfile & p) -> Json
{
    auto j = base(command, kind::verification);
    j["graph"] = graph_json(g);
    j["D"] = p.distances.values();
    Json payload;
    profile_payload(payload, f, p);
    j["payload"] = payload;
    return j;
}

auto search_certificate(const std::vector<std::string> & command, const Graph & g, const TargetSpec & target,
        const SearchOptions & options, const SearchOutcome & outcome) -> Json
{
    const char * k = outcome.status == SearchOutcome::Status::Found ? kind::found
            : outcome.status == SearchOutcome::Status::ExhaustedNone ? kind::exhausted
                                                                     : kind::budget;
    auto j = base(command, k);
    j["graph"] = graph_json(g);
    j["D"] = target.distances.values();
    Json payload;
    payload["target"] = target_json(target);
    payload["pruning"] = options.pruning.to_string();
    payload["budget"] = budget_json(options.budget);
    payload["nodes"] = outcome.nodes;
    payload["instances"] = outcome.instances;
    if (outcome.labeling)
        profile_payload(payload, *outcome.labeling, *outcome.profile);
    j["payload"] = payload;
    return j;
}

auto twin_certificate(const std::vector<std::string> & command, const Graph & g, const TwinCertificate & twins) -> Json
{
    auto j = base(command, kind::twins);
    j["graph"] = graph_json(g);
    j["D"] = twins.distances.values();
    Json payload;
    payload["twins"] = {twins.u, twins.w};
    payload["shared_neighbourhood"] = twins.shared;
    j["payload"] = payload;
    return j;
}

auto feasibility_certificate(const std::vector<std::string> & command, const FeasibleParams & params) -> Json
{
    auto j = base(command, kind::feasibility);
    Json payload;
    payload["r"] = params.degree;
    payload["v"] = params.order;
    Json pairs = Json::array();
    for (auto p : params.pairs)
        pairs.push_back({{"a", p.a}, {"d", p.d}});
    payload["pairs"] = pairs;
    j["payload"] = payload;
    return j;
}

auto scan_certificate(const std::vector<std::string> & command, const ScanOptions & options, const ScanReport & report) -> Json
{
    auto j = base(command, kind::scan_report);
    Json payload;
    payload["policy"] = options.policy.to_string();
    payload["budget"] = budget_json(options.conjecture.budget);
    payload["pruning"] = options.conjecture.pruning.to_string();
    payload["input_digest"] = report.input_digest;
    payload["graphs"] = report.graphs;
    payload["pairs"] = report.verdicts.size();
    payload["disconnected_pairs"] = report.disconnected_pairs;
    payload["nodes"] = report.nodes;

    Json totals;
    for (auto k : {Verdict::Kind::ConsistentTwinFree, Verdict::Kind::ConsistentTwinned, Verdict::Kind::Counterexample,
                 Verdict::Kind::Undecided, Verdict::Kind::SoundnessFailure})
        totals[to_string(k)] = report.count(k);
    payload["totals"] = totals;

    Json errors = Json::array();
    for (const auto & e : report.input_errors)
        errors.push_back({{"line", e.line}, {"message", e.message}});
    payload["input_errors"] = errors;

    Json verdicts = Json::array();
    for (const auto & v : report.verdicts) {
        Json e;
        e["line"] = v.graph_id;
        e["graph6"] = v.graph6;
        e["D"] = v.distances.values();
        e["disconnected"] = v.disconnected;
        e["verdict"] = to_string(v.kind);
        if (v.twins)
            e["twins"] = {v.twins->first, v.twins->second};
        if (v.labeling)
            e["labeling"] = v.labeling->to_string();
        if (v.search_status)
            e["nodes"] = v.nodes;
        verdicts.push_back(e);
    }
    payload["verdicts"] = verdicts;
    j["payload"] = payload;
    return j;
}

auto recheck_certificate(const Json & c, bool rerun_search) -> RecheckResult
{
    try {
        if (c.at("format_version").get<int>() != certificate_format_version)
            return fail("unsupported format_version");
        auto k = c.at("kind").get<std::string>();
        const auto & payload = c.at("payload");

        if (k == kind::feasibility) {
            auto p = regular_ad_feasibility(payload.at("r").get<int>(), payload.at("v").get<int>());
            Json pairs = Json::array();
            for (auto pair : p.pairs)
                pairs.push_back({{"a", pair.a}, {"d", pair.d}});
            return pairs == payload.at("pairs") ? RecheckResult{} : fail("feasible pairs differ from recomputation");
        }
        if (k == kind::scan_report)
            return recheck_scan(payload, rerun_search);

        auto g = graph_from_json(c.at("graph"));
        DistanceSet d(c.at("D").get<std::vector<int>>());

        if (k == kind::twins) {
            auto pair = payload.at("twins").get<std::vector<int>>();
            return recheck_twins(g, d, pair.at(0), pair.at(1));
        }
        if (k == kind::construction || k == kind::verification) {
            auto r = recheck_profile(g, d, payload);
            if (! r.ok || k == kind::verification)
                return r;
            auto weights = payload.at("weights").get<std::vector<Weight>>();
            if (payload.at("claim") == "distinct")
                return all_distinct(weights) ? RecheckResult{} : fail("claimed distinct weights repeat");
            return payload.at("claimed") == payload.at("classification") ? RecheckResult{}
                                                                         : fail("classification differs from claim");
        }
        if (k == kind::found || k == kind::exhausted || k == kind::budget) {
            auto target = target_from_json(payload.at("target"));
            if (target.distances != d)
                return fail("target D differs from certificate D");
            if (k == kind::found) {
                if (auto r = recheck_profile(g, d, payload); ! r.ok)
                    return r;
                return satisfies(payload.at("weights").get<std::vector<Weight>>(), target)
                        ? RecheckResult{}
                        : fail("labeling does not meet the target");
            }
            if (k == kind::budget || ! rerun_search)
                return {};
            SearchOptions options;
            options.pruning = pruning_from_string(payload.at("pruning").get<std::string>());
            options.budget = Budget::unlimited();
            auto outcome = search(g, target, options);
            if (outcome.status != SearchOutcome::Status::ExhaustedNone)
                return fail(std::string("re-search returned ") + to_string(outcome.status));
            if (outcome.nodes != payload.at("nodes").get<std::uint64_t>())
                return fail("re-search explored " + std::to_string(outcome.nodes) + " nodes");
            return {};
        }
        return fail("unknown certificate kind " + k);
    }
    catch (const Json::exception & e) {
        return fail(std::string("malformed certificate: ") + e.what());
    }
    catch (const Error & e) {
        return fail(std::string("malformed certificate: ") + e.what());
    }
}

} // namespace dal
