#include "dal/cli.hpp"

#include "dal/certificate.hpp"
#include "dal/conjecture.hpp"
#include "dal/constructions.hpp"
#include "dal/error.hpp"
#include "dal/graph6.hpp"
#include "dal/search.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace dal {

namespace {

struct SearchFlags
{
    std::string distances = "1";
    std::uint64_t budget_nodes = 100'000'000;
    double budget_secs = 300.0;
    int workers = 1;
    bool no_finalize = false;
    bool no_bounds = false;
    bool no_sum_window = false;

    auto add_to(CLI::App * app, bool with_distances = true) -> void
    {
        if (with_distances)
            app->add_option("--D", distances, "comma-separated distance set")->capture_default_str();
        app->add_option("--budget-nodes", budget_nodes, "node limit per search (0: none)")->capture_default_str();
        app->add_option("--budget-secs", budget_secs, "wall-clock limit per search in seconds (0: none)")
                ->capture_default_str();
        app->add_option("--workers", workers, "OpenMP threads")->capture_default_str()->check(CLI::PositiveNumber);
        app->add_flag("--no-finalize", no_finalize, "disable finalised-weight pruning");
        app->add_flag("--no-bounds", no_bounds, "disable weight-interval pruning");
        app->add_flag("--no-sum-window", no_sum_window, "disable the weight-sum window on unknown starts");
    }

    auto budget() const -> Budget
    {
        Budget b;
        if (budget_nodes > 0)
            b.nodes = budget_nodes;
        if (budget_secs > 0)
            b.seconds = budget_secs;
        return b;
    }

    auto options() const -> SearchOptions
    {
        return {budget(), {! no_finalize, ! no_bounds, ! no_sum_window}, workers};
    }
};

auto read_first_line(std::istream & in) -> std::string
{
    for (std::string line; std::getline(in, line);)
        if (line.find_first_not_of(" \t\r") != std::string::npos)
            return line;
    throw Error(ErrorCode::MalformedInput, "no graph on standard input");
}

auto parse_graph_arg(const std::string & text, std::istream & in) -> Graph
{
    if (text == "-")
        return decode_graph6(read_first_line(in));
    if (text.starts_with("graph6:"))
        return decode_graph6(std::string_view(text).substr(7));
    if (text.find(':') != std::string::npos)
        return parse_family_spec(text);
    return decode_graph6(text);
}

auto read_text(const std::string & path, std::istream & in) -> std::string
{
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(in), {});
    std::ifstream file(path);
    if (! file)
        throw Error(ErrorCode::InvalidParameter, "cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(file), {});
}

auto parse_step_list(const std::vector<std::string> & values) -> std::pair<std::optional<Weight>, std::optional<Weight>>
{
    std::vector<Weight> numbers;
    for (const auto & v : values) {
        if (v.empty())
            continue;
        std::size_t used = 0;
        Weight w = 0;
        try {
            w = std::stoll(v, &used);
        }
        catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != v.size())
            throw Error(ErrorCode::InvalidParameter, "not an integer: '" + v + "'");
        numbers.push_back(w);
    }
    if (numbers.size() == 2)
        return {numbers[0], numbers[1]};
    if (numbers.size() == 1)
        return {std::nullopt, numbers[0]};
    return {std::nullopt, std::nullopt};
}

class Runner
{
public:
    Runner(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) :
        _args(args),
        _in(in),
        _out(out),
        _err(err)
    {
    }

    auto emit(const Json & certificate) -> void
    {
        auto check = recheck_certificate(certificate, false);
        if (! check.ok)
            throw std::logic_error("emitted certificate fails its own recheck: " + check.reason);
        _out << certificate.dump(2) << "\n";
    }

    auto gen(const std::string & family_name, const std::string & parameter) -> int
    {
        auto g = parse_family_spec(family_name + ":" + parameter);
        _out << encode_graph6(g) << "\n";
        _err << g.descriptor() << ": order " << g.order() << ", size " << g.size() << "\n";
        return exit_code::ok;
    }

    auto label(const std::string & family_name, int n, bool progression, std::optional<Weight> step) -> int
    {
        auto family = parse_family(family_name);
        if (! family)
            throw Error(ErrorCode::InvalidParameter, "unknown family '" + family_name + "'");
        try {
            auto result = construct(*family, n, progression, step);
            emit(construction_certificate(_args, result));
            _err << result.graph.descriptor() << ": " << result.profile.classification.to_string() << "\n";
            for (const auto & note : result.notes)
                _err << "  " << note << "\n";
            return exit_code::ok;
        }
        catch (const TwinObstructionError & e) {
            auto g = build_family(*family, n);
            auto twins = prove_twin_shortcut(g, DistanceSet{1});
            emit(twin_certificate(_args, g, *twins));
            _err << e.what() << "\n";
            return exit_code::obstruction;
        }
    }

    auto verify(const std::string & graph_arg, const std::string & labeling_path, const std::string & inline_labels,
            const std::string & distances) -> int
    {
        auto g = parse_graph_arg(graph_arg, _in);
        if (labeling_path.empty() == inline_labels.empty())
            throw Error(ErrorCode::InvalidParameter, "give exactly one of a labeling file or --labels");
        auto f = Labeling::parse(inline_labels.empty() ? read_text(labeling_path, _in) : inline_labels);
        auto d = DistanceSet::parse(distances);
        auto profile = weight_profile(g, f, d);
        emit(verification_certificate(_args, g, f, profile));
        _err << g.descriptor() << " D={" << d.to_string() << "}: " << profile.classification.to_string() << "\n";
        return exit_code::ok;
    }

    auto run_search(const std::string & graph_arg, const TargetSpec & target, const SearchOptions & options) -> int
    {
        auto g = parse_graph_arg(graph_arg, _in);
        auto outcome = search(g, target, options);
        emit(search_certificate(_args, g, target, options, outcome));
        _err << g.descriptor() << " " << target.to_string() << " D={" << target.distances.to_string()
             << "}: " << to_string(outcome.status) << " after " << outcome.nodes << " nodes";
        if (outcome.profile)
            _err << ", " << outcome.profile->classification.to_string();
        _err << "\n";
        switch (outcome.status) {
            case SearchOutcome::Status::Found: return exit_code::ok;
            case SearchOutcome::Status::ExhaustedNone: return exit_code::obstruction;
            case SearchOutcome::Status::BudgetExceeded: return exit_code::budget_exceeded;
        }
        return exit_code::ok;
    }

    auto feasible(int r, int v) -> int
    {
        auto params = regular_ad_feasibility(r, v);
        emit(feasibility_certificate(_args, params));
        _err << "r=" << r << " v=" << v << ":";
        for (auto p : params.pairs)
            _err << " (" << p.a << "," << p.d << ")";
        _err << (params.pairs.empty() ? " none" : "") << "\n";
        return params.pairs.empty() ? exit_code::obstruction : exit_code::ok;
    }

    auto conjecture(const std::string & path, const ScanOptions & options) -> int
    {
        ScanReport report;
        if (path == "-")
            report = scan(_in, options);
        else {
            std::ifstream file(path);
            if (! file)
                throw Error(ErrorCode::InvalidParameter, "cannot open " + path);
            report = scan(file, options);
        }
        emit(scan_certificate(_args, options, report));

        _err << "graphs " << report.graphs << ", (graph, D) pairs " << report.verdicts.size() << ", input errors "
             << report.input_errors.size() << ", disconnected pairs " << report.disconnected_pairs << "\n";
        for (auto k : {Verdict::Kind::ConsistentTwinFree, Verdict::Kind::ConsistentTwinned, Verdict::Kind::Counterexample,
                     Verdict::Kind::Undecided, Verdict::Kind::SoundnessFailure})
            _err << "  " << std::left << std::setw(20) << to_string(k) << report.count(k) << "\n";
        _err << "  nodes " << report.nodes << ", " << std::fixed << std::setprecision(2) << report.seconds << " s\n";

        if (report.count(Verdict::Kind::Counterexample) > 0 || report.count(Verdict::Kind::SoundnessFailure) > 0)
            return exit_code::counterexample;
        if (report.count(Verdict::Kind::Undecided) > 0)
            return exit_code::budget_exceeded;
        return exit_code::ok;
    }

    auto check(const std::string & path) -> int
    {
        Json certificate;
        try {
            certificate = Json::parse(read_text(path, _in));
        }
        catch (const Json::parse_error & e) {
            throw Error(ErrorCode::MalformedInput, std::string("certificate is not valid JSON: ") + e.what());
        }
        auto r = recheck_certificate(certificate, true);
        _err << (r.ok ? "certificate OK" : "certificate REJECTED: " + r.reason) << "\n";
        return r.ok ? exit_code::ok : exit_code::invalid_input;
    }

private:
    const std::vector<std::string> & _args;
    std::istream & _in;
    std::ostream & _out;
    std::ostream & _err;
};

auto exit_for(ErrorCode code) -> int
{
    switch (code) {
        case ErrorCode::InvalidParameter:
        case ErrorCode::InvalidLabeling:
        case ErrorCode::MalformedInput: return exit_code::invalid_input;
        case ErrorCode::TwinObstruction:
        case ErrorCode::ProvablyInfeasible: return exit_code::obstruction;
        case ErrorCode::BudgetExceeded: return exit_code::budget_exceeded;
    }
    return exit_code::invalid_input;
}

} // namespace

auto run_cli(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int
{
    CLI::App app{"Distance antimagic labelings: generate, construct, verify, search, refute"};
    app.require_subcommand(1);
    Runner runner(args, in, out, err);
    std::function<int()> action;

    std::string family, parameter, graph_arg, labeling_path, inline_labels, input;
    int n = 0, r = 0, v = 0;

    auto * gen = app.add_subcommand("gen", "print a family member as graph6");
    gen->add_option("family", family)->required();
    gen->add_option("n", parameter, "size, or comma-separated part sizes for multipartite")->required();
    gen->callback([&] { action = [&] { return runner.gen(family, parameter); }; });

    bool progression = false;
    std::optional<Weight> label_step;
    auto * label = app.add_subcommand("label", "closed-form (or cached search) labeling of a family member");
    label->add_option("family", family)->required();
    label->add_option("n", n)->required();
    label->add_flag("--ap", progression, "the (a,d) construction instead of plain antimagic");
    label->add_option("--step", label_step, "d for --ap");
    label->callback([&] { action = [&] { return runner.label(family, n, progression, label_step); }; });

    std::string distances = "1";
    auto * verify = app.add_subcommand("verify", "weights and classification of a given labeling");
    verify->add_option("graph", graph_arg, "graph6, family:n, or - for stdin")->required();
    verify->add_option("labeling", labeling_path, "file with the labels in vertex order, or -");
    verify->add_option("--labels", inline_labels, "labels inline, e.g. \"1 2 4 3\"");
    verify->add_option("--D", distances)->capture_default_str();
    verify->callback([&] { action = [&] { return runner.verify(graph_arg, labeling_path, inline_labels, distances); }; });

    SearchFlags search_flags;
    bool antimagic = false;
    std::vector<std::string> magic_values, ap_values;
    auto * search_cmd = app.add_subcommand("search", "exact backtracking search for a labeling");
    search_cmd->add_option("graph", graph_arg, "graph6, family:n, or - for stdin")->required();
    auto * antimagic_flag = search_cmd->add_flag("--antimagic", antimagic, "any distance antimagic labeling (default)");
    auto * magic_opt = search_cmd->add_option("--magic", magic_values, "magic labeling, optional constant k")
                               ->expected(0, 1)
                               ->allow_extra_args(false);
    auto * ap_opt = search_cmd->add_option("--ap", ap_values, "progression: [a] d, or nothing for any")
                            ->expected(0, 2)
                            ->allow_extra_args(false);
    antimagic_flag->excludes(magic_opt)->excludes(ap_opt);
    magic_opt->excludes(ap_opt);
    search_flags.add_to(search_cmd);
    search_cmd->callback([&] {
        action = [&] {
            auto d = DistanceSet::parse(search_flags.distances);
            TargetSpec target = TargetSpec::any_antimagic(d);
            if (magic_opt->count() > 0) {
                auto [unused, k] = parse_step_list(magic_values);
                target = TargetSpec::magic(k, d);
            }
            else if (ap_opt->count() > 0) {
                auto [a, step] = parse_step_list(ap_values);
                target = TargetSpec::progression(a, step, d);
            }
            return runner.run_search(graph_arg, target, search_flags.options());
        };
    });

    auto * feasible = app.add_subcommand("feasible", "(a,d) candidates for an r-regular graph of order v");
    feasible->add_option("r", r)->required();
    feasible->add_option("v", v)->required();
    feasible->callback([&] { action = [&] { return runner.feasible(r, v); }; });

    SearchFlags scan_flags;
    std::string policy = "1";
    bool cross_check = false;
    auto * conj = app.add_subcommand("conjecture", "twin status vs. searched existence over a graph6 stream");
    conj->add_option("input", input, "graph6 file, or - for stdin")->required();
    conj->add_option("--D", policy, "distance set, 'all', or 'upto:k'")->capture_default_str();
    conj->add_flag("--cross-check", cross_check, "also search twinned instances");
    scan_flags.add_to(conj, false);
    conj->callback([&] {
        action = [&] {
            ScanOptions options;
            options.policy = DPolicy::parse(policy);
            options.conjecture = {scan_flags.budget(), scan_flags.options().pruning, cross_check};
            options.workers = scan_flags.workers;
            return runner.conjecture(input, options);
        };
    });

    std::string certificate_path;
    auto * check = app.add_subcommand("check", "re-verify a certificate document");
    check->add_option("certificate", certificate_path, "file, or -")->required();
    check->callback([&] { action = [&] { return runner.check(certificate_path); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::invalid_input;
    }

    try {
        return action ? action() : exit_code::invalid_input;
    }
    catch (const Error & e) {
        err << to_string(e.code()) << ": " << e.what() << "\n";
        return exit_for(e.code());
    }
}

} // namespace dal
