#include "dal/search.hpp"

#include "dal/error.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace dal {

auto TargetSpec::any_antimagic(DistanceSet d) -> TargetSpec
{
    return {Kind::AnyAntimagic, std::nullopt, std::nullopt, std::move(d)};
}

auto TargetSpec::progression(std::optional<Weight> a, std::optional<Weight> d, DistanceSet ds) -> TargetSpec
{
    if (d && *d < 0)
        throw Error(ErrorCode::InvalidParameter, "progression step must be >= 0");
    return {Kind::Progression, a, d, std::move(ds)};
}

auto TargetSpec::magic(std::optional<Weight> k, DistanceSet d) -> TargetSpec
{
    return {Kind::Magic, k, std::nullopt, std::move(d)};
}

auto TargetSpec::to_string() const -> std::string
{
    auto opt = [](const std::optional<Weight> & w) { return w ? std::to_string(*w) : std::string("*"); };
    switch (kind) {
        case Kind::AnyAntimagic: return "AnyAntimagic";
        case Kind::Magic: return "Magic(" + opt(start) + ")";
        case Kind::Progression: return "Progression(" + opt(start) + "," + opt(step) + ")";
    }
    return "?";
}

auto PruningConfig::to_string() const -> std::string
{
    std::string out;
    auto add = [&](bool on, const char * name) {
        if (on)
            out += (out.empty() ? "" : ",") + std::string(name);
    };
    add(finalize, "finalize");
    add(bounds, "bounds");
    add(sum_window, "sum_window");
    return out.empty() ? "none" : out;
}

auto to_string(SearchOutcome::Status status) -> const char *
{
    switch (status) {
        case SearchOutcome::Status::Found: return "Found";
        case SearchOutcome::Status::ExhaustedNone: return "ExhaustedNone";
        case SearchOutcome::Status::BudgetExceeded: return "BudgetExceeded";
    }
    return "?";
}

auto satisfies(const std::vector<Weight> & weights, const TargetSpec & target) -> bool
{
    if (weights.empty())
        return false;
    auto sorted = weights;
    std::sort(sorted.begin(), sorted.end());

    switch (target.kind) {
        case TargetSpec::Kind::AnyAntimagic:
            return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        case TargetSpec::Kind::Magic:
            return sorted.front() == sorted.back() && (! target.start || sorted.front() == *target.start);
        case TargetSpec::Kind::Progression: {
            if (target.start && sorted.front() != *target.start)
                return false;
            Weight step = target.step ? *target.step : (sorted.size() > 1 ? sorted[1] - sorted[0] : 0);
            for (std::size_t i = 0; i < sorted.size(); ++i)
                if (sorted[i] != sorted.front() + static_cast<Weight>(i) * step)
                    return false;
            return true;
        }
    }
    return false;
}

namespace {

using Clock = std::chrono::steady_clock;

auto floor_div(Weight a, Weight b) -> Weight
{
    Weight q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

auto ceil_div(Weight a, Weight b) -> Weight
{
    return -floor_div(-a, b);
}

// One fully specified target: every weight distinct, weights exactly
// {start + i*step : 0 <= i < v}, or every weight equal to start.
struct Concrete
{
    enum class Mode { Distinct, Slots, Equal };
    Mode mode = Mode::Distinct;
    Weight start = 0;
    Weight step = 0;
};

struct Problem
{
    const DNeighborhoods * hoods = nullptr;
    int order = 0;
    std::vector<Vertex> sequence;
    Concrete target;
    PruningConfig pruning;
    Weight max_weight = 0;
};

enum class BranchStatus { Found, Exhausted, OutOfNodes, OutOfTime, Cancelled };

struct BranchResult
{
    BranchStatus status = BranchStatus::Exhausted;
    std::uint64_t nodes = 0;
    std::vector<int> labels;
};

class Solver
{
public:
    Solver(const Problem & problem, std::optional<Clock::time_point> deadline,
            const std::atomic<int> * winner, int branch) :
        _p(problem),
        _deadline(deadline),
        _winner(winner),
        _branch(branch),
        _labels(problem.order, 0),
        _used(problem.order + 1, 0),
        _partial(problem.order, 0),
        _remaining(problem.order, 0),
        _taken(problem.target.mode == Concrete::Mode::Distinct ? problem.max_weight + 1 :
                    problem.target.mode == Concrete::Mode::Slots ? problem.order : 0, 0),
        _marks(problem.order)
    {
        for (int x = 0; x < _p.order; ++x)
            _remaining[x] = _p.hoods->degree(x);
    }

    auto run(int first_label, std::uint64_t limit) -> BranchResult
    {
        _limit = limit;
        if (_p.pruning.finalize)
            for (int x = 0; x < _p.order; ++x)
                if (_remaining[x] == 0 && ! take(0, _initial_marks))
                    return {BranchStatus::Exhausted, 0, {}};

        if (! charge())
            return {_status, _nodes, {}};
        auto y = _p.sequence[0];
        if (assign(y, first_label, 0)) {
            descend(1);
            unassign(y, first_label, 0);
        }
        if (_status == BranchStatus::Found)
            return {_status, _nodes, _solution};
        return {_status, _nodes, {}};
    }

private:
    const Problem & _p;
    std::optional<Clock::time_point> _deadline;
    const std::atomic<int> * _winner;
    int _branch;

    std::vector<int> _labels;
    std::vector<char> _used;
    std::vector<Weight> _partial;
    std::vector<int> _remaining;
    std::vector<char> _taken;
    std::vector<std::vector<Weight>> _marks; // per depth, what finalization took
    std::vector<Weight> _initial_marks;
    std::vector<Weight> _free; // scratch: unused labels ascending

    std::uint64_t _nodes = 0;
    std::uint64_t _limit = 0;
    BranchStatus _status = BranchStatus::Exhausted;
    std::vector<int> _solution;

    // False once the search has to stop for budget, time or cancellation.
    auto charge() -> bool
    {
        if (_nodes >= _limit) {
            _status = BranchStatus::OutOfNodes;
            return false;
        }
        ++_nodes;
        if ((_nodes & 1023) == 0) {
            if (_deadline && Clock::now() >= *_deadline) {
                _status = BranchStatus::OutOfTime;
                return false;
            }
            if (_winner && _winner->load(std::memory_order_relaxed) < _branch) {
                _status = BranchStatus::Cancelled;
                return false;
            }
        }
        return true;
    }

    auto take(Weight w, std::vector<Weight> & marks) -> bool
    {
        const auto & t = _p.target;
        switch (t.mode) {
            case Concrete::Mode::Distinct:
                if (w < 0 || w > _p.max_weight || _taken[w])
                    return false;
                _taken[w] = 1;
                marks.push_back(w);
                return true;
            case Concrete::Mode::Slots: {
                Weight offset = w - t.start;
                if (offset < 0 || offset % t.step != 0)
                    return false;
                Weight slot = offset / t.step;
                if (slot >= _p.order || _taken[slot])
                    return false;
                _taken[slot] = 1;
                marks.push_back(slot);
                return true;
            }
            case Concrete::Mode::Equal:
                return w == t.start;
        }
        return false;
    }

    auto release(std::vector<Weight> & marks) -> void
    {
        for (auto m : marks)
            _taken[m] = 0;
        marks.clear();
    }

    auto unassign(Vertex y, int label, int depth) -> void
    {
        release(_marks[depth]);
        for (auto x : _p.hoods->members(y)) {
            _partial[x] -= label;
            ++_remaining[x];
        }
        _labels[y] = 0;
        _used[label] = 0;
    }

    auto assign(Vertex y, int label, int depth) -> bool
    {
        _labels[y] = label;
        _used[label] = 1;
        for (auto x : _p.hoods->members(y)) {
            _partial[x] += label;
            --_remaining[x];
        }

        bool ok = true;
        if (_p.pruning.finalize)
            for (auto x : _p.hoods->members(y))
                if (_remaining[x] == 0 && ! take(_partial[x], _marks[depth])) {
                    ok = false;
                    break;
                }
        if (ok && _p.pruning.bounds && _p.target.mode != Concrete::Mode::Distinct)
            ok = bounds_hold();
        if (! ok)
            unassign(y, label, depth);
        return ok;
    }

    // Every unfinished vertex must still be able to reach a free target value.
    auto bounds_hold() -> bool
    {
        _free.clear();
        for (int l = 1; l <= _p.order; ++l)
            if (! _used[l])
                _free.push_back(l);
        const int k = static_cast<int>(_free.size());
        // prefix[i] = sum of the i smallest free labels, suffix[i] = sum of the i largest.
        std::vector<Weight> & prefix = _prefix;
        std::vector<Weight> & suffix = _suffix;
        prefix.assign(k + 1, 0);
        suffix.assign(k + 1, 0);
        for (int i = 0; i < k; ++i) {
            prefix[i + 1] = prefix[i] + _free[i];
            suffix[i + 1] = suffix[i] + _free[k - 1 - i];
        }

        const auto & t = _p.target;
        for (int x = 0; x < _p.order; ++x) {
            int r = _remaining[x];
            if (r == 0)
                continue;
            Weight low = _partial[x] + prefix[r];
            Weight high = _partial[x] + suffix[r];
            if (t.mode == Concrete::Mode::Equal) {
                if (t.start < low || t.start > high)
                    return false;
                continue;
            }
            Weight first = std::max<Weight>(0, ceil_div(low - t.start, t.step));
            Weight last = std::min<Weight>(_p.order - 1, floor_div(high - t.start, t.step));
            bool reachable = false;
            for (Weight s = first; s <= last && ! reachable; ++s)
                reachable = ! _p.pruning.finalize || ! _taken[s];
            if (! reachable)
                return false;
        }
        return true;
    }
    std::vector<Weight> _prefix, _suffix;

    auto leaf_holds() const -> bool
    {
        if (_p.pruning.finalize)
            return true;
        const auto & t = _p.target;
        auto sorted = _partial;
        std::sort(sorted.begin(), sorted.end());
        switch (t.mode) {
            case Concrete::Mode::Distinct:
                return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
            case Concrete::Mode::Equal:
                return sorted.front() == t.start && sorted.back() == t.start;
            case Concrete::Mode::Slots:
                for (std::size_t i = 0; i < sorted.size(); ++i)
                    if (sorted[i] != t.start + static_cast<Weight>(i) * t.step)
                        return false;
                return true;
        }
        return false;
    }

    // True when the search must unwind (solution found or stopped).
    auto descend(int depth) -> bool
    {
        if (depth == _p.order) {
            if (! leaf_holds())
                return false;
            _status = BranchStatus::Found;
            _solution = _labels;
            return true;
        }
        auto y = _p.sequence[depth];
        for (int label = 1; label <= _p.order; ++label) {
            if (_used[label])
                continue;
            if (! charge())
                return true;
            if (! assign(y, label, depth))
                continue;
            bool stop = descend(depth + 1);
            unassign(y, label, depth);
            if (stop)
                return true;
        }
        return false;
    }
};

struct ConcreteResult
{
    BranchStatus status = BranchStatus::Exhausted;
    std::uint64_t nodes = 0;
    std::vector<int> labels;
};

auto run_concrete(const Problem & problem, std::uint64_t limit, std::optional<Clock::time_point> deadline,
        int workers) -> ConcreteResult
{
    const int v = problem.order;
    if (workers <= 1 || v < 2) {
        std::uint64_t used = 0;
        for (int label = 1; label <= v; ++label) {
            Solver solver(problem, deadline, nullptr, label);
            auto r = solver.run(label, limit - used);
            used += r.nodes;
            if (r.status != BranchStatus::Exhausted)
                return {r.status, used, std::move(r.labels)};
        }
        return {BranchStatus::Exhausted, used, {}};
    }

    std::vector<BranchResult> results(v);
    std::atomic<int> winner{v + 1};
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (int label = 1; label <= v; ++label) {
        if (winner.load() < label) {
            results[label - 1].status = BranchStatus::Cancelled;
            continue;
        }
        Solver solver(problem, deadline, &winner, label);
        results[label - 1] = solver.run(label, limit);
        if (results[label - 1].status == BranchStatus::Found) {
            int current = winner.load();
            while (label < current && ! winner.compare_exchange_weak(current, label)) {
            }
        }
    }

    // Replay the serial accounting: branch i only had limit - used nodes left.
    std::uint64_t used = 0;
    for (auto & r : results) {
        if (r.status == BranchStatus::OutOfTime)
            return {r.status, used + r.nodes, {}};
        if (r.status == BranchStatus::OutOfNodes || r.nodes > limit - used)
            return {BranchStatus::OutOfNodes, limit, {}};
        if (r.status == BranchStatus::Cancelled)
            throw std::logic_error("search: cancelled branch precedes the winner");
        used += r.nodes;
        if (r.status == BranchStatus::Found)
            return {r.status, used, std::move(r.labels)};
    }
    return {BranchStatus::Exhausted, used, {}};
}

struct DegreeBounds
{
    Weight min_low = 0, max_low = 0, min_high = 0, max_high = 0;
    Weight sum_min = 0, sum_max = 0; // range of sum_y f(y)|N_D(y)| over bijections
};

auto degree_bounds(const DNeighborhoods & hoods) -> DegreeBounds
{
    const Weight v = hoods.order();
    std::vector<Weight> degrees(v);
    for (int x = 0; x < v; ++x)
        degrees[x] = hoods.degree(x);

    auto low = [&](Weight r) { return r * (r + 1) / 2; };
    auto high = [&](Weight r) { return r * v - r * (r - 1) / 2; };
    DegreeBounds b;
    auto [lo, hi] = std::minmax_element(degrees.begin(), degrees.end());
    b.min_low = low(*lo);
    b.max_low = low(*hi);
    b.min_high = high(*lo);
    b.max_high = high(*hi);

    std::sort(degrees.begin(), degrees.end());
    for (Weight i = 0; i < v; ++i) {
        b.sum_max += degrees[i] * (i + 1);
        b.sum_min += degrees[i] * (v - i);
    }
    return b;
}

// Start values a that a progression with step d could have.
auto start_window(const DegreeBounds & b, Weight v, Weight d, bool sum_window) -> std::pair<Weight, Weight>
{
    Weight span = (v - 1) * d;
    Weight lo = std::max(b.min_low, b.max_low - span);
    Weight hi = std::min(b.min_high, b.max_high - span);
    if (sum_window) {
        // sum of weights = v*a + d*v(v-1)/2 must lie in [sum_min, sum_max]
        Weight shift = d * v * (v - 1) / 2;
        lo = std::max(lo, ceil_div(b.sum_min - shift, v));
        hi = std::min(hi, floor_div(b.sum_max - shift, v));
    }
    return {lo, hi};
}

auto concrete_for(Weight a, Weight d) -> Concrete
{
    if (d == 0)
        return {Concrete::Mode::Equal, a, 0};
    return {Concrete::Mode::Slots, a, d};
}

// Concrete targets in the order they are tried: step ascending, then start ascending.
auto expand(const TargetSpec & target, const DNeighborhoods & hoods, bool sum_window) -> std::vector<Concrete>
{
    const Weight v = hoods.order();
    if (target.kind == TargetSpec::Kind::AnyAntimagic)
        return {{Concrete::Mode::Distinct, 0, 0}};

    auto b = degree_bounds(hoods);
    std::vector<Weight> steps;
    if (target.kind == TargetSpec::Kind::Magic)
        steps = {0};
    else if (target.step)
        steps = {*target.step};
    else if (v == 1)
        steps = {0};
    else
        for (Weight d = 0; d <= (b.max_high - b.min_low) / (v - 1); ++d)
            steps.push_back(d);

    std::vector<Concrete> out;
    for (auto d : steps) {
        auto [lo, hi] = start_window(b, v, d, sum_window);
        if (target.start) {
            // a given start outside the window has no solutions
            if (! sum_window || (*target.start >= lo && *target.start <= hi))
                out.push_back(concrete_for(*target.start, d));
            continue;
        }
        for (Weight a = lo; a <= hi; ++a)
            out.push_back(concrete_for(a, d));
    }
    return out;
}

auto labelling_sequence(const DNeighborhoods & hoods) -> std::vector<Vertex>
{
    std::vector<Vertex> seq(hoods.order());
    std::iota(seq.begin(), seq.end(), 0);
    std::stable_sort(seq.begin(), seq.end(), [&](Vertex a, Vertex b) { return hoods.degree(a) > hoods.degree(b); });
    return seq;
}

} // namespace

auto search(const Graph & g, const TargetSpec & target, const SearchOptions & options) -> SearchOutcome
{
    const DNeighborhoods hoods(g, target.distances);
    const int v = g.order();

    std::optional<Clock::time_point> deadline;
    if (options.budget.seconds)
        deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                std::chrono::duration<double>(*options.budget.seconds));
    const std::uint64_t limit = options.budget.nodes.value_or(std::numeric_limits<std::uint64_t>::max());

    Problem problem;
    problem.hoods = &hoods;
    problem.order = v;
    problem.sequence = labelling_sequence(hoods);
    problem.pruning = options.pruning;
    problem.max_weight = static_cast<Weight>(v) * (v + 1) / 2;

    SearchOutcome outcome;
    for (const auto & concrete : expand(target, hoods, options.pruning.sum_window)) {
        problem.target = concrete;
        auto r = run_concrete(problem, limit - outcome.nodes, deadline, options.workers);
        outcome.nodes += r.nodes;
        ++outcome.instances;

        if (r.status == BranchStatus::Found) {
            Labeling f(std::move(r.labels));
            auto profile = weight_profile(hoods, f, target.distances);
            if (! satisfies(profile.weights, target))
                throw std::logic_error("search produced a labeling that misses its target");
            outcome.status = SearchOutcome::Status::Found;
            outcome.labeling = std::move(f);
            outcome.profile = std::move(profile);
            return outcome;
        }
        if (r.status != BranchStatus::Exhausted) {
            outcome.status = SearchOutcome::Status::BudgetExceeded;
            return outcome;
        }
    }
    outcome.status = SearchOutcome::Status::ExhaustedNone;
    return outcome;
}

namespace {

constexpr int enumerate_limit = 10;

auto count_with_prefix(const DNeighborhoods & hoods, const TargetSpec & target, std::vector<int> labels,
        std::size_t fixed) -> std::uint64_t
{
    std::uint64_t count = 0;
    std::vector<Weight> weights(labels.size());
    do {
        for (int x = 0; x < hoods.order(); ++x) {
            Weight sum = 0;
            for (auto y : hoods.members(x))
                sum += labels[y];
            weights[x] = sum;
        }
        if (satisfies(weights, target))
            ++count;
    } while (std::next_permutation(labels.begin() + static_cast<std::ptrdiff_t>(fixed), labels.end()));
    return count;
}

auto check_enumerable(const Graph & g) -> void
{
    if (g.order() > enumerate_limit)
        throw Error(ErrorCode::InvalidParameter, "enumerate is limited to order <= " + std::to_string(enumerate_limit));
}

} // namespace

auto enumerate_serial(const Graph & g, const TargetSpec & target) -> std::uint64_t
{
    check_enumerable(g);
    DNeighborhoods hoods(g, target.distances);
    std::vector<int> labels(g.order());
    std::iota(labels.begin(), labels.end(), 1);
    return count_with_prefix(hoods, target, labels, 0);
}

auto enumerate(const Graph & g, const TargetSpec & target) -> std::uint64_t
{
    check_enumerable(g);
    DNeighborhoods hoods(g, target.distances);
    const int v = g.order();
    std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
    for (int first = 1; first <= v; ++first) {
        std::vector<int> labels{first};
        for (int l = 1; l <= v; ++l)
            if (l != first)
                labels.push_back(l);
        total += count_with_prefix(hoods, target, labels, 1);
    }
    return total;
}

auto prove_twin_shortcut(const Graph & g, const DistanceSet & d) -> std::optional<TwinCertificate>
{
    DNeighborhoods hoods(g, d);
    for (int u = 0; u < g.order(); ++u)
        for (int w = u + 1; w < g.order(); ++w)
            if (hoods.same(u, w))
                return TwinCertificate{u, w, d, hoods.members(u)};
    return std::nullopt;
}

} // namespace dal
