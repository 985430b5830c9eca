#include "doctest.h"

#include "dal/certificate.hpp"
#include "dal/cli.hpp"
#include "dal/graph6.hpp"

#include "support.hpp"

#include <sstream>

using namespace dal;

namespace {

struct Run
{
    int code;
    std::string out;
    std::string err;

    auto json() const -> Json { return Json::parse(out); }
};

auto run(std::vector<std::string> args, const std::string & input = "") -> Run
{
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

auto check_accepts(const std::string & document) -> Run
{
    return run({"check", "-"}, document);
}

} // namespace

TEST_CASE("gen")
{
    auto c4 = run({"gen", "cycle", "4"});
    CHECK(c4.code == exit_code::ok);
    CHECK(c4.out == "Cl\n");

    auto f2 = run({"gen", "friendship", "2"});
    CHECK(f2.code == exit_code::ok);
    auto g = decode_graph6(f2.out.substr(0, f2.out.size() - 1));
    CHECK(g.order() == 5);
    CHECK(g.edges().size() == 6);

    CHECK(run({"gen", "sun", "2"}).code == exit_code::invalid_input);
    CHECK(run({"gen", "octahedron", "2"}).code == exit_code::invalid_input);
    CHECK(run({"gen", "multipartite", "2,3"}).out == encode_graph6(complete_multipartite({2, 3})) + "\n");
}

TEST_CASE("label")
{
    auto k4 = run({"label", "complete", "4"});
    REQUIRE(k4.code == exit_code::ok);
    auto j = k4.json();
    CHECK(j["format_version"] == 1);
    CHECK(j["kind"] == "ConstructionVerified");
    CHECK(j["payload"]["labeling"] == "1 2 3 4");
    CHECK(j["payload"]["classification"]["a"] == 6);
    CHECK(j["payload"]["classification"]["d"] == 1);

    auto f3 = run({"label", "fan", "3"});
    CHECK(f3.code == exit_code::obstruction);
    CHECK(f3.json()["kind"] == "TwinObstruction");
    CHECK(f3.json()["payload"]["twins"] == Json::array({1, 3}));

    auto s6 = run({"label", "sun", "6"});
    CHECK(s6.code == exit_code::ok);
    CHECK_FALSE(s6.json()["payload"]["notes"].empty());

    auto prism = run({"label", "prism", "4", "--ap"});
    CHECK(prism.code == exit_code::ok);
    CHECK(prism.json()["payload"]["classification"]["a"] == 10);

    CHECK(run({"label", "prism", "4", "--ap", "--step", "2"}).code == exit_code::obstruction);
    CHECK(run({"label", "cycle", "6", "--ap"}).code == exit_code::obstruction);
    CHECK(run({"label", "cycle", "21", "--ap"}).code == exit_code::budget_exceeded);
}

TEST_CASE("verify")
{
    auto c4 = run({"verify", "cycle:4", "--labels", "1 2 4 3"});
    REQUIRE(c4.code == exit_code::ok);
    CHECK(c4.json()["payload"]["classification"]["kind"] == "Magic");
    CHECK(c4.json()["payload"]["classification"]["k"] == 5);

    auto k4 = run({"verify", "C~", "-"}, "1 2 3 4\n");
    REQUIRE(k4.code == exit_code::ok);
    CHECK(k4.json()["payload"]["classification"]["kind"] == "ArithmeticAntimagic");

    CHECK(run({"verify", "complete:4", "--labels", "1 2 2 4"}).code == exit_code::invalid_input);
    CHECK(run({"verify", "complete:4", "--labels", "1 2 3"}).code == exit_code::invalid_input);
    CHECK(run({"verify", "C~~", "--labels", "1 2 3 4"}).code == exit_code::invalid_input);

    auto closed = run({"verify", "cycle:4", "--labels", "1 2 4 3", "--D", "0,1"});
    CHECK(closed.json()["payload"]["weights"] == Json::array({6, 7, 9, 8}));
}

TEST_CASE("search")
{
    auto f2 = run({"search", "friendship:2", "--ap", "6", "1"});
    CHECK(f2.code == exit_code::ok);
    CHECK(f2.json()["kind"] == "Found");

    auto c4 = run({"search", "cycle:4", "--antimagic"});
    CHECK(c4.code == exit_code::obstruction);
    CHECK(c4.json()["kind"] == "ExhaustedNone");
    CHECK(c4.json()["payload"]["pruning"] == "finalize,bounds,sum_window");

    auto w5 = run({"search", "wheel:5", "--ap", "1"});
    CHECK(w5.code == exit_code::ok);
    CHECK(w5.json()["payload"]["classification"]["d"] == 1);

    auto magic = run({"search", "cycle:4", "--magic"});
    CHECK(magic.code == exit_code::ok);
    CHECK(magic.json()["payload"]["classification"]["k"] == 5);

    CHECK(run({"search", "cycle:4", "--magic", "6"}).code == exit_code::obstruction);
    CHECK(run({"search", "fan:5", "--ap"}).code == exit_code::obstruction);

    auto starved = run({"search", "cycle:15", "--ap", "--budget-nodes", "5"});
    CHECK(starved.code == exit_code::budget_exceeded);
    CHECK(starved.json()["kind"] == "BudgetExceeded");

    CHECK(run({"search", "cycle:4", "--magic", "--antimagic"}).code == exit_code::invalid_input);
}

TEST_CASE("feasible")
{
    auto p = run({"feasible", "3", "8"});
    CHECK(p.code == exit_code::ok);
    CHECK(p.json()["payload"]["pairs"] == Json::parse(R"([{"a":10,"d":1}])"));

    for (int n = 3; n <= 10; ++n) {
        auto rows = run({"feasible", "3", std::to_string(2 * n)}).json()["payload"]["pairs"];
        REQUIRE(rows.size() == 1);
        CHECK(rows[0]["d"] == 1);
    }

    CHECK(run({"feasible", "0", "5"}).json()["payload"]["pairs"] == Json::parse(R"([{"a":0,"d":0}])"));
    CHECK(run({"feasible", "5", "5"}).code == exit_code::invalid_input);
}

TEST_CASE("conjecture")
{
    auto path = testing::data_path("graphs_order_le5.g6");
    auto fixed = run({"conjecture", path});
    CHECK(fixed.code == exit_code::ok);
    CHECK(fixed.json()["payload"]["totals"]["Counterexample"] == 0);

    auto all = run({"conjecture", path, "--D", "all"});
    CHECK(all.code == exit_code::ok);
    CHECK(all.json()["payload"]["pairs"] == 362);
    CHECK(all.json()["payload"]["totals"]["Counterexample"] == 0);

    auto broken = run({"conjecture", "-"}, "Cl\n!!bad\nC~\n");
    CHECK(broken.code == exit_code::ok);
    CHECK(broken.json()["payload"]["input_errors"].size() == 1);

    auto starved = run({"conjecture", "-", "--budget-nodes", "1"}, encode_graph6(fan(5)) + "\n");
    CHECK(starved.code == exit_code::budget_exceeded);

    CHECK(run({"conjecture", "/nonexistent/file.g6"}).code == exit_code::invalid_input);
}

TEST_CASE("output is byte-identical across runs and worker counts")
{
    auto path = testing::data_path("graphs_order_le6.g6");
    auto one = run({"conjecture", path, "--D", "upto:2"});
    auto again = run({"conjecture", path, "--D", "upto:2"});
    CHECK(one.out == again.out);

    auto s1 = run({"search", "prism:5", "--ap"});
    auto s2 = run({"search", "prism:5", "--ap"});
    CHECK(s1.out == s2.out);

    auto p1 = run({"search", "prism:5", "--ap", "--workers", "3"});
    CHECK(p1.json()["payload"] == s1.json()["payload"]);
    auto c3 = run({"conjecture", path, "--D", "upto:2", "--workers", "3"});
    CHECK(c3.json()["payload"] == one.json()["payload"]);
}

TEST_CASE("check accepts emitted certificates and rejects tampered ones")
{
    std::vector<std::vector<std::string>> commands{
            {"label", "wheel", "6"},
            {"label", "fan", "3"},
            {"label", "prism", "3", "--ap"},
            {"verify", "cycle:4", "--labels", "1 2 4 3"},
            {"search", "friendship:2", "--ap", "6", "1"},
            {"search", "wheel:6", "--ap"},
            {"search", "cycle:15", "--ap", "--budget-nodes", "5"},
            {"feasible", "3", "8"},
            {"conjecture", testing::data_path("graphs_order_le5.g6"), "--D", "all"},
    };
    for (const auto & command : commands) {
        auto emitted = run(command);
        CAPTURE(emitted.out);
        auto checked = check_accepts(emitted.out);
        CHECK(checked.code == exit_code::ok);
    }

    auto k4 = run({"label", "complete", "4"}).json();
    auto bad_label = k4;
    bad_label["payload"]["labeling"] = "1 2 4 3";
    CHECK(check_accepts(bad_label.dump()).code != exit_code::ok);

    auto bad_weight = k4;
    bad_weight["payload"]["weights"][0] = 10;
    CHECK(check_accepts(bad_weight.dump()).code != exit_code::ok);

    auto none = run({"search", "wheel:6", "--ap"}).json();
    auto bad_nodes = none;
    bad_nodes["payload"]["nodes"] = none["payload"]["nodes"].get<int>() + 1;
    CHECK(check_accepts(bad_nodes.dump()).code != exit_code::ok);

    auto twins = run({"label", "fan", "3"}).json();
    twins["payload"]["twins"] = Json::array({0, 2});
    CHECK(check_accepts(twins.dump()).code != exit_code::ok);

    auto feas = run({"feasible", "3", "8"}).json();
    feas["payload"]["pairs"][0]["a"] = 11;
    CHECK(check_accepts(feas.dump()).code != exit_code::ok);

    auto scanned = run({"conjecture", testing::data_path("graphs_order_le5.g6")}).json();
    scanned["payload"]["totals"]["ConsistentTwinFree"] = 26;
    CHECK(check_accepts(scanned.dump()).code != exit_code::ok);

    auto relabelled = k4;
    relabelled["graph"]["descriptor"] = "cycle:4";
    CHECK(check_accepts(relabelled.dump()).code != exit_code::ok);

    CHECK(check_accepts("{ not json").code == exit_code::invalid_input);
    CHECK(check_accepts(R"({"format_version": 2})").code != exit_code::ok);
}
