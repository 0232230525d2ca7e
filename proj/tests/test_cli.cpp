#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "outerspread/canonical.hpp"
#include "outerspread/cli.hpp"
#include "outerspread/graph.hpp"
#include "outerspread/graph6.hpp"

using osp::Graph;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = osp::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("graph expression parser") {
    CHECK(osp::parse_graph_expr("path:5") == osp::path(5));
    CHECK(osp::parse_graph_expr(" star:4 ") == osp::star(4));
    CHECK(osp::parse_graph_expr("cycle:6") == osp::cycle(6));
    CHECK(osp::parse_graph_expr("complete:3") == osp::complete(3));
    CHECK(osp::parse_graph_expr("fan:7") == osp::fan(7));
    CHECK(osp::parse_graph_expr("wheel:5") == osp::wheel(5));
    CHECK(osp::parse_graph_expr("forest:[3,2,1]") ==
          osp::linear_forest(osp::LinearForestSpec({3, 2, 1})));
    CHECK(osp::parse_graph_expr("join(path:1,path:4)") == osp::fan(5));
    CHECK(osp::parse_graph_expr("join(path:1,join(path:1,path:3))") ==
          osp::join(osp::path(1), osp::fan(4)));
    CHECK(osp::parse_graph_expr("Bw") == osp::complete(3));

    CHECK_THROWS_AS(osp::parse_graph_expr(""), std::invalid_argument);
    CHECK_THROWS_AS(osp::parse_graph_expr("blob:4"), std::invalid_argument);
    CHECK_THROWS_AS(osp::parse_graph_expr("path:x"), std::invalid_argument);
    CHECK_THROWS_AS(osp::parse_graph_expr("path:4extra"), std::invalid_argument);
    CHECK_THROWS_AS(osp::parse_graph_expr("join(path:1)"), std::invalid_argument);
    CHECK_THROWS_AS(osp::parse_graph_expr("forest:3,2"), std::invalid_argument);
}

TEST_CASE("spread subcommand") {
    const CliRun r = run({"spread", "--graph", "star:10"});
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "graph,n,edges,lambda1,lambda_n,spread");
    CHECK(lines[1] == "star:10,10,9,3.00000000000,-3.00000000000,6.00000000000");

    const CliRun k3 = run({"spread", "--graph", "Bw"});
    CHECK(k3.code == 0);
    CHECK(lines_of(k3.out)[1] == "Bw,3,3,2.00000000000,-1.00000000000,3.00000000000");

    // join expression builds the same graph as the named constructor; the
    // expression cell is quoted because it contains a comma
    const CliRun a = run({"spread", "--graph", "join(path:1,path:4)"});
    const CliRun b = run({"spread", "--graph", "fan:5"});
    const auto ca = lines_of(a.out)[1], cb = lines_of(b.out)[1];
    const std::string quoted = "\"join(path:1,path:4)\"";
    REQUIRE(ca.substr(0, quoted.size()) == quoted);
    CHECK(ca.substr(quoted.size()) == cb.substr(cb.find(',')));
}

TEST_CASE("spread json output") {
    const CliRun r = run({"spread", "--graph", "path:3", "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["n"].get<int>() == 3);
    CHECK(doc[0]["edges"].get<int>() == 2);
    CHECK(doc[0]["spread"].get<double>() == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-10));
}

TEST_CASE("enumerate subcommand") {
    const CliRun r = run({"enumerate", "--n", "3", "--connected"});
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    for (const auto& line : lines) CHECK(osp::graph6_decode(line).vertex_count() == 3);

    CHECK(lines_of(run({"enumerate", "--n", "4", "--connected"}).out).size() == 5);
    CHECK(lines_of(run({"enumerate", "--n", "3"}).out).size() == 4);
}

TEST_CASE("codec subcommand") {
    const CliRun enc = run({"codec", "--encode", "path:4"});
    CHECK(enc.code == 0);
    CHECK(enc.out == "Ch\n");

    const CliRun dec = run({"codec", "--decode", "Bw"});
    CHECK(dec.code == 0);
    CHECK(dec.out == "3 3\n0 1\n0 2\n1 2\n");

    const CliRun canon = run({"codec", "--canon", "join(path:1,path:3)"});
    CHECK(canon.code == 0);
    CHECK(canon.out == osp::canonical_form(osp::fan(4)) + "\n");

    CHECK(run({"codec"}).code == 1);
    CHECK(run({"codec", "--encode", "path:3", "--decode", "Bw"}).code == 1);
    CHECK(run({"codec", "--decode", "!!"}).code == 1);
}

TEST_CASE("check-bounds on a single graph") {
    const CliRun r = run({"check-bounds", "--graph", "fan:30"});
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() >= 9);  // header + 4 checks + 4 diagnostics
    CHECK(lines[0] == "check,lhs,rhs,margin,holds,value,detail");
    int holds_seen = 0;
    for (const auto& line : lines)
        if (line.find(",1,,") != std::string::npos) ++holds_seen;
    CHECK(holds_seen == 4);

    // extremal-only failures on a long path are reported, not escalated
    const CliRun path_run = run({"check-bounds", "--graph", "path:100"});
    CHECK(path_run.code == 0);
    bool saw_fail = false;
    for (const auto& line : lines_of(path_run.out))
        if (line.find("extremal") != std::string::npos && line.find(",0,,") != std::string::npos)
            saw_fail = true;
    CHECK(saw_fail);

    CHECK(run({"check-bounds", "--graph", "complete:4"}).code == 1);
    CHECK(run({"check-bounds"}).code == 1);
}

TEST_CASE("check-bounds enumerated scan") {
    const CliRun r = run({"check-bounds", "--scan-enumerated", "6"});
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 6);  // header + n = 2..6
    CHECK(lines[0] == "n,graphs,lambda1_max,min_margin,violations");
    for (std::size_t i = 1; i < lines.size(); ++i)
        CHECK(lines[i].substr(lines[i].rfind(',')) == ",0");

    CHECK(run({"check-bounds", "--scan-enumerated", "1"}).code == 1);
    CHECK(run({"check-bounds", "--scan-enumerated", "3", "--graph", "path:4"}).code == 1);
}

TEST_CASE("max-spread subcommand") {
    const CliRun r = run({"max-spread", "--n", "4"});
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "n,best,best_spread,runner_up_gap,tie_count,ties,max_degree,is_fan,fan_parts");
    const std::string fan4 = osp::canonical_form(osp::fan(4));
    CHECK(lines[1].rfind("4," + fan4 + ",", 0) == 0);
    CHECK(lines[1].find(",1,3") != std::string::npos);  // is_fan = 1, fan_parts = 3
    CHECK(lines[1].find("4.12310562562") != std::string::npos);  // sqrt(17)
}

TEST_CASE("fan-scan subcommand") {
    const CliRun r = run({"fan-scan", "--n", "6"});
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 8);  // header + 7 partitions of 5
    CHECK(lines[0] == "spec,n,forest_edges,spread,lambda1,lambda_n");
    CHECK(lines[1].rfind("5,6,4,", 0) == 0);  // single path wins at n = 6

    const CliRun cut = run({"fan-scan", "--n", "6", "--table-limit", "2"});
    const auto cut_lines = lines_of(cut.out);
    REQUIRE(cut_lines.size() == 3);
    CHECK(cut_lines[1] == lines[1]);
    CHECK(cut_lines[2] == lines[2]);
}

TEST_CASE("fan-scan output is worker independent") {
    const CliRun a = run({"fan-scan", "--n", "18", "--workers", "1"});
    const CliRun b = run({"fan-scan", "--n", "18", "--workers", "5"});
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("conjecture subcommand") {
    const CliRun r = run({"conjecture", "--n-lo", "5", "--n-hi", "6"});
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0].rfind("n,fan_spread,lower_bound", 0) == 0);
    CHECK(lines[1].rfind("5,", 0) == 0);
    CHECK(lines[2].rfind("6,", 0) == 0);
}

TEST_CASE("climb subcommand") {
    const CliRun r = run({"climb", "--graph", "star:8", "--budget", "50", "--seed", "7"});
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "start,start_spread,best,best_spread,improved");
    CHECK(lines[1].rfind("star:8,", 0) == 0);
    CHECK(lines[1].substr(lines[1].rfind(',')) == ",1");

    const CliRun again = run({"climb", "--graph", "star:8", "--budget", "50", "--seed", "7"});
    CHECK(again.out == r.out);
}

TEST_CASE("residuals subcommand") {
    const CliRun r = run({"residuals", "--n", "12"});
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "n,forest_edges,max_res_z,max_res_x,err_lambda1,err_lambda_n");
    CHECK(lines[1].rfind("12,10,", 0) == 0);
}

TEST_CASE("file and stdin plumbing") {
    const std::string gpath = "cli_test_graph.txt";
    {
        std::ofstream f(gpath);
        f << "fan:6\n";
    }
    const CliRun from_file = run({"spread", "--graph", "@" + gpath});
    const CliRun direct = run({"spread", "--graph", "fan:6"});
    CHECK(from_file.code == 0);
    const auto fl = lines_of(from_file.out)[1];
    const auto dl = lines_of(direct.out)[1];
    CHECK(fl.substr(fl.find(',')) == dl.substr(dl.find(',')));
    std::remove(gpath.c_str());

    std::istringstream fake_in("star:5\n");
    std::streambuf* saved = std::cin.rdbuf(fake_in.rdbuf());
    const CliRun from_stdin = run({"spread", "--graph", "-"});
    std::cin.rdbuf(saved);
    CHECK(from_stdin.code == 0);
    CHECK(lines_of(from_stdin.out)[1].find("4.00000000000") != std::string::npos);

    const std::string opath = "cli_test_out.csv";
    const CliRun to_file = run({"spread", "--graph", "fan:6", "--out", opath});
    CHECK(to_file.code == 0);
    CHECK(to_file.out.empty());
    std::ifstream in(opath);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == direct.out);
    std::remove(opath.c_str());

    CHECK(run({"spread", "--graph", "@missing_file_404.txt"}).code == 1);
    CHECK(run({"spread", "--graph", "fan:6", "--out", "no_such_dir/x.csv"}).code == 2);
}

TEST_CASE("usage errors and help") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"spread"}).code == 1);                            // missing --graph
    CHECK(run({"spread", "--graph", "blob:3"}).code == 1);       // bad constructor
    CHECK(run({"spread", "--graph", "path:3", "--format", "xml"}).code == 1);
    CHECK(run({"enumerate", "--n", "12"}).code == 1);
    CHECK(run({"max-spread", "--n", "1"}).code == 1);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"spread", "--help"}).code == 0);
}
