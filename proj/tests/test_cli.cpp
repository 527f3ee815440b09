#include <doctest.h>

#include <map>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "distcrit/graph6.hpp"

using namespace distcrit;
using nlohmann::json;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<json> json_lines(const std::string& text) {
    std::vector<json> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(json::parse(line));
    return lines;
}

// TSV lines are key=value pairs; values of nested fields are JSON.
std::map<std::string, std::string> tsv_fields(const std::string& line) {
    std::map<std::string, std::string> fields;
    std::istringstream in(line);
    std::string cell;
    while (std::getline(in, cell, '\t')) {
        const auto eq = cell.find('=');
        REQUIRE(eq != std::string::npos);
        fields[cell.substr(0, eq)] = cell.substr(eq + 1);
    }
    return fields;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("dnum on positional graphs") {
    const CliRun r = run({"dnum", "Bw", "B?"});
    CHECK(r.exit_code == 0);
    const auto lines = json_lines(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0]["graph6"] == "Bw");
    CHECK(lines[0]["order"] == 3);
    CHECK(lines[0]["D"] == 3);
    CHECK(lines[1]["D"] == 3);
    // The graph6 field round-trips and the witness length matches the order.
    CHECK(write_graph6(parse_graph6(lines[0]["graph6"].get<std::string>())) == "Bw");
    CHECK(lines[0]["witness"].size() == 3);
}

TEST_CASE("graphs arrive on stdin when no positionals are given") {
    const CliRun r = run({"dnum"}, "Bw\n\nA_\n");
    CHECK(r.exit_code == 0);
    const auto lines = json_lines(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0]["D"] == 3);
    CHECK(lines[1]["D"] == 2);
}

TEST_CASE("count reports D(G,k)") {
    const CliRun r = run({"count", "--k", "4"}, write_graph6(complete_graph(4)) + "\n");
    CHECK(r.exit_code == 0);
    const auto lines = json_lines(r.out);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0]["DGk"] == 1);  // D(K_s, s) = 1
}

TEST_CASE("aut output") {
    const CliRun r = run({"aut", "Bw"});
    CHECK(r.exit_code == 0);
    const auto lines = json_lines(r.out);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0]["autOrder"] == 6);
    CHECK(lines[0]["orbits"] == json::array({{0, 1, 2}}));
    CHECK(lines[0]["generators"].is_array());
}

TEST_CASE("critical report") {
    const CliRun r = run({"critical", write_graph6(cycle_graph(5))});
    CHECK(r.exit_code == 0);
    const auto lines = json_lines(r.out);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0]["D"] == 3);
    CHECK(lines[0]["critical"] == true);
    CHECK(lines[0]["strongCritical"] == true);
    CHECK(lines[0]["auditPass"] == true);
}

TEST_CASE("gen streams graph6") {
    const CliRun r = run({"gen", "--n", "5"});
    CHECK(r.exit_code == 0);
    std::istringstream in(r.out);  // raw graph6, not JSON
    std::string line;
    int count = 0;
    while (std::getline(in, line))
        if (!line.empty()) {
            CHECK(parse_graph6(line).order() == 5);
            ++count;
        }
    CHECK(count == 34);
}

TEST_CASE("search and verify") {
    const CliRun search = run({"search", "--max-n", "5", "--d", "3"});
    CHECK(search.exit_code == 0);
    CHECK(json_lines(search.out).size() == 5);  // C3, C4, C5 and the two complements

    const CliRun ok = run({"verify", "--suite", "two-critical", "--max-n", "5"});
    CHECK(ok.exit_code == 0);
    const auto lines = json_lines(ok.out);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0]["passed"] == true);
    CHECK(lines[0]["assertions"].get<int>() > 0);
}

TEST_CASE("tsv carries the same fields as json") {
    const CliRun j = run({"dnum", "Bw"});
    const CliRun t = run({"--format", "tsv", "dnum", "Bw"});
    CHECK(t.exit_code == 0);
    const json record = json_lines(j.out).at(0);
    const auto fields = tsv_fields(t.out.substr(0, t.out.find('\n')));
    REQUIRE(fields.size() == record.size());
    for (auto it = record.begin(); it != record.end(); ++it) {
        REQUIRE(fields.count(it.key()) == 1);
        const std::string expect = it.value().is_string()
                                       ? it.value().get<std::string>()
                                       : it.value().dump();
        CHECK(fields.at(it.key()) == expect);
    }
    // The flag is also accepted after the subcommand.
    const CliRun t2 = run({"dnum", "--format", "tsv", "Bw"});
    CHECK(t2.out == t.out);
}

TEST_CASE("exit codes") {
    CHECK(run({"no-such-command"}).exit_code == 2);   // usage
    CHECK(run({}).exit_code == 2);                    // subcommand required
    CHECK(run({"count", "Bw"}).exit_code == 2);       // missing --k
    CHECK(run({"verify", "--suite", "bogus", "--max-n", "4"}).exit_code == 2);

    const CliRun decode = run({"dnum", "not graph6!"});
    CHECK(decode.exit_code == 3);
    CHECK(decode.err.find("argument 1") != std::string::npos);

    const CliRun stream_decode = run({"dnum"}, "Bw\nB\n");
    CHECK(stream_decode.exit_code == 3);
    CHECK(stream_decode.err.find("line 2") != std::string::npos);

    CHECK(run({"--help"}).exit_code == 0);
}

TEST_SUITE_END();
