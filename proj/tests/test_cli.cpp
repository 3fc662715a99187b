#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "tropmod/graph_json.hpp"
#include "tropmod/isomorphism.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using nlohmann::json;
namespace fs = std::filesystem;
using namespace tropmod;

namespace {

const fs::path& work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "tropmod_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

void put(const std::string& name, const std::string& text) {
    std::ofstream f(work_dir() / name, std::ios::binary);
    f << text;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

// `args` is a raw shell fragment; `env` an optional VAR=value prefix.
Run run_cli(const std::string& args, const std::string& env = "") {
    static int n = 0;
    fs::path out = work_dir() / ("stdout" + std::to_string(n));
    fs::path err = work_dir() / ("stderr" + std::to_string(n));
    ++n;
    std::string cmd = "cd " + work_dir().string() + " && " +
                      (env.empty() ? "" : env + " ") + TROPMOD_CLI_PATH +
                      " " + args + " > " + out.string() + " 2> " +
                      err.string();
    int rc = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

void write_fixtures() {
    put("theta.json", R"({"vertices":[{"id":"u","weight":0},{"id":"v","weight":0}],
"edges":[{"id":"e1","ends":["u","v"]},{"id":"e2","ends":["u","v"]},{"id":"e3","ends":["u","v"]}],
"leaves":[]})");
    put("p.json", R"({"graph":"theta.json","coords":{"e1":"0","e2":"1/2","e3":"2/3"}})");
    put("q.json", R"({"graph":"theta.json","coords":{"e1":"1/2","e2":"0","e3":"2/3"}})");
    put("far.json", R"({"graph":"theta.json","coords":{"e1":"inf","e2":"1/2","e3":"2/3"}})");
    put("bad.json", "{ this is not json");
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

} // namespace

TEST_CASE("generation commands") {
    write_fixtures();

    Run r = run_cli("gen-regular --genus 2 --leaves 0");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["count"] == 2);
    CHECK(j["classes"].size() == 2);
    // Entries are valid graph JSON.
    for (const auto& jc : j["classes"]) {
        WeightedGraph g = graph_from_json(jc);
        CHECK(stats(g).genus == 2);
    }
    // Byte determinism across runs.
    CHECK(run_cli("gen-regular --genus 2 --leaves 0").out == r.out);

    Run s = run_cli("gen-stable --genus 2 --leaves 0");
    REQUIRE(s.code == 0);
    CHECK(json::parse(s.out)["count"] == 7);

    Run md = run_cli("gen-regular --genus 2 --leaves 0 --format md");
    REQUIRE(md.code == 0);
    CHECK(md.out.substr(0, 3) == "| #");
    CHECK(count_lines(md.out) == 4); // header, rule, two classes

    Run to_file = run_cli("gen-regular --genus 2 --leaves 0 --out g20.json");
    REQUIRE(to_file.code == 0);
    CHECK(to_file.out.empty());
    CHECK(slurp(work_dir() / "g20.json") == r.out);
}

TEST_CASE("contract and aut") {
    write_fixtures();

    Run r = run_cli("contract --graph theta.json --edges e1");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    WeightedGraph res = graph_from_json(j["result"]);
    CHECK(canonical_key(res) == canonical_key(corpus::rose(2)));
    CHECK(j["contracted"] == json::array({"e1"}));
    CHECK(j["witness"]["vertexMap"]["u"] == j["witness"]["vertexMap"]["v"]);

    CHECK(run_cli("contract --graph theta.json --edges zz").code == 1);
    CHECK(run_cli("contract --graph nope.json --edges e1").code == 1);
    CHECK(run_cli("contract --graph bad.json --edges e1").code == 1);

    Run a = run_cli("aut --graph theta.json");
    REQUIRE(a.code == 0);
    CHECK(a.out.find("|Aut| = 12") != std::string::npos);
    CHECK(a.out.find("|edge action| = 6") != std::string::npos);
    CHECK(a.out.find("kernel = 2") != std::string::npos);

    Run aj = run_cli("aut --graph theta.json --format json");
    REQUIRE(aj.code == 0);
    json ja = json::parse(aj.out);
    CHECK(ja["autOrder"] == 12);
    CHECK(ja["edgeActionOrder"] == 6);
    CHECK(ja["kernelSize"] == 2);
    CHECK(!ja["generators"].empty());
}

TEST_CASE("strata command and its side outputs") {
    write_fixtures();

    Run r = run_cli("strata --graph theta.json --dot poset.dot");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["strata"].size() == 4);
    std::vector<int> dims;
    for (const auto& js : j["strata"]) dims.push_back(js["dimension"]);
    CHECK(dims == std::vector<int>{3, 2, 1, 0});

    std::string dot = slurp(work_dir() / "poset.dot");
    CHECK(dot.find("digraph") != std::string::npos);
    for (const char* node : {"s0", "s1", "s2", "s3"})
        CHECK(dot.find(node) != std::string::npos);
    int arrows = 0;
    for (std::size_t i = 0; dot.find("->", i) != std::string::npos;
         i = dot.find("->", i) + 2)
        ++arrows;
    CHECK(arrows == 3);

    Run md = run_cli("strata --graph theta.json --format md");
    REQUIRE(md.code == 0);
    CHECK(md.out.find("dim") != std::string::npos);

    // Determinism.
    CHECK(run_cli("strata --graph theta.json").out == r.out);
}

TEST_CASE("point commands: classify, fiber, dist") {
    write_fixtures();

    Run c = run_cli("classify-point --point p.json");
    REQUIRE(c.code == 0);
    json jc = json::parse(c.out);
    CHECK(jc["zero_edges"] == json::array({"e1"}));
    CHECK(jc["dimension"] == 2);
    CHECK(jc["lengths"]["e2"] == "1/2");
    CHECK(jc["lengths"]["e3"] == "2/3");

    // A length of infinity lies in the same boundary stratum as length 0;
    // the closed cone has no identification and refuses it.
    Run ci = run_cli("classify-point --point far.json");
    REQUIRE(ci.code == 0);
    CHECK(json::parse(ci.out)["zero_edges"] == json::array({"e1"}));
    CHECK(run_cli("classify-point --point far.json --closed").code == 1);

    Run f = run_cli("fiber --point p.json");
    REQUIRE(f.code == 0);
    json jf = json::parse(f.out);
    CHECK(jf["size"] == 6);
    CHECK(jf["points"].size() == 6);
    for (const auto& jp : jf["points"]) CHECK(jp["graph"] == "theta.json");

    Run d = run_cli("dist --p p.json --q q.json");
    REQUIRE(d.code == 0);
    CHECK(d.out == "2.0943951023931953\n"); // 2*pi/3

    CHECK(run_cli("dist --p p.json --q q.json --turns").out == "1/3\n");
    CHECK(run_cli("dist --p p.json --q p.json").out == "0\n");
    // p and q differ by an edge swap, so their classes coincide.
    CHECK(run_cli("dist --p p.json --q q.json --quotient").out == "0\n");
    CHECK(run_cli("dist --p p.json --q q.json --quotient --turns").out ==
          "0\n");
    // A huge tolerance clips the float output to 0; exact output ignores it.
    CHECK(run_cli("dist --p p.json --q q.json --tol 10").out == "0\n");
    CHECK(run_cli("dist --p p.json --q q.json --tol 10 --turns").out ==
          "1/3\n");

    CHECK(run_cli("dist --p p.json --q bad.json").code == 1);
    CHECK(run_cli("classify-point --point nope.json").code == 1);
}

TEST_CASE("compare and report") {
    write_fixtures();

    Run r = run_cli("compare --genus 2 --leaves 0 --csv cov.csv");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["stable_classes"].size() == 7);
    REQUIRE(j["bases"].size() == 2);
    CHECK(j["union_missing"].empty());

    std::string csv = slurp(work_dir() / "cov.csv");
    CHECK(csv.substr(0, csv.find('\n')) ==
          "base_key,stratum_key,dim,nodal_class_key,covered");
    // 4 + 6 stratum rows, 3 + 1 missing rows, 1 header.
    CHECK(count_lines(csv) == 15);
    int uncovered = 0;
    std::istringstream lines(csv);
    std::string line;
    while (std::getline(lines, line))
        if (line.size() >= 2 && line.substr(line.size() - 2) == ",0")
            ++uncovered;
    CHECK(uncovered == 4);

    Run rep = run_cli("report --genus 2 --leaves 0 --out report.md");
    REQUIRE(rep.code == 0);
    std::string mdtext = slurp(work_dir() / "report.md");
    CHECK(mdtext.find("# Report: genus 2, 0 leaves") == 0);
    CHECK(mdtext.find("## Strata") != std::string::npos);
    CHECK(mdtext.find("Union coverage: 7/7") != std::string::npos);
    // Determinism.
    Run rep2 = run_cli("report --genus 2 --leaves 0 --out report2.md");
    REQUIRE(rep2.code == 0);
    CHECK(slurp(work_dir() / "report2.md") == mdtext);
}

TEST_CASE("exit codes and the edge-bound override") {
    write_fixtures();

    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("gen-regular --help").code == 0);
    CHECK(run_cli("").code == 1);               // a subcommand is required
    CHECK(run_cli("frobnicate").code == 1);     // unknown subcommand
    CHECK(run_cli("gen-regular --genus 2").code == 1); // missing --leaves
    CHECK(run_cli("gen-regular --genus 2 --leaves 0 --format yaml").code ==
          1);
    CHECK(run_cli("gen-regular --genus 0 --leaves 2").code == 1); // unstable

    Run tight =
        run_cli("gen-regular --genus 2 --leaves 0", "TROPMOD_MAX_EDGES=2");
    CHECK(tight.code == 1);
    CHECK(!tight.err.empty());

    CHECK(run_cli("gen-regular --genus 2 --leaves 0",
                  "TROPMOD_MAX_EDGES=9")
              .code == 0);
    Run junk =
        run_cli("gen-regular --genus 2 --leaves 0", "TROPMOD_MAX_EDGES=abc");
    CHECK(junk.code == 1);
    CHECK(junk.err.find("TROPMOD_MAX_EDGES") != std::string::npos);

    // The strata bound is also overridable (4 parallel edges, bound 3).
    put("b4.json", R"({"vertices":[{"id":"u","weight":0},{"id":"v","weight":0}],
"edges":[{"id":"e1","ends":["u","v"]},{"id":"e2","ends":["u","v"]},{"id":"e3","ends":["u","v"]},{"id":"e4","ends":["u","v"]}],
"leaves":[]})");
    CHECK(run_cli("strata --graph b4.json", "TROPMOD_MAX_EDGES=3").code == 1);
    CHECK(run_cli("strata --graph b4.json").code == 0);
}
