#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "test_support.hpp"

using namespace asmbly::testing;

namespace {

std::string bin() {
    const char* b = std::getenv("ASMBLY_BIN");
    REQUIRE(b != nullptr);
    return b;
}

std::string data(const std::string& name) {
    const char* d = std::getenv("ASMBLY_DATA");
    REQUIRE(d != nullptr);
    return std::string(d) + "/" + name;
}

/** Runs the tool with stderr (timings) silenced. */
SpawnResult run_tool(const std::string& args) {
    return run_command(bin() + " " + args + " 2>/dev/null");
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string& tag) : path("cli_" + tag) {
        std::filesystem::remove_all(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
    std::string str() const { return path.string(); }
};

}  // namespace

TEST_CASE("expand reports hypergraph sizes") {
    SpawnResult r = run_tool("expand " + data("cubane.smi"));
    CHECK(r.status == 0);
    CHECK(r.out == "vertices=797 edges=8616 seeds=1\n");

    r = run_tool("expand " + data("cubane.smi") + " --rule edge");
    CHECK(r.status == 0);
    CHECK(r.out == "vertices=64 edges=254 seeds=1\n");

    r = run_tool("expand " + data("cubane.smi") + " --cyclization-only");
    CHECK(r.status == 0);
    CHECK(r.out == "vertices=241 edges=1085 seeds=0\n");

    r = run_tool("expand " + data("triangle.edges"));
    CHECK(r.status == 0);
    CHECK(r.out == "vertices=4 edges=3 seeds=1\n");
}

TEST_CASE("index reports the optimum and its witness shape") {
    SpawnResult r = run_tool("index " + data("p5.smi"));
    CHECK(r.status == 0);
    CHECK(r.out ==
          "index=2\n"
          "affixations=2 cyclizations=0 depth=2 edges=2\n"
          "vertices=4 edges=4 seeds=1\n");

    r = run_tool("index " + data("cubane.smi") + " --rule edge");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "index=3\n"
          "affixations=3 cyclizations=5 depth=8 edges=8\n"
          "vertices=64 edges=254 seeds=1\n");

    SpawnResult atom = run_command("echo C | " + bin() + " index - --format smiles 2>/dev/null");
    CHECK(atom.status == 0);
    CHECK(atom.out ==
          "index=0\n"
          "affixations=0 cyclizations=0 depth=0 edges=0\n"
          "vertices=1 edges=0 seeds=1\n");
}

TEST_CASE("index exports witness, dot and LP files") {
    TempDir dir("index_out");
    SpawnResult r = run_tool("index " + data("p5.smi") + " --emit-lp --out " + dir.str());
    CHECK(r.status == 0);
    std::string wit = slurp(dir / "witness.json");
    CHECK(wit.find("\"edges\"") != std::string::npos);
    CHECK(wit.find("\"objective\"") != std::string::npos);
    std::string dot = slurp(dir / "witness.dot");
    CHECK(dot.find("digraph witness") != std::string::npos);
    std::string lp = slurp(dir / "model.lp");
    CHECK(lp.find("Minimize") != std::string::npos);
    CHECK(lp.find("End") != std::string::npos);
}

TEST_CASE("validate accepts a matching export and rejects a foreign witness") {
    TempDir dir("validate");
    CHECK(run_tool("expand " + data("p5.smi") + " --out " + dir.str()).status == 0);
    CHECK(run_tool("index " + data("p5.smi") + " --out " + dir.str()).status == 0);
    SpawnResult ok =
        run_tool("validate " + (dir / "hypergraph.json") + " " + (dir / "witness.json"));
    CHECK(ok.status == 0);
    CHECK(ok.out == "valid=1 order_length=2\n");

    TempDir tri("validate_tri");
    CHECK(run_tool("index " + data("triangle.edges") + " --out " + tri.str()).status == 0);
    SpawnResult bad =
        run_tool("validate " + (dir / "hypergraph.json") + " " + (tri / "witness.json"));
    CHECK(bad.status == 1);
    CHECK(bad.out.find("valid=0 failure=") == 0);
}

TEST_CASE("dp reports exact table statistics") {
    SpawnResult r = run_tool("dp " + data("p5.smi") + " --cost additive --cycl-cost 0");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "value=3 plans=2 shared_plans=2 depth=3 minaffix=2\n"
          "plan: affixations=3 cyclizations=0 depth=3\n");

    SpawnResult unit =
        run_command("echo CCC | " + bin() +
                    " dp - --format smiles --r 2 --seed-weight one 2>/dev/null");
    CHECK(unit.status == 0);
    CHECK(unit.out ==
          "value=4 plans=1 shared_plans=1 depth=1 minaffix=1\n"
          "plan: affixations=1 cyclizations=0 depth=1\n");

    SpawnResult heavy =
        run_command("echo CCC | " + bin() + " dp - --format smiles --r 2 2>/dev/null");
    CHECK(heavy.status == 0);
    CHECK(heavy.out.find("value=8 ") == 0);

    SpawnResult cub = run_tool("dp " + data("cubane.smi"));
    CHECK(cub.status == 0);
    CHECK(cub.out.find(" plans=412 shared_plans=204 depth=8 minaffix=4\n") != std::string::npos);

    SpawnResult dim = run_tool("dp " + data("dimer.smi") + " --r 3/2");
    CHECK(dim.status == 0);
    CHECK(dim.out.find(" plans=645 shared_plans=541 depth=5 minaffix=6\n") != std::string::npos);
}

TEST_CASE("compare separates the exact optimum from the tree relaxation") {
    SpawnResult r = run_tool("compare " + data("cubane.smi") +
                             " --rule edge --cost additive --cycl-cost 0");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "ilp: cost=3 affixations=3 cyclizations=5 depth=8\n"
          "dp: value=7 affixations=7 cyclizations=5 depth=12\n");
}

TEST_CASE("witnesses lists the optimum and a depth histogram") {
    SpawnResult r = run_tool("witnesses " + data("p5.smi"));
    CHECK(r.status == 0);
    CHECK(r.out == "optimum=2 witnesses=1\ndepth=2 count=1\n");

    r = run_tool("witnesses " + data("cubane.smi") + " --rule edge --limit 5");
    CHECK(r.status == 0);
    CHECK(r.out.find("optimum=3 witnesses=5\n") == 0);
    CHECK(r.out.find("depth=") != std::string::npos);

    TempDir dir("witness_files");
    r = run_tool("witnesses " + data("p5.smi") + " --out " + dir.str());
    CHECK(r.status == 0);
    CHECK(std::filesystem::exists(dir / "witness_0.json"));
}

TEST_CASE("grammar prints rule and string statistics") {
    SpawnResult r = run_tool("grammar " + data("triangle.edges"));
    CHECK(r.status == 0);
    CHECK(r.out == "rules=3 terminals=1 string_length=3\ncnf_rules=3 cnf_nonterminals=3\n");

    TempDir dir("grammar_out");
    r = run_tool("grammar " + data("triangle.edges") + " --out " + dir.str());
    CHECK(r.status == 0);
    CHECK(slurp(dir / "grammar.txt").find("# start: ") == 0);
    CHECK(slurp(dir / "grammar_cnf.txt").find("# start: ") == 0);
}

TEST_CASE("failures map to documented exit codes") {
    CHECK(run_tool("index " + data("malformed.edges")).status == 2);
    CHECK(run_tool("index does_not_exist.smi").status == 2);
    CHECK(run_tool("expand " + data("cubane.smi") + " --max-compounds 3").status == 3);
    CHECK(run_tool("expand " + data("cubane.smi") + " --max-edges 7").status == 3);
    CHECK(run_tool("dp " + data("p5.smi") + " --r 1").status == 2);
    CHECK(run_tool("dp " + data("p5.smi") + " --r 0/0").status == 2);
    CHECK(run_tool("index").status == 2);               // missing input
    CHECK(run_tool("frobnicate x").status == 2);        // unknown subcommand
    CHECK(run_tool("index x --rule banana").status == 2);
    CHECK(run_tool("--help").status == 0);
    CHECK(run_tool("index --help").status == 0);
}

TEST_CASE("reruns are byte-identical") {
    for (const std::string& cmd :
         {std::string("index ") + data("cubane.smi") + " --rule edge",
          std::string("dp ") + data("dimer.smi") + " --r 3/2",
          std::string("witnesses ") + data("p5.smi"),
          std::string("expand ") + data("triangle.edges") + " --rule edge"}) {
        SpawnResult a = run_tool(cmd);
        SpawnResult b = run_tool(cmd);
        CHECK(a.status == 0);
        CHECK(a.status == b.status);
        CHECK(a.out == b.out);
    }
}
