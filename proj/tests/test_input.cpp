#include <doctest.h>

#include "support/test_support.hpp"
#include "zuk/errors.hpp"
#include "zuk/input.hpp"
#include "zuk/pipeline.hpp"

using namespace zuk;

TEST_CASE("parses the Z example document") {
    InputSpec spec = parse_input(testsup::slurp(testsup::fixture("example_z.txt")));
    REQUIRE(spec.is_group());
    const GroupInput& gi = spec.group();
    CHECK(gi.desc.kind == GroupKind::free_abelian);
    CHECK(gi.desc.rank == 1);
    REQUIRE(gi.generators.size() == 4);
    CHECK(gi.generators[0].payload == std::vector<Int>{1});
    CHECK(gi.generators[3].payload == std::vector<Int>{-2});
    CHECK_FALSE(gi.symmetrize);
}

TEST_CASE("parses the SL2 documents") {
    InputSpec spec = parse_input(testsup::slurp(testsup::fixture("example_sl2.txt")));
    REQUIRE(spec.is_group());
    CHECK(spec.group().desc.kind == GroupKind::integer_matrix);
    CHECK(spec.group().desc.dim == 2);
    CHECK(spec.group().desc.det_constraint == 1);
    CHECK(spec.group().generators.size() == 9);

    InputSpec fig = parse_input(testsup::slurp(testsup::fixture("example_sl2_figure.txt")));
    REQUIRE_FALSE(fig.is_group());
    CHECK(fig.graph().labels.size() == 9);
    CHECK(fig.graph().edges.size() == 12);
}

TEST_CASE("matrix generators violating the det constraint name the generator") {
    std::string doc =
        "mode group\n"
        "group integer_matrix dim 2 det 1\n"
        "generator [[1,0],[0,1]]\n"
        "generator [[2,0],[0,1]]\n";
    // the identity is also invalid, but shape/det validation happens per line first
    CHECK_THROWS_WITH_AS(parse_input(doc), doctest::Contains("[[2,0],[0,1]]"), input_error);
    CHECK_THROWS_WITH_AS(parse_input(doc), doctest::Contains("line 4"), input_error);
    CHECK_THROWS_WITH_AS(parse_input(doc), doctest::Contains("determinant 2"), input_error);
}

TEST_CASE("document-level errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_input("mode group\nfrobnicate 1\n"),
                         doctest::Contains("line 2"), input_error);
    CHECK_THROWS_WITH_AS(parse_input("mode quantum\n"), doctest::Contains("line 1"),
                         input_error);
    CHECK_THROWS_AS(parse_input(""), input_error);
    CHECK_THROWS_AS(parse_input("mode group\n"), input_error);  // no group line
    CHECK_THROWS_AS(parse_input("mode graph\n"), input_error);  // no vertices
    CHECK_THROWS_WITH_AS(parse_input("mode group\ngroup free_abelian rank 2\ngenerator [1]\n"),
                         doctest::Contains("rank"), input_error);
    CHECK_THROWS_WITH_AS(
        parse_input("mode group\ngroup free_abelian rank 1\ngenerator [1\n"),
        doctest::Contains("line 3"), input_error);
    // mixing modes
    CHECK_THROWS_AS(parse_input("mode graph\nvertex a\ngenerator [1]\n"), input_error);
    CHECK_THROWS_AS(parse_input("mode group\ngroup cyclic modulus 4\ngenerator 1\nvertex a\n"),
                    input_error);
}

TEST_CASE("quoted labels and residue generators") {
    InputSpec spec = parse_input(
        "mode graph\n"
        "vertex \"3 mod 4\"\n"
        "vertex \"1 mod 4\"\n"
        "edge \"3 mod 4\" \"1 mod 4\"\n");
    CHECK(spec.graph().labels == std::vector<std::string>{"3 mod 4", "1 mod 4"});
    REQUIRE(spec.graph().edges.size() == 1);

    InputSpec cyc = parse_input(
        "mode group\n"
        "group cyclic modulus 6\n"
        "generator 2\n"
        "generator [4]\n");
    REQUIRE(cyc.is_group());
    CHECK(cyc.group().generators[0].payload == std::vector<Int>{2});
    CHECK(cyc.group().generators[1].payload == std::vector<Int>{4});
}

TEST_CASE("policy line feeds the pipeline") {
    InputSpec spec = parse_input(
        "mode group\n"
        "group free_abelian rank 1\n"
        "policy symmetrize\n"
        "generator [1]\n"
        "generator [2]\n");
    CHECK(spec.group().symmetrize);
    RunOptions opt;
    RunResult run = run_pipeline(spec, opt);
    CHECK(run.graph.vertex_count() == 4);  // inverses added

    // the same document without the policy line is rejected under strict
    InputSpec strict = parse_input(
        "mode group\n"
        "group free_abelian rank 1\n"
        "generator [1]\n"
        "generator [2]\n");
    CHECK_THROWS_AS(run_pipeline(strict, opt), input_error);
    // ... unless the CLI-level flag symmetrizes
    RunOptions sym;
    sym.symmetrize = true;
    CHECK(run_pipeline(strict, sym).graph.vertex_count() == 4);
}

TEST_CASE("pipeline handles kernel-undefined inputs as inapplicable verdicts") {
    InputSpec spec = parse_input(
        "mode group\n"
        "group free_abelian rank 1\n"
        "generator [1]\n"
        "generator [-1]\n");
    RunOptions opt;
    RunResult run = run_pipeline(spec, opt);
    CHECK(run.graph.edge_count() == 0);
    REQUIRE(run.verdict);
    CHECK(run.verdict->kind == VerdictKind::inapplicable);
    CHECK(run.verdict->reason.find("kernel undefined") == 0);
    CHECK_FALSE(run.report.char_polynomial);
    CHECK_FALSE(run.report.numeric_eigenvalues);
}

TEST_CASE("numeric-only mode carries no verdict") {
    InputSpec spec = parse_input(testsup::slurp(testsup::fixture("cyclic4.txt")));
    RunOptions opt;
    opt.engine = EngineMode::numeric_only;
    RunResult run = run_pipeline(spec, opt);
    CHECK_FALSE(run.verdict);
    REQUIRE(run.report.numeric_eigenvalues);
    CHECK(run.report.numeric_eigenvalues->size() == 3);
    CHECK_FALSE(run.report.char_polynomial);
}
