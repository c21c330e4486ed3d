#include <doctest.h>

#include "support/test_support.hpp"
#include "zuk/criterion.hpp"
#include "zuk/errors.hpp"

using namespace zuk;
using testsup::q;

namespace {

GroupElement vec(const GroupDescriptor& g, std::vector<long> entries) {
    std::vector<Int> v(entries.begin(), entries.end());
    return make_element(g, std::move(v));
}

const Rat kPrecision = Rat(1) / Rat(pow10(12));

SpectralReport report_of(const LinkGraph& g) { return exact_spectrum(g, kPrecision); }

LinkGraph path4() {
    return from_edge_list({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
}

LinkGraph k2() { return from_edge_list({"a", "b"}, {{"a", "b"}}); }

LinkGraph k3() { return from_edge_list({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}}); }

LinkGraph star13() {
    return from_edge_list({"h", "a", "b", "c"}, {{"h", "a"}, {"h", "b"}, {"h", "c"}});
}

}  // namespace

TEST_CASE("Z boundary fixture") {
    GroupDescriptor Z = GroupDescriptor::free_abelian(1);
    LinkGraph g = build_link_graph(GeneratingSet::make(
        Z, {vec(Z, {1}), vec(Z, {-1}), vec(Z, {2}), vec(Z, {-2})}, SetPolicy::strict));
    Verdict v = evaluate(report_of(g));
    CHECK(v.kind == VerdictKind::boundary);
    REQUIRE(v.lambda1);
    CHECK(v.lambda1->value == q(1, 2));
    CHECK(v.conclusion == "criterion does not apply; no conclusion about Property (T)");
}

TEST_CASE("cyclic(4) with S = {1,2,3} gives K3 and the criterion holds") {
    GroupDescriptor C4 = GroupDescriptor::cyclic(4);
    LinkGraph g = build_link_graph(GeneratingSet::make(
        C4, {vec(C4, {1}), vec(C4, {2}), vec(C4, {3})}, SetPolicy::strict));
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    Verdict v = evaluate(report_of(g));
    CHECK(v.kind == VerdictKind::holds);
    CHECK(v.lambda1->value == q(3, 2));
    CHECK(v.conclusion == "Γ has Property (T) by Żuk's criterion");
}

TEST_CASE("the definitional SL2 graph falls below the threshold") {
    GroupDescriptor SL2 = GroupDescriptor::integer_matrix(2, 1);
    std::vector<GroupElement> gens = {
        vec(SL2, {-1, 0, 0, -1}), vec(SL2, {1, 1, 0, 1}),   vec(SL2, {0, -1, 1, 0}),
        vec(SL2, {-1, -1, 0, -1}), vec(SL2, {0, 1, -1, 0}), vec(SL2, {1, -1, 0, 1}),
        vec(SL2, {0, 1, -1, 0}),   vec(SL2, {-1, 1, 0, -1}), vec(SL2, {0, -1, 1, 0})};
    LinkGraph g = build_link_graph(GeneratingSet::make(SL2, gens, SetPolicy::strict));
    Verdict v = evaluate(report_of(g));
    CHECK(v.kind == VerdictKind::below);
    REQUIRE(v.lambda1);
    CHECK_FALSE(v.lambda1->exact);
    CHECK(v.lambda1->lo > q(409, 1000));
    CHECK(v.lambda1->hi < q(410, 1000));
    // the one-directional reading: never an assertion that (T) fails
    CHECK(v.conclusion == "criterion does not apply; no conclusion about Property (T)");
}

TEST_CASE("edgeless graphs are inapplicable with a kernel-undefined reason") {
    Verdict v = kernel_undefined_verdict({"(1)", "(-1)"});
    CHECK(v.kind == VerdictKind::inapplicable);
    CHECK(v.reason == "kernel undefined: degree-0 vertices: (1), (-1)");
    CHECK_FALSE(v.lambda1);
}

TEST_CASE("disconnected graphs are inapplicable with a component summary") {
    LinkGraph two_k2 = from_edge_list({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    Verdict v = evaluate(report_of(two_k2));
    CHECK(v.kind == VerdictKind::inapplicable);
    CHECK(v.reason == "disconnected: 2 components of sizes 2, 2");
    CHECK_FALSE(v.lambda1);
}

TEST_CASE("trichotomy exactness on graphs with known lambda_1") {
    struct Fixture {
        LinkGraph g;
        Rat lambda1;
        VerdictKind kind;
    };
    std::vector<Fixture> fixtures;
    fixtures.push_back({path4(), q(1, 2), VerdictKind::boundary});
    fixtures.push_back({k3(), q(3, 2), VerdictKind::holds});
    fixtures.push_back({k2(), q(2), VerdictKind::holds});
    fixtures.push_back({star13(), q(1), VerdictKind::holds});
    for (const auto& f : fixtures) {
        Verdict v = evaluate(report_of(f.g));
        CHECK(v.kind == f.kind);
        REQUIRE(v.lambda1);
        CHECK(v.lambda1->exact);
        CHECK(v.lambda1->value == f.lambda1);
        CHECK((v.kind == VerdictKind::boundary) == (f.lambda1 == q(1, 2)));
    }
}

TEST_CASE("evaluate is read-only on the report") {
    SpectralReport before = report_of(path4());
    SpectralReport copy = before;
    (void)evaluate(before);
    CHECK(before.char_polynomial == copy.char_polynomial);
    CHECK(before.eigenvalues->roots.size() == copy.eigenvalues->roots.size());
    CHECK(before.lambda1->value == copy.lambda1->value);
}

TEST_CASE("non-holds verdicts never deny Property (T)") {
    for (const Verdict& v :
         {evaluate(report_of(path4())),
          kernel_undefined_verdict({"x"}),
          evaluate(report_of(from_edge_list({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}})))}) {
        CHECK(v.conclusion.find("does not have") == std::string::npos);
        CHECK(v.conclusion.find("lacks") == std::string::npos);
        if (v.kind != VerdictKind::holds)
            CHECK(v.conclusion == "criterion does not apply; no conclusion about Property (T)");
    }
}
