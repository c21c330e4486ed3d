#include <doctest.h>

#include <algorithm>
#include <random>

#include "support/test_support.hpp"
#include "zuk/errors.hpp"
#include "zuk/link_graph.hpp"

using namespace zuk;

namespace {

GroupElement vec(const GroupDescriptor& g, std::vector<long> entries) {
    std::vector<Int> v(entries.begin(), entries.end());
    return make_element(g, std::move(v));
}

const GroupDescriptor Z = GroupDescriptor::free_abelian(1);
const GroupDescriptor SL2 = GroupDescriptor::integer_matrix(2, 1);

GeneratingSet z_example_set() {
    return GeneratingSet::make(Z, {vec(Z, {1}), vec(Z, {-1}), vec(Z, {2}), vec(Z, {-2})},
                               SetPolicy::strict);
}

// The nine listed generators of the SL2(Z) example, in listed order.
std::vector<GroupElement> sl2_listed() {
    return {vec(SL2, {-1, 0, 0, -1}), vec(SL2, {1, 1, 0, 1}),   vec(SL2, {0, -1, 1, 0}),
            vec(SL2, {-1, -1, 0, -1}), vec(SL2, {0, 1, -1, 0}), vec(SL2, {1, -1, 0, 1}),
            vec(SL2, {0, 1, -1, 0}),   vec(SL2, {-1, 1, 0, -1}), vec(SL2, {0, -1, 1, 0})};
}

int index_of_label(const LinkGraph& g, const std::string& label) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.labels()[static_cast<std::size_t>(v)] == label) return v;
    REQUIRE(false);
    return -1;
}

}  // namespace

TEST_CASE("Z example: the path graph with the documented degree multiset") {
    LinkGraph g = build_link_graph(z_example_set());
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    std::vector<int> degs = g.degrees();
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{1, 1, 2, 2});

    int v1 = index_of_label(g, "(1)"), v2 = index_of_label(g, "(2)");
    int vm1 = index_of_label(g, "(-1)"), vm2 = index_of_label(g, "(-2)");
    CHECK(g.has_edge(v2, v1));
    CHECK(g.has_edge(v1, vm1));
    CHECK(g.has_edge(vm1, vm2));
    CHECK_FALSE(g.has_edge(v2, vm2));
}

TEST_CASE("SL2 example: the definitional graph on the nine listed generators") {
    GeneratingSet s = GeneratingSet::make(SL2, sl2_listed(), SetPolicy::strict);
    LinkGraph g = build_link_graph(s);
    CHECK(g.vertex_count() == 9);
    CHECK(g.edge_count() == 14);
    std::vector<int> degs = g.degrees();
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{2, 2, 2, 2, 3, 3, 3, 3, 8});

    // independent oracle: plain 2x2 integer arithmetic over the listed
    // occurrences, memberships against the set of distinct matrices
    using M2 = std::array<long, 4>;
    const std::vector<M2> listed = {{-1, 0, 0, -1}, {1, 1, 0, 1},   {0, -1, 1, 0},
                                    {-1, -1, 0, -1}, {0, 1, -1, 0}, {1, -1, 0, 1},
                                    {0, 1, -1, 0},   {-1, 1, 0, -1}, {0, -1, 1, 0}};
    auto mul = [](const M2& a, const M2& b) -> M2 {
        return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
    };
    auto inv = [](const M2& a) -> M2 {  // det 1 assumed
        return {a[3], -a[1], -a[2], a[0]};
    };
    auto in_set = [&](const M2& m) {
        return std::find(listed.begin(), listed.end(), m) != listed.end();
    };
    int expected_edges = 0;
    std::vector<int> expected_deg(9, 0);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = i + 1; j < 9; ++j)
            if (in_set(mul(inv(listed[i]), listed[j]))) {
                ++expected_edges;
                ++expected_deg[i];
                ++expected_deg[j];
            }
    CHECK(expected_edges == 14);
    std::sort(expected_deg.begin(), expected_deg.end());
    CHECK(degs == expected_deg);

    // the documented special edges: hub -I to everything, pair edges, and
    // {B, B^-1}, {-B, -B^-1} forced by B^2 = -I
    int hub = index_of_label(g, "[[-1,0],[0,-1]]");
    CHECK(g.degree(hub) == 8);
    int b1 = index_of_label(g, "[[0,-1],[1,0]]");       // B (first occurrence)
    int b2 = index_of_label(g, "[[0,-1],[1,0]]#2");     // -B^-1 (same matrix)
    int nb1 = index_of_label(g, "[[0,1],[-1,0]]");      // -B
    int nb2 = index_of_label(g, "[[0,1],[-1,0]]#2");    // B^-1
    CHECK(g.has_edge(b1, nb1));   // {B, -B}
    CHECK(g.has_edge(b1, nb2));   // {B, B^-1}
    CHECK(g.has_edge(b2, nb1));   // {-B^-1, -B}
    CHECK(g.has_edge(b2, nb2));   // {-B^-1, B^-1}
    CHECK_FALSE(g.has_edge(b1, b2));    // same matrix: s^-1 t = e, never an edge
    CHECK_FALSE(g.has_edge(nb1, nb2));
}

TEST_CASE("Z with only {1,-1}: two isolated vertices") {
    GeneratingSet s =
        GeneratingSet::make(Z, {vec(Z, {1}), vec(Z, {-1})}, SetPolicy::strict);
    LinkGraph g = build_link_graph(s);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 0);
    auto blocks = connected_components(g);
    CHECK(blocks.size() == 2);
    CHECK_THROWS_AS(walk_data(g), kernel_undefined_error);
    try {
        walk_data(g);
    } catch (const kernel_undefined_error& e) {
        CHECK(e.labels == std::vector<std::string>{"(1)", "(-1)"});
    }
}

TEST_CASE("from_edge_list builds P4 and validates input") {
    LinkGraph p4 = from_edge_list({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
    CHECK(p4.vertex_count() == 4);
    CHECK(p4.edge_count() == 3);
    CHECK(connected_components(p4).size() == 1);

    CHECK_THROWS_AS(from_edge_list({"a"}, {{"a", "a"}}), input_error);
    CHECK_THROWS_AS(from_edge_list({"a", "b"}, {{"a", "c"}}), input_error);
    CHECK_THROWS_AS(from_edge_list({"a", "a"}, {}), input_error);
    CHECK_THROWS_AS(from_edge_list({"a", "b"}, {{"a", "b"}, {"b", "a"}}), input_error);
    CHECK_THROWS_AS(from_edge_list({}, {}), input_error);
}

TEST_CASE("the drawn 12-edge figure has degree multiset {2 x8, 8}") {
    std::vector<std::string> labels{"-I", "A", "-A", "A^-1", "-A^-1", "B", "-B", "B^-1", "-B^-1"};
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 1; i < labels.size(); ++i) edges.emplace_back("-I", labels[i]);
    edges.insert(edges.end(),
                 {{"A", "-A"}, {"A^-1", "-A^-1"}, {"B", "-B"}, {"B^-1", "-B^-1"}});
    LinkGraph g = from_edge_list(labels, edges);
    CHECK(g.edge_count() == 12);
    std::vector<int> degs = g.degrees();
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{2, 2, 2, 2, 2, 2, 2, 2, 8});
    CHECK(connected_components(g).size() == 1);
}

TEST_CASE("walk data: kernel rows and stationary measure on the Z path") {
    LinkGraph g = build_link_graph(z_example_set());
    WalkData wd = walk_data(g);
    // vertex order (1, 2, -1, -2): nu = degrees (2, 1, 2, 1)
    CHECK(wd.nu(0) == 2);
    CHECK(wd.nu(1) == 1);
    CHECK(wd.nu(2) == 2);
    CHECK(wd.nu(3) == 1);
    CHECK(wd.mu(0, 1) == Rat(1, 2));
    CHECK(wd.mu(0, 2) == Rat(1, 2));
    CHECK(wd.mu(0, 3) == 0);
    CHECK(wd.mu(1, 0) == 1);
}

TEST_CASE("random generating sets: symmetry, stochasticity, detailed balance") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<long> entry(-3, 3);
    std::uniform_int_distribution<int> rank(1, 2);
    std::uniform_int_distribution<int> count(1, 5);
    std::uniform_int_distribution<long> modulus(2, 10);
    for (int trial = 0; trial < 80; ++trial) {
        GeneratingSet s = [&] {
            if (trial % 2 == 0) {
                GroupDescriptor g = GroupDescriptor::free_abelian(rank(rng));
                std::vector<GroupElement> elems;
                int m = count(rng);
                for (int i = 0; i < m; ++i) {
                    std::vector<Int> v;
                    bool zero = true;
                    for (int j = 0; j < g.rank; ++j) {
                        long e = entry(rng);
                        zero = zero && e == 0;
                        v.emplace_back(e);
                    }
                    if (zero) v[0] = 1;
                    elems.push_back(make_element(g, std::move(v)));
                }
                return GeneratingSet::make(g, elems, SetPolicy::symmetrize);
            }
            long mod = modulus(rng);
            GroupDescriptor g = GroupDescriptor::cyclic(mod);
            std::vector<GroupElement> elems;
            int m = count(rng);
            for (int i = 0; i < m; ++i) {
                long r = 1 + static_cast<long>(rng() % static_cast<unsigned long>(mod - 1));
                elems.push_back(make_element(g, {Int(r)}));
            }
            return GeneratingSet::make(g, elems, SetPolicy::symmetrize);
        }();

        LinkGraph g = build_link_graph(s);
        CHECK(g.vertex_count() == static_cast<int>(s.size()));
        // adjacency is symmetric
        for (int i = 0; i < g.vertex_count(); ++i)
            for (int j : g.neighbors(i)) CHECK(g.has_edge(j, i));

        bool has_isolated = false;
        for (int v = 0; v < g.vertex_count(); ++v) has_isolated |= g.degree(v) == 0;
        if (has_isolated) continue;
        WalkData wd = walk_data(g);
        for (int x = 0; x < g.vertex_count(); ++x) {
            Rat row(0);
            for (int y = 0; y < g.vertex_count(); ++y) {
                row += wd.mu(x, y);
                CHECK(Rat(wd.nu(x)) * wd.mu(x, y) == Rat(wd.nu(y)) * wd.mu(y, x));
            }
            CHECK(row == 1);
        }
    }
}

TEST_CASE("DOT export is byte-exact and re-imports to the same graph") {
    LinkGraph g = build_link_graph(z_example_set());
    std::string dot = to_dot(g);
    CHECK(dot ==
          "graph linkgraph {\n"
          "  v0 [label=\"(1)\"];\n"
          "  v1 [label=\"(2)\"];\n"
          "  v2 [label=\"(-1)\"];\n"
          "  v3 [label=\"(-2)\"];\n"
          "  v0 -- v1;\n"
          "  v0 -- v2;\n"
          "  v2 -- v3;\n"
          "}\n");

    DotGraph parsed = parse_dot(dot);
    CHECK(parsed.labels == g.labels());
    LinkGraph round = from_edge_list(parsed.labels, parsed.edges);
    CHECK(round.edges() == g.edges());
}

TEST_CASE("DOT labels with quotes survive the round trip") {
    LinkGraph g = from_edge_list({"say \"hi\"", "back\\slash"},
                                 {{"say \"hi\"", "back\\slash"}});
    DotGraph parsed = parse_dot(to_dot(g));
    CHECK(parsed.labels == g.labels());
    CHECK(parsed.edges.size() == 1);
}
