#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lhom/patterns.hpp"

using namespace lhom;

namespace {

Graph g(const std::string& text) { return Graph::parse(text); }

int loop_count(const Graph& h) { return static_cast<int>(h.loops().size()); }

}  // namespace

TEST_CASE("catalogue graphs are exactly as fixed") {
    CHECK(pattern_catalogue().size() == 12);

    const Graph& rp3 = pattern(PatternName::ReflP3).graph;
    CHECK(rp3.serialize() ==
          "v a\nv b\nv c\nv d\ne a a\ne a b\ne b b\ne b c\ne c c\ne c d\ne d d\n");

    const Graph& rc4 = pattern(PatternName::ReflC4).graph;
    CHECK(rc4.size() == 4);
    CHECK(loop_count(rc4) == 4);
    CHECK(rc4.adjacent("a", "b"));
    CHECK(rc4.adjacent("b", "c"));
    CHECK(rc4.adjacent("c", "d"));
    CHECK(rc4.adjacent("d", "a"));
    CHECK(!rc4.adjacent("a", "c"));
    CHECK(!rc4.adjacent("b", "d"));

    for (auto [name, size, loops] :
         {std::tuple{PatternName::IrrC3, 3, 0}, std::tuple{PatternName::IrrC5, 5, 0},
          std::tuple{PatternName::IrrC6, 6, 0}, std::tuple{PatternName::IrrP5, 6, 0}}) {
        const Graph& p = pattern(name).graph;
        CHECK(p.size() == size);
        CHECK(loop_count(p) == loops);
    }
    CHECK(pattern(PatternName::IrrC6).graph.edge_list().size() == 6);
    CHECK(pattern(PatternName::IrrP5).graph.edge_list().size() == 5);

    CHECK(pattern(PatternName::B1).graph.serialize() == "v a\nv b\nv c\ne a b\ne b c\ne c c\n");
    CHECK(pattern(PatternName::B2).graph.serialize() ==
          "v a\nv b\nv c\ne a a\ne a b\ne b c\ne c c\n");
    CHECK(pattern(PatternName::B3).graph.serialize() ==
          "v a\nv b\nv c\nv d\ne a b\ne b b\ne b c\ne c c\ne c d\ne d d\n");
    CHECK(pattern(PatternName::B4).graph.serialize() ==
          "v a\nv b\nv c\nv d\nv e\ne a b\ne a c\ne b c\ne c c\ne c d\ne d d\ne d e\n");

    const Graph& b5 = pattern(PatternName::B5).graph;
    CHECK(b5.size() == 6);
    CHECK(b5.loops() == VertexSet{"a", "b", "c"});
    CHECK(b5.adjacent("a", "b"));
    CHECK(b5.adjacent("b", "c"));
    CHECK(b5.adjacent("a", "c"));
    CHECK(b5.adjacent("a'", "a"));
    CHECK(b5.adjacent("b'", "a"));
    CHECK(b5.adjacent("b'", "b"));
    CHECK(b5.adjacent("c'", "b"));
    CHECK(b5.adjacent("c'", "c"));
    CHECK(!b5.adjacent("a'", "c"));
    CHECK(!b5.adjacent("a'", "b"));
    CHECK(!b5.adjacent("a'", "b'"));
    CHECK(!b5.adjacent("b'", "c'"));
    CHECK(!b5.adjacent("a'", "c'"));
    CHECK(!b5.adjacent("b'", "c"));
    CHECK(!b5.adjacent("c'", "a"));

    const Graph& b6 = pattern(PatternName::B6).graph;
    CHECK(b6.adjacent("a'", "c"));
    CHECK(b6.edge_list().size() == b5.edge_list().size() + 1);

    CHECK(to_string(PatternName::B5) == "B5");
    CHECK(pattern_from_string("IrrC6") == PatternName::IrrC6);
    CHECK(!pattern_from_string("nope").has_value());
}

TEST_CASE("find_pattern basics") {
    // a pattern hosts itself, via the identity map
    for (const auto& p : pattern_catalogue()) {
        auto w = find_pattern(p.graph);
        REQUIRE(w.has_value());
        CHECK(w->pattern == p.name);
        for (const auto& v : p.graph.vertices()) CHECK(w->embedding.at(v) == v);
        CHECK(witness_valid(p.graph, *w));
    }

    // reflexive star: universal loop plus two nonadjacent loops
    Graph star = g("v c\nv l\nv r\ne c c\ne l l\ne r r\ne c l\ne c r\n");
    CHECK(!find_pattern(star).has_value());
    CHECK(in_class_l(star));

    Graph c6 = pattern(PatternName::IrrC6).graph;
    auto w = find_pattern(c6);
    REQUIRE(w.has_value());
    CHECK(w->pattern == PatternName::IrrC6);
}

TEST_CASE("slicing B3 leaves a reflexive two-edge path") {
    Graph slice = induced(pattern(PatternName::B3).graph, {"b", "c", "d"});
    CHECK(slice.serialize() == "v b\nv c\nv d\ne b b\ne b c\ne c c\ne c d\ne d d\n");
}

TEST_CASE("B3 hosts no smaller pattern") {
    // exhaustive: every proper induced subgraph of B3 is pattern-free
    const Graph& b3 = pattern(PatternName::B3).graph;
    auto vs = b3.vertices();
    for (unsigned mask = 0; mask < (1u << vs.size()); ++mask) {
        if (mask == (1u << vs.size()) - 1) continue;
        VertexSet s;
        for (size_t i = 0; i < vs.size(); ++i)
            if (mask & (1u << i)) s.insert(vs[i]);
        CHECK(!find_pattern(induced(b3, s)).has_value());
    }
    auto w = find_pattern(b3);
    REQUIRE(w.has_value());
    CHECK(w->pattern == PatternName::B3);
}

TEST_CASE("membership on small fixtures") {
    CHECK(in_class_l(g("v a\ne a a\n")));                     // single loop
    CHECK(in_class_l(g("v a\n")));                            // single vertex
    CHECK(!in_class_l(pattern(PatternName::IrrP5).graph));    // forbidden path
    CHECK(in_class_l(g("v a\nv b\nv c\ne a a\ne b b\ne c c\ne a b\ne b c\ne a c\n")));
    // induced copy inside a bigger host
    Graph host = disjoint_union(pattern(PatternName::ReflP3).graph, g("v z\ne z z\n"));
    auto w = find_pattern(host);
    REQUIRE(w.has_value());
    CHECK(w->pattern == PatternName::ReflP3);
    CHECK(witness_valid(host, *w));
}

TEST_CASE("witness monotonicity under induced restriction") {
    Graph host = disjoint_union(pattern(PatternName::B2).graph, g("v z\n"));
    auto w = find_pattern(host);
    REQUIRE(w.has_value());
    VertexSet image;
    for (const auto& [p, h] : w->embedding) image.insert(h);
    CHECK(find_pattern(induced(host, image)).has_value());
}

TEST_CASE("basic irreflexive recognition") {
    CHECK(is_basic_irreflexive(g("v a\n")));
    CHECK(is_basic_irreflexive(g("v a\nv b\nv c\nv d\nv e\ne a b\ne b c\ne c d\ne d e\n")));
    CHECK(!is_basic_irreflexive(pattern(PatternName::IrrC6).graph));
    CHECK(!is_basic_irreflexive(pattern(PatternName::IrrP5).graph));
    CHECK(!is_basic_irreflexive(pattern(PatternName::IrrC3).graph));  // odd cycle
    CHECK_THROWS_AS(is_basic_irreflexive(g("v a\ne a a\n")), std::invalid_argument);
}
