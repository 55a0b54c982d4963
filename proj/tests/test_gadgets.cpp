#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lhom/gadgets.hpp"

using namespace lhom;

namespace {

Graph g(const std::string& text) { return Graph::parse(text); }

VertexSet vs(std::initializer_list<const char*> names) {
    VertexSet out;
    for (const char* n : names) out.insert(n);
    return out;
}

}  // namespace

TEST_CASE("builtin gadget table") {
    const auto& gadgets = builtin_gadgets();
    CHECK(gadgets.size() == 8);
    CHECK(gadgets.at(PatternName::ReflP3).lists ==
          std::vector<VertexSet>{vs({"a", "c"}), vs({"b", "c"}), vs({"a", "d"}), vs({"a", "c"})});
    CHECK(gadgets.at(PatternName::B4).lists ==
          std::vector<VertexSet>{vs({"a", "e"}), vs({"b", "d"}), vs({"c", "d"}), vs({"a", "e"})});
    CHECK(gadgets.at(PatternName::B5).lists == gadgets.at(PatternName::B6).lists);
    CHECK(gadgets.at(PatternName::IrrP5).lists.size() == 5);
    CHECK(gadgets.at(PatternName::B1).lists.size() == 5);
    CHECK(!gadgets.count(PatternName::ReflC4));
    CHECK(!gadgets.count(PatternName::IrrC3));
    CHECK(!gadgets.count(PatternName::IrrC5));
    CHECK(!gadgets.count(PatternName::IrrC6));
}

TEST_CASE("gadget instances are paths") {
    for (const auto& [name, gadget] : builtin_gadgets()) {
        ListInstance inst = gadget_instance(gadget);
        CHECK(inst.variables.size() == gadget.lists.size());
        CHECK(is_path_instance(inst, inst.variables.front(), inst.variables.back()));
    }
}

TEST_CASE("every builtin gadget yields a two-element order") {
    for (const auto& [name, gadget] : builtin_gadgets()) {
        const Graph& host = pattern(name).graph;
        auto ev = evaluate_gadget(host, gadget);
        CHECK(ev.shape == RelationShape::TwoElementOrder);
        CHECK(ev.order_pair.first != ev.order_pair.second);

        // the reachability route and the blocking route agree
        ListInstance inst = gadget_instance(gadget);
        CHECK(endpoint_relation_path(host, inst, inst.variables.front(), inst.variables.back()) ==
              endpoint_relation_blocking(host, inst, inst.variables.front(),
                                         inst.variables.back()));
    }
}

TEST_CASE("frozen relations") {
    auto rp3 = evaluate_gadget(pattern(PatternName::ReflP3).graph,
                               builtin_gadgets().at(PatternName::ReflP3));
    CHECK(rp3.relation == PairSet{{"a", "a"}, {"c", "a"}, {"c", "c"}});
    CHECK(rp3.shape == RelationShape::TwoElementOrder);
    CHECK(rp3.order_pair == std::pair<std::string, std::string>{"c", "a"});

    auto b3 = evaluate_gadget(pattern(PatternName::B3).graph,
                              builtin_gadgets().at(PatternName::B3));
    CHECK(b3.relation == PairSet{{"b", "b"}, {"b", "c"}, {"c", "c"}});
    CHECK(b3.order_pair == std::pair<std::string, std::string>{"b", "c"});
}

TEST_CASE("a corrupted gadget classifies as other") {
    Gadget corrupted{PatternName::ReflP3,
                     {vs({"a", "c"}), vs({"b", "c"}), vs({"a", "c"}), vs({"a", "c"})}};
    auto ev = evaluate_gadget(pattern(PatternName::ReflP3).graph, corrupted);
    CHECK(ev.shape == RelationShape::Other);
    CHECK(ev.relation == PairSet{{"a", "a"}, {"a", "c"}, {"c", "a"}, {"c", "c"}});

    Gadget invalid{PatternName::ReflP3, {vs({"z"})}};
    CHECK_THROWS_AS(evaluate_gadget(pattern(PatternName::ReflP3).graph, invalid),
                    std::invalid_argument);
}

TEST_CASE("relation classification corner cases") {
    CHECK(classify_relation({}).shape == RelationShape::Other);
    CHECK(classify_relation({{"a", "a"}}).shape == RelationShape::Other);
    CHECK(classify_relation({{"a", "a"}, {"a", "b"}, {"b", "b"}}).shape ==
          RelationShape::TwoElementOrder);
    CHECK(classify_relation({{"a", "a"}, {"a", "b"}, {"b", "a"}, {"b", "b"}}).shape ==
          RelationShape::Other);

    PairSet diseq3;
    for (const char* x : {"a", "b", "c"})
        for (const char* y : {"a", "b", "c"})
            if (std::string(x) != y) diseq3.emplace(x, y);
    auto d = classify_relation(diseq3);
    CHECK(d.shape == RelationShape::DisequalityOnU);
    CHECK(d.universe == vs({"a", "b", "c"}));
    // two-element disequality is not enough
    CHECK(classify_relation({{"a", "b"}, {"b", "a"}}).shape == RelationShape::Other);
}

TEST_CASE("hardness evidence pulls the gadget into the host") {
    Graph host = disjoint_union(pattern(PatternName::ReflP3).graph, g("v z\ne z z\n"));
    auto ev = hardness_evidence(host);
    REQUIRE(ev.has_value());
    CHECK(ev->witness.pattern == PatternName::ReflP3);
    REQUIRE(ev->relation.has_value());
    CHECK(ev->relation->shape == RelationShape::TwoElementOrder);

    // pullback correctness: evaluating over the host equals evaluating over
    // the pattern, renamed through the embedding
    auto on_pattern = evaluate_gadget(pattern(PatternName::ReflP3).graph,
                                      builtin_gadgets().at(PatternName::ReflP3));
    PairSet renamed;
    for (const auto& [x, y] : on_pattern.relation)
        renamed.emplace(ev->witness.embedding.at(x), ev->witness.embedding.at(y));
    CHECK(ev->relation->relation == renamed);

    Graph member = g("v a\nv b\ne a a\ne a b\n");
    CHECK(!hardness_evidence(member).has_value());

    auto c6 = hardness_evidence(pattern(PatternName::IrrC6).graph);
    REQUIRE(c6.has_value());
    CHECK(c6->witness.pattern == PatternName::IrrC6);
    CHECK(!c6->gadget.has_value());
    CHECK(!c6->relation.has_value());
}
