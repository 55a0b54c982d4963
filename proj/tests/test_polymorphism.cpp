#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "lhom/patterns.hpp"
#include "lhom/polymorphism.hpp"
#include "lhom/sweep.hpp"

using namespace lhom;

namespace {

Graph g(const std::string& text) { return Graph::parse(text); }

TernaryTable projection_table(const Graph& h) {
    const int n = h.size();
    std::vector<int> values(n * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) values[(i * n + j) * n + k] = i;
    return TernaryTable(h, values);
}

TernaryTable majority_vote_else_first(const Graph& h) {
    const int n = h.size();
    std::vector<int> values(n * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                values[(i * n + j) * n + k] = (j == k) ? j : i;
    return TernaryTable(h, values);
}

}  // namespace

TEST_CASE("table invariants") {
    Graph k2 = g("v a\nv b\ne a b\n");
    auto proj = projection_table(k2);
    CHECK(proj.value("a", "b", "a") == "a");
    CHECK(proj.rows().size() == 8);
    CHECK(proj.rows()[1] == "a a b -> a");

    // non-conservative entries are rejected at construction
    std::vector<int> bad(8, 0);
    bad[(1 * 2 + 1) * 2 + 1] = 0;  // f(b,b,b) = a
    CHECK_THROWS_AS(TernaryTable(k2, bad), std::invalid_argument);
    CHECK_THROWS_AS(TernaryTable(k2, std::vector<int>(7, 0)), std::invalid_argument);
}

TEST_CASE("is_polymorphism") {
    for (const auto& text : {"v a\ne a a\n", "v a\nv b\ne a b\n", "v a\nv b\nv c\ne a b\ne b c\n"})
        CHECK(is_polymorphism(g(text), projection_table(g(text))));

    Graph c3 = pattern(PatternName::IrrC3).graph;
    CHECK(is_polymorphism(c3, projection_table(c3)));
    CHECK(!is_polymorphism(c3, majority_vote_else_first(c3)));

    Graph k2 = g("v a\nv b\ne a b\n");
    CHECK_THROWS_AS(is_polymorphism(g("v a\nv b\nv c\n"), projection_table(k2)),
                    std::invalid_argument);
}

TEST_CASE("majority search on named graphs") {
    auto single = find_conservative_majority(g("v a\ne a a\n"));
    CHECK(single.status == SearchStatus::Found);

    auto k2 = find_conservative_majority(g("v a\nv b\ne a b\n"));
    REQUIRE(k2.status == SearchStatus::Found);
    CHECK(satisfies_majority(*k2.table));
    CHECK(is_polymorphism(g("v a\nv b\ne a b\n"), *k2.table));

    CHECK(find_conservative_majority(pattern(PatternName::ReflC4).graph).status ==
          SearchStatus::None);
    CHECK(find_conservative_majority(pattern(PatternName::IrrC3).graph).status ==
          SearchStatus::None);

    // a reflexive path admits one
    auto rp3 = find_conservative_majority(pattern(PatternName::ReflP3).graph);
    REQUIRE(rp3.status == SearchStatus::Found);
    CHECK(satisfies_majority(*rp3.table));
    CHECK(is_polymorphism(pattern(PatternName::ReflP3).graph, *rp3.table));
}

TEST_CASE("tight budgets report exhaustion, never a guess") {
    auto r = find_conservative_majority(pattern(PatternName::ReflC4).graph, 5);
    CHECK(r.status == SearchStatus::Exhausted);
    CHECK(!r.table.has_value());
    auto c = find_permutability_chain(pattern(PatternName::ReflP3).graph, 5);
    CHECK(c.status == SearchStatus::Exhausted);
}

TEST_CASE("chain search on named graphs") {
    auto single = find_permutability_chain(g("v a\ne a a\n"));
    CHECK(single.status == SearchStatus::Found);

    CHECK(find_permutability_chain(pattern(PatternName::ReflP3).graph).status ==
          SearchStatus::None);

    Graph refl_k3 = g("v a\nv b\nv c\ne a a\ne b b\ne c c\ne a b\ne b c\ne a c\n");
    auto r = find_permutability_chain(refl_k3);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(verify_chain(refl_k3, *r.chain));
}

TEST_CASE("verify_chain rejects broken chains") {
    Graph loop = g("v a\ne a a\n");
    auto r = find_permutability_chain(loop);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(verify_chain(loop, *r.chain));

    // violate the first identity on a two-vertex template
    Graph refl_k2 = g("v a\nv b\ne a a\ne b b\ne a b\n");
    auto ok = find_permutability_chain(refl_k2);
    REQUIRE(ok.status == SearchStatus::Found);
    const int n = 2;
    std::vector<int> values(n * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) values[(i * n + j) * n + k] = j;  // second projection
    PermutabilityChain broken{TernaryTable(refl_k2, values), ok.chain->f2, ok.chain->f3};
    CHECK(!verify_chain(refl_k2, broken));  // f1(x,y,y) = y, not x
}

TEST_CASE("chain existence matches membership on every graph with up to 3 vertices") {
    for (int n = 0; n <= 3; ++n)
        for (std::uint64_t code = 0; code < (1ULL << pair_slots(n)); ++code) {
            Graph h = graph_from_code(n, code);
            auto r = find_permutability_chain(h);
            REQUIRE(r.status != SearchStatus::Exhausted);
            CHECK((r.status == SearchStatus::Found) == in_class_l(h));
            if (r.chain) CHECK(verify_chain(h, *r.chain));
        }
}

TEST_CASE("membership implies a majority on every graph with up to 3 vertices") {
    for (int n = 0; n <= 3; ++n)
        for (std::uint64_t code = 0; code < (1ULL << pair_slots(n)); ++code) {
            Graph h = graph_from_code(n, code);
            if (!in_class_l(h)) continue;
            auto r = find_conservative_majority(h);
            REQUIRE(r.status == SearchStatus::Found);
            CHECK(satisfies_majority(*r.table));
            CHECK(is_polymorphism(h, *r.table));
        }
}

TEST_CASE("found tables restrict to induced subgraphs") {
    std::mt19937 rng(11);
    Graph h = g("v a\nv b\nv c\nv d\ne a a\ne b b\ne a b\ne b c\ne c d\n");
    auto r = find_conservative_majority(h);
    REQUIRE(r.status == SearchStatus::Found);
    for (int round = 0; round < 10; ++round) {
        VertexSet s;
        for (const auto& v : h.vertices())
            if (rng() % 2) s.insert(v);
        if (s.empty()) continue;
        Graph sub = induced(h, s);
        const int m = sub.size();
        std::vector<int> values(m * m * m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                for (int k = 0; k < m; ++k)
                    values[(i * m + j) * m + k] = sub.index_of(
                        r.table->value(sub.name_of(i), sub.name_of(j), sub.name_of(k)));
        TernaryTable restricted(sub, values);  // conservativity re-checked here
        CHECK(satisfies_majority(restricted));
        CHECK(is_polymorphism(sub, restricted));
    }
}
