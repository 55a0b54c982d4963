#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lhom/dismantle.hpp"
#include "lhom/sweep.hpp"

using namespace lhom;

namespace {

Graph g(const std::string& text) { return Graph::parse(text); }

PairLiveSet full_square(const Graph& h) {
    PairLiveSet live;
    for (const auto& u : h.vertices())
        for (const auto& v : h.vertices()) live.emplace(u, v);
    return live;
}

// Domination oracle over the full structure: one unary relation per subset
// of the vertices, plus componentwise adjacency. Independent of the
// two-element shortcut used by the library.
bool dominates_all_subsets(const Graph& h, const PairLiveSet& live, const VertexPair& p,
                           const VertexPair& q) {
    const auto& names = h.vertices();
    const int n = h.size();
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        auto inside = [&](const std::string& v) {
            for (int i = 0; i < n; ++i)
                if (names[i] == v) return (mask & (1ULL << i)) != 0;
            return false;
        };
        bool p_in = inside(p.first) && inside(p.second);
        bool q_in = inside(q.first) && inside(q.second);
        if (p_in && !q_in) return false;
    }
    for (const auto& r : live) {
        bool p_adj = h.adjacent(p.first, r.first) && h.adjacent(p.second, r.second);
        bool q_adj = h.adjacent(q.first, r.first) && h.adjacent(q.second, r.second);
        if (p_adj && !q_adj) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("dominates on two-vertex templates") {
    Graph refl_k2 = g("v u\nv v\ne u u\ne v v\ne u v\n");
    auto live = full_square(refl_k2);
    CHECK(dominates(refl_k2, live, {"u", "v"}, {"u", "u"}));
    CHECK(dominates(refl_k2, live, {"u", "v"}, {"v", "v"}));

    Graph irr_k2 = g("v a\nv b\ne a b\n");
    auto live2 = full_square(irr_k2);
    CHECK(!dominates(irr_k2, live2, {"a", "b"}, {"a", "a"}));
    CHECK(!dominates(irr_k2, live2, {"a", "b"}, {"b", "b"}));
    CHECK(!dominates(irr_k2, live2, {"a", "b"}, {"b", "a"}));
    // dominators must reuse the pair's coordinates
    Graph refl_k3 = g("v a\nv b\nv c\ne a a\ne b b\ne c c\ne a b\ne b c\ne a c\n");
    CHECK(!dominates(refl_k3, full_square(refl_k3), {"a", "b"}, {"c", "c"}));

    CHECK_THROWS_AS(dominates(irr_k2, live2, {"a", "b"}, {"a", "b"}), std::invalid_argument);
    PairLiveSet partial = live2;
    partial.erase({"b", "a"});
    CHECK_THROWS_AS(dominates(irr_k2, partial, {"b", "a"}, {"a", "a"}), std::invalid_argument);
}

TEST_CASE("dismantling named templates") {
    // a single loop has no off-diagonal pairs at all
    auto vacuous = dismantle_square(g("v a\ne a a\n"));
    CHECK(vacuous.success);
    CHECK(vacuous.sequence.steps.empty());

    Graph refl_k3 = g("v a\nv b\nv c\ne a a\ne b b\ne c c\ne a b\ne b c\ne a c\n");
    auto r = dismantle_square(refl_k3);
    CHECK(r.success);
    CHECK(r.sequence.steps.size() == 6);  // every off-diagonal pair
    CHECK(validate_sequence(refl_k3, r.sequence));

    Graph two_loops = g("v a\nv b\ne a a\ne b b\n");
    auto r2 = dismantle_square(two_loops);
    CHECK(!r2.success);
    CHECK(!r2.stuck.empty());

    // loops m,n adjacent; x pends on m, y pends on n: (x,y) is stuck
    Graph cross = g("v m\nv n\nv x\nv y\ne m m\ne n n\ne m n\ne m x\ne n y\n");
    auto r3 = dismantle_square(cross);
    CHECK(!r3.success);
    bool xy_stuck = false;
    for (const auto& p : r3.stuck)
        if (p == VertexPair{"x", "y"}) xy_stuck = true;
    CHECK(xy_stuck);
}

TEST_CASE("sequence validation rejects corruption") {
    Graph refl_k2 = g("v u\nv v\ne u u\ne v v\ne u v\n");
    auto r = dismantle_square(refl_k2);
    REQUIRE(r.success);
    CHECK(validate_sequence(refl_k2, r.sequence));

    auto truncated = r.sequence;
    truncated.steps.pop_back();
    CHECK(!validate_sequence(refl_k2, truncated));  // off-diagonal pair left over

    auto corrupt = r.sequence;
    corrupt.steps[0].dominator = corrupt.steps[0].removed;
    CHECK(!validate_sequence(refl_k2, corrupt));
}

TEST_CASE("structural form") {
    CHECK(fo_structural(g("v a\ne a a\n")).has_value());
    CHECK(fo_structural(Graph()).has_value());
    CHECK(!fo_structural(g("v a\nv b\ne a b\n")).has_value());  // adjacent non-loops

    auto cert = fo_structural(g("v m\nv n\nv x\nv y\ne m m\ne n n\ne m n\ne m x\ne m y\ne n y\n"));
    REQUIRE(cert.has_value());
    CHECK(cert->chain_order == std::vector<std::string>{"x", "y"});

    // incomparable neighbourhoods break the chain
    CHECK(!fo_structural(g("v m\nv n\nv x\nv y\ne m m\ne n n\ne m n\ne m x\ne n y\n"))
               .has_value());
    // non-loops must be independent, loops a clique
    CHECK(!fo_structural(g("v a\nv b\nv m\ne m m\ne a b\ne m a\ne m b\n")).has_value());
    CHECK(!fo_structural(g("v m\nv n\ne m m\ne n n\n")).has_value());
}

TEST_CASE("structural test equals dismantling on every graph with up to 3 vertices") {
    for (int n = 0; n <= 3; ++n)
        for (std::uint64_t code = 0; code < (1ULL << pair_slots(n)); ++code) {
            Graph h = graph_from_code(n, code);
            auto fwd = dismantle_square(h, ScanOrder::Forward);
            auto rev = dismantle_square(h, ScanOrder::Reverse);
            CHECK(fwd.success == rev.success);
            CHECK(fo_structural(h).has_value() == fwd.success);
            if (fwd.success) {
                CHECK(validate_sequence(h, fwd.sequence));
                CHECK(validate_sequence(h, rev.sequence));
            }
        }
}

TEST_CASE("two-element shortcut matches the all-subsets oracle") {
    // on every graph with up to 3 vertices, along the greedy trajectory,
    // the library's domination test agrees with the full-structure oracle
    for (int n = 1; n <= 3; ++n)
        for (std::uint64_t code = 0; code < (1ULL << pair_slots(n)); ++code) {
            Graph h = graph_from_code(n, code);
            PairLiveSet live = full_square(h);
            while (true) {
                for (const auto& p : live)
                    for (const auto& q : live) {
                        if (p == q || p.first == p.second) continue;
                        REQUIRE(dominates(h, live, p, q) == dominates_all_subsets(h, live, p, q));
                    }
                // remove one dominated off-diagonal pair, oracle-style
                VertexPair victim;
                bool found = false;
                for (const auto& p : live) {
                    if (p.first == p.second) continue;
                    for (const auto& q : live) {
                        if (q == p) continue;
                        if (dominates(h, live, p, q)) {
                            victim = p;
                            found = true;
                            break;
                        }
                    }
                    if (found) break;
                }
                if (!found) break;
                live.erase(victim);
            }
        }
}
