#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lhom/graph.hpp"

namespace lhom {

// Every labeled graph with loops on n vertices corresponds to one bit per
// vertex pair (i <= j), pairs in lexicographic order.
Graph graph_from_code(int n, std::uint64_t code);
std::uint64_t pair_slots(int n);

inline const std::set<std::string>& sweep_check_names() {
    static const std::set<std::string> names = {
        "patterns-decompose", "chain-membership", "majority-membership",
        "fo-dismantle",       "solver-bruteforce", "verdicts",
    };
    return names;
}

struct SweepOptions {
    int max_n = 4;                       // hard cap 6
    std::set<std::string> checks;        // empty means all
    int parallel = 0;                    // 0: hardware concurrency
    long long budget = 100'000'000;
    bool dedup = false;                  // keep only lex-min isomorphism representatives
    unsigned seed = 1;                   // solver-bruteforce instance generator
    int instances_per_graph = 2;
};

struct Divergence {
    int n;
    std::uint64_t code;
    std::string check;
    std::string detail;
    std::string graph_text;
};

struct SweepReport {
    std::map<int, std::uint64_t> graphs_per_size;
    std::map<std::string, std::uint64_t> verdict_histogram;  // verdicts check only
    std::uint64_t exhausted_searches = 0;
    std::vector<Divergence> divergences;
};

// Runs the selected cross-checks on every labeled graph with at most max_n
// vertices. Work is split across threads; results merge deterministically in
// graph-code order.
SweepReport run_sweep(const SweepOptions& options);

std::string format_sweep(const SweepReport& report);

}  // namespace lhom
