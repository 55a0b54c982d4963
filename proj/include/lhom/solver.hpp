#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lhom/graph.hpp"

namespace lhom {

/// Instance of the list homomorphism problem: variables, symmetric binary
/// constraints (self-pairs demand a loop at the image), and a list of
/// allowed template vertices per variable.
struct ListInstance {
    std::vector<std::string> variables;
    std::vector<std::pair<std::string, std::string>> constraints;  // canonical (min,max)
    std::map<std::string, VertexSet> lists;

    // Text format: '#' comments, 'var <name> : <v1> <v2> ...', 'con <x> <y>'.
    static ListInstance parse(const std::string& text);
    std::string serialize() const;

    void add_variable(const std::string& name, VertexSet list);
    void add_constraint(const std::string& x, const std::string& y);
    std::vector<std::string> neighbours_of(const std::string& v) const;
    bool self_constrained(const std::string& v) const;
};

struct AcOutcome {
    bool ok;               // false: some list was emptied
    ListInstance reduced;  // meaningful when ok
    std::string emptied;   // first emptied variable when !ok
};

// Maximal fixpoint where every list value has a supporting value across each
// constraint. Never removes a value that appears in some solution.
AcOutcome arc_consistency(const Graph& h, const ListInstance& inst);

using Assignment = std::map<std::string, std::string>;

// Propagation plus fail-first backtracking; deterministic. Values tried in
// sorted order, ties between variables broken by declaration order.
std::optional<Assignment> solve(const Graph& h, const ListInstance& inst);

bool assignment_valid(const Graph& h, const ListInstance& inst, const Assignment& a);

using PairSet = std::set<std::pair<std::string, std::string>>;

// Exact projection of the solution set onto (s1, s2). Path-shaped instances
// use a reachability sweep; everything else enumerates solutions, blocking
// each found endpoint pair (at most |H|^2 rounds).
PairSet enumerate_endpoint_relation(const Graph& h, const ListInstance& inst,
                                    const std::string& s1, const std::string& s2);

// The two routes individually, for cross-checking.
bool is_path_instance(const ListInstance& inst, const std::string& s1, const std::string& s2);
PairSet endpoint_relation_path(const Graph& h, const ListInstance& inst,
                               const std::string& s1, const std::string& s2);
PairSet endpoint_relation_blocking(const Graph& h, const ListInstance& inst,
                                   const std::string& s1, const std::string& s2);

}  // namespace lhom
