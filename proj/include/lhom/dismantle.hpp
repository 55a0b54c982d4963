#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lhom/graph.hpp"

namespace lhom {

using VertexPair = std::pair<std::string, std::string>;
using PairLiveSet = std::set<VertexPair>;

/// One removal from the square: the off-diagonal pair removed and the live
/// pair that dominated it.
struct DismantleStep {
    VertexPair removed;
    VertexPair dominator;
};

struct DismantlingSequence {
    std::vector<DismantleStep> steps;
};

struct DismantleResult {
    bool success;
    DismantlingSequence sequence;       // complete on success, prefix otherwise
    std::vector<VertexPair> stuck;      // live off-diagonal pairs at the fixpoint
};

// q dominates p among the live pairs of the template square: both
// coordinates of q come from p's (the strongest unary constraint is the
// two-element list {p.first, p.second}), and every live square-neighbour of
// p is a square-neighbour of q. Throws if p or q is not live or p == q.
bool dominates(const Graph& h, const PairLiveSet& live, const VertexPair& p, const VertexPair& q);

enum class ScanOrder { Forward, Reverse };

// Greedily removes dominated off-diagonal pairs until none is left; succeeds
// iff only the diagonal remains.
DismantleResult dismantle_square(const Graph& h, ScanOrder order = ScanOrder::Forward);

// Replays a sequence step by step through dominates().
bool validate_sequence(const Graph& h, const DismantlingSequence& seq);

/// Shape under which the list homomorphism problem is first-order definable:
/// loops form a clique, non-loops are independent, and non-loop
/// neighbourhoods form an inclusion chain (recorded in chain_order).
struct FoCertificate {
    VertexSet loop_clique;
    VertexSet independent;
    std::vector<std::string> chain_order;  // non-loops, neighbourhoods ascending
};

std::optional<FoCertificate> fo_structural(const Graph& h);

}  // namespace lhom
