#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lhom/graph.hpp"

namespace lhom {

enum class BasicKind { SingleLoop, Irreflexive, Completed };

/// A connected graph recognised as basic: a single loop, a basic
/// irreflexive graph, or a basic irreflexive graph whose top class was
/// completed into a reflexive clique. `base` is the irreflexive graph
/// before completion (equal to the graph itself for the first two kinds).
struct BasicLeaf {
    BasicKind kind;
    Graph base;
    VertexSet bottom;  // Completed only: the non-loops
    VertexSet top;     // Completed only: the loops
};

std::optional<BasicLeaf> is_basic(const Graph& h);  // throws on disconnected input

/// Construction witness: the graph is assembled from basic leaves by
/// disjoint union and adjunction of a basic graph to the rest.
struct DecompositionNode {
    enum class Kind { SingleLoop, BasicIrreflexive, BasicCompleted, Union, Adjunction };
    Kind kind = Kind::Union;
    // Leaves carry their subgraph; BasicCompleted stores the stripped
    // irreflexive base plus the completed class.
    Graph leaf;
    VertexSet bottom, top;
    // Union: any number of children; Adjunction: exactly [basic, rest].
    std::vector<DecompositionNode> children;

    VertexSet covered_vertices() const;
};

// Succeeds exactly on pattern-free graphs; the returned tree replays to a
// graph isomorphic to the input.
std::optional<DecompositionNode> decompose(const Graph& h);

Graph replay(const DecompositionNode& tree);

std::string format_tree(const DecompositionNode& tree);

// Independent check: leaves re-verified via is_basic, adjunction first
// children basic, vertex sets partition the input, replay isomorphic to h.
bool validate_tree(const Graph& h, const DecompositionNode& tree);

}  // namespace lhom
