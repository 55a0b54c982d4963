#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lhom/graph.hpp"
#include "lhom/patterns.hpp"
#include "lhom/solver.hpp"

namespace lhom {

/// A short path with one vertex list per position, evaluated against a
/// pattern graph (or a host, after renaming through an embedding). The
/// endpoint relation it induces is the hardness evidence.
struct Gadget {
    PatternName target;
    std::vector<VertexSet> lists;
};

enum class RelationShape { TwoElementOrder, DisequalityOnU, Other };
std::string to_string(RelationShape s);

struct EvidenceRelation {
    PairSet relation;
    RelationShape shape = RelationShape::Other;
    // TwoElementOrder: relation == {(t,t),(t,t'),(t',t')}
    std::pair<std::string, std::string> order_pair;
    // DisequalityOnU: relation == all off-diagonal pairs of universe, |U| >= 3
    VertexSet universe;
};

// Fixed gadgets for the eight patterns that admit one.
const std::map<PatternName, Gadget>& builtin_gadgets();

// The gadget as a path-shaped list instance with variables p1..pk.
ListInstance gadget_instance(const Gadget& g);

// Exact endpoint relation of the gadget over `host`, classified.
// Throws if some list contains a vertex absent from the host.
EvidenceRelation evaluate_gadget(const Graph& host, const Gadget& g);

// Renames every list through a pattern-to-host embedding.
Gadget pull_back(const Gadget& g, const std::map<std::string, std::string>& embedding);

EvidenceRelation classify_relation(const PairSet& r);

struct HardnessEvidence {
    PatternWitness witness;
    std::optional<Gadget> gadget;             // absent for patterns without one
    std::optional<EvidenceRelation> relation;
};

// Pattern witness plus, when the pattern has a gadget, its pulled-back
// endpoint relation evaluated over h itself.
std::optional<HardnessEvidence> hardness_evidence(const Graph& h);

}  // namespace lhom
