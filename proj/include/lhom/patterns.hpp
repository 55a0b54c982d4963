#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lhom/graph.hpp"

namespace lhom {

// The twelve forbidden induced subgraphs. A template graph whose list
// homomorphism problem is in logspace is exactly one avoiding all of them.
enum class PatternName {
    ReflP3, ReflC4, IrrC3, IrrC5, IrrC6, IrrP5, B1, B2, B3, B4, B5, B6,
};

struct Pattern {
    PatternName name;
    Graph graph;
};

const std::vector<Pattern>& pattern_catalogue();
const Pattern& pattern(PatternName name);
std::string to_string(PatternName name);
std::optional<PatternName> pattern_from_string(const std::string& s);

/// An induced embedding of a catalogue pattern into a host graph: edges,
/// non-edges and loop status are all preserved.
struct PatternWitness {
    PatternName pattern;
    std::map<std::string, std::string> embedding;  // pattern vertex -> host vertex
};

// First induced occurrence of `needle` in `host`, assigning needle vertices
// in sorted order and trying host vertices in sorted order; deterministic.
std::optional<std::map<std::string, std::string>> find_induced(const Graph& needle,
                                                               const Graph& host);

// Scans the catalogue in order and returns the first witness, if any.
std::optional<PatternWitness> find_pattern(const Graph& host);

// Re-checks a witness pair by pair (injectivity, edges, non-edges, loops).
bool witness_valid(const Graph& host, const PatternWitness& w);

// True iff no forbidden pattern occurs: the logspace-or-easier class.
bool in_class_l(const Graph& h);

// Irreflexive building blocks: bipartite with no induced 6-cycle and no
// induced path on 6 vertices. Throws if the input has a loop.
bool is_basic_irreflexive(const Graph& h);

}  // namespace lhom
