#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lhom/graph.hpp"

namespace lhom {

/// Total ternary operation on the vertices of a template graph.
/// Conservative by construction: every entry is one of its arguments.
class TernaryTable {
public:
    TernaryTable(const Graph& h, std::vector<int> values);

    const std::vector<std::string>& domain() const { return domain_; }
    int size() const { return static_cast<int>(domain_.size()); }
    int value(int i, int j, int k) const { return values_[(i * size() + j) * size() + k]; }
    std::string value(const std::string& x, const std::string& y, const std::string& z) const;

    // "x y z -> v" rows in lexicographic triple order.
    std::vector<std::string> rows() const;

    friend bool operator==(const TernaryTable&, const TernaryTable&) = default;

private:
    std::vector<std::string> domain_;
    std::vector<int> values_;
};

// Edge preservation: images of componentwise-adjacent triples are adjacent.
// Throws if the table domain differs from the graph's vertices.
bool is_polymorphism(const Graph& h, const TernaryTable& f);

// Entries on triples with a repeated argument equal the repeated value.
bool satisfies_majority(const TernaryTable& f);

/// Three conservative operations linked by the chain identities
/// f1(x,y,y)=x, f1(x,x,y)=f2(x,y,y), f2(x,x,y)=f3(x,y,y), f3(x,x,y)=y.
struct PermutabilityChain {
    TernaryTable f1, f2, f3;
};

bool satisfies_chain_identities(const PermutabilityChain& c);
bool verify_chain(const Graph& h, const PermutabilityChain& c);

enum class SearchStatus { Found, None, Exhausted };
std::string to_string(SearchStatus s);

inline constexpr long long kDefaultBudget = 100'000'000;  // constraint checks

struct MajorityResult {
    SearchStatus status;
    std::optional<TernaryTable> table;
    long long steps = 0;
};

struct ChainResult {
    SearchStatus status;
    std::optional<PermutabilityChain> chain;
    long long steps = 0;
};

// Backtracking search with arc consistency over the undetermined entries;
// deterministic (fail-first variable order, argument-order values). "None"
// is only reported after exhausting the space; hitting the step budget
// yields "Exhausted".
MajorityResult find_conservative_majority(const Graph& h, long long budget = kDefaultBudget);
ChainResult find_permutability_chain(const Graph& h, long long budget = kDefaultBudget);

}  // namespace lhom
