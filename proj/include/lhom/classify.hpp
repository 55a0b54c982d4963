#pragma once

#include <optional>
#include <string>

#include "lhom/decompose.hpp"
#include "lhom/dismantle.hpp"
#include "lhom/gadgets.hpp"
#include "lhom/graph.hpp"
#include "lhom/patterns.hpp"
#include "lhom/polymorphism.hpp"
#include "lhom/solver.hpp"

namespace lhom {

enum class Verdict { FO, LComplete, NLComplete, NPComplete, Inconclusive };
std::string verdict_name(Verdict v);

struct Budgets {
    long long step_limit = kDefaultBudget;
};

/// Verdict plus every certificate the pipeline produced. A report is never
/// emitted with evidence that fails re-validation, and NP verdicts require a
/// definitively exhausted majority search, not a budget timeout.
struct ClassificationReport {
    Graph graph;
    Verdict verdict = Verdict::Inconclusive;
    Budgets budgets;

    std::optional<SearchStatus> majority_status;
    std::optional<TernaryTable> majority;
    long long majority_steps = 0;

    std::optional<SearchStatus> chain_status;
    std::optional<PermutabilityChain> chain;
    long long chain_steps = 0;

    std::optional<PatternWitness> witness;
    std::optional<Gadget> gadget;
    std::optional<EvidenceRelation> gadget_relation;

    std::optional<DecompositionNode> tree;
    std::optional<DismantlingSequence> dismantling;
    std::optional<FoCertificate> fo_certificate;

    long long elapsed_ms = 0;
};

ClassificationReport classify(const Graph& h, const Budgets& budgets = {});

// Re-checks every attached certificate independently of the searches that
// produced it; throws std::logic_error with a description on failure.
void validate_report(const ClassificationReport& report);

// Deterministic (insertion-ordered) JSON. elapsed_ms is emitted as 0 unless
// include_timing is set, so identical runs serialize byte-identically.
std::string report_to_json(const ClassificationReport& report, bool include_timing = false,
                           int indent = 2);

}  // namespace lhom
