#include "lhom/gadgets.hpp"

#include <sstream>

namespace lhom {

std::string to_string(RelationShape s) {
    switch (s) {
        case RelationShape::TwoElementOrder: return "two-element-order";
        case RelationShape::DisequalityOnU: return "disequality";
        case RelationShape::Other: return "other";
    }
    throw std::logic_error("unknown relation shape");
}

namespace {

VertexSet vs(std::initializer_list<const char*> names) {
    VertexSet out;
    for (const char* n : names) out.insert(n);
    return out;
}

std::map<PatternName, Gadget> build_gadgets() {
    std::map<PatternName, Gadget> out;
    out.emplace(PatternName::ReflP3,
                Gadget{PatternName::ReflP3,
                       {vs({"a", "c"}), vs({"b", "c"}), vs({"a", "d"}), vs({"a", "c"})}});
    out.emplace(PatternName::IrrP5,
                Gadget{PatternName::IrrP5,
                       {vs({"a", "e"}), vs({"b", "d"}), vs({"c", "e"}), vs({"b", "f"}),
                        vs({"a", "e"})}});
    out.emplace(PatternName::B1,
                Gadget{PatternName::B1,
                       {vs({"b", "c"}), vs({"b", "c"}), vs({"a", "b"}), vs({"a", "b"}),
                        vs({"b", "c"})}});
    out.emplace(PatternName::B2,
                Gadget{PatternName::B2,
                       {vs({"b", "c"}), vs({"a", "c"}), vs({"a", "b"}), vs({"b", "c"})}});
    out.emplace(PatternName::B3,
                Gadget{PatternName::B3,
                       {vs({"b", "c"}), vs({"a", "d"}), vs({"b", "d"}), vs({"b", "c"})}});
    out.emplace(PatternName::B4,
                Gadget{PatternName::B4,
                       {vs({"a", "e"}), vs({"b", "d"}), vs({"c", "d"}), vs({"a", "e"})}});
    // B5 and B6 share one list sequence.
    Gadget b5{PatternName::B5,
              {vs({"a", "c"}), vs({"b'", "c'"}), vs({"a", "b"}), vs({"a'", "c'"}),
               vs({"a", "c"})}};
    out.emplace(PatternName::B5, b5);
    b5.target = PatternName::B6;
    out.emplace(PatternName::B6, b5);
    return out;
}

}  // namespace

const std::map<PatternName, Gadget>& builtin_gadgets() {
    static const std::map<PatternName, Gadget> gadgets = build_gadgets();
    return gadgets;
}

ListInstance gadget_instance(const Gadget& g) {
    ListInstance inst;
    for (size_t i = 0; i < g.lists.size(); ++i)
        inst.add_variable("p" + std::to_string(i + 1), g.lists[i]);
    for (size_t i = 0; i + 1 < g.lists.size(); ++i)
        inst.add_constraint(inst.variables[i], inst.variables[i + 1]);
    return inst;
}

EvidenceRelation classify_relation(const PairSet& r) {
    EvidenceRelation out;
    out.relation = r;
    VertexSet universe;
    for (const auto& [a, b] : r) {
        universe.insert(a);
        universe.insert(b);
    }
    out.universe = universe;
    if (universe.size() == 2 && r.size() == 3) {
        // {(t,t),(t,t'),(t',t')} in either orientation
        auto it = universe.begin();
        std::string u = *it++, v = *it;
        PairSet forward = {{u, u}, {u, v}, {v, v}};
        PairSet backward = {{u, u}, {v, u}, {v, v}};
        if (r == forward) {
            out.shape = RelationShape::TwoElementOrder;
            out.order_pair = {u, v};
            return out;
        }
        if (r == backward) {
            out.shape = RelationShape::TwoElementOrder;
            out.order_pair = {v, u};
            return out;
        }
    }
    if (universe.size() >= 3) {
        PairSet diseq;
        for (const auto& a : universe)
            for (const auto& b : universe)
                if (a != b) diseq.emplace(a, b);
        if (r == diseq) {
            out.shape = RelationShape::DisequalityOnU;
            return out;
        }
    }
    out.shape = RelationShape::Other;
    out.universe.clear();
    return out;
}

EvidenceRelation evaluate_gadget(const Graph& host, const Gadget& g) {
    for (const auto& list : g.lists)
        for (const auto& v : list)
            if (!host.has_vertex(v))
                throw std::invalid_argument("gadget list mentions unknown vertex '" + v + "'");
    ListInstance inst = gadget_instance(g);
    PairSet r = enumerate_endpoint_relation(host, inst, inst.variables.front(),
                                            inst.variables.back());
    return classify_relation(r);
}

Gadget pull_back(const Gadget& g, const std::map<std::string, std::string>& embedding) {
    Gadget out{g.target, {}};
    for (const auto& list : g.lists) {
        VertexSet renamed;
        for (const auto& v : list) renamed.insert(embedding.at(v));
        out.lists.push_back(std::move(renamed));
    }
    return out;
}

std::optional<HardnessEvidence> hardness_evidence(const Graph& h) {
    auto witness = find_pattern(h);
    if (!witness) return std::nullopt;
    HardnessEvidence out{*witness, std::nullopt, std::nullopt};
    auto it = builtin_gadgets().find(witness->pattern);
    if (it != builtin_gadgets().end()) {
        Gadget renamed = pull_back(it->second, witness->embedding);
        out.gadget = renamed;
        out.relation = evaluate_gadget(h, renamed);
    }
    return out;
}

}  // namespace lhom
