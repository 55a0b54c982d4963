#include "lhom/classify.hpp"

#include <chrono>

#include "json.hpp"

namespace lhom {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::FO: return "FO";
        case Verdict::LComplete: return "L-complete";
        case Verdict::NLComplete: return "NL-complete";
        case Verdict::NPComplete: return "NP-complete";
        case Verdict::Inconclusive: return "inconclusive";
    }
    throw std::logic_error("unknown verdict");
}

ClassificationReport classify(const Graph& h, const Budgets& budgets) {
    auto started = std::chrono::steady_clock::now();
    ClassificationReport rep;
    rep.graph = h;
    rep.budgets = budgets;
    auto finish = [&](Verdict v) {
        rep.verdict = v;
        rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
        validate_report(rep);
        return rep;
    };

    auto majority = find_conservative_majority(h, budgets.step_limit);
    rep.majority_status = majority.status;
    rep.majority_steps = majority.steps;
    rep.majority = majority.table;
    if (majority.status == SearchStatus::Exhausted) return finish(Verdict::Inconclusive);
    if (majority.status == SearchStatus::None) return finish(Verdict::NPComplete);

    if (auto evidence = hardness_evidence(h)) {
        rep.witness = evidence->witness;
        rep.gadget = evidence->gadget;
        rep.gadget_relation = evidence->relation;
        return finish(Verdict::NLComplete);
    }

    auto cert = fo_structural(h);
    auto dism = dismantle_square(h);
    if (cert.has_value() != dism.success)
        throw std::logic_error("classify: structural test and dismantling disagree on " +
                               h.serialize());
    if (cert) {
        rep.fo_certificate = cert;
        rep.dismantling = dism.sequence;
        return finish(Verdict::FO);
    }

    rep.tree = decompose(h);
    if (!rep.tree)
        throw std::logic_error("classify: pattern-free graph failed to decompose: " +
                               h.serialize());
    auto chain = find_permutability_chain(h, budgets.step_limit);
    rep.chain_status = chain.status;
    rep.chain_steps = chain.steps;
    rep.chain = chain.chain;
    if (chain.status == SearchStatus::Exhausted) return finish(Verdict::Inconclusive);
    if (chain.status == SearchStatus::None)
        throw std::logic_error("classify: pattern-free graph admits no chain: " + h.serialize());
    return finish(Verdict::LComplete);
}

void validate_report(const ClassificationReport& rep) {
    auto fail = [&](const std::string& why) {
        throw std::logic_error("invalid report (" + verdict_name(rep.verdict) + "): " + why);
    };
    const Graph& h = rep.graph;
    if (rep.majority) {
        if (!satisfies_majority(*rep.majority)) fail("majority table violates identities");
        if (!is_polymorphism(h, *rep.majority)) fail("majority table not a polymorphism");
    }
    if (rep.chain && !verify_chain(h, *rep.chain)) fail("chain fails verification");
    if (rep.witness && !witness_valid(h, *rep.witness)) fail("pattern witness invalid");
    if (rep.gadget) {
        auto relation = evaluate_gadget(h, *rep.gadget);
        if (!rep.gadget_relation || relation.relation != rep.gadget_relation->relation ||
            relation.shape != rep.gadget_relation->shape)
            fail("gadget relation does not re-evaluate");
    }
    if (rep.tree && !validate_tree(h, *rep.tree)) fail("decomposition tree invalid");
    if (rep.dismantling && !validate_sequence(h, *rep.dismantling))
        fail("dismantling sequence invalid");
    if (rep.fo_certificate) {
        auto again = fo_structural(h);
        if (!again) fail("structural certificate does not re-check");
    }

    switch (rep.verdict) {
        case Verdict::NPComplete:
            if (rep.majority_status != SearchStatus::None)
                fail("NP verdict without definitive majority refutation");
            break;
        case Verdict::NLComplete:
            if (!rep.majority || rep.majority_status != SearchStatus::Found)
                fail("NL verdict without majority table");
            if (!rep.witness) fail("NL verdict without pattern witness");
            break;
        case Verdict::LComplete:
            if (!rep.tree) fail("L verdict without decomposition tree");
            if (fo_structural(h)) fail("L verdict on a first-order definable template");
            break;
        case Verdict::FO:
            if (!rep.fo_certificate || !rep.dismantling) fail("FO verdict without certificates");
            break;
        case Verdict::Inconclusive:
            if (rep.majority_status != SearchStatus::Exhausted &&
                rep.chain_status != SearchStatus::Exhausted)
                fail("inconclusive verdict without an exhausted search");
            break;
    }
}

namespace {

using json = nlohmann::ordered_json;

json set_to_json(const VertexSet& s) {
    json out = json::array();
    for (const auto& v : s) out.push_back(v);
    return out;
}

json table_to_json(const TernaryTable& t) {
    json out = json::array();
    for (const auto& row : t.rows()) out.push_back(row);
    return out;
}

json tree_to_json(const DecompositionNode& t) {
    json out;
    switch (t.kind) {
        case DecompositionNode::Kind::SingleLoop:
            out["kind"] = "single-loop";
            out["vertex"] = *t.leaf.vertex_set().begin();
            break;
        case DecompositionNode::Kind::BasicIrreflexive:
            out["kind"] = "basic-irreflexive";
            out["vertices"] = set_to_json(t.leaf.vertex_set());
            break;
        case DecompositionNode::Kind::BasicCompleted:
            out["kind"] = "basic-completed";
            out["bottom"] = set_to_json(t.bottom);
            out["top"] = set_to_json(t.top);
            break;
        case DecompositionNode::Kind::Union: {
            out["kind"] = "union";
            json kids = json::array();
            for (const auto& c : t.children) kids.push_back(tree_to_json(c));
            out["children"] = kids;
            break;
        }
        case DecompositionNode::Kind::Adjunction:
            out["kind"] = "adjunction";
            out["basic"] = tree_to_json(t.children.at(0));
            out["rest"] = tree_to_json(t.children.at(1));
            break;
    }
    return out;
}

json pair_to_json(const std::pair<std::string, std::string>& p) {
    return json::array({p.first, p.second});
}

}  // namespace

std::string report_to_json(const ClassificationReport& rep, bool include_timing, int indent) {
    json out;
    out["schema"] = 1;
    out["graph"] = rep.graph.serialize();
    out["verdict"] = verdict_name(rep.verdict);

    json evidence;
    if (rep.majority_status) {
        json m;
        m["status"] = to_string(*rep.majority_status);
        m["steps"] = rep.majority_steps;
        if (rep.majority) m["table"] = table_to_json(*rep.majority);
        evidence["majority"] = m;
    } else {
        evidence["majority"] = nullptr;
    }
    if (rep.chain_status) {
        json c;
        c["status"] = to_string(*rep.chain_status);
        c["steps"] = rep.chain_steps;
        if (rep.chain)
            c["tables"] = json::array({table_to_json(rep.chain->f1), table_to_json(rep.chain->f2),
                                       table_to_json(rep.chain->f3)});
        evidence["chain"] = c;
    } else {
        evidence["chain"] = nullptr;
    }
    if (rep.witness) {
        json w;
        w["name"] = to_string(rep.witness->pattern);
        json map;
        for (const auto& [p, hv] : rep.witness->embedding) map[p] = hv;
        w["map"] = map;
        evidence["pattern"] = w;
    } else {
        evidence["pattern"] = nullptr;
    }
    if (rep.gadget) {
        json g;
        g["pattern"] = to_string(rep.gadget->target);
        json lists = json::array();
        for (const auto& l : rep.gadget->lists) lists.push_back(set_to_json(l));
        g["lists"] = lists;
        if (rep.gadget_relation) {
            json r = json::array();
            for (const auto& p : rep.gadget_relation->relation) r.push_back(pair_to_json(p));
            g["relation"] = r;
            g["shape"] = to_string(rep.gadget_relation->shape);
            if (rep.gadget_relation->shape == RelationShape::TwoElementOrder)
                g["pair"] = pair_to_json(rep.gadget_relation->order_pair);
            if (rep.gadget_relation->shape == RelationShape::DisequalityOnU)
                g["universe"] = set_to_json(rep.gadget_relation->universe);
        }
        evidence["gadget"] = g;
    } else {
        evidence["gadget"] = nullptr;
    }
    evidence["decomposition"] = rep.tree ? tree_to_json(*rep.tree) : json(nullptr);
    if (rep.dismantling) {
        json steps = json::array();
        for (const auto& s : rep.dismantling->steps) {
            json st;
            st["remove"] = pair_to_json(s.removed);
            st["by"] = pair_to_json(s.dominator);
            steps.push_back(st);
        }
        evidence["dismantling"] = json{{"steps", steps}};
    } else {
        evidence["dismantling"] = nullptr;
    }
    if (rep.fo_certificate) {
        json f;
        f["loops"] = set_to_json(rep.fo_certificate->loop_clique);
        f["nonloops"] = set_to_json(rep.fo_certificate->independent);
        json order = json::array();
        for (const auto& v : rep.fo_certificate->chain_order) order.push_back(v);
        f["order"] = order;
        evidence["fo_structural"] = f;
    } else {
        evidence["fo_structural"] = nullptr;
    }
    out["evidence"] = evidence;

    json budgets;
    budgets["step_limit"] = rep.budgets.step_limit;
    budgets["majority_steps"] = rep.majority_steps;
    budgets["chain_steps"] = rep.chain_steps;
    out["budgets"] = budgets;
    out["elapsed_ms"] = include_timing ? rep.elapsed_ms : 0;
    return out.dump(indent) + "\n";
}

}  // namespace lhom
