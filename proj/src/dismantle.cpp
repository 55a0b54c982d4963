#include "lhom/dismantle.hpp"

#include <algorithm>

namespace lhom {

namespace {

bool square_adjacent(const Graph& h, const VertexPair& p, const VertexPair& q) {
    return h.adjacent(p.first, q.first) && h.adjacent(p.second, q.second);
}

}  // namespace

bool dominates(const Graph& h, const PairLiveSet& live, const VertexPair& p,
               const VertexPair& q) {
    if (!live.count(p) || !live.count(q))
        throw std::invalid_argument("dominates: pair not live");
    if (p == q) throw std::invalid_argument("dominates: identical pairs");
    // Unary relations reduce to the two-element list {p.first, p.second}.
    auto in_pair = [&](const std::string& v) { return v == p.first || v == p.second; };
    if (!in_pair(q.first) || !in_pair(q.second)) return false;
    // Every live square-neighbour of p (p itself included when self-adjacent)
    // must also neighbour q.
    for (const auto& r : live) {
        if (square_adjacent(h, p, r) && !square_adjacent(h, q, r)) return false;
    }
    return true;
}

DismantleResult dismantle_square(const Graph& h, ScanOrder order) {
    PairLiveSet live;
    std::vector<VertexPair> off_diagonal;
    for (const auto& u : h.vertices())
        for (const auto& v : h.vertices()) {
            live.emplace(u, v);
            if (u != v) off_diagonal.emplace_back(u, v);
        }
    if (order == ScanOrder::Reverse)
        std::reverse(off_diagonal.begin(), off_diagonal.end());

    DismantleResult out;
    std::set<VertexPair> removed;
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& p : off_diagonal) {
            if (removed.count(p)) continue;
            for (const auto& q : live) {
                if (q == p) continue;
                if (dominates(h, live, p, q)) {
                    out.sequence.steps.push_back({p, q});
                    live.erase(p);
                    removed.insert(p);
                    progress = true;
                    break;
                }
            }
            if (progress) break;  // rescan from the top of the order
        }
    }
    for (const auto& p : off_diagonal)
        if (!removed.count(p)) out.stuck.push_back(p);
    std::sort(out.stuck.begin(), out.stuck.end());
    out.success = out.stuck.empty();
    return out;
}

bool validate_sequence(const Graph& h, const DismantlingSequence& seq) {
    PairLiveSet live;
    std::set<VertexPair> expected;
    for (const auto& u : h.vertices())
        for (const auto& v : h.vertices()) {
            live.emplace(u, v);
            if (u != v) expected.emplace(u, v);
        }
    for (const auto& step : seq.steps) {
        if (step.removed.first == step.removed.second) return false;
        if (step.removed == step.dominator) return false;
        if (!live.count(step.removed) || !live.count(step.dominator)) return false;
        if (!dominates(h, live, step.removed, step.dominator)) return false;
        live.erase(step.removed);
        expected.erase(step.removed);
    }
    return expected.empty();
}

std::optional<FoCertificate> fo_structural(const Graph& h) {
    FoCertificate cert;
    cert.loop_clique = h.loops();
    cert.independent = h.nonloops();
    for (const auto& u : cert.loop_clique)
        for (const auto& v : cert.loop_clique)
            if (u < v && !h.adjacent(u, v)) return std::nullopt;
    for (const auto& u : cert.independent)
        for (const auto& v : cert.independent)
            if (u <= v && h.adjacent(u, v)) return std::nullopt;
    // Neighbourhoods of non-loops must form a chain under inclusion; sorting
    // by size puts any chain in order, then adjacent inclusions certify it.
    std::vector<std::string> order(cert.independent.begin(), cert.independent.end());
    std::stable_sort(order.begin(), order.end(), [&](const std::string& a, const std::string& b) {
        return h.neighbours(a).size() < h.neighbours(b).size();
    });
    for (size_t i = 0; i + 1 < order.size(); ++i) {
        VertexSet small = h.neighbours(order[i]);
        VertexSet big = h.neighbours(order[i + 1]);
        if (!std::includes(big.begin(), big.end(), small.begin(), small.end()))
            return std::nullopt;
    }
    cert.chain_order = std::move(order);
    return cert;
}

}  // namespace lhom
