#include "lhom/decompose.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "lhom/patterns.hpp"

namespace lhom {

namespace {

Graph strip_top(const Graph& h, const VertexSet& top) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& [u, v] : h.edge_list())
        if (!(top.count(u) && top.count(v))) edges.emplace_back(u, v);
    return Graph(h.vertices(), edges);
}

}  // namespace

std::optional<BasicLeaf> is_basic(const Graph& h) {
    if (!is_connected(h)) throw std::invalid_argument("is_basic: input not connected");
    if (h.size() == 1 && h.loop_at(0)) return BasicLeaf{BasicKind::SingleLoop, h, {}, {}};
    if (h.is_irreflexive()) {
        if (is_basic_irreflexive(h)) return BasicLeaf{BasicKind::Irreflexive, h, {}, {}};
        return std::nullopt;
    }
    // Mixed or reflexive: the loops must form a reflexive clique, the
    // non-loops an independent set, and deleting the clique edges must leave
    // a basic irreflexive graph with classes (non-loops, loops).
    VertexSet top = h.loops();
    VertexSet bottom = h.nonloops();
    for (const auto& t : top)
        for (const auto& u : top)
            if (t < u && !h.adjacent(t, u)) return std::nullopt;
    for (const auto& b : bottom)
        for (const auto& c : bottom)
            if (b < c && h.adjacent(b, c)) return std::nullopt;
    Graph base = strip_top(h, top);
    if (!is_basic_irreflexive(base)) return std::nullopt;
    return BasicLeaf{BasicKind::Completed, base, bottom, top};
}

VertexSet DecompositionNode::covered_vertices() const {
    if (children.empty()) return leaf.vertex_set();
    VertexSet out;
    for (const auto& c : children)
        for (const auto& v : c.covered_vertices()) out.insert(v);
    return out;
}

namespace {

DecompositionNode leaf_node(const BasicLeaf& b) {
    DecompositionNode n;
    switch (b.kind) {
        case BasicKind::SingleLoop: n.kind = DecompositionNode::Kind::SingleLoop; break;
        case BasicKind::Irreflexive: n.kind = DecompositionNode::Kind::BasicIrreflexive; break;
        case BasicKind::Completed: n.kind = DecompositionNode::Kind::BasicCompleted; break;
    }
    n.leaf = b.base;
    n.bottom = b.bottom;
    n.top = b.top;
    return n;
}

std::optional<DecompositionNode> decompose_rec(const Graph& h);

// True iff the edges between part and the rest are exactly those from loops
// of part to every outside vertex, i.e. h = induced(part) (+) induced(rest).
bool adjunction_split_exact(const Graph& h, const VertexSet& part) {
    for (const auto& x : part) {
        bool x_loop = h.loop_at(x);
        for (const auto& y : h.vertices()) {
            if (part.count(y)) continue;
            if (h.adjacent(x, y) != x_loop) return false;
        }
    }
    return true;
}

std::optional<DecompositionNode> try_adjunction(const Graph& h, const VertexSet& part) {
    if (part.empty() || part.size() == h.vertices().size()) return std::nullopt;
    if (!adjunction_split_exact(h, part)) return std::nullopt;
    Graph b = induced(h, part);
    if (!is_connected(b)) return std::nullopt;
    auto basic = is_basic(b);
    if (!basic) return std::nullopt;
    VertexSet rest_set;
    for (const auto& v : h.vertices())
        if (!part.count(v)) rest_set.insert(v);
    auto rest = decompose_rec(induced(h, rest_set));
    if (!rest) return std::nullopt;
    DecompositionNode n;
    n.kind = DecompositionNode::Kind::Adjunction;
    n.children.push_back(leaf_node(*basic));
    n.children.push_back(std::move(*rest));
    return n;
}

std::optional<DecompositionNode> decompose_connected(const Graph& h) {
    if (auto basic = is_basic(h)) return leaf_node(*basic);

    // Splitting off a universal loop is always safe: membership is hereditary
    // and closed under adjoining a dominating loop.
    for (const auto& u : h.loops()) {
        bool universal = true;
        for (const auto& v : h.vertices())
            if (v != u && !h.adjacent(u, v)) { universal = false; break; }
        if (universal) return try_adjunction(h, {u});
    }

    VertexSet loop_set = h.loops();
    if (loop_set.empty()) return std::nullopt;  // connected irreflexive non-basic
    Graph refl = induced(h, loop_set);
    if (!is_connected(refl)) return std::nullopt;

    // Universal vertices of the subgraph on loops.
    VertexSet universal_loops;
    for (const auto& u : loop_set) {
        bool universal = true;
        for (const auto& v : loop_set)
            if (v != u && !refl.adjacent(u, v)) { universal = false; break; }
        if (universal) universal_loops.insert(u);
    }
    if (universal_loops.empty()) return std::nullopt;

    // Non-loops whose looped neighbours all lie in the universal set.
    VertexSet candidates;
    for (const auto& a : h.nonloops()) {
        bool ok = true;
        for (const auto& r : loop_set)
            if (h.adjacent(a, r) && !universal_loops.count(r)) { ok = false; break; }
        if (ok) candidates.insert(a);
    }
    if (candidates.empty()) return std::nullopt;

    // Components of the candidates, with each component's common looped
    // neighbourhood. Ordered by smallest member.
    std::vector<VertexSet> comps = components(induced(h, candidates));
    std::vector<VertexSet> common;
    for (const auto& comp : comps) {
        VertexSet inter = universal_loops;
        for (const auto& a : comp) {
            VertexSet next;
            for (const auto& r : inter)
                if (h.adjacent(a, r)) next.insert(r);
            inter = std::move(next);
        }
        common.push_back(std::move(inter));
    }

    // Pick a subset of components whose neighbourhoods are contained in every
    // unselected one; single component, or several singletons. Enumerate
    // selections in a canonical order and take the first that yields a valid
    // split with a basic part.
    const int k = static_cast<int>(comps.size());
    if (k > 24) throw std::invalid_argument("decompose: too many candidate components");
    std::vector<std::vector<int>> selections;
    for (std::uint64_t mask = 1; mask < (1ULL << k); ++mask) {
        std::vector<int> sel;
        for (int i = 0; i < k; ++i)
            if (mask & (1ULL << i)) sel.push_back(i);
        if (sel.size() > 1) {
            bool all_single = true;
            for (int i : sel)
                if (comps[i].size() != 1) { all_single = false; break; }
            if (!all_single) continue;
        }
        bool nested = true;
        for (int i : sel) {
            for (int j = 0; j < k && nested; ++j) {
                if (std::find(sel.begin(), sel.end(), j) != sel.end()) continue;
                nested = std::includes(common[j].begin(), common[j].end(),
                                       common[i].begin(), common[i].end());
            }
            if (!nested) break;
        }
        if (nested) selections.push_back(std::move(sel));
    }
    std::stable_sort(selections.begin(), selections.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });

    for (const auto& sel : selections) {
        VertexSet part;
        for (int i : sel) {
            for (const auto& v : comps[i]) part.insert(v);
            for (const auto& v : common[i]) part.insert(v);
        }
        if (auto n = try_adjunction(h, part)) return n;
    }
    return std::nullopt;
}

std::optional<DecompositionNode> decompose_rec(const Graph& h) {
    auto comps = components(h);
    if (comps.size() != 1) {
        DecompositionNode n;
        n.kind = DecompositionNode::Kind::Union;
        for (const auto& c : comps) {
            auto child = decompose_rec(induced(h, c));
            if (!child) return std::nullopt;
            n.children.push_back(std::move(*child));
        }
        return n;
    }
    return decompose_connected(h);
}

}  // namespace

std::optional<DecompositionNode> decompose(const Graph& h) { return decompose_rec(h); }

Graph replay(const DecompositionNode& t) {
    switch (t.kind) {
        case DecompositionNode::Kind::SingleLoop:
        case DecompositionNode::Kind::BasicIrreflexive:
            return t.leaf;
        case DecompositionNode::Kind::BasicCompleted:
            return complete_top(t.leaf, t.top);
        case DecompositionNode::Kind::Union: {
            if (t.children.empty()) return Graph();
            Graph acc = replay(t.children[0]);
            for (size_t i = 1; i < t.children.size(); ++i)
                acc = disjoint_union(acc, replay(t.children[i]));
            return acc;
        }
        case DecompositionNode::Kind::Adjunction: {
            if (t.children.size() != 2) throw std::invalid_argument("replay: malformed adjunction");
            return adjunction(replay(t.children[0]), replay(t.children[1]));
        }
    }
    throw std::invalid_argument("replay: malformed tree");
}

namespace {

void format_rec(const DecompositionNode& t, int depth, std::ostringstream& out) {
    std::string pad(2 * depth, ' ');
    auto join = [](const VertexSet& s) {
        std::string acc;
        for (const auto& v : s) {
            if (!acc.empty()) acc += " ";
            acc += v;
        }
        return acc;
    };
    switch (t.kind) {
        case DecompositionNode::Kind::SingleLoop:
            out << pad << "single-loop " << join(t.leaf.vertex_set()) << "\n";
            break;
        case DecompositionNode::Kind::BasicIrreflexive:
            out << pad << "basic-irreflexive {" << join(t.leaf.vertex_set()) << "}\n";
            break;
        case DecompositionNode::Kind::BasicCompleted:
            out << pad << "basic-completed B={" << join(t.bottom) << "} T={" << join(t.top)
                << "}\n";
            break;
        case DecompositionNode::Kind::Union:
            out << pad << "union\n";
            for (const auto& c : t.children) format_rec(c, depth + 1, out);
            break;
        case DecompositionNode::Kind::Adjunction:
            out << pad << "adjunction\n";
            for (const auto& c : t.children) format_rec(c, depth + 1, out);
            break;
    }
}

bool leaves_basic(const Graph& h, const DecompositionNode& t) {
    switch (t.kind) {
        case DecompositionNode::Kind::SingleLoop:
        case DecompositionNode::Kind::BasicIrreflexive:
        case DecompositionNode::Kind::BasicCompleted: {
            auto b = is_basic(induced(h, t.covered_vertices()));
            if (!b) return false;
            if (t.kind == DecompositionNode::Kind::SingleLoop)
                return b->kind == BasicKind::SingleLoop && t.leaf == b->base;
            if (t.kind == DecompositionNode::Kind::BasicIrreflexive)
                return b->kind == BasicKind::Irreflexive && t.leaf == b->base;
            return b->kind == BasicKind::Completed && t.leaf == b->base &&
                   t.bottom == b->bottom && t.top == b->top;
        }
        case DecompositionNode::Kind::Union: {
            for (const auto& c : t.children)
                if (!leaves_basic(h, c)) return false;
            return true;
        }
        case DecompositionNode::Kind::Adjunction: {
            if (t.children.size() != 2) return false;
            const auto& first = t.children[0];
            if (first.kind == DecompositionNode::Kind::Union ||
                first.kind == DecompositionNode::Kind::Adjunction)
                return false;
            for (const auto& c : t.children)
                if (!leaves_basic(h, c)) return false;
            return true;
        }
    }
    return false;
}

}  // namespace

std::string format_tree(const DecompositionNode& t) {
    std::ostringstream out;
    format_rec(t, 0, out);
    return out.str();
}

bool validate_tree(const Graph& h, const DecompositionNode& t) {
    if (t.covered_vertices() != h.vertex_set()) return false;
    if (!leaves_basic(h, t)) return false;
    return is_isomorphic(replay(t), h).has_value();
}

}  // namespace lhom
