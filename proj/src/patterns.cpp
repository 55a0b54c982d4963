#include "lhom/patterns.hpp"

#include <algorithm>
#include <functional>

namespace lhom {

namespace {

using Edges = std::vector<std::pair<std::string, std::string>>;

Graph path(const std::vector<std::string>& vs, Edges extra = {}) {
    Edges edges;
    for (size_t i = 0; i + 1 < vs.size(); ++i) edges.emplace_back(vs[i], vs[i + 1]);
    for (auto& e : extra) edges.push_back(e);
    return Graph(vs, edges);
}

Graph cycle(const std::vector<std::string>& vs, Edges extra = {}) {
    Edges edges;
    for (size_t i = 0; i < vs.size(); ++i) edges.emplace_back(vs[i], vs[(i + 1) % vs.size()]);
    for (auto& e : extra) edges.push_back(e);
    return Graph(vs, edges);
}

Edges loops_at(const std::vector<std::string>& vs) {
    Edges out;
    for (const auto& v : vs) out.emplace_back(v, v);
    return out;
}

std::vector<Pattern> build_catalogue() {
    std::vector<Pattern> out;
    out.push_back({PatternName::ReflP3,
                   path({"a", "b", "c", "d"}, loops_at({"a", "b", "c", "d"}))});
    out.push_back({PatternName::ReflC4,
                   cycle({"a", "b", "c", "d"}, loops_at({"a", "b", "c", "d"}))});
    out.push_back({PatternName::IrrC3, cycle({"a", "b", "c"})});
    out.push_back({PatternName::IrrC5, cycle({"a", "b", "c", "d", "e"})});
    out.push_back({PatternName::IrrC6, cycle({"a", "b", "c", "d", "e", "f"})});
    out.push_back({PatternName::IrrP5, path({"a", "b", "c", "d", "e", "f"})});
    out.push_back({PatternName::B1, path({"a", "b", "c"}, loops_at({"c"}))});
    out.push_back({PatternName::B2, path({"a", "b", "c"}, loops_at({"a", "c"}))});
    out.push_back({PatternName::B3, path({"a", "b", "c", "d"}, loops_at({"b", "c", "d"}))});
    out.push_back({PatternName::B4,
                   path({"a", "b", "c", "d", "e"},
                        [] {
                            Edges e = loops_at({"c", "d"});
                            e.emplace_back("a", "c");
                            return e;
                        }())});
    // Looped triangle a,b,c with pendant non-loops a',b',c'; b' and c' each
    // see two consecutive triangle vertices.
    Edges b5_edges = {{"a", "b"}, {"b", "c"}, {"a", "c"},
                      {"a'", "a"}, {"b'", "a"}, {"b'", "b"}, {"c'", "b"}, {"c'", "c"}};
    for (auto& e : loops_at({"a", "b", "c"})) b5_edges.push_back(e);
    out.push_back({PatternName::B5,
                   Graph({"a", "b", "c", "a'", "b'", "c'"}, b5_edges)});
    Edges b6_edges = b5_edges;
    b6_edges.emplace_back("a'", "c");
    out.push_back({PatternName::B6,
                   Graph({"a", "b", "c", "a'", "b'", "c'"}, b6_edges)});
    return out;
}

}  // namespace

const std::vector<Pattern>& pattern_catalogue() {
    static const std::vector<Pattern> catalogue = build_catalogue();
    return catalogue;
}

const Pattern& pattern(PatternName name) {
    for (const auto& p : pattern_catalogue())
        if (p.name == name) return p;
    throw std::logic_error("unknown pattern");
}

std::string to_string(PatternName name) {
    switch (name) {
        case PatternName::ReflP3: return "ReflP3";
        case PatternName::ReflC4: return "ReflC4";
        case PatternName::IrrC3: return "IrrC3";
        case PatternName::IrrC5: return "IrrC5";
        case PatternName::IrrC6: return "IrrC6";
        case PatternName::IrrP5: return "IrrP5";
        case PatternName::B1: return "B1";
        case PatternName::B2: return "B2";
        case PatternName::B3: return "B3";
        case PatternName::B4: return "B4";
        case PatternName::B5: return "B5";
        case PatternName::B6: return "B6";
    }
    throw std::logic_error("unknown pattern");
}

std::optional<PatternName> pattern_from_string(const std::string& s) {
    for (const auto& p : pattern_catalogue())
        if (to_string(p.name) == s) return p.name;
    return std::nullopt;
}

std::optional<std::map<std::string, std::string>> find_induced(const Graph& needle,
                                                               const Graph& host) {
    const int m = needle.size();
    const int n = host.size();
    if (m > n) return std::nullopt;
    std::vector<int> image(m, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> extend = [&](int u) -> bool {
        if (u == m) return true;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            if (needle.loop_at(u) != host.loop_at(v)) continue;
            if (needle.degree(u) > host.degree(v)) continue;
            bool ok = true;
            for (int w = 0; w < u && ok; ++w)
                if (needle.adjacent(u, w) != host.adjacent(v, image[w])) ok = false;
            if (!ok) continue;
            image[u] = v;
            used[v] = true;
            if (extend(u + 1)) return true;
            image[u] = -1;
            used[v] = false;
        }
        return false;
    };
    if (!extend(0)) return std::nullopt;
    std::map<std::string, std::string> out;
    for (int u = 0; u < m; ++u) out[needle.name_of(u)] = host.name_of(image[u]);
    return out;
}

std::optional<PatternWitness> find_pattern(const Graph& host) {
    for (const auto& p : pattern_catalogue())
        if (auto emb = find_induced(p.graph, host))
            return PatternWitness{p.name, *emb};
    return std::nullopt;
}

bool witness_valid(const Graph& host, const PatternWitness& w) {
    const Graph& pg = pattern(w.pattern).graph;
    if (static_cast<int>(w.embedding.size()) != pg.size()) return false;
    std::set<std::string> image;
    for (const auto& [p, h] : w.embedding) {
        if (!pg.has_vertex(p) || !host.has_vertex(h)) return false;
        if (!image.insert(h).second) return false;  // not injective
    }
    for (const auto& p : pg.vertices())
        for (const auto& q : pg.vertices())
            if (pg.adjacent(p, q) != host.adjacent(w.embedding.at(p), w.embedding.at(q)))
                return false;
    return true;
}

bool in_class_l(const Graph& h) { return !find_pattern(h).has_value(); }

bool is_basic_irreflexive(const Graph& h) {
    if (!h.is_irreflexive()) throw std::invalid_argument("is_basic_irreflexive: input has a loop");
    if (!is_bipartite(h)) return false;
    if (find_induced(pattern(PatternName::IrrC6).graph, h)) return false;
    if (find_induced(pattern(PatternName::IrrP5).graph, h)) return false;
    return true;
}

}  // namespace lhom
