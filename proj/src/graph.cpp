#include "lhom/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace lhom {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Graph::Graph(const std::vector<std::string>& vertices,
             const std::vector<std::pair<std::string, std::string>>& edges) {
    names_ = vertices;
    std::sort(names_.begin(), names_.end());
    if (std::adjacent_find(names_.begin(), names_.end()) != names_.end())
        throw std::invalid_argument("duplicate vertex identifier");
    for (const auto& n : names_)
        if (n.empty()) throw std::invalid_argument("empty vertex identifier");
    adj_.assign(names_.size(), std::vector<bool>(names_.size(), false));
    for (const auto& [u, v] : edges) {
        int i = index_of(u);
        int j = index_of(v);
        adj_[i][j] = true;
        adj_[j][i] = true;
    }
}

Graph Graph::parse(const std::string& text) {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks[0] == "v") {
            if (toks.size() != 2) throw ParseError(lineno, "expected 'v <name>'");
            if (!seen.insert(toks[1]).second)
                throw ParseError(lineno, "duplicate vertex declaration '" + toks[1] + "'");
            vertices.push_back(toks[1]);
        } else if (toks[0] == "e") {
            if (toks.size() != 3) throw ParseError(lineno, "expected 'e <u> <v>'");
            for (int k = 1; k <= 2; ++k)
                if (!seen.count(toks[k]))
                    throw ParseError(lineno, "undeclared vertex '" + toks[k] + "' in edge");
            edges.emplace_back(toks[1], toks[2]);
        } else {
            throw ParseError(lineno, "unknown directive '" + toks[0] + "'");
        }
    }
    return Graph(vertices, edges);
}

std::string Graph::serialize() const {
    std::ostringstream out;
    for (const auto& n : names_) out << "v " << n << "\n";
    for (const auto& [u, v] : edge_list()) out << "e " << u << " " << v << "\n";
    return out.str();
}

bool Graph::has_vertex(const std::string& v) const {
    return std::binary_search(names_.begin(), names_.end(), v);
}

int Graph::index_of(const std::string& v) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), v);
    if (it == names_.end() || *it != v) throw std::out_of_range("no such vertex: " + v);
    return static_cast<int>(it - names_.begin());
}

bool Graph::adjacent(const std::string& u, const std::string& v) const {
    return adj_[index_of(u)][index_of(v)];
}

bool Graph::loop_at(const std::string& v) const {
    int i = index_of(v);
    return adj_[i][i];
}

int Graph::degree(int i) const {
    int d = 0;
    for (int j = 0; j < size(); ++j)
        if (adj_[i][j]) ++d;
    return d;
}

std::vector<std::pair<std::string, std::string>> Graph::edge_list() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (int i = 0; i < size(); ++i)
        for (int j = i; j < size(); ++j)
            if (adj_[i][j]) out.emplace_back(names_[i], names_[j]);
    return out;  // names_ sorted, so (i,j) scan order is already lexicographic
}

VertexSet Graph::loops() const {
    VertexSet out;
    for (int i = 0; i < size(); ++i)
        if (adj_[i][i]) out.insert(names_[i]);
    return out;
}

VertexSet Graph::nonloops() const {
    VertexSet out;
    for (int i = 0; i < size(); ++i)
        if (!adj_[i][i]) out.insert(names_[i]);
    return out;
}

VertexSet Graph::neighbours(const std::string& v) const {
    int i = index_of(v);
    VertexSet out;
    for (int j = 0; j < size(); ++j)
        if (adj_[i][j]) out.insert(names_[j]);
    return out;
}

bool Graph::is_reflexive() const {
    for (int i = 0; i < size(); ++i)
        if (!adj_[i][i]) return false;
    return true;
}

bool Graph::is_irreflexive() const {
    for (int i = 0; i < size(); ++i)
        if (adj_[i][i]) return false;
    return true;
}

Graph induced(const Graph& g, const VertexSet& s) {
    for (const auto& v : s)
        if (!g.has_vertex(v)) throw std::invalid_argument("induced: '" + v + "' is not a vertex");
    std::vector<std::string> vertices(s.begin(), s.end());
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& u : s)
        for (const auto& v : s)
            if (u <= v && g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph(vertices, edges);
}

namespace {

void append_prefixed(const Graph& g, const std::string& prefix,
                     std::vector<std::string>& vertices,
                     std::vector<std::pair<std::string, std::string>>& edges) {
    for (const auto& v : g.vertices()) vertices.push_back(prefix + v);
    for (const auto& [u, v] : g.edge_list()) edges.emplace_back(prefix + u, prefix + v);
}

}  // namespace

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    append_prefixed(g1, "1.", vertices, edges);
    append_prefixed(g2, "2.", vertices, edges);
    return Graph(vertices, edges);
}

namespace {

void check_colour_classes(const Graph& g, const Bipartition& p, const char* which) {
    std::string where(which);
    if (!g.is_irreflexive()) throw std::invalid_argument(where + ": graph has a loop");
    VertexSet all;
    for (const auto& v : p.bottom) {
        if (!g.has_vertex(v)) throw std::invalid_argument(where + ": unknown vertex " + v);
        all.insert(v);
    }
    for (const auto& v : p.top) {
        if (!g.has_vertex(v)) throw std::invalid_argument(where + ": unknown vertex " + v);
        if (!all.insert(v).second)
            throw std::invalid_argument(where + ": classes overlap at " + v);
    }
    if (static_cast<int>(all.size()) != g.size())
        throw std::invalid_argument(where + ": classes do not cover the graph");
    for (const auto& [u, v] : g.edge_list()) {
        bool crosses = (p.bottom.count(u) && p.top.count(v)) ||
                       (p.bottom.count(v) && p.top.count(u));
        if (!crosses)
            throw std::invalid_argument(where + ": edge " + u + "-" + v + " inside a class");
    }
}

}  // namespace

Graph special_sum(const Graph& h1, const Bipartition& p1,
                  const Graph& h2, const Bipartition& p2) {
    check_colour_classes(h1, p1, "special_sum: first operand");
    check_colour_classes(h2, p2, "special_sum: second operand");
    if (p1.top.empty()) throw std::invalid_argument("special_sum: top class of first operand empty");
    if (p2.bottom.empty()) throw std::invalid_argument("special_sum: bottom class of second operand empty");
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    append_prefixed(h1, "1.", vertices, edges);
    append_prefixed(h2, "2.", vertices, edges);
    for (const auto& t : p1.top)
        for (const auto& b : p2.bottom) edges.emplace_back("1." + t, "2." + b);
    Graph out(vertices, edges);
    if (!is_bipartite(out)) throw std::logic_error("special_sum: result not bipartite");
    return out;
}

Graph adjunction(const Graph& h1, const Graph& h2) {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    append_prefixed(h1, "1.", vertices, edges);
    append_prefixed(h2, "2.", vertices, edges);
    for (const auto& x : h1.loops())
        for (const auto& y : h2.vertices()) edges.emplace_back("1." + x, "2." + y);
    return Graph(vertices, edges);
}

Graph complete_top(const Graph& g, const VertexSet& top) {
    auto edges = g.edge_list();
    for (const auto& t : top) {
        if (!g.has_vertex(t)) throw std::invalid_argument("complete_top: unknown vertex " + t);
        for (const auto& u : top)
            if (t <= u) edges.emplace_back(t, u);
    }
    return Graph(g.vertices(), edges);
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
    const int n = g.size();
    std::vector<int> colour(n, -1);
    Bipartition out;
    for (int start = 0; start < n; ++start) {
        if (colour[start] != -1) continue;
        colour[start] = 0;
        std::vector<int> queue{start};
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            if (g.adjacent(u, u)) return std::nullopt;
            for (int v = 0; v < n; ++v) {
                if (!g.adjacent(u, v) || v == u) continue;
                if (colour[v] == -1) {
                    colour[v] = 1 - colour[u];
                    queue.push_back(v);
                } else if (colour[v] == colour[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (int i = 0; i < n; ++i)
        (colour[i] == 0 ? out.bottom : out.top).insert(g.name_of(i));
    return out;
}

Graph direct_square(const Graph& g) {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    auto pair_name = [&](int i, int j) {
        return "(" + g.name_of(i) + "," + g.name_of(j) + ")";
    };
    const int n = g.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) vertices.push_back(pair_name(i, j));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    if (g.adjacent(a, c) && g.adjacent(b, d))
                        edges.emplace_back(pair_name(a, b), pair_name(c, d));
    return Graph(vertices, edges);
}

std::vector<VertexSet> components(const Graph& g) {
    const int n = g.size();
    std::vector<bool> visited(n, false);
    std::vector<VertexSet> out;
    for (int start = 0; start < n; ++start) {
        if (visited[start]) continue;
        VertexSet comp;
        std::vector<int> queue{start};
        visited[start] = true;
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            comp.insert(g.name_of(u));
            for (int v = 0; v < n; ++v)
                if (g.adjacent(u, v) && !visited[v]) {
                    visited[v] = true;
                    queue.push_back(v);
                }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

std::optional<std::map<std::string, std::string>> is_isomorphic(const Graph& g1, const Graph& g2) {
    const int n = g1.size();
    if (n != g2.size()) return std::nullopt;
    // cheap signature screen
    auto signature = [](const Graph& g) {
        std::vector<std::pair<bool, int>> sig;
        for (int i = 0; i < g.size(); ++i) sig.emplace_back(g.loop_at(i), g.degree(i));
        std::sort(sig.begin(), sig.end());
        return sig;
    };
    if (signature(g1) != signature(g2)) return std::nullopt;

    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> extend = [&](int u) -> bool {
        if (u == n) return true;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            if (g1.loop_at(u) != g2.loop_at(v)) continue;
            if (g1.degree(u) != g2.degree(v)) continue;
            bool ok = true;
            for (int w = 0; w < u && ok; ++w)
                if (g1.adjacent(u, w) != g2.adjacent(v, image[w])) ok = false;
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
    for (int u = 0; u < n; ++u) out[g1.name_of(u)] = g2.name_of(image[u]);
    return out;
}

}  // namespace lhom
