#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lhom {

using VertexSet = std::set<std::string>;

/// Thrown by Graph::parse and ListInstance::parse with a 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Finite undirected graph, loops permitted. Vertices are named strings and
/// every iteration order is sorted by name, so all derived objects are
/// reproducible. Immutable after construction.
class Graph {
public:
    Graph() = default;
    Graph(const std::vector<std::string>& vertices,
          const std::vector<std::pair<std::string, std::string>>& edges);

    // Text format: '#' comments, 'v <name>' declarations, 'e <u> <v>' edges,
    // 'e x x' is a loop.
    static Graph parse(const std::string& text);
    std::string serialize() const;

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& vertices() const { return names_; }
    VertexSet vertex_set() const { return VertexSet(names_.begin(), names_.end()); }
    bool has_vertex(const std::string& v) const;
    int index_of(const std::string& v) const;  // throws std::out_of_range if absent
    const std::string& name_of(int i) const { return names_.at(i); }

    bool adjacent(int i, int j) const { return adj_[i][j]; }
    bool adjacent(const std::string& u, const std::string& v) const;
    bool loop_at(int i) const { return adj_[i][i]; }
    bool loop_at(const std::string& v) const;
    int degree(int i) const;

    // Sorted edge list; a loop appears as (v, v), other edges with u < v.
    std::vector<std::pair<std::string, std::string>> edge_list() const;

    VertexSet loops() const;
    VertexSet nonloops() const;
    VertexSet neighbours(const std::string& v) const;

    bool is_reflexive() const;
    bool is_irreflexive() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::string> names_;       // sorted, unique
    std::vector<std::vector<bool>> adj_;   // symmetric adjacency
};

/// Colour classes of an irreflexive bipartite graph: every edge joins
/// bottom to top.
struct Bipartition {
    VertexSet bottom;
    VertexSet top;
};

Graph induced(const Graph& g, const VertexSet& s);

// Vertex names are prefixed "1." / "2." so the operands never collide.
Graph disjoint_union(const Graph& g1, const Graph& g2);

// Disjoint union plus the complete join top(h1) x bottom(h2). Both inputs
// must be irreflexive and bipartite with the given classes; the result is
// checked to be bipartite again.
Graph special_sum(const Graph& h1, const Bipartition& p1,
                  const Graph& h2, const Bipartition& p2);

// Disjoint union plus every edge {x,y} with x a loop of h1, y any vertex
// of h2.
Graph adjunction(const Graph& h1, const Graph& h2);

// Adds every edge (including loops) between vertices of `top`.
Graph complete_top(const Graph& g, const VertexSet& top);

// Per-component 2-colouring; the smallest vertex of each component lands in
// bottom. Empty optional if some component has an odd closed walk (loops
// count).
std::optional<Bipartition> is_bipartite(const Graph& g);

// Vertices are ordered pairs named "(u,v)"; (u1,u2)-(v1,v2) is an edge iff
// u1-v1 and u2-v2 both are.
Graph direct_square(const Graph& g);

// Connected components, each as a vertex set, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

bool is_connected(const Graph& g);

// Backtracking isomorphism test with loop/degree pruning; meant for the
// small graphs this library works with. Returns a vertex bijection g1 -> g2.
std::optional<std::map<std::string, std::string>> is_isomorphic(const Graph& g1, const Graph& g2);

}  // namespace lhom
