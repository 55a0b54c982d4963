#include "lhom/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
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

std::pair<std::string, std::string> canonical(const std::string& x, const std::string& y) {
    return x <= y ? std::make_pair(x, y) : std::make_pair(y, x);
}

}  // namespace

void ListInstance::add_variable(const std::string& name, VertexSet list) {
    if (lists.count(name)) throw std::invalid_argument("duplicate variable '" + name + "'");
    variables.push_back(name);
    lists.emplace(name, std::move(list));
}

void ListInstance::add_constraint(const std::string& x, const std::string& y) {
    if (!lists.count(x)) throw std::invalid_argument("undeclared variable '" + x + "'");
    if (!lists.count(y)) throw std::invalid_argument("undeclared variable '" + y + "'");
    auto c = canonical(x, y);
    if (std::find(constraints.begin(), constraints.end(), c) == constraints.end())
        constraints.push_back(c);
}

std::vector<std::string> ListInstance::neighbours_of(const std::string& v) const {
    std::vector<std::string> out;
    for (const auto& [x, y] : constraints) {
        if (x == v && y != v) out.push_back(y);
        if (y == v && x != v) out.push_back(x);
    }
    return out;
}

bool ListInstance::self_constrained(const std::string& v) const {
    return std::find(constraints.begin(), constraints.end(), std::make_pair(v, v)) !=
           constraints.end();
}

ListInstance ListInstance::parse(const std::string& text) {
    ListInstance inst;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks[0] == "var") {
            if (toks.size() < 3 || toks[2] != ":")
                throw ParseError(lineno, "expected 'var <name> : <values...>'");
            if (inst.lists.count(toks[1]))
                throw ParseError(lineno, "duplicate variable '" + toks[1] + "'");
            inst.add_variable(toks[1], VertexSet(toks.begin() + 3, toks.end()));
        } else if (toks[0] == "con") {
            if (toks.size() != 3) throw ParseError(lineno, "expected 'con <x> <y>'");
            for (int k = 1; k <= 2; ++k)
                if (!inst.lists.count(toks[k]))
                    throw ParseError(lineno, "undeclared variable '" + toks[k] + "'");
            inst.add_constraint(toks[1], toks[2]);
        } else {
            throw ParseError(lineno, "unknown directive '" + toks[0] + "'");
        }
    }
    return inst;
}

std::string ListInstance::serialize() const {
    std::ostringstream out;
    for (const auto& v : variables) {
        out << "var " << v << " :";
        for (const auto& a : lists.at(v)) out << " " << a;
        out << "\n";
    }
    auto sorted = constraints;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [x, y] : sorted) out << "con " << x << " " << y << "\n";
    return out.str();
}

namespace {

// Index-based view used by propagation and search.
struct Work {
    const Graph& h;
    std::vector<std::string> vars;                    // declaration order
    std::map<std::string, int> var_index;
    std::vector<uint64_t> dom;                        // list masks
    std::vector<std::vector<int>> nbrs;               // constraint neighbours (no self)
    std::vector<bool> self_loop;                      // (v,v) constraint present
    std::vector<uint64_t> adjmask;                    // template adjacency

    Work(const Graph& g, const ListInstance& inst) : h(g) {
        if (g.size() > 64) throw std::invalid_argument("solver supports at most 64 vertices");
        adjmask.assign(g.size(), 0);
        for (int i = 0; i < g.size(); ++i)
            for (int j = 0; j < g.size(); ++j)
                if (g.adjacent(i, j)) adjmask[i] |= 1ULL << j;
        vars = inst.variables;
        for (size_t i = 0; i < vars.size(); ++i) var_index[vars[i]] = static_cast<int>(i);
        dom.assign(vars.size(), 0);
        for (size_t i = 0; i < vars.size(); ++i)
            for (const auto& a : inst.lists.at(vars[i])) dom[i] |= 1ULL << g.index_of(a);
        nbrs.assign(vars.size(), {});
        self_loop.assign(vars.size(), false);
        for (const auto& [x, y] : inst.constraints) {
            int xi = var_index.at(x), yi = var_index.at(y);
            if (xi == yi) {
                self_loop[xi] = true;
            } else {
                nbrs[xi].push_back(yi);
                nbrs[yi].push_back(xi);
            }
        }
    }

    // Fixpoint; returns index of emptied variable or -1.
    int propagate(std::vector<uint64_t>& d) const {
        for (size_t u = 0; u < vars.size(); ++u)
            if (!d[u]) return static_cast<int>(u);
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t u = 0; u < vars.size(); ++u) {
                uint64_t kept = 0;
                for (uint64_t m = d[u]; m; m &= m - 1) {
                    int a = std::countr_zero(m);
                    if (self_loop[u] && !(adjmask[a] & (1ULL << a))) continue;
                    bool supported = true;
                    for (int v : nbrs[u])
                        if (!(adjmask[a] & d[v])) { supported = false; break; }
                    if (supported) kept |= 1ULL << a;
                }
                if (kept != d[u]) {
                    d[u] = kept;
                    changed = true;
                    if (!kept) return static_cast<int>(u);
                }
            }
        }
        return -1;
    }
};

}  // namespace

AcOutcome arc_consistency(const Graph& h, const ListInstance& inst) {
    Work w(h, inst);
    auto doms = w.dom;
    int emptied = w.propagate(doms);
    if (emptied >= 0) return {false, {}, w.vars[emptied]};
    ListInstance reduced = inst;
    for (size_t i = 0; i < w.vars.size(); ++i) {
        VertexSet list;
        for (uint64_t m = doms[i]; m; m &= m - 1)
            list.insert(h.name_of(std::countr_zero(m)));
        reduced.lists[w.vars[i]] = std::move(list);
    }
    return {true, std::move(reduced), ""};
}

namespace {

std::optional<Assignment> solve_impl(const Graph& h, const ListInstance& inst,
                                     int s1, int s2, const PairSet* blocked) {
    Work w(h, inst);
    std::optional<Assignment> found;
    std::function<bool(std::vector<uint64_t>&)> dfs = [&](std::vector<uint64_t>& d) -> bool {
        if (w.propagate(d) >= 0) return false;
        if (blocked && s1 >= 0 && s2 >= 0 && std::popcount(d[s1]) == 1 &&
            std::popcount(d[s2]) == 1) {
            auto p = std::make_pair(h.name_of(std::countr_zero(d[s1])),
                                    h.name_of(std::countr_zero(d[s2])));
            if (blocked->count(p)) return false;
        }
        int pick = -1, best = 65;
        for (size_t u = 0; u < d.size(); ++u) {
            int c = std::popcount(d[u]);
            if (c >= 2 && c < best) { best = c; pick = static_cast<int>(u); }
        }
        if (pick < 0) {
            Assignment a;
            for (size_t u = 0; u < d.size(); ++u)
                a[w.vars[u]] = h.name_of(std::countr_zero(d[u]));
            found = std::move(a);
            return true;
        }
        uint64_t options = d[pick];
        for (uint64_t m = options; m; m &= m - 1) {
            int a = std::countr_zero(m);
            auto saved = d;
            d[pick] = 1ULL << a;
            if (dfs(d)) return true;
            d = std::move(saved);
        }
        return false;
    };
    auto doms = w.dom;
    dfs(doms);
    return found;
}

}  // namespace

std::optional<Assignment> solve(const Graph& h, const ListInstance& inst) {
    return solve_impl(h, inst, -1, -1, nullptr);
}

bool assignment_valid(const Graph& h, const ListInstance& inst, const Assignment& a) {
    for (const auto& v : inst.variables) {
        auto it = a.find(v);
        if (it == a.end()) return false;
        if (!inst.lists.at(v).count(it->second)) return false;
    }
    for (const auto& [x, y] : inst.constraints)
        if (!h.adjacent(a.at(x), a.at(y))) return false;
    return true;
}

bool is_path_instance(const ListInstance& inst, const std::string& s1, const std::string& s2) {
    const auto& vs = inst.variables;
    if (vs.size() < 2) return false;
    if (s1 != vs.front() || s2 != vs.back()) return false;
    std::set<std::pair<std::string, std::string>> expected;
    for (size_t i = 0; i + 1 < vs.size(); ++i)
        expected.insert(canonical(vs[i], vs[i + 1]));
    std::set<std::pair<std::string, std::string>> actual(inst.constraints.begin(),
                                                         inst.constraints.end());
    return expected == actual && expected.size() == vs.size() - 1;
}

PairSet endpoint_relation_path(const Graph& h, const ListInstance& inst,
                               const std::string& s1, const std::string& s2) {
    if (!is_path_instance(inst, s1, s2))
        throw std::invalid_argument("endpoint_relation_path: not a path instance");
    const auto& vs = inst.variables;
    const int n = h.size();
    auto list_mask = [&](const std::string& v) {
        uint64_t m = 0;
        for (const auto& a : inst.lists.at(v)) m |= 1ULL << h.index_of(a);
        return m;
    };
    // reach[a][b]: first endpoint a, current position value b
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    uint64_t first = list_mask(vs[0]);
    for (int a = 0; a < n; ++a)
        if (first & (1ULL << a)) reach[a][a] = true;
    for (size_t i = 1; i < vs.size(); ++i) {
        uint64_t allowed = list_mask(vs[i]);
        std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (!reach[a][b]) continue;
                for (int c = 0; c < n; ++c)
                    if ((allowed & (1ULL << c)) && h.adjacent(b, c)) next[a][c] = true;
            }
        reach = std::move(next);
    }
    PairSet out;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (reach[a][b]) out.emplace(h.name_of(a), h.name_of(b));
    return out;
}

PairSet endpoint_relation_blocking(const Graph& h, const ListInstance& inst,
                                   const std::string& s1, const std::string& s2) {
    Work probe(h, inst);  // validates variables and lists
    int i1 = probe.var_index.at(s1), i2 = probe.var_index.at(s2);
    PairSet blocked;
    while (true) {
        auto sol = solve_impl(h, inst, i1, i2, &blocked);
        if (!sol) break;
        blocked.emplace(sol->at(s1), sol->at(s2));
    }
    return blocked;
}

PairSet enumerate_endpoint_relation(const Graph& h, const ListInstance& inst,
                                    const std::string& s1, const std::string& s2) {
    if (is_path_instance(inst, s1, s2)) return endpoint_relation_path(h, inst, s1, s2);
    return endpoint_relation_blocking(h, inst, s1, s2);
}

}  // namespace lhom
