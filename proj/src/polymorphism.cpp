#include "lhom/polymorphism.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace lhom {

TernaryTable::TernaryTable(const Graph& h, std::vector<int> values)
    : domain_(h.vertices()), values_(std::move(values)) {
    const int n = size();
    if (static_cast<long long>(values_.size()) != 1LL * n * n * n)
        throw std::invalid_argument("ternary table: wrong number of entries");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                int v = value(i, j, k);
                if (v != i && v != j && v != k)
                    throw std::invalid_argument("ternary table: entry not conservative");
            }
}

std::string TernaryTable::value(const std::string& x, const std::string& y,
                                const std::string& z) const {
    auto idx = [&](const std::string& v) {
        auto it = std::lower_bound(domain_.begin(), domain_.end(), v);
        if (it == domain_.end() || *it != v) throw std::out_of_range("no such vertex: " + v);
        return static_cast<int>(it - domain_.begin());
    };
    return domain_[value(idx(x), idx(y), idx(z))];
}

std::vector<std::string> TernaryTable::rows() const {
    std::vector<std::string> out;
    const int n = size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                std::ostringstream row;
                row << domain_[i] << " " << domain_[j] << " " << domain_[k] << " -> "
                    << domain_[value(i, j, k)];
                out.push_back(row.str());
            }
    return out;
}

bool is_polymorphism(const Graph& h, const TernaryTable& f) {
    if (f.domain() != h.vertices())
        throw std::invalid_argument("is_polymorphism: table domain mismatch");
    const int n = h.size();
    std::vector<std::pair<int, int>> arcs;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (h.adjacent(a, b)) arcs.emplace_back(a, b);
    for (const auto& [a, a2] : arcs)
        for (const auto& [b, b2] : arcs)
            for (const auto& [c, c2] : arcs)
                if (!h.adjacent(f.value(a, b, c), f.value(a2, b2, c2))) return false;
    return true;
}

bool satisfies_majority(const TernaryTable& f) {
    const int n = f.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                int v = f.value(i, j, k);
                if (i == j && v != i) return false;
                if (i == k && v != i) return false;
                if (j == k && v != j) return false;
            }
    return true;
}

bool satisfies_chain_identities(const PermutabilityChain& c) {
    const int n = c.f1.size();
    if (c.f2.size() != n || c.f3.size() != n) return false;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (c.f1.value(x, y, y) != x) return false;
            if (c.f1.value(x, x, y) != c.f2.value(x, y, y)) return false;
            if (c.f2.value(x, x, y) != c.f3.value(x, y, y)) return false;
            if (c.f3.value(x, x, y) != y) return false;
        }
    return true;
}

bool verify_chain(const Graph& h, const PermutabilityChain& c) {
    if (!satisfies_chain_identities(c)) return false;
    return is_polymorphism(h, c.f1) && is_polymorphism(h, c.f2) && is_polymorphism(h, c.f3);
}

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::None: return "none";
        case SearchStatus::Exhausted: return "exhausted";
    }
    throw std::logic_error("unknown status");
}

namespace {

struct BudgetExceeded {};

// CSP over undetermined table entries. Cells are table entries; linked
// entries share one variable. The only constraint shape is "images of
// adjacent cells are adjacent", so supports are bitmask intersections.
class TableSearch {
public:
    TableSearch(const Graph& h, int tables, long long budget)
        : n_(h.size()), tables_(tables), budget_(budget) {
        if (n_ > 64)
            throw std::invalid_argument("polymorphism search supports at most 64 vertices");
        nbr_.assign(n_, 0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (h.adjacent(i, j)) nbr_[i] |= 1ULL << j;
        cell_var_.assign(static_cast<size_t>(tables_) * n_ * n_ * n_, -1);
        cell_fixed_.assign(cell_var_.size(), -1);
    }

    long long steps() const { return steps_; }

    int cell(int t, int i, int j, int k) const { return ((t * n_ + i) * n_ + j) * n_ + k; }

    void fix(int c, int value) { cell_fixed_[c] = value; }

    int add_var(std::vector<int> order) {
        Var v;
        v.order = std::move(order);
        for (int x : v.order) v.domain |= 1ULL << x;
        vars_.push_back(std::move(v));
        return static_cast<int>(vars_.size()) - 1;
    }

    void attach(int c, int var) {
        cell_var_[c] = var;
        vars_[var].cells.push_back(c);
    }

    // Found -> tables' values written to out (tables_ * n^3 entries).
    SearchStatus run(std::vector<int>& out) {
        try {
            if (!initial_consistency()) return SearchStatus::None;
            if (!search()) return SearchStatus::None;
        } catch (const BudgetExceeded&) {
            return SearchStatus::Exhausted;
        }
        out.assign(cell_var_.size(), -1);
        for (size_t c = 0; c < cell_var_.size(); ++c) {
            if (cell_var_[c] >= 0)
                out[c] = std::countr_zero(vars_[cell_var_[c]].domain);
            else
                out[c] = cell_fixed_[c];
        }
        return SearchStatus::Found;
    }

private:
    struct Var {
        uint64_t domain = 0;
        std::vector<int> order;  // value preference
        std::vector<int> cells;  // table entries bound to this variable
    };

    uint64_t cell_domain(int c) const {
        return cell_var_[c] >= 0 ? vars_[cell_var_[c]].domain : (1ULL << cell_fixed_[c]);
    }

    void charge() {
        if (++steps_ > budget_) throw BudgetExceeded{};
    }

    // Prune the owner of cell c so every value keeps a neighbour in `support`;
    // records changed vars on the trail. Returns false on wipe-out.
    bool revise_cell(int c, uint64_t support, std::vector<int>& dirty) {
        charge();
        if (cell_var_[c] < 0) return (nbr_[cell_fixed_[c]] & support) != 0;
        Var& v = vars_[cell_var_[c]];
        uint64_t kept = 0;
        for (uint64_t d = v.domain; d; d &= d - 1) {
            int x = std::countr_zero(d);
            charge();
            if (nbr_[x] & support) kept |= 1ULL << x;
        }
        if (kept == v.domain) return true;
        trail_.emplace_back(cell_var_[c], v.domain);
        v.domain = kept;
        if (!kept) return false;
        dirty.push_back(cell_var_[c]);
        return true;
    }

    template <typename Fn>
    void for_each_neighbour(int c, Fn&& fn) const {
        int rest = c;
        int k = rest % n_; rest /= n_;
        int j = rest % n_; rest /= n_;
        int i = rest % n_; rest /= n_;
        int t = rest;
        for (uint64_t di = nbr_[i]; di; di &= di - 1) {
            int i2 = std::countr_zero(di);
            for (uint64_t dj = nbr_[j]; dj; dj &= dj - 1) {
                int j2 = std::countr_zero(dj);
                for (uint64_t dk = nbr_[k]; dk; dk &= dk - 1) {
                    int k2 = std::countr_zero(dk);
                    fn(cell(t, i2, j2, k2));
                }
            }
        }
    }

    bool propagate(std::vector<int> dirty) {
        while (!dirty.empty()) {
            int w = dirty.back();
            dirty.pop_back();
            uint64_t support = vars_[w].domain;
            for (int c : vars_[w].cells) {
                bool ok = true;
                for_each_neighbour(c, [&](int d) {
                    if (ok && !revise_cell(d, support, dirty)) ok = false;
                });
                if (!ok) return false;
            }
        }
        return true;
    }

    bool initial_consistency() {
        std::vector<int> dirty;
        for (size_t c = 0; c < cell_var_.size(); ++c) {
            bool ok = true;
            for_each_neighbour(static_cast<int>(c), [&](int d) {
                if (ok && !revise_cell(static_cast<int>(c), cell_domain(d), dirty)) ok = false;
            });
            if (!ok) return false;
        }
        return propagate(std::move(dirty));
    }

    int pick_var() const {
        int best = -1, best_count = 65;
        for (size_t v = 0; v < vars_.size(); ++v) {
            int c = std::popcount(vars_[v].domain);
            if (c >= 2 && c < best_count) {
                best = static_cast<int>(v);
                best_count = c;
            }
        }
        return best;
    }

    bool search() {
        int v = pick_var();
        if (v < 0) return true;
        size_t mark = trail_.size();
        for (int x : vars_[v].order) {
            if (!(vars_[v].domain & (1ULL << x))) continue;
            trail_.emplace_back(v, vars_[v].domain);
            vars_[v].domain = 1ULL << x;
            if (propagate({v}) && search()) return true;
            while (trail_.size() > mark) {
                auto [w, dom] = trail_.back();
                trail_.pop_back();
                vars_[w].domain = dom;
            }
        }
        return false;
    }

    int n_;
    int tables_;
    long long budget_;
    long long steps_ = 0;
    std::vector<uint64_t> nbr_;
    std::vector<int> cell_var_;
    std::vector<int> cell_fixed_;
    std::vector<Var> vars_;
    std::vector<std::pair<int, uint64_t>> trail_;
};

}  // namespace

MajorityResult find_conservative_majority(const Graph& h, long long budget) {
    const int n = h.size();
    TableSearch cs(h, 1, budget);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                int c = cs.cell(0, i, j, k);
                if (i == j || i == k)
                    cs.fix(c, i);
                else if (j == k)
                    cs.fix(c, j);
                else
                    cs.attach(c, cs.add_var({i, j, k}));
            }
    std::vector<int> values;
    SearchStatus status = cs.run(values);
    if (status != SearchStatus::Found) return {status, std::nullopt, cs.steps()};
    return {status, TernaryTable(h, std::move(values)), cs.steps()};
}

ChainResult find_permutability_chain(const Graph& h, long long budget) {
    const int n = h.size();
    TableSearch cs(h, 3, budget);
    // Linking variables shared between consecutive tables: the value of
    // f_t(x,x,y) equals f_{t+1}(x,y,y).
    std::vector<int> link1(n * n, -1), link2(n * n, -1);
    auto link_var = [&](std::vector<int>& link, int x, int y) {
        int& id = link[x * n + y];
        if (id < 0) id = cs.add_var({x, y});
        return id;
    };
    for (int t = 0; t < 3; ++t)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    int c = cs.cell(t, i, j, k);
                    if (i == j && j == k) {
                        cs.fix(c, i);
                    } else if (i == j) {  // (x,x,y)
                        if (t == 0)
                            cs.attach(c, link_var(link1, i, k));
                        else if (t == 1)
                            cs.attach(c, link_var(link2, i, k));
                        else
                            cs.fix(c, k);
                    } else if (j == k) {  // (x,y,y)
                        if (t == 0)
                            cs.fix(c, i);
                        else if (t == 1)
                            cs.attach(c, link_var(link1, i, j));
                        else
                            cs.attach(c, link_var(link2, i, j));
                    } else if (i == k) {  // (x,y,x): unconstrained by the identities
                        cs.attach(c, cs.add_var({i, j}));
                    } else {
                        cs.attach(c, cs.add_var({i, j, k}));
                    }
                }
    std::vector<int> values;
    SearchStatus status = cs.run(values);
    if (status != SearchStatus::Found) return {status, std::nullopt, cs.steps()};
    const int stride = n * n * n;
    auto table = [&](int t) {
        return TernaryTable(h, std::vector<int>(values.begin() + t * stride,
                                                values.begin() + (t + 1) * stride));
    };
    return {status, PermutabilityChain{table(0), table(1), table(2)}, cs.steps()};
}

}  // namespace lhom
