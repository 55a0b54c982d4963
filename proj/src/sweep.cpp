#include "lhom/sweep.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <thread>

#include "lhom/classify.hpp"

namespace lhom {

namespace {

const char* kNames[] = {"a", "b", "c", "d", "e", "f"};

}  // namespace

std::uint64_t pair_slots(int n) { return static_cast<std::uint64_t>(n) * (n + 1) / 2; }

Graph graph_from_code(int n, std::uint64_t code) {
    if (n > 6) throw std::invalid_argument("graph_from_code: at most 6 vertices");
    std::vector<std::string> vertices(kNames, kNames + n);
    std::vector<std::pair<std::string, std::string>> edges;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j, ++bit)
            if (code & (1ULL << bit)) edges.emplace_back(kNames[i], kNames[j]);
    return Graph(vertices, edges);
}

namespace {

std::uint64_t permuted_code(int n, std::uint64_t code, const std::vector<int>& perm) {
    auto slot = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        // index of (i,j) with pairs (0,0)..(0,n-1),(1,1)..
        return i * n - i * (i - 1) / 2 + (j - i);
    };
    std::uint64_t out = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (code & (1ULL << slot(i, j))) out |= 1ULL << slot(perm[i], perm[j]);
    return out;
}

bool is_canonical_code(int n, std::uint64_t code) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    while (std::next_permutation(perm.begin(), perm.end()))
        if (permuted_code(n, code, perm) < code) return false;
    return true;
}

struct Shard {
    SweepReport report;
};

void note(Shard& shard, int n, std::uint64_t code, const Graph& h, const std::string& check,
          const std::string& detail) {
    shard.report.divergences.push_back({n, code, check, detail, h.serialize()});
}

void check_patterns_decompose(Shard& shard, int n, std::uint64_t code, const Graph& h) {
    bool member = in_class_l(h);
    auto tree = decompose(h);
    if (member != tree.has_value()) {
        note(shard, n, code, h, "patterns-decompose",
             member ? "pattern-free but no decomposition" : "decomposed despite a pattern");
        return;
    }
    if (tree && !validate_tree(h, *tree)) {
        note(shard, n, code, h, "patterns-decompose", "tree fails validation");
        return;
    }
    if (member) {
        // membership is hereditary: every induced subgraph stays pattern-free
        auto vertices = h.vertices();
        for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
            VertexSet s;
            for (int i = 0; i < n; ++i)
                if (mask & (1ULL << i)) s.insert(vertices[i]);
            if (!in_class_l(induced(h, s))) {
                note(shard, n, code, h, "patterns-decompose", "membership not hereditary");
                return;
            }
        }
    }
}

void check_chain_membership(Shard& shard, int n, std::uint64_t code, const Graph& h,
                            long long budget) {
    bool member = in_class_l(h);
    auto r = find_permutability_chain(h, budget);
    if (r.status == SearchStatus::Exhausted) {
        ++shard.report.exhausted_searches;
        note(shard, n, code, h, "chain-membership", "search exhausted");
        return;
    }
    bool found = r.status == SearchStatus::Found;
    if (found != member) {
        note(shard, n, code, h, "chain-membership",
             member ? "member without chain" : "chain on a non-member");
        return;
    }
    if (found && !verify_chain(h, *r.chain))
        note(shard, n, code, h, "chain-membership", "chain fails verification");
}

void check_majority_membership(Shard& shard, int n, std::uint64_t code, const Graph& h,
                               long long budget) {
    bool member = in_class_l(h);
    auto r = find_conservative_majority(h, budget);
    if (r.status == SearchStatus::Exhausted) {
        ++shard.report.exhausted_searches;
        if (member) note(shard, n, code, h, "majority-membership", "member search exhausted");
        return;
    }
    if (member && r.status != SearchStatus::Found) {
        note(shard, n, code, h, "majority-membership", "member admits no majority");
        return;
    }
    if (r.status == SearchStatus::Found &&
        (!satisfies_majority(*r.table) || !is_polymorphism(h, *r.table)))
        note(shard, n, code, h, "majority-membership", "table fails verification");
}

void check_fo_dismantle(Shard& shard, int n, std::uint64_t code, const Graph& h) {
    auto cert = fo_structural(h);
    auto fwd = dismantle_square(h, ScanOrder::Forward);
    auto rev = dismantle_square(h, ScanOrder::Reverse);
    if (fwd.success != rev.success) {
        note(shard, n, code, h, "fo-dismantle", "scan orders disagree");
        return;
    }
    if (cert.has_value() != fwd.success) {
        note(shard, n, code, h, "fo-dismantle",
             cert ? "structural form but square stuck" : "dismantles without structural form");
        return;
    }
    if (fwd.success && (!validate_sequence(h, fwd.sequence) || !validate_sequence(h, rev.sequence)))
        note(shard, n, code, h, "fo-dismantle", "sequence fails validation");
}

ListInstance random_instance(const Graph& h, std::mt19937& rng) {
    ListInstance inst;
    int nvars = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < nvars; ++i) {
        VertexSet list;
        for (const auto& v : h.vertices())
            if (rng() % 2) list.insert(v);
        inst.add_variable("x" + std::to_string(i), list);
    }
    for (int i = 0; i < nvars; ++i)
        for (int j = i; j < nvars; ++j)
            if (rng() % 3 == 0) inst.add_constraint(inst.variables[i], inst.variables[j]);
    return inst;
}

// Ground truth by full enumeration of |H|^{vars} assignments.
struct BruteForce {
    bool sat = false;
    std::map<std::string, VertexSet> used_values;
    PairSet projection;
};

BruteForce brute_force(const Graph& h, const ListInstance& inst, const std::string& s1,
                       const std::string& s2) {
    BruteForce out;
    const int n = h.size();
    const int k = static_cast<int>(inst.variables.size());
    std::vector<int> pick(k, 0);
    if (n == 0) return out;
    while (true) {
        Assignment a;
        for (int i = 0; i < k; ++i) a[inst.variables[i]] = h.name_of(pick[i]);
        if (assignment_valid(h, inst, a)) {
            out.sat = true;
            for (const auto& [var, val] : a) out.used_values[var].insert(val);
            out.projection.emplace(a.at(s1), a.at(s2));
        }
        int i = 0;
        while (i < k && ++pick[i] == n) pick[i++] = 0;
        if (i == k) break;
    }
    return out;
}

void check_solver_bruteforce(Shard& shard, int n, std::uint64_t code, const Graph& h,
                             unsigned seed, int rounds) {
    std::mt19937 rng(seed ^ static_cast<unsigned>(code * 2654435761u) ^ (n << 28));
    for (int round = 0; round < rounds; ++round) {
        ListInstance inst = random_instance(h, rng);
        const auto& s1 = inst.variables[rng() % inst.variables.size()];
        const auto& s2 = inst.variables[rng() % inst.variables.size()];
        BruteForce truth = brute_force(h, inst, s1, s2);
        auto sol = solve(h, inst);
        if (sol.has_value() != truth.sat) {
            note(shard, n, code, h, "solver-bruteforce", "solve disagrees with enumeration");
            return;
        }
        if (sol && !assignment_valid(h, inst, *sol)) {
            note(shard, n, code, h, "solver-bruteforce", "solution fails validation");
            return;
        }
        auto ac = arc_consistency(h, inst);
        if (truth.sat) {
            if (!ac.ok) {
                note(shard, n, code, h, "solver-bruteforce", "propagation emptied a sat instance");
                return;
            }
            for (const auto& [var, values] : truth.used_values)
                for (const auto& v : values)
                    if (!ac.reduced.lists.at(var).count(v)) {
                        note(shard, n, code, h, "solver-bruteforce",
                             "propagation removed a solution value");
                        return;
                    }
        }
        if (enumerate_endpoint_relation(h, inst, s1, s2) != truth.projection) {
            note(shard, n, code, h, "solver-bruteforce", "projection disagrees with enumeration");
            return;
        }
    }
}

void check_verdicts(Shard& shard, int n, std::uint64_t code, const Graph& h, long long budget) {
    try {
        auto rep = classify(h, Budgets{budget});
        ++shard.report.verdict_histogram[verdict_name(rep.verdict)];
        if (rep.verdict == Verdict::Inconclusive) ++shard.report.exhausted_searches;
    } catch (const std::logic_error& e) {
        note(shard, n, code, h, "verdicts", e.what());
    }
}

}  // namespace

SweepReport run_sweep(const SweepOptions& options) {
    if (options.max_n > 6) throw std::invalid_argument("sweep: max-n capped at 6");
    std::set<std::string> checks = options.checks.empty() ? sweep_check_names() : options.checks;
    for (const auto& c : checks)
        if (!sweep_check_names().count(c)) throw std::invalid_argument("sweep: unknown check " + c);

    SweepReport total;
    for (int n = 0; n <= options.max_n; ++n) {
        const std::uint64_t count = 1ULL << pair_slots(n);
        int workers = options.parallel > 0
                          ? options.parallel
                          : std::max(1u, std::thread::hardware_concurrency());
        if (static_cast<std::uint64_t>(workers) > count) workers = static_cast<int>(count);
        std::vector<Shard> shards(workers);
        std::vector<std::thread> threads;
        std::uint64_t chunk = (count + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                std::uint64_t lo = w * chunk;
                std::uint64_t hi = std::min(count, lo + chunk);
                for (std::uint64_t code = lo; code < hi; ++code) {
                    if (options.dedup && !is_canonical_code(n, code)) continue;
                    Graph h = graph_from_code(n, code);
                    ++shards[w].report.graphs_per_size[n];
                    if (checks.count("patterns-decompose"))
                        check_patterns_decompose(shards[w], n, code, h);
                    if (checks.count("chain-membership"))
                        check_chain_membership(shards[w], n, code, h, options.budget);
                    if (checks.count("majority-membership"))
                        check_majority_membership(shards[w], n, code, h, options.budget);
                    if (checks.count("fo-dismantle")) check_fo_dismantle(shards[w], n, code, h);
                    if (checks.count("solver-bruteforce"))
                        check_solver_bruteforce(shards[w], n, code, h, options.seed,
                                                options.instances_per_graph);
                    if (checks.count("verdicts"))
                        check_verdicts(shards[w], n, code, h, options.budget);
                }
            });
        }
        for (auto& t : threads) t.join();
        for (auto& s : shards) {
            for (const auto& [k, v] : s.report.graphs_per_size) total.graphs_per_size[k] += v;
            for (const auto& [k, v] : s.report.verdict_histogram) total.verdict_histogram[k] += v;
            total.exhausted_searches += s.report.exhausted_searches;
            total.divergences.insert(total.divergences.end(), s.report.divergences.begin(),
                                     s.report.divergences.end());
        }
    }
    std::sort(total.divergences.begin(), total.divergences.end(),
              [](const Divergence& a, const Divergence& b) {
                  return std::tie(a.n, a.code, a.check) < std::tie(b.n, b.code, b.check);
              });
    return total;
}

std::string format_sweep(const SweepReport& report) {
    std::ostringstream out;
    std::uint64_t total = 0;
    for (const auto& [n, count] : report.graphs_per_size) {
        out << "n=" << n << ": " << count << " graphs\n";
        total += count;
    }
    out << "total: " << total << " graphs\n";
    if (!report.verdict_histogram.empty()) {
        out << "verdicts:";
        for (const auto& [name, count] : report.verdict_histogram)
            out << " " << name << "=" << count;
        out << "\n";
    }
    out << "exhausted-searches: " << report.exhausted_searches << "\n";
    out << "divergences: " << report.divergences.size() << "\n";
    for (const auto& d : report.divergences) {
        out << "divergence n=" << d.n << " code=" << d.code << " check=" << d.check << " ("
            << d.detail << ")\n";
        std::istringstream g(d.graph_text);
        std::string line;
        while (std::getline(g, line)) out << "    " << line << "\n";
    }
    return out.str();
}

}  // namespace lhom
