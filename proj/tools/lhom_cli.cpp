#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lhom/classify.hpp"
#include "lhom/sweep.hpp"

using namespace lhom;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph(const std::string& path) { return Graph::parse(slurp(path)); }

void print_witness(const PatternWitness& w) {
    for (const auto& [p, h] : w.embedding)
        std::cout << to_string(w.pattern) << ": " << p << " -> " << h << "\n";
}

void print_table(const TernaryTable& t, const std::string& prefix) {
    for (const auto& row : t.rows()) std::cout << prefix << " " << row << "\n";
}

int run_classify(const std::string& path, long long budget, bool json, bool timings) {
    Graph h = load_graph(path);
    auto rep = classify(h, Budgets{budget});
    if (json) {
        std::cout << report_to_json(rep, timings);
        return 0;
    }
    std::cout << "verdict: " << verdict_name(rep.verdict) << "\n";
    if (rep.majority_status)
        std::cout << "majority: " << to_string(*rep.majority_status) << " ("
                  << rep.majority_steps << " steps)\n";
    if (rep.chain_status)
        std::cout << "chain: " << to_string(*rep.chain_status) << " (" << rep.chain_steps
                  << " steps)\n";
    if (rep.witness) {
        std::cout << "pattern: " << to_string(rep.witness->pattern);
        for (const auto& [p, hv] : rep.witness->embedding) std::cout << " " << p << "->" << hv;
        std::cout << "\n";
    }
    if (rep.gadget_relation) {
        std::cout << "gadget: " << to_string(rep.gadget_relation->shape);
        if (rep.gadget_relation->shape == RelationShape::TwoElementOrder)
            std::cout << " on (" << rep.gadget_relation->order_pair.first << ","
                      << rep.gadget_relation->order_pair.second << ")";
        std::cout << "\n";
    }
    if (rep.tree) std::cout << "decomposition:\n" << format_tree(*rep.tree);
    if (rep.dismantling)
        std::cout << "dismantling: " << rep.dismantling->steps.size() << " removals\n";
    if (timings) std::cout << "elapsed: " << rep.elapsed_ms << " ms\n";
    return 0;
}

int run_patterns(const std::string& path) {
    Graph h = load_graph(path);
    auto w = find_pattern(h);
    if (!w) {
        std::cout << "in-L\n";
        return 0;
    }
    print_witness(*w);
    return 0;
}

int run_decompose(const std::string& path) {
    Graph h = load_graph(path);
    auto tree = decompose(h);
    if (tree) {
        std::cout << format_tree(*tree);
        return 0;
    }
    std::cout << "not-in-L\n";
    if (auto w = find_pattern(h)) print_witness(*w);
    return 0;
}

int run_majority(const std::string& path, long long budget) {
    Graph h = load_graph(path);
    auto r = find_conservative_majority(h, budget);
    std::cout << to_string(r.status) << "\n";
    if (r.table) print_table(*r.table, "f");
    switch (r.status) {
        case SearchStatus::Found: return 0;
        case SearchStatus::None: return 1;
        case SearchStatus::Exhausted: return 2;
    }
    return 2;
}

int run_chain(const std::string& path, long long budget) {
    Graph h = load_graph(path);
    auto r = find_permutability_chain(h, budget);
    std::cout << to_string(r.status) << "\n";
    if (r.chain) {
        print_table(r.chain->f1, "f1");
        print_table(r.chain->f2, "f2");
        print_table(r.chain->f3, "f3");
    }
    switch (r.status) {
        case SearchStatus::Found: return 0;
        case SearchStatus::None: return 1;
        case SearchStatus::Exhausted: return 2;
    }
    return 2;
}

int run_fo(const std::string& path) {
    Graph h = load_graph(path);
    auto r = dismantle_square(h);
    if (r.success) {
        std::cout << "FO\n";
        for (const auto& s : r.sequence.steps)
            std::cout << "remove (" << s.removed.first << "," << s.removed.second << ") by ("
                      << s.dominator.first << "," << s.dominator.second << ")\n";
        return 0;
    }
    std::cout << "not-FO\n";
    std::cout << "stuck:";
    for (const auto& p : r.stuck) std::cout << " (" << p.first << "," << p.second << ")";
    std::cout << "\n";
    return 0;
}

int run_solve(const std::string& template_path, const std::string& instance_path) {
    Graph h = load_graph(template_path);
    ListInstance inst = ListInstance::parse(slurp(instance_path));
    for (const auto& [v, list] : inst.lists)
        for (const auto& a : list)
            if (!h.has_vertex(a))
                throw std::runtime_error("list of " + v + " mentions unknown vertex " + a);
    auto sol = solve(h, inst);
    if (!sol) {
        std::cout << "unsat\n";
        return 0;
    }
    std::cout << "sat\n";
    for (const auto& v : inst.variables) std::cout << v << " -> " << sol->at(v) << "\n";
    return 0;
}

int run_gadget(const std::string& name) {
    auto pname = pattern_from_string(name);
    if (!pname) throw std::runtime_error("unknown pattern " + name);
    auto it = builtin_gadgets().find(*pname);
    if (it == builtin_gadgets().end()) throw std::runtime_error("no gadget for " + name);
    const Gadget& gadget = it->second;
    std::cout << "lists:";
    for (const auto& list : gadget.lists) {
        std::cout << " {";
        bool first = true;
        for (const auto& v : list) {
            if (!first) std::cout << ",";
            std::cout << v;
            first = false;
        }
        std::cout << "}";
    }
    std::cout << "\n";
    auto ev = evaluate_gadget(pattern(*pname).graph, gadget);
    std::cout << "relation:";
    for (const auto& [x, y] : ev.relation) std::cout << " (" << x << "," << y << ")";
    std::cout << "\n";
    std::cout << "verdict: " << to_string(ev.shape);
    if (ev.shape == RelationShape::TwoElementOrder)
        std::cout << " on (" << ev.order_pair.first << "," << ev.order_pair.second << ")";
    std::cout << "\n";
    return 0;
}

int run_sweep_cmd(int max_n, const std::string& checks_csv, int parallel, long long budget,
                  bool dedup, unsigned seed) {
    SweepOptions opt;
    opt.max_n = max_n;
    opt.parallel = parallel;
    opt.budget = budget;
    opt.dedup = dedup;
    opt.seed = seed;
    if (!checks_csv.empty() && checks_csv != "all") {
        std::istringstream ss(checks_csv);
        std::string item;
        while (std::getline(ss, item, ',')) opt.checks.insert(item);
    }
    auto rep = run_sweep(opt);
    std::cout << format_sweep(rep);
    return rep.divergences.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"list homomorphism complexity classifier"};
    app.require_subcommand(1);

    std::string file, template_file, instance_file, pattern_name;
    std::string checks = "all";
    long long budget = kDefaultBudget;
    bool json = false, timings = false, dedup = false;
    int max_n = 4, parallel = 0;
    unsigned seed = 1;

    auto* c_classify = app.add_subcommand("classify", "four-way complexity verdict with evidence");
    c_classify->add_option("file", file)->required();
    c_classify->add_option("--budget", budget, "search step budget");
    c_classify->add_flag("--json", json, "emit the JSON report");
    c_classify->add_flag("--timings", timings, "include wall-clock timing (not byte-stable)");

    auto* c_patterns = app.add_subcommand("patterns", "forbidden induced pattern search");
    c_patterns->add_option("file", file)->required();

    auto* c_decompose = app.add_subcommand("decompose", "construction witness for membership");
    c_decompose->add_option("file", file)->required();

    auto* c_majority = app.add_subcommand("majority", "conservative majority search");
    c_majority->add_option("file", file)->required();
    c_majority->add_option("--budget", budget);

    auto* c_chain = app.add_subcommand("chain", "chain of three linked conservative operations");
    c_chain->add_option("file", file)->required();
    c_chain->add_option("--budget", budget);

    auto* c_fo = app.add_subcommand("fo", "first-order definability via square dismantling");
    c_fo->add_option("file", file)->required();

    auto* c_solve = app.add_subcommand("solve", "decide one list homomorphism instance");
    c_solve->add_option("template", template_file)->required();
    c_solve->add_option("instance", instance_file)->required();

    auto* c_gadget = app.add_subcommand("gadget", "builtin gadget and its endpoint relation");
    c_gadget->add_option("name", pattern_name)->required();

    auto* c_sweep = app.add_subcommand("sweep", "cross-check all small graphs");
    c_sweep->add_option("--max-n", max_n, "largest vertex count (cap 6)");
    c_sweep->add_option("--checks", checks, "comma list or 'all'");
    c_sweep->add_option("--parallel", parallel, "worker threads (0 = hardware)");
    c_sweep->add_option("--budget", budget);
    c_sweep->add_flag("--dedup", dedup, "isomorphism-reduced enumeration");
    c_sweep->add_option("--seed", seed, "instance generator seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_classify->parsed()) return run_classify(file, budget, json, timings);
        if (c_patterns->parsed()) return run_patterns(file);
        if (c_decompose->parsed()) return run_decompose(file);
        if (c_majority->parsed()) return run_majority(file, budget);
        if (c_chain->parsed()) return run_chain(file, budget);
        if (c_fo->parsed()) return run_fo(file);
        if (c_solve->parsed()) return run_solve(template_file, instance_file);
        if (c_gadget->parsed()) return run_gadget(pattern_name);
        if (c_sweep->parsed()) return run_sweep_cmd(max_n, checks, parallel, budget, dedup, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 10;
    }
    return 0;
}
