// Command-line front end: enumerate families, evaluate statistics, apply maps,
// tabulate joint distributions, print C_n(x,y,z), and run registered claims.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "treelab/lab.hpp"
#include "treelab/maps.hpp"
#include "treelab/statistics.hpp"

namespace {

using namespace treelab;

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

int cmd_enumerate(const std::string& family, int n, const std::string& multiset, bool jsonl) {
    FamilySpec spec;
    spec.family = family;
    spec.n = n;
    if (!multiset.empty()) spec.m = Multiset::parse_csv(multiset);
    for (const auto& enc : generate(spec)) {
        if (jsonl) {
            nlohmann::json row = {{"family", family}, {"encoding", enc}};
            std::cout << row.dump() << "\n";
        } else {
            std::cout << enc << "\n";
        }
    }
    return 0;
}

int cmd_stat(const std::string& family, const std::string& stats_csv, int node) {
    std::vector<std::string> stats = split_csv(stats_csv);
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.empty()) continue;
        std::vector<std::string> values = eval_stats(family, line, stats, node);
        for (size_t i = 0; i < values.size(); ++i)
            std::cout << (i ? "," : "") << values[i];
        std::cout << "\n";
    }
    return 0;
}

std::string apply_map(const std::string& name, const std::string& line) {
    if (name == "phi") return print_binary(phi(parse_plane(line)).tree);
    if (name == "phi-inv") return print_plane(phi_inv(parse_binary(line)).tree);
    if (name == "phitilde") return print_plane(phitilde(parse_plane(line)).tree);
    if (name == "theta") return print_binary(theta_binary(parse_binary(line)).tree);
    if (name == "theta-disk") return print_binary(theta_disk(parse_binary(line)).tree);
    if (name == "theta-rb") return print_binary(theta_rb(parse_binary(line)).tree);
    if (name == "thetatilde") return print_plane(thetatilde(parse_plane(line)).tree);
    if (name == "tau") return print_dyck(tau(parse_plane(line)));
    if (name == "tau-inv") return print_plane(tau_inv(parse_dyck(line)));
    if (name == "jani") return print_permutation(jani(parse_plane(line)));
    if (name == "jani-inv") return print_plane(jani_inv(parse_permutation(line)));
    if (name == "theta-perm") return print_permutation(theta_perm(parse_permutation(line)));
    if (name == "psi") return print_plane(psi(parse_plane(line)));
    if (name == "psi-inv") return print_plane(psi_inv(parse_plane(line)));
    if (name == "eta") return print_plane(eta(parse_plane(line)));
    if (name == "Psi") return print_plane(Psi(parse_plane(line)));
    if (name == "leadsto") {
        std::vector<int> to = leadsto(parse_plane(line));
        std::string out;
        for (size_t v = 0; v < to.size(); ++v) {
            if (v) out += " ";
            out += std::to_string(v) + ">" + std::to_string(to[v]);
        }
        return out;
    }
    throw std::invalid_argument("unknown map '" + name + "'");
}

int cmd_map(const std::string& name) {
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.empty()) continue;
        std::cout << apply_map(name, line) << "\n";
    }
    return 0;
}

int cmd_table(const std::string& family, int n, const std::string& multiset,
              const std::string& stats_csv) {
    FamilySpec spec;
    spec.family = family;
    spec.n = n;
    if (!multiset.empty()) spec.m = Multiset::parse_csv(multiset);
    std::cout << distribution(spec, split_csv(stats_csv)).to_string();
    return 0;
}

int cmd_poly(int n) {
    SymmetricPolynomial3 p = cnxyz(n);
    for (auto& [e, c] : p.coeff)
        std::cout << e[0] << " " << e[1] << " " << e[2] << " " << c << "\n";
    if (!p.symmetric) {
        std::cerr << "error: C_" << n << "(x,y,z) failed the symmetry check\n";
        return 1;
    }
    std::cout << "C_" << n << " = " << m_basis_to_string(p) << "\n";
    return 0;
}

void print_report(const ClaimReport& r) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << " n=" << r.n;
    if (r.expected_negative) std::cout << " (expected-negative)";
    std::cout << " (" << (long long)r.millis << " ms)";
    if (!r.counterexamples.empty()) {
        std::cout << (r.pass && r.expected_negative ? " counterexample: " : " counterexample: ")
                  << r.counterexamples.front();
    }
    std::cout << "\n";
}

int cmd_verify(const std::string& claim, int n, bool all) {
    bool ok = true;
    if (all) {
        for (const auto& id : claim_ids()) {
            ClaimReport r = verify(id, n);
            print_report(r);
            ok = ok && r.pass;
        }
    } else {
        ClaimReport r = verify(claim, n);
        print_report(r);
        ok = r.pass;
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"treelab: tree statistics, bijections and exhaustive verification"};
    app.require_subcommand(1);

    auto* enumerate = app.add_subcommand("enumerate", "list a family in canonical order");
    std::string family, multiset, stats, map_name, claim;
    int n = -1, node = -1;
    bool jsonl = false, all = false;
    enumerate->add_option("--family", family)->required();
    enumerate->add_option("--n", n);
    enumerate->add_option("--multiset", multiset);
    enumerate->add_flag("--jsonl", jsonl);

    auto* stat = app.add_subcommand("stat", "statistics of structures read from stdin");
    stat->add_option("--family", family)->required();
    stat->add_option("--stats", stats)->required();
    stat->add_option("--node", node);

    auto* map = app.add_subcommand("map", "apply a bijection/involution to stdin lines");
    map->add_option("--name", map_name)->required();

    auto* table = app.add_subcommand("table", "joint distribution over a family");
    table->add_option("--family", family)->required();
    table->add_option("--n", n);
    table->add_option("--multiset", multiset);
    table->add_option("--stats", stats)->required();

    auto* poly = app.add_subcommand("poly", "C_n(x,y,z) coefficients and m-basis");
    poly->add_option("--n", n)->required();

    auto* verify_cmd = app.add_subcommand("verify", "run registered claims");
    verify_cmd->add_option("--claim", claim);
    verify_cmd->add_option("--n", n);
    verify_cmd->add_flag("--all", all);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(family, n, multiset, jsonl);
        if (stat->parsed()) return cmd_stat(family, stats, node);
        if (map->parsed()) return cmd_map(map_name);
        if (table->parsed()) return cmd_table(family, n, multiset, stats);
        if (poly->parsed()) return cmd_poly(n);
        if (verify_cmd->parsed()) {
            if (!all && claim.empty()) {
                std::cerr << "error: verify needs --claim <id> or --all\n";
                return 2;
            }
            return cmd_verify(claim, n, all);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
