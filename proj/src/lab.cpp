#include "treelab/lab.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "treelab/maps.hpp"
#include "treelab/statistics.hpp"

namespace treelab {

namespace {

std::string join_ints(const std::vector<int>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

std::string join_labels(const std::vector<Label>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "}";
}

std::string plane_stat(const PlaneTree& t, const std::string& name) {
    PlaneTreeStats s = tree_stats(t);
    if (name == "leaf") return std::to_string(s.leaf);
    if (name == "int") return std::to_string(s.internal);
    if (name == "bran") return std::to_string(s.bran);
    if (name == "larm") return std::to_string(s.larm);
    if (name == "rarm") return std::to_string(s.rarm);
    if (name == "rev") return std::to_string(s.rev);
    if (name == "run") return std::to_string(s.run);
    if (name == "degseq") return join_ints(s.degree_sequence);
    if (name == "Lev") return join_ints(s.lev_multiset);
    if (name == "Lsw") return join_ints(s.lsw_multiset);
    if (name == "lev-profile") return join_ints(level_profile(t));
    if (name == "Bro") return join_labels(s.repeated_siblings);
    if (name == "Par") return join_labels(s.repeated_parents);
    if (name == "Yle") return join_labels(s.young_leaves);
    throw std::invalid_argument("unknown plane-tree statistic '" + name + "'");
}

std::string node_stat(const PlaneTree& t, int v, const std::string& name) {
    NodeStats s = node_stats(t, v);
    if (name == "lev") return std::to_string(s.lev);
    if (name == "deg") return std::to_string(s.deg);
    if (name == "lchain") return std::to_string(s.lchain);
    if (name == "lc") return std::to_string(s.lc);
    if (name == "dlev") return std::to_string(s.dlev);
    if (name == "lsw") return std::to_string(s.lsw);
    if (name == "rsw") return std::to_string(s.rsw);
    if (name == "dual-deg") return std::to_string(s.dual_deg);
    if (name == "dlsw") return std::to_string(s.dlsw);
    if (name == "drsw") return std::to_string(s.drsw);
    if (name == "dual-rsw") return std::to_string(s.dual_rsw);
    throw std::invalid_argument("unknown node statistic '" + name + "'");
}

std::string binary_stat(const BinaryTree& b, const std::string& name) {
    if (name == "top" || name == "rpop" || name == "omi") {
        DiskStats s = disk_stats(b);
        if (name == "top") return std::to_string(s.top);
        if (name == "rpop") return std::to_string(s.rpop);
        return std::to_string(s.omi);
    }
    BinaryTreeStats s = binary_stats(b);
    if (name == "spi") return std::to_string(s.spi);
    if (name == "rspi") return std::to_string(s.rspi);
    if (name == "lrb") return std::to_string(s.lrb);
    if (name == "rcs") return join_ints(s.right_chain_sequence);
    throw std::invalid_argument("unknown binary-tree statistic '" + name + "'");
}

std::string dyck_stat(const DyckPath& p, const std::string& name) {
    DyckStats s = dyck_stats(p);
    if (name == "ret") return std::to_string(s.ret);
    if (name == "hrun") return std::to_string(s.hrun);
    if (name == "vrun") return std::to_string(s.vrun);
    if (name == "iest") return std::to_string(s.iest);
    if (name == "peak") return std::to_string(s.peak);
    if (name == "comp") return join_ints(s.composition_type);
    throw std::invalid_argument("unknown Dyck-path statistic '" + name + "'");
}

std::string perm_stat(const Permutation& p, const std::string& name) {
    PermStats s = perm_stats(p);
    if (name == "is") return std::to_string(s.is_len);
    if (name == "ds") return std::to_string(s.ds_len);
    if (name == "IR") return join_ints(s.ir_sizes);
    if (name == "IL") return join_ints(s.il_sizes);
    throw std::invalid_argument("unknown permutation statistic '" + name + "'");
}

bool is_plane_family(const std::string& f) {
    return f == "plane" || f == "wit" || f == "labeled";
}
bool is_binary_family(const std::string& f) {
    return f == "binary" || f == "witb" || f == "rb" || f == "disk";
}

}  // namespace

std::vector<std::string> eval_stats(const std::string& family, const std::string& encoding,
                                    const std::vector<std::string>& stats, int node) {
    std::vector<std::string> out;
    if (is_plane_family(family)) {
        PlaneTree t = parse_plane(encoding);
        for (const auto& name : stats)
            out.push_back(node >= 0 ? node_stat(t, node, name) : plane_stat(t, name));
    } else if (is_binary_family(family)) {
        BinaryTree b = parse_binary(encoding);
        for (const auto& name : stats) out.push_back(binary_stat(b, name));
    } else if (family == "dyck") {
        DyckPath p = parse_dyck(encoding);
        for (const auto& name : stats) out.push_back(dyck_stat(p, name));
    } else if (family == "avoid132" || family == "perm") {
        Permutation p = parse_permutation(encoding);
        for (const auto& name : stats) out.push_back(perm_stat(p, name));
    } else {
        throw std::invalid_argument("unknown family '" + family + "'");
    }
    return out;
}

long long DistributionTable::total() const {
    long long t = 0;
    for (auto& [k, c] : entries) t += c;
    return t;
}

std::string DistributionTable::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < stat_names.size(); ++i)
        os << (i ? "," : "") << stat_names[i];
    os << "\tcount\n";
    for (auto& [key, c] : entries) {
        for (size_t i = 0; i < key.size(); ++i) os << (i ? "," : "") << key[i];
        os << "\t" << c << "\n";
    }
    return os.str();
}

DistributionTable distribution(const FamilySpec& spec, const std::vector<std::string>& stats) {
    DistributionTable table;
    table.stat_names = stats;
    for (const auto& enc : generate(spec))
        ++table.entries[eval_stats(spec.family, enc, stats)];
    return table;
}

// --- C_n(x,y,z) -----------------------------------------------------------------

namespace {

void decompose(SymmetricPolynomial3& p) {
    p.symmetric = true;
    std::map<std::vector<int>, long long> by_partition;
    for (auto& [e, c] : p.coeff) {
        std::vector<int> part = {e[0], e[1], e[2]};
        std::sort(part.rbegin(), part.rend());
        auto it = by_partition.find(part);
        if (it == by_partition.end()) by_partition[part] = c;
        else if (it->second != c) p.symmetric = false;
    }
    if (!p.symmetric) return;
    // Verify every monomial of each orbit is present with the shared count.
    for (auto& [part, c] : by_partition) {
        std::array<int, 3> e = {part[0], part[1], part[2]};
        std::sort(e.begin(), e.end());
        do {
            auto it = p.coeff.find(e);
            if ((it == p.coeff.end() ? 0 : it->second) != c) { p.symmetric = false; return; }
        } while (std::next_permutation(e.begin(), e.end()));
    }
    std::vector<std::pair<std::vector<int>, long long>> basis(by_partition.begin(),
                                                              by_partition.end());
    std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
        int sa = a.first[0] + a.first[1] + a.first[2];
        int sb = b.first[0] + b.first[1] + b.first[2];
        if (sa != sb) return sa < sb;
        return a.first > b.first;  // within a degree: lexicographically larger first
    });
    p.m_basis = std::move(basis);
}

}  // namespace

SymmetricPolynomial3 cnxyz(int n) {
    SymmetricPolynomial3 p;
    for (const auto& enc : plane_encodings(n)) {
        PlaneTreeStats s = tree_stats(parse_plane(enc));
        ++p.coeff[{s.larm - 1, s.rarm - 1, s.rev - 1}];
    }
    decompose(p);
    return p;
}

SymmetricPolynomial3 dyck_xyz(int n) {
    SymmetricPolynomial3 p;
    for (const auto& enc : dyck_encodings(n)) {
        DyckStats s = dyck_stats(parse_dyck(enc));
        ++p.coeff[{s.hrun - 1, s.ret - 1, s.vrun - 1}];
    }
    decompose(p);
    return p;
}

std::string m_basis_to_string(const SymmetricPolynomial3& p) {
    if (!p.symmetric) return "<not symmetric>";
    std::string s;
    for (auto& [part, c] : p.m_basis) {
        if (!s.empty()) s += " + ";
        std::string mono;
        if (part[0] == 0) mono = "1";
        else {
            mono = "m_{";
            for (int x : part)
                if (x > 0) mono += std::to_string(x);
            mono += "}";
        }
        if (c != 1 || mono == "1") s += (mono == "1" ? std::to_string(c)
                                                     : std::to_string(c) + "*" + mono);
        else s += mono;
    }
    return s.empty() ? "0" : s;
}

}  // namespace treelab
