#include "treelab/statistics.hpp"

#include <algorithm>
#include <stdexcept>

namespace treelab {

namespace {

int level_of(const PlaneTree& t, int v) {
    int d = 0;
    while (t.parent[v] != -1) { v = t.parent[v]; ++d; }
    return d;
}

int lchain_of(const PlaneTree& t, int v) {
    int len = 0;
    while (!t.is_leaf(v)) { v = t.children[v][0]; ++len; }
    return len;
}

// Nodes hanging off the root path of v: elder siblings of v, of its parent,
// and so on up to (but excluding) the root.
std::vector<int> lc_set(const PlaneTree& t, int v) {
    std::vector<int> out;
    for (int w = v; t.parent[w] != -1; w = t.parent[w]) {
        int idx = t.child_index(w);
        const auto& sib = t.children[t.parent[w]];
        for (int i = 0; i < idx; ++i) out.push_back(sib[i]);
    }
    return out;
}

int younger_sibling_total(const PlaneTree& t, int v) {
    int total = 0;
    for (int w = v; t.parent[w] != -1; w = t.parent[w]) {
        const auto& sib = t.children[t.parent[w]];
        total += (int)sib.size() - 1 - t.child_index(w);
    }
    return total;
}

// Next sibling to the right, or -1.
int closest_younger_sibling(const PlaneTree& t, int v) {
    if (t.parent[v] == -1) return -1;
    const auto& sib = t.children[t.parent[v]];
    int idx = t.child_index(v);
    return idx + 1 < (int)sib.size() ? sib[idx + 1] : -1;
}

int dual_deg_of(const PlaneTree& t, int v) {
    if (!t.is_leaf(v)) return 0;
    int count = 0;
    for (int w = v; t.parent[w] != -1; w = t.parent[w]) {
        ++count;
        if (t.child_index(w) > 0) return count;  // first node with elder siblings
    }
    return count;  // the whole path is eldest-child edges: equals lev(v)
}

}  // namespace

NodeStats node_stats(const PlaneTree& t, int v) {
    if (v < 0 || v >= t.node_count()) throw std::out_of_range("node_stats: unknown node");
    NodeStats s;
    s.lev = level_of(t, v);
    s.deg = (int)t.children[v].size();
    s.lchain = lchain_of(t, v);
    std::vector<int> lc = lc_set(t, v);
    s.lc = (int)lc.size();
    s.dlev = t.parent[v] == -1 ? 0 : s.lc + 1;
    s.lsw = s.deg + s.lc;
    s.rsw = s.deg + younger_sibling_total(t, v);
    s.dual_deg = dual_deg_of(t, v);

    int u = closest_younger_sibling(t, v);
    if (t.parent[v] == -1) s.dlsw = s.lchain;
    else if (u != -1) s.dlsw = lchain_of(t, u) + s.lev;
    else s.dlsw = s.lev - 1;

    int lc_lchain = 0;
    for (int w : lc) lc_lchain += lchain_of(t, w);
    if (u != -1) s.drsw = 1 + lc_lchain + lchain_of(t, u) + s.lchain;
    else s.drsw = lc_lchain + s.lchain;

    int ch_lchain = 0;
    for (int c : t.children[v]) ch_lchain += lchain_of(t, c);
    s.dual_rsw = lc_lchain + ch_lchain + s.dual_deg;
    return s;
}

PlaneTreeStats tree_stats(const PlaneTree& t) {
    PlaneTreeStats s;
    const int m = t.node_count();
    std::vector<int> depth(m, 0);
    for (int v = 1; v < m; ++v) depth[v] = depth[t.parent[v]] + 1;

    for (int v = 0; v < m; ++v) {
        if (t.is_leaf(v)) ++s.leaf;
        else {
            ++s.internal;
            s.degree_sequence.push_back((int)t.children[v].size());
        }
        s.lev_multiset.push_back(depth[v]);
    }
    std::sort(s.degree_sequence.begin(), s.degree_sequence.end());
    std::sort(s.lev_multiset.begin(), s.lev_multiset.end());

    // lsw(v) = deg(v) + elder-sibling nodes along the root path; accumulate the
    // elder-sibling part top-down instead of re-walking per node.
    std::vector<int> lc_acc(m, 0);
    std::vector<int> pre = preorder(t);
    for (int v : pre) {
        if (v == 0) continue;
        lc_acc[v] = lc_acc[t.parent[v]] + t.child_index(v);
    }
    for (int v = 0; v < m; ++v)
        s.lsw_multiset.push_back((int)t.children[v].size() + lc_acc[v]);
    std::sort(s.lsw_multiset.begin(), s.lsw_multiset.end());

    s.bran = (int)t.children[0].size();
    int arm = 0;
    for (int v = 0; !t.is_leaf(v); v = t.children[v][0]) ++arm;
    s.larm = arm;
    arm = 0;
    for (int v = 0; !t.is_leaf(v); v = t.children[v].back()) ++arm;
    s.rarm = arm;

    // rev: nodes preceding the first reverse-preorder node with a younger
    // sibling; the reverse preorder is the reversed preorder.
    s.rev = t.edge_count();
    for (int i = m - 1, cnt = 0; i >= 0; --i, ++cnt) {
        int v = pre[i];
        if (t.parent[v] != -1 &&
            t.child_index(v) + 1 < (int)t.children[t.parent[v]].size()) {
            s.rev = cnt;
            break;
        }
    }

    // run: non-leaf nodes from the last preorder node with >= 2 children on.
    int last_branching = -1;
    for (int i = 0; i < m; ++i)
        if ((int)t.children[pre[i]].size() >= 2) last_branching = i;
    if (last_branching == -1) s.run = t.edge_count();
    else {
        s.run = 0;
        for (int i = last_branching; i < m; ++i)
            if (!t.is_leaf(pre[i])) ++s.run;
    }

    if (t.labeled()) {
        for (int v = 1; v < m; ++v) {
            int idx = t.child_index(v);
            const auto& sib = t.children[t.parent[v]];
            bool repeated = false;
            for (int i = 0; i < idx; ++i)
                if (t.labels[sib[i]] == t.labels[v]) repeated = true;
            if (repeated) s.repeated_siblings.push_back(t.labels[v]);
        }
        for (int v = 0; v < m; ++v)
            for (int c : t.children[v])
                if (t.labels[c] == t.labels[v]) { s.repeated_parents.push_back(t.labels[v]); break; }
        for (int v = 1; v < m; ++v)
            if (t.is_leaf(v) && closest_younger_sibling(t, v) == -1)
                s.young_leaves.push_back(t.labels[v]);
        std::sort(s.repeated_siblings.begin(), s.repeated_siblings.end());
        std::sort(s.repeated_parents.begin(), s.repeated_parents.end());
        std::sort(s.young_leaves.begin(), s.young_leaves.end());
    }
    return s;
}

std::vector<int> level_profile(const PlaneTree& t) {
    std::vector<int> depth(t.node_count(), 0), profile;
    for (int v = 1; v < t.node_count(); ++v) {
        depth[v] = depth[t.parent[v]] + 1;
        if ((int)profile.size() < depth[v]) profile.resize(depth[v], 0);
        ++profile[depth[v] - 1];
    }
    return profile;
}

BinaryTreeStats binary_stats(const BinaryTree& b) {
    if (b.empty()) throw std::invalid_argument("binary_stats: empty tree");
    BinaryTreeStats s;
    const int n = b.node_count();
    std::vector<int> pre = preorder(b);

    s.spi = n;
    for (int i = 0; i < n; ++i) {
        int v = pre[i];
        if (b.parent[v] != -1 && b.right[b.parent[v]] == v) { s.spi = i; break; }
    }
    s.rspi = n;
    std::vector<int> rp = reverse_preorder(b);
    for (int i = 0; i < n; ++i)
        if (b.right[rp[i]] != -1) { s.rspi = i; break; }

    // Right boundary: from the root, step right when possible, else left.
    for (int v = 0; !(b.left[v] == -1 && b.right[v] == -1);) {
        if (b.right[v] != -1) v = b.right[v];
        else { v = b.left[v]; ++s.lrb; }
    }

    for (int v = 0; v < n; ++v) {
        if (b.parent[v] != -1 && b.right[b.parent[v]] == v) continue;  // not a chain head
        int len = 0;
        for (int w = v; b.right[w] != -1; w = b.right[w]) ++len;
        s.right_chain_sequence.push_back(len);
    }
    std::sort(s.right_chain_sequence.begin(), s.right_chain_sequence.end());
    return s;
}

DiskStats disk_stats(const BinaryTree& d) {
    if (!is_disk(d)) throw std::invalid_argument("disk_stats: not a di-sk tree");
    DiskStats s;
    std::vector<int> pre = preorder(d);
    for (int v : pre)
        if (d.labels[v] == -1) ++s.omi;
    for (int v : pre) {
        if (d.labels[v] != 1) break;
        ++s.top;
    }
    for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
        if (d.labels[*it] != 1) break;
        ++s.rpop;
    }
    return s;
}

DyckStats dyck_stats(const DyckPath& p) {
    DyckStats s;
    const std::string& w = p.steps;
    const int len = (int)w.size();
    const int n = p.order();

    int diff = 0;
    for (char c : w) {
        if (c == 'E') ++diff;
        else if (--diff == 0) ++s.ret;
    }

    s.hrun = n;  // zigzag convention
    int norths = 0;
    for (int i = 0; i < len; ++i) {
        if (w[i] != 'N') continue;
        ++norths;
        if (i + 1 < len && w[i + 1] == 'N') { s.hrun = norths; break; }
    }

    s.vrun = n;
    for (int i = len - 1; i > 0; --i) {
        if (!(w[i] == 'E' && w[i - 1] == 'E')) continue;
        s.vrun = 0;
        for (int j = i; j < len; ++j)
            if (w[j] == 'E') ++s.vrun;
        break;
    }

    for (int i = 0; i < len && w[i] == 'E'; ++i) ++s.iest;
    for (int i = 0; i + 1 < len; ++i)
        if (w[i] == 'E' && w[i + 1] == 'N') ++s.peak;

    int run = 0;
    for (char c : w) {
        if (c == 'E') ++run;
        else if (run > 0) { s.composition_type.push_back(run); run = 0; }
    }
    return s;
}

PermStats perm_stats(const Permutation& p) {
    PermStats s;
    const int n = p.size();
    const auto& w = p.word;

    std::vector<int> inc(n, 1), dec(n, 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            if (w[j] < w[i]) inc[i] = std::max(inc[i], inc[j] + 1);
            if (w[j] > w[i]) dec[i] = std::max(dec[i], dec[j] + 1);
        }
    for (int i = 0; i < n; ++i) {
        s.is_len = std::max(s.is_len, inc[i]);
        s.ds_len = std::max(s.ds_len, dec[i]);
    }

    for (int i = 0; i < n; ++i) {
        int size = 0, mx = 0;
        for (int j = i; j < n; ++j)
            if (w[j] >= mx) { ++size; mx = w[j]; }
        s.ir_sizes.push_back(size);
        size = 0; mx = 0;
        for (int j = i; j >= 0; --j)
            if (w[j] >= mx) { ++size; mx = w[j]; }
        s.il_sizes.push_back(size);
    }
    std::sort(s.ir_sizes.begin(), s.ir_sizes.end());
    std::sort(s.il_sizes.begin(), s.il_sizes.end());
    return s;
}

}  // namespace treelab
