#include "treelab/maps.hpp"

#include <algorithm>
#include <stdexcept>

#include "treelab/statistics.hpp"

namespace treelab {

MappedBinary phi(const PlaneTree& t) {
    const int n = t.edge_count();
    MappedBinary out;
    out.corr.to_image.assign(t.node_count(), -1);
    if (n == 0) return out;
    // Work in plane ids shifted down by one; renumber at the end.
    std::vector<int> left(n, -1), right(n, -1);
    std::vector<Label> labels(n, 0);
    for (int v = 1; v <= n; ++v) {
        if (!t.is_leaf(v)) left[v - 1] = t.children[v][0] - 1;
        int idx = t.child_index(v);
        const auto& sib = t.children[t.parent[v]];
        if (idx + 1 < (int)sib.size()) right[v - 1] = sib[idx + 1] - 1;
        if (t.labeled()) labels[v - 1] = t.labels[v];
    }
    int root = t.children[0][0] - 1;
    auto [tree, index_of] = BinaryTree::from_links(
        root, left, right, labels, t.labeled() ? LabelKind::integer : LabelKind::none);
    out.tree = std::move(tree);
    for (int v = 1; v <= n; ++v) out.corr.to_image[v] = index_of[v - 1];
    return out;
}

MappedPlane phi_inv(const BinaryTree& b) {
    const int n = b.node_count();
    MappedPlane out;
    out.corr.to_image.assign(n, -1);
    // Temp ids: binary nodes keep their index, the fresh root is n.
    std::vector<std::vector<int>> kids(n + 1);
    std::vector<Label> labels;
    if (b.labeled()) {
        labels.assign(n + 1, 0);
        for (int v = 0; v < n; ++v) labels[v] = b.labels[v];
        labels[n] = 0;
    }
    auto attach_chain = [&](int parent, int head) {
        for (int w = head; w != -1; w = b.right[w]) kids[parent].push_back(w);
    };
    if (n > 0) attach_chain(n, 0);
    for (int v = 0; v < n; ++v) attach_chain(v, b.left[v]);
    auto [tree, index_of] = PlaneTree::from_adjacency(n, kids, labels);
    out.tree = std::move(tree);
    for (int v = 0; v < n; ++v) out.corr.to_image[v] = index_of[v];
    return out;
}

std::vector<int> leadsto(const PlaneTree& t) {
    const int m = t.node_count();
    std::vector<int> to(m, -1);
    for (int v = 0; v < m; ++v) {
        if (!t.is_leaf(v)) {
            to[v] = t.children[v].back();
            continue;
        }
        int w = v;
        while (w != 0 && t.child_index(w) == 0) w = t.parent[w];
        if (w == 0) to[v] = 0;  // every node on the path is an eldest child
        else to[v] = t.children[t.parent[w]][t.child_index(w) - 1];
    }
    return to;
}

ComplementTree complement(const PlaneTree& t) {
    MappedBinary pb = phi(t);
    const BinaryTree& b = pb.tree;
    const int n = b.node_count();
    // binary node index -> plane node id
    std::vector<int> plane_of(n, -1);
    for (int v = 0; v < t.node_count(); ++v)
        if (pb.corr.to_image[v] != -1) plane_of[pb.corr.to_image[v]] = v;

    // Supply a left child labeled v' where the left slot is empty, and a right
    // child labeled (parent of v in t)' where the right slot is empty.
    std::vector<int> left(b.left), right(b.right);
    std::vector<int> prime(n, -1), plane(plane_of);
    auto add_supplied = [&](int prime_label) {
        left.push_back(-1);
        right.push_back(-1);
        prime.push_back(prime_label);
        plane.push_back(-1);
        return (int)left.size() - 1;
    };
    for (int x = 0; x < n; ++x) {
        int v = plane_of[x];
        if (left[x] == -1) left[x] = add_supplied(v);
        if (right[x] == -1) right[x] = add_supplied(t.parent[v]);
    }
    auto [tree, index_of] = BinaryTree::from_links(n > 0 ? 0 : -1, left, right);
    ComplementTree out;
    out.tree = std::move(tree);
    out.plane_node.assign(out.tree.node_count(), -1);
    out.prime_of.assign(out.tree.node_count(), -1);
    for (int x = 0; x < (int)index_of.size(); ++x) {
        if (index_of[x] == -1) continue;
        out.plane_node[index_of[x]] = plane[x];
        out.prime_of[index_of[x]] = prime[x];
    }
    return out;
}

std::vector<int> leadsto_via_complement(const PlaneTree& t) {
    std::vector<int> to(t.node_count(), -1);
    // In the first complement, v' as the right child of an original node u
    // reads as v ~> u; in the mirror's complement the roles flip and u' as the
    // right child of v reads as v ~> u.
    auto harvest = [](const ComplementTree& c, const std::vector<int>& translate,
                      bool prime_is_source, std::vector<int>& to) {
        const BinaryTree& b = c.tree;
        for (int x = 0; x < b.node_count(); ++x) {
            if (c.prime_of[x] == -1) continue;
            int p = b.parent[x];
            if (p == -1 || b.right[p] != x || c.plane_node[p] == -1) continue;
            int prime = translate.empty() ? c.prime_of[x] : translate[c.prime_of[x]];
            int host = translate.empty() ? c.plane_node[p] : translate[c.plane_node[p]];
            int v = prime_is_source ? prime : host;
            int u = prime_is_source ? host : prime;
            if (to[v] != -1 && to[v] != u)
                throw std::logic_error("complement pairing conflict");
            to[v] = u;
        }
    };
    harvest(complement(t), {}, true, to);

    // Pairs for the leaves of t live in the complement of the mirror, which is
    // the complement built from phitilde(t); translate its node ids back.
    MappedPlane pt = phitilde(t);
    std::vector<int> back(t.node_count(), -1);
    for (int v = 0; v < t.node_count(); ++v) back[pt.corr.to_image[v]] = v;
    harvest(complement(pt.tree), back, false, to);
    for (int v = 0; v < t.node_count(); ++v)
        if (to[v] == -1) throw std::logic_error("complement pairing incomplete");
    return to;
}

MappedPlane phitilde(const PlaneTree& t) {
    MappedBinary pb = phi(t);
    auto [mirrored, mcorr] = mirror_corr(pb.tree);
    MappedPlane back = phi_inv(mirrored);
    MappedPlane out;
    out.tree = std::move(back.tree);
    out.corr.to_image.assign(t.node_count(), -1);
    out.corr.to_image[0] = 0;
    for (int v = 1; v < t.node_count(); ++v)
        out.corr.to_image[v] = back.corr.to_image[mcorr[pb.corr.to_image[v]]];
    return out;
}

MappedBinary theta_binary(const BinaryTree& b) {
    const int n = b.node_count();
    if (n == 0) throw std::invalid_argument("theta_binary: empty tree");
    // Storage order is preorder, so node i is v_{i+1}. The root of the image
    // is the last preorder node; every other node hangs below its successor.
    std::vector<int> left(n, -1), right(n, -1);
    for (int i = n - 2; i >= 0; --i) {
        if (b.right[i] != -1) right[b.right[i]] = i;
        else left[i + 1] = i;
    }
    auto [tree, index_of] =
        BinaryTree::from_links(n - 1, left, right, b.labels, b.label_kind);
    MappedBinary out;
    out.tree = std::move(tree);
    out.corr.to_image = std::move(index_of);
    return out;
}

MappedBinary theta_disk(const BinaryTree& d) {
    if (!is_disk(d)) throw std::invalid_argument("theta_disk: not a di-sk tree");
    return theta_binary(d);
}

MappedBinary theta_rb(const BinaryTree& r) {
    if (!is_right_increasing_binary(r))
        throw std::invalid_argument("theta_rb: not a right increasing binary tree");
    MappedBinary out = theta_binary(r);
    const int n = out.tree.node_count();
    for (auto& l : out.tree.labels) l = n + 1 - l;
    return out;
}

MappedPlane thetatilde(const PlaneTree& t) {
    if (t.labeled() && !is_rooted_labeled(t))
        throw std::invalid_argument("thetatilde: labeled input must be a rooted labeled tree");
    MappedBinary pb = phi(t);
    MappedBinary th = t.labeled() ? theta_rb(pb.tree) : theta_binary(pb.tree);
    MappedPlane back = phi_inv(th.tree);
    MappedPlane out;
    out.tree = std::move(back.tree);
    out.corr.to_image.assign(t.node_count(), -1);
    out.corr.to_image[0] = 0;
    for (int v = 1; v < t.node_count(); ++v)
        out.corr.to_image[v] =
            back.corr.to_image[th.corr.to_image[pb.corr.to_image[v]]];
    return out;
}

DyckPath tau(const PlaneTree& t) {
    std::vector<int> pre = preorder(t);
    std::string steps;
    for (int i = 0; i + 1 < (int)pre.size(); ++i) {  // the last leaf records nothing
        steps.append(t.children[pre[i]].size(), 'E');
        steps.push_back('N');
    }
    return DyckPath{steps};
}

PlaneTree tau_inv(const DyckPath& d) {
    if (!is_dyck(d.steps)) throw std::invalid_argument("tau_inv: malformed path");
    // Degrees of the preorder nodes are the east runs before each north step;
    // the final leaf is implicit.
    std::vector<int> degs;
    int run = 0;
    for (char c : d.steps) {
        if (c == 'E') ++run;
        else { degs.push_back(run); run = 0; }
    }
    const int m = (int)degs.size() + 1;  // node count
    std::vector<std::vector<int>> kids(m);
    std::vector<std::pair<int, int>> stack;  // (node, remaining children)
    stack.push_back({0, degs.empty() ? 0 : degs[0]});
    for (int v = 1; v < m; ++v) {
        while (!stack.empty() && stack.back().second == 0) stack.pop_back();
        if (stack.empty()) throw std::invalid_argument("tau_inv: malformed path");
        --stack.back().second;
        kids[stack.back().first].push_back(v);
        stack.push_back({v, v < (int)degs.size() ? degs[v] : 0});
    }
    while (!stack.empty() && stack.back().second == 0) stack.pop_back();
    if (!stack.empty()) throw std::invalid_argument("tau_inv: malformed path");
    return PlaneTree::from_adjacency(0, kids).first;
}

Permutation jani(const PlaneTree& t) {
    const int n = t.edge_count();
    // Non-root node at preorder position p carries reverse-preorder label
    // n+1-p; read the labels in postorder.
    Permutation out;
    std::vector<int> pos(t.node_count());
    std::vector<int> pre = preorder(t);
    for (int i = 0; i < (int)pre.size(); ++i) pos[pre[i]] = i;
    for (int v : postorder(t))
        if (v != 0) out.word.push_back(n + 1 - pos[v]);
    return out;
}

PlaneTree jani_inv(const Permutation& p) {
    if (!is_132_avoiding(p))
        throw std::invalid_argument("jani_inv: permutation contains the pattern 132");
    const int n = p.size();
    // Temp ids: position i holds node i+1, root is 0. Scanning right to left,
    // each letter becomes the eldest child of the leftmost later letter that
    // exceeds it, or of the root.
    std::vector<std::vector<int>> kids(n + 1);
    for (int i = n - 1; i >= 0; --i) {
        int target = 0;
        for (int j = i + 1; j < n; ++j)
            if (p.word[j] > p.word[i]) { target = j + 1; break; }
        kids[target].insert(kids[target].begin(), i + 1);
    }
    return PlaneTree::from_adjacency(0, kids).first;
}

Permutation theta_perm(const Permutation& p) {
    return jani(phitilde(jani_inv(p)).tree);
}

}  // namespace treelab
