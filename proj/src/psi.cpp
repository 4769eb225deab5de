// The slice bijections behind the rev <-> run exchange: the five-case surgery
// psi and its inverse, the canonically matched eta, and the recursion Psi.

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

#include "treelab/enumeration.hpp"
#include "treelab/maps.hpp"
#include "treelab/statistics.hpp"

namespace treelab {

namespace {

// Mutable adjacency for local surgery; ids stay stable while editing.
struct Surgery {
    int root = 0;
    std::vector<std::vector<int>> kids;
    std::vector<int> par;

    explicit Surgery(const PlaneTree& t) : kids(t.children), par(t.parent) {}
    Surgery(int root_, std::vector<std::vector<int>> kids_)
        : root(root_), kids(std::move(kids_)), par(kids.size(), -1) {
        for (size_t v = 0; v < kids.size(); ++v)
            for (int c : kids[v]) par[c] = (int)v;
        par[root] = -1;
    }

    int pos(int v) const {
        const auto& sib = kids[par[v]];
        return (int)(std::find(sib.begin(), sib.end(), v) - sib.begin());
    }
    void detach(int v) {
        auto& sib = kids[par[v]];
        sib.erase(std::find(sib.begin(), sib.end(), v));
        par[v] = -1;
    }
    void attach(int p, int v, int position) {
        kids[p].insert(kids[p].begin() + position, v);
        par[v] = p;
    }
    void attach_back(int p, int v) { attach(p, v, (int)kids[p].size()); }

    bool is_leaf(int v) const { return kids[v].empty(); }
    std::vector<int> eldest_chain() const {
        std::vector<int> chain = {root};
        while (!is_leaf(chain.back())) chain.push_back(kids[chain.back()].front());
        return chain;
    }
    std::vector<int> youngest_chain_from(int v) const {
        std::vector<int> chain = {v};
        while (!is_leaf(chain.back())) chain.push_back(kids[chain.back()].back());
        return chain;
    }
    PlaneTree to_tree() const { return PlaneTree::from_adjacency(root, kids).first; }
};

// First node under the reversed preorder with a younger sibling, or -1.
int rev_node_of(const Surgery& s) {
    std::vector<int> pre;
    std::vector<int> stack = {s.root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        pre.push_back(v);
        for (auto it = s.kids[v].rbegin(); it != s.kids[v].rend(); ++it)
            stack.push_back(*it);
    }
    for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
        int v = *it;
        if (s.par[v] != -1 && s.pos(v) + 1 < (int)s.kids[s.par[v]].size()) return v;
    }
    return -1;
}

int rev_of(const Surgery& s) {
    int r = rev_node_of(s);
    if (r == -1) return (int)s.kids.size() - 1;  // path convention
    std::vector<int> pre;
    std::vector<int> stack = {s.root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        pre.push_back(v);
        for (auto it = s.kids[v].rbegin(); it != s.kids[v].rend(); ++it)
            stack.push_back(*it);
    }
    int cnt = 0;
    for (auto it = pre.rbegin(); it != pre.rend(); ++it, ++cnt)
        if (*it == r) return cnt;
    throw std::logic_error("rev_of: rev-node not found");
}

void require(bool cond, const char* clause) {
    if (!cond) throw std::invalid_argument(std::string("domain violation (") + clause + ")");
}

// The branch of x immediately to the right of its path-child `next`, when the
// construction's "at most one hanging branch" shape holds; -1 when absent.
int hanging_of(const Surgery& s, int x, int next) {
    int p = 0;
    const auto& sib = s.kids[x];
    while (sib[p] != next) ++p;
    return p + 1 < (int)sib.size() ? sib[p + 1] : -1;
}

// Path from ancestor a down to descendant d (inclusive); throws if not related.
std::vector<int> down_path(const Surgery& s, int a, int d) {
    std::vector<int> up;
    for (int w = d;; w = s.par[w]) {
        up.push_back(w);
        if (w == a) break;
        if (w == s.root) throw std::logic_error("psi: expected ancestor relation");
    }
    std::reverse(up.begin(), up.end());
    return up;
}

bool subtree_is_path(const Surgery& s, int v) {
    while (!s.is_leaf(v)) {
        if (s.kids[v].size() > 1) return false;
        v = s.kids[v][0];
    }
    return true;
}

// Step (i): shift the arm branches of a {larm=k, rarm=2} tree into the
// {larm=k+1, rarm=1} frame, reusing node ids.
Surgery shift(const Surgery& t, int k) {
    std::vector<int> left = t.eldest_chain();              // L_1..L_{k+1}
    int w2 = t.kids[t.root].back(), w3 = t.kids[w2].back();
    std::vector<std::vector<int>> kids(t.kids.size());
    for (size_t v = 0; v < t.kids.size(); ++v) kids[v] = t.kids[v];

    // Arm ids of the image: A_1..A_{k+1} = left arm, A_{k+2} = w2, leaf y = w3.
    std::vector<int> arm = left;
    arm.push_back(w2);
    std::vector<std::vector<int>> beta(k + 1);  // beta[i] = branches of beta_i
    beta[0].assign(t.kids[w2].begin(), t.kids[w2].end() - 1);
    const auto& rk = t.kids[t.root];
    beta[1].assign(rk.begin() + 1, rk.end() - 1);
    for (int i = 2; i <= k; ++i) {
        const auto& lk = t.kids[left[i - 1]];
        beta[i].assign(lk.begin() + 1, lk.end());
    }
    kids[arm[0]] = {arm[1]};
    for (int b : beta[0]) kids[arm[0]].push_back(b);
    kids[arm[0]].push_back(w3);
    for (int j = 2; j <= k + 1; ++j) {
        kids[arm[j - 1]] = {arm[j]};
        for (int b : beta[j - 1]) kids[arm[j - 1]].push_back(b);
    }
    kids[arm[k + 1]] = {};
    kids[w3] = {};
    return Surgery(t.root, std::move(kids));
}

// Reverse of step (i); expects the {larm=k+1, rarm=1} frame.
Surgery unshift(const Surgery& u, int k) {
    std::vector<int> arm = u.eldest_chain();  // A_1..A_{k+2}
    int y = u.kids[u.root].back();
    std::vector<std::vector<int>> kids(u.kids.size());
    for (size_t v = 0; v < u.kids.size(); ++v) kids[v] = u.kids[v];

    auto branches = [&](int a) {
        return std::vector<int>(u.kids[a].begin() + 1, u.kids[a].end());
    };
    // Left arm of the preimage: A_1..A_{k+1}; right arm: A_1 -> A_{k+2} -> y.
    for (int i = 1; i <= k; ++i) {
        kids[arm[i - 1]] = {arm[i]};
        for (int b : branches(arm[i])) kids[arm[i - 1]].push_back(b);
    }
    std::vector<int> root_branches(u.kids[u.root].begin() + 1, u.kids[u.root].end() - 1);
    kids[arm[0]].push_back(arm[k + 1]);
    kids[arm[k]] = {};
    kids[arm[k + 1]] = root_branches;
    kids[arm[k + 1]].push_back(y);
    kids[y] = {};
    return Surgery(u.root, std::move(kids));
}

}  // namespace

PlaneTree psi(const PlaneTree& t) {
    if (t.labeled()) throw std::invalid_argument("psi: expects an unlabeled plane tree");
    PlaneTreeStats st = tree_stats(t);
    require(st.bran >= 2, "bran >= 2");
    require(st.rarm == 2, "rarm = 2");
    const int k = st.larm;
    require(k >= 1, "larm >= 1");

    Surgery src(t);
    Surgery img = shift(src, k);
    bool beta0_single = src.kids[src.kids[src.root].back()].size() == 1;
    if (!beta0_single) return img.to_tree();

    int rev_t = st.rev;
    int rev_i = rev_of(img);
    int v = img.kids[img.root].front();

    if (rev_i >= rev_t) {
        if ((int)src.kids[src.root].size() == 2) return img.to_tree();  // a1: beta_1 trivial
        // a2: relocate the youngest branch of v to the penultimate node of the
        // right arm of the remainder.
        int p_root = img.kids[v].back();
        if (!subtree_is_path(img, p_root)) throw std::logic_error("psi a2: branch not a path");
        img.detach(p_root);
        std::vector<int> arm = img.youngest_chain_from(v);
        int pen = arm[arm.size() - 2];
        img.attach_back(pen, p_root);
        return img.to_tree();
    }

    if (rev_i != rev_t - 1) throw std::logic_error("psi: unexpected rev drop");
    int r = rev_node_of(img);
    int u = img.par[r];
    if (img.pos(r) == 0) {
        // b1: move every hanging path one step up along v..u.
        std::vector<int> path = down_path(img, v, u);
        const int m = (int)path.size() - 1;
        std::vector<int> hang(m + 1, -1);
        for (int i = 0; i < m; ++i) hang[i] = hanging_of(img, path[i], path[i + 1]);
        hang[m] = hanging_of(img, u, r);
        if (hang[0] != -1) throw std::logic_error("psi b1: unexpected branch at v");
        for (int i = 1; i <= m; ++i)
            if (hang[i] != -1) img.detach(hang[i]);
        for (int i = 0; i < m; ++i)
            if (hang[i + 1] != -1) img.attach(path[i], hang[i + 1], img.pos(path[i + 1]) + 1);
        return img.to_tree();
    }
    int elder = img.kids[u][img.pos(r) - 1];
    if (img.is_leaf(elder)) {
        // b2: the rightmost branch of u becomes the rightmost branch of v.
        int moved = img.kids[u].back();
        img.detach(moved);
        img.attach_back(v, moved);
        return img.to_tree();
    }
    // b3: the rev-node's path moves below the third branch from the right.
    if (!subtree_is_path(img, r)) throw std::logic_error("psi b3: rev branch not a path");
    img.detach(r);
    std::vector<int> arm = img.youngest_chain_from(elder);
    int pen = arm.size() >= 2 ? arm[arm.size() - 2] : elder;
    img.attach_back(pen, r);
    return img.to_tree();
}

PlaneTree psi_inv(const PlaneTree& t) {
    if (t.labeled()) throw std::invalid_argument("psi_inv: expects an unlabeled plane tree");
    PlaneTreeStats st = tree_stats(t);
    require(st.bran >= 2, "bran >= 2");
    require(st.rarm == 1, "rarm = 1");
    const int k = st.larm - 1;
    require(k >= 1, "larm >= 2");

    Surgery img(t);
    bool beta0_single = img.kids[img.root].size() == 2;
    if (!beta0_single) return unshift(img, k).to_tree();

    int v = img.kids[img.root].front();
    int r = rev_node_of(img);
    if (r == -1) throw std::logic_error("psi_inv: no rev-node in a branching tree");
    if (r == v) return unshift(img, k).to_tree();  // a1

    int u = img.par[r];
    std::vector<int> path = down_path(img, v, u);
    const int m = (int)path.size() - 1;
    std::vector<int> hang(m, -1);  // hanging branch of path[i], i < m
    for (int i = 0; i < m; ++i) hang[i] = hanging_of(img, path[i], path[i + 1]);
    int hang_u = hanging_of(img, u, r);
    if (hang_u == -1) throw std::logic_error("psi_inv: rev-node lost its younger sibling");

    if (img.kids[r].size() == 1) {
        // b1 inverse: the hanging branch of u drops to the rev-node, all other
        // hanging branches slide one step down.
        img.detach(hang_u);
        img.attach_back(r, hang_u);
        for (int i = 0; i < m; ++i)
            if (hang[i] != -1) img.detach(hang[i]);
        for (int i = 0; i < m; ++i) {
            if (hang[i] == -1) continue;
            int y = path[i + 1];
            int after = i + 1 < m ? path[i + 2] : r;
            img.attach(y, hang[i], img.pos(after) + 1);
        }
        return unshift(img, k).to_tree();
    }
    if (!img.is_leaf(r)) throw std::logic_error("psi_inv: rev-node with several children");

    int hang_v = m >= 1 ? hang[0] : -1;
    bool interior_clear = true;
    for (int i = 1; i < m; ++i)
        if (hang[i] != -1) interior_clear = false;

    if (hang_v == -1 && interior_clear) {
        // a2 inverse: the hanging branch of u returns to v; when u is v itself
        // the re-attachment lands right back where it was cut.
        int vchild = m >= 1 ? path[1] : r;
        img.detach(hang_u);
        img.attach(v, hang_u, img.pos(vchild) + 1);
    } else if (hang_v != -1) {
        // b2 inverse: the hanging branch of v becomes the rightmost branch of u.
        img.detach(hang[0]);
        img.attach_back(u, hang[0]);
    } else {
        // b3 inverse: reinsert the hanging branch of u as a middle branch at the
        // closest hung node above u.
        int x = -1, next = -1;
        for (int i = m - 1; i >= 1; --i)
            if (hang[i] != -1) { x = path[i]; next = path[i + 1]; break; }
        if (x == -1) throw std::logic_error("psi_inv: b3 shape without hung node");
        img.detach(hang_u);
        img.attach(x, hang_u, img.pos(next) + 1);
    }
    return unshift(img, k).to_tree();
}

// --- eta: canonical matching within composition-type classes -------------------

namespace {

struct EtaTable {
    std::map<std::string, std::string> fwd, bwd;
};

const EtaTable& eta_table(int n, int k) {
    static std::map<std::pair<int, int>, EtaTable> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;

    std::map<std::vector<int>, std::pair<std::vector<std::string>, std::vector<std::string>>>
        classes;
    for (const auto& enc : plane_encodings(n)) {
        PlaneTree t = parse_plane(enc);
        PlaneTreeStats st = tree_stats(t);
        if (st.bran < 2) continue;
        bool dom = st.rarm == 2 && st.larm == k;
        bool cod = st.rarm == 1 && st.larm == k + 1;
        if (!dom && !cod) continue;
        std::vector<int> key = dyck_stats(tau(t)).composition_type;
        if (dom) classes[key].first.push_back(enc);
        else classes[key].second.push_back(enc);
    }
    EtaTable table;
    for (auto& [key, pair] : classes) {
        auto& [dom, cod] = pair;
        if (dom.size() != cod.size())
            throw std::logic_error("eta: composition-type classes of unequal size");
        std::sort(dom.begin(), dom.end());
        std::sort(cod.begin(), cod.end());
        for (size_t i = 0; i < dom.size(); ++i) {
            table.fwd[dom[i]] = cod[i];
            table.bwd[cod[i]] = dom[i];
        }
    }
    return cache.emplace(std::make_pair(n, k), std::move(table)).first->second;
}

}  // namespace

PlaneTree eta(const PlaneTree& t) {
    if (t.labeled()) throw std::invalid_argument("eta: expects an unlabeled plane tree");
    PlaneTreeStats st = tree_stats(t);
    if (st.bran < 2 || st.rarm != 2)
        throw std::invalid_argument("eta: domain violation (bran >= 2, rarm = 2)");
    const EtaTable& table = eta_table(t.edge_count(), st.larm);
    return parse_plane(table.fwd.at(print_plane(t)));
}

PlaneTree eta_inv(const PlaneTree& t) {
    if (t.labeled()) throw std::invalid_argument("eta_inv: expects an unlabeled plane tree");
    PlaneTreeStats st = tree_stats(t);
    if (st.bran < 2 || st.rarm != 1 || st.larm < 2)
        throw std::invalid_argument("eta_inv: domain violation (bran >= 2, larm >= 2, rarm = 1)");
    const EtaTable& table = eta_table(t.edge_count(), st.larm - 1);
    return parse_plane(table.bwd.at(print_plane(t)));
}

// --- Psi ------------------------------------------------------------------------

namespace {

PlaneTree subtree_of(const PlaneTree& t, int v) {
    std::vector<int> nodes;
    std::vector<int> stack = {v};
    std::vector<int> local(t.node_count(), -1);
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        local[x] = (int)nodes.size();
        nodes.push_back(x);
        for (auto it = t.children[x].rbegin(); it != t.children[x].rend(); ++it)
            stack.push_back(*it);
    }
    std::vector<std::vector<int>> kids(nodes.size());
    for (int x : nodes)
        for (int c : t.children[x]) kids[local[x]].push_back(local[c]);
    return PlaneTree::from_adjacency(local[v], kids).first;
}

PlaneTree replace_subtree(const PlaneTree& t, int v, const PlaneTree& rep) {
    // Keep nodes outside v's subtree, then graft rep where v stood.
    std::vector<bool> inside(t.node_count(), false);
    std::vector<int> stack = {v};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        inside[x] = true;
        for (int c : t.children[x]) stack.push_back(c);
    }
    const int keep = t.node_count();
    std::vector<std::vector<int>> kids(keep + rep.node_count());
    for (int x = 0; x < keep; ++x) {
        if (inside[x] && x != v) continue;
        if (x == v) continue;
        for (int c : t.children[x])
            kids[x].push_back(c == v ? keep : c);
    }
    for (int x = 0; x < rep.node_count(); ++x)
        for (int c : rep.children[x]) kids[keep + x].push_back(keep + c);
    int root = v == 0 ? keep : 0;
    return PlaneTree::from_adjacency(root, kids).first;
}

PlaneTree delete_leaf(const PlaneTree& t, int v) {
    if (!t.is_leaf(v) || v == 0) throw std::logic_error("delete_leaf: not a non-root leaf");
    std::vector<std::vector<int>> kids(t.node_count());
    for (int x = 0; x < t.node_count(); ++x) {
        if (x == v) continue;
        for (int c : t.children[x])
            if (c != v) kids[x].push_back(c);
    }
    return PlaneTree::from_adjacency(0, kids).first;
}

PlaneTree attach_leaf(const PlaneTree& t, int parent, int position) {
    std::vector<std::vector<int>> kids = t.children;
    kids.push_back({});
    kids[parent].insert(kids[parent].begin() + position, t.node_count());
    return PlaneTree::from_adjacency(0, kids).first;
}

std::vector<int> right_arm_nodes(const PlaneTree& t) {
    std::vector<int> chain = {0};
    while (!t.is_leaf(chain.back())) chain.push_back(t.children[chain.back()].back());
    return chain;
}

}  // namespace

PlaneTree Psi(const PlaneTree& t) {
    if (t.labeled()) throw std::invalid_argument("Psi: expects an unlabeled plane tree");
    const int n = t.edge_count();
    if (n < 1) throw std::invalid_argument("Psi: n must be >= 1");
    if (n == 1) return t;

    PlaneTreeStats st = tree_stats(t);
    if (st.bran == 1) {
        int c = t.children[0][0];
        return replace_subtree(t, c, Psi(subtree_of(t, c)));
    }
    if (st.rarm >= 2) {
        std::vector<int> arm = right_arm_nodes(t);
        int pen = arm[arm.size() - 2];
        PlaneTree branch = subtree_of(t, pen);
        if ((int)branch.children[0].size() >= 2)
            return replace_subtree(t, pen, Psi(branch));
        PlaneTree shrunk = Psi(delete_leaf(t, arm.back()));
        std::vector<int> image_arm = right_arm_nodes(shrunk);
        return attach_leaf(shrunk, image_arm.back(), 0);
    }
    // rarm == 1
    if (st.larm == 1) {
        PlaneTree shrunk = Psi(delete_leaf(t, t.children[0][0]));
        return attach_leaf(shrunk, 0, 0);
    }
    return eta(Psi(psi_inv(t)));
}

}  // namespace treelab
