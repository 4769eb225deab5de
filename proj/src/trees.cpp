#include "treelab/trees.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace treelab {

// --- Multiset ---------------------------------------------------------------

Multiset Multiset::from_values(const std::vector<Label>& values) {
    Multiset m;
    for (Label v : values) m.insert(v);
    return m;
}

Multiset Multiset::parse_csv(const std::string& csv) {
    Multiset m;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("multiset: empty entry");
        m.insert(std::stoll(item));
    }
    return m;
}

void Multiset::insert(Label v, int times) {
    if (times <= 0) throw std::invalid_argument("multiset: multiplicity must be positive");
    count[v] += times;
}

int Multiset::size() const {
    int total = 0;
    for (auto& [v, c] : count) total += c;
    return total;
}

std::vector<Label> Multiset::values() const {
    std::vector<Label> out;
    for (auto& [v, c] : count)
        for (int i = 0; i < c; ++i) out.push_back(v);
    return out;
}

std::string Multiset::to_string() const {
    std::string s = "{";
    bool first = true;
    for (Label v : values()) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

// --- construction ------------------------------------------------------------

int PlaneTree::child_index(int v) const {
    int p = parent[v];
    if (p < 0) return 0;
    const auto& sib = children[p];
    for (int i = 0; i < (int)sib.size(); ++i)
        if (sib[i] == v) return i;
    throw std::logic_error("child_index: broken parent link");
}

std::pair<PlaneTree, std::vector<int>> PlaneTree::from_adjacency(
    int root, const std::vector<std::vector<int>>& kids,
    const std::vector<Label>& labels) {
    const int m = (int)kids.size();
    PlaneTree t;
    std::vector<int> index_of(m, -1);

    // Iterative preorder over the old ids.
    std::vector<std::pair<int, int>> stack;  // (old id, next child slot)
    stack.push_back({root, 0});
    index_of[root] = 0;
    t.parent.push_back(-1);
    t.children.push_back({});
    if (!labels.empty()) t.labels.push_back(labels[root]);
    while (!stack.empty()) {
        auto& [v, slot] = stack.back();
        if (slot == (int)kids[v].size()) {
            stack.pop_back();
            continue;
        }
        int c = kids[v][slot++];
        if (index_of[c] != -1) throw std::logic_error("from_adjacency: node revisited");
        int nv = (int)t.parent.size();
        index_of[c] = nv;
        t.parent.push_back(index_of[v]);
        t.children[index_of[v]].push_back(nv);
        t.children.push_back({});
        if (!labels.empty()) t.labels.push_back(labels[c]);
        stack.push_back({c, 0});
    }
    return {std::move(t), std::move(index_of)};
}

std::pair<BinaryTree, std::vector<int>> BinaryTree::from_links(
    int root, const std::vector<int>& left, const std::vector<int>& right,
    const std::vector<Label>& labels, LabelKind kind) {
    const int m = (int)left.size();
    BinaryTree b;
    b.label_kind = kind;
    std::vector<int> index_of(m, -1);
    if (root < 0) return {std::move(b), std::move(index_of)};

    // Iterative preorder: node, left subtree, right subtree.
    std::vector<int> stack = {root};
    std::vector<int> old_parent(m, -1);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (index_of[v] != -1) throw std::logic_error("from_links: node revisited");
        int nv = (int)b.parent.size();
        index_of[v] = nv;
        b.parent.push_back(old_parent[v] == -1 ? -1 : index_of[old_parent[v]]);
        b.left.push_back(-1);
        b.right.push_back(-1);
        if (kind != LabelKind::none) b.labels.push_back(labels[v]);
        if (b.parent[nv] != -1) {
            int p = b.parent[nv];
            // The parent was numbered before us; hook the proper side.
            if (left[old_parent[v]] == v) b.left[p] = nv;
            else b.right[p] = nv;
        }
        if (right[v] != -1) { old_parent[right[v]] = v; stack.push_back(right[v]); }
        if (left[v] != -1) { old_parent[left[v]] = v; stack.push_back(left[v]); }
    }
    return {std::move(b), std::move(index_of)};
}

// --- text encodings -----------------------------------------------------------

namespace {

void skip_ws(const std::string& s, size_t& pos) {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
}

std::vector<Label> parse_label_suffix(const std::string& text, size_t& pos) {
    std::vector<Label> labels;
    if (pos >= text.size() || text[pos] != '[') return labels;
    ++pos;
    while (true) {
        skip_ws(text, pos);
        size_t start = pos;
        if (pos < text.size() && text[pos] == '-') ++pos;
        while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
        if (pos == start) throw std::invalid_argument("plane tree: bad label list");
        labels.push_back(std::stoll(text.substr(start, pos - start)));
        skip_ws(text, pos);
        if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
        if (pos < text.size() && text[pos] == ']') { ++pos; break; }
        throw std::invalid_argument("plane tree: unterminated label list");
    }
    return labels;
}

}  // namespace

PlaneTree parse_plane(const std::string& text) {
    PlaneTree t;
    t.parent.push_back(-1);
    t.children.push_back({});
    int cur = 0;
    size_t pos = 0;
    while (pos < text.size()) {
        char c = text[pos];
        if (c == '(') {
            int v = (int)t.parent.size();
            t.parent.push_back(cur);
            t.children[cur].push_back(v);
            t.children.push_back({});
            cur = v;
            ++pos;
        } else if (c == ')') {
            if (cur == 0) throw std::invalid_argument("plane tree: unbalanced parentheses");
            cur = t.parent[cur];
            ++pos;
        } else if (c == '[') {
            break;
        } else if (std::isspace((unsigned char)c)) {
            ++pos;
        } else {
            throw std::invalid_argument("plane tree: unexpected character");
        }
    }
    if (cur != 0) throw std::invalid_argument("plane tree: unbalanced parentheses");
    skip_ws(text, pos);
    if (pos < text.size()) {
        t.labels = parse_label_suffix(text, pos);
        if ((int)t.labels.size() != t.node_count())
            throw std::invalid_argument("plane tree: label count differs from node count");
    }
    skip_ws(text, pos);
    if (pos != text.size()) throw std::invalid_argument("plane tree: trailing input");
    return t;
}

std::string print_plane(const PlaneTree& t) {
    std::string out;
    // DFS emitting "(" on descent and ")" on ascent.
    std::vector<std::pair<int, int>> stack = {{0, 0}};
    while (!stack.empty()) {
        auto& [v, slot] = stack.back();
        if (slot == (int)t.children[v].size()) {
            stack.pop_back();
            if (!stack.empty()) out += ')';
            continue;
        }
        int c = t.children[v][slot++];
        out += '(';
        stack.push_back({c, 0});
    }
    if (t.labeled()) {
        out += '[';
        for (int v = 0; v < t.node_count(); ++v) {
            if (v) out += ',';
            out += std::to_string(t.labels[v]);
        }
        out += ']';
    }
    return out;
}

namespace {

// Recursive-descent node parser for the binary grammar; returns node id or -1.
struct BinaryParser {
    const std::string& text;
    size_t pos = 0;
    std::vector<int> left, right;
    std::vector<Label> labels;
    bool saw_label = false, saw_plain = false;

    explicit BinaryParser(const std::string& s) : text(s) {}

    int parse_node() {
        skip_ws(text, pos);
        if (pos >= text.size()) throw std::invalid_argument("binary tree: truncated input");
        if (text[pos] == '_') { ++pos; return -1; }
        if (text[pos] != '(') throw std::invalid_argument("binary tree: expected '(' or '_'");
        ++pos;
        int l = parse_node();
        skip_ws(text, pos);
        Label lbl = 0;
        bool has_label = false;
        LabelKind kind = LabelKind::none;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-') &&
            !(pos + 1 < text.size() && std::isdigit((unsigned char)text[pos + 1]))) {
            lbl = text[pos] == '+' ? 1 : -1;
            kind = LabelKind::sign;
            has_label = true;
            ++pos;
        } else if (pos < text.size() &&
                   (std::isdigit((unsigned char)text[pos]) || text[pos] == '-')) {
            size_t start = pos;
            if (text[pos] == '-') ++pos;
            while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
            lbl = std::stoll(text.substr(start, pos - start));
            kind = LabelKind::integer;
            has_label = true;
        }
        int r = parse_node();
        skip_ws(text, pos);
        if (pos >= text.size() || text[pos] != ')')
            throw std::invalid_argument("binary tree: unbalanced parentheses");
        ++pos;
        int v = (int)left.size();
        left.push_back(l);
        right.push_back(r);
        labels.push_back(lbl);
        if (has_label) { saw_label = true; label_kind = merge_kind(label_kind, kind); }
        else saw_plain = true;
        return v;
    }

    LabelKind label_kind = LabelKind::none;
    static LabelKind merge_kind(LabelKind a, LabelKind b) {
        if (a == LabelKind::none) return b;
        if (a != b) throw std::invalid_argument("binary tree: mixed label kinds");
        return a;
    }
};

}  // namespace

BinaryTree parse_binary(const std::string& text) {
    BinaryParser p(text);
    int root = p.parse_node();
    skip_ws(text, p.pos);
    if (p.pos != text.size()) throw std::invalid_argument("binary tree: trailing input");
    if (p.saw_label && p.saw_plain)
        throw std::invalid_argument("binary tree: labels must cover every node or none");
    if (root == -1) return BinaryTree{};
    return BinaryTree::from_links(root, p.left, p.right, p.labels,
                                  p.saw_label ? p.label_kind : LabelKind::none)
        .first;
}

std::string print_binary(const BinaryTree& b) {
    if (b.empty()) return "_";
    std::string out;
    // Explicit stack with an emit-phase marker.
    struct Frame { int v; int phase; };
    std::vector<Frame> stack = {{0, 0}};
    auto emit_label = [&](int v) {
        if (b.label_kind == LabelKind::sign) out += b.labels[v] > 0 ? "+" : "-";
        else out += std::to_string(b.labels[v]);
    };
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.phase == 0) {
            out += '(';
            f.phase = 1;
            if (b.left[f.v] != -1) stack.push_back({b.left[f.v], 0});
            else out += '_';
        } else if (f.phase == 1) {
            out += ' ';
            if (b.labeled()) { emit_label(f.v); out += ' '; }
            f.phase = 2;
            if (b.right[f.v] != -1) stack.push_back({b.right[f.v], 0});
            else out += '_';
        } else {
            out += ')';
            stack.pop_back();
        }
    }
    return out;
}

DyckPath parse_dyck(const std::string& text) {
    if (!is_dyck(text)) throw std::invalid_argument("dyck path: invalid step word");
    return DyckPath{text};
}

std::string print_dyck(const DyckPath& p) { return p.steps; }

Permutation parse_permutation(const std::string& text) {
    Permutation p;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("permutation: empty entry");
        p.word.push_back(std::stoi(item));
    }
    std::vector<bool> seen(p.size() + 1, false);
    for (int v : p.word) {
        if (v < 1 || v > p.size() || seen[v])
            throw std::invalid_argument("permutation: not a rearrangement of 1..n");
        seen[v] = true;
    }
    return p;
}

std::string print_permutation(const Permutation& p) {
    std::string out;
    for (int i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.word[i]);
    }
    return out;
}

// --- traversals ---------------------------------------------------------------

std::vector<int> preorder(const PlaneTree& t) {
    std::vector<int> order;
    order.reserve(t.node_count());
    std::vector<int> stack = {0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (auto it = t.children[v].rbegin(); it != t.children[v].rend(); ++it)
            stack.push_back(*it);
    }
    return order;
}

std::vector<int> postorder(const PlaneTree& t) {
    std::vector<int> order;
    order.reserve(t.node_count());
    std::vector<std::pair<int, int>> stack = {{0, 0}};
    while (!stack.empty()) {
        auto& [v, slot] = stack.back();
        if (slot == (int)t.children[v].size()) {
            order.push_back(v);
            stack.pop_back();
            continue;
        }
        stack.push_back({t.children[v][slot++], 0});
    }
    return order;
}

std::vector<int> preorder(const BinaryTree& b) {
    std::vector<int> order;
    if (b.empty()) return order;
    order.reserve(b.node_count());
    std::vector<int> stack = {0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        if (b.right[v] != -1) stack.push_back(b.right[v]);
        if (b.left[v] != -1) stack.push_back(b.left[v]);
    }
    return order;
}

std::vector<int> reverse_preorder(const BinaryTree& b) {
    std::vector<int> order;
    if (b.empty()) return order;
    order.reserve(b.node_count());
    // Emit right subtree, left subtree, node: collect node-left-right in a
    // stack-friendly order and reverse at the end.
    std::vector<int> stack = {0};
    std::vector<int> tmp;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        tmp.push_back(v);
        if (b.right[v] != -1) stack.push_back(b.right[v]);
        if (b.left[v] != -1) stack.push_back(b.left[v]);
    }
    // tmp is the preorder; reverse preorder visits nodes in exactly the
    // opposite order (right subtree first, then left, then the node).
    order.assign(tmp.rbegin(), tmp.rend());
    return order;
}

std::pair<BinaryTree, std::vector<int>> mirror_corr(const BinaryTree& b) {
    if (b.empty()) return {BinaryTree{}, {}};
    return BinaryTree::from_links(0, b.right, b.left, b.labels, b.label_kind);
}

BinaryTree mirror(const BinaryTree& b) { return mirror_corr(b).first; }

// --- family predicates ----------------------------------------------------------

bool is_weakly_increasing_plane(const PlaneTree& t, const Multiset& m) {
    if (!t.labeled()) throw std::invalid_argument("weakly increasing tree: labels missing");
    if (t.labels[0] != 0) return false;
    Multiset got;
    for (int v = 1; v < t.node_count(); ++v) got.insert(t.labels[v]);
    if (!(got == m) || m.size() != t.edge_count()) return false;
    for (int v = 0; v < t.node_count(); ++v) {
        Label prev = t.labels[v];  // children at least the parent, and sorted
        for (int c : t.children[v]) {
            if (t.labels[c] < prev) return false;
            prev = t.labels[c];
        }
        if (v > 0 && t.labels[v] < t.labels[t.parent[v]]) return false;
    }
    return true;
}

bool is_weakly_increasing_binary(const BinaryTree& b, const Multiset& m) {
    if (!b.empty() && b.label_kind != LabelKind::integer)
        throw std::invalid_argument("weakly increasing binary tree: labels missing");
    Multiset got;
    for (int v = 0; v < b.node_count(); ++v) got.insert(b.labels[v]);
    if (!(got == m)) return false;
    for (int v = 0; v < b.node_count(); ++v)
        if (b.parent[v] != -1 && b.labels[v] < b.labels[b.parent[v]]) return false;
    return true;
}

bool is_disk(const BinaryTree& b) {
    if (b.empty()) return false;
    if (b.label_kind != LabelKind::sign)
        throw std::invalid_argument("di-sk tree: sign labels missing");
    for (int v = 0; v < b.node_count(); ++v) {
        if (b.labels[v] != 1 && b.labels[v] != -1) return false;
        // Right chain condition: no node shares its sign with its right child.
        if (b.right[v] != -1 && b.labels[b.right[v]] == b.labels[v]) return false;
    }
    return true;
}

bool is_rooted_labeled(const PlaneTree& t) {
    if (!t.labeled()) throw std::invalid_argument("rooted labeled tree: labels missing");
    const int n = t.edge_count();
    if (t.labels[0] != 0) return false;
    std::vector<bool> seen(n + 1, false);
    for (int v = 0; v < t.node_count(); ++v) {
        Label l = t.labels[v];
        if (l < 0 || l > n || seen[l]) return false;
        seen[l] = true;
    }
    for (int v = 0; v < t.node_count(); ++v)
        for (int i = 1; i < (int)t.children[v].size(); ++i)
            if (t.labels[t.children[v][i - 1]] >= t.labels[t.children[v][i]]) return false;
    return true;
}

bool is_right_increasing_binary(const BinaryTree& b) {
    if (!b.empty() && b.label_kind != LabelKind::integer)
        throw std::invalid_argument("right increasing binary tree: labels missing");
    const int n = b.node_count();
    std::vector<bool> seen(n + 1, false);
    for (int v = 0; v < n; ++v) {
        Label l = b.labels[v];
        if (l < 1 || l > n || seen[l]) return false;
        seen[l] = true;
    }
    for (int v = 0; v < n; ++v)
        if (b.right[v] != -1 && b.labels[b.right[v]] <= b.labels[v]) return false;
    return true;
}

bool is_132_avoiding(const Permutation& p) {
    const int n = p.size();
    // Pattern i<j<k with w[i] < w[k] < w[j]; track the prefix minimum as the "1".
    int prefix_min = n + 1;
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k)
            if (prefix_min < p.word[k] && p.word[k] < p.word[j]) return false;
        prefix_min = std::min(prefix_min, p.word[j]);
    }
    return true;
}

bool is_dyck(const std::string& steps) {
    int diff = 0;
    for (char c : steps) {
        if (c == 'E') ++diff;
        else if (c == 'N') --diff;
        else return false;
        if (diff < 0) return false;
    }
    return diff == 0;
}

}  // namespace treelab
