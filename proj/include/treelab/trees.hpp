#pragma once

// Carriers for the combinatorial families: plane trees, binary trees, Dyck
// paths and permutations, together with their text encodings, traversals and
// the per-family validity predicates.

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace treelab {

using Label = long long;

// Multiset of labels with positive multiplicities, e.g. {1^2, 4}.
struct Multiset {
    std::map<Label, int> count;

    static Multiset from_values(const std::vector<Label>& values);
    static Multiset parse_csv(const std::string& csv);

    void insert(Label v, int times = 1);
    int size() const;
    bool empty() const { return count.empty(); }
    std::vector<Label> values() const;  // expanded, sorted ascending
    std::string to_string() const;
    bool operator==(const Multiset&) const = default;
};

enum class LabelKind { none, integer, sign };

// Rooted ordered tree. Nodes are preorder ranks; the root is node 0.
struct PlaneTree {
    std::vector<int> parent;                 // parent[0] == -1
    std::vector<std::vector<int>> children;  // ordered eldest..youngest
    std::vector<Label> labels;               // empty when unlabeled

    int node_count() const { return (int)parent.size(); }
    int edge_count() const { return node_count() - 1; }
    bool labeled() const { return !labels.empty(); }
    bool is_leaf(int v) const { return children[v].empty(); }
    int child_index(int v) const;  // position among siblings, root -> 0
    bool operator==(const PlaneTree&) const = default;

    // Renumbers an arbitrary dense-id adjacency into preorder form.
    // Returns the tree and the old-id -> new-id map.
    static std::pair<PlaneTree, std::vector<int>> from_adjacency(
        int root, const std::vector<std::vector<int>>& kids,
        const std::vector<Label>& labels = {});
};

// Binary tree, possibly empty. Nodes are preorder ranks; the root is node 0.
struct BinaryTree {
    std::vector<int> parent, left, right;  // -1 = absent
    std::vector<Label> labels;
    LabelKind label_kind = LabelKind::none;

    int node_count() const { return (int)parent.size(); }
    bool empty() const { return parent.empty(); }
    bool labeled() const { return label_kind != LabelKind::none; }
    bool operator==(const BinaryTree&) const = default;

    static std::pair<BinaryTree, std::vector<int>> from_links(
        int root, const std::vector<int>& left, const std::vector<int>& right,
        const std::vector<Label>& labels = {},
        LabelKind kind = LabelKind::none);
};

// Lattice path from (0,0) to (n,n) over steps E/N, weakly below the diagonal.
struct DyckPath {
    std::string steps;  // over {'E','N'}

    int order() const { return (int)steps.size() / 2; }
    bool operator==(const DyckPath&) const = default;
};

// One-line notation word on [n].
struct Permutation {
    std::vector<int> word;

    int size() const { return (int)word.size(); }
    bool operator==(const Permutation&) const = default;
};

// --- text encodings -------------------------------------------------------
//
// Plane tree: balanced parentheses, "(" on edge descent and ")" on ascent,
// so a tree with n edges prints as 2n characters; an optional label suffix
// "[l0,l1,...,ln]" lists labels in preorder, root first.
// Binary tree: "_" | "(" B B ")", labeled form "(" B lbl B ")" where lbl is
// an integer or "+"/"-" for sign labels.
// Dyck path: word over {E,N}. Permutation: comma-separated integers.

PlaneTree parse_plane(const std::string& text);
std::string print_plane(const PlaneTree& t);
BinaryTree parse_binary(const std::string& text);
std::string print_binary(const BinaryTree& b);
DyckPath parse_dyck(const std::string& text);
std::string print_dyck(const DyckPath& p);
Permutation parse_permutation(const std::string& text);
std::string print_permutation(const Permutation& p);

// --- traversals ------------------------------------------------------------

std::vector<int> preorder(const PlaneTree& t);
std::vector<int> postorder(const PlaneTree& t);
std::vector<int> preorder(const BinaryTree& b);
// Right subtree, then left subtree, then the node itself.
std::vector<int> reverse_preorder(const BinaryTree& b);

std::pair<BinaryTree, std::vector<int>> mirror_corr(const BinaryTree& b);
BinaryTree mirror(const BinaryTree& b);

// --- family predicates ------------------------------------------------------
//
// Predicates requiring labels throw std::invalid_argument when the labels are
// missing or of the wrong kind; a plain `false` always means the labeled
// structure genuinely violates the family's rules.

bool is_weakly_increasing_plane(const PlaneTree& t, const Multiset& m);
bool is_weakly_increasing_binary(const BinaryTree& b, const Multiset& m);
bool is_disk(const BinaryTree& b);
bool is_rooted_labeled(const PlaneTree& t);
bool is_right_increasing_binary(const BinaryTree& b);
bool is_132_avoiding(const Permutation& p);
bool is_dyck(const std::string& steps);

}  // namespace treelab
