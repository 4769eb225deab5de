#pragma once

// Shared worked examples used across the unit and acceptance suites. Labels
// carry each node's name so image trees can be compared node-by-node.

#include <stdexcept>

#include "treelab/trees.hpp"

namespace treelab::fixtures {

inline PlaneTree make_plane(const std::vector<std::vector<int>>& kids,
                            bool identity_labels = false) {
    std::vector<Label> labels;
    if (identity_labels)
        for (size_t i = 0; i < kids.size(); ++i) labels.push_back((Label)i);
    return PlaneTree::from_adjacency(0, kids, labels).first;
}

inline BinaryTree make_binary(int root, std::vector<int> left, std::vector<int> right,
                              std::vector<Label> labels = {},
                              LabelKind kind = LabelKind::none) {
    size_t n = left.size();
    if (labels.empty() && kind == LabelKind::integer)
        for (size_t i = 0; i < n; ++i) labels.push_back((Label)i);
    return BinaryTree::from_links(root, left, right, labels, kind).first;
}

// Node index carrying a given label.
inline int by_label(const PlaneTree& t, Label l) {
    for (int v = 0; v < t.node_count(); ++v)
        if (t.labels[v] == l) return v;
    throw std::logic_error("label not present");
}

inline int by_label(const BinaryTree& b, Label l) {
    for (int v = 0; v < b.node_count(); ++v)
        if (b.labels[v] == l) return v;
    throw std::logic_error("label not present");
}

// 10-edge tree whose marked node has right spanning width 5; the marked node
// is the only one with two children at depth 3.
inline PlaneTree rsw_example() {
    // ids: 0 root; 1..: first subtree, then two leaf children of the root
    // 0:[1,9,10]; 1:[2,3,7]; 3:[4]; 4:[5,6]; 7:[8]
    return make_plane({{1, 9, 10}, {2, 3, 7}, {}, {4}, {5, 6}, {}, {}, {8}, {}, {}, {}});
}
inline int rsw_example_marked_node() { return 4; }

// The 10-edge running example: tree, its rotation image, its mirror conjugate,
// and the pairing; node names follow the labels.
inline PlaneTree running_example() {
    return make_plane(
        {{1, 2, 3}, {4, 5, 6}, {}, {}, {}, {7}, {10}, {8, 9}, {}, {}, {}}, true);
}

inline BinaryTree running_example_phi() {
    // labels 1..10 on nodes; ids below equal label-1
    std::vector<int> left(10, -1), right(10, -1);
    auto L = [&](int a, int b) { left[a - 1] = b - 1; };
    auto R = [&](int a, int b) { right[a - 1] = b - 1; };
    L(1, 4); R(1, 2); R(2, 3); R(4, 5); L(5, 7); R(5, 6); L(7, 8); R(8, 9); L(6, 10);
    std::vector<Label> labels;
    for (int i = 1; i <= 10; ++i) labels.push_back(i);
    return make_binary(0, left, right, labels, LabelKind::integer);
}

inline PlaneTree running_example_phitilde() {
    // 0:[1,4]; 1:[2]; 2:[3]; 4:[5,7,8]; 5:[6,10]; 8:[9]
    return make_plane(
        {{1, 4}, {2}, {3}, {}, {5, 7, 8}, {6, 10}, {}, {}, {9}, {}, {}}, true);
}

// v -> u pairing of the running example, by node name.
inline std::vector<int> running_example_pairs() {
    return {3, 6, 1, 2, 0, 7, 10, 9, 4, 8, 5};
}

// Tree whose mirror conjugate realizes dual-rsw values 4 and 5.
inline PlaneTree trsw_example() {
    // 0:[1,2]; 1:[3]; 3:[4,5]; 5:[6,7]; 6:[8,9,10]
    return make_plane({{1, 2}, {3}, {}, {4, 5}, {}, {6, 7}, {8, 9, 10}, {}, {}, {}, {}},
                      true);
}

inline PlaneTree trsw_example_phitilde() {
    // 0:[1,3,4]; 1:[2]; 4:[5,6,8]; 6:[7]; 8:[9]; 9:[10]
    return make_plane({{1, 3, 4}, {2}, {}, {}, {5, 6, 8}, {}, {7}, {}, {9}, {10}, {}},
                      true);
}

// Weakly increasing tree on {1^4, 2^4, 3^2, 4^3, 5, 6^3}.
inline PlaneTree wit_example() {
    std::vector<std::vector<int>> kids = {
        {1, 4, 10, 13},  // 0 root
        {2},             // 1 (label 1)
        {3},             // 2 (label 1)
        {},              // 3 (label 5)
        {5, 9},          // 4 (label 1)
        {6, 7, 8},       // 5 (label 1)
        {}, {}, {},      // 6,7,8 (labels 2,2,4)
        {},              // 9 (label 3)
        {11, 12},        // 10 (label 2)
        {}, {},          // 11,12 (labels 2,4)
        {14},            // 13 (label 3)
        {15, 16, 17},    // 14 (label 4)
        {}, {}, {},      // 15,16,17 (labels 6,6,6)
    };
    std::vector<Label> labels = {0, 1, 1, 5, 1, 1, 2, 2, 4, 3, 2, 2, 4, 3, 4, 6, 6, 6};
    return PlaneTree::from_adjacency(0, kids, labels).first;
}

inline Multiset wit_example_multiset() {
    Multiset m;
    m.insert(1, 4);
    m.insert(2, 4);
    m.insert(3, 2);
    m.insert(4, 3);
    m.insert(5, 1);
    m.insert(6, 3);
    return m;
}

// 10-node di-sk tree with top 2, rpop 3, omi 4; node names are preorder ranks.
inline BinaryTree disk_example() {
    std::vector<int> left(10, -1), right(10, -1);
    auto L = [&](int a, int b) { left[a - 1] = b - 1; };
    auto R = [&](int a, int b) { right[a - 1] = b - 1; };
    L(1, 2); R(1, 6); L(2, 3); R(3, 4); L(4, 5); L(6, 7); R(6, 10); R(7, 8); L(8, 9);
    std::vector<Label> signs = {1, 1, -1, 1, -1, -1, -1, 1, 1, 1};
    return make_binary(0, left, right, signs, LabelKind::sign);
}

// 17-node binary tree with spi 3, rspi 4 and nine right chains, plus its
// image under the reverse-spine involution.
inline BinaryTree spine_example() {
    std::vector<int> left(17, -1), right(17, -1);
    auto L = [&](int a, int b) { left[a - 1] = b - 1; };
    auto R = [&](int a, int b) { right[a - 1] = b - 1; };
    L(1, 2); R(1, 10); L(2, 3); R(2, 4); L(4, 5); R(4, 8); L(5, 6); R(6, 7); L(8, 9);
    R(10, 11); R(11, 12); L(12, 13); R(12, 17); L(13, 14); R(13, 15); L(15, 16);
    std::vector<Label> labels;
    for (int i = 1; i <= 17; ++i) labels.push_back(i);
    return make_binary(0, left, right, labels, LabelKind::integer);
}

inline BinaryTree spine_example_theta() {
    std::vector<int> left(17, -1), right(17, -1);
    auto L = [&](int a, int b) { left[a - 1] = b - 1; };
    auto R = [&](int a, int b) { right[a - 1] = b - 1; };
    L(17, 16); R(17, 12); L(16, 15); L(15, 14); R(15, 13); R(12, 11); R(11, 10);
    L(10, 9); R(10, 1); L(9, 8); L(8, 7); R(8, 4); R(7, 6); L(6, 5); L(4, 3); R(4, 2);
    std::vector<Label> labels;
    for (int i = 1; i <= 17; ++i) labels.push_back(i);
    return make_binary(16, left, right, labels, LabelKind::integer);
}

// 17-edge tree with larm 2, rarm 3, rev 5, run 4 whose Dyck image has
// ret 3, hrun 2, vrun 4 and composition type (3,3,1,2,1,2,2,1,1,1).
inline PlaneTree preorder_example() {
    // names 1..18 are preorder ranks; ids below are name-1
    std::vector<std::vector<int>> kids(18);
    auto C = [&](int a, std::vector<int> cs) {
        for (int& c : cs) --c;
        kids[a - 1] = cs;
    };
    C(1, {2, 10, 11}); C(2, {3, 4, 8}); C(4, {5}); C(5, {6, 7}); C(8, {9});
    C(11, {12, 17}); C(12, {13, 15}); C(13, {14}); C(15, {16}); C(17, {18});
    return make_plane(kids);
}

inline std::string preorder_example_dyck() {
    return "EEENEEENNENEENNNENNNEENEENENNENNEN";
}

// 10-edge tree mapping to the word 9,6,5,7,8,3,4,10,2,1.
inline PlaneTree jani_example() {
    // 0:[1,9,10]; 1:[2,3,7]; 3:[4]; 4:[5,6]; 7:[8]
    return make_plane({{1, 9, 10}, {2, 3, 7}, {}, {4}, {5, 6}, {}, {}, {8}, {}, {}, {}});
}

inline Permutation jani_example_word() { return Permutation{{9, 6, 5, 7, 8, 3, 4, 10, 2, 1}}; }

// Rooted labeled tree chain: t -> phi -> theta -> phi_inv, all four stages.
inline PlaneTree labeled_example() {
    // structure ids with labels: 0:[3,6,7]; 3:[2,4,10]; 4:[9]; 9:[5,8]; 10:[1]
    std::vector<std::vector<int>> kids = {
        {1, 8, 9},  // 0 (label 0)
        {2, 3, 6},  // 1 (label 3)
        {},         // 2 (label 2)
        {4},        // 3 (label 4)
        {5, 7},     // 4 (label 9)
        {},         // 5 (label 5)
        {10},       // 6 (label 10)
        {},         // 7 (label 8)
        {},         // 8 (label 6)
        {},         // 9 (label 7)
        {},         // 10 (label 1)
    };
    std::vector<Label> labels = {0, 3, 2, 4, 9, 5, 10, 8, 6, 7, 1};
    return PlaneTree::from_adjacency(0, kids, labels).first;
}

inline BinaryTree labeled_example_phi() {
    std::vector<int> left(10, -1), right(10, -1);
    std::vector<Label> labels = {3, 2, 4, 9, 5, 8, 10, 1, 6, 7};
    auto idx = [&](Label l) {
        for (int i = 0; i < 10; ++i)
            if (labels[i] == l) return i;
        return -1;
    };
    auto L = [&](Label a, Label b) { left[idx(a)] = idx(b); };
    auto R = [&](Label a, Label b) { right[idx(a)] = idx(b); };
    L(3, 2); R(3, 6); R(2, 4); L(4, 9); R(4, 10); L(9, 5); R(5, 8); L(10, 1); R(6, 7);
    return make_binary(0, left, right, labels, LabelKind::integer);
}

inline BinaryTree labeled_example_theta() {
    std::vector<int> left(10, -1), right(10, -1);
    std::vector<Label> labels = {4, 5, 8, 10, 1, 3, 6, 2, 7, 9};
    auto idx = [&](Label l) {
        for (int i = 0; i < 10; ++i)
            if (labels[i] == l) return i;
        return -1;
    };
    auto L = [&](Label a, Label b) { left[idx(a)] = idx(b); };
    auto R = [&](Label a, Label b) { right[idx(a)] = idx(b); };
    R(4, 5); L(5, 10); R(5, 8); L(10, 1); L(1, 3); R(1, 7); R(3, 6); L(6, 2); R(7, 9);
    return make_binary(0, left, right, labels, LabelKind::integer);
}

inline PlaneTree labeled_example_thetatilde() {
    // 0:[4,5,8]; 5:[10]; 10:[1,7,9]; 1:[3,6]; 6:[2]
    std::vector<std::vector<int>> kids = {
        {1, 2, 3},  // 0 (label 0)
        {},         // 1 (label 4)
        {4},        // 2 (label 5)
        {},         // 3 (label 8)
        {5, 8, 9},  // 4 (label 10)
        {6, 7},     // 5 (label 1)
        {},         // 6 (label 3)
        {10},       // 7 (label 6)
        {},         // 8 (label 7)
        {},         // 9 (label 9)
        {},         // 10 (label 2)
    };
    std::vector<Label> labels = {0, 4, 5, 8, 10, 1, 3, 6, 7, 9, 2};
    return PlaneTree::from_adjacency(0, kids, labels).first;
}

// Worked slice-surgery instances, one per dispatch case.
inline PlaneTree psi_case_a2_input() {
    return make_plane({{1, 10, 13}, {2}, {3, 6, 7}, {4, 5}, {}, {}, {}, {8, 9}, {}, {},
                       {11}, {12}, {}, {14}, {}});
}
inline PlaneTree psi_case_a2_image() {
    return make_plane({{1, 14}, {2}, {3}, {4, 7, 8}, {5, 6}, {}, {}, {}, {9, 10, 11}, {},
                       {}, {12}, {13}, {}, {}});
}

inline PlaneTree psi_case_b1_input() {
    return make_plane({{1, 14}, {2, 12}, {3, 4, 5}, {}, {}, {6, 16}, {7, 8}, {}, {9, 11},
                       {10}, {}, {}, {13}, {}, {15}, {}, {}});
}
inline PlaneTree psi_case_b1_image() {
    return make_plane({{1, 16}, {2, 14}, {3}, {4, 5, 6, 13}, {}, {}, {7}, {8, 9, 12},
                       {}, {10}, {11}, {}, {}, {}, {15}, {}, {}});
}

inline PlaneTree psi_case_b2_input() {
    return make_plane({{1, 2, 4, 19}, {}, {3}, {}, {5}, {6, 18}, {7, 8}, {},
                       {9, 12, 13, 15}, {10, 11}, {}, {}, {}, {14}, {}, {16}, {17}, {},
                       {}, {20}, {}});
}
inline PlaneTree psi_case_b2_image() {
    return make_plane({{1, 19}, {2, 3, 5, 16}, {}, {4}, {}, {6}, {7, 20}, {8, 9}, {},
                       {10, 13, 14}, {11, 12}, {}, {}, {}, {15}, {}, {17}, {18}, {}, {},
                       {}});
}

inline PlaneTree psi_case_b3_input() {
    return make_plane({{1, 2, 4, 19}, {}, {3}, {}, {5}, {6, 18}, {7, 8}, {}, {9, 13, 15},
                       {10, 11}, {}, {12}, {}, {14}, {}, {16}, {17}, {}, {}, {20}, {}});
}
inline PlaneTree psi_case_b3_image() {
    return make_plane({{1, 19}, {2, 3, 5}, {}, {4}, {}, {6}, {7, 20}, {8, 9}, {},
                       {10, 16}, {11, 12}, {}, {13, 14}, {}, {15}, {}, {17}, {18}, {}, {},
                       {}});
}

}  // namespace treelab::fixtures
