#pragma once

// Node-level and structure-level statistics, computed purely from the carriers.

#include <vector>

#include "treelab/trees.hpp"

namespace treelab {

struct NodeStats {
    int lev = 0;       // distance to the root
    int deg = 0;       // number of children
    int lchain = 0;    // edges in the eldest-child chain down to a leaf
    int lc = 0;        // nodes hanging left of the root path
    int dlev = 0;      // 0 at the root, lc+1 otherwise
    int lsw = 0;       // deg + lc
    int rsw = 0;       // deg + nodes hanging right of the root path
    int dual_deg = 0;  // positive exactly at leaves
    int dlsw = 0;
    int drsw = 0;
    int dual_rsw = 0;
};

NodeStats node_stats(const PlaneTree& t, int v);

struct PlaneTreeStats {
    int leaf = 0, internal = 0, bran = 0, larm = 0, rarm = 0, rev = 0, run = 0;
    std::vector<int> degree_sequence;  // internal-node degrees, sorted
    std::vector<int> lev_multiset;     // levels of all nodes, sorted
    std::vector<int> lsw_multiset;     // left spanning widths, sorted
    // Label multisets, filled only for labeled trees.
    std::vector<Label> repeated_siblings;  // Bro
    std::vector<Label> repeated_parents;   // Par
    std::vector<Label> young_leaves;       // Yle
};

PlaneTreeStats tree_stats(const PlaneTree& t);

// #nodes at level i for i = 1..height (the root's level 0 is implicit).
std::vector<int> level_profile(const PlaneTree& t);

struct BinaryTreeStats {
    int spi = 0;   // nodes before the first preorder node that is a right child
    int rspi = 0;  // nodes before the first reverse-preorder node owning a right child
    int lrb = 0;   // left edges on the right boundary
    std::vector<int> right_chain_sequence;  // right-edge counts per maximal chain, sorted
};

BinaryTreeStats binary_stats(const BinaryTree& b);

struct DiskStats {
    int top = 0;   // initial run of plus-nodes in preorder
    int rpop = 0;  // initial run of plus-nodes in reverse preorder
    int omi = 0;   // number of minus-nodes
};

DiskStats disk_stats(const BinaryTree& d);

struct DyckStats {
    int ret = 0;   // returns to the diagonal after departure
    int hrun = 0;  // north steps up to and including the first NN
    int vrun = 0;  // east steps strictly after the last EE's first step
    int iest = 0;  // initial consecutive east steps
    int peak = 0;  // occurrences of EN
    std::vector<int> composition_type;  // east-run lengths in order
};

DyckStats dyck_stats(const DyckPath& p);

struct PermStats {
    int is_len = 0;  // longest increasing subsequence
    int ds_len = 0;  // longest decreasing subsequence
    std::vector<int> ir_sizes;  // |IR(w_i)| over all i, sorted
    std::vector<int> il_sizes;  // |IL(w_i)| over all i, sorted
};

PermStats perm_stats(const Permutation& p);

}  // namespace treelab
