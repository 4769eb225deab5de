#pragma once

// Bijections and involutions between the families. Maps whose source theorems
// are node-level return a NodeCorrespondence alongside the image; statistics-
// only callers may ignore it.

#include "treelab/trees.hpp"

namespace treelab {

struct NodeCorrespondence {
    std::vector<int> to_image;  // source node -> image node, -1 when dropped
};

struct MappedBinary {
    BinaryTree tree;
    NodeCorrespondence corr;
};

struct MappedPlane {
    PlaneTree tree;
    NodeCorrespondence corr;
};

// Classical rotation correspondence: eldest child -> left child, closest
// younger sibling -> right child. The plane root is dropped; phi_inv adds a
// fresh root (labeled 0 for labeled inputs).
MappedBinary phi(const PlaneTree& t);
MappedPlane phi_inv(const BinaryTree& b);

// The pairing v ~> u on the nodes of t, by the direct three-case rule.
std::vector<int> leadsto(const PlaneTree& t);

// Completion of phi(t) with supplied leaves; the basis for the ~> pairing.
struct ComplementTree {
    BinaryTree tree;             // 2n+1 nodes
    std::vector<int> plane_node; // original nodes: plane id; supplied: -1
    std::vector<int> prime_of;   // supplied node labeled v': v; original: -1
};
ComplementTree complement(const PlaneTree& t);
// Reads the pairing off the two complements; oracle for leadsto().
std::vector<int> leadsto_via_complement(const PlaneTree& t);

// Mirror conjugated through phi; fixes node identity (root -> root).
MappedPlane phitilde(const PlaneTree& t);

// Reverse-preorder rebuild: right edges flip orientation, spine statistics swap.
MappedBinary theta_binary(const BinaryTree& b);
MappedBinary theta_disk(const BinaryTree& d);   // signs travel with their nodes
MappedBinary theta_rb(const BinaryTree& r);     // labels complemented i -> n+1-i
// theta conjugated through phi; plain plane trees or rooted labeled trees.
MappedPlane thetatilde(const PlaneTree& t);

// Plane trees <-> Dyck paths via preorder degree recording.
DyckPath tau(const PlaneTree& t);
PlaneTree tau_inv(const DyckPath& d);

// Plane trees <-> 132-avoiding permutations (reverse-preorder labels read in
// postorder).
Permutation jani(const PlaneTree& t);
PlaneTree jani_inv(const Permutation& p);

// jani-conjugate of phitilde.
Permutation theta_perm(const Permutation& p);

// Slice bijections behind the rev/run exchange, and the exchange itself.
// psi: {bran>=2, larm=k, rarm=2} -> {bran>=2, larm=k+1, rarm=1}.
PlaneTree psi(const PlaneTree& t);
PlaneTree psi_inv(const PlaneTree& t);
// eta: same slices, matched canonically within composition-type classes.
PlaneTree eta(const PlaneTree& t);
PlaneTree eta_inv(const PlaneTree& t);
PlaneTree Psi(const PlaneTree& t);

}  // namespace treelab
