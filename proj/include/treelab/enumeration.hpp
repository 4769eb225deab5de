#pragma once

// Exhaustive generators for every family at a given size, plus the closed-form
// counting quantities used as oracles. Generators return canonical text
// encodings in lexicographic order; callers parse what they need.

#include <string>
#include <vector>

#include "treelab/trees.hpp"

namespace treelab {

struct FamilySpec {
    std::string family;  // plane|binary|disk|wit|witb|labeled|rb|dyck|avoid132
    int n = 0;           // size for the n-indexed families
    Multiset m;          // label multiset for wit/witb
};

// Dispatch on the family tag; throws on unknown tags or size/multiset mismatch.
std::vector<std::string> generate(const FamilySpec& spec);

std::vector<std::string> plane_encodings(int n);
std::vector<std::string> binary_encodings(int n);
std::vector<std::string> dyck_encodings(int n);
std::vector<std::string> avoid132_encodings(int n);
std::vector<std::string> disk_encodings(int n);
std::vector<std::string> labeled_tree_encodings(int n);  // plane, labels 0..n, kids increasing
std::vector<std::string> rb_encodings(int n);            // right increasing binary, labels 1..n
std::vector<std::string> wit_encodings(const Multiset& m);
std::vector<std::string> witb_encodings(const Multiset& m);

// Exact integer counting. Desk-scale values fit comfortably in 128 bits and
// every operation is overflow-checked; there is no floating point anywhere.
using Count = __int128;

std::string count_to_string(Count c);
Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);
Count binomial(long long a, long long b);

Count catalan(int n);
Count catalan_triangle(int n, int k);          // ballot numbers C_{n,k}, 1 <= k <= n
Count alpha(const std::vector<int>& profile);  // plane trees by level profile
std::vector<Count> tnk(int n);                 // [k] = T_{n,k} for k = 1..n; [0] unused
Count cayley_count(int n);                     // (n+1)^(n-1)

}  // namespace treelab
