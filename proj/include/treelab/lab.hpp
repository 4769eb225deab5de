#pragma once

// Distribution tables over exhaustively generated families, the C_n(x,y,z)
// arm/rev polynomial with its monomial-symmetric decomposition, and the
// registry of verifiable claims.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "treelab/enumeration.hpp"

namespace treelab {

struct DistributionTable {
    std::vector<std::string> stat_names;
    std::map<std::vector<std::string>, long long> entries;

    long long total() const;
    std::string to_string() const;
    bool same_counts(const DistributionTable& other) const { return entries == other.entries; }
};

// Values of the named statistics for one encoded structure; node-level
// statistics read the node id argument. Throws on unknown names.
std::vector<std::string> eval_stats(const std::string& family, const std::string& encoding,
                                    const std::vector<std::string>& stats, int node = -1);

// Exact joint distribution of the named statistics over the whole family.
DistributionTable distribution(const FamilySpec& spec, const std::vector<std::string>& stats);

struct SymmetricPolynomial3 {
    std::map<std::array<int, 3>, long long> coeff;  // exponent triple -> count
    // Partition of the exponent triple -> coefficient, in (degree, smallest
    // partition last) order; filled only when `symmetric` holds.
    std::vector<std::pair<std::vector<int>, long long>> m_basis;
    bool symmetric = false;
};

SymmetricPolynomial3 cnxyz(int n);
// hrun/ret/vrun distribution over Dyck paths in the same exponent convention.
SymmetricPolynomial3 dyck_xyz(int n);
std::string m_basis_to_string(const SymmetricPolynomial3& p);

struct ClaimReport {
    std::string id;
    int n = 0;  // size parameter the claim ran at
    bool pass = false;
    bool expected_negative = false;  // passes by exhibiting a counterexample
    std::vector<std::string> counterexamples;
    std::string detail;
    double millis = 0.0;
};

// Runs one registered claim; n = -1 uses its default desk-scale size.
ClaimReport verify(const std::string& claim_id, int n = -1);
std::vector<std::string> claim_ids();
std::string claim_description(const std::string& claim_id);

}  // namespace treelab
