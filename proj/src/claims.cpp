// Registry of verifiable claims: every headline identity becomes a named
// exhaustive check at desk scale, with negative claims that pass only by
// exhibiting a concrete discrepancy.

#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "treelab/lab.hpp"
#include "treelab/maps.hpp"
#include "treelab/statistics.hpp"

namespace treelab {

namespace {

struct Claim {
    std::string desc;
    int default_n;
    bool negative;
    std::function<void(int, ClaimReport&)> run;
};

void fail(ClaimReport& r, const std::string& counterexample) {
    r.pass = false;
    if (r.counterexamples.size() < 5) r.counterexamples.push_back(counterexample);
}

template <typename F>
void for_each_plane(int max_n, F&& fn) {
    for (int n = 1; n <= max_n; ++n)
        for (const auto& enc : plane_encodings(n)) fn(parse_plane(enc), enc);
}

std::string fmt(const std::string& enc, const std::string& why) {
    return enc + " (" + why + ")";
}

// --- involutions -----------------------------------------------------------

void run_phitilde_involution(int max_n, ClaimReport& r) {
    for_each_plane(max_n, [&](const PlaneTree& t, const std::string& enc) {
        if (!(phitilde(phitilde(t).tree).tree == t)) fail(r, fmt(enc, "phitilde^2 != id"));
    });
}

void run_spine_involution(int max_n, ClaimReport& r) {
    for (int n = 1; n <= max_n; ++n)
        for (const auto& enc : binary_encodings(n)) {
            BinaryTree b = parse_binary(enc);
            MappedBinary tb = theta_binary(b);
            if (!(theta_binary(tb.tree).tree == b)) fail(r, fmt(enc, "theta^2 != id"));
            BinaryTreeStats sb = binary_stats(b), si = binary_stats(tb.tree);
            if (sb.right_chain_sequence != si.right_chain_sequence)
                fail(r, fmt(enc, "right chain sequence changed"));
            if (sb.spi != si.rspi || sb.rspi != si.spi) fail(r, fmt(enc, "spi/rspi not swapped"));
            if (sb.lrb != si.lrb) fail(r, fmt(enc, "lrb changed"));
        }
}

void run_thetatilde_involution(int max_n, ClaimReport& r) {
    for_each_plane(max_n, [&](const PlaneTree& t, const std::string& enc) {
        if (!(thetatilde(thetatilde(t).tree).tree == t)) fail(r, fmt(enc, "thetatilde^2 != id"));
    });
}

void run_disk_involution(int max_n, ClaimReport& r) {
    for (int n = 1; n <= max_n; ++n)
        for (const auto& enc : disk_encodings(n)) {
            BinaryTree d = parse_binary(enc);
            MappedBinary td = theta_disk(d);
            if (!is_disk(td.tree)) fail(r, fmt(enc, "image violates the right chain condition"));
            if (!(theta_disk(td.tree).tree == d)) fail(r, fmt(enc, "theta^2 != id"));
        }
}

void run_perm_involution(int max_n, ClaimReport& r) {
    for (int n = 1; n <= max_n; ++n)
        for (const auto& enc : avoid132_encodings(n)) {
            Permutation p = parse_permutation(enc);
            Permutation q = theta_perm(p);
            if (!is_132_avoiding(q)) fail(r, fmt(enc, "image not 132-avoiding"));
            if (!(theta_perm(q) == p)) fail(r, fmt(enc, "theta^2 != id"));
        }
}

void run_rb_involution(int max_n, ClaimReport& r) {
    for (int n = 1; n <= max_n; ++n)
        for (const auto& enc : rb_encodings(n)) {
            BinaryTree b = parse_binary(enc);
            MappedBinary tb = theta_rb(b);
            if (!is_right_increasing_binary(tb.tree)) fail(r, fmt(enc, "image left the family"));
            if (!(theta_rb(tb.tree).tree == b)) fail(r, fmt(enc, "theta^2 != id"));
        }
}

// --- the mirror-symmetry circle of results ----------------------------------

void run_lev_lsw_duality(int max_n, ClaimReport& r) {
    for_each_plane(max_n, [&](const PlaneTree& t, const std::string& enc) {
        MappedPlane pt = phitilde(t);
        std::vector<int> to = leadsto(t);
        for (int v = 0; v < t.node_count(); ++v) {
            int u = pt.corr.to_image[to[v]];
            NodeStats sv = node_stats(t, v), su = node_stats(pt.tree, u);
            if (sv.lev != su.lsw || sv.lsw != su.lev)
                fail(r, fmt(enc, "lev/lsw mismatch at node " + std::to_string(v)));
            if (sv.deg != su.dual_deg)
                fail(r, fmt(enc, "deg/dual-deg mismatch at node " + std::to_string(v)));
        }
    });
}

void run_complement_path_counts(int max_n, ClaimReport& r) {
    for_each_plane(max_n, [&](const PlaneTree& t, const std::string& enc) {
        ComplementTree c = complement(t);
        for (int x = 0; x < c.tree.node_count(); ++x) {
            if (c.prime_of[x] == -1) continue;
            int lefts = 0, rights = 0;
            for (int w = x; c.tree.parent[w] != -1; w = c.tree.parent[w]) {
                if (c.tree.left[c.tree.parent[w]] == w) ++lefts;
                else ++rights;
            }
            NodeStats s = node_stats(t, c.prime_of[x]);
            if (s.lev != lefts || s.lsw != rights)
                fail(r, fmt(enc, "path counts off at node " + std::to_string(c.prime_of[x])));
        }
    });
}

void run_phi_left_right_edges(int max_n, ClaimReport& r) {
    for_each_plane(max_n, [&](const PlaneTree& t, const std::string& enc) {
        MappedBinary pb = phi(t);
        for (int v = 1; v < t.node_count(); ++v) {
            int lefts = 0, rights = 0;
            for (int w = pb.corr.to_image[v]; pb.tree.parent[w] != -1; w = pb.tree.parent[w]) {
                if (pb.tree.left[pb.tree.parent[w]] == w) ++lefts;
                else ++rights;
            }
            NodeStats s = node_stats(t, v);
            if (s.lev - 1 != lefts || s.lc != rights)
                fail(r, fmt(enc, "edge counts off at node " + std::to_string(v)));
        }
    });
}

void run_leadsto_direct(int max_n, ClaimReport& r) {
    for_each_plane(max_n, [&](const PlaneTree& t, const std::string& enc) {
        if (leadsto(t) != leadsto_via_complement(t))
            fail(r, fmt(enc, "direct rule disagrees with the complement"));
    });
}

void run_three_new_stats(int max_n, ClaimReport& r) {
    for_each_plane(max_n, [&](const PlaneTree& t, const std::string& enc) {
        MappedPlane pt = phitilde(t);
        for (int v = 0; v < t.node_count(); ++v) {
            NodeStats sv = node_stats(t, v);
            NodeStats si = node_stats(pt.tree, pt.corr.to_image[v]);
            if (sv.lev != si.dlev || sv.lsw != si.dlsw || sv.rsw != si.drsw)
                fail(r, fmt(enc, "triple mismatch at node " + std::to_string(v)));
        }
    });
}

void run_rsw_duality(int max_n, ClaimReport& r) {
    for_each_plane(max_n, [&](const PlaneTree& t, const std::string& enc) {
        MappedPlane pt = phitilde(t);
        std::vector<int> to = leadsto(t);
        for (int v = 0; v < t.node_count(); ++v) {
            int u = pt.corr.to_image[to[v]];
            NodeStats sv = node_stats(t, v), su = node_stats(pt.tree, u);
            if (sv.lsw != su.lev || sv.lev != su.lsw || sv.rsw != su.dual_rsw ||
                sv.dual_rsw != su.rsw)
                fail(r, fmt(enc, "quadruple mismatch at node " + std::to_string(v)));
        }
    });
}

void run_deg_lchain(int max_n, ClaimReport& r) {
    for_each_plane(max_n, [&](const PlaneTree& t, const std::string& enc) {
        MappedPlane pt = phitilde(t);
        for (int v = 1; v < t.node_count(); ++v) {
            if (t.is_leaf(v)) continue;
            int u = pt.corr.to_image[t.children[v][0]];
            if (node_stats(t, v).deg != node_stats(pt.tree, u).lchain + 1)
                fail(r, fmt(enc, "deg/lchain mismatch at node " + std::to_string(v)));
        }
    });
}

void run_rsw_drsw(int max_n, ClaimReport& r) {
    for_each_plane(max_n, [&](const PlaneTree& t, const std::string& enc) {
        MappedPlane pt = phitilde(t);
        for (int v = 0; v < t.node_count(); ++v)
            if (node_stats(t, v).rsw != node_stats(pt.tree, pt.corr.to_image[v]).drsw)
                fail(r, fmt(enc, "rsw/drsw mismatch at node " + std::to_string(v)));
    });
}

void run_lsw_refinement(int max_n, ClaimReport& r) {
    for_each_plane(max_n, [&](const PlaneTree& t, const std::string& enc) {
        for (int v = 0; v < t.node_count(); ++v) {
            NodeStats s = node_stats(t, v);
            if (s.lsw != s.deg + s.lc) fail(r, fmt(enc, "lsw != deg + lc"));
        }
    });
}

void run_septuple_wit(int max_n, ClaimReport& r) {
    // All multisets over values {1,2,3} with 1 <= |M| <= max_n.
    for (int p1 = 0; p1 <= max_n; ++p1)
        for (int p2 = 0; p1 + p2 <= max_n; ++p2)
            for (int p3 = 0; p1 + p2 + p3 <= max_n; ++p3) {
                if (p1 + p2 + p3 == 0) continue;
                Multiset m;
                if (p1) m.insert(1, p1);
                if (p2) m.insert(2, p2);
                if (p3) m.insert(3, p3);
                std::map<std::string, long long> lhs, rhs;
                for (const auto& enc : wit_encodings(m)) {
                    PlaneTree t = parse_plane(enc);
                    MappedPlane pt = phitilde(t);
                    if (!is_weakly_increasing_plane(pt.tree, m))
                        fail(r, fmt(enc, "phitilde left the family"));
                    std::vector<int> to = leadsto(t);
                    for (int v = 0; v < t.node_count(); ++v) {
                        int u = pt.corr.to_image[to[v]];
                        NodeStats sv = node_stats(t, v), su = node_stats(pt.tree, u);
                        if (sv.lev != su.lsw || sv.lsw != su.lev || sv.deg != su.dual_deg)
                            fail(r, fmt(enc, "node-level mismatch"));
                    }
                    auto key = [](const std::vector<std::string>& parts) {
                        std::string k;
                        for (const auto& p : parts) k += p + "|";
                        return k;
                    };
                    auto vals = eval_stats("wit", enc,
                                           {"Lev", "Lsw", "Bro", "Par", "Yle", "leaf", "int"});
                    ++lhs[key(vals)];
                    ++rhs[key({vals[1], vals[0], vals[3], vals[2], vals[4], vals[6], vals[5]})];
                }
                if (lhs != rhs) fail(r, "septuple distributions differ on M=" + m.to_string());
            }
}

// --- the reverse-spine circle of results -------------------------------------

void run_disk_top_rpop(int max_n, ClaimReport& r) {
    for (int n = 1; n <= max_n; ++n) {
        std::map<std::array<int, 3>, long long> lhs, rhs;
        for (const auto& enc : disk_encodings(n)) {
            BinaryTree d = parse_binary(enc);
            DiskStats s = disk_stats(d);
            ++lhs[{s.omi, s.top, s.rpop}];
            ++rhs[{s.omi, s.rpop, s.top}];
            DiskStats si = disk_stats(theta_disk(d).tree);
            if (si.omi != s.omi || si.top != s.rpop || si.rpop != s.top)
                fail(r, fmt(enc, "theta witness fails"));
        }
        if (lhs != rhs) fail(r, "joint distribution asymmetric at n=" + std::to_string(n));
    }
}

void run_phi_arm_spine(int max_n, ClaimReport& r) {
    for_each_plane(max_n, [&](const PlaneTree& t, const std::string& enc) {
        PlaneTreeStats st = tree_stats(t);
        BinaryTreeStats sb = binary_stats(phi(t).tree);
        if (st.larm != sb.spi || st.rev != sb.rspi || st.rarm != sb.lrb + 1)
            fail(r, fmt(enc, "arm/spine relations fail"));
        // A chain with l right edges gathers the l+1 children of one internal node.
        std::vector<int> shifted = sb.right_chain_sequence;
        for (int& l : shifted) ++l;
        if (st.degree_sequence != shifted)
            fail(r, fmt(enc, "degree sequence != right chain sequence"));
    });
}

void run_tau_triple(int max_n, ClaimReport& r) {
    for_each_plane(max_n, [&](const PlaneTree& t, const std::string& enc) {
        DyckPath d = tau(t);
        if (!(tau_inv(d) == t)) fail(r, fmt(enc, "tau_inv(tau) != id"));
        PlaneTreeStats st = tree_stats(t);
        DyckStats sd = dyck_stats(d);
        if (st.larm != sd.hrun || st.rarm != sd.ret || st.run != sd.vrun)
            fail(r, fmt(enc, "(larm,rarm,run) != (hrun,ret,vrun)"));
    });
}

void run_tau_bran_leaf(int max_n, ClaimReport& r) {
    for_each_plane(max_n, [&](const PlaneTree& t, const std::string& enc) {
        PlaneTreeStats st = tree_stats(t);
        DyckStats sd = dyck_stats(tau(t));
        if (st.bran != sd.iest) fail(r, fmt(enc, "bran != iest"));
        if (st.leaf != t.edge_count() + 1 - sd.peak) fail(r, fmt(enc, "leaf != n+1-peak"));
    });
}

void run_thetatilde_plane(int max_n, ClaimReport& r) {
    for_each_plane(max_n, [&](const PlaneTree& t, const std::string& enc) {
        PlaneTreeStats a = tree_stats(t), b = tree_stats(thetatilde(t).tree);
        if (a.degree_sequence != b.degree_sequence) fail(r, fmt(enc, "degree sequence changed"));
        if (a.rarm != b.rarm) fail(r, fmt(enc, "rarm changed"));
        if (a.larm != b.rev || a.rev != b.larm) fail(r, fmt(enc, "larm/rev not swapped"));
    });
}

void run_catalan_triangle_rev(int max_n, ClaimReport& r) {
    for (int n = 1; n <= max_n; ++n) {
        std::vector<long long> by_rev(n + 1, 0), by_larm(n + 1, 0);
        for (const auto& enc : plane_encodings(n)) {
            PlaneTreeStats s = tree_stats(parse_plane(enc));
            ++by_rev[s.rev];
            ++by_larm[s.larm];
        }
        for (int k = 1; k <= n; ++k) {
            Count expect = catalan_triangle(n, k);
            if (Count(by_rev[k]) != expect || Count(by_larm[k]) != expect)
                fail(r, "n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                            ": rev/larm counts miss the ballot number");
        }
    }
}

void run_alpha_profile(int max_n, ClaimReport& r) {
    for (int n = 1; n <= max_n; ++n) {
        std::map<std::vector<int>, long long> profiles;
        for (const auto& enc : plane_encodings(n))
            ++profiles[level_profile(parse_plane(enc))];
        Count total = 0;
        for (auto& [profile, cnt] : profiles) {
            if (alpha(profile) != Count(cnt)) {
                std::string p;
                for (int j : profile) p += std::to_string(j) + ",";
                fail(r, "profile (" + p + ") count differs from the formula");
            }
            total = checked_add(total, cnt);
        }
        if (total != catalan(n)) fail(r, "profile counts do not sum to Catalan");
    }
}

void run_psi_lemma(int max_n, ClaimReport& r) {
    for (int n = 1; n <= max_n; ++n) {
        std::map<int, std::map<std::string, std::string>> images;  // k -> dom enc -> img enc
        std::map<int, std::set<std::string>> codomain;
        for (const auto& enc : plane_encodings(n)) {
            PlaneTree t = parse_plane(enc);
            PlaneTreeStats s = tree_stats(t);
            if (s.bran < 2) continue;
            if (s.rarm == 2) {
                PlaneTree img = psi(t);
                PlaneTreeStats si = tree_stats(img);
                if (si.bran < 2 || si.larm != s.larm + 1 || si.rarm != 1)
                    fail(r, fmt(enc, "image outside the target slice"));
                if (si.rev != s.rev || si.leaf != s.leaf)
                    fail(r, fmt(enc, "(rev,leaf) not preserved"));
                if (!(psi_inv(img) == t)) fail(r, fmt(enc, "psi_inv(psi) != id"));
                auto [it, fresh] = images[s.larm].emplace(enc, print_plane(img));
                (void)it;
                if (!fresh) fail(r, fmt(enc, "duplicate domain entry"));
            } else if (s.rarm == 1 && s.larm >= 2) {
                codomain[s.larm - 1].insert(enc);
                if (!(psi(psi_inv(t)) == t)) fail(r, fmt(enc, "psi(psi_inv) != id"));
            }
        }
        for (auto& [k, map] : images) {
            std::set<std::string> img_set;
            for (auto& [dom, img] : map) img_set.insert(img);
            if (img_set.size() != map.size()) fail(r, "psi not injective on a slice");
            if (img_set != codomain[k]) fail(r, "psi not onto its slice");
        }
    }
}

void run_eta_lemma(int max_n, ClaimReport& r) {
    for (int n = 1; n <= max_n; ++n)
        for (const auto& enc : plane_encodings(n)) {
            PlaneTree t = parse_plane(enc);
            PlaneTreeStats s = tree_stats(t);
            if (s.bran < 2 || s.rarm != 2) continue;
            PlaneTree img = eta(t);
            PlaneTreeStats si = tree_stats(img);
            if (si.bran < 2 || si.larm != s.larm + 1 || si.rarm != 1)
                fail(r, fmt(enc, "image outside the target slice"));
            if (dyck_stats(tau(t)).composition_type != dyck_stats(tau(img)).composition_type)
                fail(r, fmt(enc, "composition type changed"));
            if (s.run != si.run || s.leaf != si.leaf || s.bran != si.bran ||
                s.degree_sequence != si.degree_sequence)
                fail(r, fmt(enc, "(run,leaf,bran)/degrees not preserved"));
            if (!(eta_inv(img) == t)) fail(r, fmt(enc, "eta_inv(eta) != id"));
        }
}

void run_Psi_theorem(int max_n, ClaimReport& r) {
    for (int n = 1; n <= max_n; ++n) {
        std::set<std::string> images;
        long long count = 0;
        for (const auto& enc : plane_encodings(n)) {
            PlaneTree t = parse_plane(enc);
            PlaneTree img = Psi(t);
            PlaneTreeStats s = tree_stats(t), si = tree_stats(img);
            if (s.larm != si.larm || s.rarm != si.rarm || s.leaf != si.leaf)
                fail(r, fmt(enc, "(larm,rarm,leaf) not preserved"));
            if (s.rev != si.run) fail(r, fmt(enc, "rev does not map to run"));
            images.insert(print_plane(img));
            ++count;
        }
        if ((long long)images.size() != count)
            fail(r, "Psi not a bijection at n=" + std::to_string(n));
    }
}

void run_is_ds_inequality(int max_n, ClaimReport& r) {
    for (int n = 1; n <= max_n; ++n)
        for (const auto& enc : avoid132_encodings(n)) {
            Permutation p = parse_permutation(enc);
            Permutation q = theta_perm(p);
            PermStats sp = perm_stats(p), sq = perm_stats(q);
            if (sp.is_len > sq.ds_len) fail(r, fmt(enc, "is > ds after theta"));
            if (sp.ir_sizes != sq.il_sizes) fail(r, fmt(enc, "IR != IL after theta"));
        }
}

void run_is_max_ir(int max_n, ClaimReport& r) {
    for (int n = 1; n <= max_n; ++n)
        for (const auto& enc : avoid132_encodings(n)) {
            PermStats s = perm_stats(parse_permutation(enc));
            if (s.is_len != s.ir_sizes.back()) fail(r, fmt(enc, "is != max |IR|"));
            if (s.ds_len < s.il_sizes.back()) fail(r, fmt(enc, "ds < max |IL|"));
        }
}

// --- rooted labeled trees / right increasing binary trees ----------------------

void run_theta_rb_claim(int max_n, ClaimReport& r) {
    for (int n = 1; n <= max_n; ++n)
        for (const auto& enc : rb_encodings(n)) {
            BinaryTree b = parse_binary(enc);
            MappedBinary tb = theta_rb(b);
            if (!is_right_increasing_binary(tb.tree)) fail(r, fmt(enc, "image left the family"));
            BinaryTreeStats sb = binary_stats(b), si = binary_stats(tb.tree);
            if (sb.right_chain_sequence != si.right_chain_sequence)
                fail(r, fmt(enc, "right chain sequence changed"));
            if (sb.spi != si.rspi || sb.rspi != si.spi)
                fail(r, fmt(enc, "spi/rspi not swapped"));
        }
}

void run_rl_interpretations(int max_n, ClaimReport& r) {
    for (int n = 1; n <= max_n; ++n) {
        std::set<std::string> rb_images;
        std::map<int, long long> larm_d, rarm_d, rev_d, spi_d, rspi_d, lrb1_d;
        for (const auto& enc : labeled_tree_encodings(n)) {
            PlaneTree t = parse_plane(enc);
            MappedBinary pb = phi(t);
            if (!is_right_increasing_binary(pb.tree))
                fail(r, fmt(enc, "phi image not right increasing"));
            rb_images.insert(print_binary(pb.tree));
            PlaneTreeStats st = tree_stats(t);
            BinaryTreeStats sb = binary_stats(pb.tree);
            if (st.larm != sb.spi || st.rev != sb.rspi || st.rarm != sb.lrb + 1)
                fail(r, fmt(enc, "arm/spine relations fail"));
            MappedPlane tt = thetatilde(t);
            if (!is_rooted_labeled(tt.tree)) fail(r, fmt(enc, "thetatilde left the family"));
            PlaneTreeStats si = tree_stats(tt.tree);
            if (st.degree_sequence != si.degree_sequence || st.rarm != si.rarm ||
                st.larm != si.rev || st.rev != si.larm)
                fail(r, fmt(enc, "thetatilde statistics wrong"));
            ++larm_d[st.larm];
            ++rarm_d[st.rarm];
            ++rev_d[st.rev];
            ++spi_d[sb.spi];
            ++rspi_d[sb.rspi];
            ++lrb1_d[sb.lrb + 1];
        }
        if ((Count)rb_images.size() != cayley_count(n))
            fail(r, "phi not injective onto the right increasing trees at n=" + std::to_string(n));
        std::vector<Count> expect = tnk(n);
        for (int k = 1; k <= n; ++k)
            for (auto* d : {&larm_d, &rarm_d, &rev_d, &spi_d, &rspi_d, &lrb1_d})
                if (Count((*d)[k]) != expect[k])
                    fail(r, "triangle mismatch at n=" + std::to_string(n) +
                                ",k=" + std::to_string(k));
    }
}

void run_tnk_triangle(int max_n, ClaimReport& r) {
    for (int n = 1; n <= max_n; ++n) {
        std::vector<Count> row = tnk(n);
        Count total = 0;
        for (int k = 1; k <= n; ++k) total = checked_add(total, row[k]);
        if (total != cayley_count(n))
            fail(r, "row sum != (n+1)^(n-1) at n=" + std::to_string(n));
        std::map<int, long long> larm_d;
        for (const auto& enc : labeled_tree_encodings(n))
            ++larm_d[tree_stats(parse_plane(enc)).larm];
        for (int k = 1; k <= n; ++k)
            if (Count(larm_d[k]) != row[k])
                fail(r, "larm distribution misses T_{n,k} at n=" + std::to_string(n));
    }
}

void run_rarm_rev_symmetric_lt(int max_n, ClaimReport& r) {
    for (int n = 1; n <= max_n; ++n) {
        std::map<std::pair<int, int>, long long> lhs, rhs;
        for (const auto& enc : labeled_tree_encodings(n)) {
            PlaneTreeStats s = tree_stats(parse_plane(enc));
            ++lhs[{s.rarm, s.rev}];
            ++rhs[{s.rev, s.rarm}];
        }
        if (lhs != rhs) fail(r, "(rarm,rev) not exchange-symmetric at n=" + std::to_string(n));
    }
}

// --- C_n(x,y,z) -----------------------------------------------------------------

void run_cnxyz_reference(int, ClaimReport& r) {
    using Part = std::vector<int>;
    auto expect = [&](int n, std::map<Part, long long> want) {
        SymmetricPolynomial3 p = cnxyz(n);
        if (!p.symmetric) { fail(r, "C_" + std::to_string(n) + " not symmetric"); return; }
        std::map<Part, long long> got(p.m_basis.begin(), p.m_basis.end());
        if (got != want) fail(r, "C_" + std::to_string(n) + " differs from the printed expansion");
    };
    expect(1, {{{0, 0, 0}, 1}});
    expect(2, {{{0, 0, 0}, 1}, {{1, 1, 1}, 1}});
    expect(3, {{{0, 0, 0}, 1}, {{1, 1, 0}, 1}, {{2, 2, 2}, 1}});
    expect(4, {{{0, 0, 0}, 1},
               {{1, 0, 0}, 1},
               {{1, 1, 0}, 1},
               {{2, 2, 0}, 1},
               {{2, 1, 1}, 1},
               {{3, 3, 3}, 1}});
    expect(5, {{{0, 0, 0}, 2},
               {{1, 0, 0}, 2},
               {{2, 0, 0}, 1},
               {{1, 1, 0}, 2},
               {{2, 1, 0}, 1},
               {{1, 1, 1}, 2},
               {{2, 2, 0}, 1},
               {{2, 1, 1}, 1},
               {{3, 3, 0}, 1},
               {{3, 2, 1}, 1},
               {{2, 2, 2}, 1},
               {{4, 4, 4}, 1}});
}

void run_cnxyz_symmetry(int max_n, ClaimReport& r) {
    for (int n = 1; n <= max_n; ++n)
        if (!cnxyz(n).symmetric) fail(r, "C_n not S3-symmetric at n=" + std::to_string(n));
}

void run_cnxyz_dyck(int max_n, ClaimReport& r) {
    for (int n = 1; n <= max_n; ++n)
        if (cnxyz(n).coeff != dyck_xyz(n).coeff)
            fail(r, "C_n differs from the Dyck (hrun,ret,vrun) table at n=" + std::to_string(n));
}

// --- negative claims --------------------------------------------------------------

void run_rev_run_pair_p5(int, ClaimReport& r) {
    std::map<std::pair<int, int>, long long> lhs, rhs;
    for (const auto& enc : plane_encodings(5)) {
        PlaneTreeStats s = tree_stats(parse_plane(enc));
        ++lhs[{s.rev, s.run}];
        ++rhs[{s.run, s.rev}];
    }
    r.pass = lhs != rhs;
    if (r.pass)
        for (auto& [k, c] : lhs) {
            if (rhs[k] == c) continue;
            r.counterexamples.push_back("(rev,run)=(" + std::to_string(k.first) + "," +
                                        std::to_string(k.second) + "): " + std::to_string(c) +
                                        " vs " + std::to_string(rhs[k]) + " swapped");
            break;
        }
}

void run_rev_run_lt4(int, ClaimReport& r) {
    std::map<int, long long> rev_d, run_d;
    for (const auto& enc : labeled_tree_encodings(4)) {
        PlaneTreeStats s = tree_stats(parse_plane(enc));
        ++rev_d[s.rev];
        ++run_d[s.run];
    }
    r.pass = rev_d != run_d;
    if (r.pass)
        for (auto& [k, c] : rev_d)
            if (run_d[k] != c) {
                r.counterexamples.push_back("rev=" + std::to_string(k) + ": " +
                                            std::to_string(c) + " trees vs run: " +
                                            std::to_string(run_d[k]));
                break;
            }
}

void run_larm_rarm_rev_swap_lt4(int, ClaimReport& r) {
    std::map<std::array<int, 3>, long long> lhs, rhs;
    for (const auto& enc : labeled_tree_encodings(4)) {
        PlaneTreeStats s = tree_stats(parse_plane(enc));
        ++lhs[{s.larm, s.rarm, s.rev}];
        ++rhs[{s.rarm, s.larm, s.rev}];
    }
    r.pass = lhs != rhs;
    if (r.pass)
        for (auto& [k, c] : lhs)
            if (rhs[k] != c) {
                r.counterexamples.push_back(
                    "(larm,rarm,rev)=(" + std::to_string(k[0]) + "," + std::to_string(k[1]) +
                    "," + std::to_string(k[2]) + "): " + std::to_string(c) + " vs " +
                    std::to_string(rhs[k]) + " swapped");
                break;
            }
}

const std::map<std::string, Claim>& registry() {
    static const std::map<std::string, Claim> claims = {
        {"phitilde-involution",
         {"phitilde is an involution on plane trees", 10, false, run_phitilde_involution}},
        {"spine-involution",
         {"theta is an involution preserving right chains and lrb, swapping spi/rspi", 12, false,
          run_spine_involution}},
        {"thetatilde-involution",
         {"thetatilde is an involution on plane trees", 10, false, run_thetatilde_involution}},
        {"disk-involution",
         {"theta is an involution on di-sk trees", 9, false, run_disk_involution}},
        {"perm-involution",
         {"theta is an involution on 132-avoiders", 9, false, run_perm_involution}},
        {"rb-involution",
         {"theta is an involution on right increasing binary trees", 7, false,
          run_rb_involution}},
        {"lev-lsw-duality",
         {"lev/lsw swap and deg/dual-deg match across phitilde under the pairing", 10, false,
          run_lev_lsw_duality}},
        {"complement-path-counts",
         {"lev/lsw count left/right edges to the primed leaf in the complement", 10, false,
          run_complement_path_counts}},
        {"phi-left-right-edges",
         {"lev-1/lc count left/right edges to the node in phi's image", 10, false,
          run_phi_left_right_edges}},
        {"leadsto-direct",
         {"the direct pairing rule agrees with the complement construction", 10, false,
          run_leadsto_direct}},
        {"three-new-stats",
         {"(lev,lsw,rsw) maps to (dlev,dlsw,drsw) node-by-node under phitilde", 10, false,
          run_three_new_stats}},
        {"rsw-duality",
         {"(lsw,lev,rsw,dual-rsw) swaps across phitilde under the pairing", 10, false,
          run_rsw_duality}},
        {"deg-lchain",
         {"deg(v) = lchain of the eldest child's image + 1", 10, false, run_deg_lchain}},
        {"rsw-drsw", {"rsw(v) = drsw of v's image", 10, false, run_rsw_drsw}},
        {"lsw-refinement", {"lsw = deg + lc at every node", 10, false, run_lsw_refinement}},
        {"septuple-wit",
         {"septuple equidistribution over weakly increasing trees (values in {1,2,3})", 6,
          false, run_septuple_wit}},
        {"disk-top-rpop",
         {"(omi,top,rpop) is exchange-symmetric in top/rpop, witnessed by theta", 9, false,
          run_disk_top_rpop}},
        {"phi-arm-spine",
         {"larm/rev/rarm match spi/rspi/lrb+1 and degrees match right chains under phi", 10,
          false, run_phi_arm_spine}},
        {"tau-triple",
         {"(larm,rarm,run) maps to (hrun,ret,vrun) under tau", 10, false, run_tau_triple}},
        {"tau-bran-leaf",
         {"bran = iest and leaf = n+1-peak under tau", 10, false, run_tau_bran_leaf}},
        {"thetatilde-plane",
         {"thetatilde preserves degrees and rarm, swaps larm/rev", 10, false,
          run_thetatilde_plane}},
        {"catalan-triangle-rev",
         {"rev and larm distributions give the ballot numbers", 12, false,
          run_catalan_triangle_rev}},
        {"alpha-profile",
         {"level-profile counts match the binomial product formula", 8, false,
          run_alpha_profile}},
        {"psi-lemma",
         {"psi is a slice bijection preserving (rev,leaf)", 10, false, run_psi_lemma}},
        {"eta-lemma",
         {"eta is a slice bijection preserving composition type", 10, false, run_eta_lemma}},
        {"Psi-theorem",
         {"Psi preserves (larm,rarm,leaf) and maps rev to run", 10, false, run_Psi_theorem}},
        {"is-ds-inequality",
         {"is <= ds after theta and IR = IL after theta on 132-avoiders", 9, false,
          run_is_ds_inequality}},
        {"is-max-ir",
         {"is equals max |IR| on 132-avoiders; ds >= max |IL| always", 9, false,
          run_is_max_ir}},
        {"theta-rb",
         {"theta on right increasing binary trees preserves right chains, swaps spi/rspi", 7,
          false, run_theta_rb_claim}},
        {"rl-interpretations",
         {"rooted-labeled statistics interpret the T_{n,k} triangle through phi/theta", 7,
          false, run_rl_interpretations}},
        {"tnk-triangle",
         {"T_{n,k} rows sum to (n+1)^(n-1) and match the larm distribution", 7, false,
          run_tnk_triangle}},
        {"rarm-rev-symmetric-lt",
         {"(rarm,rev) is exchange-symmetric over rooted labeled trees", 6, false,
          run_rarm_rev_symmetric_lt}},
        {"cnxyz-reference",
         {"C_1..C_5 match their reference monomial-symmetric expansions", 5, false,
          run_cnxyz_reference}},
        {"cnxyz-symmetry", {"C_n(x,y,z) is S3-symmetric", 10, false, run_cnxyz_symmetry}},
        {"cnxyz-dyck",
         {"C_n agrees with the Dyck (hrun,ret,vrun) distribution", 8, false, run_cnxyz_dyck}},
        {"rev-run-pair-symmetry-P5",
         {"(rev,run) is NOT exchange-symmetric over plane trees with 5 edges", 5, true,
          run_rev_run_pair_p5}},
        {"rev-run-LT4",
         {"rev and run are NOT equidistributed over rooted labeled trees with 4 edges", 4, true,
          run_rev_run_lt4}},
        {"larm-rarm-rev-swap-LT4",
         {"(larm,rarm,rev) is NOT equidistributed with (rarm,larm,rev) over LT_4", 4, true,
          run_larm_rarm_rev_swap_lt4}},
    };
    return claims;
}

}  // namespace

ClaimReport verify(const std::string& claim_id, int n) {
    auto it = registry().find(claim_id);
    if (it == registry().end())
        throw std::invalid_argument("unknown claim '" + claim_id + "'");
    const Claim& claim = it->second;
    ClaimReport report;
    report.id = claim_id;
    report.n = n < 0 ? claim.default_n : n;
    report.expected_negative = claim.negative;
    report.pass = !claim.negative;  // negative claims must earn their pass
    auto start = std::chrono::steady_clock::now();
    claim.run(report.n, report);
    report.millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (!report.pass && !claim.negative && report.counterexamples.empty())
        report.counterexamples.push_back("(see detail)");
    return report;
}

std::vector<std::string> claim_ids() {
    std::vector<std::string> ids;
    for (auto& [id, c] : registry()) ids.push_back(id);
    return ids;
}

std::string claim_description(const std::string& claim_id) {
    auto it = registry().find(claim_id);
    if (it == registry().end())
        throw std::invalid_argument("unknown claim '" + claim_id + "'");
    return it->second.desc;
}

}  // namespace treelab
