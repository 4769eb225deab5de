#include <doctest.h>

#include <stdexcept>

#include <set>

#include "fixtures.hpp"
#include "treelab/enumeration.hpp"
#include "treelab/maps.hpp"
#include "treelab/statistics.hpp"

using namespace treelab;

TEST_CASE("phi on the running example") {
    PlaneTree t = fixtures::running_example();
    MappedBinary b = phi(t);
    CHECK(b.tree == fixtures::running_example_phi());
    CHECK(phi_inv(b.tree).tree == t);

    // a star becomes a right path
    BinaryTree star = phi(parse_plane("()()()")).tree;
    CHECK(print_binary(star) == "(_ (_ (_ _)))");

    // identities carried: node named l sits at corr[index of l]
    for (int v = 1; v < t.node_count(); ++v)
        CHECK(b.tree.labels[b.corr.to_image[v]] == t.labels[v]);
}

TEST_CASE("phi round trip and label transport") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& enc : plane_encodings(n)) {
            PlaneTree t = parse_plane(enc);
            MappedBinary b = phi(t);
            CHECK(phi_inv(b.tree).tree == t);
        }
    PlaneTree lt = fixtures::labeled_example();
    CHECK(phi(lt).tree == fixtures::labeled_example_phi());
    CHECK(phi_inv(phi(lt).tree).tree == lt);
}

TEST_CASE("the pairing on the running example") {
    PlaneTree t = fixtures::running_example();
    std::vector<int> to = leadsto(t);
    std::vector<int> expect = fixtures::running_example_pairs();
    for (int v = 0; v < t.node_count(); ++v)
        CHECK(t.labels[to[fixtures::by_label(t, v)]] == expect[v]);

    // root with a single leaf child pairs the two nodes both ways
    std::vector<int> tiny = leadsto(parse_plane("()"));
    CHECK(tiny == std::vector<int>{1, 0});

    // two-edge path: 0 -> 1 -> 2 -> 0
    std::vector<int> path = leadsto(parse_plane("(())"));
    CHECK(path == std::vector<int>{1, 2, 0});
}

TEST_CASE("the pairing agrees with the complement construction") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& enc : plane_encodings(n)) {
            PlaneTree t = parse_plane(enc);
            CHECK(leadsto(t) == leadsto_via_complement(t));
        }
}

TEST_CASE("complement supplies each primed label once") {
    PlaneTree t = fixtures::running_example();
    ComplementTree c = complement(t);
    CHECK(c.tree.node_count() == 21);
    std::set<int> primes;
    for (int x = 0; x < c.tree.node_count(); ++x) {
        if (c.prime_of[x] == -1) continue;
        CHECK(c.tree.left[x] == -1);
        CHECK(c.tree.right[x] == -1);
        primes.insert(c.prime_of[x]);
    }
    CHECK((int)primes.size() == 11);
    // original nodes all gained exactly two children
    for (int x = 0; x < c.tree.node_count(); ++x)
        if (c.plane_node[x] != -1) {
            CHECK(c.tree.left[x] != -1);
            CHECK(c.tree.right[x] != -1);
        }
}

TEST_CASE("phitilde on the worked examples") {
    PlaneTree t = fixtures::running_example();
    MappedPlane pt = phitilde(t);
    CHECK(pt.tree == fixtures::running_example_phitilde());
    // correspondence preserves names
    for (int v = 0; v < t.node_count(); ++v)
        CHECK(pt.tree.labels[pt.corr.to_image[v]] == t.labels[v]);

    CHECK(phitilde(fixtures::trsw_example()).tree == fixtures::trsw_example_phitilde());

    // star of k children and path of k edges exchange
    PlaneTree star = parse_plane("()()()()");
    PlaneTree path = parse_plane("(((())))");
    CHECK(phitilde(star).tree == path);
    CHECK(phitilde(path).tree == star);

    for (int n = 1; n <= 7; ++n)
        for (const auto& enc : plane_encodings(n)) {
            PlaneTree u = parse_plane(enc);
            CHECK(phitilde(phitilde(u).tree).tree == u);
        }
}

TEST_CASE("deg and lchain trade places under phitilde") {
    PlaneTree t = fixtures::running_example();
    MappedPlane pt = phitilde(t);
    int v = fixtures::by_label(t, 1);
    int u = pt.corr.to_image[fixtures::by_label(t, 4)];
    CHECK(node_stats(t, v).deg == node_stats(pt.tree, u).lchain + 1);
}

TEST_CASE("theta on binary trees") {
    BinaryTree b = fixtures::spine_example();
    MappedBinary tb = theta_binary(b);
    CHECK(tb.tree == fixtures::spine_example_theta());
    CHECK(theta_binary(tb.tree).tree == b);

    // left paths are fixed points
    BinaryTree left3 = parse_binary("(((_ _) _) _)");
    BinaryTree image = theta_binary(left3).tree;
    BinaryTree unlabeled_left3 = left3;
    CHECK(image == unlabeled_left3);
    CHECK(theta_binary(parse_binary("(_ _)")).tree == parse_binary("(_ _)"));

    for (const auto& enc : binary_encodings(7)) {
        BinaryTree x = parse_binary(enc);
        MappedBinary y = theta_binary(x);
        CHECK(theta_binary(y.tree).tree == x);
        BinaryTreeStats sx = binary_stats(x), sy = binary_stats(y.tree);
        CHECK(sx.spi == sy.rspi);
        CHECK(sx.rspi == sy.spi);
        CHECK(sx.lrb == sy.lrb);
        CHECK(sx.right_chain_sequence == sy.right_chain_sequence);
        // right edges survive as node pairs with the orientation reversed
        for (int v = 0; v < x.node_count(); ++v)
            if (x.right[v] != -1)
                CHECK(y.tree.right[y.corr.to_image[x.right[v]]] == y.corr.to_image[v]);
    }
}

TEST_CASE("theta on di-sk trees") {
    BinaryTree d = fixtures::disk_example();
    MappedBinary td = theta_disk(d);
    CHECK(is_disk(td.tree));
    DiskStats s = disk_stats(d), si = disk_stats(td.tree);
    CHECK(si.omi == s.omi);
    CHECK(si.top == s.rpop);
    CHECK(si.rpop == s.top);
    CHECK(theta_disk(td.tree).tree == d);
    CHECK(theta_disk(parse_binary("(_ + _)")).tree == parse_binary("(_ + _)"));
    CHECK_THROWS_AS(theta_disk(parse_binary("(_ + (_ + _))")), std::invalid_argument);
}

TEST_CASE("theta on right increasing binary trees and rooted labeled trees") {
    BinaryTree r = fixtures::labeled_example_phi();
    MappedBinary tr = theta_rb(r);
    CHECK(tr.tree == fixtures::labeled_example_theta());
    CHECK(theta_rb(tr.tree).tree == r);

    PlaneTree lt = fixtures::labeled_example();
    MappedPlane tt = thetatilde(lt);
    CHECK(tt.tree == fixtures::labeled_example_thetatilde());
    CHECK(thetatilde(tt.tree).tree == lt);
    CHECK(is_rooted_labeled(tt.tree));
}

TEST_CASE("tau and its inverse") {
    PlaneTree t = fixtures::preorder_example();
    CHECK(print_dyck(tau(t)) == fixtures::preorder_example_dyck());
    CHECK(tau_inv(tau(t)) == t);

    // a path zigzags, a star front-loads its east steps
    CHECK(print_dyck(tau(parse_plane("((()))"))) == "ENENEN");
    CHECK(print_dyck(tau(parse_plane("()()()"))) == "EEENNN");
    CHECK(tau_inv(parse_dyck("EENN")) == parse_plane("()()"));

    for (int n = 1; n <= 7; ++n)
        for (const auto& enc : dyck_encodings(n))
            CHECK(print_dyck(tau(tau_inv(parse_dyck(enc)))) == enc);
}

TEST_CASE("jani and its inverse") {
    PlaneTree t = fixtures::jani_example();
    CHECK(jani(t) == fixtures::jani_example_word());
    CHECK(jani_inv(fixtures::jani_example_word()) == t);

    // paths read as the identity, stars as the reversal
    CHECK(jani(parse_plane("((()))")) == parse_permutation("1,2,3"));
    CHECK(jani(parse_plane("()()()")) == parse_permutation("3,2,1"));

    CHECK_THROWS_AS(jani_inv(parse_permutation("1,3,2")), std::invalid_argument);

    for (int n = 1; n <= 7; ++n) {
        std::set<std::string> images;
        for (const auto& enc : plane_encodings(n)) {
            PlaneTree u = parse_plane(enc);
            Permutation w = jani(u);
            CHECK(is_132_avoiding(w));
            CHECK(jani_inv(w) == u);
            images.insert(print_permutation(w));
        }
        CHECK(images.size() == plane_encodings(n).size());
    }
}

TEST_CASE("theta on 132-avoiders") {
    CHECK(theta_perm(parse_permutation("1")) == parse_permutation("1"));
    // the identity's record multiset moves from the right-reading to the left
    Permutation id{{1, 2, 3}};
    Permutation img = theta_perm(id);
    PermStats si = perm_stats(id), st = perm_stats(img);
    CHECK(si.ir_sizes == st.il_sizes);

    for (const auto& enc : avoid132_encodings(4)) {
        Permutation p = parse_permutation(enc);
        Permutation q = theta_perm(p);
        CHECK(theta_perm(q) == p);
        CHECK(perm_stats(p).is_len <= perm_stats(q).ds_len);
    }
}
