#include <doctest.h>

#include <stdexcept>

#include "fixtures.hpp"
#include "treelab/enumeration.hpp"
#include "treelab/trees.hpp"

using namespace treelab;

TEST_CASE("plane tree text encoding") {
    PlaneTree two_leaves = parse_plane("()()");
    CHECK(two_leaves.edge_count() == 2);
    CHECK(two_leaves.children[0].size() == 2);

    PlaneTree path2 = parse_plane("(())");
    CHECK(path2.edge_count() == 2);
    CHECK(path2.children[0].size() == 1);
    CHECK(path2.children[1].size() == 1);

    CHECK(print_plane(two_leaves) == "()()");
    CHECK(print_plane(parse_plane("")) == "");

    PlaneTree marked = fixtures::rsw_example();
    CHECK(marked.edge_count() == 10);
    CHECK(parse_plane(print_plane(marked)) == marked);

    CHECK_THROWS_AS(parse_plane("(()"), std::invalid_argument);
    CHECK_THROWS_AS(parse_plane("())("), std::invalid_argument);
    CHECK_THROWS_AS(parse_plane("()[1,2,3]"), std::invalid_argument);  // label count off
    CHECK(parse_plane("()()[0,5,7]").labels == std::vector<Label>{0, 5, 7});
}

TEST_CASE("binary tree text encoding") {
    CHECK(parse_binary("_").empty());
    CHECK(parse_binary("(_ _)").node_count() == 1);
    BinaryTree left_child = parse_binary("((_ _) _)");
    CHECK(left_child.node_count() == 2);
    CHECK(left_child.left[0] == 1);
    CHECK(left_child.right[0] == -1);

    CHECK(print_binary(parse_binary("((_ _) (_ _))")) == "((_ _) (_ _))");
    CHECK(print_binary(parse_binary("(_ + (_ - _))")) == "(_ + (_ - _))");
    CHECK(print_binary(parse_binary("((_ 2 _) 1 _)")) == "((_ 2 _) 1 _)");

    CHECK_THROWS_AS(parse_binary("(_ _"), std::invalid_argument);
    CHECK_THROWS_AS(parse_binary("(_ _) x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_binary("((_ 1 _) _)"), std::invalid_argument);  // partial labels
}

TEST_CASE("dyck and permutation encodings") {
    CHECK(parse_dyck("ENEN").order() == 2);
    CHECK_THROWS_AS(parse_dyck("NE"), std::invalid_argument);
    CHECK_THROWS_AS(parse_dyck("EN E"), std::invalid_argument);
    CHECK(is_dyck("EENN"));
    CHECK_FALSE(is_dyck("ENN"));

    CHECK(parse_permutation("3,1,2").word == std::vector<int>{3, 1, 2});
    CHECK_THROWS_AS(parse_permutation("1,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("0,1"), std::invalid_argument);
    CHECK(print_permutation(parse_permutation("2,1")) == "2,1");
}

TEST_CASE("round trips over whole families") {
    for (int n = 1; n <= 9; ++n) {
        for (const auto& enc : plane_encodings(n))
            CHECK(print_plane(parse_plane(enc)) == enc);
        for (const auto& enc : binary_encodings(n))
            CHECK(print_binary(parse_binary(enc)) == enc);
    }
    for (const auto& enc : disk_encodings(4))
        CHECK(print_binary(parse_binary(enc)) == enc);
    for (const auto& enc : wit_encodings(Multiset::from_values({1, 2, 2})))
        CHECK(print_plane(parse_plane(enc)) == enc);
}

TEST_CASE("traversals") {
    BinaryTree d = fixtures::disk_example();
    std::vector<int> pre = preorder(d);
    for (int i = 0; i < 10; ++i) CHECK(d.labels.empty() ? true : pre[i] == i);
    // names in the fixture are preorder ranks already
    CHECK(pre == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});

    std::vector<int> rp = reverse_preorder(d);
    for (int i = 0; i < 10; ++i) CHECK(rp[i] == pre[9 - i]);

    // single node
    BinaryTree one = parse_binary("(_ _)");
    CHECK(preorder(one) == std::vector<int>{0});
    CHECK(reverse_preorder(one) == std::vector<int>{0});

    // reverse preorder mirrors preorder on every shape
    for (int n = 1; n <= 8; ++n)
        for (const auto& enc : binary_encodings(n)) {
            BinaryTree b = parse_binary(enc);
            std::vector<int> p = preorder(b), r = reverse_preorder(b);
            for (int i = 0; i < n; ++i) CHECK(r[i] == p[n - 1 - i]);
        }

    PlaneTree path = parse_plane("(())");
    CHECK(postorder(path) == std::vector<int>{2, 1, 0});
    PlaneTree cherry = parse_plane("()()");
    CHECK(postorder(cherry) == std::vector<int>{1, 2, 0});
}

TEST_CASE("mirror") {
    BinaryTree one = parse_binary("(_ _)");
    CHECK(mirror(one) == one);
    // left path of 3 becomes the right path of 3
    CHECK(print_binary(mirror(parse_binary("(((_ _) _) _)"))) == "(_ (_ (_ _)))");
    for (int n = 1; n <= 8; ++n)
        for (const auto& enc : binary_encodings(n)) {
            BinaryTree b = parse_binary(enc);
            CHECK(mirror(mirror(b)) == b);
        }
    // mirror of the running example's rotation image is the expected tree
    BinaryTree b = fixtures::running_example_phi();
    BinaryTree m = mirror(b);
    CHECK(mirror(m) == b);
}

TEST_CASE("family predicates") {
    CHECK(is_weakly_increasing_plane(fixtures::wit_example(), fixtures::wit_example_multiset()));
    Multiset wrong = fixtures::wit_example_multiset();
    wrong.insert(9);
    CHECK_FALSE(is_weakly_increasing_plane(fixtures::wit_example(), wrong));
    CHECK_THROWS_AS(is_weakly_increasing_plane(parse_plane("()()"), wrong),
                    std::invalid_argument);

    CHECK(is_disk(fixtures::disk_example()));
    CHECK_THROWS_AS(is_disk(parse_binary("(_ _)")), std::invalid_argument);
    CHECK_FALSE(is_disk(parse_binary("(_ + (_ + _))")));
    CHECK(is_disk(parse_binary("(_ + (_ - _))")));

    CHECK(is_rooted_labeled(fixtures::labeled_example()));
    CHECK_FALSE(is_rooted_labeled(parse_plane("()()[0,2,1]")));
    CHECK(is_rooted_labeled(parse_plane("()()[0,1,2]")));

    CHECK(is_right_increasing_binary(fixtures::labeled_example_phi()));
    CHECK_FALSE(is_right_increasing_binary(parse_binary("(_ 2 (_ 1 _))")));

    CHECK_FALSE(is_132_avoiding(parse_permutation("1,3,2")));
    CHECK(is_132_avoiding(parse_permutation("3,1,2")));
    CHECK(is_132_avoiding(parse_permutation("1,2,3")));

    // weakly increasing binary trees
    Multiset m12 = Multiset::from_values({1, 2});
    CHECK(is_weakly_increasing_binary(parse_binary("(_ 1 (_ 2 _))"), m12));
    CHECK_FALSE(is_weakly_increasing_binary(parse_binary("(_ 2 (_ 1 _))"), m12));
    CHECK_THROWS_AS(is_weakly_increasing_binary(parse_binary("(_ _)"), m12),
                    std::invalid_argument);

    // the family is closed under mirroring
    Multiset mw = Multiset::from_values({1, 1, 2, 3});
    for (const auto& enc : witb_encodings(mw))
        CHECK(is_weakly_increasing_binary(mirror(parse_binary(enc)), mw));
}
