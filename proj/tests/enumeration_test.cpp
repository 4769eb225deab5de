#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "fixtures.hpp"
#include "treelab/enumeration.hpp"
#include "treelab/statistics.hpp"

using namespace treelab;

namespace {
long long to_ll(Count c) { return (long long)c; }
}  // namespace

TEST_CASE("catalan families at small sizes") {
    std::vector<long long> cat = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
    for (int n = 1; n <= 9; ++n) {
        CHECK(to_ll(catalan(n)) == cat[n]);
        CHECK((long long)plane_encodings(n).size() == cat[n]);
        CHECK((long long)binary_encodings(n).size() == cat[n]);
        CHECK((long long)dyck_encodings(n).size() == cat[n]);
        CHECK((long long)avoid132_encodings(n).size() == cat[n]);
    }
}

TEST_CASE("catalan families at the largest verified size") {
    CHECK((long long)plane_encodings(12).size() == 208012);
    CHECK((long long)binary_encodings(12).size() == 208012);
}

TEST_CASE("canonical order is sorted and duplicate-free") {
    auto check_sorted = [](const std::vector<std::string>& v) {
        CHECK(std::is_sorted(v.begin(), v.end()));
        CHECK(std::adjacent_find(v.begin(), v.end()) == v.end());
    };
    check_sorted(plane_encodings(6));
    check_sorted(binary_encodings(6));
    check_sorted(dyck_encodings(6));
    check_sorted(avoid132_encodings(6));
    check_sorted(disk_encodings(4));
    check_sorted(labeled_tree_encodings(4));
    check_sorted(rb_encodings(4));
    check_sorted(wit_encodings(Multiset::from_values({1, 1, 2})));
}

TEST_CASE("labeled families") {
    CHECK(labeled_tree_encodings(3).size() == 16);  // (n+1)^(n-1)
    CHECK(rb_encodings(3).size() == 16);
    for (int n = 1; n <= 5; ++n) {
        CHECK((long long)labeled_tree_encodings(n).size() == to_ll(cayley_count(n)));
        CHECK((long long)rb_encodings(n).size() == to_ll(cayley_count(n)));
        for (const auto& enc : labeled_tree_encodings(n))
            CHECK(is_rooted_labeled(parse_plane(enc)));
        for (const auto& enc : rb_encodings(n))
            CHECK(is_right_increasing_binary(parse_binary(enc)));
    }
}

TEST_CASE("di-sk generation matches filtering all sign assignments") {
    CHECK(disk_encodings(2).size() == 6);
    for (int n = 1; n <= 5; ++n) {
        // decorate every shape with all 2^n sign vectors and filter
        long long brute = 0;
        for (const auto& enc : binary_encodings(n)) {
            BinaryTree shape = parse_binary(enc);
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                BinaryTree d = shape;
                d.label_kind = LabelKind::sign;
                d.labels.assign(n, 0);
                for (int i = 0; i < n; ++i) d.labels[i] = (mask >> i & 1u) ? 1 : -1;
                if (is_disk(d)) ++brute;
            }
        }
        CHECK((long long)disk_encodings(n).size() == brute);
        for (const auto& enc : disk_encodings(n)) CHECK(is_disk(parse_binary(enc)));
    }
}

TEST_CASE("weakly increasing trees") {
    CHECK(wit_encodings(Multiset::from_values({1, 1})).size() == 2);
    // plane trees in disguise: all labels equal
    CHECK(wit_encodings(Multiset::from_values({1, 1, 1, 1})).size() == 14);
    // increasing trees: all labels distinct, counted by factorials
    CHECK(wit_encodings(Multiset::from_values({1, 2, 3, 4})).size() == 24);

    Multiset m = Multiset::from_values({1, 1, 2, 3});
    for (const auto& enc : wit_encodings(m))
        CHECK(is_weakly_increasing_plane(parse_plane(enc), m));

    // order-preserving relabelings keep the count; only the multiplicity
    // sequence in value order matters
    CHECK(wit_encodings(Multiset::from_values({1, 1, 2})).size() ==
          wit_encodings(Multiset::from_values({2, 2, 7})).size());
    CHECK(wit_encodings(Multiset::from_values({1, 2, 2, 3})).size() ==
          wit_encodings(Multiset::from_values({4, 6, 6, 9})).size());

    Multiset mb = Multiset::from_values({1, 1, 2});
    for (const auto& enc : witb_encodings(mb))
        CHECK(is_weakly_increasing_binary(parse_binary(enc), mb));
    // all-equal labels reduce to unlabeled binary trees
    CHECK(witb_encodings(Multiset::from_values({1, 1, 1})).size() == 5);
}

TEST_CASE("ballot numbers") {
    CHECK(to_ll(catalan_triangle(4, 1)) == 5);
    CHECK(to_ll(catalan_triangle(4, 2)) == 5);
    CHECK(to_ll(catalan_triangle(4, 3)) == 3);
    CHECK(to_ll(catalan_triangle(4, 4)) == 1);
    for (int n = 1; n <= 10; ++n) {
        Count sum = 0;
        for (int k = 1; k <= n; ++k) sum = checked_add(sum, catalan_triangle(n, k));
        CHECK(sum == catalan(n));
        CHECK(catalan_triangle(n, n) == 1);
    }
    CHECK_THROWS_AS(catalan_triangle(4, 0), std::out_of_range);
    CHECK_THROWS_AS(catalan_triangle(4, 5), std::out_of_range);
}

TEST_CASE("level profile counts") {
    CHECK(to_ll(alpha({5})) == 1);
    CHECK(to_ll(alpha({2, 1})) == 2);
    CHECK(to_ll(alpha({1, 2})) == 1);
    CHECK_THROWS_AS(alpha({}), std::invalid_argument);
    CHECK_THROWS_AS(alpha({2, 0, 1}), std::invalid_argument);

    for (int n = 1; n <= 7; ++n) {
        std::map<std::vector<int>, long long> profiles;
        for (const auto& enc : plane_encodings(n))
            ++profiles[level_profile(parse_plane(enc))];
        Count total = 0;
        for (auto& [p, c] : profiles) {
            CHECK(alpha(p) == Count(c));
            total = checked_add(total, c);
        }
        CHECK(total == catalan(n));
    }
}

TEST_CASE("the labeled-tree triangle") {
    CHECK(tnk(1) == std::vector<Count>{0, 1});
    CHECK(tnk(2) == std::vector<Count>{0, 1, 2});
    for (int n = 1; n <= 8; ++n) {
        std::vector<Count> row = tnk(n);
        Count sum = 0;
        for (int k = 1; k <= n; ++k) sum = checked_add(sum, row[k]);
        CHECK(sum == cayley_count(n));
    }
    // larm distribution over the labeled trees realizes the triangle
    for (int n = 1; n <= 5; ++n) {
        std::vector<long long> dist(n + 1, 0);
        for (const auto& enc : labeled_tree_encodings(n))
            ++dist[tree_stats(parse_plane(enc)).larm];
        std::vector<Count> row = tnk(n);
        for (int k = 1; k <= n; ++k) CHECK(Count(dist[k]) == row[k]);
    }
}

TEST_CASE("counting stays exact far beyond the desk sizes") {
    CHECK(count_to_string(catalan(30)) == "3814986502092304");
    CHECK(count_to_string(cayley_count(12)) == "1792160394037");
    CHECK(count_to_string(binomial(60, 30)) == "118264581564861424");
}

TEST_CASE("generate dispatch") {
    FamilySpec spec;
    spec.family = "plane";
    spec.n = 3;
    CHECK(generate(spec).size() == 5);
    spec.family = "unknown";
    CHECK_THROWS_AS(generate(spec), std::invalid_argument);
    spec.family = "wit";
    spec.n = 0;
    CHECK_THROWS_AS(generate(spec), std::invalid_argument);  // needs a multiset
    spec.m = Multiset::from_values({1, 1});
    CHECK(generate(spec).size() == 2);
    spec.n = 3;
    CHECK_THROWS_AS(generate(spec), std::invalid_argument);  // size/multiset mismatch
}
