#include "doctest.h"
#include "xmod/finite_group.hpp"

using namespace xmod;

namespace {

// S3 Cayley table over {e, (12), (13), (23), (123), (132)}, row applied
// first
const std::vector<std::vector<int>> kS3 = {
    {0, 1, 2, 3, 4, 5},  // e
    {1, 0, 4, 5, 2, 3},  // (12)
    {2, 5, 0, 4, 3, 1},  // (13)
    {3, 4, 5, 0, 1, 2},  // (23)
    {4, 3, 1, 2, 5, 0},  // (123)
    {5, 2, 3, 1, 0, 4},  // (132)
};

}  // namespace

TEST_CASE("trivial and cyclic groups") {
    const FiniteGroup t = FiniteGroup::trivial();
    CHECK(t.order() == 1);
    CHECK(t.mul(0, 0) == 0);

    const FiniteGroup c4 = FiniteGroup::cyclic(4);
    CHECK(c4.order() == 4);
    CHECK(c4.unit() == 0);
    CHECK(c4.mul(3, 2) == 1);
    CHECK(c4.inv(1) == 3);
    CHECK(c4.element_order(1) == 4);
    CHECK(c4.element_order(2) == 2);
    CHECK(c4.is_abelian());
}

TEST_CASE("symmetric(3) is S3") {
    const FiniteGroup s3 = FiniteGroup::symmetric(3);
    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.is_abelian());
    const FiniteGroup known = FiniteGroup::from_table(kS3);
    CHECK(find_group_isomorphism(s3, known).has_value());
}

TEST_CASE("from_table rejects broken tables") {
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), Error);  // no inverse for 1
    CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 0}}), Error);  // no identity
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 2}}), Error);  // out of range
    // a latin square with identity that is not associative
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2, 3, 4},
                                             {1, 0, 3, 4, 2},
                                             {2, 4, 0, 1, 3},
                                             {3, 2, 4, 0, 1},
                                             {4, 3, 1, 2, 0}}),
                    Error);
}

TEST_CASE("subgroup and normality checks") {
    const FiniteGroup s3 = FiniteGroup::symmetric(3);
    std::vector<int> a3;
    for (int i = 0; i < 6; ++i)
        if (s3.element_order(i) != 2) a3.push_back(i);
    CHECK(a3.size() == 3);
    CHECK(s3.contains_subgroup(a3));
    CHECK(s3.is_normal_subgroup(a3));

    int transposition = -1;
    for (int i = 0; i < 6; ++i)
        if (s3.element_order(i) == 2) transposition = i;
    REQUIRE(transposition >= 0);
    CHECK(s3.contains_subgroup({s3.unit(), transposition}));
    CHECK_FALSE(s3.is_normal_subgroup({s3.unit(), transposition}));

    CHECK_FALSE(s3.contains_subgroup({transposition}));  // misses the unit
}

TEST_CASE("semidirect product: trivial action of C2 on C2 is the Klein group") {
    const FiniteGroup c2 = FiniteGroup::cyclic(2);
    const FiniteGroup v = semidirect_product(c2, c2, {{0, 1}, {0, 1}});
    CHECK(v.order() == 4);
    for (int i = 0; i < 4; ++i) CHECK(v.mul(i, i) == v.unit());  // exponent 2
    CHECK(v.is_abelian());
}

TEST_CASE("semidirect product: C2 acting on C3 by inversion is S3") {
    const FiniteGroup c2 = FiniteGroup::cyclic(2);
    const FiniteGroup c3 = FiniteGroup::cyclic(3);
    const FiniteGroup g = semidirect_product(c3, c2, {{0, 1, 2}, {0, 2, 1}});
    CHECK(g.order() == 6);
    CHECK_FALSE(g.is_abelian());
    CHECK(find_group_isomorphism(g, FiniteGroup::from_table(kS3)).has_value());
}

TEST_CASE("semidirect product: trivial group acting leaves the factor unchanged") {
    const FiniteGroup s3 = FiniteGroup::symmetric(3);
    std::vector<std::vector<int>> act(1, std::vector<int>(6));
    for (int i = 0; i < 6; ++i) act[0][i] = i;
    const FiniteGroup g = semidirect_product(s3, FiniteGroup::trivial(), act);
    CHECK(g.order() == 6);
    CHECK(find_group_isomorphism(g, s3).has_value());
}

TEST_CASE("semidirect product rejects non-actions") {
    const FiniteGroup c2 = FiniteGroup::cyclic(2);
    const FiniteGroup c3 = FiniteGroup::cyclic(3);
    // swapping 0 and 1 in C3 is not an automorphism
    CHECK_THROWS_AS(semidirect_product(c3, c2, {{0, 1, 2}, {1, 0, 2}}), Error);
    try {
        semidirect_product(c3, c2, {{0, 1, 2}, {1, 0, 2}});
        FAIL("expected NotAnAction");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::not_an_action);
    }
}

TEST_CASE("isomorphism search distinguishes C4 from the Klein group") {
    const FiniteGroup c4 = FiniteGroup::cyclic(4);
    const FiniteGroup c2 = FiniteGroup::cyclic(2);
    const FiniteGroup v = semidirect_product(c2, c2, {{0, 1}, {0, 1}});
    CHECK_FALSE(find_group_isomorphism(c4, v).has_value());
    CHECK(find_group_isomorphism(c4, FiniteGroup::cyclic(4)).has_value());
}

TEST_CASE("isomorphism images respect multiplication") {
    const FiniteGroup s3 = FiniteGroup::symmetric(3);
    const FiniteGroup known = FiniteGroup::from_table(kS3);
    const auto iso = find_group_isomorphism(s3, known);
    REQUIRE(iso.has_value());
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            CHECK((*iso)[s3.mul(a, b)] == known.mul((*iso)[a], (*iso)[b]));
}
