#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "xmod/groupoid.hpp"

using namespace xmod;

namespace {

// independent brute force: all (obj_perm, arr_bijection) pairs filtered by
// the morphism conditions, no pruning
std::vector<GroupoidMorphism> oracle_automorphisms(const FiniteGroupoid& g) {
    std::vector<GroupoidMorphism> out;
    std::vector<int> obj(g.object_count), arr(g.arrow_count());
    std::iota(obj.begin(), obj.end(), 0);
    do {
        std::iota(arr.begin(), arr.end(), 0);
        do {
            GroupoidMorphism m{obj, arr};
            if (validate_groupoid_morphism(g, g, m).ok()) out.push_back(m);
        } while (std::next_permutation(arr.begin(), arr.end()));
    } while (std::next_permutation(obj.begin(), obj.end()));
    return out;
}

}  // namespace

TEST_CASE("discrete groupoid on one object validates") {
    const FiniteGroupoid g = FiniteGroupoid::discrete(1);
    CHECK(validate_groupoid(g).ok());
    CHECK(g.arrow_count() == 1);
}

TEST_CASE("indiscrete groupoid on two objects validates") {
    const FiniteGroupoid g = FiniteGroupoid::indiscrete(2);
    CHECK(g.arrow_count() == 4);
    CHECK(validate_groupoid(g).ok());
}

TEST_CASE("composition outside the domain is reported") {
    FiniteGroupoid g = FiniteGroupoid::discrete(2);
    g.comp[0][1] = 0;  // tgt(0) != src(1)
    const ValidationReport r = validate_groupoid(g);
    REQUIRE_FALSE(r.ok());
    bool found = false;
    for (const auto& v : r.violations) found |= v.axiom == "composition domain";
    CHECK(found);
}

TEST_CASE("misdeclared identity and inverse tables are reported") {
    FiniteGroupoid g = FiniteGroupoid::from_group(FiniteGroup::cyclic(2));
    g.identity_at[0] = 1;
    CHECK_FALSE(validate_groupoid(g).ok());

    FiniteGroupoid h = FiniteGroupoid::from_group(FiniteGroup::cyclic(4));
    std::swap(h.inverse[1], h.inverse[0]);
    CHECK_FALSE(validate_groupoid(h).ok());
}

TEST_CASE("costar picks the arrows ending at x") {
    const FiniteGroupoid d = FiniteGroupoid::discrete(1);
    CHECK(costar(d, 0) == std::vector<int>{d.identity_at[0]});

    const FiniteGroupoid ind = FiniteGroupoid::indiscrete(2);
    const std::vector<int> at0 = costar(ind, 0);
    CHECK(at0.size() == 2);
    for (int a : at0) CHECK(ind.tgt[a] == 0);

    const FiniteGroupoid one = FiniteGroupoid::from_group(FiniteGroup::cyclic(3));
    CHECK(costar(one, 0).size() == 3);

    CHECK_THROWS_AS(costar(ind, 5), Error);
}

TEST_CASE("costars partition the arrow set") {
    for (const FiniteGroupoid& g :
         {FiniteGroupoid::indiscrete(3), FiniteGroupoid::from_group(FiniteGroup::symmetric(3)),
          FiniteGroupoid::discrete(4)}) {
        std::vector<int> seen(g.arrow_count(), 0);
        for (int x = 0; x < g.object_count; ++x)
            for (int a : costar(g, x)) ++seen[a];
        CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    }
}

TEST_CASE("automorphisms of small groupoids") {
    // discrete on one object: nothing to move
    CHECK(enumerate_groupoid_automorphisms(FiniteGroupoid::discrete(1)).group.order() == 1);

    // one-object groupoid on C2: the only group automorphism is trivial
    const FiniteGroupoid c2 = FiniteGroupoid::from_group(FiniteGroup::cyclic(2));
    const GroupoidAutGroup aut_c2 = enumerate_groupoid_automorphisms(c2);
    CHECK(aut_c2.group.order() == 1);
    CHECK(aut_c2.elements.size() == oracle_automorphisms(c2).size());

    // indiscrete on two objects: exactly the object swap
    const FiniteGroupoid ind = FiniteGroupoid::indiscrete(2);
    const GroupoidAutGroup aut_ind = enumerate_groupoid_automorphisms(ind);
    CHECK(aut_ind.group.order() == 2);
    CHECK(aut_ind.elements.size() == oracle_automorphisms(ind).size());

    // one-object S3: automorphisms of S3, all inner, order 6
    const FiniteGroupoid s3 = FiniteGroupoid::from_group(FiniteGroup::symmetric(3));
    CHECK(enumerate_groupoid_automorphisms(s3).group.order() == 6);
}

TEST_CASE("automorphism tables are closed under composition and inverse") {
    const GroupoidAutGroup aut = enumerate_groupoid_automorphisms(FiniteGroupoid::indiscrete(3));
    const int n = aut.group.order();
    CHECK(n == 6);  // S3 on the objects
    for (int i = 0; i < n; ++i) {
        const GroupoidMorphism inv_elem = aut.elements[aut.group.inv(i)];
        const GroupoidMorphism composed = compose_groupoid_morphisms(aut.elements[i], inv_elem);
        CHECK(composed == aut.elements[aut.group.unit()]);
    }
}

TEST_CASE("bundle round-trips through its groupoid encoding") {
    const GroupBundle b = GroupBundle::from_fibres(
        {FiniteGroup::cyclic(2), FiniteGroup::symmetric(3), FiniteGroup::trivial()});
    CHECK(validate_bundle(b).ok());
    const FiniteGroupoid g = b.to_groupoid();
    CHECK(validate_groupoid(g).ok());
    for (int a = 0; a < g.arrow_count(); ++a) CHECK(g.src[a] == g.tgt[a]);
    CHECK(GroupBundle::from_groupoid(g) == b);

    CHECK_THROWS_AS(GroupBundle::from_groupoid(FiniteGroupoid::indiscrete(2)), Error);
}

TEST_CASE("fibre groups recover the building blocks") {
    const GroupBundle b =
        GroupBundle::from_fibres({FiniteGroup::cyclic(4), FiniteGroup::cyclic(2)});
    CHECK(b.fibre_group(0).order() == 4);
    CHECK(b.fibre_group(1).order() == 2);
    CHECK(find_group_isomorphism(b.fibre_group(0), FiniteGroup::cyclic(4)).has_value());
    CHECK(b.fibre(0) == std::vector<int>{0, 1, 2, 3});
    CHECK(b.fibre(1) == std::vector<int>{4, 5});
    CHECK(b.zero(1) == 4);
    CHECK(b.plus(1, 2) == 3);
    CHECK(b.minus(1) == 3);
}

TEST_CASE("from_tables derives identities and inverses") {
    // C3 as a one-object table without identity/inverse hints
    std::vector<std::vector<int>> comp(3, std::vector<int>(3));
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) comp[a][b] = (a + b) % 3;
    const FiniteGroupoid g = FiniteGroupoid::from_tables(1, {0, 0, 0}, {0, 0, 0}, comp);
    CHECK(g.identity_at[0] == 0);
    CHECK(g.inverse[1] == 2);
    CHECK(validate_groupoid(g).ok());

    CHECK_THROWS_AS(FiniteGroupoid::from_tables(1, {0, 2}, {0, 0}, {{0, -1}, {-1, 1}}), Error);
}
