#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "dwred/groupoid.hpp"

using namespace dwred;

TEST_CASE("pi0 of the loop groupoid matches conjugacy classes") {
    FiniteGroup s3 = make_symmetric(3);
    EFGroupoid gg = loop_groupoid(s3);
    CHECK(gg.pi0().size() == conjugacy_classes(s3).size());
    CHECK(gg.object_count() == 6);
}

TEST_CASE("pi0 of discrete and one-object groupoids") {
    CHECK(EFGroupoid::discrete(5).pi0().size() == 5);
    CHECK(EFGroupoid::one_object(make_cyclic(4)).pi0().size() == 1);
}

TEST_CASE("automorphism groups are stabilizers") {
    FiniteGroup s3 = make_symmetric(3);
    EFGroupoid gg = loop_groupoid(s3);
    for (const IsoClass& c : gg.pi0()) {
        Subgroup cen = centralizer(s3, c.representative);
        CHECK(c.aut.order == cen.group.order);
        CHECK(c.aut_embedding == cen.parent_indices);
        // per-object stabilizers across one orbit agree in order
        for (int x : c.members)
            CHECK(gg.automorphism_group(x).order == c.aut.order);
    }
    CHECK(EFGroupoid::discrete(3).automorphism_group(1).order == 1);
    CHECK(EFGroupoid::one_object(s3).automorphism_group(0).order == 6);
}

TEST_CASE("groupoid cardinality") {
    for (const FiniteGroup& g :
         {make_cyclic(2), make_cyclic(6), make_symmetric(3), make_dihedral(4),
          make_quaternion8()})
        CHECK(loop_groupoid(g).cardinality() == Rational(1));
    CHECK(EFGroupoid::one_object(make_quaternion8()).cardinality() == Rational(1, 8));
    CHECK(EFGroupoid::discrete(2).cardinality() == Rational(2));
}

TEST_CASE("integration with respect to groupoid cardinality") {
    FiniteGroup s3 = make_symmetric(3);
    EFGroupoid gg = loop_groupoid(s3);
    CHECK(gg.integrate([](int) { return CyclotomicSum::one(); }) ==
          CyclotomicSum(Rational(1)));
    // f = |C(g)| integrates to the number of classes
    CHECK(gg.integrate([&](int x) {
        return CyclotomicSum(Rational(centralizer(s3, x).group.order));
    }) == CyclotomicSum(3));
    EFGroupoid bg = EFGroupoid::one_object(s3);
    CHECK(bg.integrate([](int) { return CyclotomicSum(7); }) ==
          CyclotomicSum(Rational(7, 6)));
    // integrate(1) = cardinality on assorted groupoids
    for (const EFGroupoid& g : {gg, bg, EFGroupoid::discrete(4)})
        CHECK(g.integrate([](int) { return CyclotomicSum::one(); }) ==
              CyclotomicSum(g.cardinality()));
}

TEST_CASE("non-invariant functions are rejected") {
    EFGroupoid gg = loop_groupoid(make_symmetric(3));
    CHECK_THROWS_AS(gg.integrate([](int x) { return CyclotomicSum(x); }),
                    std::invalid_argument);
}

TEST_CASE("disjoint union") {
    EFGroupoid a = loop_groupoid(make_symmetric(3));
    EFGroupoid b = EFGroupoid::discrete(2);
    EFGroupoid u = disjoint_union(a, b);
    CHECK(u.pi0().size() == a.pi0().size() + b.pi0().size());
    CHECK(u.cardinality() == a.cardinality() + b.cardinality());
    int off = (int)a.object_count();
    auto f = [](int) { return CyclotomicSum(3); };
    CHECK(u.integrate([&](int x) { return f(x); }) ==
          a.integrate(f) + b.integrate(f));
    (void)off;
}

TEST_CASE("explicit hom-set presentation") {
    // one object with Z3 worth of loops
    EFGroupoid b3 = EFGroupoid::from_homsets(
        1, [](int, int) { return std::vector<int>{0, 1, 2}; },
        [](int g, int f) { return (g + f) % 3; });
    REQUIRE(b3.pi0().size() == 1);
    CHECK(b3.pi0()[0].aut.order == 3);
    CHECK(b3.cardinality() == Rational(1, 3));

    // two isomorphic objects, trivial automorphisms: morphism labels
    // 0: id at 0, 1: id at 1, 2: 0->1, 3: 1->0
    auto hom = [](int x, int y) -> std::vector<int> {
        if (x == 0 && y == 0) return {0};
        if (x == 1 && y == 1) return {1};
        if (x == 0 && y == 1) return {2};
        return {3};
    };
    auto compose = [](int g, int f) -> int {
        auto src = [](int m) { return m == 0 || m == 2 ? 0 : 1; };
        auto tgt = [](int m) { return m == 0 || m == 3 ? 0 : 1; };
        int s = src(f), t = tgt(g);
        if (s == 0 && t == 0) return 0;
        if (s == 0 && t == 1) return 2;
        if (s == 1 && t == 0) return 3;
        return 1;
    };
    EFGroupoid pair = EFGroupoid::from_homsets(2, hom, compose);
    REQUIRE(pair.pi0().size() == 1);
    CHECK(pair.pi0()[0].size == 2);
    CHECK(pair.pi0()[0].aut.order == 1);
    CHECK(pair.cardinality() == Rational(1));
}
