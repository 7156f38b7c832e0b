#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dwred/tft.hpp"
#include "oracles.hpp"

using namespace dwred;

namespace {

Cochain random_2cochain(const FiniteGroup& g, std::mt19937_64& rng) {
    Cochain c(g, 2);
    std::uniform_int_distribution<int> num(0, 7);
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) {
            if (a == g.identity || b == g.identity) continue;
            c.set({a, b}, Phase(num(rng), 8));
        }
    return c;
}

} // namespace

TEST_CASE("primitive evaluation") {
    FiniteGroup z2 = make_cyclic(2);
    DeltaComplex t2 = surface(1);

    TheorySpec triv = trivial_theory(z2, 2);
    for (const FlatColoring& c : enumerate_flat_colorings(t2, z2))
        CHECK(evaluate_primitive(triv, t2, c) == Phase());

    // beta(1,1) = 1/2 from the transgressed cyclic cocycle; the torus value
    // is beta(x,y) - beta(y,x) over the two triangles
    Cochain beta = transgress(cyclic_cocycle(2, 1), 1).cochain;
    REQUIRE(beta.at({1, 1}) == Phase(1, 2));
    TheorySpec tb = make_theory(z2, beta);
    for (const FlatColoring& c : enumerate_flat_colorings(t2, z2)) {
        const auto& e0 = t2.consecutive_edges(0);
        const auto& e1 = t2.consecutive_edges(1);
        Phase by_hand = beta.at({c.colors[e0[0]], c.colors[e0[1]]}) -
                        beta.at({c.colors[e1[0]], c.colors[e1[1]]});
        CHECK(evaluate_primitive(tb, t2, c) == by_hand);
        CHECK(evaluate_primitive(tb, t2, c) == Phase()); // symmetric cochain
    }

    CHECK_THROWS_AS(evaluate_primitive(trivial_theory(z2, 3), t2,
                                       enumerate_flat_colorings(t2, z2)[0]),
                    std::invalid_argument);
}

TEST_CASE("primitive evaluation is gauge invariant") {
    std::mt19937_64 rng(2026);
    FiniteGroup z4 = make_cyclic(4);
    DeltaComplex x = product_with_circle(torus_grid(2, 2));
    TheorySpec t = make_theory(z4, cyclic_cocycle(4, 1));
    auto cols = enumerate_flat_colorings(x, z4);
    std::uniform_int_distribution<int> pick(0, (int)cols.size() - 1);
    std::uniform_int_distribution<int> pg(0, 3);
    for (int i = 0; i < 100; ++i) {
        const FlatColoring& c = cols[pick(rng)];
        GaugeTransformation tr;
        tr.per_vertex.resize(x.vertex_count());
        for (int& v : tr.per_vertex) v = pg(rng);
        CHECK(evaluate_primitive(t, x, c) ==
              evaluate_primitive(t, x, apply_gauge(x, z4, tr, c)));
    }
}

TEST_CASE("partition functions on spheres and surfaces") {
    CHECK(dw_partition(trivial_theory(make_cyclic(2), 2), sphere2()) ==
          CyclotomicSum(Rational(1, 2)));
    CHECK(dw_partition(trivial_theory(make_cyclic(3), 2), sphere2()) ==
          CyclotomicSum(Rational(1, 3)));

    FiniteGroup s3 = make_symmetric(3);
    CHECK(dw_partition(trivial_theory(s3, 2), surface(1)) == CyclotomicSum(3));

    // Mednykh oracle at genus 2
    CHECK(oracles::mednykh_s3(2) == 81);
    CHECK(dw_partition(trivial_theory(s3, 2), surface(2)) == CyclotomicSum(81));
    CHECK(dw_partition(trivial_theory(s3, 2), surface(1)) ==
          CyclotomicSum(oracles::mednykh_s3(1)));
}

TEST_CASE("partition function agrees with the naive oracle") {
    FiniteGroup z2 = make_cyclic(2), s3 = make_symmetric(3), z4 = make_cyclic(4);
    DeltaComplex t3 = product_with_circle(surface(1));

    CHECK(dw_partition(trivial_theory(z2, 2), surface(1)) ==
          oracles::naive_state_sum(trivial_theory(z2, 2), surface(1)));
    CHECK(dw_partition(trivial_theory(s3, 3), t3) ==
          oracles::naive_state_sum(trivial_theory(s3, 3), t3));
    TheorySpec tw = make_theory(z4, cyclic_cocycle(4, 1));
    CHECK(dw_partition(tw, t3) == oracles::naive_state_sum(tw, t3));
}

TEST_CASE("twisted partition functions are coboundary invariant") {
    std::mt19937_64 rng(99);
    FiniteGroup z4 = make_cyclic(4);
    Cochain w = cyclic_cocycle(4, 1);
    Cochain shifted = add_cochains(w, coboundary(random_2cochain(z4, rng)));
    REQUIRE(is_cocycle(shifted));
    DeltaComplex t3 = product_with_circle(surface(1));
    TheorySpec a = make_theory(z4, w), b = make_theory(z4, shifted);
    CHECK(dw_partition(a, t3) == dw_partition(b, t3));

    // the transgressed twists differ by a coboundary on each centralizer:
    // equal twisted partition functions class by class
    ReducedFamily fa = reduce_circle(a), fb = reduce_circle(b);
    REQUIRE(fa.size() == fb.size());
    for (std::size_t i = 0; i < fa.size(); ++i) {
        TheorySpec ta = make_theory(fa[i].centralizer.group, fa[i].twist);
        TheorySpec tb = make_theory(fb[i].centralizer.group, fb[i].twist);
        CHECK(dw_partition(ta, surface(1)) == dw_partition(tb, surface(1)));
        CHECK(dw_partition(ta, surface(2)) == dw_partition(tb, surface(2)));
    }
}

TEST_CASE("multiplicativity over components") {
    FiniteGroup z2 = make_cyclic(2);
    TheorySpec t = trivial_theory(z2, 2);

    CHECK(theory_value_multiplicative(t, empty_complex(2)) == CyclotomicSum::one());

    CyclotomicSum torus_value = dw_partition(t, surface(1));
    CHECK(torus_value == CyclotomicSum(2));
    DeltaComplex two_tori = disjoint_union_complex(surface(1), surface(1));
    CHECK(theory_value_multiplicative(t, two_tori) == torus_value * torus_value);
    CHECK(theory_value_multiplicative(t, surface(1)) == torus_value);

    // dw_partition handles the disconnected complex directly and agrees
    CHECK(dw_partition(t, two_tori) == torus_value * torus_value);
}

TEST_CASE("direct sums") {
    FiniteGroup z2 = make_cyclic(2);
    Theory t = as_theory(trivial_theory(z2, 2));

    CHECK(direct_sum({t}).value(surface(1)) == t.value(surface(1)));

    Theory two = direct_sum({t, t});
    CHECK(two.value(surface(1)) == CyclotomicSum(4)); // 2 + 2

    // on a disconnected manifold the direct sum multiplies per-component
    // sums, so it is not additive there: (2+2)*(2+2) = 16, not 4+4
    DeltaComplex two_tori = disjoint_union_complex(surface(1), surface(1));
    CHECK(two.value(two_tori) == CyclotomicSum(16));
    CHECK(two.value(two_tori) !=
          t.value(two_tori) + t.value(two_tori)); // 16 vs 8

    // the empty manifold is the monoidal unit: the direct sum takes value 1
    // there, not the sum of member values
    CHECK(two.value(empty_complex(2)) == CyclotomicSum::one());
}

TEST_CASE("circle reduction families") {
    FiniteGroup s3 = make_symmetric(3);
    ReducedFamily f = reduce_circle(trivial_theory(s3, 3));
    REQUIRE(f.size() == 3);
    std::multiset<int> orders;
    for (const auto& e : f) {
        orders.insert(e.centralizer.group.order);
        CHECK(e.twist.is_zero());
    }
    CHECK(orders == std::multiset<int>{2, 3, 6});

    FiniteGroup z4 = make_cyclic(4);
    ReducedFamily fz = reduce_circle(trivial_theory(z4, 3));
    CHECK(fz.size() == 4);
    for (const auto& e : fz) CHECK(e.centralizer.group.order == 4);

    // tau_g w (h,k) = g*(h+k-((h+k) mod 4))/16, verified entry by entry
    ReducedFamily ft = reduce_circle(make_theory(z4, cyclic_cocycle(4, 1)));
    for (const auto& e : ft) {
        CHECK(is_cocycle(e.twist));
        for (int h = 0; h < 4; ++h)
            for (int k = 0; k < 4; ++k) {
                long long carry = h + k - ((h + k) % 4);
                CHECK(e.twist.at({h, k}) == Phase(e.rep * carry, 16));
            }
    }

    CHECK_THROWS_AS(reduce_circle(trivial_theory(s3, 1)), std::invalid_argument);
}

TEST_CASE("circle decomposition, untwisted") {
    FiniteGroup s3 = make_symmetric(3), z2 = make_cyclic(2);

    auto rep = verify_decomposition_circle(trivial_theory(s3, 3), surface(1));
    CHECK(rep.equal);
    CHECK(rep.lhs == CyclotomicSum(8));
    CHECK(oracles::commuting_triples(s3) / s3.order == 8);
    REQUIRE(rep.per_class.size() == 3);
    CHECK(rep.per_class[0].value == CyclotomicSum(3));
    CHECK(rep.per_class[1].value == CyclotomicSum(2));
    CHECK(rep.per_class[2].value == CyclotomicSum(3));

    auto rz = verify_decomposition_circle(trivial_theory(z2, 3), surface(1));
    CHECK(rz.equal);
    CHECK(rz.lhs == CyclotomicSum(4));
    CHECK(rz.rhs == CyclotomicSum(2) + CyclotomicSum(2));

    CHECK_THROWS_AS(verify_decomposition_circle(trivial_theory(z2, 3), circle(1)),
                    std::invalid_argument);
}

TEST_CASE("circle decomposition, twisted") {
    FiniteGroup z2 = make_cyclic(2);
    TheorySpec t = make_theory(z2, cyclic_cocycle(2, 1));
    for (int h : {1, 2}) {
        auto rep = verify_decomposition_circle(t, surface(h));
        CHECK(rep.equal);
    }
    // values produced by the engine, cross-checked by the naive oracle
    auto rep = verify_decomposition_circle(t, surface(1));
    CHECK(rep.lhs == oracles::naive_state_sum(t, product_with_circle(surface(1))));
    CHECK(rep.lhs == CyclotomicSum(4));
}

TEST_CASE("general reduction equals the circle reduction for T = S1") {
    FiniteGroup s3 = make_symmetric(3);
    auto circle_rep = verify_decomposition_circle(trivial_theory(s3, 3), surface(1));
    auto general_rep = verify_decomposition_general(s3, surface(1), circle(1));
    CHECK(general_rep.equal);
    CHECK(general_rep.lhs == circle_rep.lhs);
    CHECK(general_rep.rhs == circle_rep.rhs);

    // the subdivision of the circle does not change the answer
    auto general_rep3 = verify_decomposition_general(s3, surface(1), circle(3));
    CHECK(general_rep3.equal);
    CHECK(general_rep3.rhs == circle_rep.rhs);
}

TEST_CASE("general reduction on a surface target") {
    auto rep = verify_decomposition_general(make_cyclic(2), circle(1), surface(1));
    CHECK(rep.equal);
    CHECK(rep.lhs == CyclotomicSum(4)); // Z(T^3) for Z2
    REQUIRE(rep.per_class.size() == 4);
    for (const auto& p : rep.per_class) {
        CHECK(p.centralizer_order == 2);
        CHECK(p.value == CyclotomicSum::one()); // 1-dimensional circle value
    }

    CHECK_THROWS_AS(
        verify_decomposition_general(make_cyclic(2), surface(1), surface(1)),
        std::invalid_argument);
}

TEST_CASE("circle decomposition beyond the standard grid") {
    // larger groups and the k = 6 twist
    for (const FiniteGroup& g : {make_symmetric(4), make_dihedral(6)}) {
        auto rep = verify_decomposition_circle(trivial_theory(g, 3), surface(1));
        CHECK(rep.equal);
        CHECK(rep.per_class.size() == conjugacy_classes(g).size());
    }
    TheorySpec z6 = make_theory(make_cyclic(6), cyclic_cocycle(6, 1));
    for (int h : {1, 2}) CHECK(verify_decomposition_circle(z6, surface(h)).equal);
}

TEST_CASE("circle decomposition in dimension four") {
    // base = T^3, so the product is T^4; commuting 4-tuples over |G|
    FiniteGroup s3 = make_symmetric(3), z2 = make_cyclic(2);
    DeltaComplex t3 = product_with_circle(surface(1));

    auto rep = verify_decomposition_circle(trivial_theory(s3, 4), t3);
    CHECK(rep.equal);
    CHECK(rep.lhs == CyclotomicSum(21)); // 126 commuting 4-tuples / 6
    CHECK(rep.rhs == CyclotomicSum(8) + CyclotomicSum(4) + CyclotomicSum(9));

    auto rz = verify_decomposition_circle(trivial_theory(z2, 4), t3);
    CHECK(rz.equal);
    CHECK(rz.lhs == CyclotomicSum(8)); // 16 commuting 4-tuples / 2
}

TEST_CASE("circle decomposition over the sphere base") {
    // lhs = Z(S^2 x S^1) = 1; rhs = sum over classes of 1/|C(g)| = 1
    FiniteGroup s3 = make_symmetric(3);
    auto rep = verify_decomposition_circle(trivial_theory(s3, 3), sphere2());
    CHECK(rep.equal);
    CHECK(rep.lhs == CyclotomicSum::one());
    CyclotomicSum card;
    for (const auto& p : rep.per_class)
        card += CyclotomicSum(Rational(1, p.centralizer_order));
    CHECK(rep.rhs == card);
}

TEST_CASE("reduction of the primitive theory, coloring by coloring") {
    // A flat coloring of X x S^1 with constant fiber holonomy x evaluates the
    // cocycle to exactly the transgressed evaluation on X. This pins the
    // transgression sign against the staircase orientation pointwise, not
    // just in the summed partition functions.
    FiniteGroup z4 = make_cyclic(4);
    FiniteGroup s3 = make_symmetric(3);
    // a nontrivial 3-cocycle on the nonabelian S3: pull cyclic:2:1 back along
    // the sign homomorphism
    std::vector<int> sign_images(6);
    {
        auto classes = conjugacy_classes(s3);
        for (int a = 0; a < 6; ++a) sign_images[a] = 0;
        for (int a : classes[1].members) sign_images[a] = 1; // transpositions
    }
    Cochain inflated =
        restrict_cochain(cyclic_cocycle(2, 1), make_hom(s3, make_cyclic(2), sign_images));
    REQUIRE(is_cocycle(inflated));
    REQUIRE(!inflated.is_zero());

    std::vector<TheorySpec> theories;
    theories.push_back(make_theory(z4, cyclic_cocycle(4, 1)));
    theories.push_back(make_theory(s3, inflated));

    for (const TheorySpec& t : theories) {
        const FiniteGroup& g = t.group;
        for (const DeltaComplex& base : {surface(1), surface(2)}) {
            REQUIRE(base.vertex_count() == 1);
            DeltaComplex prod = product_with_circle(base);
            int E = base.edge_count();
            for (int x = 0; x < g.order; ++x) {
                Transgression tr = transgress(t.cocycle, x);
                TheorySpec tx = make_theory(tr.centralizer.group, tr.cochain);
                for (const FlatColoring& c : enumerate_flat_colorings(base, g)) {
                    // the fiber holonomy must commute with every edge color
                    bool commutes = true;
                    for (int v : c.colors)
                        if (g.mul(v, x) != g.mul(x, v)) commutes = false;
                    if (!commutes) continue;
                    // extended coloring: embedded edge e -> c(e), gap edge of
                    // e -> x*c(e), fiber edge -> x; the product constructor
                    // lays edges out as [embedded.., gaps.., fiber]
                    FlatColoring ext;
                    ext.colors.resize(prod.edge_count());
                    for (int e = 0; e < E; ++e) {
                        ext.colors[e] = c.colors[e];
                        ext.colors[E + e] = g.mul(x, c.colors[e]);
                    }
                    ext.colors[2 * E] = x;
                    REQUIRE(is_flat(prod, g, ext));
                    // the base coloring in centralizer indices
                    FlatColoring sub;
                    for (int v : c.colors) sub.colors.push_back(tr.centralizer.from_parent(v));
                    CHECK(evaluate_primitive(t, prod, ext) ==
                          evaluate_primitive(tx, base, sub));
                }
            }
        }
    }
}

TEST_CASE("simple object counts") {
    FiniteGroup z2 = make_cyclic(2), z4 = make_cyclic(4);
    CHECK(count_simples(trivial_theory(z2, 3)) == 4);
    CHECK(count_simples(make_theory(z2, cyclic_cocycle(2, 1))) == 4);
    CHECK(count_simples(make_theory(z4, cyclic_cocycle(4, 1))) == 16);

    DeltaComplex t3 = product_with_circle(surface(1));
    for (const FiniteGroup& g : {make_cyclic(3), make_symmetric(3), make_dihedral(4)}) {
        TheorySpec t = trivial_theory(g, 3);
        CHECK(CyclotomicSum(count_simples(t)) == dw_partition(t, t3));
    }

    CHECK_THROWS_AS(count_simples(trivial_theory(z2, 2)), std::invalid_argument);
}

TEST_CASE("triangulation invariance for degree-2 twists") {
    for (const FiniteGroup& g : {make_cyclic(2), make_cyclic(3)}) {
        TheorySpec t = trivial_theory(g, 2);
        CyclotomicSum a = dw_partition(t, surface(1));
        CHECK(a == dw_partition(t, torus_grid(2, 2)));
        CHECK(a == dw_partition(t, torus_grid(3, 3)));
    }
    Cochain beta = transgress(cyclic_cocycle(4, 1), 1).cochain;
    TheorySpec tb = make_theory(make_cyclic(4), beta);
    CHECK(dw_partition(tb, surface(1)) == dw_partition(tb, torus_grid(2, 2)));

    // the prism torus S1 x S1 carries the same values as the polygon torus
    for (const FiniteGroup& g : {make_cyclic(2), make_symmetric(3)}) {
        TheorySpec t = trivial_theory(g, 2);
        CHECK(dw_partition(t, product_with_circle(circle(1))) ==
              dw_partition(t, surface(1)));
    }
    CHECK(dw_partition(tb, product_with_circle(circle(1))) ==
          dw_partition(tb, surface(1)));
}

TEST_CASE("dimension mismatches are rejected") {
    FiniteGroup z2 = make_cyclic(2);
    CHECK_THROWS_AS(dw_partition(trivial_theory(z2, 3), surface(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_theory(z2, [] {
                        Cochain c(make_cyclic(2), 1);
                        c.set({1}, Phase(1, 3)); // not a homomorphism
                        return c;
                    }()),
                    std::invalid_argument);
}
