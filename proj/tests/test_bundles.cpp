#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "dwred/coloring.hpp"
#include "oracles.hpp"

using namespace dwred;

TEST_CASE("coloring counts on basic spaces") {
    FiniteGroup s3 = make_symmetric(3), z2 = make_cyclic(2), z3 = make_cyclic(3);
    CHECK(count_flat_colorings(circle(1), s3) == 6);
    CHECK(count_flat_colorings(circle(1), make_quaternion8()) == 8);

    // oracle: commuting pairs among the 36 pairs
    CHECK(oracles::commuting_pairs(s3) == 18);
    CHECK(count_flat_colorings(surface(1), s3) == 18);

    CHECK(count_flat_colorings(sphere2(), z2) == 8);
    CHECK(count_flat_colorings(sphere2(), z3) == 27);

    // grid torus: |Hom(Z^2, Z2)| * |G|^(V-1) = 4 * 2^8
    CHECK(count_flat_colorings(torus_grid(3, 3), z2) == 4 * 256);
}

TEST_CASE("coloring count factorizes through the fundamental group") {
    FiniteGroup s3 = make_symmetric(3);
    // surface(1) and torus_grid(3,3) both carry pi_1 = Z^2
    long long homs = oracles::commuting_pairs(s3);
    long long v = torus_grid(3, 3).vertex_count();
    long long tree_gauge = 1;
    for (int i = 1; i < v; ++i) tree_gauge *= s3.order;
    CHECK(count_flat_colorings(torus_grid(3, 3), s3) == homs * tree_gauge);
}

TEST_CASE("enumeration agrees with the brute-force filter") {
    FiniteGroup z2 = make_cyclic(2);
    for (const DeltaComplex& x : {surface(1), sphere2(), torus_grid(2, 2)}) {
        long long naive = 0;
        std::vector<int> labels(x.edge_count(), 0);
        bool more = true;
        while (more) {
            if (is_flat(x, z2, FlatColoring{labels})) ++naive;
            more = false;
            for (int i = x.edge_count() - 1; i >= 0; --i) {
                if (++labels[i] < 2) { more = true; break; }
                labels[i] = 0;
            }
        }
        CHECK(count_flat_colorings(x, z2) == naive);
    }
}

TEST_CASE("gauge transformations preserve flatness") {
    std::mt19937_64 rng(42);
    FiniteGroup s3 = make_symmetric(3);
    DeltaComplex x = torus_grid(2, 2);
    auto cols = enumerate_flat_colorings(x, s3);
    std::uniform_int_distribution<int> pick(0, (int)cols.size() - 1);
    std::uniform_int_distribution<int> pg(0, s3.order - 1);
    for (int i = 0; i < 50; ++i) {
        GaugeTransformation t;
        t.per_vertex.resize(x.vertex_count());
        for (int& v : t.per_vertex) v = pg(rng);
        CHECK(is_flat(x, s3, apply_gauge(x, s3, t, cols[pick(rng)])));
    }
}

TEST_CASE("bundle groupoid over circles is the loop groupoid") {
    for (const FiniteGroup& g :
         {make_cyclic(4), make_symmetric(3), make_dihedral(4), make_quaternion8()}) {
        auto classes = conjugacy_classes(g);
        std::multiset<int> cent_orders;
        for (const auto& c : classes)
            cent_orders.insert(centralizer(g, c.representative).group.order);
        for (int m : {1, 3}) {
            BundleGroupoid bg = bundle_groupoid(circle(m), g);
            CHECK(bg.groupoid.pi0().size() == classes.size());
            CHECK(bg.groupoid.cardinality() == Rational(1));
            std::multiset<int> auts;
            for (const auto& c : bg.groupoid.pi0()) auts.insert(c.aut.order);
            CHECK(auts == cent_orders);
        }
    }
}

TEST_CASE("bundle groupoid of the sphere") {
    BundleGroupoid bg = bundle_groupoid(sphere2(), make_cyclic(2));
    REQUIRE(bg.groupoid.pi0().size() == 1);
    CHECK(bg.groupoid.pi0()[0].aut.order == 2);
    CHECK(bg.groupoid.pi0()[0].size == 8); // |G|^V / |Aut| = 16/2
}

TEST_CASE("orbit sizes partition the coloring set and divide the gauge order") {
    for (const FiniteGroup& g : {make_cyclic(2), make_symmetric(3)}) {
        for (const DeltaComplex& x : {surface(1), sphere2(), torus_grid(2, 2)}) {
            BundleGroupoid bg = bundle_groupoid(x, g);
            long long gauge = gauge_group_order(x, g);
            long long total = 0;
            for (const auto& c : bg.groupoid.pi0()) {
                CHECK(gauge % c.size == 0);
                total += c.size;
            }
            CHECK(total == count_flat_colorings(x, g));
            // cardinality = #colorings / |G|^V, the two sides computed
            // independently
            CHECK(bg.groupoid.cardinality() == Rational(total, gauge));
        }
    }
}

TEST_CASE("tree-reduced orbits match brute-force gauge orbits") {
    // materialize the full gauge group as a product and let it act directly
    auto brute = [](const DeltaComplex& x, const FiniteGroup& g) {
        FiniteGroup gauge = make_trivial();
        for (int i = 0; i < x.vertex_count(); ++i) gauge = direct_product(gauge, g);
        auto cols = enumerate_flat_colorings(x, g);
        auto decode = [&](int idx) {
            GaugeTransformation t;
            t.per_vertex.resize(x.vertex_count());
            for (int i = x.vertex_count() - 1; i >= 0; --i) {
                t.per_vertex[i] = idx % g.order;
                idx /= g.order;
            }
            return t;
        };
        auto key = [&](const FlatColoring& c) {
            long long k = 0;
            for (int v : c.colors) k = k * g.order + v;
            return k;
        };
        std::map<long long, int> index;
        for (int i = 0; i < (int)cols.size(); ++i) index[key(cols[i])] = i;
        return EFGroupoid::from_action(gauge, (int)cols.size(), [&, decode, key](int a, int ci) {
            return index.at(key(apply_gauge(x, g, decode(a), cols[ci])));
        });
    };
    for (const FiniteGroup& g : {make_cyclic(2), make_cyclic(3)}) {
        for (const DeltaComplex& x : {sphere2(), torus_grid(2, 2), circle(3)}) {
            EFGroupoid direct = brute(x, g);
            BundleGroupoid reduced = bundle_groupoid(x, g);
            REQUIRE(direct.pi0().size() == reduced.groupoid.pi0().size());
            std::multiset<std::pair<long long, int>> a, b;
            for (const auto& c : direct.pi0()) a.insert({c.size, c.aut.order});
            for (const auto& c : reduced.groupoid.pi0()) b.insert({c.size, c.aut.order});
            CHECK(a == b);
        }
    }
}

TEST_CASE("holonomy classes") {
    FiniteGroup s3 = make_symmetric(3);
    DeltaComplex c1 = circle(1);
    std::vector<std::pair<int, bool>> loop = {{0, true}};

    FlatColoring trivial{{s3.identity}};
    CHECK(holonomy_class(c1, s3, trivial, loop) == 0);

    auto classes = conjugacy_classes(s3);
    for (int g = 0; g < s3.order; ++g) {
        int ci = holonomy_class(c1, s3, FlatColoring{{g}}, loop);
        CHECK(std::binary_search(classes[ci].members.begin(), classes[ci].members.end(),
                                 g));
    }

    // gauge transformations do not move the holonomy class
    std::mt19937_64 rng(5);
    DeltaComplex c3 = circle(3);
    std::vector<std::pair<int, bool>> loop3 = {{0, true}, {1, true}, {2, true}};
    std::uniform_int_distribution<int> pg(0, s3.order - 1);
    for (int trial = 0; trial < 30; ++trial) {
        FlatColoring c{{pg(rng), pg(rng), pg(rng)}};
        GaugeTransformation t{{pg(rng), pg(rng), pg(rng)}};
        CHECK(holonomy_class(c3, s3, c, loop3) ==
              holonomy_class(c3, s3, apply_gauge(c3, s3, t, c), loop3));
    }

    // a backwards edge inverts its color
    FlatColoring c{{1, 2, 0}};
    std::vector<std::pair<int, bool>> back = {{2, false}, {1, false}, {0, false}};
    int h_fwd = holonomy_class(c3, s3, c, loop3);
    int fwd_elem = s3.mul(s3.mul(1, 2), 0);
    int back_elem = s3.inverse(fwd_elem);
    CHECK(std::binary_search(classes[h_fwd].members.begin(),
                             classes[h_fwd].members.end(), fwd_elem));
    CHECK(std::binary_search(
        classes[holonomy_class(c3, s3, c, back)].members.begin(),
        classes[holonomy_class(c3, s3, c, back)].members.end(), back_elem));

    // open paths are rejected
    CHECK_THROWS_AS(holonomy_class(c3, s3, c, {{0, true}}), std::invalid_argument);
}

TEST_CASE("plan edge cases") {
    // a disconnected complex enumerates the product of its components
    FiniteGroup z2 = make_cyclic(2);
    DeltaComplex u = disjoint_union_complex(circle(1), circle(1));
    CHECK(count_flat_colorings(u, z2) == 4);

    // phase_counts rejects degree mismatches
    ColoringPlan plan(u, z2);
    CHECK_THROWS_AS(plan.phase_counts(zero_cochain(z2, 2), 1, 1),
                    std::invalid_argument);

    // deterministic across thread counts
    DeltaComplex x = torus_grid(2, 2);
    FiniteGroup z4 = make_cyclic(4);
    Cochain beta = transgress(cyclic_cocycle(4, 1), 1).cochain;
    ColoringPlan p2(x, z4);
    auto c1 = p2.phase_counts(beta, beta.denominator_lcm(), 1);
    auto c4 = p2.phase_counts(beta, beta.denominator_lcm(), 4);
    CHECK(c1 == c4);
}
