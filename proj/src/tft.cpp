#include "dwred/tft.hpp"

#include <memory>
#include <numeric>
#include <stdexcept>

namespace dwred {

TheorySpec make_theory(FiniteGroup g, Cochain cocycle, std::string label) {
    if (cocycle.group().order != g.order || cocycle.group().mult != g.mult)
        throw std::invalid_argument("make_theory: cocycle lives on a different group");
    if (!is_cocycle(cocycle))
        throw std::invalid_argument("make_theory: cochain fails the cocycle condition");
    if (label.empty())
        label = "DW(" + g.name + ", deg " + std::to_string(cocycle.degree()) + ")";
    return TheorySpec{std::move(g), std::move(cocycle), std::move(label)};
}

TheorySpec trivial_theory(const FiniteGroup& g, int dimension) {
    return TheorySpec{g, zero_cochain(g, dimension), "DW(" + g.name + ", trivial)"};
}

Phase evaluate_primitive(const TheorySpec& t, const DeltaComplex& x,
                         const FlatColoring& c) {
    if (t.cocycle.degree() != x.dimension())
        throw std::invalid_argument(
            "evaluate_primitive: cocycle degree does not match complex dimension");
    Phase total;
    std::vector<int> args(x.dimension());
    for (int s = 0; s < x.top_count(); ++s) {
        const auto& edges = x.consecutive_edges(s);
        for (int i = 0; i < x.dimension(); ++i) args[i] = c.colors[edges[i]];
        Phase v = t.cocycle.at(args);
        if (x.sign(s) > 0) total += v; else total -= v;
    }
    return total;
}

namespace {

CyclotomicSum phase_counts_to_sum(const std::vector<long long>& counts,
                                  long long modulus, const Rational& scale) {
    CyclotomicSum total;
    for (long long r = 0; r < modulus; ++r) {
        if (counts[r] == 0) continue;
        total += CyclotomicSum::root_of_unity(Phase(r, modulus))
                     .scaled(Rational(counts[r]) * scale);
    }
    return total;
}

} // namespace

CyclotomicSum dw_partition(const TheorySpec& t, const DeltaComplex& x, int threads) {
    if (t.cocycle.degree() != x.dimension())
        throw std::invalid_argument(
            "dw_partition: cocycle degree does not match complex dimension");
    ValidationReport rep = x.validate();
    if (!rep.ok)
        throw std::invalid_argument("dw_partition: complex is not closed: " + rep.message);
    if (threads <= 0) threads = default_thread_count();

    // route (a): state sum over all flat colorings
    long long modulus = t.cocycle.denominator_lcm();
    ColoringPlan plan(x, t.group);
    std::vector<long long> counts = plan.phase_counts(t.cocycle, modulus, threads);
    CyclotomicSum state_sum = phase_counts_to_sum(
        counts, modulus, Rational(1, gauge_group_order(x, t.group)));

    // route (b): groupoid integral over PBun_G(X)
    BundleGroupoid bg = bundle_groupoid(x, t.group);
    CyclotomicSum integral = bg.groupoid.integrate_classes([&](std::size_t k) {
        Phase total;
        const std::vector<int>& tuple = bg.class_tuples[k];
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            const ComponentBundles& comp = bg.components[i];
            TheorySpec tc = t; // same cocycle, evaluated on the component
            total += evaluate_primitive(tc, comp.complex, comp.classes[tuple[i]].rep);
        }
        return CyclotomicSum::root_of_unity(total);
    });

    if (state_sum != integral)
        throw std::logic_error(
            "dw_partition: state sum and groupoid integral disagree on " + x.name() +
            " (" + state_sum.str() + " vs " + integral.str() + ")");
    return state_sum;
}

CyclotomicSum theory_value_multiplicative(const TheorySpec& t, const DeltaComplex& x,
                                          int threads) {
    CyclotomicSum total = CyclotomicSum::one();
    for (const DeltaComplex& comp : x.components())
        total *= dw_partition(t, comp, threads);
    return total;
}

CyclotomicSum Theory::value(const DeltaComplex& x) const {
    CyclotomicSum total = CyclotomicSum::one();
    for (const DeltaComplex& comp : x.components()) total *= connected_value(comp);
    return total;
}

Theory as_theory(const TheorySpec& t, int threads) {
    TheorySpec copy = t;
    return Theory{t.cocycle.degree(), t.label,
                  [copy, threads](const DeltaComplex& x) {
                      return dw_partition(copy, x, threads);
                  }};
}

Theory direct_sum(std::vector<Theory> theories) {
    if (theories.empty()) throw std::invalid_argument("direct_sum: empty list");
    int dim = theories.front().dimension;
    std::string label = "(";
    for (std::size_t i = 0; i < theories.size(); ++i) {
        if (theories[i].dimension != dim)
            throw std::invalid_argument("direct_sum: mixed dimensions");
        if (i) label += " + ";
        label += theories[i].label;
    }
    label += ")";
    auto members = std::make_shared<std::vector<Theory>>(std::move(theories));
    return Theory{dim, label, [members](const DeltaComplex& x) {
                      CyclotomicSum s;
                      for (const Theory& t : *members) s += t.connected_value(x);
                      return s;
                  }};
}

ReducedFamily reduce_circle(const TheorySpec& t) {
    if (t.cocycle.degree() < 2)
        throw std::invalid_argument("reduce_circle: degree must be >= 2");
    ReducedFamily family;
    for (const ConjugacyClass& c : conjugacy_classes(t.group)) {
        Transgression tr = transgress(t.cocycle, c.representative);
        family.push_back(ReducedEntry{c.representative, std::move(tr.centralizer),
                                      std::move(tr.cochain)});
    }
    return family;
}

DecompositionReport verify_decomposition_circle(const TheorySpec& t,
                                                const DeltaComplex& base,
                                                int threads) {
    if (base.dimension() != t.cocycle.degree() - 1)
        throw std::invalid_argument(
            "verify_decomposition_circle: base dimension must be degree - 1");
    DecompositionReport report;
    DeltaComplex product = product_with_circle(base);
    report.lhs = dw_partition(t, product, threads);
    report.rhs = CyclotomicSum::zero();
    for (const ReducedEntry& e : reduce_circle(t)) {
        TheorySpec reduced = make_theory(e.centralizer.group, e.twist,
                                         "DW(C(" + std::to_string(e.rep) + "))");
        CyclotomicSum v = dw_partition(reduced, base, threads);
        report.rhs += v;
        report.per_class.push_back(
            PerClassValue{std::to_string(e.rep), e.centralizer.group.order, v});
    }
    report.equal = report.lhs == report.rhs;
    return report;
}

DecompositionReport verify_decomposition_general(const FiniteGroup& g,
                                                 const DeltaComplex& base,
                                                 const DeltaComplex& t_complex,
                                                 int threads) {
    ValidationReport vb = base.validate();
    if (!vb.ok)
        throw std::invalid_argument("verify_decomposition_general: bad base: " + vb.message);
    std::vector<DeltaComplex> t_parts = t_complex.components();

    // assemble base x T piece by piece
    std::vector<DeltaComplex> pieces;
    for (const DeltaComplex& part : t_parts) {
        if (part.dimension() == 1) {
            pieces.push_back(product_with_circle(base, part.edge_count()));
        } else if (part.dimension() == 2 && base.dimension() == 1 &&
                   base.components().size() == 1) {
            // circle(m) x surface built from the surface side
            pieces.push_back(product_with_circle(part, base.edge_count()));
        } else {
            throw std::invalid_argument(
                "verify_decomposition_general: unsupported target factor " + part.name());
        }
    }
    if (pieces.empty())
        throw std::invalid_argument("verify_decomposition_general: empty target");
    DeltaComplex product = pieces.front();
    for (std::size_t i = 1; i < pieces.size(); ++i)
        product = disjoint_union_complex(product, pieces[i]);

    int n = product.dimension();
    DecompositionReport report;
    report.lhs = dw_partition(trivial_theory(g, n), product, threads);
    report.rhs = CyclotomicSum::zero();
    BundleGroupoid bg = bundle_groupoid(t_complex, g);
    for (std::size_t k = 0; k < bg.groupoid.pi0().size(); ++k) {
        const FiniteGroup& aut = bg.groupoid.pi0()[k].aut;
        CyclotomicSum v =
            dw_partition(trivial_theory(aut, base.dimension()), base, threads);
        report.rhs += v;
        report.per_class.push_back(
            PerClassValue{"[P" + std::to_string(k) + "]", aut.order, v});
    }
    report.equal = report.lhs == report.rhs;
    return report;
}

long long count_simples(const TheorySpec& t) {
    if (t.cocycle.degree() != 3)
        throw std::invalid_argument("count_simples: degree-3 theories only");
    long long total = 0;
    for (const ReducedEntry& e : reduce_circle(t)) {
        const FiniteGroup& c = e.centralizer.group;
        for (const ConjugacyClass& cls : conjugacy_classes(c)) {
            int h = cls.representative;
            bool regular = true;
            for (int k = 0; k < c.order && regular; ++k) {
                if (c.mul(h, k) != c.mul(k, h)) continue; // k must centralize h
                if (e.twist.at({h, k}) != e.twist.at({k, h})) regular = false;
            }
            if (regular) ++total;
        }
    }
    return total;
}

} // namespace dwred
