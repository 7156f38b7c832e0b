#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dwred/cochain.hpp"
#include "dwred/coloring.hpp"
#include "dwred/complex.hpp"
#include "dwred/cyclotomic.hpp"

namespace dwred {

/// A Dijkgraaf-Witten theory: finite gauge group plus a cocycle whose degree
/// is the spacetime dimension.
struct TheorySpec {
    FiniteGroup group;
    Cochain cocycle;
    std::string label;
};

/// Validates the cocycle condition before wrapping.
TheorySpec make_theory(FiniteGroup g, Cochain cocycle, std::string label = "");
TheorySpec trivial_theory(const FiniteGroup& g, int dimension);

/// The invertible-theory value <psi^* w, sigma_M>: the signed sum over top
/// simplices of the cocycle evaluated on consecutive edge colors. Gauge
/// invariant. Rejects dimension mismatches.
Phase evaluate_primitive(const TheorySpec& t, const DeltaComplex& x,
                         const FlatColoring& c);

/// Partition function of the theory on a closed complex, computed along two
/// independent routes and asserted exactly equal:
///   (a) the state sum (1/|G|^V) * sum over flat colorings of
///       exp(2 pi i <psi^* w, sigma>), accumulated by the backtracking
///       enumerator;
///   (b) the groupoid integral of the same integrand over the bundle
///       groupoid PBun_G(X) (the orbifold construction at partition level).
/// The 1/|Aut| weight enters exactly once, inside the integral; route (a)
/// carries the state-sum normalization instead, and the equality of the two
/// pins both conventions.
/// threads <= 0 selects default_thread_count().
CyclotomicSum dw_partition(const TheorySpec& t, const DeltaComplex& x,
                           int threads = 0);

/// Product of dw_partition over connected components (1 on the empty
/// complex).
CyclotomicSum theory_value_multiplicative(const TheorySpec& t, const DeltaComplex& x,
                                          int threads = 0);

/// Closed-manifold evaluator: a dimension plus a value on connected closed
/// complexes, extended to disconnected ones multiplicatively.
struct Theory {
    int dimension = 0;
    std::string label;
    std::function<CyclotomicSum(const DeltaComplex&)> connected_value;

    CyclotomicSum value(const DeltaComplex& x) const;
};

Theory as_theory(const TheorySpec& t, int threads = 0);

/// Direct sum of same-dimension theories: per connected component the sum of
/// the member values, extended multiplicatively over components.
Theory direct_sum(std::vector<Theory> theories);

/// One summand of the circle reduction: conjugacy-class representative g,
/// the centralizer C(g), and the transgressed cocycle on it.
struct ReducedEntry {
    int rep;
    Subgroup centralizer;
    Cochain twist;
};
using ReducedFamily = std::vector<ReducedEntry>;

/// The circle reduction of a theory: one entry per conjugacy class, twisted
/// by the circle transgression of the cocycle at the class representative.
/// Requires degree >= 2.
ReducedFamily reduce_circle(const TheorySpec& t);

struct PerClassValue {
    std::string rep;
    int centralizer_order = 0;
    CyclotomicSum value;
};

struct DecompositionReport {
    CyclotomicSum lhs;
    CyclotomicSum rhs;
    bool equal = false;
    std::vector<PerClassValue> per_class;
};

/// Circle-reduction decomposition check at partition level:
///   lhs = Z(base x S^1) for the given theory,
///   rhs = sum over conjugacy classes of the twisted centralizer theory on
///         base.
/// base must be closed oriented of dimension degree-1.
DecompositionReport verify_decomposition_circle(const TheorySpec& t,
                                                const DeltaComplex& base,
                                                int threads = 0);

/// Untwisted decomposition check for a general product target: every
/// component of t_complex must be a circle, or base itself must be a single
/// circle (then 2-dimensional components of t_complex are allowed too).
///   lhs = Z(base x T), rhs = sum over bundle classes [P] on T of the
///   untwisted Aut(P)-theory on base.
DecompositionReport verify_decomposition_general(const FiniteGroup& g,
                                                 const DeltaComplex& base,
                                                 const DeltaComplex& t_complex,
                                                 int threads = 0);

/// Decategorified simple-object count of the circle reduction of a degree-3
/// theory: the number of pairs ([g], [h]) with h a tau_g(w)-regular class of
/// C(g). h is beta-regular iff beta(h,k) = beta(k,h) for every k in the
/// centralizer of h.
long long count_simples(const TheorySpec& t);

} // namespace dwred
