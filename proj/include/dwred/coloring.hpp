#pragma once

#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "dwred/cochain.hpp"
#include "dwred/complex.hpp"
#include "dwred/group.hpp"
#include "dwred/groupoid.hpp"

namespace dwred {

/// Flat G-valued edge labeling of a Delta-complex: for every 2-simplex with
/// faces d2 = (01), d0 = (12), d1 = (02), colors(d2) * colors(d0) =
/// colors(d1). Models a combinatorial map to BG.
struct FlatColoring {
    std::vector<int> colors; // one group element per edge
};

/// Vertex-indexed gauge: acts by colors'(e: u -> v) = g(u)^-1 colors(e) g(v).
struct GaugeTransformation {
    std::vector<int> per_vertex;
};

bool is_flat(const DeltaComplex& x, const FiniteGroup& g, const FlatColoring& c);

FlatColoring apply_gauge(const DeltaComplex& x, const FiniteGroup& g,
                         const GaugeTransformation& t, const FlatColoring& c);

/// Static backtracking schedule over the edges of a complex: edges completing
/// a triangle are forced, not branched, so branching happens only on edges
/// that open new fundamental-group generators. Shared by coloring
/// enumeration, the state sum, and the bundle-groupoid construction.
///
/// Borrows the complex and group; keep both alive while the plan is in use.
class ColoringPlan {
  public:
    /// pinned edges are preassigned the identity before scheduling.
    ColoringPlan(const DeltaComplex& x, const FiniteGroup& g,
                 std::vector<int> pinned = {});

    int branch_count() const { return branch_count_; }

    /// Visits every flat coloring exactly once (pinned edges at identity).
    void for_each(const std::function<void(const std::vector<int>&)>& fn) const;

    long long count() const;

    /// Distribution of the top-simplex cocycle sum over all flat colorings:
    /// counts[r] = number of colorings whose total phase is r/modulus.
    /// modulus must be a multiple of every cocycle denominator. Deterministic
    /// for any thread count.
    std::vector<long long> phase_counts(const Cochain& w, long long modulus,
                                        int threads) const;

  private:
    struct Step {
        int edge = -1;
        bool forced = false;
        int role = -1;
        std::array<int, 3> tri = {-1, -1, -1};       // forcing triangle edge ids
        std::vector<std::array<int, 3>> check_edges; // triangles completed here
        std::vector<int> completed_tops;
    };

    bool triangle_holds(const std::vector<int>& colors, int t) const;

    const DeltaComplex* x_;
    const FiniteGroup* g_;
    std::vector<int> pinned_;
    std::vector<Step> steps_;
    std::vector<int> initial_completed_tops_;
    std::vector<int> initial_check_tris_;
    int branch_count_ = 0;
};

std::vector<FlatColoring> enumerate_flat_colorings(const DeltaComplex& x,
                                                   const FiniteGroup& g);
long long count_flat_colorings(const DeltaComplex& x, const FiniteGroup& g);

/// Conjugacy class (index into conjugacy_classes(g)) of the holonomy of a
/// closed edge path; entries are (edge, forward?) with backward edges
/// inverted. Rejects non-closed paths.
int holonomy_class(const DeltaComplex& x, const FiniteGroup& g, const FlatColoring& c,
                   const std::vector<std::pair<int, bool>>& loop);

/// One isomorphism class of flat bundles on a connected component:
/// tree-trivial representative coloring, its automorphism group (the
/// stabilizer in the gauge group, realized by constant gauges and embedded
/// into G), and the total number of colorings in the class.
struct BundleClass {
    FlatColoring rep;
    FiniteGroup aut;
    std::vector<int> aut_embedding; // into G
    long long size = 0;
};

struct ComponentBundles {
    DeltaComplex complex;
    std::vector<BundleClass> classes;
    long long coloring_count = 0;
};

/// The groupoid PBun_G(X) of flat G-bundles: gauge orbits of flat colorings.
/// Orbits and stabilizers are computed per connected component by gauge
/// fixing along a spanning tree (residual action is G by simultaneous
/// conjugation); a disconnected complex contributes the product of its
/// component groupoids, one combined class per tuple of component classes.
struct BundleGroupoid {
    std::vector<ComponentBundles> components;
    std::vector<std::vector<int>> class_tuples; // combined class -> per-component class
    EFGroupoid groupoid;                        // summary presentation
};

BundleGroupoid bundle_groupoid(const DeltaComplex& x, const FiniteGroup& g);

/// |G|^V with overflow check.
long long gauge_group_order(const DeltaComplex& x, const FiniteGroup& g);

/// Worker count for parallel enumeration: DWRED_THREADS when set, otherwise
/// hardware concurrency clamped to [1, 8].
int default_thread_count();

} // namespace dwred
