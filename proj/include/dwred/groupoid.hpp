#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "dwred/cyclotomic.hpp"
#include "dwred/group.hpp"

namespace dwred {

/// One isomorphism class of an essentially finite groupoid: representative,
/// total number of objects in the class, and the automorphism group at the
/// representative. For action groupoids the automorphism group comes with an
/// embedding into the acting group (aut element i = acting element
/// aut_embedding[i]); summarized presentations may omit the member list.
struct IsoClass {
    int representative = -1;
    long long size = 1;
    FiniteGroup aut;
    std::vector<int> aut_embedding;
    std::vector<int> members; // empty when objects are not materialized
};

/// Essentially finite groupoid. The primary presentation is an action
/// groupoid (a finite group acting on a finite object set, orbits computed
/// on construction); an explicit hom-set presentation exists for tests, and
/// a bare component-list presentation carries bundle groupoids whose object
/// sets are too large to materialize.
class EFGroupoid {
  public:
    /// Action groupoid: h acting on objects 0..n_objects-1 through act(g, x).
    static EFGroupoid from_action(const FiniteGroup& h, int n_objects,
                                  const std::function<int(int, int)>& act);

    /// Summarized presentation: components with sizes and automorphism groups
    /// already known.
    static EFGroupoid from_components(std::vector<IsoClass> classes,
                                      long long object_count);

    /// Discrete groupoid on n objects (identity morphisms only).
    static EFGroupoid discrete(int n);

    /// One object with automorphism group g (the groupoid BG).
    static EFGroupoid one_object(const FiniteGroup& g);

    /// Explicit hom-set presentation, for tests. hom(x, y) lists morphism
    /// labels x -> y; compose(g, f) composes f: x -> y then g: y -> z.
    static EFGroupoid from_homsets(int n_objects,
                                   const std::function<std::vector<int>(int, int)>& hom,
                                   const std::function<int(int, int)>& compose);

    const std::vector<IsoClass>& pi0() const { return classes_; }
    long long object_count() const { return object_count_; }
    bool materialized() const { return materialized_; }

    /// Stabilizer / loop group at the given object, as a FiniteGroup.
    /// Requires a materialized presentation.
    FiniteGroup automorphism_group(int object) const;
    const IsoClass& class_of(int object) const;

    /// Sum over isomorphism classes of 1/|Aut|.
    Rational cardinality() const;

    /// Integral with respect to groupoid cardinality of an invariant
    /// function on objects. Invariance is checked on class representatives
    /// against one other member when members are materialized; non-invariant
    /// functions are rejected.
    CyclotomicSum integrate(const std::function<CyclotomicSum(int)>& f) const;

    /// Same integral for summarized groupoids: f receives the class index.
    CyclotomicSum integrate_classes(
        const std::function<CyclotomicSum(std::size_t)>& f) const;

  private:
    std::vector<IsoClass> classes_;
    long long object_count_ = 0;
    bool materialized_ = false;
    // retained for automorphism_group at non-representative objects
    std::optional<FiniteGroup> acting_;
    std::function<int(int, int)> action_;
};

EFGroupoid disjoint_union(const EFGroupoid& a, const EFGroupoid& b);

/// The loop groupoid G//G: G acting on itself by conjugation.
EFGroupoid loop_groupoid(const FiniteGroup& g);

} // namespace dwred
