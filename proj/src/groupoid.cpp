#include "dwred/groupoid.hpp"

#include <algorithm>
#include <stdexcept>

namespace dwred {

EFGroupoid EFGroupoid::from_action(const FiniteGroup& h, int n_objects,
                                   const std::function<int(int, int)>& act) {
    EFGroupoid g;
    g.object_count_ = n_objects;
    g.materialized_ = true;
    g.acting_ = h;
    g.action_ = act;
    std::vector<char> seen(n_objects, 0);
    for (int x = 0; x < n_objects; ++x) {
        if (seen[x]) continue;
        IsoClass c;
        c.representative = x;
        // orbit of x
        std::vector<int> stack = {x};
        seen[x] = 1;
        std::vector<char> in_orbit(n_objects, 0);
        in_orbit[x] = 1;
        while (!stack.empty()) {
            int y = stack.back();
            stack.pop_back();
            c.members.push_back(y);
            for (int a = 0; a < h.order; ++a) {
                int z = act(a, y);
                if (z < 0 || z >= n_objects)
                    throw std::invalid_argument("from_action: action out of range");
                if (!in_orbit[z]) {
                    in_orbit[z] = 1;
                    seen[z] = 1;
                    stack.push_back(z);
                }
            }
        }
        std::sort(c.members.begin(), c.members.end());
        c.representative = c.members.front();
        c.size = (long long)c.members.size();
        // stabilizer at the representative
        std::vector<int> stab;
        for (int a = 0; a < h.order; ++a)
            if (act(a, c.representative) == c.representative) stab.push_back(a);
        Subgroup s = subgroup_from_elements(h, stab);
        c.aut = s.group;
        c.aut_embedding = s.parent_indices;
        g.classes_.push_back(std::move(c));
    }
    return g;
}

EFGroupoid EFGroupoid::from_components(std::vector<IsoClass> classes,
                                       long long object_count) {
    EFGroupoid g;
    g.classes_ = std::move(classes);
    g.object_count_ = object_count;
    long long listed = 0;
    bool all_listed = true;
    for (const IsoClass& c : g.classes_) {
        if (c.members.empty()) all_listed = false;
        listed += (long long)c.members.size();
    }
    g.materialized_ = all_listed && listed == object_count;
    return g;
}

EFGroupoid EFGroupoid::discrete(int n) {
    FiniteGroup triv = make_trivial();
    return from_action(triv, n, [](int, int x) { return x; });
}

EFGroupoid EFGroupoid::one_object(const FiniteGroup& g) {
    IsoClass c;
    c.representative = 0;
    c.size = 1;
    c.aut = g;
    c.aut_embedding.resize(g.order);
    for (int i = 0; i < g.order; ++i) c.aut_embedding[i] = i;
    c.members = {0};
    EFGroupoid out;
    out.classes_ = {std::move(c)};
    out.object_count_ = 1;
    out.materialized_ = true;
    return out;
}

EFGroupoid EFGroupoid::from_homsets(int n_objects,
                                    const std::function<std::vector<int>(int, int)>& hom,
                                    const std::function<int(int, int)>& compose) {
    EFGroupoid g;
    g.object_count_ = n_objects;
    g.materialized_ = true;
    std::vector<char> seen(n_objects, 0);
    for (int x = 0; x < n_objects; ++x) {
        if (seen[x]) continue;
        IsoClass c;
        std::vector<int> stack = {x};
        seen[x] = 1;
        std::vector<char> in_orbit(n_objects, 0);
        in_orbit[x] = 1;
        while (!stack.empty()) {
            int y = stack.back();
            stack.pop_back();
            c.members.push_back(y);
            for (int z = 0; z < n_objects; ++z) {
                if (!in_orbit[z] && !hom(y, z).empty()) {
                    in_orbit[z] = 1;
                    seen[z] = 1;
                    stack.push_back(z);
                }
            }
        }
        std::sort(c.members.begin(), c.members.end());
        c.representative = c.members.front();
        c.size = (long long)c.members.size();
        // Aut at the representative from the hom-set with composition as the
        // multiplication; group_from_table validates the axioms.
        std::vector<int> loops = hom(c.representative, c.representative);
        int m = (int)loops.size();
        auto pos = [&](int label) {
            auto it = std::find(loops.begin(), loops.end(), label);
            if (it == loops.end())
                throw std::invalid_argument("from_homsets: composition leaves the hom-set");
            return (int)(it - loops.begin());
        };
        std::vector<int> mult((size_t)m * m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                mult[(size_t)i * m + j] = pos(compose(loops[i], loops[j]));
        c.aut = group_from_table("Aut@" + std::to_string(c.representative),
                                 std::move(mult));
        g.classes_.push_back(std::move(c));
    }
    return g;
}

const IsoClass& EFGroupoid::class_of(int object) const {
    for (const IsoClass& c : classes_)
        if (std::binary_search(c.members.begin(), c.members.end(), object)) return c;
    throw std::invalid_argument("class_of: unknown object (or groupoid not materialized)");
}

FiniteGroup EFGroupoid::automorphism_group(int object) const {
    if (acting_) {
        std::vector<int> stab;
        for (int a = 0; a < acting_->order; ++a)
            if (action_(a, object) == object) stab.push_back(a);
        return subgroup_from_elements(*acting_, std::move(stab)).group;
    }
    return class_of(object).aut;
}

Rational EFGroupoid::cardinality() const {
    Rational total(0);
    for (const IsoClass& c : classes_) total += Rational(1, c.aut.order);
    return total;
}

CyclotomicSum EFGroupoid::integrate(const std::function<CyclotomicSum(int)>& f) const {
    CyclotomicSum total;
    for (const IsoClass& c : classes_) {
        if (c.members.empty())
            throw std::invalid_argument(
                "integrate: objects not materialized, use integrate_classes");
        CyclotomicSum v = f(c.members.front());
        if (c.members.size() >= 2 && f(c.members[1]) != v)
            throw std::invalid_argument(
                "integrate: function is not invariant on isomorphism classes");
        total += v.scaled(Rational(1, c.aut.order));
    }
    return total;
}

CyclotomicSum EFGroupoid::integrate_classes(
    const std::function<CyclotomicSum(std::size_t)>& f) const {
    CyclotomicSum total;
    for (std::size_t i = 0; i < classes_.size(); ++i)
        total += f(i).scaled(Rational(1, classes_[i].aut.order));
    return total;
}

EFGroupoid disjoint_union(const EFGroupoid& a, const EFGroupoid& b) {
    std::vector<IsoClass> classes = a.pi0();
    int offset = (int)a.object_count();
    for (IsoClass c : b.pi0()) {
        if (c.representative >= 0) c.representative += offset;
        for (int& m : c.members) m += offset;
        classes.push_back(std::move(c));
    }
    return EFGroupoid::from_components(std::move(classes),
                                       a.object_count() + b.object_count());
}

EFGroupoid loop_groupoid(const FiniteGroup& g) {
    FiniteGroup copy = g;
    return EFGroupoid::from_action(
        g, g.order,
        [copy](int a, int x) { return copy.mul(copy.mul(a, x), copy.inverse(a)); });
}

} // namespace dwred
