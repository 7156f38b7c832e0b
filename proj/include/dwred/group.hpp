#pragma once

#include <string>
#include <vector>

namespace dwred {

/// Elements are dense indices into the parent group's element list; all
/// multiplication is table lookup.
using GroupElement = int;

/// Finite group given by its full multiplication table. Immutable after
/// construction; safe to share across threads.
///
/// Order is capped at kMaxOrder since tables are quadratic.
struct FiniteGroup {
    std::string name;
    int order = 0;
    std::vector<int> mult; // order*order, row-major: mult[a*order+b] = a*b
    std::vector<int> inv;  // two-sided inverses
    int identity = 0;

    static constexpr int kMaxOrder = 1000;

    int mul(int a, int b) const { return mult[a * order + b]; }
    int inverse(int a) const { return inv[a]; }

    int element_order(int a) const;
    bool is_abelian() const;

    /// Full axiom check (associativity on all triples, two-sided unit,
    /// two-sided inverses, entries in range). Returns an empty string when
    /// the table is a group, otherwise a diagnostic naming the violated
    /// axiom. O(order^3).
    std::string check_axioms() const;
};

/// Builds a FiniteGroup from a bare multiplication table: locates the
/// identity, derives the inverse table, and rejects non-group tables with a
/// diagnostic. Used by constructors and the JSON loader.
FiniteGroup group_from_table(std::string name, std::vector<int> mult);

FiniteGroup make_trivial();
FiniteGroup make_cyclic(int k);
FiniteGroup make_dihedral(int k);    // order 2k
FiniteGroup make_symmetric(int n);   // n <= 5
FiniteGroup make_quaternion8();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Subgroup of a parent group, carried both as a sorted list of parent
/// indices and as a standalone FiniteGroup whose element i is
/// parent_indices[i]. The index map is an injective homomorphism, so
/// centralizer theories are first-class groups.
struct Subgroup {
    std::vector<int> parent_indices;
    FiniteGroup group;

    int to_parent(int i) const { return parent_indices[i]; }
    int from_parent(int p) const; // -1 when p is not in the subgroup
};

/// Homomorphism between two table groups, stored as the per-element image
/// table. make_hom validates images[e] = e and images[ab] = images[a]images[b].
struct GroupHom {
    FiniteGroup source;
    FiniteGroup target;
    std::vector<int> images;

    int operator()(int a) const { return images[a]; }
};

GroupHom make_hom(const FiniteGroup& source, const FiniteGroup& target,
                  std::vector<int> images);
GroupHom identity_hom(const FiniteGroup& g);
/// Embedding of a subgroup's standalone group into the parent.
GroupHom embedding_hom(const Subgroup& s, const FiniteGroup& parent);

struct ConjugacyClass {
    int representative; // minimal index in the class
    std::vector<int> members;
};

/// Conjugacy classes, ordered by minimal representative index.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);

/// {h : hx = xh} as a Subgroup.
Subgroup centralizer(const FiniteGroup& g, GroupElement x);

/// Subgroup spanned by the given elements (must already be closed).
Subgroup subgroup_from_elements(const FiniteGroup& g, std::vector<int> elements,
                                std::string name = "");

/// Closure of a generating set under multiplication and inverses.
std::vector<int> generated_subgroup_elements(const FiniteGroup& g,
                                             const std::vector<int>& generators);

/// True iff sum of class sizes is |G| and |class| * |C(rep)| = |G| for each
/// class.
bool class_equation_check(const FiniteGroup& g);

/// Resolves builtin group names: "Z<k>", "D<k>" (order 2k), "S<n>" (n <= 5),
/// "Q8". Throws std::invalid_argument for anything else.
FiniteGroup builtin_group(const std::string& name);

} // namespace dwred
