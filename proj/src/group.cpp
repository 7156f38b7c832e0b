#include "dwred/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dwred {

int FiniteGroup::element_order(int a) const {
    int n = 1, x = a;
    while (x != identity) {
        x = mul(x, a);
        ++n;
    }
    return n;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::string FiniteGroup::check_axioms() const {
    const int n = order;
    if (n <= 0) return "order must be positive";
    if ((int)mult.size() != n * n) return "multiplication table has wrong size";
    for (int i = 0; i < n * n; ++i)
        if (mult[i] < 0 || mult[i] >= n)
            return "closure violated: table entry out of range at (" +
                   std::to_string(i / n) + "," + std::to_string(i % n) + ")";
    if (identity < 0 || identity >= n) return "identity index out of range";
    for (int a = 0; a < n; ++a)
        if (mul(identity, a) != a || mul(a, identity) != a)
            return "identity axiom violated at element " + std::to_string(a);
    if ((int)inv.size() != n) return "inverse table has wrong size";
    for (int a = 0; a < n; ++a) {
        if (inv[a] < 0 || inv[a] >= n) return "inverse out of range";
        if (mul(a, inv[a]) != identity || mul(inv[a], a) != identity)
            return "inverse axiom violated at element " + std::to_string(a);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    return "associativity violated at triple (" + std::to_string(a) +
                           "," + std::to_string(b) + "," + std::to_string(c) + ")";
    return "";
}

FiniteGroup group_from_table(std::string name, std::vector<int> mult) {
    FiniteGroup g;
    g.name = std::move(name);
    int n = 0;
    while (n * n < (int)mult.size()) ++n;
    if (n * n != (int)mult.size())
        throw std::invalid_argument("group table is not square");
    if (n > FiniteGroup::kMaxOrder)
        throw std::invalid_argument("group order exceeds cap of " +
                                    std::to_string(FiniteGroup::kMaxOrder));
    g.order = n;
    g.mult = std::move(mult);
    for (int i = 0; i < n * n; ++i)
        if (g.mult[i] < 0 || g.mult[i] >= n)
            throw std::invalid_argument("closure violated: table entry out of range");
    // locate the two-sided identity
    g.identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = g.mul(e, a) == a && g.mul(a, e) == a;
        if (ok) { g.identity = e; break; }
    }
    if (g.identity < 0)
        throw std::invalid_argument("identity axiom violated: no two-sided unit");
    // derive inverses
    g.inv.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (g.mul(a, b) == g.identity && g.mul(b, a) == g.identity) {
                g.inv[a] = b;
                break;
            }
        }
        if (g.inv[a] < 0)
            throw std::invalid_argument("inverse axiom violated at element " +
                                        std::to_string(a));
    }
    std::string err = g.check_axioms();
    if (!err.empty()) throw std::invalid_argument(err);
    return g;
}

FiniteGroup make_trivial() { return make_cyclic(1); }

FiniteGroup make_cyclic(int k) {
    if (k < 1) throw std::invalid_argument("make_cyclic: k must be >= 1");
    std::vector<int> mult(k * k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) mult[a * k + b] = (a + b) % k;
    return group_from_table("Z" + std::to_string(k), std::move(mult));
}

FiniteGroup make_dihedral(int k) {
    if (k < 1) throw std::invalid_argument("make_dihedral: k must be >= 1");
    // element i < k: rotation r^i; element k+i: reflection s r^i
    int n = 2 * k;
    auto rot = [k](int x) { return ((x % k) + k) % k; };
    std::vector<int> mult(n * n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            int fa = a / k, ra = a % k, fb = b / k, rb = b % k;
            int f, r;
            if (fa == 0 && fb == 0)      { f = 0; r = rot(ra + rb); }
            else if (fa == 0 && fb == 1) { f = 1; r = rot(rb - ra); }
            else if (fa == 1 && fb == 0) { f = 1; r = rot(ra + rb); }
            else                         { f = 0; r = rot(rb - ra); }
            mult[a * n + b] = f * k + r;
        }
    }
    return group_from_table("D" + std::to_string(k), std::move(mult));
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

FiniteGroup make_symmetric(int n) {
    if (n < 1 || n > 5)
        throw std::invalid_argument("make_symmetric: n must be in [1,5]");
    auto perms = all_permutations(n);
    int m = (int)perms.size();
    auto index_of = [&](const std::vector<int>& p) {
        return (int)(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
    };
    std::vector<int> mult(m * m);
    std::vector<int> comp(n);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            for (int i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
            mult[a * m + b] = index_of(comp);
        }
    }
    return group_from_table("S" + std::to_string(n), std::move(mult));
}

FiniteGroup make_quaternion8() {
    // elements: 1,-1,i,-i,j,-j,k,-k  ->  indices 0..7; index = 2*axis + sign
    // axis 0 = unit, 1 = i, 2 = j, 3 = k
    auto enc = [](int axis, int sign) { return 2 * axis + (sign < 0 ? 1 : 0); };
    // basis product table: (axis,axis) -> (axis, sign)
    static const int axis_tab[4][4] = {
        {0, 1, 2, 3},
        {1, 0, 3, 2},
        {2, 3, 0, 1},
        {3, 2, 1, 0},
    };
    static const int sign_tab[4][4] = {
        {+1, +1, +1, +1},
        {+1, -1, +1, -1},
        {+1, -1, -1, +1},
        {+1, +1, -1, -1},
    };
    std::vector<int> mult(64);
    for (int a = 0; a < 8; ++a) {
        for (int b = 0; b < 8; ++b) {
            int ax = a / 2, sa = (a % 2) ? -1 : 1;
            int bx = b / 2, sb = (b % 2) ? -1 : 1;
            int cx = axis_tab[ax][bx];
            int sc = sign_tab[ax][bx] * sa * sb;
            mult[a * 8 + b] = enc(cx, sc);
        }
    }
    return group_from_table("Q8", std::move(mult));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    long long n = (long long)a.order * b.order;
    if (n > FiniteGroup::kMaxOrder)
        throw std::invalid_argument("direct_product: order exceeds cap");
    int m = (int)n;
    std::vector<int> mult((size_t)m * m);
    for (int x = 0; x < m; ++x) {
        int xa = x / b.order, xb = x % b.order;
        for (int y = 0; y < m; ++y) {
            int ya = y / b.order, yb = y % b.order;
            mult[(size_t)x * m + y] = a.mul(xa, ya) * b.order + b.mul(xb, yb);
        }
    }
    return group_from_table(a.name + "x" + b.name, std::move(mult));
}

int Subgroup::from_parent(int p) const {
    auto it = std::lower_bound(parent_indices.begin(), parent_indices.end(), p);
    if (it == parent_indices.end() || *it != p) return -1;
    return (int)(it - parent_indices.begin());
}

GroupHom make_hom(const FiniteGroup& source, const FiniteGroup& target,
                  std::vector<int> images) {
    if ((int)images.size() != source.order)
        throw std::invalid_argument("hom: image table has wrong size");
    for (int v : images)
        if (v < 0 || v >= target.order)
            throw std::invalid_argument("hom: image out of range");
    if (images[source.identity] != target.identity)
        throw std::invalid_argument("hom: identity not preserved");
    for (int a = 0; a < source.order; ++a)
        for (int b = 0; b < source.order; ++b)
            if (images[source.mul(a, b)] != target.mul(images[a], images[b]))
                throw std::invalid_argument("hom: multiplicativity violated at (" +
                                            std::to_string(a) + "," + std::to_string(b) + ")");
    return GroupHom{source, target, std::move(images)};
}

GroupHom identity_hom(const FiniteGroup& g) {
    std::vector<int> images(g.order);
    std::iota(images.begin(), images.end(), 0);
    return GroupHom{g, g, std::move(images)};
}

GroupHom embedding_hom(const Subgroup& s, const FiniteGroup& parent) {
    return make_hom(s.group, parent, s.parent_indices);
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
    std::vector<ConjugacyClass> out;
    std::vector<char> seen(g.order, 0);
    for (int x = 0; x < g.order; ++x) {
        if (seen[x]) continue;
        std::vector<char> in_class(g.order, 0);
        for (int h = 0; h < g.order; ++h) {
            int y = g.mul(g.mul(h, x), g.inverse(h));
            in_class[y] = 1;
        }
        ConjugacyClass c;
        c.representative = x;
        for (int y = 0; y < g.order; ++y)
            if (in_class[y]) {
                c.members.push_back(y);
                seen[y] = 1;
            }
        out.push_back(std::move(c));
    }
    return out;
}

Subgroup subgroup_from_elements(const FiniteGroup& g, std::vector<int> elements,
                                std::string name) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    int m = (int)elements.size();
    auto pos = [&](int p) {
        auto it = std::lower_bound(elements.begin(), elements.end(), p);
        if (it == elements.end() || *it != p)
            throw std::invalid_argument("subgroup: element set not closed under multiplication");
        return (int)(it - elements.begin());
    };
    std::vector<int> mult((size_t)m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            mult[(size_t)i * m + j] = pos(g.mul(elements[i], elements[j]));
    if (name.empty()) name = g.name + "_sub" + std::to_string(m);
    Subgroup s;
    s.group = group_from_table(std::move(name), std::move(mult));
    s.parent_indices = std::move(elements);
    return s;
}

std::vector<int> generated_subgroup_elements(const FiniteGroup& g,
                                             const std::vector<int>& generators) {
    std::vector<char> in(g.order, 0);
    std::vector<int> stack = {g.identity};
    in[g.identity] = 1;
    for (int x : generators)
        if (!in[x]) { in[x] = 1; stack.push_back(x); }
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y = 0; y < g.order; ++y) {
            if (!in[y]) continue;
            for (int z : {g.mul(x, y), g.mul(y, x), g.inverse(x)}) {
                if (!in[z]) { in[z] = 1; stack.push_back(z); }
            }
        }
    }
    std::vector<int> out;
    for (int x = 0; x < g.order; ++x)
        if (in[x]) out.push_back(x);
    return out;
}

Subgroup centralizer(const FiniteGroup& g, GroupElement x) {
    std::vector<int> elems;
    for (int h = 0; h < g.order; ++h)
        if (g.mul(h, x) == g.mul(x, h)) elems.push_back(h);
    return subgroup_from_elements(g, std::move(elems),
                                  g.name + "_cent" + std::to_string(x));
}

bool class_equation_check(const FiniteGroup& g) {
    auto classes = conjugacy_classes(g);
    long long total = 0;
    for (const auto& c : classes) {
        total += (long long)c.members.size();
        Subgroup cen = centralizer(g, c.representative);
        if ((long long)c.members.size() * cen.group.order != g.order) return false;
    }
    return total == g.order;
}

FiniteGroup builtin_group(const std::string& name) {
    if (name == "Q8") return make_quaternion8();
    if (name.size() >= 2 && (name[0] == 'Z' || name[0] == 'D' || name[0] == 'S')) {
        int k;
        try {
            size_t pos = 0;
            k = std::stoi(name.substr(1), &pos);
            if (pos != name.size() - 1) throw std::invalid_argument("");
        } catch (...) {
            throw std::invalid_argument("unknown builtin group: " + name);
        }
        if (name[0] == 'Z') return make_cyclic(k);
        if (name[0] == 'D') return make_dihedral(k);
        return make_symmetric(k);
    }
    throw std::invalid_argument("unknown builtin group: " + name);
}

} // namespace dwred
