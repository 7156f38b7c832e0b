#include "dwred/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace dwred {

DeltaComplex::DeltaComplex(std::string name, int dimension, int vertex_count,
                           std::vector<std::vector<std::vector<int>>> faces_by_level,
                           std::vector<int> top_signs)
    : name_(std::move(name)),
      dimension_(dimension),
      vertex_count_(vertex_count),
      faces_(std::move(faces_by_level)),
      signs_(std::move(top_signs)) {
    if (dimension_ < 1) throw std::invalid_argument("DeltaComplex: dimension must be >= 1");
    if ((int)faces_.size() != dimension_ + 1)
        throw std::invalid_argument("DeltaComplex: need a face list per level 1..dimension");
    if (signs_.size() != faces_[dimension_].size())
        throw std::invalid_argument("DeltaComplex: one sign per top simplex required");
    for (int s : signs_)
        if (s != 1 && s != -1)
            throw std::invalid_argument("DeltaComplex: signs must be +1 or -1");
    for (int k = 1; k <= dimension_; ++k)
        for (const auto& f : faces_[k]) {
            if ((int)f.size() != k + 1)
                throw std::invalid_argument("DeltaComplex: a k-simplex has k+1 faces");
            int lower = k == 1 ? vertex_count_ : (int)faces_[k - 1].size();
            for (int id : f)
                if (id < 0 || id >= lower)
                    throw std::invalid_argument("DeltaComplex: face id out of range");
        }
    // cache the consecutive-edge paths of top simplices
    top_edges_.resize(faces_[dimension_].size());
    for (int s = 0; s < (int)faces_[dimension_].size(); ++s) {
        top_edges_[s].resize(dimension_);
        for (int i = 1; i <= dimension_; ++i)
            top_edges_[s][i - 1] = subedge(dimension_, s, i - 1, i);
    }
}

int DeltaComplex::simplex_count(int level) const {
    if (level == 0) return vertex_count_;
    return (int)faces_[level].size();
}

const std::vector<int>& DeltaComplex::faces(int level, int id) const {
    return faces_[level][id];
}

int DeltaComplex::subedge(int level, int id, int a, int b) const {
    // delete vertex slots from the top down until only {a, b} remain
    int cur_level = level, cur = id;
    std::vector<int> slots(level + 1);
    std::iota(slots.begin(), slots.end(), 0);
    while (cur_level > 1) {
        int pos = -1;
        for (int i = (int)slots.size() - 1; i >= 0; --i) {
            if (slots[i] != a && slots[i] != b) { pos = i; break; }
        }
        cur = faces_[cur_level][cur][pos];
        slots.erase(slots.begin() + pos);
        --cur_level;
    }
    return cur;
}

ValidationReport DeltaComplex::validate() const {
    // simplicial identities d_i d_j = d_{j-1} d_i for i < j
    for (int k = 2; k <= dimension_; ++k) {
        for (int s = 0; s < simplex_count(k); ++s) {
            const auto& f = faces_[k][s];
            for (int j = 1; j <= k; ++j)
                for (int i = 0; i < j; ++i)
                    if (faces_[k - 1][f[j]][i] != faces_[k - 1][f[i]][j - 1])
                        return {false, "simplicial identity d_" + std::to_string(i) + "d_" +
                                           std::to_string(j) + " violated at level-" +
                                           std::to_string(k) + " simplex " + std::to_string(s)};
        }
    }
    // closedness: each (n-1)-simplex sits in exactly two top boundary slots
    int n = dimension_;
    int lower = simplex_count(n - 1);
    std::vector<int> uses(lower, 0);
    for (int s = 0; s < top_count(); ++s)
        for (int id : faces_[n][s]) uses[id]++;
    for (int id = 0; id < lower; ++id)
        if (uses[id] != 2)
            return {false, "not closed: level-" + std::to_string(n - 1) + " simplex " +
                               std::to_string(id) + " lies in " + std::to_string(uses[id]) +
                               " top boundary slots"};
    // fundamental chain is a cycle
    std::vector<long long> coeff(lower, 0);
    for (int s = 0; s < top_count(); ++s) {
        const auto& f = faces_[n][s];
        for (int i = 0; i <= n; ++i) coeff[f[i]] += (i % 2 == 0 ? 1 : -1) * signs_[s];
    }
    for (int id = 0; id < lower; ++id)
        if (coeff[id] != 0)
            return {false, "fundamental chain is not a cycle: boundary coefficient " +
                               std::to_string(coeff[id]) + " at level-" +
                               std::to_string(n - 1) + " simplex " + std::to_string(id)};
    return {true, ""};
}

std::vector<DeltaComplex> DeltaComplex::components() const {
    // union-find over all simplices; a simplex joins each of its faces
    std::vector<int> offset(dimension_ + 1, 0);
    for (int k = 1; k <= dimension_; ++k) offset[k] = offset[k - 1] + simplex_count(k - 1);
    int total = offset[dimension_] + simplex_count(dimension_);
    std::vector<int> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (int k = 1; k <= dimension_; ++k)
        for (int s = 0; s < simplex_count(k); ++s)
            for (int f : faces_[k][s]) unite(offset[k] + s, offset[k - 1] + f);
    // collect roots in first-seen order over vertices then higher simplices
    std::vector<int> root_index(total, -1);
    std::vector<int> roots;
    for (int x = 0; x < total; ++x) {
        int r = find(x);
        if (root_index[r] < 0) {
            root_index[r] = (int)roots.size();
            roots.push_back(r);
        }
    }
    int ncomp = (int)roots.size();
    // remap ids per component
    std::vector<std::vector<std::vector<int>>> idmap(ncomp);
    for (int c = 0; c < ncomp; ++c) idmap[c].resize(dimension_ + 1);
    std::vector<std::vector<int>> newid(dimension_ + 1);
    for (int k = 0; k <= dimension_; ++k) newid[k].resize(simplex_count(k));
    std::vector<std::vector<int>> counts(ncomp, std::vector<int>(dimension_ + 1, 0));
    std::vector<std::vector<int>> comp_of(dimension_ + 1);
    for (int k = 0; k <= dimension_; ++k) {
        comp_of[k].resize(simplex_count(k));
        for (int s = 0; s < simplex_count(k); ++s) {
            int c = root_index[find(offset[k] + s)];
            comp_of[k][s] = c;
            newid[k][s] = counts[c][k]++;
        }
    }
    std::vector<DeltaComplex> out;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<std::vector<std::vector<int>>> faces(dimension_ + 1);
        std::vector<int> signs;
        for (int k = 1; k <= dimension_; ++k) {
            faces[k].resize(counts[c][k]);
            for (int s = 0; s < simplex_count(k); ++s) {
                if (comp_of[k][s] != c) continue;
                std::vector<int> f = faces_[k][s];
                for (int& id : f) id = newid[k - 1][id];
                faces[k][newid[k][s]] = std::move(f);
                if (k == dimension_) {
                    signs.resize(counts[c][k]);
                    signs[newid[k][s]] = signs_[s];
                }
            }
        }
        out.emplace_back(name_ + "#" + std::to_string(c), dimension_, counts[c][0],
                         std::move(faces), std::move(signs));
    }
    return out;
}

DeltaComplex circle(int m) {
    if (m < 1) throw std::invalid_argument("circle: need at least one vertex");
    std::vector<std::vector<std::vector<int>>> faces(2);
    for (int i = 0; i < m; ++i) faces[1].push_back({(i + 1) % m, i});
    return DeltaComplex("circle:" + std::to_string(m), 1, m, std::move(faces),
                        std::vector<int>(m, 1));
}

DeltaComplex sphere2() {
    auto edge_id = [](int a, int b) {
        // (0,1)=0 (0,2)=1 (0,3)=2 (1,2)=3 (1,3)=4 (2,3)=5
        static const int tab[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
        return tab[a][b];
    };
    std::vector<std::vector<std::vector<int>>> faces(3);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) faces[1].push_back({b, a});
    std::vector<int> signs;
    for (int skip = 0; skip < 4; ++skip) {
        std::vector<int> v;
        for (int i = 0; i < 4; ++i)
            if (i != skip) v.push_back(i);
        faces[2].push_back({edge_id(v[1], v[2]), edge_id(v[0], v[2]), edge_id(v[0], v[1])});
        signs.push_back(skip % 2 == 0 ? 1 : -1);
    }
    return DeltaComplex("sphere", 2, 4, std::move(faces), std::move(signs));
}

DeltaComplex surface(int h) {
    if (h < 1) throw std::invalid_argument("surface: genus must be >= 1");
    int sides = 4 * h;
    // letter edges a_1,b_1,...,a_h,b_h get ids 0..2h-1; diagonals follow
    std::vector<std::pair<int, int>> word; // (edge id, exponent)
    for (int i = 0; i < h; ++i) {
        word.push_back({2 * i, +1});
        word.push_back({2 * i + 1, +1});
        word.push_back({2 * i, -1});
        word.push_back({2 * i + 1, -1});
    }
    std::vector<std::vector<std::vector<int>>> faces(3);
    int n_edges = 2 * h;
    for (int e = 0; e < n_edges; ++e) faces[1].push_back({0, 0});
    auto fresh_diagonal = [&] {
        faces[1].push_back({0, 0});
        return n_edges++;
    };
    std::vector<int> signs;
    // fan from corner 0: path(0 -> j) composed with side j gives path(0 -> j+1)
    int cur = word[0].first; // word[0] always has exponent +1
    for (int j = 1; j <= sides - 2; ++j) {
        auto [side, exp] = word[j];
        int next = j + 1 <= sides - 2 ? fresh_diagonal() : word[sides - 1].first;
        if (exp == +1) {
            // cur * side = next
            faces[2].push_back({side, next, cur});
            signs.push_back(+1);
        } else {
            // cur * side^{-1} = next, i.e. next * side = cur
            faces[2].push_back({side, cur, next});
            signs.push_back(-1);
        }
        cur = next;
    }
    return DeltaComplex("surface:" + std::to_string(h), 2, 1, std::move(faces),
                        std::move(signs));
}

DeltaComplex torus_grid(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("torus_grid: p, q must be >= 1");
    auto v = [&](int i, int j) { return ((i % p + p) % p) * q + ((j % q + q) % q); };
    auto he = [&](int i, int j) { return v(i, j); };              // (i,j) -> (i+1,j)
    auto we = [&](int i, int j) { return p * q + v(i, j); };      // (i,j) -> (i,j+1)
    auto de = [&](int i, int j) { return 2 * p * q + v(i, j); };  // (i,j) -> (i+1,j+1)
    std::vector<std::vector<std::vector<int>>> faces(3);
    faces[1].resize(3 * p * q);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) {
            faces[1][he(i, j)] = {v(i + 1, j), v(i, j)};
            faces[1][we(i, j)] = {v(i, j + 1), v(i, j)};
            faces[1][de(i, j)] = {v(i + 1, j + 1), v(i, j)};
        }
    std::vector<int> signs;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) {
            // lower (v(i,j), v(i+1,j), v(i+1,j+1)) and upper (v(i,j), v(i,j+1), v(i+1,j+1))
            faces[2].push_back({we(i + 1, j), de(i, j), he(i, j)});
            signs.push_back(+1);
            faces[2].push_back({he(i, j + 1), de(i, j), we(i, j)});
            signs.push_back(-1);
        }
    return DeltaComplex("torusgrid:" + std::to_string(p) + ":" + std::to_string(q), 2,
                        p * q, std::move(faces), std::move(signs));
}

namespace {

// Simplex bookkeeping for the staircase product: every simplex of x times a
// circle with `levels` edges is an embedded copy, a staircase, or a gap
// simplex, keyed by (level, base simplex, pivot).
struct ProductIds {
    // [kind][level][base dim] -> map from (base id, pivot) to new id
    // kind 0 = embedded (pivot unused), 1 = staircase, 2 = gap
    std::vector<std::vector<std::vector<std::map<std::pair<int, int>, int>>>> ids;
    std::vector<int> counts; // per product level (dimension), next free id

    ProductIds(int levels, int base_dim, int product_dim)
        : ids(3, std::vector<std::vector<std::map<std::pair<int, int>, int>>>(
                     levels, std::vector<std::map<std::pair<int, int>, int>>(base_dim + 1))),
          counts(product_dim + 1, 0) {}
};

} // namespace

DeltaComplex product_with_circle(const DeltaComplex& x, int levels) {
    if (levels < 1) throw std::invalid_argument("product_with_circle: levels must be >= 1");
    ValidationReport rep = x.validate();
    if (!rep.ok)
        throw std::invalid_argument("product_with_circle: input is not a closed cycle: " +
                                    rep.message);
    int n = x.dimension();
    int m = levels;
    ProductIds reg(m, n, n + 1);

    // product dimension of each simplex kind: embedded tau -> dim tau,
    // gap_a(tau) -> dim tau, st_a(tau) -> dim tau + 1
    auto get = [&](int kind, int level, int bdim, int bid, int pivot) -> int& {
        auto key = std::make_pair(bid, pivot);
        auto& m_ = reg.ids[kind][level][bdim];
        auto it = m_.find(key);
        if (it != m_.end()) return it->second;
        int pdim = kind == 1 ? bdim + 1 : bdim;
        int id = reg.counts[pdim]++;
        return m_.emplace(key, id).first->second;
    };

    // allocate ids level by level, dimension by dimension, in a fixed order
    for (int l = 0; l < m; ++l)
        for (int k = 0; k <= n; ++k)
            for (int s = 0; s < x.simplex_count(k); ++s) get(0, l, k, s, 0);
    for (int l = 0; l < m; ++l)
        for (int k = 0; k <= n; ++k)
            for (int s = 0; s < x.simplex_count(k); ++s)
                for (int a = 1; a <= k; ++a) get(2, l, k, s, a);
    for (int l = 0; l < m; ++l)
        for (int k = 0; k <= n; ++k)
            for (int s = 0; s < x.simplex_count(k); ++s)
                for (int a = 0; a <= k; ++a) get(1, l, k, s, a);

    std::vector<std::vector<std::vector<int>>> faces(n + 2);
    for (int k = 1; k <= n + 1; ++k) faces[k].resize(reg.counts[k]);

    auto base_face = [&](int k, int s, int i) { return x.faces(k, s)[i]; };

    for (int l = 0; l < m; ++l) {
        int lnext = (l + 1) % m;
        for (int k = 0; k <= n; ++k) {
            for (int s = 0; s < x.simplex_count(k); ++s) {
                // embedded copy
                if (k >= 1) {
                    std::vector<int> f(k + 1);
                    for (int i = 0; i <= k; ++i) f[i] = get(0, l, k - 1, base_face(k, s, i), 0);
                    faces[k][get(0, l, k, s, 0)] = std::move(f);
                }
                // gap simplices
                for (int a = 1; a <= k; ++a) {
                    std::vector<int> f(k + 1);
                    for (int i = 0; i <= k; ++i) {
                        if (i < a) {
                            f[i] = (a == 1 && i == 0)
                                       ? get(0, lnext, k - 1, base_face(k, s, i), 0)
                                       : get(2, l, k - 1, base_face(k, s, i), a - 1);
                        } else {
                            f[i] = (a == k && i == k)
                                       ? get(0, l, k - 1, base_face(k, s, i), 0)
                                       : get(2, l, k - 1, base_face(k, s, i), a);
                        }
                    }
                    faces[k][get(2, l, k, s, a)] = std::move(f);
                }
                // staircase simplices
                for (int a = 0; a <= k; ++a) {
                    std::vector<int> f(k + 2);
                    for (int i = 0; i <= k + 1; ++i) {
                        if (i < a) {
                            f[i] = get(1, l, k - 1, base_face(k, s, i), a - 1);
                        } else if (i == a) {
                            f[i] = a == 0 ? get(0, lnext, k, s, 0) : get(2, l, k, s, a);
                        } else if (i == a + 1) {
                            f[i] = a == k ? get(0, l, k, s, 0) : get(2, l, k, s, a + 1);
                        } else {
                            f[i] = get(1, l, k - 1, base_face(k, s, i - 1), a);
                        }
                    }
                    faces[k + 1][get(1, l, k, s, a)] = std::move(f);
                }
            }
        }
    }

    // top simplices and signs: the id allocation above runs staircases last
    // within each level, but ids are per-dimension, so recover the order
    std::vector<int> signs(reg.counts[n + 1], 1);
    for (int l = 0; l < m; ++l)
        for (int s = 0; s < x.simplex_count(n); ++s)
            for (int j = 0; j <= n; ++j)
                signs[get(1, l, n, s, j)] = x.sign(s) * (j % 2 == 0 ? 1 : -1);

    std::string name = x.name() + "xS1";
    if (m > 1) name += ":" + std::to_string(m);
    DeltaComplex out(name, n + 1, m * x.vertex_count(), std::move(faces),
                     std::move(signs));
    ValidationReport check = out.validate();
    if (!check.ok)
        throw std::logic_error("product_with_circle: construction failed validation: " +
                               check.message);
    return out;
}

DeltaComplex disjoint_union_complex(const DeltaComplex& a, const DeltaComplex& b) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("disjoint_union: dimensions differ");
    int n = a.dimension();
    std::vector<std::vector<std::vector<int>>> faces(n + 1);
    std::vector<int> signs;
    for (int k = 1; k <= n; ++k) {
        for (int s = 0; s < a.simplex_count(k); ++s) faces[k].push_back(a.faces(k, s));
        int off = k == 1 ? a.vertex_count() : a.simplex_count(k - 1);
        for (int s = 0; s < b.simplex_count(k); ++s) {
            std::vector<int> f = b.faces(k, s);
            for (int& id : f) id += off;
            faces[k].push_back(std::move(f));
        }
    }
    for (int s = 0; s < a.top_count(); ++s) signs.push_back(a.sign(s));
    for (int s = 0; s < b.top_count(); ++s) signs.push_back(b.sign(s));
    return DeltaComplex(a.name() + "+" + b.name(), n, a.vertex_count() + b.vertex_count(),
                        std::move(faces), std::move(signs));
}

DeltaComplex empty_complex(int dimension) {
    return DeltaComplex("empty", dimension, 0,
                        std::vector<std::vector<std::vector<int>>>(dimension + 1), {});
}

} // namespace dwred
