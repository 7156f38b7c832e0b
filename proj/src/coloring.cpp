#include "dwred/coloring.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace dwred {

bool is_flat(const DeltaComplex& x, const FiniteGroup& g, const FlatColoring& c) {
    if ((int)c.colors.size() != x.edge_count()) return false;
    for (int v : c.colors)
        if (v < 0 || v >= g.order) return false;
    if (x.dimension() < 2) return true;
    for (int t = 0; t < x.simplex_count(2); ++t) {
        const auto& f = x.faces(2, t);
        if (g.mul(c.colors[f[2]], c.colors[f[0]]) != c.colors[f[1]]) return false;
    }
    return true;
}

FlatColoring apply_gauge(const DeltaComplex& x, const FiniteGroup& g,
                         const GaugeTransformation& t, const FlatColoring& c) {
    if ((int)t.per_vertex.size() != x.vertex_count())
        throw std::invalid_argument("apply_gauge: one group element per vertex required");
    FlatColoring out;
    out.colors.resize(x.edge_count());
    for (int e = 0; e < x.edge_count(); ++e) {
        int u = x.edge_source(e), v = x.edge_target(e);
        out.colors[e] = g.mul(g.mul(g.inverse(t.per_vertex[u]), c.colors[e]),
                              t.per_vertex[v]);
    }
    return out;
}

int default_thread_count() {
    if (const char* env = std::getenv("DWRED_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return (int)std::min(8u, std::max(1u, hc));
}

long long gauge_group_order(const DeltaComplex& x, const FiniteGroup& g) {
    long long r = 1;
    for (int i = 0; i < x.vertex_count(); ++i) {
        if (r > LLONG_MAX / g.order)
            throw std::overflow_error("gauge group order exceeds 64 bits");
        r *= g.order;
    }
    return r;
}

ColoringPlan::ColoringPlan(const DeltaComplex& x, const FiniteGroup& g,
                           std::vector<int> pinned)
    : x_(&x), g_(&g), pinned_(std::move(pinned)) {
    const int E = x.edge_count();
    const int T = x.dimension() >= 2 ? x.simplex_count(2) : 0;
    const int S = x.top_count();

    std::vector<int> tri_unset(T, 3);
    std::vector<int> top_unset(S, x.dimension());
    std::vector<std::vector<int>> edge_tris(E), edge_tops(E);
    for (int t = 0; t < T; ++t)
        for (int id : x.faces(2, t)) edge_tris[id].push_back(t);
    for (int s = 0; s < S; ++s)
        for (int e : x.consecutive_edges(s)) edge_tops[e].push_back(s);

    std::vector<char> colored(E, 0);
    std::vector<int> force_queue;
    int n_colored = 0;

    auto tri_edge_ids = [&x](int t) {
        const auto& f = x.faces(2, t);
        return std::array<int, 3>{f[0], f[1], f[2]};
    };

    // marks an edge colored; reports triangles/tops completing at this event
    auto set_edge = [&](int e, std::vector<int>& checks, std::vector<int>& tops) {
        colored[e] = 1;
        ++n_colored;
        for (int t : edge_tris[e]) {
            if (--tri_unset[t] == 0) checks.push_back(t);
            else if (tri_unset[t] == 1) force_queue.push_back(t);
        }
        for (int s : edge_tops[e])
            if (--top_unset[s] == 0) tops.push_back(s);
    };

    for (int e : pinned_) {
        if (colored[e]) continue;
        set_edge(e, initial_check_tris_, initial_completed_tops_);
    }

    while (n_colored < E) {
        int forced_tri = -1;
        while (!force_queue.empty()) {
            int t = force_queue.back();
            force_queue.pop_back();
            if (tri_unset[t] == 1) { forced_tri = t; break; }
        }
        Step st;
        std::vector<int> completed;
        if (forced_tri >= 0) {
            const auto& f = x.faces(2, forced_tri);
            int role = -1;
            for (int i = 0; i < 3; ++i)
                if (!colored[f[i]]) { role = i; break; }
            st.edge = f[role];
            st.forced = true;
            st.tri = tri_edge_ids(forced_tri);
            st.role = role;
            set_edge(st.edge, completed, st.completed_tops);
            // the forcing triangle holds by construction
            completed.erase(std::remove(completed.begin(), completed.end(), forced_tri),
                            completed.end());
        } else {
            // branch on the uncolored edge that will force the most triangles
            int best = -1, best_score = -1;
            for (int e = 0; e < E; ++e) {
                if (colored[e]) continue;
                int score = 0;
                for (int t : edge_tris[e])
                    if (tri_unset[t] == 2) ++score;
                if (score > best_score) { best_score = score; best = e; }
            }
            st.edge = best;
            st.forced = false;
            st.role = branch_count_++;
            set_edge(st.edge, completed, st.completed_tops);
        }
        for (int t : completed) st.check_edges.push_back(tri_edge_ids(t));
        steps_.push_back(std::move(st));
    }
}

bool ColoringPlan::triangle_holds(const std::vector<int>& colors, int t) const {
    const auto& f = x_->faces(2, t);
    return g_->mul(colors[f[2]], colors[f[0]]) == colors[f[1]];
}

namespace {

struct NoPhase {
    long long add(long long acc, int, const std::vector<int>&) const { return acc; }
};

// Accumulates the signed cocycle value of completed top simplices mod m.
struct PhaseAccum {
    const DeltaComplex* x;
    int order;
    long long modulus;
    const std::vector<long long>* omega_mod;

    long long add(long long acc, int top, const std::vector<int>& colors) const {
        std::size_t key = 0;
        for (int e : x->consecutive_edges(top))
            key = key * (std::size_t)order + (std::size_t)colors[e];
        long long v = (*omega_mod)[key];
        if (v != 0 && x->sign(top) < 0) v = modulus - v;
        long long a = acc + v;
        return a >= modulus ? a - modulus : a;
    }
};

} // namespace

namespace {

// Recursive schedule executor. Policy::add folds top-simplex contributions,
// Leaf receives (colors, acc) at full assignments. Multiplication goes
// through raw table pointers; this sits at the bottom of every state sum.
template <typename Policy, typename Leaf>
struct Driver {
    const std::vector<int>& prefix;
    const Policy& pol;
    const Leaf& leaf;
    std::vector<int>& colors;
    const int* mult;
    const int* inv;
    int order;

    Driver(const FiniteGroup& g, const std::vector<int>& prefix_, const Policy& pol_,
           const Leaf& leaf_, std::vector<int>& colors_)
        : prefix(prefix_), pol(pol_), leaf(leaf_), colors(colors_),
          mult(g.mult.data()), inv(g.inv.data()), order(g.order) {}

    int mul(int a, int b) const { return mult[a * order + b]; }

    template <typename Step>
    void go(const std::vector<Step>& steps, std::size_t i, long long acc) {
        if (i == steps.size()) {
            leaf(colors, acc);
            return;
        }
        const Step& st = steps[i];
        if (st.forced) {
            int v;
            switch (st.role) {
                case 1: v = mul(colors[st.tri[2]], colors[st.tri[0]]); break;
                case 2: v = mul(colors[st.tri[1]], inv[colors[st.tri[0]]]); break;
                default: v = mul(inv[colors[st.tri[2]]], colors[st.tri[1]]); break;
            }
            colors[st.edge] = v;
            if (!checks_pass(st)) return;
            long long a = acc;
            for (int s : st.completed_tops) a = pol.add(a, s, colors);
            go(steps, i + 1, a);
        } else if (st.role < (int)prefix.size()) {
            colors[st.edge] = prefix[st.role];
            if (!checks_pass(st)) return;
            long long a = acc;
            for (int s : st.completed_tops) a = pol.add(a, s, colors);
            go(steps, i + 1, a);
        } else {
            for (int v = 0; v < order; ++v) {
                colors[st.edge] = v;
                if (!checks_pass(st)) continue;
                long long a = acc;
                for (int s : st.completed_tops) a = pol.add(a, s, colors);
                go(steps, i + 1, a);
            }
        }
    }

    template <typename Step>
    bool checks_pass(const Step& st) const {
        for (const auto& tf : st.check_edges)
            if (mul(colors[tf[2]], colors[tf[0]]) != colors[tf[1]]) return false;
        return true;
    }
};

} // namespace

void ColoringPlan::for_each(const std::function<void(const std::vector<int>&)>& fn) const {
    std::vector<int> colors(x_->edge_count(), g_->identity);
    NoPhase pol;
    std::vector<int> prefix;
    auto leaf = [&fn](const std::vector<int>& c, long long) { fn(c); };
    for (int t : initial_check_tris_)
        if (!triangle_holds(colors, t)) return;
    Driver<NoPhase, decltype(leaf)> d(*g_, prefix, pol, leaf, colors);
    d.go(steps_, 0, 0);
}

long long ColoringPlan::count() const {
    long long n = 0;
    for_each([&n](const std::vector<int>&) { ++n; });
    return n;
}

std::vector<long long> ColoringPlan::phase_counts(const Cochain& w, long long modulus,
                                                  int threads) const {
    if (w.degree() != x_->dimension())
        throw std::invalid_argument("phase_counts: cocycle degree must match dimension");
    const int n = x_->dimension();
    const int ord = g_->order;
    // flattened cocycle table in units of 1/modulus
    std::size_t table_size = 1;
    for (int i = 0; i < n; ++i) {
        table_size *= (std::size_t)ord;
        if (table_size > (std::size_t)16'000'000)
            throw std::invalid_argument("phase_counts: cocycle table too large");
    }
    std::vector<long long> omega_mod(table_size, 0);
    {
        std::vector<int> args(n, 0);
        std::size_t idx = 0;
        bool more = true;
        while (more) {
            Phase p = w.at(args);
            if (!p.is_zero()) {
                long long den = p.value().den();
                if (modulus % den != 0)
                    throw std::invalid_argument("phase_counts: modulus incompatible with cocycle");
                omega_mod[idx] = p.value().num() * (modulus / den);
            }
            ++idx;
            more = false;
            for (int i = n - 1; i >= 0; --i) {
                if (++args[i] < ord) { more = true; break; }
                args[i] = 0;
            }
        }
    }

    PhaseAccum pol{x_, ord, modulus, &omega_mod};

    auto run_task = [&](const std::vector<int>& prefix, std::vector<long long>& counts) {
        std::vector<int> colors(x_->edge_count(), g_->identity);
        for (int t : initial_check_tris_)
            if (!triangle_holds(colors, t)) return;
        if (modulus == 1) {
            // trivial phase: a bare counting fold
            NoPhase np;
            auto leaf = [&counts](const std::vector<int>&, long long) { ++counts[0]; };
            Driver<NoPhase, decltype(leaf)> d(*g_, prefix, np, leaf, colors);
            d.go(steps_, 0, 0);
            return;
        }
        long long acc0 = 0;
        for (int s : initial_completed_tops_) acc0 = pol.add(acc0, s, colors);
        auto leaf = [&counts](const std::vector<int>&, long long acc) { ++counts[acc]; };
        Driver<PhaseAccum, decltype(leaf)> d(*g_, prefix, pol, leaf, colors);
        d.go(steps_, 0, acc0);
    };

    std::vector<long long> total(modulus, 0);
    int depth = 0;
    long long tasks = 1;
    if (threads > 1) {
        while (depth < branch_count_ && depth < 4 && tasks < (long long)threads * 8) {
            tasks *= ord;
            ++depth;
        }
    }
    if (depth == 0) {
        run_task({}, total);
        return total;
    }
    std::atomic<long long> next{0};
    std::mutex merge_mutex;
    auto worker = [&] {
        std::vector<long long> local(modulus, 0);
        for (;;) {
            long long task = next.fetch_add(1);
            if (task >= tasks) break;
            std::vector<int> prefix(depth);
            long long t = task;
            for (int i = depth - 1; i >= 0; --i) {
                prefix[i] = (int)(t % ord);
                t /= ord;
            }
            run_task(prefix, local);
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        for (long long r = 0; r < modulus; ++r) total[r] += local[r];
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return total;
}

std::vector<FlatColoring> enumerate_flat_colorings(const DeltaComplex& x,
                                                   const FiniteGroup& g) {
    std::vector<FlatColoring> out;
    ColoringPlan plan(x, g);
    plan.for_each([&out](const std::vector<int>& c) { out.push_back({c}); });
    return out;
}

long long count_flat_colorings(const DeltaComplex& x, const FiniteGroup& g) {
    return ColoringPlan(x, g).count();
}

int holonomy_class(const DeltaComplex& x, const FiniteGroup& g, const FlatColoring& c,
                   const std::vector<std::pair<int, bool>>& loop) {
    if (loop.empty()) throw std::invalid_argument("holonomy_class: empty path");
    auto src = [&](const std::pair<int, bool>& s) {
        return s.second ? x.edge_source(s.first) : x.edge_target(s.first);
    };
    auto tgt = [&](const std::pair<int, bool>& s) {
        return s.second ? x.edge_target(s.first) : x.edge_source(s.first);
    };
    for (std::size_t i = 0; i < loop.size(); ++i) {
        const auto& cur = loop[i];
        const auto& nxt = loop[(i + 1) % loop.size()];
        if (tgt(cur) != src(nxt))
            throw std::invalid_argument("holonomy_class: path is not a closed loop");
    }
    int h = g.identity;
    for (const auto& s : loop) {
        int v = c.colors[s.first];
        h = g.mul(h, s.second ? v : g.inverse(v));
    }
    auto classes = conjugacy_classes(g);
    for (int i = 0; i < (int)classes.size(); ++i)
        if (std::binary_search(classes[i].members.begin(), classes[i].members.end(), h))
            return i;
    throw std::logic_error("holonomy_class: element not found in any class");
}

namespace {

// Spanning tree edge ids of a connected complex (BFS from vertex 0, loops
// skipped).
std::vector<int> spanning_tree(const DeltaComplex& x) {
    int V = x.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> adj(V); // (neighbor, edge)
    for (int e = 0; e < x.edge_count(); ++e) {
        int u = x.edge_source(e), v = x.edge_target(e);
        if (u == v) continue;
        adj[u].push_back({v, e});
        adj[v].push_back({u, e});
    }
    std::vector<int> tree;
    if (V == 0) return tree;
    std::vector<char> seen(V, 0);
    std::vector<int> queue = {0};
    seen[0] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int u = queue[i];
        for (auto [v, e] : adj[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                tree.push_back(e);
                queue.push_back(v);
            }
        }
    }
    return tree;
}

ComponentBundles component_bundles(DeltaComplex comp, const FiniteGroup& g) {
    std::vector<int> tree = spanning_tree(comp);
    ColoringPlan plan(comp, g, tree);
    std::vector<std::vector<int>> reps;
    plan.for_each([&reps](const std::vector<int>& c) { reps.push_back(c); });

    long long tree_gauge = 1;
    for (int i = 1; i < comp.vertex_count(); ++i) {
        if (tree_gauge > LLONG_MAX / g.order)
            throw std::overflow_error("bundle_groupoid: coloring count overflow");
        tree_gauge *= g.order; // |G|^(V-1)
    }

    // residual gauge action: G by simultaneous conjugation on tree-trivial
    // colorings
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < (int)reps.size(); ++i) index[reps[i]] = i;
    std::vector<char> seen(reps.size(), 0);
    std::vector<BundleClass> classes;
    long long coloring_count = (long long)reps.size() * tree_gauge;
    for (int i = 0; i < (int)reps.size(); ++i) {
        if (seen[i]) continue;
        // orbit of reps[i]
        std::vector<int> orbit = {i};
        seen[i] = 1;
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            const std::vector<int>& c = reps[orbit[k]];
            for (int z = 0; z < g.order; ++z) {
                std::vector<int> cz(c.size());
                for (std::size_t e = 0; e < c.size(); ++e)
                    cz[e] = g.mul(g.mul(g.inverse(z), c[e]), z);
                auto it = index.find(cz);
                if (it == index.end())
                    throw std::logic_error("bundle_groupoid: conjugation left the solution set");
                if (!seen[it->second]) {
                    seen[it->second] = 1;
                    orbit.push_back(it->second);
                }
            }
        }
        // stabilizer: elements commuting with every edge color
        std::vector<int> stab;
        for (int z = 0; z < g.order; ++z) {
            bool ok = true;
            for (int v : reps[i])
                if (g.mul(v, z) != g.mul(z, v)) { ok = false; break; }
            if (ok) stab.push_back(z);
        }
        Subgroup s = subgroup_from_elements(g, stab, g.name + "_aut");
        BundleClass cls;
        cls.rep.colors = reps[i];
        cls.aut = s.group;
        cls.aut_embedding = s.parent_indices;
        cls.size = tree_gauge * (long long)orbit.size();
        classes.push_back(std::move(cls));
    }
    return ComponentBundles{std::move(comp), std::move(classes), coloring_count};
}

} // namespace

BundleGroupoid bundle_groupoid(const DeltaComplex& x, const FiniteGroup& g) {
    BundleGroupoid out;
    std::vector<DeltaComplex> comps = x.components();
    for (DeltaComplex& comp : comps)
        out.components.push_back(component_bundles(std::move(comp), g));

    // combined classes: one per tuple of component classes
    std::vector<std::vector<int>> tuples = {{}};
    for (const auto& comp : out.components) {
        std::vector<std::vector<int>> next;
        for (const auto& t : tuples)
            for (int c = 0; c < (int)comp.classes.size(); ++c) {
                std::vector<int> t2 = t;
                t2.push_back(c);
                next.push_back(std::move(t2));
            }
        tuples = std::move(next);
    }
    long long object_count = 1;
    for (const auto& comp : out.components) object_count *= comp.coloring_count;
    std::vector<IsoClass> classes;
    for (const auto& t : tuples) {
        IsoClass c;
        c.representative = (int)classes.size();
        c.size = 1;
        FiniteGroup aut = make_trivial();
        bool first = true;
        for (std::size_t i = 0; i < t.size(); ++i) {
            const BundleClass& bc = out.components[i].classes[t[i]];
            c.size *= bc.size;
            if (first) {
                aut = bc.aut;
                first = false;
            } else {
                aut = direct_product(aut, bc.aut);
            }
        }
        c.aut = std::move(aut);
        if (t.size() == 1)
            c.aut_embedding = out.components[0].classes[t[0]].aut_embedding;
        classes.push_back(std::move(c));
    }
    out.class_tuples = std::move(tuples);
    out.groupoid = EFGroupoid::from_components(std::move(classes), object_count);
    return out;
}

} // namespace dwred
