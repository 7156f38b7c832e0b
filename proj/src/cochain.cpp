#include "dwred/cochain.hpp"

#include <numeric>
#include <stdexcept>

namespace dwred {

namespace {

std::uint64_t table_size(int order, int degree) {
    std::uint64_t s = 1;
    for (int i = 0; i < degree; ++i) s *= (std::uint64_t)order;
    return s;
}

// Odometer over G^d argument tuples.
bool next_tuple(std::vector<int>& t, int order) {
    for (int i = (int)t.size() - 1; i >= 0; --i) {
        if (++t[i] < order) return true;
        t[i] = 0;
    }
    return false;
}

} // namespace

Cochain::Cochain(FiniteGroup group, int degree)
    : group_(std::move(group)), degree_(degree) {
    if (degree_ < 1) throw std::invalid_argument("Cochain: degree must be >= 1");
    std::uint64_t sz = table_size(group_.order, degree_);
    use_dense_ = sz <= kDenseLimit;
    if (use_dense_) table_.assign(sz, Phase());
}

std::uint64_t Cochain::key(const std::vector<int>& args) const {
    std::uint64_t k = 0;
    for (int a : args) k = k * (std::uint64_t)group_.order + (std::uint64_t)a;
    return k;
}

Phase Cochain::at(const std::vector<int>& args) const {
    if ((int)args.size() != degree_)
        throw std::invalid_argument("Cochain::at: wrong arity");
    if (use_dense_) return table_[key(args)];
    auto it = entries_.find(key(args));
    return it == entries_.end() ? Phase() : it->second;
}

void Cochain::set(const std::vector<int>& args, const Phase& p) {
    if ((int)args.size() != degree_)
        throw std::invalid_argument("Cochain::set: wrong arity");
    for (int a : args) {
        if (a < 0 || a >= group_.order)
            throw std::invalid_argument("Cochain::set: argument out of range");
        if (a == group_.identity && !p.is_zero())
            throw std::invalid_argument(
                "Cochain::set: nonzero value at identity argument breaks normalization");
    }
    if (use_dense_) {
        table_[key(args)] = p;
    } else if (p.is_zero()) {
        entries_.erase(key(args));
    } else {
        entries_[key(args)] = p;
    }
}

bool Cochain::is_zero() const {
    if (use_dense_) {
        for (const Phase& p : table_)
            if (!p.is_zero()) return false;
        return true;
    }
    return entries_.empty();
}

bool Cochain::is_normalized() const {
    bool ok = true;
    for_each_nonzero([&](const std::vector<int>& args, const Phase&) {
        for (int a : args)
            if (a == group_.identity) ok = false;
    });
    return ok;
}

long long Cochain::denominator_lcm() const {
    long long l = 1;
    for_each_nonzero([&](const std::vector<int>&, const Phase& p) {
        l = std::lcm(l, p.value().den());
    });
    return l;
}

void Cochain::for_each_nonzero(
    const std::function<void(const std::vector<int>&, const Phase&)>& fn) const {
    if (use_dense_) {
        std::vector<int> t(degree_, 0);
        std::uint64_t idx = 0;
        do {
            if (!table_[idx].is_zero()) fn(t, table_[idx]);
            ++idx;
        } while (next_tuple(t, group_.order));
    } else {
        std::vector<int> t(degree_);
        for (const auto& [k, p] : entries_) {
            std::uint64_t key = k;
            for (int i = degree_ - 1; i >= 0; --i) {
                t[i] = (int)(key % (std::uint64_t)group_.order);
                key /= (std::uint64_t)group_.order;
            }
            fn(t, p);
        }
    }
}

Cochain zero_cochain(const FiniteGroup& g, int degree) { return Cochain(g, degree); }

Cochain coboundary(const Cochain& c) {
    const FiniteGroup& g = c.group();
    int d = c.degree();
    Cochain out(g, d + 1);
    std::vector<int> args(d + 1, 0);
    std::vector<int> inner(d);
    do {
        Phase v;
        // leading face: drop g1
        for (int i = 0; i < d; ++i) inner[i] = args[i + 1];
        v += c.at(inner);
        // inner faces: multiply adjacent arguments
        for (int i = 1; i <= d; ++i) {
            int k = 0;
            for (int j = 0; j < d + 1; ++j) {
                if (j == i - 1) {
                    inner[k++] = g.mul(args[i - 1], args[i]);
                    ++j; // skip args[i]
                } else {
                    inner[k++] = args[j];
                }
            }
            Phase t = c.at(inner);
            if (i % 2 == 1) v -= t; else v += t;
        }
        // trailing face: drop g_{d+1}
        for (int i = 0; i < d; ++i) inner[i] = args[i];
        Phase t = c.at(inner);
        if ((d + 1) % 2 == 1) v -= t; else v += t;
        if (!v.is_zero()) out.set(args, v);
    } while ([&] {
        for (int i = d; i >= 0; --i) {
            if (++args[i] < g.order) return true;
            args[i] = 0;
        }
        return false;
    }());
    return out;
}

bool is_cocycle(const Cochain& c) { return coboundary(c).is_zero(); }

Cochain cyclic_cocycle(int k, int p) {
    if (k < 1) throw std::invalid_argument("cyclic_cocycle: k must be >= 1");
    FiniteGroup g = make_cyclic(k);
    Cochain w(g, 3);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c) {
                long long carry = b + c - ((b + c) % k);
                Phase v((long long)p * a * carry, (long long)k * k);
                if (!v.is_zero()) w.set({a, b, c}, v);
            }
    return w;
}

Cochain restrict_cochain(const Cochain& c, const GroupHom& h) {
    if (h.target.order != c.group().order || h.target.mult != c.group().mult)
        throw std::invalid_argument("restrict_cochain: hom target does not match cochain group");
    int d = c.degree();
    Cochain out(h.source, d);
    std::vector<int> args(d, 0);
    std::vector<int> mapped(d);
    do {
        for (int i = 0; i < d; ++i) mapped[i] = h.images[args[i]];
        Phase v = c.at(mapped);
        if (!v.is_zero()) out.set(args, v);
    } while ([&] {
        for (int i = d - 1; i >= 0; --i) {
            if (++args[i] < h.source.order) return true;
            args[i] = 0;
        }
        return false;
    }());
    return out;
}

Transgression transgress(const Cochain& c, GroupElement x) {
    int d = c.degree();
    if (d < 2) throw std::invalid_argument("transgress: degree must be >= 2");
    const FiniteGroup& g = c.group();
    if (x < 0 || x >= g.order) throw std::invalid_argument("transgress: element out of range");
    Subgroup cx = centralizer(g, x);
    const FiniteGroup& h = cx.group;
    Cochain out(h, d - 1);
    std::vector<int> args(d - 1, 0);   // arguments in subgroup indices
    std::vector<int> interleaved(d);   // parent indices with x inserted
    do {
        Phase v;
        for (int i = 0; i <= d - 1; ++i) {
            // insert x after the first i arguments
            int k = 0;
            for (int j = 0; j < i; ++j) interleaved[k++] = cx.to_parent(args[j]);
            interleaved[k++] = x;
            for (int j = i; j < d - 1; ++j) interleaved[k++] = cx.to_parent(args[j]);
            Phase t = c.at(interleaved);
            if ((d - 1 - i) % 2 == 1) v -= t; else v += t;
        }
        if (!v.is_zero()) out.set(args, v);
    } while ([&] {
        for (int i = d - 2; i >= 0; --i) {
            if (++args[i] < h.order) return true;
            args[i] = 0;
        }
        return false;
    }());
    return Transgression{std::move(cx), std::move(out)};
}

Cochain add_cochains(const Cochain& a, const Cochain& b) {
    if (a.group().order != b.group().order || a.group().mult != b.group().mult ||
        a.degree() != b.degree())
        throw std::invalid_argument("add_cochains: mismatched group or degree");
    Cochain out = a;
    b.for_each_nonzero([&](const std::vector<int>& args, const Phase& p) {
        out.set(args, out.at(args) + p);
    });
    return out;
}

} // namespace dwred
