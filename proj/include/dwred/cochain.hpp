#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "dwred/group.hpp"
#include "dwred/phase.hpp"

namespace dwred {

/// Normalized U(1)-valued group cochain: a total map G^d -> Phase that
/// vanishes whenever any argument is the identity. Stored as a dense table
/// for |G|^d up to 10^6 entries, as a sparse map above that.
class Cochain {
  public:
    Cochain(FiniteGroup group, int degree);

    const FiniteGroup& group() const { return group_; }
    int degree() const { return degree_; }

    Phase at(const std::vector<int>& args) const;
    void set(const std::vector<int>& args, const Phase& p);

    bool is_zero() const;
    /// Value is 0 whenever any argument is the identity.
    bool is_normalized() const;

    /// lcm of the denominators of all stored values (1 for the zero cochain).
    long long denominator_lcm() const;

    /// Iterates all argument tuples with nonzero value.
    void for_each_nonzero(
        const std::function<void(const std::vector<int>&, const Phase&)>& fn) const;

    bool dense() const { return use_dense_; }

  private:
    std::uint64_t key(const std::vector<int>& args) const;

    FiniteGroup group_;
    int degree_;
    bool use_dense_;
    std::vector<Phase> table_;                         // dense
    std::unordered_map<std::uint64_t, Phase> entries_; // sparse, nonzero only

    static constexpr std::uint64_t kDenseLimit = 1000000;
};

Cochain zero_cochain(const FiniteGroup& g, int degree);

/// Bar-resolution coboundary:
///   (dc)(g1,...,g_{d+1}) = c(g2,...,g_{d+1})
///                        + sum_{i=1..d} (-1)^i c(g1,...,g_i*g_{i+1},...,g_{d+1})
///                        + (-1)^{d+1} c(g1,...,g_d)
/// with phases added mod 1.
Cochain coboundary(const Cochain& c);

bool is_cocycle(const Cochain& c);

/// Standard degree-3 representative generating H^3(Z_k; U(1)):
///   w(a,b,c) = p * a * (b + c - ((b+c) mod k)) / k^2.
Cochain cyclic_cocycle(int k, int p);

/// Pullback along a homomorphism (covers both restriction to subgroups and
/// inflation along quotient maps). Requires h.target == c.group.
Cochain restrict_cochain(const Cochain& c, const GroupHom& h);

struct Transgression {
    Subgroup centralizer;
    Cochain cochain; // degree d-1 cochain on centralizer.group
};

/// Circle transgression of a degree-d cochain at x, landing on the
/// centralizer C(x):
///   (t_x c)(h1,...,h_{d-1}) =
///       sum_{i=0..d-1} (-1)^{d-1-i} c(h1,...,h_i, x, h_{i+1},...,h_{d-1}).
/// Cocycles transgress to cocycles. Rejects d < 2.
Transgression transgress(const Cochain& c, GroupElement x);

/// Pointwise sum of two cochains of the same group and degree.
Cochain add_cochains(const Cochain& a, const Cochain& b);

} // namespace dwred
