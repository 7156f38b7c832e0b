#pragma once

#include "dwred/rational.hpp"

namespace dwred {

/// Point on the unit circle, stored as a reduced rational q with 0 <= q < 1
/// and meaning exp(2*pi*i*q). Addition and negation wrap mod 1, so Phase is
/// the group U(1) restricted to rational angles -- which is all a finite
/// group's cocycles ever need.
class Phase {
  public:
    Phase() = default;
    explicit Phase(const Rational& q) : q_(wrap(q)) {}
    Phase(long long num, long long den) : q_(wrap(Rational(num, den))) {}

    const Rational& value() const { return q_; }
    bool is_zero() const { return q_.is_zero(); }

    friend Phase operator+(const Phase& a, const Phase& b) { return Phase(a.q_ + b.q_); }
    friend Phase operator-(const Phase& a, const Phase& b) { return Phase(a.q_ - b.q_); }
    Phase operator-() const { return Phase(-q_); }

    /// Integer multiple (n-fold sum), n may be negative.
    Phase times(long long n) const { return Phase(q_ * Rational(n)); }

    Phase& operator+=(const Phase& o) { return *this = *this + o; }
    Phase& operator-=(const Phase& o) { return *this = *this - o; }

    friend bool operator==(const Phase& a, const Phase& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Phase& a, const Phase& b) { return a.q_ != b.q_; }

    std::string str() const { return q_.str(); }

  private:
    static Rational wrap(Rational q) {
        // reduce into [0,1)
        long long n = q.num(), d = q.den();
        long long r = n % d;
        if (r < 0) r += d;
        return Rational(r, d);
    }

    Rational q_; // reduced, 0 <= q_ < 1
};

} // namespace dwred
