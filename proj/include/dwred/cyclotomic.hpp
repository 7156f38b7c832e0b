#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "dwred/phase.hpp"
#include "dwred/rational.hpp"

namespace dwred {

/// Exact element of a cyclotomic field: a rational linear combination of
/// powers of zeta_n = exp(2*pi*i/n), stored in normal form as a coefficient
/// vector of length phi(n) (the power basis 1, zeta, ..., zeta^{phi(n)-1})
/// obtained by reduction modulo the n-th cyclotomic polynomial. At a fixed
/// conductor the normal form is unique, so equality of values is equality of
/// coefficient vectors; values at different conductors are compared after
/// lifting both into the compositum. Rational values are detected exactly
/// and renormalized to conductor 1.
class CyclotomicSum {
  public:
    CyclotomicSum() : conductor_(1), coeffs_(1, Rational(0)) {}
    explicit CyclotomicSum(const Rational& r) : conductor_(1), coeffs_(1, r) {}
    CyclotomicSum(long long n) : conductor_(1), coeffs_(1, Rational(n)) {}

    static CyclotomicSum zero() { return CyclotomicSum(); }
    static CyclotomicSum one() { return CyclotomicSum(Rational(1)); }
    /// zeta_{den}^{num} for the phase exp(2*pi*i*num/den).
    static CyclotomicSum root_of_unity(const Phase& p);

    int conductor() const { return conductor_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    /// Exact rational view: engaged iff the value lies in Q.
    std::optional<Rational> rational_value() const;

    friend CyclotomicSum operator+(const CyclotomicSum& a, const CyclotomicSum& b);
    friend CyclotomicSum operator-(const CyclotomicSum& a, const CyclotomicSum& b);
    friend CyclotomicSum operator*(const CyclotomicSum& a, const CyclotomicSum& b);
    CyclotomicSum operator-() const;
    CyclotomicSum& operator+=(const CyclotomicSum& o) { return *this = *this + o; }
    CyclotomicSum& operator-=(const CyclotomicSum& o) { return *this = *this - o; }
    CyclotomicSum& operator*=(const CyclotomicSum& o) { return *this = *this * o; }

    CyclotomicSum scaled(const Rational& r) const;

    friend bool operator==(const CyclotomicSum& a, const CyclotomicSum& b);
    friend bool operator!=(const CyclotomicSum& a, const CyclotomicSum& b) {
        return !(a == b);
    }

    /// Float rendering for display only; never used in comparisons.
    std::complex<double> to_complex() const;
    std::string str() const;

    /// Lift into Q(zeta_m); m must be a multiple of the conductor.
    CyclotomicSum lifted(int m) const;

  private:
    void normalize();

    int conductor_;
    std::vector<Rational> coeffs_; // length phi(conductor_)
};

/// Integer coefficients of the n-th cyclotomic polynomial (degree phi(n)),
/// lowest degree first.
const std::vector<long long>& cyclotomic_polynomial(int n);

int euler_phi(int n);

} // namespace dwred
