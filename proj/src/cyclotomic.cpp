#include "dwred/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace dwred {

namespace {

// Exact division of integer polynomials, lowest degree first. Used only for
// x^n - 1 divided by products of cyclotomic polynomials, where the division
// is known to be exact.
std::vector<long long> poly_div_exact(std::vector<long long> num,
                                      const std::vector<long long>& den) {
    int dn = (int)num.size() - 1, dd = (int)den.size() - 1;
    std::vector<long long> q(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
        long long c = num[i] / den[dd];
        q[i - dd] = c;
        if (c != 0)
            for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (long long c : num)
        if (c != 0) throw std::logic_error("cyclotomic polynomial division not exact");
    return q;
}

std::map<int, std::vector<long long>> g_phi_cache;
std::mutex g_phi_mutex;

} // namespace

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<long long>& cyclotomic_polynomial(int n) {
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto it = g_phi_cache.find(n);
    if (it != g_phi_cache.end()) return it->second;
    // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d, computed recursively without
    // re-locking (cache fills bottom-up).
    std::vector<int> pending = {n};
    while (!pending.empty()) {
        int m = pending.back();
        if (g_phi_cache.count(m)) { pending.pop_back(); continue; }
        bool ready = true;
        for (int d = 1; d < m; ++d)
            if (m % d == 0 && !g_phi_cache.count(d)) { pending.push_back(d); ready = false; }
        if (!ready) continue;
        pending.pop_back();
        std::vector<long long> num(m + 1, 0);
        num[0] = -1;
        num[m] = 1;
        for (int d = 1; d < m; ++d)
            if (m % d == 0) num = poly_div_exact(std::move(num), g_phi_cache[d]);
        g_phi_cache[m] = std::move(num);
    }
    return g_phi_cache[n];
}

namespace {

// Reduce a rational polynomial (lowest degree first) modulo Phi_n; returns a
// vector of length phi(n).
std::vector<Rational> reduce_mod_phi(std::vector<Rational> p, int n) {
    const std::vector<long long>& phi = cyclotomic_polynomial(n);
    int deg = (int)phi.size() - 1; // = euler_phi(n)
    for (int i = (int)p.size() - 1; i >= deg; --i) {
        if (p[i].is_zero()) continue;
        Rational c = p[i] / Rational(phi[deg]);
        for (int j = 0; j <= deg; ++j) p[i - deg + j] -= c * Rational(phi[j]);
    }
    p.resize(deg, Rational(0));
    return p;
}

} // namespace

CyclotomicSum CyclotomicSum::root_of_unity(const Phase& p) {
    int den = (int)p.value().den();
    int num = (int)p.value().num();
    CyclotomicSum out;
    out.conductor_ = den;
    std::vector<Rational> poly(num + 1, Rational(0));
    poly[num] = Rational(1);
    out.coeffs_ = reduce_mod_phi(std::move(poly), den);
    out.normalize();
    return out;
}

bool CyclotomicSum::is_zero() const {
    for (const Rational& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

std::optional<Rational> CyclotomicSum::rational_value() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return std::nullopt;
    return coeffs_[0];
}

CyclotomicSum CyclotomicSum::lifted(int m) const {
    if (m % conductor_ != 0)
        throw std::invalid_argument("CyclotomicSum::lifted: not a multiple of conductor");
    if (m == conductor_) return *this;
    int stride = m / conductor_;
    std::vector<Rational> poly((coeffs_.size() - 1) * stride + 1, Rational(0));
    for (size_t j = 0; j < coeffs_.size(); ++j) poly[j * stride] = coeffs_[j];
    CyclotomicSum out;
    out.conductor_ = m;
    out.coeffs_ = reduce_mod_phi(std::move(poly), m);
    return out;
}

void CyclotomicSum::normalize() {
    if (conductor_ != 1 && rational_value().has_value()) {
        Rational r = coeffs_[0];
        conductor_ = 1;
        coeffs_.assign(1, r);
    }
}

CyclotomicSum operator+(const CyclotomicSum& a, const CyclotomicSum& b) {
    int m = std::lcm(a.conductor_, b.conductor_);
    CyclotomicSum x = a.lifted(m), y = b.lifted(m);
    for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    x.normalize();
    return x;
}

CyclotomicSum operator-(const CyclotomicSum& a, const CyclotomicSum& b) {
    int m = std::lcm(a.conductor_, b.conductor_);
    CyclotomicSum x = a.lifted(m), y = b.lifted(m);
    for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
    x.normalize();
    return x;
}

CyclotomicSum CyclotomicSum::operator-() const {
    CyclotomicSum x = *this;
    for (Rational& c : x.coeffs_) c = -c;
    return x;
}

CyclotomicSum operator*(const CyclotomicSum& a, const CyclotomicSum& b) {
    int m = std::lcm(a.conductor_, b.conductor_);
    CyclotomicSum x = a.lifted(m), y = b.lifted(m);
    std::vector<Rational> poly(x.coeffs_.size() + y.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < x.coeffs_.size(); ++i) {
        if (x.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < y.coeffs_.size(); ++j)
            if (!y.coeffs_[j].is_zero()) poly[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
    CyclotomicSum out;
    out.conductor_ = m;
    out.coeffs_ = reduce_mod_phi(std::move(poly), m);
    out.normalize();
    return out;
}

CyclotomicSum CyclotomicSum::scaled(const Rational& r) const {
    CyclotomicSum x = *this;
    for (Rational& c : x.coeffs_) c *= r;
    return x;
}

bool operator==(const CyclotomicSum& a, const CyclotomicSum& b) {
    int m = std::lcm(a.conductor_, b.conductor_);
    CyclotomicSum x = a.lifted(m), y = b.lifted(m);
    return x.coeffs_ == y.coeffs_;
}

std::complex<double> CyclotomicSum::to_complex() const {
    std::complex<double> z = 0;
    const double tau = 6.283185307179586476925287;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        double ang = tau * double(j) / double(conductor_);
        z += coeffs_[j].to_double() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return z;
}

std::string CyclotomicSum::str() const {
    if (auto r = rational_value()) return r->str();
    std::string s;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += coeffs_[j].str();
        if (j > 0) s += "*z" + std::to_string(conductor_) + "^" + std::to_string(j);
    }
    if (s.empty()) s = "0";
    return s;
}

} // namespace dwred
