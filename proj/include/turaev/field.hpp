#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "turaev/error.hpp"

namespace turaev {

/// Exact arbitrary-precision rational. Always kept canonicalized.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw ArithmeticError("division by zero: rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Canonical "a" or "a/b" form, b > 0, gcd(a,b)=1.
inline std::string rat_str(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    return c.get_str();
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Field of exact rationals. Elements are Rat values.
class RatField {
  public:
    using Elem = Rat;

    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem from_int(long n) const { return Rat(n); }

    Elem from_rat(const Rat& r) const { return r; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem div(const Elem& a, const Elem& b) const {
        if (b == 0) throw ArithmeticError("division by zero");
        return a / b;
    }
    Elem inv(const Elem& a) const { return div(one(), a); }

    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const { return a == 0; }

    std::string str(const Elem& a) const { return rat_str(a); }
    std::string name() const { return "rational"; }

    /// Number of elements; 0 means infinite.
    std::uint64_t size() const { return 0; }
};

/// Prime field F_p with a runtime modulus. Elements are residues in [0, p).
class PrimeField {
  public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (!is_prime_u64(p)) throw DataError("modulus not prime: " + std::to_string(p));
    }

    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return p_ == 1 ? 0 : 1; }
    Elem from_int(long n) const {
        long long m = static_cast<long long>(n) % static_cast<long long>(p_);
        if (m < 0) m += static_cast<long long>(p_);
        return static_cast<Elem>(m);
    }

    /// Reduce a rational mod p; the denominator must be invertible.
    Elem from_rat(const Rat& r) const {
        Rat c = r;
        c.canonicalize();
        mpz_class num = c.get_num(), den = c.get_den();
        mpz_class pz(static_cast<unsigned long>(p_));
        mpz_class nm = num % pz;
        if (nm < 0) nm += pz;
        mpz_class dm = den % pz;
        if (dm == 0)
            throw ArithmeticError("rational " + rat_str(r) + " has denominator divisible by " +
                                  std::to_string(p_));
        return div(static_cast<Elem>(nm.get_ui()), static_cast<Elem>(dm.get_ui()));
    }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw ArithmeticError("division by zero");
        // extended Euclid
        long long t = 0, newt = 1;
        long long r = static_cast<long long>(p_), newr = static_cast<long long>(a);
        while (newr != 0) {
            long long q = r / newr;
            long long tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += static_cast<long long>(p_);
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool eq(Elem a, Elem b) const { return a == b; }
    bool is_zero(Elem a) const { return a == 0; }

    std::string str(Elem a) const { return std::to_string(a); }
    std::string name() const { return "prime " + std::to_string(p_); }

    std::uint64_t size() const { return p_; }

  private:
    std::uint64_t p_;
};

} // namespace turaev
