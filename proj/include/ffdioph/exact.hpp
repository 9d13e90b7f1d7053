#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "ffdioph/errors.hpp"
#include "ffdioph/laurent.hpp"

namespace ffdioph {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational with arbitrary-precision integer parts.  Used for the
/// scalars the theory leaves rational (epsilon, gamma, C, alpha); never a
/// float anywhere.
struct Rat {
    BigInt num = 0;
    BigInt den = 1;

    Rat() = default;
    Rat(long long n) : num(n) {}
    Rat(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    void normalize() {
        if (den == 0) throw DivideByZero("rational with zero denominator");
        if (den < 0) {
            den = -den;
            num = -num;
        }
        BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
    friend Rat operator/(const Rat& a, const Rat& b) { return Rat(a.num * b.den, a.den * b.num); }
    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.num * b.den <= b.num * a.den; }

    bool is_integer() const { return den == 1; }
    /// floor(num/den) for exact integer-part computations.
    BigInt floor() const {
        BigInt q = num / den;
        if (num < 0 && q * den != num) --q;
        return q;
    }
    BigInt ceil() const {
        BigInt q = num / den;
        if (num > 0 && q * den != num) ++q;
        return q;
    }
    Rat pow(unsigned e) const {
        Rat r(1);
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }
    std::string str() const {
        return den == 1 ? num.str() : num.str() + "/" + den.str();
    }

    /// Parses "a" or "a/b".
    static Rat parse(const std::string& s);
};

BigInt bigpow(BigInt base, unsigned e);

/// An exact Haar measure value count * k^{-res_exp}.  Canonical form keeps
/// count free of factors of k (counts and exponents are the only things ever
/// serialized, so every reported measure is integer-encoded).
struct Measure {
    BigInt count = 0;
    int res_exp = 0;
    uint32_t k = 0;

    static Measure zero(uint32_t k) { return Measure{0, 0, k}; }
    static Measure make(BigInt c, int e, uint32_t k) {
        Measure m{std::move(c), e, k};
        m.canonicalize();
        return m;
    }

    void canonicalize() {
        if (count == 0) {
            res_exp = 0;
            return;
        }
        while (count % k == 0) {
            count /= k;
            --res_exp;
        }
    }
    bool is_zero() const { return count == 0; }

    friend Measure operator+(const Measure& a, const Measure& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const int e = std::max(a.res_exp, b.res_exp);
        BigInt c = a.count * bigpow(a.k, unsigned(e - a.res_exp)) + b.count * bigpow(b.k, unsigned(e - b.res_exp));
        return make(std::move(c), e, a.k);
    }
    friend bool operator==(const Measure& a, const Measure& b) {
        return a.count == b.count && (a.is_zero() || a.res_exp == b.res_exp);
    }
    friend bool operator!=(const Measure& a, const Measure& b) { return !(a == b); }
    friend bool operator<(const Measure& a, const Measure& b) { return a.as_rat() < b.as_rat(); }
    friend bool operator<=(const Measure& a, const Measure& b) { return a.as_rat() <= b.as_rat(); }

    Rat as_rat() const {
        if (count == 0) return Rat(0);
        if (res_exp >= 0) return Rat(count, bigpow(k, unsigned(res_exp)));
        return Rat(count * bigpow(k, unsigned(-res_exp)), 1);
    }
    Rat pow_rat(unsigned e) const { return as_rat().pow(e); }

    std::string str() const { return count.str() + "*k^" + std::to_string(-res_exp); }
};

/// Exact value of a norm k^e (or 0) as a rational.
inline Rat norm_rat(const Norm& n, uint32_t k) {
    if (n.is_zero()) return Rat(0);
    if (n.exp() >= 0) return Rat(bigpow(k, unsigned(n.exp())), 1);
    return Rat(1, bigpow(k, unsigned(-n.exp())));
}

}  // namespace ffdioph
