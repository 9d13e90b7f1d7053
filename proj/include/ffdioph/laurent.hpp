#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffdioph/fq.hpp"

namespace ffdioph {

/// A norm value in k^Z union {0}, encoded by its integer exponent.  All norms
/// in the library are exact powers of the field size k; comparisons are pure
/// integer comparisons and zero sorts below every finite value.
class Norm {
  public:
    Norm() : zero_(false), e_(0) {}  // k^0 = 1
    static Norm zero() { return Norm(true, 0); }
    static Norm one() { return Norm(false, 0); }
    static Norm kpow(int e) { return Norm(false, e); }

    bool is_zero() const { return zero_; }
    /// Exponent e with value k^e; only meaningful for nonzero norms.
    int exp() const { return e_; }

    friend bool operator==(const Norm& a, const Norm& b) {
        return a.zero_ == b.zero_ && (a.zero_ || a.e_ == b.e_);
    }
    friend bool operator!=(const Norm& a, const Norm& b) { return !(a == b); }
    friend bool operator<(const Norm& a, const Norm& b) {
        if (a.zero_) return !b.zero_;
        if (b.zero_) return false;
        return a.e_ < b.e_;
    }
    friend bool operator<=(const Norm& a, const Norm& b) { return a < b || a == b; }
    friend bool operator>(const Norm& a, const Norm& b) { return b < a; }
    friend bool operator>=(const Norm& a, const Norm& b) { return b <= a; }

    friend Norm operator*(const Norm& a, const Norm& b) {
        if (a.zero_ || b.zero_) return zero();
        return kpow(a.e_ + b.e_);
    }
    Norm pow(int n) const { return zero_ ? zero() : kpow(e_ * n); }
    friend Norm max(const Norm& a, const Norm& b) { return a < b ? b : a; }
    /// max(|.|, 1)
    Norm plus() const { return zero_ || e_ < 0 ? one() : *this; }

    std::string str() const { return zero_ ? "0" : "k^" + std::to_string(e_); }

  private:
    Norm(bool z, int e) : zero_(z), e_(e) {}
    bool zero_;
    int e_;
};

/// An element of K = F_q((1/X)) known exactly on a finite coefficient window,
/// with an exact ultrametric error radius.
///
/// Stored data: coefficients of X^{-i} for i = start .. prec (ascending i),
/// with the leading stored coefficient nonzero whenever any is stored.  The
/// tail beyond X^{-prec} is identically zero when `exact`, and otherwise only
/// bounded: |tail| <= k^{-(prec+1)}, which is the ball's radius.
///
/// Radius propagation: add/sub take max of radii; mul uses
/// max(|a| r_b, |b| r_a, r_a r_b); inverting a with |a| = k^e and radius
/// r < k^e yields radius r k^{-2e}.  All of these are computed as exact
/// integer exponent arithmetic, never floats.
class Laurent {
  public:
    /// The exact zero element.
    static Laurent zero(const Field* f);
    static Laurent one(const Field* f) { return monomial(f, 1, 0); }
    /// c * X^{-idx} for a field label c (exact).
    static Laurent monomial(const Field* f, flabel c, int idx);
    /// Exact value with coefficient window starting at X^{-start}.
    static Laurent exact_window(const Field* f, int start, std::vector<flabel> coeffs);
    /// Ball value: known coefficients start..prec, tail O(X^{-(prec+1)}).
    static Laurent ball(const Field* f, int start, std::vector<flabel> coeffs, int prec);
    /// The unknown ball 0 + O(X^{-(prec+1)}) of radius k^{-(prec+1)}.
    static Laurent unknown(const Field* f, int prec);
    /// Embeds a polynomial in X.
    static Laurent from_poly(const Poly& p);

    const Field* field() const { return f_; }
    bool exact() const { return exact_; }
    int prec() const { return prec_; }
    bool is_exactly_zero() const { return exact_ && c_.empty(); }
    /// True when no stored coefficient is nonzero and the value is not exact,
    /// i.e. the ball contains 0 and the valuation is undetermined.
    bool indeterminate() const { return !exact_ && c_.empty(); }

    /// v(a); throws InsufficientPrecision when indeterminate.  Exactly zero
    /// values have no finite valuation; test is_exactly_zero() first (norm()
    /// reports them as the zero norm).
    int valuation() const;
    /// |a| = k^{-v(a)}, exact; zero norm for exact zero.
    Norm norm() const;
    /// Upper bound on |a| that is always available (radius when indeterminate).
    Norm norm_upper() const;
    /// Ball radius: zero norm when exact, else k^{-(prec+1)}.
    Norm radius() const;

    flabel coeff(int idx) const;  // coefficient of X^{-idx}; 0 outside the window
    int window_start() const { return start_; }
    /// Last stored coefficient index (start-1 when no coefficients stored).
    int window_end() const { return start_ + int(c_.size()) - 1; }

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator-() const;
    Laurent operator*(const Laurent& o) const;
    Laurent scaled(flabel c) const;
    /// Multiplication by X^j (index shift; exactness preserved).
    Laurent xshift(int j) const;
    /// Multiplicative inverse.  For exact non-monomial input the expansion is
    /// infinite, so the result is truncated at `target_prec`; for ball input
    /// the precision follows the radius rule and `target_prec` only tightens.
    Laurent inv(int target_prec) const;

    /// Truncate the known window to `prec` (result is a coarser ball unless
    /// the value was exact and already fit).
    Laurent truncated(int prec) const;
    /// Reinterpret as a ball with tail O(X^{-(prec+1)}) regardless of
    /// exactness (the window is zero-extended or cut to fit).
    Laurent as_ball(int prec) const;

    /// Polynomial part [a]: requires the window to cover all indices <= 0.
    Poly polynomial_part() const;
    /// a - [a]; norm <= k^{-1}.
    Laurent fractional_part() const;

    /// Exact equality of representations (field, window, exactness).
    bool operator==(const Laurent& o) const;
    bool operator!=(const Laurent& o) const { return !(*this == o); }
    /// True when the two balls certify the same value: both exact and equal.
    bool same_exact_value(const Laurent& o) const { return exact_ && o.exact_ && *this == o; }

    std::string str() const;

  private:
    Laurent(const Field* f) : f_(f) {}
    void normalize();

    const Field* f_ = nullptr;
    int start_ = 0;   // index of first stored coefficient
    int prec_ = -1;   // window covers start_..prec_; tail O(X^{-(prec_+1)}) unless exact
    bool exact_ = false;
    std::vector<flabel> c_;
};

using VecK = std::vector<Laurent>;

/// max_i |x_i|
Norm vec_norm_max(const VecK& x);
/// max_i |x_i|_+
Norm vec_norm_plus(const VecK& x);
/// Pi_+(x) = prod_i max(|x_i|, 1)
Norm vec_norm_pi_plus(const VecK& x);

}  // namespace ffdioph
