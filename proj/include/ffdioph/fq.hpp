#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "ffdioph/errors.hpp"

namespace ffdioph {

using flabel = uint16_t;  // element of F_q encoded as sum c_i p^i in the power basis of g

/// A finite field F_q, q = p^nu.  Elements are labels in [0, q); label 0 and 1
/// are the additive and multiplicative identities.  For nu > 1 the label's
/// base-p digits are the coordinates in the power basis of the generator g,
/// reduced by the supplied monic irreducible modulus.
///
/// Field objects are immutable after construction and must outlive every
/// value (Poly, Laurent, ...) created over them.
class Field {
  public:
    /// Validates p prime, nu >= 1, and (for nu > 1) the modulus monic
    /// irreducible of degree nu over F_p.  For nu == 1 no modulus is accepted.
    static std::shared_ptr<const Field> make(uint32_t p, uint32_t nu = 1,
                                             const std::vector<flabel>& modulus = {});

    uint32_t p() const { return p_; }
    uint32_t nu() const { return nu_; }
    uint32_t q() const { return q_; }
    const std::vector<flabel>& modulus() const { return modulus_; }

    flabel add(flabel a, flabel b) const { return tables_ ? add_[idx(a, b)] : add_slow(a, b); }
    flabel sub(flabel a, flabel b) const { return add(a, neg(b)); }
    flabel neg(flabel a) const { return tables_ ? neg_[a] : neg_slow(a); }
    flabel mul(flabel a, flabel b) const { return tables_ ? mul_[idx(a, b)] : mul_slow(a, b); }
    flabel inv(flabel a) const;
    flabel div(flabel a, flabel b) const { return mul(a, inv(b)); }
    flabel pow(flabel a, uint64_t e) const;

    /// a + n*1 for an integer n (used when scaling by integer multiplicities).
    flabel from_int(long long n) const;

    /// Base-p digits of a label, ascending powers of g, length nu.
    std::vector<flabel> digits(flabel a) const;
    flabel from_digits(const std::vector<flabel>& d) const;

    /// Textual form: decimal digit for prime fields, polynomial in g otherwise.
    std::string elem_str(flabel a) const;

    bool same(const Field& o) const { return this == &o; }

  private:
    Field() = default;
    size_t idx(flabel a, flabel b) const { return size_t(a) * q_ + b; }
    flabel add_slow(flabel a, flabel b) const;
    flabel neg_slow(flabel a) const;
    flabel mul_slow(flabel a, flabel b) const;

    uint32_t p_ = 0, nu_ = 0, q_ = 0;
    std::vector<flabel> modulus_;  // ascending coeffs over F_p, length nu+1, monic
    bool tables_ = false;
    std::vector<flabel> add_, mul_, neg_, inv_;
};

using FieldPtr = std::shared_ptr<const Field>;

inline void check_same_field(const Field* a, const Field* b) {
    if (a != b) throw FieldMismatch("values belong to different fields");
}

/// Univariate polynomial over F_q (the ring Z = F_q[X]).  Coefficients are
/// stored ascending; the zero polynomial has an empty coefficient list and a
/// distinct degree sentinel (never -1).
class Poly {
  public:
    static constexpr int kZeroDeg = std::numeric_limits<int>::min() / 4;

    /// Empty (zero over no field); only valid as a placeholder before assignment.
    Poly() : f_(nullptr) {}
    explicit Poly(const Field* f) : f_(f) {}
    Poly(const Field* f, std::vector<flabel> coeffs) : f_(f), c_(std::move(coeffs)) { trim(); }

    static Poly zero(const Field* f) { return Poly(f); }
    static Poly one(const Field* f) { return constant(f, 1); }
    static Poly constant(const Field* f, flabel c);
    static Poly monomial(const Field* f, flabel c, int deg);

    const Field* field() const { return f_; }
    bool is_zero() const { return c_.empty(); }
    int deg() const { return c_.empty() ? kZeroDeg : int(c_.size()) - 1; }
    flabel lc() const { return c_.empty() ? flabel(0) : c_.back(); }
    flabel coeff(int i) const { return (i < 0 || i >= int(c_.size())) ? flabel(0) : c_[i]; }
    const std::vector<flabel>& coeffs() const { return c_; }
    bool is_unit() const { return deg() == 0; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(flabel c) const;
    Poly shifted(int by) const;  // multiply by X^by, by >= 0
    bool operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Quotient and remainder with deg r < deg b.  Throws DivideByZero on b = 0.
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
    /// Monic gcd; gcd(0, 0) = 0.
    friend Poly gcd(Poly a, Poly b);

    Poly monic() const;
    flabel eval(flabel x) const;
    Poly derivative() const;

    std::string str() const;

    /// Deterministic total order used for tie-breaking in scans:
    /// by degree, then lexicographically on coefficients from the top.
    friend bool poly_less(const Poly& a, const Poly& b);

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    const Field* f_;
    std::vector<flabel> c_;
};

/// Enumerates all polynomials of degree <= max_deg (including zero) in a
/// deterministic order: by the base-q integer whose digits are the coefficients.
std::vector<Poly> all_polys_up_to_deg(const Field* f, int max_deg);

bool is_prime_u32(uint32_t n);

}  // namespace ffdioph
