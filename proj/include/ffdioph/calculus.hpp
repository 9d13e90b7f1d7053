#pragma once

#include <array>
#include <vector>

#include "ffdioph/laurent.hpp"

namespace ffdioph {

/// Exponent vector of a monomial; up to kMaxVars variables.
struct Expo {
    static constexpr int kMaxVars = 16;
    std::array<uint8_t, kMaxVars> e{};

    int operator[](int i) const { return e[size_t(i)]; }
    bool is_zero() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }
    int total() const {
        int t = 0;
        for (auto x : e) t += x;
        return t;
    }
    friend bool operator<(const Expo& a, const Expo& b) { return a.e < b.e; }
    friend bool operator==(const Expo& a, const Expo& b) { return a.e == b.e; }
};

/// Multivariate polynomial in variables x_0..x_{d-1} with exact coefficients
/// in K (Laurent polynomials).  The computable class of maps used throughout:
/// evaluation at exact points stays exact.
class MPoly {
  public:
    MPoly(const Field* f, int d) : f_(f), d_(d) {}
    static MPoly zero(const Field* f, int d) { return MPoly(f, d); }
    static MPoly constant(const Field* f, int d, const Laurent& c);
    static MPoly variable(const Field* f, int d, int var);

    const Field* field() const { return f_; }
    int vars() const { return d_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<std::pair<Expo, Laurent>>& terms() const { return terms_; }
    int deg_in(int var) const;
    int total_deg() const;

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator-() const;
    MPoly operator*(const MPoly& o) const;
    MPoly scaled(const Laurent& c) const;
    MPoly pow(int e) const;

    /// Coefficient of the zero exponent (the value at the origin).
    Laurent constant_term() const;

    /// Full evaluation at an exact point.
    Laurent eval(const VecK& x) const;
    /// Substitute x_var := value (exact), eliminating the variable's presence.
    MPoly substituted(int var, const Laurent& value) const;
    /// Substitute x_var := x_var + c (Taylor shift, exact).
    MPoly shifted(int var, const Laurent& c) const;
    /// Substitute x_var := x_other (renaming / merging variables).
    MPoly renamed(int var, int other) const;
    /// Widen to d_new >= vars() variables (no term changes).
    MPoly widened(int d_new) const;

    /// Formal partial derivative.
    MPoly derivative(int var) const;

    /// The exact quotient (p - p[x_a := x_b]) / (x_a - x_b); x_b must not
    /// occur in p.  This is the first-order difference quotient in x_a with
    /// fresh second argument x_b, and is polynomial by construction.
    MPoly divided_difference(int var_a, int var_b) const;

    std::string str(const std::vector<std::string>& var_names = {}) const;

    void add_term(const Expo& e, const Laurent& c);  // accumulate; keeps canonical order

  private:
    const Field* f_;
    int d_;
    std::vector<std::pair<Expo, Laurent>> terms_;  // sorted by exponent, coeffs nonzero
};

/// A map K^d -> K^n with polynomial components.
struct PolyMap {
    int d = 0;
    int n = 0;
    std::vector<MPoly> components;

    const Field* field() const { return components.at(0).field(); }
};

/// Symbolic iterated difference quotient together with the bookkeeping of
/// which original variable each argument copy belongs to.
struct Quotient {
    MPoly p;
    std::vector<int> group;  // group[v] = original variable of argument v
};

/// n-th order difference quotient of a univariate polynomial (d = 1 MPoly),
/// symbolic: a polynomial in n+1 arguments, symmetric.
Quotient phi_n(const MPoly& f, int n);
/// Multivariate composed quotient Phi_beta = Phi_1^{i_1} o ... o Phi_d^{i_d}.
Quotient phi_beta(const MPoly& f, const std::vector<int>& beta);

/// Evaluate a quotient at given per-original-variable argument tuples
/// (tuple sizes must match the quotient's arity per group).
Laurent quotient_eval(const Quotient& q, const std::vector<VecK>& args_per_var);
/// Diagonal evaluation at a single point (all copies of variable j -> x[j]).
Laurent quotient_eval_diagonal(const Quotient& q, const VecK& x);

/// Numeric-path difference quotient via the inductive formula with ball
/// division at working precision `prec`; requires pairwise distinct points.
Laurent phi_n_numeric(const MPoly& f, const VecK& points, int prec);

/// D_j f(a): diagonal value of the symbolic j-th quotient.
Laurent d_j(const MPoly& f, int j, const Laurent& a);

/// Checks j! * D_j f = f^{(j)} at the point a, exactly (both sides vanish in
/// the forced characteristic-p cases).
bool factorial_identity_check(const MPoly& f, int j, const Laurent& a);

/// Least l <= l_max such that the difference quotients with 1 <= |beta| <= l
/// (or 0 <= |beta| when include_zero) span K^n at the diagonal point x0;
/// -1 when none does.
int nondeg_order(const PolyMap& f, const VecK& x0, int l_max, bool include_zero = false);

/// All multi-indices with 1 <= |beta| <= l (or from 0), ordered by |beta|
/// then lexicographically.
std::vector<std::vector<int>> multi_indices(int d, int l, bool include_zero = false);

}  // namespace ffdioph
