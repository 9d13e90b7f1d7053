#pragma once

#include <vector>

#include "ffdioph/laurent.hpp"

namespace ffdioph {

/// Continued fraction expansion x = [a_0; a_1, a_2, ...] with polynomial
/// partial quotients, deg a_i >= 1 for i >= 1.
struct CFExpansion {
    std::vector<Poly> quotients;
    bool exact_terminated = false;
};

/// Expands x to at most max_terms quotients.  Exact (finite-window) inputs
/// are rational functions and expand exactly to termination; ball inputs stop
/// with InsufficientPrecision once the fractional part is indistinguishable
/// from zero.
CFExpansion cf_expand(const Laurent& x, int max_terms);

/// Convergents (p_i, q_i) via p_i = a_i p_{i-1} + p_{i-2}, q_i likewise.
std::vector<std::pair<Poly, Poly>> convergents(const CFExpansion& cf);

/// A best-approximation certificate: |p + q.x| = err with Pi_+(q) recorded.
struct Witness {
    Poly p;
    std::vector<Poly> q;
    Norm err = Norm::zero();
    Norm pi_plus_q = Norm::one();
};

/// Exhaustive scan over all nonzero q with deg q_i <= degree_bound, p = -[q.x];
/// returns the minimizer of |p + q.x|, ties broken by smallest Pi_+(q) and
/// then by enumeration (degree-lexicographic) order.  Every candidate's error
/// must be certified at the input's precision, else InsufficientPrecision.
Witness best_witness(const VecK& x, int degree_bound);

/// The same scan for a point with rational-function coordinates num/den,
/// computed entirely in the fraction field so exact relations (error zero)
/// are certified rather than lost to truncation.
Witness best_witness_rational(const std::vector<std::pair<Poly, Poly>>& x, int degree_bound);

/// sum_{i>=0} X^{-c^i}, truncated at prec (a ball; the series continues).
Laurent make_liouville(const Field* f, int c, int prec);

/// Value of the purely periodic continued fraction [0; a_1..a_r, a_1..a_r, ...]
/// to precision prec, by fixed-point iteration in ball arithmetic (each sweep
/// provably shrinks the radius; deg a_i >= 1 required).
Laurent make_periodic(const std::vector<Poly>& quotients, int prec);

}  // namespace ffdioph
