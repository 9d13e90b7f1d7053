#pragma once

#include <functional>
#include <map>

#include "ffdioph/calculus.hpp"
#include "ffdioph/exact.hpp"

namespace ffdioph {

/// A product ball in K^d: coordinate c ranges over |x_c - center_c| <= k^{-j_c}.
/// Haar measure k^{-sum j_c} under the normalization lambda(unit ball) = 1.
struct BallSpec {
    VecK center;                // exact points
    std::vector<int> radius_exp;  // j_c per coordinate

    int d() const { return int(center.size()); }
    const Field* field() const { return center.at(0).field(); }
    static BallSpec unit(const Field* f, int d);
};

Measure ball_measure(const BallSpec& b);

/// Canonical coset representatives center + sum_{i=j_c..N} a_i X^{-i} per
/// coordinate; each represents a sub-ball of measure k^{-(N+1)} per coordinate.
void for_each_grid_point(const BallSpec& b, int N, const std::function<void(const VecK&)>& fn);
uint64_t grid_count(const BallSpec& b, int N);

/// Histogram of the cell-constant values of F(x) = max_i |g_i(x)| over the
/// ball, computed by adaptive refinement with certified ball arithmetic.
/// Cells where F is provably <= k^{floor_exp} stop refining and accumulate in
/// `below_floor`; every other cell refines until |F| is constant on it.
/// Refinement past coefficient index `max_depth` throws InsufficientPrecision.
struct ValueHistogram {
    std::map<int, Measure> buckets;  // exponent e -> measure of {F = k^e}
    Measure zero_mass;               // cells where F is identically 0
    Measure below_floor;             // cells with F <= k^{floor_exp}
    int floor_exp = 0;
};

ValueHistogram value_histogram(const std::vector<MPoly>& polys, const BallSpec& b, int floor_exp,
                               int max_depth);

/// Exact sup of max_i |g_i| over the closed ball (attained).
Norm sup_on_ball(const std::vector<MPoly>& polys, const BallSpec& b, int max_depth);
inline Norm sup_on_ball(const MPoly& f, const BallSpec& b, int max_depth) {
    return sup_on_ball(std::vector<MPoly>{f}, b, max_depth);
}

/// Exact measure of {x in B : |f(x)| < eps * sup_B |f|}.
Measure sublevel_measure(const MPoly& f, const BallSpec& b, const Norm& eps, int max_depth);

struct GoodEntry {
    Norm eps;
    Measure sublevel;
    Rat bound_pow;  // (C eps^alpha lambda(B))^pow, exact
    bool pass;      // sublevel <= C eps^alpha lambda(B), compared exactly
};

struct GoodReport {
    Norm sup;
    std::vector<GoodEntry> entries;
    bool overall = true;
    unsigned pow = 1;  // both sides of every comparison were raised to this power
    Rat c_emp_pow;     // C_emp^pow for the minimal C passing all entries
};

/// Exact (C, alpha)-good verification of F = max_i |g_i| at the given
/// epsilon grid (alpha = a_num/a_den rational; comparisons raised to a_den).
GoodReport check_good(const std::vector<MPoly>& polys, const BallSpec& b, const Rat& C,
                      const Rat& alpha, const std::vector<Norm>& eps_list, int max_depth);
inline GoodReport check_good(const MPoly& f, const BallSpec& b, const Rat& C, const Rat& alpha,
                             const std::vector<Norm>& eps_list, int max_depth) {
    return check_good(std::vector<MPoly>{f}, b, C, alpha, eps_list, max_depth);
}

}  // namespace ffdioph
