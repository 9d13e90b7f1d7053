#include "ffdioph/goodfn.hpp"

#include <algorithm>

namespace ffdioph {

BallSpec BallSpec::unit(const Field* f, int d) {
    BallSpec b;
    b.center.assign(size_t(d), Laurent::zero(f));
    b.radius_exp.assign(size_t(d), 0);
    return b;
}

Measure ball_measure(const BallSpec& b) {
    int e = 0;
    for (int j : b.radius_exp) e += j;
    return Measure::make(1, e, b.field()->q());
}

void for_each_grid_point(const BallSpec& b, int N, const std::function<void(const VecK&)>& fn) {
    const Field* f = b.field();
    const int d = b.d();
    for (int c = 0; c < d; ++c)
        if (N < b.radius_exp[size_t(c)] - 1) throw DimensionMismatch("grid resolution below ball radius");
    // odometer over the coefficient boxes of all coordinates
    std::vector<std::vector<int>> idx_range(static_cast<size_t>(d));
    std::vector<std::vector<flabel>> digits(static_cast<size_t>(d));
    for (int c = 0; c < d; ++c) {
        for (int i = b.radius_exp[size_t(c)]; i <= N; ++i) idx_range[size_t(c)].push_back(i);
        digits[size_t(c)].assign(idx_range[size_t(c)].size(), 0);
    }
    for (;;) {
        VecK pt;
        pt.reserve(size_t(d));
        for (int c = 0; c < d; ++c) {
            Laurent x = b.center[size_t(c)];
            for (size_t s = 0; s < digits[size_t(c)].size(); ++s)
                if (digits[size_t(c)][s] != 0)
                    x = x + Laurent::monomial(f, digits[size_t(c)][s], idx_range[size_t(c)][s]);
            pt.push_back(std::move(x));
        }
        fn(pt);
        // advance
        int c = 0;
        size_t s = 0;
        for (;;) {
            if (c == d) return;
            if (s == digits[size_t(c)].size()) {
                ++c;
                s = 0;
                continue;
            }
            if (digits[size_t(c)][s] + 1u < f->q()) {
                ++digits[size_t(c)][s];
                break;
            }
            digits[size_t(c)][s] = 0;
            ++s;
        }
    }
}

uint64_t grid_count(const BallSpec& b, int N) {
    uint64_t n = 1;
    for (int c = 0; c < b.d(); ++c)
        for (int i = b.radius_exp[size_t(c)]; i <= N; ++i) n *= b.field()->q();
    return n;
}

namespace {

/// Upper bound on the variation |g(center+u) - g(center)| over the cell with
/// per-coordinate radius exponents r_c: max over nonconstant monomials of
/// |coef| * prod k^{-r_c e_c}.  Zero norm when g is constant.
Norm variation_bound(const MPoly& g, const std::vector<int>& r) {
    Norm v = Norm::zero();
    for (const auto& [e, c] : g.terms()) {
        if (e.is_zero()) continue;
        int drop = 0;
        for (size_t cidx = 0; cidx < r.size(); ++cidx) drop += r[cidx] * e[int(cidx)];
        v = max(v, Norm::kpow(c.norm().exp() - drop));
    }
    return v;
}

struct HistAccum {
    std::map<int, Measure>* buckets;
    Measure* zero_mass;
    Measure* below_floor;
    uint32_t k;

    void bucket(const Norm& val, int cell_exp) {
        Measure m = Measure::make(1, cell_exp, k);
        if (val.is_zero())
            *zero_mass = *zero_mass + m;
        else {
            auto it = buckets->find(val.exp());
            if (it == buckets->end())
                buckets->emplace(val.exp(), m);
            else
                it->second = it->second + m;
        }
    }
    void floor_mass(int cell_exp) { *below_floor = *below_floor + Measure::make(1, cell_exp, k); }
};

void hist_rec(const std::vector<MPoly>& polys, const Field* f, std::vector<int>& r, int floor_exp,
              int max_depth, HistAccum& acc) {
    Norm resolved_max = Norm::zero();
    Norm unresolved_up = Norm::zero();
    bool any_unresolved = false;
    for (const auto& g : polys) {
        const Laurent c0 = g.constant_term();
        const Norm v0 = c0.is_exactly_zero() ? Norm::zero() : c0.norm();
        const Norm V = variation_bound(g, r);
        if (V.is_zero() || V < v0) {
            resolved_max = max(resolved_max, v0);
        } else {
            any_unresolved = true;
            unresolved_up = max(unresolved_up, V);
        }
    }
    int cell_exp = 0;
    for (int rc : r) cell_exp += rc;

    if (!any_unresolved) {
        acc.bucket(resolved_max, cell_exp);
        return;
    }
    if (unresolved_up <= resolved_max) {
        acc.bucket(resolved_max, cell_exp);
        return;
    }
    if (max(resolved_max, unresolved_up) <= Norm::kpow(floor_exp)) {
        acc.floor_mass(cell_exp);
        return;
    }
    // refine: split every coordinate once
    for (int c = 0; c < int(r.size()); ++c)
        if (r[size_t(c)] >= max_depth)
            throw InsufficientPrecision("cell refinement exceeded resolution cap " +
                                        std::to_string(max_depth));
    const int d = int(r.size());
    std::vector<flabel> a(size_t(d), 0);
    for (;;) {
        std::vector<MPoly> shifted;
        shifted.reserve(polys.size());
        for (const auto& g : polys) {
            MPoly h = g;
            for (int c = 0; c < d; ++c)
                if (a[size_t(c)] != 0) h = h.shifted(c, Laurent::monomial(f, a[size_t(c)], r[size_t(c)]));
            shifted.push_back(std::move(h));
        }
        for (int c = 0; c < d; ++c) ++r[size_t(c)];
        hist_rec(shifted, f, r, floor_exp, max_depth, acc);
        for (int c = 0; c < d; ++c) --r[size_t(c)];
        // next child offset
        int c = 0;
        while (c < d && a[size_t(c)] + 1u == f->q()) { a[size_t(c)] = 0; ++c; }
        if (c == d) break;
        ++a[size_t(c)];
    }
}

std::vector<MPoly> recentered(const std::vector<MPoly>& polys, const BallSpec& b) {
    std::vector<MPoly> out;
    out.reserve(polys.size());
    for (const auto& g : polys) {
        MPoly h = g.widened(b.d());
        for (int c = 0; c < b.d(); ++c) {
            if (!b.center[size_t(c)].exact()) throw Error("ball center must be exact");
            if (!b.center[size_t(c)].is_exactly_zero()) h = h.shifted(c, b.center[size_t(c)]);
        }
        out.push_back(std::move(h));
    }
    return out;
}

}  // namespace

ValueHistogram value_histogram(const std::vector<MPoly>& polys, const BallSpec& b, int floor_exp,
                               int max_depth) {
    const Field* f = b.field();
    ValueHistogram h;
    h.floor_exp = floor_exp;
    h.zero_mass = Measure::zero(f->q());
    h.below_floor = Measure::zero(f->q());
    HistAccum acc{&h.buckets, &h.zero_mass, &h.below_floor, f->q()};
    auto local = recentered(polys, b);
    std::vector<int> r = b.radius_exp;
    hist_rec(local, f, r, floor_exp, max_depth, acc);
    return h;
}

Norm sup_on_ball(const std::vector<MPoly>& polys, const BallSpec& b, int max_depth) {
    bool all_zero = true;
    int coef_hint = -64;
    for (const auto& g : polys)
        for (const auto& [e, c] : g.terms()) {
            all_zero = false;
            coef_hint = std::max(coef_hint, c.norm().exp());
        }
    if (all_zero) return Norm::zero();
    int floor_exp = coef_hint;  // start high; lower until the max certifies
    for (;;) {
        ValueHistogram h = value_histogram(polys, b, floor_exp, max_depth);
        if (!h.buckets.empty()) {
            const int top = h.buckets.rbegin()->first;
            if (h.below_floor.is_zero() || top >= floor_exp) return Norm::kpow(top);
        } else if (h.below_floor.is_zero()) {
            return Norm::zero();  // only zero_mass: F vanishes identically on B
        }
        floor_exp -= 8;
    }
}

Measure sublevel_measure(const MPoly& f, const BallSpec& b, const Norm& eps, int max_depth) {
    const uint32_t k = b.field()->q();
    if (eps.is_zero()) return Measure::zero(k);
    const Norm sup = sup_on_ball(f, b, max_depth);
    if (sup.is_zero()) return Measure::zero(k);  // {|f| < eps*0} is empty
    // {|f| < eps*sup} = {|f| <= k^{theta-1}} with theta the threshold exponent
    const int theta = eps.exp() + sup.exp();
    ValueHistogram h = value_histogram({f}, b, theta - 1, max_depth);
    Measure m = h.zero_mass + h.below_floor;
    for (const auto& [e, mass] : h.buckets)
        if (e < theta) m = m + mass;
    return m;
}

GoodReport check_good(const std::vector<MPoly>& polys, const BallSpec& b, const Rat& C,
                      const Rat& alpha, const std::vector<Norm>& eps_list, int max_depth) {
    const uint32_t k = b.field()->q();
    GoodReport rep;
    if (alpha.num <= 0) throw Error("alpha must be positive");
    rep.pow = unsigned(alpha.den);
    const unsigned an = unsigned(alpha.num);
    rep.sup = sup_on_ball(polys, b, max_depth);
    const Rat lam = ball_measure(b).as_rat();
    rep.c_emp_pow = Rat(0);

    ValueHistogram h;
    if (!rep.sup.is_zero()) {
        int min_theta = 0;
        bool first = true;
        for (const auto& e : eps_list) {
            const int t = e.exp() + rep.sup.exp();
            min_theta = first ? t : std::min(min_theta, t);
            first = false;
        }
        h = value_histogram(polys, b, min_theta - 1, max_depth);
    }

    for (const auto& eps : eps_list) {
        GoodEntry entry;
        entry.eps = eps;
        if (rep.sup.is_zero()) {
            entry.sublevel = Measure::zero(k);
        } else {
            const int theta = eps.exp() + rep.sup.exp();
            Measure m = h.zero_mass + h.below_floor;
            for (const auto& [e, mass] : h.buckets)
                if (e < theta) m = m + mass;
            entry.sublevel = m;
        }
        entry.bound_pow = C.pow(rep.pow) * norm_rat(eps, k).pow(an) * lam.pow(rep.pow);
        const Rat lhs_pow = entry.sublevel.pow_rat(rep.pow);
        entry.pass = lhs_pow <= entry.bound_pow;
        rep.overall = rep.overall && entry.pass;
        // minimal passing constant: C^pow >= M^pow / (eps^num lam^pow)
        if (!entry.sublevel.is_zero()) {
            Rat need = lhs_pow / (norm_rat(eps, k).pow(an) * lam.pow(rep.pow));
            if (rep.c_emp_pow < need) rep.c_emp_pow = need;
        }
        rep.entries.push_back(std::move(entry));
    }
    return rep;
}

}  // namespace ffdioph
