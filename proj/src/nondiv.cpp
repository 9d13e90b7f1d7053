#include "ffdioph/nondiv.hpp"

#include <algorithm>

namespace ffdioph {

namespace {

void for_each_subset(int m, int r, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) idx[size_t(i)] = i;
    for (;;) {
        fn(idx);
        int i = r;
        while (i > 0 && idx[size_t(i - 1)] == m - r + i - 1) --i;
        if (i == 0) break;
        ++idx[size_t(i - 1)];
        for (int j = i; j < r; ++j) idx[size_t(j)] = idx[size_t(j - 1)] + 1;
    }
}

Poly minor_det(const std::vector<std::vector<Poly>>& rows, const std::vector<int>& cols) {
    const Field* f = rows.front().front().field();
    const size_t r = rows.size();
    std::function<Poly(size_t, std::vector<bool>&)> rec = [&](size_t row, std::vector<bool>& used) -> Poly {
        if (row == r) return Poly::one(f);
        Poly acc = Poly::zero(f);
        size_t seen = 0;
        for (size_t ci = 0; ci < cols.size(); ++ci) {
            if (used[ci]) continue;
            const Poly& e = rows[row][size_t(cols[ci])];
            if (!e.is_zero()) {
                used[ci] = true;
                Poly sub = rec(row + 1, used);
                used[ci] = false;
                Poly term = e * sub;
                acc = (seen % 2 == 0) ? acc + term : acc - term;
            }
            ++seen;
        }
        return acc;
    };
    std::vector<bool> used(cols.size(), false);
    return rec(0, used);
}

}  // namespace

std::vector<MPoly> psi_coord_polys(const HSpec& h, const Submodule& delta) {
    const Field* f = h.f.field();
    const int m = h.m();
    const int r = delta.rank();
    if (delta.ambient_dim() != m) throw DimensionMismatch("submodule ambient dimension != n+1");
    const int ts = h.t.sum();

    // Plucker coordinates w_I of the submodule, indexed by ascending subsets
    std::vector<std::vector<int>> subsets;
    std::vector<Poly> w;
    for_each_subset(m, r, [&](const std::vector<int>& I) {
        subsets.push_back(I);
        w.push_back(minor_det(delta.rows, I));
    });
    auto coord_index = [&](const std::vector<int>& I) -> size_t {
        for (size_t s = 0; s < subsets.size(); ++s)
            if (subsets[s] == I) return s;
        throw Error("subset lookup failed");
    };

    std::vector<MPoly> out;
    out.reserve(subsets.size());
    for (size_t s = 0; s < subsets.size(); ++s) {
        const auto& I = subsets[s];
        int tdrop = 0;  // sum of t_i over i in I, i >= 1
        bool has0 = !I.empty() && I[0] == 0;
        for (int i : I)
            if (i >= 1) tdrop += h.t.t[size_t(i - 1)];
        const int scale = (has0 ? ts : 0) - tdrop;
        if (!has0) {
            MPoly g = MPoly::constant(f, h.f.d, Laurent::from_poly(w[s]).xshift(scale));
            out.push_back(std::move(g));
            continue;
        }
        // (u w)_I = w_I + sum_{j notin I} sign(j, J) w_{J} f_j,  J = (I \ 0) + j
        MPoly g = MPoly::constant(f, h.f.d, Laurent::from_poly(w[s]));
        for (int j = 1; j < m; ++j) {
            if (std::find(I.begin(), I.end(), j) != I.end()) continue;
            std::vector<int> J(I.begin() + 1, I.end());
            J.push_back(j);
            std::sort(J.begin(), J.end());
            const size_t pos = size_t(std::lower_bound(J.begin(), J.end(), j) - J.begin());
            const Poly& wj = w[coord_index(J)];
            if (wj.is_zero()) continue;
            MPoly term = h.f.components[size_t(j - 1)].scaled(Laurent::from_poly(wj));
            g = (pos % 2 == 0) ? g + term : g - term;
        }
        out.push_back(g.scaled(Laurent::monomial(f, 1, -scale)));
    }
    return out;
}

Norm psi_delta(const HSpec& h, const VecK& x, const Submodule& delta) {
    const Field* f = h.f.field();
    const int m = h.m();
    const int ts = h.t.sum();
    VecK fx;
    for (const auto& comp : h.f.components) fx.push_back(comp.eval(x));
    std::vector<VecK> images;
    for (const auto& row : delta.rows) {
        VecK v(size_t(m), Laurent::zero(f));
        Laurent first = Laurent::from_poly(row[0]);
        for (int i = 1; i < m; ++i) first = first + fx[size_t(i - 1)] * Laurent::from_poly(row[size_t(i)]);
        v[0] = first.xshift(ts);
        for (int i = 1; i < m; ++i)
            v[size_t(i)] = Laurent::from_poly(row[size_t(i)]).xshift(-h.t.t[size_t(i - 1)]);
        images.push_back(std::move(v));
    }
    return wedge_norm(images);
}

Norm psi_delta_coords(const HSpec& h, const VecK& x, const Submodule& delta) {
    Norm best = Norm::zero();
    for (const auto& g : psi_coord_polys(h, delta)) {
        Laurent v = g.eval(x);
        if (v.is_exactly_zero()) continue;
        if (v.indeterminate()) throw InsufficientPrecision("coordinate value undetermined");
        best = max(best, v.norm());
    }
    return best;
}

ConditionsReport conditions_check(const BallSpec& b, const HSpec& h, const Norm& rho, const Rat& C,
                                  const Rat& alpha, int degree_bound,
                                  const std::vector<Norm>& eps_list, int max_depth) {
    const int m = h.m();
    ConditionsReport rep;
    enumerate_primitive(h.f.field(), m, m, degree_bound, [&](const Submodule& delta) {
        ConditionsRow row;
        row.delta = delta;
        auto polys = psi_coord_polys(h, delta);
        GoodReport good = check_good(polys, b, C, alpha, eps_list, max_depth);
        row.sup = good.sup;
        row.good_pass = good.overall;
        // inf psi < rho: any certified value below rho
        ValueHistogram hist = value_histogram(polys, b, rho.is_zero() ? -1 : rho.exp() - 1, max_depth);
        row.low_mass = !hist.zero_mass.is_zero() || !hist.below_floor.is_zero();
        for (const auto& [e, mass] : hist.buckets)
            if (Norm::kpow(e) < rho && !mass.is_zero()) row.low_mass = true;
        rep.good_all = rep.good_all && row.good_pass;
        rep.sup_ge_rho_all = rep.sup_ge_rho_all && (rho <= row.sup);
        if (row.low_mass) ++rep.low_mass_count;
        // truncation heuristic: a boundary-degree submodule whose sup is
        // within k^2 of rho suggests relevant deeper submodules may exist
        int maxdeg = 0;
        for (const auto& rw : delta.rows)
            for (const auto& e : rw) maxdeg = std::max(maxdeg, e.is_zero() ? 0 : e.deg());
        if (maxdeg == degree_bound && row.sup <= rho * Norm::kpow(2)) rep.scan_truncated = true;
        rep.rows.push_back(std::move(row));
    });
    return rep;
}

namespace {

struct MeasureAccum {
    Measure total;
    uint32_t k;
};

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

/// Candidates are the polynomials g_w(x) = sum w_i f_i(x); a cell lies in the
/// sublevel set iff some candidate has min_{w_0} |w_0 + g_w(x)| <= k^theta on
/// all of it.
void measure_rec(std::vector<MPoly>& polys, const Field* f, std::vector<int>& r, int theta_exp,
                 int max_depth, MeasureAccum& acc) {
    std::vector<MPoly> pending;
    for (const auto& g : polys) {
        const Norm V = variation_bound(g, r);
        if (Norm::kpow(-1) < V) {
            pending.push_back(g);  // integer part may vary across the cell
            continue;
        }
        const Laurent frac = g.constant_term().fractional_part();
        const Norm phi0 = frac.is_exactly_zero() ? Norm::zero() : frac.norm();
        if (V < phi0 || V.is_zero()) {
            // |<g>| is constant phi0 on the cell
            if (phi0 <= Norm::kpow(theta_exp)) {
                int cell_exp = 0;
                for (int rc : r) cell_exp += rc;
                acc.total = acc.total + Measure::make(1, cell_exp, acc.k);
                return;  // whole cell in
            }
            continue;  // this candidate is out on the whole cell
        }
        if (V <= Norm::kpow(theta_exp)) {
            int cell_exp = 0;
            for (int rc : r) cell_exp += rc;
            acc.total = acc.total + Measure::make(1, cell_exp, acc.k);
            return;  // |<g>| <= V <= theta everywhere on the cell
        }
        pending.push_back(g);
    }
    if (pending.empty()) return;  // every candidate certified out
    for (int c = 0; c < int(r.size()); ++c)
        if (r[size_t(c)] >= max_depth)
            throw InsufficientPrecision("flow sublevel refinement exceeded resolution cap " +
                                        std::to_string(max_depth));
    const int d = int(r.size());
    std::vector<flabel> a(size_t(d), 0);
    for (;;) {
        std::vector<MPoly> shifted;
        shifted.reserve(pending.size());
        for (const auto& g : pending) {
            MPoly h = g;
            for (int c = 0; c < d; ++c)
                if (a[size_t(c)] != 0) h = h.shifted(c, Laurent::monomial(f, a[size_t(c)], r[size_t(c)]));
            shifted.push_back(std::move(h));
        }
        for (int c = 0; c < d; ++c) ++r[size_t(c)];
        measure_rec(shifted, f, r, theta_exp, max_depth, acc);
        for (int c = 0; c < d; ++c) --r[size_t(c)];
        int c = 0;
        while (c < d && a[size_t(c)] + 1u == f->q()) { a[size_t(c)] = 0; ++c; }
        if (c == d) break;
        ++a[size_t(c)];
    }
}

}  // namespace

Measure delta_sublevel_measure(const PolyMap& f, const BallSpec& b, const FlowVector& t,
                               const Norm& eps, int max_depth) {
    const Field* fld = f.field();
    const uint32_t k = fld->q();
    if (eps.is_zero()) return Measure::zero(k);
    if (t.n() != f.n) throw DimensionMismatch("flow dimension != map target dimension");
    const int e = eps.exp();
    const int ts = t.sum();
    // the p-only lattice vector (p, 0) covers the whole ball when k^t < eps
    if (e - 1 - ts >= 0) return ball_measure(b);

    // admissible w: deg w_i <= t_i + e - 1, w != 0, up to leading-unit scaling
    std::vector<std::vector<Poly>> per_coord(size_t(f.n));
    for (int i = 0; i < f.n; ++i) {
        const int cap = t.t[size_t(i)] + e - 1;
        if (cap >= 0)
            per_coord[size_t(i)] = all_polys_up_to_deg(fld, cap);
        else
            per_coord[size_t(i)] = {Poly::zero(fld)};
    }
    std::vector<MPoly> cands;
    std::vector<size_t> odo(size_t(f.n), 0);
    for (;;) {
        bool allzero = true;
        flabel lead = 0;
        for (int i = f.n - 1; i >= 0; --i) {
            const Poly& w = per_coord[size_t(i)][odo[size_t(i)]];
            if (!w.is_zero()) {
                allzero = false;
                if (lead == 0) lead = w.lc();
            }
        }
        if (!allzero && lead == 1) {  // canonical representative per unit scaling
            MPoly g = MPoly::zero(fld, f.d);
            for (int i = 0; i < f.n; ++i) {
                const Poly& w = per_coord[size_t(i)][odo[size_t(i)]];
                if (!w.is_zero())
                    g = g + f.components[size_t(i)].scaled(Laurent::from_poly(w));
            }
            cands.push_back(std::move(g));
        }
        size_t i = 0;
        while (i < size_t(f.n) && odo[i] == per_coord[i].size() - 1) odo[i++] = 0;
        if (i == size_t(f.n)) break;
        ++odo[i];
    }
    if (cands.empty()) return Measure::zero(k);

    // recenter onto the ball and run the adaptive scan
    std::vector<MPoly> local;
    local.reserve(cands.size());
    for (const auto& g : cands) {
        MPoly h = g.widened(b.d());
        for (int c = 0; c < b.d(); ++c)
            if (!b.center[size_t(c)].is_exactly_zero()) h = h.shifted(c, b.center[size_t(c)]);
        local.push_back(std::move(h));
    }
    MeasureAccum acc{Measure::zero(k), k};
    std::vector<int> r = b.radius_exp;
    measure_rec(local, fld, r, e - 1 - ts, max_depth, acc);
    return acc.total;
}

Rat default_C_pow(int d, int l) {
    // (d l^{3 - 1/l})^{dl} = d^{dl} l^{3dl - d}
    const unsigned dl = unsigned(d * l);
    return Rat(bigpow(d, dl) * bigpow(l, unsigned(3 * int(dl) - d)), 1);
}

NondivReport nondiv_bound_report(const PolyMap& f, const BallSpec& b,
                                 const std::vector<FlowVector>& t_list,
                                 const std::vector<Norm>& eps_list, unsigned pow, const Rat& c_pow,
                                 const Norm& rho, int max_depth) {
    const uint32_t k = f.field()->q();
    NondivReport rep;
    rep.pow = pow;
    rep.c_pow = c_pow;
    rep.rho = rho;
    const Rat lam = ball_measure(b).as_rat();
    const Rat factor = Rat(bigpow(f.n + 1, pow), 1) * c_pow * lam.pow(pow);
    for (const auto& t : t_list)
        for (const auto& eps : eps_list) {
            NondivRow row;
            row.t = t;
            row.eps = eps;
            row.in_range = eps <= rho;
            row.measure = delta_sublevel_measure(f, b, t, eps, max_depth);
            row.bound_pow = factor * (norm_rat(eps, k) / norm_rat(rho, k));
            row.pass = row.measure.pow_rat(pow) <= row.bound_pow;
            if (row.in_range) rep.overall = rep.overall && row.pass;
            rep.rows.push_back(std::move(row));
        }
    return rep;
}

std::vector<Shell> borel_cantelli_shells(const PolyMap& f, const BallSpec& b, const Rat& gamma,
                                         int T, int max_depth) {
    const uint32_t k = f.field()->q();
    std::vector<Shell> shells;
    Measure cumulative = Measure::zero(k);
    for (int q = 1; q <= T; ++q) {
        Shell sh;
        sh.t_sum = q;
        sh.shell_sum = Measure::zero(k);
        // delta <= k^{-ceil(gamma q)}  <=>  delta < k^{-(ceil(gamma q) - 1)}
        const int c = int((gamma * Rat(q)).ceil());
        const Norm eps = Norm::kpow(-(c - 1));
        // enumerate t in Z_+^n with sum q
        std::vector<int> t(size_t(f.n), 0);
        std::function<void(int, int)> rec = [&](int idx, int left) {
            if (idx == f.n - 1) {
                t[size_t(idx)] = left;
                sh.shell_sum = sh.shell_sum + delta_sublevel_measure(f, b, FlowVector{t}, eps, max_depth);
                return;
            }
            for (int v = 0; v <= left; ++v) {
                t[size_t(idx)] = v;
                rec(idx + 1, left - v);
            }
        };
        if (f.n >= 1) rec(0, q);
        cumulative = cumulative + sh.shell_sum;
        sh.cumulative = cumulative;
        shells.push_back(sh);
    }
    return shells;
}

}  // namespace ffdioph
