#include "ffdioph/flows.hpp"

#include <sstream>

namespace ffdioph {

std::string FlowVector::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) os << ",";
        os << t[i];
    }
    os << ")";
    return os.str();
}

LatticeBasis unipotent_basis(const VecK& fx) {
    if (fx.empty()) throw DimensionMismatch("empty point");
    const Field* f = fx.front().field();
    const int n = int(fx.size());
    LatticeBasis b = identity_basis(f, n + 1);
    for (int i = 1; i <= n; ++i) b.rows[size_t(i)][0] = fx[size_t(i - 1)];
    return b;
}

LatticeBasis flow_apply(const FlowVector& t, const LatticeBasis& b) {
    const int m = b.dim();
    if (t.n() + 1 != m) throw DimensionMismatch("flow dimension != lattice dimension - 1");
    for (int x : t.t)
        if (x < 0) throw DimensionMismatch("flow exponents must be nonnegative");
    LatticeBasis out = b;
    const int ts = t.sum();
    for (int i = 0; i < m; ++i) {
        out.rows[size_t(i)][0] = out.rows[size_t(i)][0].xshift(ts);
        for (int j = 1; j < m; ++j)
            out.rows[size_t(i)][size_t(j)] = out.rows[size_t(i)][size_t(j)].xshift(-t.t[size_t(j - 1)]);
    }
    return out;
}

Norm traj_delta(const VecK& fx, const FlowVector& t) {
    return lattice_delta(flow_apply(t, unipotent_basis(fx)));
}

LinkParams link_params(const std::vector<Poly>& q, const Rat& eps, int n) {
    if (int(q.size()) != n) throw DimensionMismatch("witness length != n");
    bool nonzero = false;
    for (const auto& qi : q)
        if (!qi.is_zero()) nonzero = true;
    if (!nonzero) throw Error("link parameters need q != 0");
    LinkParams lp;
    lp.eps = eps;
    int m = 0;
    std::vector<int> plus_exp(q.size(), 0);
    for (size_t i = 0; i < q.size(); ++i) {
        plus_exp[i] = std::max(q[i].deg(), 0);
        if (q[i].is_zero()) plus_exp[i] = 0;
        m += plus_exp[i];
    }
    lp.m = m;
    const BigInt floor_me = (eps * Rat(m) / Rat(n + 1)).floor();
    const int fl = int(floor_me);
    lp.r = Norm::kpow(-fl);
    lp.t.t.resize(q.size());
    for (size_t i = 0; i < q.size(); ++i) lp.t.t[i] = plus_exp[i] + fl;
    const int ts = lp.t.sum();
    lp.gamma_hat = ts > 0 ? Rat(fl) / Rat(ts) : Rat(0);
    return lp;
}

LinkReport verify_link(const VecK& x, const Witness& w, const Rat& eps) {
    if (x.size() != w.q.size()) throw DimensionMismatch("witness length != point dimension");
    const Field* f = x.front().field();
    const int n = int(x.size());
    // recompute the witness error and check the multiplicative inequality
    Laurent val = Laurent::from_poly(w.p);
    for (size_t i = 0; i < x.size(); ++i) val = val + Laurent::from_poly(w.q[i]) * x[i];
    Norm err;
    if (val.is_exactly_zero())
        err = Norm::zero();
    else if (val.indeterminate())
        throw InsufficientPrecision("witness error not certified");
    else
        err = val.norm();

    LinkReport rep;
    rep.params = link_params(w.q, eps, n);
    // |p + q.x| <= Pi_+(q)^{-(1+eps)}  <=>  -err_exp >= m (1+eps)
    if (!err.is_zero()) {
        const Rat lhs(-err.exp());
        const Rat rhs = Rat(rep.params.m) * (Rat(1) + eps);
        if (lhs < rhs) throw WitnessTooWeak("witness fails the multiplicative inequality");
    }
    rep.r = rep.params.r;
    rep.delta = traj_delta(x, rep.params.t);
    rep.holds = rep.delta <= rep.r;
    // flowed witness vector max(k^t |p + q.x|, max_i k^{-t_i}|q_i|)
    Norm wn = err.is_zero() ? Norm::zero() : Norm::kpow(err.exp() + rep.params.t.sum());
    for (size_t i = 0; i < w.q.size(); ++i) {
        if (w.q[i].is_zero()) continue;
        wn = max(wn, Norm::kpow(w.q[i].deg() - rep.params.t.t[i]));
    }
    rep.witness_vec_norm = wn;
    (void)f;
    return rep;
}

ScanReport bounded_scan(const VecK& x, int T, bool one_param) {
    const int n = int(x.size());
    ScanReport rep;
    bool have = false;
    auto consider = [&](const FlowVector& t) {
        const Norm d = traj_delta(x, t);
        rep.trace.push_back({t, d});
        if (!have || d < rep.min_delta) {
            rep.min_delta = d;
            rep.argmin = t;
            have = true;
        }
    };
    if (one_param) {
        for (int t = 0; t <= T; ++t) consider(FlowVector::constant(n, t));
    } else {
        std::vector<int> t(size_t(n), 0);
        for (;;) {
            int s = 0;
            for (int v : t) s += v;
            if (s <= T) consider(FlowVector{t});
            // odometer bounded by T per coordinate (sum filter above)
            int i = n - 1;
            while (i >= 0 && t[size_t(i)] == T) --i;
            if (i < 0) break;
            ++t[size_t(i)];
            for (int j = i + 1; j < n; ++j) t[size_t(j)] = 0;
        }
    }
    return rep;
}

}  // namespace ffdioph
