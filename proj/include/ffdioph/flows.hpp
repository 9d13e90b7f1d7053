#pragma once

#include <vector>

#include "ffdioph/cfrac.hpp"
#include "ffdioph/exact.hpp"
#include "ffdioph/lattice.hpp"

namespace ffdioph {

/// Exponent tuple of the diagonal flow diag(X^{t}, X^{-t_1}, ..., X^{-t_n}),
/// t = sum t_i, all t_i >= 0.
struct FlowVector {
    std::vector<int> t;

    int n() const { return int(t.size()); }
    int sum() const {
        int s = 0;
        for (int x : t) s += x;
        return s;
    }
    static FlowVector constant(int n, int v) { return FlowVector{std::vector<int>(size_t(n), v)}; }
    std::string str() const;
};

/// Basis of the lattice {(p + q.fx, q) : (p, q) in Z^{n+1}}: the Z-span of
/// e_0 and the rows (fx_i, e_i).  Unimodular (|det| = 1) for every fx.
LatticeBasis unipotent_basis(const VecK& fx);

/// Left action of diag(X^{t}, X^{-t_1}, ..., X^{-t_n}) on the basis rows:
/// coordinate 0 is scaled by X^{t}, coordinate i by X^{-t_i}.
LatticeBasis flow_apply(const FlowVector& t, const LatticeBasis& b);

/// delta(g_t Lambda_fx): norm of a shortest nonzero vector of the flowed
/// lattice, computed exactly by reduction.
Norm traj_delta(const VecK& fx, const FlowVector& t);

/// Parameters of the correspondence between a witness q and a flow time:
/// Pi_+(q) = k^m, r = k^{-floor(m eps/(n+1))}, |q_i|_+ = r k^{t_i}.
struct LinkParams {
    int m = 0;
    Norm r = Norm::one();
    FlowVector t;
    Rat eps;
    Rat gamma_hat;  // measured log_k(1/r) / t_sum (0 when t = 0)
};

LinkParams link_params(const std::vector<Poly>& q, const Rat& eps, int n);

struct LinkReport {
    bool holds = false;
    Norm delta = Norm::one();
    Norm r = Norm::one();
    Norm witness_vec_norm = Norm::one();  // |g_t u_x (p, q)|
    LinkParams params;
};

/// Verifies delta(g_t Lambda_x) <= r for the witness's flow time.  The
/// witness must satisfy |p + q.x| <= Pi_+(q)^{-(1+eps)} (else WitnessTooWeak).
LinkReport verify_link(const VecK& x, const Witness& w, const Rat& eps);

struct TrajPoint {
    FlowVector t;
    Norm delta;
};

struct ScanReport {
    Norm min_delta = Norm::one();
    FlowVector argmin;
    std::vector<TrajPoint> trace;  // one_param: per t; multi: per tuple
};

/// Minimum of traj_delta over all t with sum <= T (multi) or over the
/// one-parameter family t_i = t, t <= T.
ScanReport bounded_scan(const VecK& x, int T, bool one_param);

}  // namespace ffdioph
