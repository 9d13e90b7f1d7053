#pragma once

#include "ffdioph/flows.hpp"
#include "ffdioph/goodfn.hpp"

namespace ffdioph {

/// The map x -> g_t u_{f(x)} acting on Z^{n+1}.
struct HSpec {
    PolyMap f;
    FlowVector t;

    int m() const { return f.n + 1; }
};

/// Plucker coordinates of h(x) Delta as explicit polynomial functions of x:
/// one MPoly per size-r index subset of {0..n}.  psi_Delta(x) is their max
/// norm; the expansion keeps every coefficient exact.
std::vector<MPoly> psi_coord_polys(const HSpec& h, const Submodule& delta);

/// |h(x) Delta| at an exact point, by mapping a basis through h and taking
/// the wedge norm directly.
Norm psi_delta(const HSpec& h, const VecK& x, const Submodule& delta);
/// Same value via the coordinate expansion; the two routes must agree.
Norm psi_delta_coords(const HSpec& h, const VecK& x, const Submodule& delta);

struct ConditionsRow {
    Submodule delta;
    Norm sup = Norm::one();
    bool good_pass = false;
    bool low_mass = false;  // inf psi_Delta < rho somewhere on B
};

struct ConditionsReport {
    std::vector<ConditionsRow> rows;
    bool good_all = true;       // condition (1)
    bool sup_ge_rho_all = true; // condition (2)
    int low_mass_count = 0;     // condition (3): finite by construction; reported
    bool scan_truncated = false;
};

/// Checks the three non-divergence conditions over every primitive submodule
/// of Z^{n+1} (all ranks) with basis entry degrees <= degree_bound.
ConditionsReport conditions_check(const BallSpec& b, const HSpec& h, const Norm& rho, const Rat& C,
                                  const Rat& alpha, int degree_bound,
                                  const std::vector<Norm>& eps_list, int max_depth);

/// Exact lambda{x in B : delta(g_t Lambda_{f(x)}) < eps}.
Measure delta_sublevel_measure(const PolyMap& f, const BallSpec& b, const FlowVector& t,
                               const Norm& eps, int max_depth);

struct NondivRow {
    FlowVector t;
    Norm eps;
    Measure measure;
    Rat bound_pow;   // ((n+1) C (eps/rho)^alpha lambda(B))^pow
    bool in_range;   // eps <= rho
    bool pass;       // measure <= bound, compared at the pow-th power
};

struct NondivReport {
    std::vector<NondivRow> rows;
    bool overall = true;  // conjunction over in-range rows
    unsigned pow = 1;
    Rat c_pow;  // C^pow used
    Norm rho = Norm::one();
};

/// C^(d*l) for the default good-function constant C = d l^{3 - 1/l} (exact:
/// d^(dl) l^(3dl - d)).
Rat default_C_pow(int d, int l);

/// Per-(t, eps) exact comparison of the flow sublevel measure against
/// (n+1) C (eps/rho)^{1/(dl)} lambda(B), both sides raised to dl.
NondivReport nondiv_bound_report(const PolyMap& f, const BallSpec& b,
                                 const std::vector<FlowVector>& t_list,
                                 const std::vector<Norm>& eps_list, unsigned pow, const Rat& c_pow,
                                 const Norm& rho, int max_depth);

struct Shell {
    int t_sum = 0;
    Measure shell_sum;
    Measure cumulative;
};

/// Shell sums sum_{t_sum = q} lambda({delta(g_t Lambda_f(x)) <= k^{-ceil(gamma q)}})
/// for q = 1..T, with cumulative totals.
std::vector<Shell> borel_cantelli_shells(const PolyMap& f, const BallSpec& b, const Rat& gamma,
                                         int T, int max_depth);

}  // namespace ffdioph
