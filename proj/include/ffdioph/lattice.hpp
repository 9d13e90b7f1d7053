#pragma once

#include <functional>
#include <vector>

#include "ffdioph/laurent.hpp"

namespace ffdioph {

/// Row basis of a discrete F_q[X]-module of full rank in K^m: the module is
/// the Z-span of the rows.  Entries may be exact or precision-tracked balls;
/// reduction certifies every pivot decision and throws InsufficientPrecision
/// when the entries' windows cannot support one.
struct LatticeBasis {
    std::vector<VecK> rows;

    int dim() const { return int(rows.size()); }
    const Field* field() const { return rows.at(0).at(0).field(); }
};

LatticeBasis identity_basis(const Field* f, int m);

/// Result of weak Popov reduction.  Row leading positions are pairwise
/// distinct, which over an ultrametric field makes the rows an orthogonal
/// basis: |sum a_i r_i| = max |a_i||r_i|.  Consequently the sorted row norms
/// are the successive minima and their product equals |det|.
struct ReducedBasis {
    std::vector<VecK> rows;
    std::vector<Norm> minima;          // sorted ascending
    std::vector<std::vector<Poly>> transform;  // unimodular U with rows = U * input
};

ReducedBasis reduce_basis(const LatticeBasis& b);
std::vector<Norm> successive_minima(const LatticeBasis& b);
/// First successive minimum = norm of a shortest nonzero lattice vector.
Norm lattice_delta(const LatticeBasis& b);
/// |det| of the row matrix, exact.
Norm det_norm(const LatticeBasis& b);

/// Norm of the wedge v_1 ^ ... ^ v_r: the max norm over all r x r minors
/// (Plucker coordinates).  Zero signals K-linear dependence.
Norm wedge_norm(const std::vector<VecK>& vectors);

/// A rank-r submodule of Z^m given by r independent rows with polynomial
/// entries.
struct Submodule {
    std::vector<std::vector<Poly>> rows;

    int rank() const { return int(rows.size()); }
    int ambient_dim() const { return rows.empty() ? 0 : int(rows.front().size()); }
    std::string str() const;
};

/// Primitive <=> the gcd of all maximal minors of the basis matrix is a unit
/// (equivalent over the PID F_q[X] to Delta = K Delta intersect Z^m).
bool is_primitive(const Submodule& d);

/// Membership of an integer vector in the Z-span of the submodule's rows.
bool submodule_contains(const Submodule& d, const std::vector<Poly>& v);

/// Canonical Popov form of the row span: distinct pivots (rightmost position
/// of maximal degree per row), monic pivot entries dominating their column,
/// rows sorted by (row degree, pivot).  Unique per submodule.
Submodule popov_form(const Submodule& d);

/// Streams every primitive submodule of Z^m with 1 <= rank <= rank_max that
/// admits a basis with entry degrees <= degree_bound, each exactly once, in
/// canonical Popov form, deterministic order.
void enumerate_primitive(const Field* f, int m, int rank_max, int degree_bound,
                         const std::function<void(const Submodule&)>& emit);
std::vector<Submodule> enumerate_primitive_all(const Field* f, int m, int rank_max, int degree_bound);

/// Exhaustive oracle helpers (test support, but exact and general): the
/// successive minima of the finite set of Z-combinations of `rows` with
/// coefficient degree <= coeff_deg.
std::vector<Norm> minima_by_enumeration(const std::vector<VecK>& rows, int coeff_deg);

}  // namespace ffdioph
