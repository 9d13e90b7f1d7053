#include "ffdioph/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ffdioph {

namespace {

/// Norm and rightmost attaining position of a row; throws when an
/// indeterminate entry could dominate.
struct RowLead {
    Norm norm;
    int pivot;  // -1 when the row norm is zero
};

RowLead row_lead(const VecK& row) {
    Norm best = Norm::zero();
    Norm pending = Norm::zero();
    for (const auto& e : row) {
        if (e.indeterminate())
            pending = max(pending, e.radius());
        else
            best = max(best, e.norm());
    }
    if (best < pending)
        throw InsufficientPrecision("row norm undetermined: entry windows exhausted");
    if (best.is_zero()) return {best, -1};
    int pivot = -1;
    for (int j = 0; j < int(row.size()); ++j) {
        const auto& e = row[size_t(j)];
        if (!e.indeterminate() && !e.is_exactly_zero() && e.norm() == best) pivot = j;
    }
    return {best, pivot};
}

}  // namespace

LatticeBasis identity_basis(const Field* f, int m) {
    LatticeBasis b;
    b.rows.assign(size_t(m), VecK(size_t(m), Laurent::zero(f)));
    for (int i = 0; i < m; ++i) b.rows[size_t(i)][size_t(i)] = Laurent::one(f);
    return b;
}

ReducedBasis reduce_basis(const LatticeBasis& b) {
    const int m = b.dim();
    if (m == 0) throw DimensionMismatch("empty basis");
    const Field* f = b.field();
    for (const auto& r : b.rows)
        if (int(r.size()) != m) throw DimensionMismatch("basis is not square");

    ReducedBasis out;
    out.rows = b.rows;
    out.transform.assign(size_t(m), std::vector<Poly>(size_t(m), Poly::zero(f)));
    for (int i = 0; i < m; ++i) out.transform[size_t(i)][size_t(i)] = Poly::one(f);

    std::vector<RowLead> lead(static_cast<size_t>(m));
    auto refresh = [&](int i) {
        lead[size_t(i)] = row_lead(out.rows[size_t(i)]);
        if (lead[size_t(i)].norm.is_zero()) throw SingularBasis("rows are K-linearly dependent");
    };
    for (int i = 0; i < m; ++i) refresh(i);

    // Mulders-Storjohann simple transformations, run directly on valuations:
    // while two rows share a pivot position, cancel the leading term of the
    // larger against the smaller.  (deg, pivot) decreases lexicographically
    // for the modified row, so this terminates.
    for (;;) {
        int ri = -1, rj = -1;
        for (int i = 0; i < m && ri < 0; ++i)
            for (int j = 0; j < m; ++j) {
                if (i == j) continue;
                if (lead[size_t(i)].pivot == lead[size_t(j)].pivot &&
                    lead[size_t(j)].norm <= lead[size_t(i)].norm) {
                    ri = i;
                    rj = j;
                    break;
                }
            }
        if (ri < 0) break;
        const int p = lead[size_t(ri)].pivot;
        const int di = lead[size_t(ri)].norm.exp();
        const int dj = lead[size_t(rj)].norm.exp();
        const Laurent& ei = out.rows[size_t(ri)][size_t(p)];
        const Laurent& ej = out.rows[size_t(rj)][size_t(p)];
        const flabel c = f->div(ei.coeff(-di), ej.coeff(-dj));
        const int shift = di - dj;  // >= 0
        for (int col = 0; col < m; ++col) {
            Laurent sub = out.rows[size_t(rj)][size_t(col)].scaled(c).xshift(shift);
            out.rows[size_t(ri)][size_t(col)] = out.rows[size_t(ri)][size_t(col)] - sub;
        }
        const Poly mult = Poly::monomial(f, c, shift);
        for (int col = 0; col < m; ++col)
            out.transform[size_t(ri)][size_t(col)] =
                out.transform[size_t(ri)][size_t(col)] - mult * out.transform[size_t(rj)][size_t(col)];
        refresh(ri);
    }

    out.minima.reserve(size_t(m));
    for (int i = 0; i < m; ++i) out.minima.push_back(lead[size_t(i)].norm);
    std::sort(out.minima.begin(), out.minima.end());
    return out;
}

std::vector<Norm> successive_minima(const LatticeBasis& b) { return reduce_basis(b).minima; }

Norm lattice_delta(const LatticeBasis& b) { return reduce_basis(b).minima.front(); }

namespace {

Laurent det_rec(const std::vector<VecK>& rows, std::vector<int>& cols, size_t r) {
    const Field* f = rows.front().front().field();
    if (r == rows.size()) return Laurent::one(f);
    Laurent acc = Laurent::zero(f);
    bool neg = false;
    for (size_t ci = 0; ci < cols.size(); ++ci) {
        const int col = cols[ci];
        if (col < 0) continue;
        const Laurent& e = rows[r][size_t(col)];
        size_t before = 0;
        for (size_t t = 0; t < ci; ++t)
            if (cols[t] >= 0) ++before;
        neg = (before % 2) == 1;
        if (!e.is_exactly_zero()) {
            cols[ci] = -1 - col;
            Laurent sub = det_rec(rows, cols, r + 1);
            cols[ci] = col;
            Laurent term = e * sub;
            acc = acc + (neg ? -term : term);
        }
    }
    return acc;
}

Laurent det_laurent(const std::vector<VecK>& rows) {
    std::vector<int> cols(rows.size());
    for (size_t i = 0; i < cols.size(); ++i) cols[i] = int(i);
    return det_rec(rows, cols, 0);
}

}  // namespace

Norm det_norm(const LatticeBasis& b) {
    Laurent d = det_laurent(b.rows);
    if (d.is_exactly_zero()) throw SingularBasis("determinant is zero");
    if (d.indeterminate()) throw InsufficientPrecision("determinant norm undetermined");
    return d.norm();
}

Norm wedge_norm(const std::vector<VecK>& vectors) {
    if (vectors.empty()) throw DimensionMismatch("empty wedge");
    const size_t r = vectors.size();
    const size_t m = vectors.front().size();
    if (r > m) return Norm::zero();
    // iterate over all r-subsets of columns
    std::vector<size_t> idx(r);
    for (size_t i = 0; i < r; ++i) idx[i] = i;
    Norm best = Norm::zero();
    Norm pending = Norm::zero();
    for (;;) {
        std::vector<VecK> minor(r, VecK());
        for (size_t i = 0; i < r; ++i) {
            minor[i].reserve(r);
            for (size_t j = 0; j < r; ++j) minor[i].push_back(vectors[i][idx[j]]);
        }
        Laurent d = det_laurent(minor);
        if (d.indeterminate())
            pending = max(pending, d.radius());
        else if (!d.is_exactly_zero())
            best = max(best, d.norm());
        // next subset
        size_t i = r;
        while (i > 0 && idx[i - 1] == m - r + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (best < pending) throw InsufficientPrecision("wedge norm undetermined");
    return best;
}

std::string Submodule::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) os << "; ";
        for (size_t j = 0; j < rows[i].size(); ++j) {
            if (j) os << ", ";
            os << rows[i][j].str();
        }
    }
    return os.str();
}

namespace {

Poly det_poly(const std::vector<std::vector<Poly>>& rows, const std::vector<size_t>& colsel) {
    const size_t r = rows.size();
    const Field* f = rows.front().front().field();
    // Laplace expansion on the first row, recursively via index masks
    std::function<Poly(size_t, std::vector<bool>&)> rec = [&](size_t row, std::vector<bool>& used) -> Poly {
        if (row == r) return Poly::one(f);
        Poly acc = Poly::zero(f);
        size_t seen = 0;
        for (size_t ci = 0; ci < colsel.size(); ++ci) {
            if (used[ci]) continue;
            const Poly& e = rows[row][colsel[ci]];
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
    std::vector<bool> used(colsel.size(), false);
    return rec(0, used);
}

void for_each_subset(size_t m, size_t r, const std::function<void(const std::vector<size_t>&)>& fn) {
    std::vector<size_t> idx(r);
    for (size_t i = 0; i < r; ++i) idx[i] = i;
    for (;;) {
        fn(idx);
        size_t i = r;
        while (i > 0 && idx[i - 1] == m - r + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

bool is_primitive(const Submodule& d) {
    if (d.rows.empty()) return false;
    const size_t r = size_t(d.rank()), m = size_t(d.ambient_dim());
    if (r > m) return false;
    const Field* f = d.rows.front().front().field();
    Poly g = Poly::zero(f);
    for_each_subset(m, r, [&](const std::vector<size_t>& cols) {
        if (g.is_unit()) return;
        Poly mv = det_poly(d.rows, cols);
        g = gcd(g, mv);
    });
    return g.is_unit();
}

bool submodule_contains(const Submodule& d, const std::vector<Poly>& v) {
    // Reduce v against the Popov basis; v lies in the span iff the remainder
    // is zero.  Works because Popov rows have distinct pivots.
    Submodule pop = popov_form(d);
    std::vector<Poly> rem = v;
    const Field* f = v.front().field();
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& row : pop.rows) {
            int pivot = -1, dmax = Poly::kZeroDeg;
            for (size_t j = 0; j < row.size(); ++j)
                if (!row[j].is_zero() && row[j].deg() >= dmax) {
                    dmax = row[j].deg();
                    pivot = int(j);
                }
            if (pivot < 0) continue;
            const Poly& pe = row[size_t(pivot)];
            if (rem[size_t(pivot)].deg() >= pe.deg() && !rem[size_t(pivot)].is_zero()) {
                auto [q, rr] = divmod(rem[size_t(pivot)], pe);
                (void)rr;
                if (q.is_zero()) continue;
                for (size_t j = 0; j < rem.size(); ++j) rem[j] = rem[j] - q * row[j];
                changed = true;
            }
        }
    }
    for (const auto& e : rem)
        if (!e.is_zero()) return false;
    (void)f;
    return true;
}

namespace {

struct PolyRowLead {
    int deg;
    int pivot;
};

PolyRowLead poly_row_lead(const std::vector<Poly>& row) {
    int deg = Poly::kZeroDeg, pivot = -1;
    for (int j = 0; j < int(row.size()); ++j) {
        if (row[size_t(j)].is_zero()) continue;
        if (row[size_t(j)].deg() >= deg) {
            deg = row[size_t(j)].deg();
            pivot = j;
        }
    }
    return {deg, pivot};
}

}  // namespace

Submodule popov_form(const Submodule& d) {
    if (d.rows.empty()) return d;
    const Field* f = d.rows.front().front().field();
    std::vector<std::vector<Poly>> rows = d.rows;

    // weak Popov on polynomial rows; dependent rows cancel to zero and drop
    for (;;) {
        std::vector<PolyRowLead> lead(rows.size());
        for (size_t i = 0; i < rows.size(); ++i) lead[i] = poly_row_lead(rows[i]);
        for (size_t i = 0; i < rows.size();) {
            if (lead[i].pivot < 0) {
                rows.erase(rows.begin() + long(i));
                lead.erase(lead.begin() + long(i));
            } else {
                ++i;
            }
        }
        int ri = -1, rj = -1;
        for (size_t i = 0; i < rows.size() && ri < 0; ++i)
            for (size_t j = 0; j < rows.size(); ++j) {
                if (i == j) continue;
                if (lead[i].pivot == lead[j].pivot && lead[j].deg <= lead[i].deg) {
                    ri = int(i);
                    rj = int(j);
                    break;
                }
            }
        if (ri < 0) break;
        const int p = lead[size_t(ri)].pivot;
        const flabel c = f->div(rows[size_t(ri)][size_t(p)].lc(), rows[size_t(rj)][size_t(p)].lc());
        const Poly mult = Poly::monomial(f, c, lead[size_t(ri)].deg - lead[size_t(rj)].deg);
        for (size_t col = 0; col < rows[size_t(ri)].size(); ++col)
            rows[size_t(ri)][col] = rows[size_t(ri)][col] - mult * rows[size_t(rj)][col];
    }

    // normalize: monic pivots, then reduce entries at other rows' pivot columns
    std::vector<PolyRowLead> lead(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        lead[i] = poly_row_lead(rows[i]);
        const flabel inv = f->inv(rows[i][size_t(lead[i].pivot)].lc());
        for (auto& e : rows[i]) e = e.scaled(inv);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t l = 0; l < rows.size(); ++l) {
                if (i == l) continue;
                const int pl = lead[l].pivot;
                const Poly& pivot_entry = rows[l][size_t(pl)];
                if (rows[i][size_t(pl)].deg() >= pivot_entry.deg()) {
                    auto [q, r] = divmod(rows[i][size_t(pl)], pivot_entry);
                    (void)r;
                    if (q.is_zero()) continue;
                    for (size_t col = 0; col < rows[i].size(); ++col)
                        rows[i][col] = rows[i][col] - q * rows[l][col];
                    changed = true;
                }
            }
    }

    std::sort(rows.begin(), rows.end(), [](const std::vector<Poly>& a, const std::vector<Poly>& b) {
        const auto la = poly_row_lead(a), lb = poly_row_lead(b);
        if (la.deg != lb.deg) return la.deg < lb.deg;
        return la.pivot < lb.pivot;
    });
    return Submodule{rows};
}

void enumerate_primitive(const Field* f, int m, int rank_max, int degree_bound,
                         const std::function<void(const Submodule&)>& emit) {
    rank_max = std::min(rank_max, m);
    for (int r = 1; r <= rank_max; ++r) {
        std::vector<int> pivots(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i) pivots[size_t(i)] = i;
        for (;;) {
            // degree vectors
            std::vector<int> degs(size_t(r), 0);
            for (;;) {
                // free coefficient slots: per entry (i, j) a max degree (or -1 for none)
                // pivot entries are monic of degree degs[i] with degs[i] free lower coeffs.
                struct Slot {
                    int row, col, cap;  // polynomial degree cap for free coefficients
                    bool pivot;
                };
                std::vector<Slot> slots;
                for (int i = 0; i < r; ++i) {
                    for (int j = 0; j < m; ++j) {
                        if (j == pivots[size_t(i)]) {
                            slots.push_back({i, j, degs[size_t(i)] - 1, true});
                            continue;
                        }
                        int cap = (j < pivots[size_t(i)]) ? degs[size_t(i)] : degs[size_t(i)] - 1;
                        // column condition at other pivot columns
                        for (int l = 0; l < r; ++l)
                            if (l != i && pivots[size_t(l)] == j) cap = std::min(cap, degs[size_t(l)] - 1);
                        slots.push_back({i, j, cap, false});
                    }
                }
                // odometer over all coefficient assignments
                std::vector<uint64_t> counts(slots.size());
                uint64_t total = 1;
                bool overflow = false;
                for (size_t s = 0; s < slots.size(); ++s) {
                    uint64_t n = 1;
                    for (int e = 0; e <= slots[s].cap; ++e) n *= f->q();
                    counts[s] = n;
                    if (total > (uint64_t(1) << 62) / std::max<uint64_t>(n, 1)) overflow = true;
                    total *= n;
                }
                if (overflow) throw Error("primitive-submodule scan too large");
                for (uint64_t code = 0; code < total; ++code) {
                    std::vector<std::vector<Poly>> rows(size_t(r),
                                                        std::vector<Poly>(size_t(m), Poly::zero(f)));
                    uint64_t v = code;
                    for (size_t s = 0; s < slots.size(); ++s) {
                        uint64_t c = v % counts[s];
                        v /= counts[s];
                        std::vector<flabel> pc(static_cast<size_t>(std::max(slots[s].cap + 1, 0)));
                        for (int e = 0; e <= slots[s].cap; ++e) {
                            pc[size_t(e)] = flabel(c % f->q());
                            c /= f->q();
                        }
                        Poly entry(f, std::move(pc));
                        if (slots[s].pivot)
                            entry = entry + Poly::monomial(f, 1, degs[size_t(slots[s].row)]);
                        rows[size_t(slots[s].row)][size_t(slots[s].col)] = entry;
                    }
                    Submodule cand{std::move(rows)};
                    if (!is_primitive(cand)) continue;
                    // canonical presentation: rows sorted by (degree, pivot)
                    std::sort(cand.rows.begin(), cand.rows.end(),
                              [](const std::vector<Poly>& a, const std::vector<Poly>& b) {
                                  const auto la = poly_row_lead(a), lb = poly_row_lead(b);
                                  if (la.deg != lb.deg) return la.deg < lb.deg;
                                  return la.pivot < lb.pivot;
                              });
                    emit(cand);
                }
                // next degree vector
                int i = r - 1;
                while (i >= 0 && degs[size_t(i)] == degree_bound) --i;
                if (i < 0) break;
                ++degs[size_t(i)];
                for (int j = i + 1; j < r; ++j) degs[size_t(j)] = 0;
            }
            // next pivot subset
            int i = r;
            while (i > 0 && pivots[size_t(i - 1)] == m - r + i - 1) --i;
            if (i == 0) break;
            ++pivots[size_t(i - 1)];
            for (int j = i; j < r; ++j) pivots[size_t(j)] = pivots[size_t(j - 1)] + 1;
        }
    }
}

std::vector<Submodule> enumerate_primitive_all(const Field* f, int m, int rank_max, int degree_bound) {
    std::vector<Submodule> out;
    enumerate_primitive(f, m, rank_max, degree_bound, [&](const Submodule& s) { out.push_back(s); });
    return out;
}

namespace {

/// Streaming minimum-weight-basis maintenance for the linear matroid over K:
/// given the next vector v, either it does not improve the current optimal
/// independent set, or it replaces the largest member of its circuit.
struct GreedyBasis {
    size_t m;
    std::vector<VecK> vecs;    // <= m independent vectors
    std::vector<Norm> norms;   // parallel to vecs

    Norm worst() const {
        Norm w = Norm::zero();
        for (const auto& n : norms) w = max(w, n);
        return w;
    }

    void offer(const VecK& v, const Norm& n) {
        if (vecs.size() == m && !(n < worst())) return;
        if (vecs.size() < m) {
            std::vector<VecK> trial = vecs;
            trial.push_back(v);
            if (!wedge_norm(trial).is_zero()) {
                vecs.push_back(v);
                norms.push_back(n);
                return;
            }
        }
        // v is dependent on the current set (or the set is full): locate the
        // circuit by replacement determinants and evict its largest member if
        // that improves the weight.
        std::vector<size_t> circuit;
        if (vecs.size() == m) {
            for (size_t i = 0; i < m; ++i) {
                std::vector<VecK> repl = vecs;
                repl[i] = v;
                if (!wedge_norm(repl).is_zero()) circuit.push_back(i);
            }
        } else {
            // dependent within a partial set: member i is on the circuit iff
            // removing it makes v independent of the rest
            for (size_t i = 0; i < vecs.size(); ++i) {
                std::vector<VecK> rest;
                for (size_t j = 0; j < vecs.size(); ++j)
                    if (j != i) rest.push_back(vecs[j]);
                rest.push_back(v);
                if (!wedge_norm(rest).is_zero()) circuit.push_back(i);
            }
        }
        size_t evict = size_t(-1);
        Norm evict_norm = Norm::zero();
        for (size_t i : circuit)
            if (evict == size_t(-1) || evict_norm < norms[i]) {
                evict = i;
                evict_norm = norms[i];
            }
        if (evict != size_t(-1) && n < evict_norm) {
            vecs[evict] = v;
            norms[evict] = n;
        }
    }
};

}  // namespace

std::vector<Norm> minima_by_enumeration(const std::vector<VecK>& rows, int coeff_deg) {
    const Field* f = rows.front().front().field();
    const size_t m = rows.size();
    const size_t dim = rows.front().size();
    auto coeffs = all_polys_up_to_deg(f, coeff_deg);
    // precompute every coefficient * row product once
    std::vector<std::vector<VecK>> prod(m);
    for (size_t i = 0; i < m; ++i) {
        prod[i].reserve(coeffs.size());
        for (const auto& c : coeffs) {
            Laurent cl = Laurent::from_poly(c);
            VecK p(dim, Laurent::zero(f));
            for (size_t j = 0; j < dim; ++j) p[j] = cl * rows[i][j];
            prod[i].push_back(std::move(p));
        }
    }
    GreedyBasis gb{m, {}, {}};
    // nested partial sums; the innermost level does one vector add per leaf
    std::vector<VecK> partial(m + 1, VecK(dim, Laurent::zero(f)));
    std::vector<size_t> odo(m, 0);
    size_t level = 0;
    for (;;) {
        if (level == m) {
            bool allzero = true;
            for (size_t i = 0; i < m; ++i)
                if (odo[i] != 0) allzero = false;
            if (!allzero) gb.offer(partial[m], vec_norm_max(partial[m]));
            // advance odometer
            size_t i = m;
            while (i > 0 && odo[i - 1] == coeffs.size() - 1) odo[--i] = 0;
            if (i == 0) break;
            ++odo[i - 1];
            level = i - 1;
            continue;
        }
        const VecK& add = prod[level][odo[level]];
        for (size_t j = 0; j < dim; ++j) partial[level + 1][j] = partial[level][j] + add[j];
        ++level;
    }
    std::vector<Norm> minima = gb.norms;
    std::sort(minima.begin(), minima.end());
    return minima;
}

}  // namespace ffdioph
