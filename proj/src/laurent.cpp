#include "ffdioph/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace ffdioph {

namespace {
constexpr int kInfPrec = std::numeric_limits<int>::max() / 4;
}

Laurent Laurent::zero(const Field* f) {
    Laurent r(f);
    r.exact_ = true;
    r.start_ = 0;
    r.prec_ = kInfPrec;
    return r;
}

Laurent Laurent::monomial(const Field* f, flabel c, int idx) {
    Laurent r = zero(f);
    if (c != 0) {
        r.start_ = idx;
        r.c_ = {c};
    }
    return r;
}

Laurent Laurent::exact_window(const Field* f, int start, std::vector<flabel> coeffs) {
    Laurent r(f);
    r.exact_ = true;
    r.prec_ = kInfPrec;
    r.start_ = start;
    r.c_ = std::move(coeffs);
    r.normalize();
    return r;
}

Laurent Laurent::ball(const Field* f, int start, std::vector<flabel> coeffs, int prec) {
    Laurent r(f);
    r.exact_ = false;
    r.start_ = start;
    r.c_ = std::move(coeffs);
    r.c_.resize(size_t(std::max(0, prec - start + 1)), 0);
    r.prec_ = prec;
    r.normalize();
    return r;
}

Laurent Laurent::unknown(const Field* f, int prec) { return ball(f, prec + 1, {}, prec); }

Laurent Laurent::from_poly(const Poly& p) {
    if (p.is_zero()) return zero(p.field());
    std::vector<flabel> c(size_t(p.deg()) + 1);
    for (int i = 0; i <= p.deg(); ++i) c[size_t(p.deg() - i)] = p.coeff(i);  // X^d -> index -d
    return exact_window(p.field(), -p.deg(), std::move(c));
}

void Laurent::normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + long(lead));
        start_ += int(lead);
    }
    if (exact_) {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
        if (c_.empty()) start_ = 0;
        prec_ = kInfPrec;
    } else {
        if (c_.empty()) start_ = prec_ + 1;
    }
}

int Laurent::valuation() const {
    if (!c_.empty()) return start_;
    if (exact_) throw Error("valuation of the exact zero is +infinity");
    throw InsufficientPrecision("valuation undetermined: all stored coefficients vanish at precision " +
                                std::to_string(prec_));
}

Norm Laurent::norm() const {
    if (!c_.empty()) return Norm::kpow(-start_);
    if (exact_) return Norm::zero();
    throw InsufficientPrecision("norm undetermined at precision " + std::to_string(prec_));
}

Norm Laurent::norm_upper() const {
    if (!c_.empty()) return Norm::kpow(-start_);
    if (exact_) return Norm::zero();
    return radius();
}

Norm Laurent::radius() const { return exact_ ? Norm::zero() : Norm::kpow(-(prec_ + 1)); }

flabel Laurent::coeff(int idx) const {
    if (idx < start_ || idx >= start_ + int(c_.size())) return 0;
    return c_[size_t(idx - start_)];
}

Laurent Laurent::operator+(const Laurent& o) const {
    check_same_field(f_, o.f_);
    Laurent r(f_);
    r.exact_ = exact_ && o.exact_;
    const int p = std::min(prec_, o.prec_);
    int lo, hi;
    if (r.exact_) {
        lo = std::min(c_.empty() ? 0 : start_, o.c_.empty() ? 0 : o.start_);
        hi = std::max(start_ + int(c_.size()), o.start_ + int(o.c_.size())) - 1;
        r.prec_ = kInfPrec;
    } else {
        lo = std::min(start_, o.start_);
        hi = p;
        r.prec_ = p;
    }
    if (hi >= lo) {
        r.c_.resize(size_t(hi - lo + 1));
        for (int i = lo; i <= hi; ++i) r.c_[size_t(i - lo)] = f_->add(coeff(i), o.coeff(i));
    }
    r.start_ = lo;
    r.normalize();
    return r;
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& c : r.c_) c = f_->neg(c);
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
    check_same_field(f_, o.f_);
    if (is_exactly_zero() || o.is_exactly_zero()) return zero(f_);
    Laurent r(f_);
    r.exact_ = exact_ && o.exact_;
    // valuation lower bounds (radius bound when the window is empty)
    const int va = c_.empty() ? prec_ + 1 : start_;
    const int vb = o.c_.empty() ? o.prec_ + 1 : o.start_;
    int p;
    if (r.exact_) {
        p = kInfPrec;
    } else {
        long long cand = kInfPrec;
        if (!o.exact_) cand = std::min(cand, (long long)va + o.prec_);
        if (!exact_) cand = std::min(cand, (long long)vb + prec_);
        if (!exact_ && !o.exact_) cand = std::min(cand, (long long)prec_ + o.prec_ + 1);
        p = int(cand);
    }
    const int lo = va + vb;
    const int hi = r.exact_ ? (start_ + int(c_.size()) - 1) + (o.start_ + int(o.c_.size()) - 1) : p;
    if (hi >= lo && !c_.empty() && !o.c_.empty()) {
        r.c_.assign(size_t(hi - lo + 1), 0);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            const int ia = start_ + int(i);
            for (size_t j = 0; j < o.c_.size(); ++j) {
                const int ib = o.start_ + int(j);
                if (ia + ib > hi) break;
                if (o.c_[j] == 0) continue;
                auto& slot = r.c_[size_t(ia + ib - lo)];
                slot = f_->add(slot, f_->mul(c_[i], o.c_[j]));
            }
        }
    }
    r.start_ = lo;
    r.prec_ = r.exact_ ? kInfPrec : p;
    r.normalize();
    return r;
}

Laurent Laurent::scaled(flabel c) const {
    if (c == 0) return exact_ ? zero(f_) : unknown(f_, prec_);
    Laurent r = *this;
    for (auto& x : r.c_) x = f_->mul(x, c);
    return r;
}

Laurent Laurent::xshift(int j) const {
    Laurent r = *this;
    r.start_ -= j;
    if (!r.exact_) r.prec_ -= j;
    return r;
}

Laurent Laurent::inv(int target_prec) const {
    if (is_exactly_zero()) throw DivideByZero("inverse of zero");
    if (c_.empty()) throw InsufficientPrecision("inverse of a ball containing 0");
    const int v = start_;
    const flabel c0i = f_->inv(c_[0]);
    if (exact_ && c_.size() == 1) return monomial(f_, c0i, -v);
    // a = c0 X^{-v} (1 + u); invert the unit series 1 + u by the recurrence
    // d_0 = 1, d_m = -sum_{j>=1} u_j d_{m-j}.
    int out_prec;
    if (exact_) {
        out_prec = std::max(target_prec, -v);
    } else {
        out_prec = std::min(prec_ - 2 * v, target_prec);
        out_prec = std::max(out_prec, -v);
    }
    const int terms = out_prec + v;  // compute d_0 .. d_terms
    std::vector<flabel> d(size_t(terms) + 1, 0);
    d[0] = 1;
    for (int m = 1; m <= terms; ++m) {
        flabel acc = 0;
        for (int j = 1; j <= m; ++j) {
            const flabel aj = coeff(v + j);
            if (aj == 0) continue;
            const flabel uj = f_->mul(aj, c0i);
            acc = f_->add(acc, f_->mul(uj, d[size_t(m - j)]));
        }
        d[size_t(m)] = f_->neg(acc);
    }
    for (auto& x : d) x = f_->mul(x, c0i);
    return ball(f_, -v, std::move(d), out_prec);
}

Laurent Laurent::truncated(int prec) const {
    if (exact_) {
        const int end = start_ + int(c_.size()) - 1;
        if (c_.empty() || end <= prec) return *this;
        std::vector<flabel> cc(c_.begin(), c_.begin() + long(prec - start_ + 1 > 0 ? prec - start_ + 1 : 0));
        return ball(f_, start_, std::move(cc), prec);
    }
    if (prec >= prec_) return *this;
    std::vector<flabel> cc;
    if (prec >= start_) cc.assign(c_.begin(), c_.begin() + long(prec - start_ + 1));
    return ball(f_, start_, std::move(cc), prec);
}

Laurent Laurent::as_ball(int prec) const {
    std::vector<flabel> cc;
    for (int i = start_; i <= prec; ++i) cc.push_back(coeff(i));
    return ball(f_, start_, std::move(cc), prec);
}

Poly Laurent::polynomial_part() const {
    if (!exact_ && prec_ < 0)
        throw InsufficientPrecision("polynomial part needs coefficients through X^0");
    if (c_.empty() || start_ > 0) return Poly::zero(f_);
    std::vector<flabel> pc(size_t(-start_) + 1, 0);
    for (int i = start_; i <= 0; ++i) pc[size_t(-i)] = coeff(i);
    return Poly(f_, std::move(pc));
}

Laurent Laurent::fractional_part() const {
    if (!exact_ && prec_ < 0)
        throw InsufficientPrecision("fractional part needs coefficients through X^0");
    if (c_.empty() || start_ > 0) return *this;
    const int lo = 1;
    const int hi = exact_ ? start_ + int(c_.size()) - 1 : prec_;
    std::vector<flabel> cc;
    for (int i = lo; i <= hi; ++i) cc.push_back(coeff(i));
    return exact_ ? exact_window(f_, lo, std::move(cc)) : ball(f_, lo, std::move(cc), hi);
}

bool Laurent::operator==(const Laurent& o) const {
    return f_ == o.f_ && exact_ == o.exact_ && start_ == o.start_ && prec_ == o.prec_ && c_ == o.c_;
}

std::string Laurent::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const int idx = start_ + int(i);
        if (!first) os << "+";
        first = false;
        const std::string cs = f_->elem_str(c_[i]);
        const bool unit = (c_[i] == 1);
        const bool wrap = cs.find('+') != std::string::npos;
        if (idx == 0) {
            os << (wrap ? "(" + cs + ")" : cs);
        } else {
            if (!unit) os << (wrap ? "(" + cs + ")" : cs) << "*";
            os << "X^" << -idx;
        }
    }
    if (!exact_) {
        if (!first) os << "+";
        os << "O(X^" << -(prec_ + 1) << ")";
    } else if (first) {
        os << "0";
    }
    return os.str();
}

Norm vec_norm_max(const VecK& x) {
    Norm best = Norm::zero();
    bool pending = false;
    Norm pending_bound = Norm::zero();
    for (const auto& c : x) {
        if (c.indeterminate()) {
            pending = true;
            pending_bound = max(pending_bound, c.radius());
        } else {
            best = max(best, c.norm());
        }
    }
    if (pending && best < pending_bound)
        throw InsufficientPrecision("vector norm undetermined: an indeterminate coordinate may dominate");
    return best;
}

Norm vec_norm_plus(const VecK& x) {
    Norm best = Norm::one();
    for (const auto& c : x) {
        if (c.indeterminate()) {
            if (Norm::one() < c.radius())
                throw InsufficientPrecision("|.|_+ undetermined for an indeterminate coordinate");
            continue;  // |c| < 1, so |c|_+ = 1
        }
        best = max(best, c.norm().plus());
    }
    return best;
}

Norm vec_norm_pi_plus(const VecK& x) {
    int e = 0;
    for (const auto& c : x) {
        if (c.indeterminate()) {
            if (Norm::one() < c.radius())
                throw InsufficientPrecision("Pi_+ undetermined for an indeterminate coordinate");
            continue;
        }
        const Norm n = c.norm();
        if (!n.is_zero() && n.exp() > 0) e += n.exp();
    }
    return Norm::kpow(e);
}

}  // namespace ffdioph
