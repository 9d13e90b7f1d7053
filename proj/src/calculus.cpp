#include "ffdioph/calculus.hpp"

#include <algorithm>
#include <sstream>

#include "ffdioph/lattice.hpp"

namespace ffdioph {

MPoly MPoly::constant(const Field* f, int d, const Laurent& c) {
    MPoly r(f, d);
    if (!c.is_exactly_zero()) r.terms_.push_back({Expo{}, c});
    return r;
}

MPoly MPoly::variable(const Field* f, int d, int var) {
    MPoly r(f, d);
    Expo e;
    e.e[size_t(var)] = 1;
    r.terms_.push_back({e, Laurent::one(f)});
    return r;
}

int MPoly::deg_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

int MPoly::total_deg() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.total());
    return d;
}

void MPoly::add_term(const Expo& e, const Laurent& c) {
    if (c.is_exactly_zero()) return;
    if (!c.exact()) throw Error("MPoly coefficients must be exact");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const auto& t, const Expo& key) { return t.first < key; });
    if (it != terms_.end() && it->first == e) {
        Laurent s = it->second + c;
        if (s.is_exactly_zero())
            terms_.erase(it);
        else
            it->second = s;
    } else {
        terms_.insert(it, {e, c});
    }
}

MPoly MPoly::operator+(const MPoly& o) const {
    check_same_field(f_, o.f_);
    MPoly r = *this;
    r.d_ = std::max(d_, o.d_);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
    check_same_field(f_, o.f_);
    MPoly r(f_, std::max(d_, o.d_));
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Expo e;
            for (int i = 0; i < Expo::kMaxVars; ++i) {
                int s = ea[i] + eb[i];
                if (s > 255) throw Error("monomial degree overflow");
                e.e[size_t(i)] = uint8_t(s);
            }
            r.add_term(e, ca * cb);
        }
    return r;
}

MPoly MPoly::scaled(const Laurent& c) const {
    MPoly r(f_, d_);
    if (c.is_exactly_zero()) return r;
    for (const auto& [e, t] : terms_) r.add_term(e, t * c);
    return r;
}

MPoly MPoly::pow(int e) const {
    MPoly r = constant(f_, d_, Laurent::one(f_));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

Laurent MPoly::constant_term() const {
    for (const auto& [e, c] : terms_)
        if (e.is_zero()) return c;
    return Laurent::zero(f_);
}

Laurent MPoly::eval(const VecK& x) const {
    Laurent acc = Laurent::zero(f_);
    for (const auto& [e, c] : terms_) {
        Laurent t = c;
        for (int i = 0; i < d_; ++i)
            for (int rep = 0; rep < e[i]; ++rep) t = t * x.at(size_t(i));
        acc = acc + t;
    }
    return acc;
}

MPoly MPoly::substituted(int var, const Laurent& value) const {
    MPoly r(f_, d_);
    for (const auto& [e, c] : terms_) {
        Laurent t = c;
        for (int rep = 0; rep < e[var]; ++rep) t = t * value;
        Expo e2 = e;
        e2.e[size_t(var)] = 0;
        r.add_term(e2, t);
    }
    return r;
}

MPoly MPoly::shifted(int var, const Laurent& c) const {
    if (c.is_exactly_zero()) return *this;
    // substitute x_var -> x_var + c via per-term binomial expansion
    MPoly r(f_, d_);
    for (const auto& [e, coef] : terms_) {
        const int n = e[var];
        // (x + c)^n = sum_i binom(n, i) c^{n-i} x^i
        Laurent cpow = Laurent::one(f_);
        std::vector<Laurent> cpows(size_t(n) + 1, Laurent::one(f_));
        for (int i = 1; i <= n; ++i) cpows[size_t(i)] = cpows[size_t(i - 1)] * c;
        // binomials mod p via Pascal row
        std::vector<flabel> binom(size_t(n) + 1);
        binom[0] = 1;
        for (int row = 1; row <= n; ++row)
            for (int i = row; i >= 0; --i)
                binom[size_t(i)] = f_->add(i > 0 ? binom[size_t(i - 1)] : 0, i < row ? binom[size_t(i)] : 0);
        for (int i = 0; i <= n; ++i) {
            if (binom[size_t(i)] == 0) continue;
            Expo e2 = e;
            e2.e[size_t(var)] = uint8_t(i);
            r.add_term(e2, coef.scaled(binom[size_t(i)]) * cpows[size_t(n - i)]);
        }
        (void)cpow;
    }
    return r;
}

MPoly MPoly::renamed(int var, int other) const {
    MPoly r(f_, d_);
    for (const auto& [e, c] : terms_) {
        Expo e2 = e;
        int s = e2[other] + e2[var];
        if (s > 255) throw Error("monomial degree overflow");
        e2.e[size_t(other)] = uint8_t(s);
        e2.e[size_t(var)] = 0;
        r.add_term(e2, c);
    }
    return r;
}

MPoly MPoly::widened(int d_new) const {
    MPoly r = *this;
    if (d_new > r.d_) r.d_ = d_new;
    return r;
}

MPoly MPoly::derivative(int var) const {
    MPoly r(f_, d_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        const flabel m = f_->from_int(e[var]);
        if (m == 0) continue;
        Expo e2 = e;
        e2.e[size_t(var)] -= 1;
        r.add_term(e2, c.scaled(m));
    }
    return r;
}

MPoly MPoly::divided_difference(int var_a, int var_b) const {
    if (deg_in(var_b) != 0) throw Error("divided_difference: second variable must be fresh");
    MPoly r(f_, std::max(d_, var_b + 1));
    for (const auto& [e, c] : terms_) {
        const int n = e[var_a];
        // (x_a^n - x_b^n) / (x_a - x_b) = sum_{i+j=n-1} x_a^i x_b^j
        for (int i = 0; i + 1 <= n; ++i) {
            Expo e2 = e;
            e2.e[size_t(var_a)] = uint8_t(i);
            e2.e[size_t(var_b)] = uint8_t(n - 1 - i);
            r.add_term(e2, c);
        }
    }
    return r;
}

std::string MPoly::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int i = 0; i < d_; ++i) {
            if (e[i] == 0) continue;
            os << "*";
            if (int(var_names.size()) > i)
                os << var_names[size_t(i)];
            else
                os << "x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

Quotient phi_n(const MPoly& f, int n) {
    if (f.vars() != 1) throw DimensionMismatch("phi_n takes a univariate polynomial");
    Quotient q{f, {0}};
    for (int j = 1; j <= n; ++j) {
        q.p = q.p.divided_difference(0, int(q.group.size()));
        q.group.push_back(0);
    }
    return q;
}

Quotient phi_beta(const MPoly& f, const std::vector<int>& beta) {
    const int d = f.vars();
    if (int(beta.size()) != d) throw DimensionMismatch("multi-index length != variable count");
    Quotient q{f, {}};
    for (int i = 0; i < d; ++i) q.group.push_back(i);
    for (int var = 0; var < d; ++var)
        for (int rep = 0; rep < beta[size_t(var)]; ++rep) {
            q.p = q.p.divided_difference(var, int(q.group.size()));
            q.group.push_back(var);
        }
    return q;
}

Laurent quotient_eval(const Quotient& q, const std::vector<VecK>& args_per_var) {
    MPoly p = q.p;
    std::vector<size_t> used(args_per_var.size(), 0);
    for (size_t v = 0; v < q.group.size(); ++v) {
        const size_t g = size_t(q.group[v]);
        p = p.substituted(int(v), args_per_var.at(g).at(used[g]++));
    }
    return p.constant_term();
}

Laurent quotient_eval_diagonal(const Quotient& q, const VecK& x) {
    MPoly p = q.p;
    for (size_t v = 0; v < q.group.size(); ++v) p = p.substituted(int(v), x.at(size_t(q.group[v])));
    return p.constant_term();
}

Laurent phi_n_numeric(const MPoly& f, const VecK& points, int prec) {
    const int n = int(points.size()) - 1;
    if (n == 0) return f.eval({points[0]});
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j) {
            Laurent diff = points[i] - points[j];
            if (diff.is_exactly_zero()) throw RepeatedPoint("difference quotient needs distinct points");
        }
    VecK left(points.begin() + 1, points.end());  // (x2..x_{n+1})
    VecK a = left;
    a[0] = points[0];  // (x1, x3..x_{n+1})
    Laurent num = phi_n_numeric(f, a, prec) - phi_n_numeric(f, left, prec);
    Laurent den = points[0] - points[1];
    return num * den.inv(prec);
}

Laurent d_j(const MPoly& f, int j, const Laurent& a) {
    Quotient q = phi_n(f, j);
    return quotient_eval_diagonal(q, {a});
}

bool factorial_identity_check(const MPoly& f, int j, const Laurent& a) {
    const Field* k = f.field();
    flabel fact = 1;
    for (int i = 2; i <= j; ++i) fact = k->mul(fact, k->from_int(i));
    Laurent lhs = d_j(f, j, a).scaled(fact);
    MPoly der = f;
    for (int i = 0; i < j; ++i) der = der.derivative(0);
    Laurent rhs = der.eval({a});
    return lhs == rhs;
}

std::vector<std::vector<int>> multi_indices(int d, int l, bool include_zero) {
    std::vector<std::vector<int>> out;
    std::vector<int> beta(size_t(d), 0);
    for (;;) {
        const int tot = [&] {
            int t = 0;
            for (int b : beta) t += b;
            return t;
        }();
        if (tot <= l && (include_zero || tot >= 1)) out.push_back(beta);
        int i = d - 1;
        while (i >= 0 && beta[size_t(i)] == l) --i;
        if (i < 0) break;
        ++beta[size_t(i)];
        for (int j = i + 1; j < d; ++j) beta[size_t(j)] = 0;
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int ta = 0, tb = 0;
        for (int x : a) ta += x;
        for (int x : b) tb += x;
        if (ta != tb) return ta < tb;
        return a < b;
    });
    return out;
}

int nondeg_order(const PolyMap& f, const VecK& x0, int l_max, bool include_zero) {
    const Field* k = f.field();
    std::vector<VecK> indep;
    int covered = 0;  // |beta| layers fully processed
    auto betas = multi_indices(f.d, l_max, include_zero);
    size_t bi = 0;
    for (int l = include_zero ? 0 : 1; l <= l_max; ++l) {
        for (; bi < betas.size(); ++bi) {
            int tot = 0;
            for (int x : betas[bi]) tot += x;
            if (tot > l) break;
            VecK v;
            v.reserve(size_t(f.n));
            for (const auto& comp : f.components) {
                Quotient q = phi_beta(comp, betas[bi]);
                v.push_back(quotient_eval_diagonal(q, x0));
            }
            if (int(indep.size()) < f.n) {
                std::vector<VecK> trial = indep;
                trial.push_back(v);
                if (!wedge_norm(trial).is_zero()) indep.push_back(v);
            }
        }
        covered = l;
        if (int(indep.size()) == f.n) return covered;
    }
    return -1;
}

}  // namespace ffdioph
