#include "ffdioph/cfrac.hpp"

namespace ffdioph {

namespace {

/// An exact finite-window Laurent value is the rational function P(X)/X^s.
void to_fraction(const Laurent& x, Poly& num, Poly& den) {
    const Field* f = x.field();
    if (x.is_exactly_zero()) {
        num = Poly::zero(f);
        den = Poly::one(f);
        return;
    }
    const int v = x.valuation();
    const int end = x.window_end();
    const int s = std::max(end, 0);
    std::vector<flabel> nc(size_t(s - v) + 1, 0);
    for (int i = v; i <= end; ++i) nc[size_t(s - i)] = x.coeff(i);
    num = Poly(f, std::move(nc));
    den = Poly::monomial(f, 1, s);
}

}  // namespace

CFExpansion cf_expand(const Laurent& x, int max_terms) {
    const Field* f = x.field();
    CFExpansion cf;
    if (max_terms <= 0) return cf;
    if (x.exact()) {
        // rational input: exact Euclidean expansion
        Poly num(f), den(f);
        to_fraction(x, num, den);
        for (int i = 0; i < max_terms; ++i) {
            if (den.is_zero()) break;
            auto [a, r] = divmod(num, den);
            cf.quotients.push_back(a);
            if (r.is_zero()) {
                cf.exact_terminated = true;
                return cf;
            }
            num = den;
            den = r;
        }
        return cf;
    }
    Laurent y = x;
    for (int i = 0; i < max_terms; ++i) {
        Poly a = y.polynomial_part();
        cf.quotients.push_back(a);
        Laurent frac = y.fractional_part();
        if (frac.is_exactly_zero()) {
            cf.exact_terminated = true;
            return cf;
        }
        if (frac.indeterminate())
            throw InsufficientPrecision("fractional part indistinguishable from 0 after " +
                                        std::to_string(i + 1) + " quotients");
        y = frac.inv(std::numeric_limits<int>::max() / 8);
    }
    return cf;
}

std::vector<std::pair<Poly, Poly>> convergents(const CFExpansion& cf) {
    std::vector<std::pair<Poly, Poly>> out;
    if (cf.quotients.empty()) return out;
    const Field* f = cf.quotients.front().field();
    Poly p1 = Poly::one(f), p0 = cf.quotients[0];
    Poly q1 = Poly::zero(f), q0 = Poly::one(f);
    out.emplace_back(p0, q0);
    for (size_t i = 1; i < cf.quotients.size(); ++i) {
        Poly p = cf.quotients[i] * p0 + p1;
        Poly q = cf.quotients[i] * q0 + q1;
        p1 = p0;
        p0 = p;
        q1 = q0;
        q0 = q;
        out.emplace_back(p0, q0);
    }
    return out;
}

Witness best_witness(const VecK& x, int degree_bound) {
    if (x.empty()) throw DimensionMismatch("empty point");
    const Field* f = x.front().field();
    const size_t n = x.size();
    auto polys = all_polys_up_to_deg(f, degree_bound);
    std::vector<Laurent> poly_vals;  // as Laurent, reused
    poly_vals.reserve(polys.size());
    for (const auto& p : polys) poly_vals.push_back(Laurent::from_poly(p));

    bool have = false;
    Witness best;
    std::vector<size_t> odo(n, 0);
    for (;;) {
        bool allzero = true;
        for (size_t i = 0; i < n; ++i)
            if (odo[i] != 0) allzero = false;
        if (!allzero) {
            Laurent dot = Laurent::zero(f);
            for (size_t i = 0; i < n; ++i)
                if (odo[i] != 0) dot = dot + poly_vals[odo[i]] * x[i];
            Poly p = -dot.polynomial_part();
            Laurent errv = dot.fractional_part();
            Norm err;
            if (errv.is_exactly_zero())
                err = Norm::zero();
            else if (errv.indeterminate())
                throw InsufficientPrecision("witness error not certified at this precision");
            else
                err = errv.norm();
            int pi_exp = 0;
            for (size_t i = 0; i < n; ++i) {
                const int dg = polys[odo[i]].deg();
                if (dg > 0) pi_exp += dg;
            }
            const Norm pi = Norm::kpow(pi_exp);
            const bool better = !have || err < best.err || (err == best.err && pi < best.pi_plus_q);
            if (better) {
                best.p = p;
                best.q.clear();
                for (size_t i = 0; i < n; ++i) best.q.push_back(polys[odo[i]]);
                best.err = err;
                best.pi_plus_q = pi;
                have = true;
            }
        }
        size_t i = 0;
        while (i < n && odo[i] == polys.size() - 1) odo[i++] = 0;
        if (i == n) break;
        ++odo[i];
    }
    return best;
}

Witness best_witness_rational(const std::vector<std::pair<Poly, Poly>>& x, int degree_bound) {
    if (x.empty()) throw DimensionMismatch("empty point");
    const Field* f = x.front().first.field() ? x.front().first.field() : x.front().second.field();
    const size_t n = x.size();
    for (const auto& [num, den] : x)
        if (den.is_zero()) throw DivideByZero("rational coordinate with zero denominator");
    // common denominator D and scaled numerators N_i with x_i = N_i / D
    Poly D = Poly::one(f);
    for (const auto& [num, den] : x) D = D * den;
    std::vector<Poly> N;
    for (size_t i = 0; i < n; ++i) {
        Poly t = x[i].first;
        for (size_t j = 0; j < n; ++j)
            if (j != i) t = t * x[j].second;
        N.push_back(t);
    }
    auto polys = all_polys_up_to_deg(f, degree_bound);
    bool have = false;
    Witness best;
    std::vector<size_t> odo(n, 0);
    for (;;) {
        bool allzero = true;
        for (size_t i = 0; i < n; ++i)
            if (odo[i] != 0) allzero = false;
        if (!allzero) {
            Poly num = Poly::zero(f);  // q.x = num / D
            for (size_t i = 0; i < n; ++i)
                if (odo[i] != 0) num = num + polys[odo[i]] * N[i];
            auto [p_whole, rem] = divmod(num, D);
            // |p + q.x| with p = -[q.x] = -p_whole: remainder rem / D
            Norm err = rem.is_zero() ? Norm::zero() : Norm::kpow(rem.deg() - D.deg());
            int pi_exp = 0;
            for (size_t i = 0; i < n; ++i)
                if (polys[odo[i]].deg() > 0) pi_exp += polys[odo[i]].deg();
            const Norm pi = Norm::kpow(pi_exp);
            if (!have || err < best.err || (err == best.err && pi < best.pi_plus_q)) {
                best.p = -p_whole;
                best.q.clear();
                for (size_t i = 0; i < n; ++i) best.q.push_back(polys[odo[i]]);
                best.err = err;
                best.pi_plus_q = pi;
                have = true;
            }
        }
        size_t i = 0;
        while (i < n && odo[i] == polys.size() - 1) odo[i++] = 0;
        if (i == n) break;
        ++odo[i];
    }
    return best;
}

Laurent make_liouville(const Field* f, int c, int prec) {
    if (c < 2) throw Error("liouville exponent base must be >= 2");
    std::vector<flabel> coeffs(size_t(std::max(prec, 0)), 0);
    long long pw = 1;
    while (pw <= prec) {
        coeffs[size_t(pw - 1)] = 1;
        if (pw > prec / c) break;
        pw *= c;
    }
    return Laurent::ball(f, 1, std::move(coeffs), prec);
}

Laurent make_periodic(const std::vector<Poly>& quotients, int prec) {
    if (quotients.empty()) throw NonConvergent("empty quotient list");
    const Field* f = quotients.front().field();
    int mindeg = std::numeric_limits<int>::max();
    for (const auto& a : quotients) {
        if (a.deg() < 1) throw NonConvergent("partial quotient of degree 0 cannot converge");
        mindeg = std::min(mindeg, a.deg());
    }
    Laurent y = Laurent::unknown(f, -1);  // the closed unit ball: radius k^0
    const int target = std::numeric_limits<int>::max() / 8;
    int guard = 0;
    while (y.radius() > Norm::kpow(-(prec + 1))) {
        Laurent z = y;
        for (size_t i = quotients.size(); i-- > 0;) {
            z = (Laurent::from_poly(quotients[i]) + z).inv(target);
        }
        y = z;
        if (++guard > prec + 64) throw NonConvergent("fixed-point iteration failed to contract");
    }
    return y.truncated(prec);
}

}  // namespace ffdioph
