#include "ffdioph/fq.hpp"

#include <algorithm>
#include <sstream>

namespace ffdioph {

namespace {

constexpr uint32_t kTableCap = 256;  // build q*q lookup tables up to this size

// Dense F_p polynomial arithmetic on digit vectors, used only during field
// construction and for large-q element ops.
std::vector<flabel> polymod(std::vector<flabel> a, const std::vector<flabel>& m, uint32_t p) {
    // m monic of degree d = m.size()-1
    const int d = int(m.size()) - 1;
    while (int(a.size()) > d) {
        flabel top = a.back();
        a.pop_back();
        if (top == 0) continue;
        const size_t off = a.size() - size_t(d);
        for (int i = 0; i < d; ++i) {
            uint32_t v = a[off + i] + p - uint32_t(top) * m[i] % p;
            a[off + i] = flabel(v % p);
        }
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<flabel> polymul_fp(const std::vector<flabel>& a, const std::vector<flabel>& b, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + uint32_t(a[i]) * b[j]) % p;
    std::vector<flabel> out(acc.begin(), acc.end());
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

bool irreducible_fp(const std::vector<flabel>& m, uint32_t p) {
    const int d = int(m.size()) - 1;
    if (d < 1) return false;
    if (d == 1) return true;
    // trial division by every monic polynomial of degree 1..d/2
    for (int e = 1; 2 * e <= d; ++e) {
        uint64_t count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        for (uint64_t code = 0; code < count; ++code) {
            std::vector<flabel> div(size_t(e) + 1, 0);
            uint64_t c = code;
            for (int i = 0; i < e; ++i) {
                div[size_t(i)] = flabel(c % p);
                c /= p;
            }
            div[size_t(e)] = 1;
            if (polymod(m, div, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::shared_ptr<const Field> Field::make(uint32_t p, uint32_t nu, const std::vector<flabel>& modulus) {
    if (!is_prime_u32(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (nu < 1) throw DegreeMismatch("extension degree must be >= 1");
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->nu_ = nu;
    uint64_t q = 1;
    for (uint32_t i = 0; i < nu; ++i) {
        q *= p;
        if (q > std::numeric_limits<flabel>::max()) throw DegreeMismatch("field too large for label type");
    }
    f->q_ = uint32_t(q);
    if (nu == 1) {
        if (!modulus.empty()) throw DegreeMismatch("prime field takes no modulus");
    } else {
        if (modulus.empty()) throw DegreeMismatch("extension field requires a modulus");
        std::vector<flabel> m = modulus;
        while (!m.empty() && m.back() == 0) m.pop_back();
        if (int(m.size()) - 1 != int(nu)) throw DegreeMismatch("modulus degree != nu");
        for (flabel c : m)
            if (c >= p) throw DegreeMismatch("modulus coefficient out of range");
        if (m.back() != 1) {
            // normalize to monic
            uint32_t lead = m.back(), li = 1;
            while (li * lead % p != 1) ++li;
            for (auto& c : m) c = flabel(uint32_t(c) * li % p);
        }
        if (!irreducible_fp(m, p)) throw ReducibleModulus("modulus factors over F_p");
        f->modulus_ = m;
    }
    if (f->q_ <= kTableCap) {
        const uint32_t Q = f->q_;
        f->add_.resize(size_t(Q) * Q);
        f->mul_.resize(size_t(Q) * Q);
        f->neg_.resize(Q);
        f->inv_.resize(Q, 0);
        for (uint32_t a = 0; a < Q; ++a) {
            f->neg_[a] = f->neg_slow(flabel(a));
            for (uint32_t b = 0; b < Q; ++b) {
                f->add_[size_t(a) * Q + b] = f->add_slow(flabel(a), flabel(b));
                f->mul_[size_t(a) * Q + b] = f->mul_slow(flabel(a), flabel(b));
            }
        }
        for (uint32_t a = 1; a < Q; ++a)
            for (uint32_t b = 1; b < Q; ++b)
                if (f->mul_[size_t(a) * Q + b] == 1) {
                    f->inv_[a] = flabel(b);
                    break;
                }
        f->tables_ = true;
    }
    return f;
}

flabel Field::add_slow(flabel a, flabel b) const {
    if (nu_ == 1) return flabel((uint32_t(a) + b) % p_);
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < nu_; ++i) {
        out += (a % p_ + b % p_) % p_ * mult;
        a = flabel(a / p_);
        b = flabel(b / p_);
        mult *= p_;
    }
    return flabel(out);
}

flabel Field::neg_slow(flabel a) const {
    if (nu_ == 1) return flabel((p_ - a) % p_);
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < nu_; ++i) {
        out += (p_ - a % p_) % p_ * mult;
        a = flabel(a / p_);
        mult *= p_;
    }
    return flabel(out);
}

flabel Field::mul_slow(flabel a, flabel b) const {
    if (nu_ == 1) return flabel(uint32_t(a) * b % p_);
    auto da = digits(a), db = digits(b);
    auto prod = polymod(polymul_fp(da, db, p_), modulus_, p_);
    prod.resize(nu_, 0);
    return from_digits(prod);
}

flabel Field::inv(flabel a) const {
    if (a == 0) throw DivideByZero("inverse of zero field element");
    if (tables_) return inv_[a];
    // a^(q-2)
    return pow(a, q_ - 2);
}

flabel Field::pow(flabel a, uint64_t e) const {
    flabel r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

flabel Field::from_int(long long n) const {
    long long m = n % (long long)p_;
    if (m < 0) m += p_;
    return flabel(m);
}

std::vector<flabel> Field::digits(flabel a) const {
    std::vector<flabel> d(nu_);
    for (uint32_t i = 0; i < nu_; ++i) {
        d[i] = flabel(a % p_);
        a = flabel(a / p_);
    }
    return d;
}

flabel Field::from_digits(const std::vector<flabel>& d) const {
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < nu_; ++i) {
        out += (i < d.size() ? d[i] : 0) * mult;
        mult *= p_;
    }
    return flabel(out);
}

std::string Field::elem_str(flabel a) const {
    if (nu_ == 1) return std::to_string(a);
    auto d = digits(a);
    std::ostringstream os;
    bool first = true;
    for (int i = int(nu_) - 1; i >= 0; --i) {
        if (d[size_t(i)] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || d[size_t(i)] != 1) os << uint32_t(d[size_t(i)]);
        if (i >= 1) {
            if (d[size_t(i)] != 1) os << "*";
            os << "g";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

Poly Poly::constant(const Field* f, flabel c) {
    Poly r(f);
    if (c != 0) r.c_ = {c};
    return r;
}

Poly Poly::monomial(const Field* f, flabel c, int deg) {
    Poly r(f);
    if (c != 0) {
        r.c_.assign(size_t(deg) + 1, 0);
        r.c_.back() = c;
    }
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_field(f_, o.f_);
    Poly r(f_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = f_->add(coeff(int(i)), o.coeff(int(i)));
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = f_->neg(c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_field(f_, o.f_);
    Poly r(f_);
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = f_->add(r.c_[i + j], f_->mul(c_[i], o.c_[j]));
    }
    r.trim();
    return r;
}

Poly Poly::scaled(flabel c) const {
    Poly r(f_);
    if (c == 0) return r;
    r.c_ = c_;
    for (auto& x : r.c_) x = f_->mul(x, c);
    return r;
}

Poly Poly::shifted(int by) const {
    if (is_zero() || by == 0) return *this;
    Poly r(f_);
    r.c_.assign(c_.size() + size_t(by), 0);
    std::copy(c_.begin(), c_.end(), r.c_.begin() + by);
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    check_same_field(a.f_, b.f_);
    if (b.is_zero()) throw DivideByZero("polynomial division by zero");
    const Field* f = a.f_;
    Poly q(f), r = a;
    if (a.deg() < b.deg()) return {q, r};
    q.c_.assign(size_t(a.deg() - b.deg()) + 1, 0);
    const flabel blc_inv = f->inv(b.lc());
    while (!r.is_zero() && r.deg() >= b.deg()) {
        const int shift = r.deg() - b.deg();
        const flabel c = f->mul(r.lc(), blc_inv);
        q.c_[size_t(shift)] = c;
        for (int i = 0; i <= b.deg(); ++i)
            r.c_[size_t(i + shift)] = f->sub(r.c_[size_t(i + shift)], f->mul(c, b.c_[size_t(i)]));
        r.trim();
    }
    q.trim();
    return {q, r};
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = b;
        b = r;
    }
    return a.monic();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(f_->inv(lc()));
}

flabel Poly::eval(flabel x) const {
    flabel acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), c_[i]);
    return acc;
}

Poly Poly::derivative() const {
    Poly r(f_);
    if (deg() < 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) {
        flabel m = f_->from_int((long long)i);
        r.c_[i - 1] = f_->mul(c_[i], m);
    }
    r.trim();
    return r;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg(); i >= 0; --i) {
        flabel c = coeff(i);
        if (c == 0) continue;
        if (!first) os << "+";
        first = false;
        const bool unit = (c == 1);
        const bool ext = f_->nu() > 1;
        std::string cs = f_->elem_str(c);
        if (i == 0) {
            os << (ext && cs.find('+') != std::string::npos ? "(" + cs + ")" : cs);
        } else {
            if (!unit) {
                os << (ext && cs.find('+') != std::string::npos ? "(" + cs + ")" : cs) << "*";
            }
            os << "X";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (int i = a.deg(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

std::vector<Poly> all_polys_up_to_deg(const Field* f, int max_deg) {
    std::vector<Poly> out;
    uint64_t count = 1;
    for (int i = 0; i <= max_deg; ++i) count *= f->q();
    out.reserve(count);
    for (uint64_t code = 0; code < count; ++code) {
        std::vector<flabel> c(size_t(max_deg) + 1);
        uint64_t v = code;
        for (int i = 0; i <= max_deg; ++i) {
            c[size_t(i)] = flabel(v % f->q());
            v /= f->q();
        }
        out.emplace_back(f, std::move(c));
    }
    return out;
}

}  // namespace ffdioph
