#include "ffdioph/parse.hpp"

#include <cctype>

#include "ffdioph/cfrac.hpp"

namespace ffdioph {

namespace {

/// Recursive-descent parser for sums of products of powers over the symbols
/// g (field generator), X (the Laurent variable, negative powers allowed) and
/// x / x1..x9 (map variables).  Values are MPolys with exact coefficients.
struct ExprParser {
    const Field* f;
    int d;
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    MPoly parse_expr() {
        MPoly acc = MPoly::zero(f, d);
        bool neg = false;
        if (peek() == '-')
            neg = eat('-');
        else if (peek() == '+')
            eat('+');
        MPoly t = parse_term();
        acc = neg ? acc - t : acc + t;
        for (;;) {
            if (eat('+')) {
                acc = acc + parse_term();
                continue;
            }
            if (eat('-')) {
                acc = acc - parse_term();
                continue;
            }
            return acc;
        }
    }

    MPoly parse_term() {
        MPoly acc = parse_factor();
        for (;;) {
            skip_ws();
            if (eat('*')) {
                acc = acc * parse_factor();
                continue;
            }
            return acc;
        }
    }

    int parse_int() {
        skip_ws();
        bool neg = eat('-');
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer at position " + std::to_string(pos));
        int v = std::stoi(std::string(s.substr(start, pos - start)));
        return neg ? -v : v;
    }

    MPoly parse_factor() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unexpected end of expression");
        MPoly base = MPoly::zero(f, d);
        const char c = s[pos];
        if (c == '(') {
            ++pos;
            base = parse_expr();
            if (!eat(')')) throw ParseError("missing )");
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            long long v = std::stoll(std::string(s.substr(start, pos - start)));
            base = MPoly::constant(f, d, Laurent::monomial(f, f->from_int(v), 0));
        } else if (c == 'g') {
            ++pos;
            if (f->nu() == 1) throw ParseError("generator g is only defined for extension fields");
            base = MPoly::constant(f, d, Laurent::monomial(f, flabel(f->p()), 0));
        } else if (c == 'X') {
            ++pos;
            base = MPoly::constant(f, d, Laurent::monomial(f, 1, -1));
        } else if (c == 'x') {
            ++pos;
            int var = 1;
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                size_t start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                var = std::stoi(std::string(s.substr(start, pos - start)));
            }
            if (var < 1 || var > d) throw ParseError("variable x" + std::to_string(var) + " out of range");
            base = MPoly::variable(f, d, var - 1);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'");
        }
        skip_ws();
        if (eat('^')) {
            int e = parse_int();
            if (e < 0) {
                // negative powers only of the Laurent monomials (X^-n etc.)
                Laurent cl = base.constant_term();
                if (base.total_deg() != 0 || cl.is_exactly_zero() ||
                    cl.window_start() != cl.window_end())
                    throw ParseError("negative exponent only allowed on Laurent monomials");
                Laurent v = Laurent::one(f);
                for (int i = 0; i < -e; ++i) v = v * cl;
                return MPoly::constant(f, d, v.inv(0));
            }
            MPoly r = MPoly::constant(f, d, Laurent::one(f));
            for (int i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }
};

MPoly parse_expression(const Field* f, int d, std::string_view s) {
    ExprParser p{f, d, s};
    MPoly r = p.parse_expr();
    p.skip_ws();
    if (p.pos != s.size()) throw ParseError("trailing input at position " + std::to_string(p.pos));
    return r;
}

}  // namespace

FieldPtr parse_field_spec(const std::string& s) {
    auto caret = s.find('^');
    if (caret == std::string::npos) {
        try {
            return Field::make(uint32_t(std::stoul(s)));
        } catch (const std::invalid_argument&) {
            throw ParseError("bad field spec: " + s);
        }
    }
    auto colon = s.find(':');
    if (colon == std::string::npos) throw ParseError("extension field spec needs :modulus");
    const uint32_t p = uint32_t(std::stoul(s.substr(0, caret)));
    const uint32_t nu = uint32_t(std::stoul(s.substr(caret + 1, colon - caret - 1)));
    // parse the modulus as a polynomial in g over F_p
    auto fp = Field::make(p);
    Poly mod = Poly::zero(fp.get());
    {
        // reuse the expression parser with g acting as the variable X
        std::string body = s.substr(colon + 1);
        for (auto& ch : body)
            if (ch == 'g') ch = 'X';
        mod = parse_poly(fp.get(), body);
    }
    std::vector<flabel> coeffs(mod.coeffs().begin(), mod.coeffs().end());
    auto out = Field::make(p, nu, coeffs);
    // keep the prime field alive only for parsing; out owns everything it needs
    return out;
}

flabel parse_elem(const Field* f, const std::string& s) {
    MPoly m = parse_expression(f, 0, s);
    Laurent c = m.constant_term();
    if (c.is_exactly_zero()) return 0;
    if (c.valuation() != 0 || c.window_end() != 0) throw ParseError("not a field element: " + s);
    return c.coeff(0);
}

Poly parse_poly(const Field* f, const std::string& s) {
    MPoly m = parse_expression(f, 0, s);
    Laurent c = m.constant_term();
    if (c.is_exactly_zero()) return Poly::zero(f);
    if (c.window_end() > 0) throw ParseError("negative powers of X in a polynomial: " + s);
    return c.polynomial_part();
}

Laurent parse_laurent(const Field* f, const std::string& s) {
    // split a trailing +O(X^-N) marker
    std::string body = s;
    int prec = 0;
    bool ball = false;
    auto opos = s.find("O(");
    if (opos != std::string::npos) {
        auto close = s.find(')', opos);
        if (close == std::string::npos) throw ParseError("unterminated O( marker");
        std::string inner = s.substr(opos + 2, close - opos - 2);
        if (inner.rfind("X^", 0) != 0) throw ParseError("O marker must be O(X^-N)");
        const int nexp = std::stoi(inner.substr(2));
        if (nexp > 0) throw ParseError("O marker must have a negative exponent");
        prec = -nexp - 1;
        ball = true;
        body = s.substr(0, opos);
        while (!body.empty() && (body.back() == '+' || std::isspace((unsigned char)body.back())))
            body.pop_back();
        if (body.empty()) return Laurent::unknown(f, prec);
    }
    MPoly m = parse_expression(f, 0, body);
    Laurent v = m.constant_term();
    return ball ? v.as_ball(prec) : v;
}

Laurent parse_point(const Field* f, const std::string& s, int prec) {
    if (s.rfind("periodic:", 0) == 0) {
        std::string body = s.substr(9);
        if (body.size() < 2 || body.front() != '[' || body.back() != ']')
            throw ParseError("periodic constructor expects [a1,a2,...]");
        body = body.substr(1, body.size() - 2);
        std::vector<Poly> quotients;
        size_t start = 0;
        while (start <= body.size()) {
            auto comma = body.find(',', start);
            std::string piece =
                comma == std::string::npos ? body.substr(start) : body.substr(start, comma - start);
            if (!piece.empty()) quotients.push_back(parse_poly(f, piece));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return make_periodic(quotients, prec);
    }
    if (s.rfind("liouville:", 0) == 0) {
        return make_liouville(f, std::stoi(s.substr(10)), prec);
    }
    if (s.rfind("rational:", 0) == 0) {
        std::string body = s.substr(9);
        auto slash = body.find('/');
        if (slash == std::string::npos) return Laurent::from_poly(parse_poly(f, body));
        Laurent num = Laurent::from_poly(parse_poly(f, body.substr(0, slash)));
        Laurent den = Laurent::from_poly(parse_poly(f, body.substr(slash + 1)));
        return num * den.inv(prec);
    }
    return parse_laurent(f, s);
}

MPoly parse_mpoly(const Field* f, int d, const std::string& s) { return parse_expression(f, d, s); }

PolyMap parse_polymap(const Field* f, int d, const std::string& s) {
    PolyMap pm;
    pm.d = d;
    size_t start = 0;
    for (;;) {
        auto semi = s.find(';', start);
        std::string piece = semi == std::string::npos ? s.substr(start) : s.substr(start, semi - start);
        pm.components.push_back(parse_expression(f, d, piece));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    pm.n = int(pm.components.size());
    return pm;
}

}  // namespace ffdioph
