#pragma once

#include <string>

#include "ffdioph/calculus.hpp"

namespace ffdioph {

/// "3" or "2^2:g^2+g+1" (characteristic, optional extension degree and modulus).
FieldPtr parse_field_spec(const std::string& s);

/// Field element: decimal digits for prime fields, polynomial in g otherwise.
flabel parse_elem(const Field* f, const std::string& s);

/// Polynomial in X over F_q, e.g. "X^2+2" or "(g+1)*X^3+g*X".
Poly parse_poly(const Field* f, const std::string& s);

/// Laurent value, e.g. "X^2+1+X^-1" with optional "+O(X^-9)" tail marker.
Laurent parse_laurent(const Field* f, const std::string& s);

/// Element constructor syntax used by the CLI: a Laurent literal, or
/// "periodic:[X,X^2]" / "liouville:3" (built at precision `prec`), or
/// "rational:<num>/<den>" expanded to `prec`.
Laurent parse_point(const Field* f, const std::string& s, int prec);

/// Multivariate polynomial in x (= x1) .. xd with Laurent-polynomial
/// coefficients, e.g. "x1^2*x2 + 2*x1" or "X*x^2".
MPoly parse_mpoly(const Field* f, int d, const std::string& s);

/// Semicolon-separated component list, e.g. "x;x^2".
PolyMap parse_polymap(const Field* f, int d, const std::string& s);

}  // namespace ffdioph
