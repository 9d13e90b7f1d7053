#pragma once

#include <random>

#include "ffdioph/parse.hpp"

namespace th {

using namespace ffdioph;

inline FieldPtr F2() {
    static FieldPtr f = Field::make(2);
    return f;
}
inline FieldPtr F3() {
    static FieldPtr f = Field::make(3);
    return f;
}
inline FieldPtr F4() {
    static FieldPtr f = Field::make(2, 2, {1, 1, 1});
    return f;
}
inline FieldPtr F9() {
    static FieldPtr f = Field::make(3, 2, {1, 0, 1});
    return f;
}

/// Deterministic RNG independent of library state.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed) : gen(seed) {}
    uint64_t next() { return gen(); }
    uint32_t below(uint32_t n) { return uint32_t(gen() % n); }
};

inline Poly random_poly(const Field* f, int max_deg, Rng& rng) {
    std::vector<flabel> c(size_t(max_deg) + 1);
    for (auto& x : c) x = flabel(rng.below(f->q()));
    return Poly(f, std::move(c));
}

inline Laurent L(const Field* f, const std::string& s) { return parse_laurent(f, s); }
inline Poly P(const Field* f, const std::string& s) { return parse_poly(f, s); }

}  // namespace th
