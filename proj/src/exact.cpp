#include "ffdioph/exact.hpp"

namespace ffdioph {

BigInt bigpow(BigInt base, unsigned e) {
    BigInt r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Rat Rat::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(s), 1);
        return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ParseError("bad rational: " + s);
    }
}

}  // namespace ffdioph
