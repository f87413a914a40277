#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace mwtate {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

inline BigInt gcd(BigInt a, BigInt b)
{
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline BigInt pow2(unsigned e) { return BigInt(1) << e; }

inline BigInt ipow(const BigInt& base, unsigned e)
{
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i)
        r *= base;
    return r;
}

/// Dyadic valuation of a nonzero integer; 0 maps to 0.
inline unsigned v2(const BigInt& a)
{
    if (a == 0)
        return 0;
    return static_cast<unsigned>(boost::multiprecision::lsb(abs(a)));
}

/// Throws std::overflow_error when the value does not fit.
std::int64_t to_i64(const BigInt& a);

inline std::string to_string(const BigInt& a) { return a.str(); }

}  // namespace mwtate
