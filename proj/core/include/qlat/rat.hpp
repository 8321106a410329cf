#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qlat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int den(const Rat& x) { return boost::multiprecision::denominator(x); }

inline Int ipow(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// x^e for integer e of either sign
inline Rat rpow(const Rat& x, long e) {
    if (e >= 0) {
        Rat r(ipow(num(x), (unsigned long)e), ipow(den(x), (unsigned long)e));
        return r;
    }
    if (x == 0) throw std::domain_error("rpow: 0 to negative power");
    return Rat(ipow(den(x), (unsigned long)(-e)), ipow(num(x), (unsigned long)(-e)));
}

inline long lgcd(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { long t = a % b; a = b; b = t; }
    return a;
}

inline long llcm(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return a / lgcd(a, b) * b;
}

// true iff a/b is an integer
inline bool rat_is_int(const Rat& x) { return den(x) == 1; }

inline double to_double(const Rat& x) {
    return x.convert_to<double>();
}

inline std::string rat_str(const Rat& x) {
    std::string s = num(x).str();
    if (den(x) != 1) s += "/" + den(x).str();
    return s;
}

}  // namespace qlat
