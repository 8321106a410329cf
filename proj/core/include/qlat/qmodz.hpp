#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include "qlat/rat.hpp"

namespace qlat {

// Element of Q/Z as a reduced fraction a/b, 0 <= a < b, gcd(a,b) = 1.
struct QModZ {
    long a = 0;
    long b = 1;

    QModZ() = default;
    QModZ(long num, long denom) {
        if (denom == 0) throw std::domain_error("QModZ: zero denominator");
        if (denom < 0) { num = -num; denom = -denom; }
        num %= denom;
        if (num < 0) num += denom;
        long g = lgcd(num, denom);
        a = num / g;
        b = denom / g;
    }
    explicit QModZ(const Rat& r)
        : QModZ((long)num(r).convert_to<long long>(), (long)den(r).convert_to<long long>()) {}

    bool is_zero() const { return a == 0; }
    long order() const { return b; }  // additive order in Q/Z

    friend QModZ operator+(const QModZ& x, const QModZ& y) {
        long l = llcm(x.b, y.b);
        return QModZ(x.a * (l / x.b) + y.a * (l / y.b), l);
    }
    friend QModZ operator-(const QModZ& x) { return QModZ(-x.a, x.b); }
    friend QModZ operator-(const QModZ& x, const QModZ& y) { return x + (-y); }
    friend QModZ operator*(long k, const QModZ& x) { return QModZ(k * x.a, x.b); }

    friend auto operator<=>(const QModZ&, const QModZ&) = default;

    Rat to_rat() const { return Rat(a, b); }
    std::string str() const { return std::to_string(a) + "/" + std::to_string(b); }

    // the g solutions s of g*s = *this in Q/Z
    std::vector<QModZ> divide(long g) const {
        std::vector<QModZ> out;
        out.reserve(g);
        for (long t = 0; t < g; ++t) out.push_back(QModZ(a + t * b, g * b));
        return out;
    }
};

}  // namespace qlat
