#pragma once

#include <vector>
#include <stdexcept>
#include "qlat/rat.hpp"

namespace qlat {

// Dense univariate polynomial over a commutative ring T (T = Rat mostly).
template <class T>
struct Poly {
    std::vector<T> c;  // c[i] multiplies x^i; normalized: no trailing zeros

    Poly() = default;
    Poly(long v) {
        if (v != 0) c.push_back(T(v));
    }
    explicit Poly(std::vector<T> cc) : c(std::move(cc)) { trim(); }
    static Poly constant(const T& t) { return Poly(std::vector<T>{t}); }
    static Poly x() { return Poly(std::vector<T>{T(0), T(1)}); }

    void trim() {
        while (!c.empty() && c.back() == T(0)) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long deg() const { return (long)c.size() - 1; }  // -1 for zero
    T coeff(size_t i) const { return i < c.size() ? c[i] : T(0); }
    T lead() const { return c.back(); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c.size(), b.c.size()), T(0));
        for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<T> r(std::max(a.c.size(), b.c.size()), T(0));
        for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
        for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<T> r(a.c.size() + b.c.size() - 1, T(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        return Poly(std::move(r));
    }
    friend Poly operator*(const T& s, const Poly& a) {
        std::vector<T> r = a.c;
        for (auto& v : r) v = s * v;
        return Poly(std::move(r));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }

    Poly derivative() const {
        if (c.size() <= 1) return Poly();
        std::vector<T> r(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i) r[i - 1] = T((long)i) * c[i];
        return Poly(std::move(r));
    }

    template <class U>
    U eval(const U& x) const {
        U r(0);
        for (size_t i = c.size(); i-- > 0;) r = r * x + U(c[i]);
        return r;
    }
};

// Division with remainder; requires invertible leading coefficient (field T).
template <class T>
std::pair<Poly<T>, Poly<T>> poly_divmod(const Poly<T>& a, const Poly<T>& b) {
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero");
    Poly<T> r = a, q;
    q.c.assign(a.c.size(), T(0));
    T inv = T(1) / b.lead();
    while (!r.is_zero() && r.deg() >= b.deg()) {
        long shift = r.deg() - b.deg();
        T f = r.lead() * inv;
        q.c[shift] = q.c[shift] + f;
        for (size_t i = 0; i < b.c.size(); ++i)
            r.c[shift + i] -= f * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

template <class T>
Poly<T> poly_mod(const Poly<T>& a, const Poly<T>& b) {
    return poly_divmod(a, b).second;
}

// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic.
template <class T>
std::tuple<Poly<T>, Poly<T>, Poly<T>> poly_ext_gcd(const Poly<T>& a, const Poly<T>& b) {
    Poly<T> r0 = a, r1 = b;
    Poly<T> s0 = Poly<T>::constant(T(1)), s1;
    Poly<T> t0, t1 = Poly<T>::constant(T(1));
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        r0 = r1; r1 = r;
        Poly<T> s = s0 - q * s1; s0 = s1; s1 = s;
        Poly<T> t = t0 - q * t1; t0 = t1; t1 = t;
    }
    if (!r0.is_zero()) {
        T inv = T(1) / r0.lead();
        r0 = inv * r0; s0 = inv * s0; t0 = inv * t0;
    }
    return {r0, s0, t0};
}

using RPoly = Poly<Rat>;

// Rational function p/q over Rat, normalized (monic denominator, gcd removed).
struct RatFunc {
    RPoly p, q;

    RatFunc() : p(), q(RPoly::constant(1)) {}
    RatFunc(RPoly pp, RPoly qq) : p(std::move(pp)), q(std::move(qq)) { normalize(); }
    static RatFunc constant(const Rat& r) { return RatFunc(RPoly::constant(r), RPoly::constant(1)); }
    static RatFunc x() { return RatFunc(RPoly::x(), RPoly::constant(1)); }

    void normalize() {
        if (q.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (p.is_zero()) { q = RPoly::constant(1); return; }
        auto [g, u, v] = poly_ext_gcd(p, q);
        if (g.deg() > 0) {
            p = poly_divmod(p, g).first;
            q = poly_divmod(q, g).first;
        }
        Rat inv = Rat(1) / q.lead();
        p = inv * p;
        q = inv * q;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.p * b.q + b.p * a.q, a.q * b.q);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.p * b.q - b.p * a.q, a.q * b.q);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.p * b.p, a.q * b.q);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.p.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(a.p * b.q, a.q * b.p);
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.p == b.p && a.q == b.q;
    }
};

}  // namespace qlat
