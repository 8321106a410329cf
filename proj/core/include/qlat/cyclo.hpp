#pragma once

#include <complex>
#include <vector>
#include "qlat/poly.hpp"
#include "qlat/qmodz.hpp"
#include "qlat/rat.hpp"

namespace qlat {

// N-th cyclotomic polynomial (cached).
const RPoly& cyclotomic_poly(long N);

// Element of Q(zeta_N), stored reduced mod the N-th cyclotomic polynomial.
// Coefficient vector has size deg Phi_N = phi(N); coeffs[i] multiplies zeta_N^i.
class Cyclo {
public:
    Cyclo() : level_(1), coeffs_(1, Rat(0)) {}
    Cyclo(long v) : level_(1), coeffs_(1, Rat(v)) {}
    Cyclo(const Rat& v) : level_(1), coeffs_(1, v) {}
    // polynomial in zeta_N with arbitrary exponents (reduced here)
    Cyclo(long N, const std::vector<std::pair<long, Rat>>& terms);

    static Cyclo zeta_pow(long N, long e);  // zeta_N^e

    long level() const { return level_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const;  // requires is_rational()

    // re-express in Q(zeta_M), N | M
    Cyclo promoted(long M) const;
    // drop to the smallest level actually needed? (not needed; equality promotes)

    Cyclo galois(long k) const;  // zeta_N -> zeta_N^k, gcd(k, N) = 1
    Cyclo conj() const { return galois(level_ - 1 == 0 ? 1 : level_ - 1); }
    Cyclo inverse() const;

    std::complex<double> embed(long k = 1) const;  // zeta_N -> exp(2 pi i k / N)

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Rat& s, const Cyclo& a);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b);
    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }
    Cyclo& operator+=(const Cyclo& b) { *this = *this + b; return *this; }
    Cyclo& operator-=(const Cyclo& b) { *this = *this - b; return *this; }
    Cyclo& operator*=(const Cyclo& b) { *this = *this * b; return *this; }

    std::string str() const;

private:
    Cyclo(long N, std::vector<Rat> reduced) : level_(N), coeffs_(std::move(reduced)) {}
    static Cyclo from_poly(long N, const RPoly& p);  // reduces mod Phi_N
    long level_;
    std::vector<Rat> coeffs_;
};

// exact zeta_b^a for r = a/b
Cyclo root_of_unity(const QModZ& r);

// numeric value of r under zeta_N -> exp(2 pi i k/N); k must be a unit mod the
// level of c (checked).
std::complex<double> numeric_embed(const Cyclo& c, long k);

}  // namespace qlat
