#pragma once

#include <complex>
#include <vector>
#include "qlat/cyclo.hpp"

namespace qlat {

// Truncated Laurent series in q^{1/ram} with Cyclo coefficients.
// Exponents are integers in units of 1/ram; coefficients are stored for
// exponents lo..hi inclusive and are exact; nothing is known beyond hi.
class QExpansion {
public:
    QExpansion() : ram_(1), lo_(0), hi_(-1) {}  // zero series, empty knowledge

    static QExpansion zero(long ram, long hi) {
        QExpansion f;
        f.ram_ = ram;
        f.lo_ = 0;
        f.hi_ = hi;
        return f;
    }
    // coefficients for consecutive exponents starting at lo (units 1/ram)
    QExpansion(long ram, long lo, std::vector<Cyclo> coeffs, long hi = -1)
        : ram_(ram), lo_(lo), c_(std::move(coeffs)) {
        hi_ = (hi == -1) ? lo_ + (long)c_.size() - 1 : hi;
        if ((long)c_.size() < hi_ - lo_ + 1) c_.resize(hi_ - lo_ + 1, Cyclo(0));
        normalize();
    }
    static QExpansion monomial(long ram, long e, const Cyclo& v, long hi) {
        return QExpansion(ram, e, {v}, hi);
    }

    long ram() const { return ram_; }
    long trunc() const { return hi_; }          // in units of 1/ram
    bool known_zero() const { return c_.empty(); }
    long val() const;                            // exact valuation (units 1/ram)
    Cyclo coeff(long e) const {                  // coefficient of q^{e/ram}
        if (e > hi_) throw std::domain_error("QExpansion: beyond truncation");
        if (e < lo_ || e > lo_ + (long)c_.size() - 1) return Cyclo(0);
        return c_[e - lo_];
    }

    QExpansion with_ram(long newram) const;      // ram_ | newram
    QExpansion truncated(long newhi) const;

    friend QExpansion operator+(const QExpansion& a, const QExpansion& b);
    friend QExpansion operator-(const QExpansion& a, const QExpansion& b);
    friend QExpansion operator*(const QExpansion& a, const QExpansion& b);
    friend QExpansion operator*(const Cyclo& s, const QExpansion& a);
    friend QExpansion operator*(const Rat& s, const QExpansion& a);

    QExpansion inverse() const;                  // needs invertible leading coeff
    QExpansion pow(unsigned k) const;
    QExpansion subs_qn(long n) const;            // q -> q^n

    // equality of all coefficients up to the common truncation
    friend bool agree(const QExpansion& a, const QExpansion& b);
    // ... and up to the given order (units of 1/lcm-ram)
    friend bool agree_to(const QExpansion& a, const QExpansion& b, long order);

    // numeric evaluation at q (sums stored terms; ram must be 1)
    std::complex<double> eval_q(std::complex<double> q) const;

    std::string str(size_t max_terms = 12) const;

private:
    void normalize();
    long ram_;
    long lo_;
    long hi_;
    std::vector<Cyclo> c_;
};

}  // namespace qlat
