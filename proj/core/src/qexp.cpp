#include "qlat/qexp.hpp"

#include <sstream>

namespace qlat {

void QExpansion::normalize() {
    size_t k = 0;
    while (k < c_.size() && c_[k].is_zero()) ++k;
    if (k) {
        c_.erase(c_.begin(), c_.begin() + k);
        lo_ += (long)k;
    }
    while (!c_.empty() && c_.back().is_zero() && lo_ + (long)c_.size() - 1 > hi_)
        c_.pop_back();
    if (c_.empty()) lo_ = 0;
    if ((long)c_.size() > hi_ - lo_ + 1) c_.resize(hi_ - lo_ + 1);
}

long QExpansion::val() const {
    if (c_.empty()) throw std::domain_error("QExpansion: valuation of (truncation-)zero series");
    return lo_;
}

QExpansion QExpansion::with_ram(long newram) const {
    if (newram == ram_) return *this;
    if (newram % ram_ != 0) throw std::domain_error("QExpansion: bad ramification change");
    long k = newram / ram_;
    QExpansion f;
    f.ram_ = newram;
    f.lo_ = lo_ * k;
    f.hi_ = hi_ * k + (k - 1);  // nothing known strictly between scaled points
    f.c_.assign(c_.empty() ? 0 : (c_.size() - 1) * k + 1, Cyclo(0));
    for (size_t i = 0; i < c_.size(); ++i) f.c_[i * k] = c_[i];
    f.normalize();
    return f;
}

QExpansion QExpansion::truncated(long newhi) const {
    QExpansion f = *this;
    if (newhi < f.hi_) {
        f.hi_ = newhi;
        if ((long)f.c_.size() > f.hi_ - f.lo_ + 1)
            f.c_.resize(std::max<long>(0, f.hi_ - f.lo_ + 1));
        f.normalize();
    }
    return f;
}

namespace {
std::pair<QExpansion, QExpansion> common_ram(const QExpansion& a, const QExpansion& b) {
    long r = llcm(a.ram(), b.ram());
    return {a.with_ram(r), b.with_ram(r)};
}
}  // namespace

QExpansion operator+(const QExpansion& a, const QExpansion& b) {
    auto [x, y] = common_ram(a, b);
    long hi = std::min(x.trunc(), y.trunc());
    long lo = std::min(x.known_zero() ? hi : x.val(), y.known_zero() ? hi : y.val());
    std::vector<Cyclo> c(std::max<long>(0, hi - lo + 1), Cyclo(0));
    for (long e = lo; e <= hi; ++e) c[e - lo] = x.coeff(e) + y.coeff(e);
    return QExpansion(x.ram(), lo, std::move(c), hi);
}

QExpansion operator-(const QExpansion& a, const QExpansion& b) {
    return a + Rat(-1) * b;
}

QExpansion operator*(const QExpansion& a, const QExpansion& b) {
    auto [x, y] = common_ram(a, b);
    if (x.known_zero() || y.known_zero()) {
        long hi = std::min((x.known_zero() ? x.trunc() : x.val()) + y.trunc(),
                           (y.known_zero() ? y.trunc() : y.val()) + x.trunc());
        return QExpansion::zero(x.ram(), hi);
    }
    long lo = x.val() + y.val();
    long hi = std::min(x.val() + y.trunc(), y.val() + x.trunc());
    std::vector<Cyclo> c(std::max<long>(0, hi - lo + 1), Cyclo(0));
    for (long e1 = x.val(); e1 <= x.trunc(); ++e1) {
        Cyclo xe = x.coeff(e1);
        if (xe.is_zero()) continue;
        for (long e2 = y.val(); e2 <= y.trunc() && e1 + e2 <= hi; ++e2) {
            Cyclo ye = y.coeff(e2);
            if (ye.is_zero()) continue;
            c[e1 + e2 - lo] += xe * ye;
        }
    }
    return QExpansion(x.ram(), lo, std::move(c), hi);
}

QExpansion operator*(const Cyclo& s, const QExpansion& a) {
    QExpansion f = a;
    if (s.is_zero()) return QExpansion::zero(a.ram_, a.hi_);
    for (auto& v : f.c_) v = s * v;
    f.normalize();
    return f;
}

QExpansion operator*(const Rat& s, const QExpansion& a) { return Cyclo(s) * a; }

QExpansion QExpansion::inverse() const {
    if (known_zero()) throw std::domain_error("QExpansion: inverse of zero");
    long n = hi_ - lo_;  // relative working order
    Cyclo a0inv = c_[0].inverse();
    std::vector<Cyclo> inv(n + 1, Cyclo(0));
    inv[0] = a0inv;
    for (long k = 1; k <= n; ++k) {
        Cyclo s(0);
        for (long i = 1; i <= k; ++i) {
            if (i < (long)c_.size() && !c_[i].is_zero()) s += c_[i] * inv[k - i];
        }
        inv[k] = Rat(-1) * (a0inv * s);
    }
    return QExpansion(ram_, -lo_, std::move(inv), -lo_ + n);
}

QExpansion QExpansion::pow(unsigned k) const {
    if (k == 0) return QExpansion(ram_, 0, {Cyclo(1)}, hi_);
    QExpansion r = *this;
    for (unsigned i = 1; i < k; ++i) r = r * *this;
    return r;
}

QExpansion QExpansion::subs_qn(long n) const {
    QExpansion f;
    f.ram_ = ram_;
    f.lo_ = lo_ * n;
    f.hi_ = hi_ * n + (n - 1);
    f.c_.assign(c_.empty() ? 0 : (c_.size() - 1) * n + 1, Cyclo(0));
    for (size_t i = 0; i < c_.size(); ++i) f.c_[i * n] = c_[i];
    f.normalize();
    return f;
}

bool agree(const QExpansion& a, const QExpansion& b) {
    auto [x, y] = common_ram(a, b);
    long hi = std::min(x.trunc(), y.trunc());
    long lo = std::min(x.known_zero() ? hi : x.val(), y.known_zero() ? hi : y.val());
    for (long e = lo; e <= hi; ++e)
        if (!(x.coeff(e) == y.coeff(e))) return false;
    return true;
}

bool agree_to(const QExpansion& a, const QExpansion& b, long order) {
    auto [x, y] = common_ram(a, b);
    long hi = std::min(x.trunc(), y.trunc());
    if (hi < order) throw std::domain_error("agree_to: order beyond truncation");
    return agree(x.truncated(order), y.truncated(order));
}

std::complex<double> QExpansion::eval_q(std::complex<double> q) const {
    std::complex<double> sum = 0;
    if (c_.empty()) return sum;
    std::complex<double> qr = (ram_ == 1) ? q : std::pow(q, 1.0 / (double)ram_);
    for (long e = lo_; e <= lo_ + (long)c_.size() - 1; ++e) {
        const Cyclo& v = c_[e - lo_];
        if (v.is_zero()) continue;
        sum += v.embed(1) * std::pow(qr, (double)e);
    }
    return sum;
}

std::string QExpansion::str(size_t max_terms) const {
    std::ostringstream os;
    size_t shown = 0;
    for (long e = lo_; e <= lo_ + (long)c_.size() - 1 && shown < max_terms; ++e) {
        const Cyclo& v = c_[e - lo_];
        if (v.is_zero()) continue;
        if (shown) os << " + ";
        os << "(" << v.str() << ")";
        if (e != 0) {
            os << "*q";
            if (ram_ != 1) os << "^(" << e << "/" << ram_ << ")";
            else if (e != 1) os << "^" << e;
        }
        ++shown;
    }
    if (!shown) os << "0";
    os << " + O(q^(" << (hi_ + 1) << "/" << ram_ << "))";
    return os.str();
}

}  // namespace qlat
