#include "qlat/cyclo.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include "qlat/arith.hpp"

namespace qlat {

namespace {
std::map<long, RPoly> phi_cache;
std::mutex phi_mx;
}  // namespace

const RPoly& cyclotomic_poly(long N) {
    std::lock_guard<std::mutex> lk(phi_mx);
    auto it = phi_cache.find(N);
    if (it != phi_cache.end()) return it->second;
    // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d
    std::vector<Rat> xn(N + 1, Rat(0));
    xn[0] = -1;
    xn[N] = 1;
    RPoly p{std::vector<Rat>(xn)};
    for (long d : divisors(N)) {
        if (d == N) continue;
        RPoly phd;
        auto jt = phi_cache.find(d);
        if (jt != phi_cache.end()) {
            phd = jt->second;
        } else {
            // recurse without re-locking: compute directly
            std::vector<Rat> xd(d + 1, Rat(0));
            xd[0] = -1;
            xd[d] = 1;
            RPoly pd{std::vector<Rat>(xd)};
            for (long e : divisors(d)) {
                if (e == d) continue;
                pd = poly_divmod(pd, phi_cache.at(e)).first;  // e < d already cached
            }
            phi_cache[d] = pd;
            phd = pd;
        }
        p = poly_divmod(p, phd).first;
    }
    return phi_cache[N] = p;
}

Cyclo Cyclo::from_poly(long N, const RPoly& p) {
    const RPoly& phi = cyclotomic_poly(N);
    RPoly r = (p.deg() >= phi.deg()) ? poly_mod(p, phi) : p;
    std::vector<Rat> c(phi.deg(), Rat(0));
    for (size_t i = 0; i < r.c.size(); ++i) c[i] = r.c[i];
    return Cyclo(N, std::move(c));
}

Cyclo::Cyclo(long N, const std::vector<std::pair<long, Rat>>& terms) : level_(N) {
    std::vector<Rat> raw(N, Rat(0));
    for (auto& [e, v] : terms) {
        long ee = e % N;
        if (ee < 0) ee += N;
        raw[ee] += v;
    }
    *this = from_poly(N, RPoly(std::move(raw)));
}

Cyclo Cyclo::zeta_pow(long N, long e) {
    return Cyclo(N, std::vector<std::pair<long, Rat>>{{e, Rat(1)}});
}

bool Cyclo::is_zero() const {
    for (auto& v : coeffs_)
        if (v != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rat Cyclo::rational_value() const {
    if (!is_rational()) throw std::domain_error("Cyclo: not rational");
    return coeffs_[0];
}

Cyclo Cyclo::promoted(long M) const {
    if (M == level_) return *this;
    if (M % level_ != 0) throw std::domain_error("Cyclo: bad promotion level");
    long k = M / level_;
    std::vector<Rat> raw(M, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) raw[(i * k) % M] += coeffs_[i];
    return from_poly(M, RPoly(std::move(raw)));
}

Cyclo Cyclo::galois(long k) const {
    long N = level_;
    k %= N;
    if (k < 0) k += N;
    if (lgcd(k, N) != 1) throw std::domain_error("Cyclo::galois: k not a unit");
    std::vector<Rat> raw(N, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) raw[(i * k) % N] += coeffs_[i];
    return from_poly(N, RPoly(std::move(raw)));
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("Cyclo: division by zero");
    const RPoly& phi = cyclotomic_poly(level_);
    RPoly p{std::vector<Rat>(coeffs_)};
    auto [g, u, v] = poly_ext_gcd(p, phi);
    if (g.deg() != 0) throw std::logic_error("Cyclo: gcd with cyclotomic not constant");
    // u * p == g (mod phi), g constant (monic => 1)
    return from_poly(level_, u);
}

std::complex<double> Cyclo::embed(long k) const {
    using std::numbers::pi;
    std::complex<double> z = 0;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        double ang = 2.0 * pi * (double)((long)i * k % level_) / (double)level_;
        z += to_double(coeffs_[i]) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return z;
}

namespace {
std::pair<Cyclo, Cyclo> common_level(const Cyclo& a, const Cyclo& b) {
    long M = llcm(a.level(), b.level());
    return {a.promoted(M), b.promoted(M)};
}
}  // namespace

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = common_level(a, b);
    std::vector<Rat> c = x.coeffs();
    for (size_t i = 0; i < c.size(); ++i) c[i] += y.coeffs()[i];
    return Cyclo(x.level(), std::move(c));
}

Cyclo operator-(const Cyclo& a) { return Rat(-1) * a; }

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (Rat(-1) * b); }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = common_level(a, b);
    RPoly p{std::vector<Rat>(x.coeffs())};
    RPoly q{std::vector<Rat>(y.coeffs())};
    RPoly r = p * q;
    // reduce exponents >= N via x^N = 1 first to keep division small
    long N = x.level();
    std::vector<std::pair<long, Rat>> t;
    for (size_t i = 0; i < r.c.size(); ++i)
        if (r.c[i] != 0) t.emplace_back((long)i % N, r.c[i]);
    return Cyclo(N, t);
}

Cyclo operator*(const Rat& s, const Cyclo& a) {
    std::vector<std::pair<long, Rat>> t;
    for (size_t i = 0; i < a.coeffs().size(); ++i)
        if (a.coeffs()[i] != 0) t.emplace_back((long)i, s * a.coeffs()[i]);
    return Cyclo(a.level(), t);
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = common_level(a, b);
    return x * y.inverse();
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    auto [x, y] = common_level(a, b);
    return x.coeffs() == y.coeffs();
}

std::string Cyclo::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << rat_str(coeffs_[i]);
        if (i > 0) os << "*z" << level_ << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Cyclo root_of_unity(const QModZ& r) {
    return Cyclo::zeta_pow(r.b, r.a);
}

std::complex<double> numeric_embed(const Cyclo& c, long k) {
    if (lgcd(k, c.level()) != 1)
        throw std::domain_error("numeric_embed: k not coprime to level");
    return c.embed(k);
}

}  // namespace qlat
