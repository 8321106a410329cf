#include "qlat/arith.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace qlat {

std::vector<std::pair<long, int>> factorize(long n) {
    if (n <= 0) throw std::domain_error("factorize: n must be positive");
    std::vector<std::pair<long, int>> f;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            f.emplace_back(p, e);
        }
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

std::vector<long> prime_divisors(long n) {
    std::vector<long> ps;
    for (auto& [p, e] : factorize(n)) ps.push_back(p);
    return ps;
}

std::vector<long> divisors(long n) {
    std::vector<long> ds{1};
    for (auto& [p, e] : factorize(n)) {
        size_t m = ds.size();
        long pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < m; ++j) ds.push_back(ds[j] * pe);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

int moebius(long n) {
    int m = 1;
    for (auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        m = -m;
    }
    return m;
}

long euler_phi(long n) {
    long r = n;
    for (long p : prime_divisors(n)) r = r / p * (p - 1);
    return r;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

long valuation(long n, long p) {
    long v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

Int divisor_sigma(unsigned k, long n) {
    Int s = 0;
    for (long d : divisors(n)) s += ipow(d, k);
    return s;
}

Rat f_j(long j, long n) {
    Rat r = rpow(Rat(n), j);
    for (long p : prime_divisors(n)) r *= (Rat(1) - rpow(Rat(p), -j));
    return r;
}

namespace {

// Coefficients c_k of x/(e^x-1) = sum c_k x^k, obtained by inverting the
// series (e^x-1)/x = sum_{k>=0} x^k/(k+1)!.
std::vector<Rat> egf_inverse_coeffs(unsigned upto) {
    std::vector<Rat> a(upto + 1);  // (e^x-1)/x
    Rat fact = 1;
    for (unsigned k = 0; k <= upto; ++k) {
        fact *= (k + 1);
        a[k] = Rat(1) / fact;
    }
    std::vector<Rat> c(upto + 1);
    c[0] = 1;
    for (unsigned k = 1; k <= upto; ++k) {
        Rat s = 0;
        for (unsigned i = 1; i <= k; ++i) s += a[i] * c[k - i];
        c[k] = -s;
    }
    return c;
}

std::vector<Rat> g_cache;  // g_cache[k] = coefficient of x^k in x/(e^x-1)
std::mutex g_cache_mx;

Rat series_coeff(unsigned k) {
    std::lock_guard<std::mutex> lk(g_cache_mx);
    if (g_cache.size() <= k) {
        unsigned upto = std::max<unsigned>(k, 2 * (unsigned)g_cache.size() + 8);
        g_cache = egf_inverse_coeffs(upto);
    }
    return g_cache[k];
}

}  // namespace

Rat gamma_coeff(unsigned j) {
    if (j < 1) throw std::domain_error("gamma_coeff: j >= 1");
    return -series_coeff(2 * j);
}

Rat gamma_k(unsigned k) {
    if (k < 1) throw std::domain_error("gamma_k: k >= 1");
    if (k % 2) return 0;
    return gamma_coeff(k / 2);
}

Rat bernoulli_pos(unsigned j) {
    Rat g = gamma_coeff(j);
    Rat f = 1;
    for (unsigned i = 2; i <= 2 * j; ++i) f *= i;
    return (j % 2 ? -f : f) * g;
}

Rat lambda_k(unsigned k) {
    return (Rat(ipow(2, k)) - 1) * gamma_k(k);
}

}  // namespace qlat
