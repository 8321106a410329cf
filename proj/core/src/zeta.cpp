#include "qlat/zeta.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>
#include "qlat/arith.hpp"

namespace qlat {

double zeta_em(double s) {
    if (s <= 1.0) throw std::domain_error("zeta_em: s > 1 required");
    const long M = 64;
    double sum = 0;
    for (long n = 1; n < M; ++n) sum += std::pow((double)n, -s);
    // Euler-Maclaurin correction terms at M
    double Ms = std::pow((double)M, -s);
    sum += (double)M * Ms / (s - 1.0);  // M^{1-s}/(s-1)
    sum += 0.5 * Ms;
    // Bernoulli terms: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * M^{-s-2k+1}
    double b2[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66};
    double rising = s;  // s(s+1)...(s+2k-2), starts with k=1 term = s
    double mpow = Ms / (double)M;
    double fact = 2.0;
    for (int k = 1; k <= 5; ++k) {
        sum += b2[k - 1] / fact * rising * mpow;
        rising *= (s + 2 * k - 1) * (s + 2 * k);
        mpow /= (double)M * (double)M;
        fact *= (2 * k + 1) * (2 * k + 2);
    }
    return sum;
}

double zeta_tail_bound(double beta, long D) {
    if (beta <= 1.0) throw std::domain_error("zeta_tail_bound: beta > 1 required");
    // sum_{n>D} n^{-beta} <= int_D^inf x^{-beta} dx = D^{1-beta}/(beta-1)
    return std::pow((double)D, 1.0 - beta) / (beta - 1.0);
}

double sigma_tail_bound(double beta, long D) {
    if (beta <= 2.0) throw std::domain_error("sigma_tail_bound: beta > 2 required");
    // sigma_1(N) <= N (1 + ln N), so the tail is at most
    // int_D^inf x^{1-beta}(1+ln x) dx
    //   = D^{2-beta} [ (1+ln D)/(beta-2) + 1/(beta-2)^2 ]
    double a = beta - 2.0;
    return std::pow((double)D, -a) * ((1.0 + std::log((double)D)) / a + 1.0 / (a * a));
}

ZetaProductResult zeta_product(double beta, long cutoff) {
    if (beta <= 2.0) throw std::domain_error("zeta_product: beta > 2 required");
    if (cutoff < 1) throw std::domain_error("zeta_product: cutoff >= 1");
    // sigma_1 by sieve
    std::vector<double> s1(cutoff + 1, 0.0);
    for (long d = 1; d <= cutoff; ++d)
        for (long m = d; m <= cutoff; m += d) s1[m] += (double)d;
    double sum = 0;
    for (long n = cutoff; n >= 1; --n) sum += s1[n] * std::pow((double)n, -beta);
    ZetaProductResult r;
    r.partial_sum = sum;
    r.product = zeta_em(beta) * zeta_em(beta - 1.0);
    r.tail_bound = sigma_tail_bound(beta, cutoff);
    return r;
}

}  // namespace qlat
