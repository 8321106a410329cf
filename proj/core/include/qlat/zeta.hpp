#pragma once

namespace qlat {

// Riemann zeta for real s > 1 by Euler-Maclaurin summation.
double zeta_em(double s);

struct ZetaProductResult {
    double partial_sum;   // sum_{N<=D} sigma_1(N) N^{-beta}
    double product;       // zeta(beta) zeta(beta-1)
    double tail_bound;    // bound on sum_{N>D} sigma_1(N) N^{-beta}
};

// beta > 2 required.
ZetaProductResult zeta_product(double beta, long cutoff);

// bound on sum_{n>D} n^{-beta} (integral majorization), beta > 1
double zeta_tail_bound(double beta, long D);

// bound on sum_{N>D} sigma_1(N) N^{-beta}, beta > 2
double sigma_tail_bound(double beta, long D);

}  // namespace qlat
