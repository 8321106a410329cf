#pragma once

#include <vector>
#include "qlat/rat.hpp"

namespace qlat {

std::vector<long> divisors(long n);
std::vector<std::pair<long, int>> factorize(long n);
std::vector<long> prime_divisors(long n);
int moebius(long n);
long euler_phi(long n);
bool is_prime(long n);
long valuation(long n, long p);  // exponent of p in n

// sum of d^k over divisors d of n
Int divisor_sigma(unsigned k, long n);

// f_j(n) = sum_{d|n} mu(d) (n/d)^j = n^j prod_{p|n} (1 - p^{-j}); j may be <= 0
Rat f_j(long j, long n);

// gamma_{2j} from x/(e^x - 1) = 1 - x/2 - sum_{j>=1} gamma_{2j} x^{2j};
// odd-index gamma_k vanish.  bernoulli_pos(j) = (-1)^j (2j)! gamma_{2j} > 0.
Rat gamma_coeff(unsigned j);
Rat gamma_k(unsigned k);  // gamma_k for any k >= 1 (0 when k odd)
Rat bernoulli_pos(unsigned j);

// lambda_k = P_k(0) = (2^k - 1) gamma_k
Rat lambda_k(unsigned k);

}  // namespace qlat
