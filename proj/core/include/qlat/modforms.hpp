#pragma once

#include <array>
#include <complex>
#include <vector>
#include "qlat/lat2.hpp"
#include "qlat/poly.hpp"
#include "qlat/qexp.hpp"
#include "qlat/qlat1.hpp"
#include "qlat/qmodz.hpp"

namespace qlat {

using cplx = std::complex<double>;

// --- exact q-series layer (level 1, ram 1) ---

// e_k = (2^k/k!) B_{k/2} + (-1)^{k/2} (2^{k+1}/(k-1)!) sum sigma_{k-1}(n) q^n
QExpansion ek_series(unsigned k, long order);

// (1/3)(m-3)(4m^2-1) e_{2m} = sum_{r=2}^{m-2} (2r-1)(2m-2r-1) e_{2r} e_{2m-2r}
CheckReport wealg_check(unsigned m, long order);

struct WeierstrassData {
    QExpansion g2, g3, delta, j, c;  // j and c have a simple pole at the cusp
};
WeierstrassData weierstrass_data(long order);

// recursion seed nu_2 := e_2; returns nu_{2k} as a q-series
QExpansion nu_series(unsigned twok, long order);

// e_{2m} as a polynomial in e_4, e_6: map (alpha,beta) -> coefficient of
// e_4^alpha e_6^beta, with 4 alpha + 6 beta = 2m
std::vector<std::tuple<unsigned, unsigned, Rat>> e46_poly(unsigned m);

// P_n: polynomial in X whose coefficients are polynomials in j
using JPoly = Poly<RPoly>;
JPoly pn_poly(unsigned n);

// --- numeric layer ---

std::vector<cplx> tau_samples();  // fixed generic sample points

cplx ek_eval(unsigned k, cplx tau);             // q-series evaluation
cplx nu_eval(unsigned twok, cplx tau);
cplx j_eval(cplx tau);
cplx c_eval(cplx tau);

cplx wp_numeric(cplx z, cplx tau);              // Weierstrass P, q-series form
cplx wp_lattice_oracle(cplx z, cplx tau, long box);  // direct truncated sum

// f_v(tau) = c(tau) pi^{-2} P(v1 tau + v2)
cplx fricke_numeric(const Rat& v1, const Rat& v2, cplx tau);

// level-N residue matrix acting on torsion labels
struct LevelRho {
    long N = 1;
    std::array<long, 4> r{1, 0, 0, 1};  // row-major
};

// phi(a) = rho_1(a) - tau rho_2(a); returns the two fractional parts
std::pair<Rat, Rat> phi_label(const QModZ& a1, const QModZ& a2, const LevelRho& rho);

cplx Xa_numeric(const QModZ& a1, const QModZ& a2, const LevelRho& rho, cplx tau);
// absolutely convergent truncated lattice sum (k >= 2), with series tail terms
cplx E2ka_numeric(unsigned k, const QModZ& a1, const QModZ& a2, const LevelRho& rho,
                  cplx tau);
// same value through the weight recursion from Xa (cross-check path)
cplx E2ka_recursion(unsigned k, const QModZ& a1, const QModZ& a2, const LevelRho& rho,
                    cplx tau);

// eta-cocycle value of a sublattice; n e_2(n tau) - e_2(tau) for diagonal
// shape, transported by a unimodular slash for the general case
cplx mu_L_numeric(const Sublattice& L, cplx tau);
QExpansion mu_L_series(long n, long order);  // diagonal ratio n

// SL2(Z) diagonalization M = U^{-1} diag(d1,d2) V^{-1}, d1 | d2
struct SmithSL2 {
    std::array<long, 4> U, V;  // row-major, det +1
    long d1, d2;
};
SmithSL2 smith_sl2(std::array<long, 4> M);

struct NumCheckReport {
    bool ok = true;
    double max_dev = 0;
    std::string witness;
};

// sum_{Na=0} X_a = N^2 mu_{L(rho)} at every sample tau
NumCheckReport div11_check(long N, const LevelRho& rho, double tol);

// weight-2k division identity; tests the two slash readings of the stated
// coefficient and a uniform corrected multiplier (see decisions log)
struct OmegaDivisionReport {
    double dev_a = 0;        // Det^{k/2} factor included in the slash
    double dev_b = 0;        // Det factor omitted
    double dev_corrected = 0;  // N^{2k} Det(m)^{-(k+1)} j^{-2k} multiplier
    bool a_ok = false, b_ok = false, corrected_ok = false;
    std::string witness;
};
OmegaDivisionReport omega_division_check(long N, unsigned k, double tol);

}  // namespace qlat
