#pragma once

#include <map>
#include <string>
#include <vector>
#include "qlat/bc.hpp"
#include "qlat/cyclo.hpp"
#include "qlat/poly.hpp"
#include "qlat/qmodz.hpp"

namespace qlat {

// 1-dimensional Q-lattice (scale*Z, phi), phi acting on level-N torsion as
// multiplication by the integer representative mult (a definite element of R).
struct QLattice1 {
    Rat scale = 1;
    long level = 1;
    long mult = 0;
};

bool commensurable_1d(const QLattice1& l1, const QLattice1& l2);

// Finitely supported function on the groupoid {(r, rho): r in Q*_+, r rho in R}.
// For fixed ratio r the rho-dependence is stored as an exact finite character
// sum rho -> sum_phi w_phi exp(2 pi i phi rho), phi in Q/Z; this determines the
// function at every finite level simultaneously.  Admissibility indicators
// ("den(r) divides rho") are part of the stored character sums.
class GFunc {
public:
    using Freqs = std::map<QModZ, Rat>;

    GFunc() = default;

    static GFunc delta_mu(long n);        // mu_n picture: supported at r = n
    static GFunc delta_e(const QModZ& r); // e(r) picture: supported at r = 1
    static GFunc delta_mu_star(long m);   // supported at r = 1/m, with indicator

    void add(const Rat& ratio, const QModZ& freq, const Rat& w);
    const std::map<Rat, Freqs>& support() const { return supp_; }
    bool is_zero() const { return supp_.empty(); }

    // exact value at (r, rho = c), c an integer representative
    Cyclo eval(const Rat& ratio, long c) const;

    friend GFunc operator+(const GFunc& a, const GFunc& b);
    friend GFunc operator*(const Rat& s, const GFunc& a);
    friend bool operator==(const GFunc& a, const GFunc& b);

    GFunc convolve(const GFunc& g) const;  // (conv01)
    GFunc adjoint() const;                 // f*(r, rho) = conj f(1/r, r rho)

    std::string str() const;

private:
    std::map<Rat, Freqs> supp_;
};

// representation of a BC normal-form element as a groupoid function
GFunc bc_to_groupoid(const BCElement& x);

// oracle: does bc_product agree with groupoid convolution for the pair?
bool bc_oracle_check(const BCMonomial& x, const BCMonomial& y);

// --- weight-0 functions at finite level ---

// value of e(a) on the lattice: exp(2 pi i mult a), as exact root of unity
Cyclo e_of_a(const QModZ& a, const QLattice1& l);

Cyclo e1(const QModZ& a, const QLattice1& l);
RPoly pk_poly(unsigned k);
Cyclo ek(unsigned k, const QModZ& a, const QLattice1& l);
int pi_n(long n, const QLattice1& l);

struct CheckReport {
    bool ok = true;
    std::string witness;
};

CheckReport check_moebius_div(long N);             // (div) identity, all c mod N
CheckReport check_div_rel(long N, unsigned k);     // (div-rel), all c mod N
CheckReport check_div1(long N, unsigned k, const QModZ& x);  // Prop div1 incl. even k
CheckReport pi2_identity();
CheckReport span_check(long N);                    // products of e_{1,a} span characters

// level function c mod L -> Cyclo
struct LevelFn {
    long L = 1;
    std::vector<Cyclo> v;  // size L
};

LevelFn ek_fn(unsigned k, const QModZ& a, long L);
LevelFn pi_fn(long n, long L);
LevelFn alpha_n_action(long n, const LevelFn& f);  // needs f.L * n | result level? see impl
bool levelfn_eq(const LevelFn& a, const LevelFn& b);
LevelFn levelfn_mul(const LevelFn& a, const LevelFn& b);

}  // namespace qlat
