#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>
#include "qlat/lat2.hpp"
#include "qlat/modforms.hpp"
#include "qlat/poly.hpp"
#include "qlat/qlat1.hpp"

namespace qlat {

// Canonical representative of a left coset Gamma g, g in GL2+(Q):
// g = (1/t) [[A,B],[0,D]] with A, D > 0, 0 <= B < D and t the lcm of the
// denominators of the reduced entries of g.
struct CosetKey {
    long t = 1, A = 1, B = 0, D = 1;

    friend auto operator<=>(const CosetKey&, const CosetKey&) = default;
    Mat2 mat() const { return {Rat(A, t), Rat(B, t), Rat(0), Rat(D, t)}; }
    std::string str() const;
};

CosetKey canonical_coset(const Mat2& g);

// Finitely supported element of the rank-2 system's Hecke algebra: a map from
// left cosets to residue tables.  The table attached to a coset gives the
// value at every residue matrix rho mod N (row-major index); values at rho
// with g rho not integral are forced to zero (masked).
class GL2Element {
public:
    GL2Element() = default;  // zero at level 1

    long level() const { return N_; }
    const std::map<CosetKey, std::vector<Rat>>& data() const { return t_; }

    static GL2Element zero(long N);
    static GL2Element from_table(long N, const CosetKey& g, std::vector<Rat> tab);
    static GL2Element unit();            // identity coset, constant 1
    static GL2Element mu_big(long n);    // coset of n*Id, constant 1
    static GL2Element hecke_Tad(long a, long d);  // double coset class, a | d
    static GL2Element hecke_Tn(long n);           // all det-n cosets

    GL2Element promoted(long M) const;   // N | M
    Rat value(const CosetKey& g, const std::array<long, 4>& rho) const;
    Rat sup_abs() const;
    long coset_count() const { return (long)t_.size(); }

    friend GL2Element operator+(const GL2Element& a, const GL2Element& b);
    friend GL2Element operator-(const GL2Element& a, const GL2Element& b);
    friend GL2Element operator*(const Rat& s, const GL2Element& a);
    friend bool operator==(const GL2Element& a, const GL2Element& b);

    friend GL2Element convolve(const GL2Element& f1, const GL2Element& f2);
    friend GL2Element adjoint(const GL2Element& f);
    // endomorphism attached to an integer matrix with positive determinant:
    // value at rho moves to m^{-1} rho when that is integral, else 0
    friend GL2Element theta_endo(const std::array<long, 4>& m, const GL2Element& f);
    // right translation of the residue argument by gamma (det = 1 mod N)
    friend GL2Element symmetry_right(const std::array<long, 4>& gamma, const GL2Element& f);

    std::string str() const;

private:
    void insert_masked(const CosetKey& g, std::vector<Rat> tab);
    void prune();
    long N_ = 1;
    std::map<CosetKey, std::vector<Rat>> t_;
};

// mu_[n] f mu_[n]* == theta_endo(n Id, f)
CheckReport inner_check(long n, const GL2Element& f);

// --- low-temperature equilibrium state ---

struct GL2StateValue {
    double value = 0;
    double tail_bound = 0;
};

// phi_beta(f) at an invertible residue datum; sums the identity-coset table of
// f over triangular reps of determinant <= cutoff, normalized by
// zeta(beta) zeta(beta-1).  Requires beta > 2.
GL2StateValue kms_state_eval(double beta, const LevelRho& l, const GL2Element& f,
                             long cutoff);

// same state applied to a 0/1 observable given directly on integer matrices
GL2StateValue kms_indicator_state(double beta, const LevelRho& l,
                                  const std::function<bool(const std::array<long, 4>&)>& ind,
                                  long cutoff);

// --- integer-matrix observables (exact, no residue level needed) ---

bool ind_scal_div(const std::array<long, 4>& m, long n);   // n | all entries
bool ind_det_div(const std::array<long, 4>& m, long n);    // n | det
// elementary divisor valuations (v1 <= v2) at p of a nonsingular matrix
std::pair<long, long> divisor_valuations(const std::array<long, 4>& m, long p);
bool ind_e(const std::array<long, 4>& m, long p, long i, long j);  // v1>=i, v2>=j
// difference-product form: v1 == k and det valuation == k+l
bool ind_proj_p(const std::array<long, 4>& m, long p, long k, long l);
// inclusion-exclusion over the cumulative projections
bool ind_proj_p_smith(const std::array<long, 4>& m, long p, long k, long l);

// residue-table versions (n, arguments constrained by the level)
GL2Element proj_scal(long n, long N);   // indicator n | rho, at level N, n | N
GL2Element proj_det(long n, long N);    // indicator n | det rho
GL2Element proj_p_table(long p, long k, long l, long N);        // difference form
GL2Element proj_p_smith_table(long p, long k, long l, long N);  // via ind_e

// closed-form value of phi_beta on the (k,l) stratum projection
double proba_closed_form(double beta, long p, long k, long l);

// stratum weight as a rational function of x = p^{-beta}
RatFunc sigma_closed_form(long p, long l);
CheckReport sigma_recursion_check(long p, long lmax);

// low-temperature distribution of rho mod N under the Gibbs sums, averaged
// over SL2(Z/N); max deviation from uniform
struct EquiResult {
    std::vector<double> dist;
    double max_dev = 0;
};
EquiResult equi_distribution(long N, double beta, long cutoff);

// compatibility of the residue action with the label transform on the
// elliptic-function side, checked numerically at the sample points
NumCheckReport galois_covariance_check(long N, const std::array<long, 4>& alpha,
                                       double tol);

}  // namespace qlat
