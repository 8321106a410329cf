#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>
#include "qlat/cyclo.hpp"
#include "qlat/qmodz.hpp"

namespace qlat {

// mu_n e(r) mu_m^*, gcd(n,m) = 1
struct BCMonomial {
    long n = 1;
    QModZ r;
    long m = 1;

    friend auto operator<=>(const BCMonomial&, const BCMonomial&) = default;
    std::string str() const;
};

inline BCMonomial bc_mu(long n) { return {n, QModZ(), 1}; }
inline BCMonomial bc_mu_star(long m) { return {1, QModZ(), m}; }
inline BCMonomial bc_e(const QModZ& r) { return {1, r, 1}; }

// finite rational combination of normal-form monomials
class BCElement {
public:
    BCElement() = default;
    BCElement(const BCMonomial& mono, const Rat& c = 1) { add(mono, c); }
    static BCElement one() { return BCElement(BCMonomial{}); }

    void add(const BCMonomial& mono, const Rat& c);
    const std::map<BCMonomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend BCElement operator+(const BCElement& x, const BCElement& y);
    friend BCElement operator-(const BCElement& x, const BCElement& y);
    friend BCElement operator*(const Rat& s, const BCElement& x);
    friend bool operator==(const BCElement& x, const BCElement& y) {
        return x.terms_ == y.terms_;
    }

    std::string str() const;

private:
    std::map<BCMonomial, Rat> terms_;
};

// normal-form product via the derived reduction rules (oracle-validated)
BCElement bc_product(const BCElement& x, const BCElement& y);
BCElement bc_adjoint(const BCElement& x);

// sigma_t eigenvalue n/m of a monomial; nullopt if x is not an eigenvector
std::optional<Rat> bc_eigenvalue(const BCElement& x);
// numeric time evolution: coefficient of mu_n e(r) mu_m^* times (n/m)^{it}
std::map<BCMonomial, std::complex<double>> bc_time_evolution(double t, const BCElement& x);

// --- KMS machinery ---

struct GroundStateLabel {
    long N = 1;  // level
    long k = 1;  // unit mod N
};

// (BC-KMS01): phi_beta(e(a/b)) for 0 < beta <= 1
double kms_low(double beta, const QModZ& r);
// the same value as the exact ratio f_{1-beta}(b)/f_1(b) for integer beta-1
Rat kms_low_formal(long beta_minus_1_exponent, long b);
// direct product form with X_p = p^{beta-1} substituted as exact rationals
Rat kms_low_product_formal(long beta_minus_1_exponent, long b);

struct KmsHighValue {
    std::complex<double> value;
    double tail_bound;
    bool closed_form;  // true when an exact closed form was used (b <= 2)
};
// (BC-KMS1): phi_{beta,rho}(e(a/b)) for beta > 1
KmsHighValue kms_high(double beta, const GroundStateLabel& ground, const QModZ& r, long cutoff);

// phi applied to the diagonal part: value at mode k (state eigenbasis),
// periodic in k with period lcm of the e-label denominators
Cyclo bc_diag_mode(const BCElement& x, long k);

// Exact verification of phi(yx) = lambda^{-beta} phi(xy) for the Gibbs family,
// via termwise mode matching (valid for every beta > 1 simultaneously);
// numeric spot-check at the given beta is included.
struct EigenCheckResult {
    bool ok = false;
    std::string witness;
};
EigenCheckResult kms_eigen_check(double beta, const BCElement& x, const BCElement& y);

// --- symmetries ---
BCElement symmetry_act(long k, long N, const BCElement& x);  // e(r) -> e(kr)
bool intertwine_check(const GroundStateLabel& ground, long k, const QModZ& r);

// --- phase states (optical coherence picture) ---
std::vector<Cyclo> phase_state(long N, long m);  // length N+1, exact coefficients
Cyclo phase_inner(const std::vector<Cyclo>& u, const std::vector<Cyclo>& v);
// representation on |0..N>: e(r)|n> = zeta_r^n |n>  (labels taken mod N+1 grid)
std::vector<Cyclo> rep_e(const QModZ& r, const std::vector<Cyclo>& v);

// mu_n P(e(r_1)...e(r_k)) mu_n^* = (pi_n / n^k) sum_{n s_i = r_i} P(e(s_1)...e(s_k))
bool renorm_identity_check(long n, const std::vector<QModZ>& rs);

}  // namespace qlat
