#include "qlat/verify.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "qlat/arith.hpp"
#include "qlat/bc.hpp"
#include "qlat/gl2.hpp"
#include "qlat/lat2.hpp"
#include "qlat/modforms.hpp"
#include "qlat/qlat1.hpp"
#include "qlat/zeta.hpp"

namespace qlat {

namespace {

// all reduced fractions a/b mod 1 with denominator <= bmax (0 included)
std::vector<QModZ> labels_up_to(long bmax) {
    std::vector<QModZ> out{QModZ(0, 1)};
    for (long b = 2; b <= bmax; ++b)
        for (long a = 1; a < b; ++a)
            if (lgcd(a, b) == 1) out.push_back(QModZ(a, b));
    return out;
}

// all reduced fractions with denominator exactly b
std::vector<QModZ> labels_of_level(long b) {
    std::vector<QModZ> out;
    if (b == 1) return {QModZ(0, 1)};
    for (long a = 1; a < b; ++a)
        if (lgcd(a, b) == 1) out.push_back(QModZ(a, b));
    return out;
}

std::vector<BCMonomial> monomial_pool(long bound) {
    std::vector<BCMonomial> out;
    for (long n = 1; n <= bound; ++n)
        for (long m = 1; m <= bound; ++m) {
            if (lgcd(n, m) != 1) continue;
            for (const QModZ& r : labels_up_to(bound)) out.push_back({n, r, m});
        }
    return out;
}

std::string mono_pair_str(const BCMonomial& x, const BCMonomial& y) {
    return x.str() + " , " + y.str();
}

// ---- shared check bodies, parameterized by range ----

CheckLine bc_oracle_line(long bound) {
    auto pool = monomial_pool(bound);
    for (const auto& x : pool)
        for (const auto& y : pool)
            if (!bc_oracle_check(x, y))
                return {"bc-product-oracle", false, mono_pair_str(x, y), 0, 0};
    std::ostringstream os;
    os << pool.size() * pool.size() << " pairs";
    return {"bc-product-oracle", true, os.str(), 0, 0};
}

CheckLine bc_kms_glue_line() {
    double worst = 0;
    std::string wit;
    QModZ half(1, 2);
    for (double beta : {0.5, 1.0}) {
        double dev = std::abs(kms_low(beta, half) - (std::pow(2.0, 1.0 - beta) - 1.0));
        if (dev > worst) { worst = dev; wit = "low beta=" + std::to_string(beta); }
    }
    for (double beta : {1.5, 3.0}) {
        auto v = kms_high(beta, GroundStateLabel{2, 1}, half, 10000);
        double dev = std::abs(v.value - std::complex<double>(std::pow(2.0, 1.0 - beta) - 1.0));
        if (!v.closed_form) return {"bc-kms-glue", false, "no closed form at b=2", dev, 1e-10};
        if (dev > worst) { worst = dev; wit = "high beta=" + std::to_string(beta); }
    }
    return {"bc-kms-glue", worst < 1e-10, worst < 1e-10 ? "" : wit, worst, 1e-10};
}

CheckLine bc_kms_formal_line(long bmax) {
    for (long b = 1; b <= bmax; ++b)
        for (long e : {-2L, -1L, 0L, 1L, 2L, 3L})
            if (kms_low_formal(e, b) != kms_low_product_formal(e, b))
                return {"bc-kms-low-formal", false,
                        "b=" + std::to_string(b) + " exponent=" + std::to_string(e), 0, 0};
    return {"bc-kms-low-formal", true, "", 0, 0};
}

CheckLine bc_eigen_line(long bound) {
    auto pool = monomial_pool(bound);
    for (const auto& x : pool)
        for (const auto& y : pool) {
            auto r = kms_eigen_check(3.0, BCElement(x), BCElement(y));
            if (!r.ok)
                return {"bc-kms-eigen", false, mono_pair_str(x, y) + " : " + r.witness, 0, 0};
        }
    return {"bc-kms-eigen", true, "", 0, 0};
}

CheckLine bc_intertwine_line(long Nmax) {
    for (long N = 1; N <= Nmax; ++N)
        for (long k = 1; k < std::max(2L, N); ++k) {
            if (lgcd(k, N) != 1) continue;
            for (const QModZ& r : labels_of_level(N))
                if (!intertwine_check(GroundStateLabel{N, 1}, k, r))
                    return {"bc-galois-intertwine", false,
                            "N=" + std::to_string(N) + " k=" + std::to_string(k), 0, 0};
        }
    return {"bc-galois-intertwine", true, "", 0, 0};
}

CheckLine phase_line(long Nmax, const std::vector<long>& ns, long level) {
    for (long N = 1; N <= Nmax; ++N) {
        std::vector<std::vector<Cyclo>> th;
        for (long m = 0; m <= N; ++m) th.push_back(phase_state(N, m));
        for (long m = 0; m <= N; ++m)
            for (long mp = 0; mp <= N; ++mp)
                if (phase_inner(th[m], th[mp]) != Cyclo(m == mp ? 1 : 0))
                    return {"bc-phase-states", false,
                            "orthonormality N=" + std::to_string(N), 0, 0};
        for (long m = 0; m <= N; ++m)
            if (rep_e(QModZ(m, N + 1), th[0]) != th[m])
                return {"bc-phase-states", false,
                        "shift relation N=" + std::to_string(N), 0, 0};
    }
    std::vector<std::vector<QModZ>> prods = {
        {}, {QModZ(1, level)}, {QModZ(1, level), QModZ(level - 1, level)},
        {QModZ(5, level), QModZ(1, level), QModZ(7, level)}};
    for (long n : ns)
        for (const auto& rs : prods)
            if (!renorm_identity_check(n, rs))
                return {"bc-phase-states", false,
                        "scaling identity n=" + std::to_string(n), 0, 0};
    return {"bc-phase-states", true, "", 0, 0};
}

CheckLine div_rel_line(long Nmax, unsigned kmax) {
    for (long N = 2; N <= Nmax; ++N)
        for (unsigned k = 1; k <= kmax; ++k) {
            auto r = check_div_rel(N, k);
            if (!r.ok)
                return {"q1-div-rel", false,
                        "N=" + std::to_string(N) + " k=" + std::to_string(k) + " : " + r.witness,
                        0, 0};
        }
    return {"q1-div-rel", true, "", 0, 0};
}

CheckLine div1_line(long Nmax, unsigned kmax, long xlevel) {
    for (long N = 2; N <= Nmax; ++N)
        for (unsigned k = 1; k <= kmax; ++k)
            for (const QModZ& x : labels_up_to(xlevel)) {
                auto r = check_div1(N, k, x);
                if (!r.ok)
                    return {"q1-div1", false,
                            "N=" + std::to_string(N) + " k=" + std::to_string(k) +
                                " x=" + x.str() + " : " + r.witness,
                            0, 0};
            }
    return {"q1-div1", true, "", 0, 0};
}

CheckLine span_line(const std::vector<long>& Ns) {
    for (long N : Ns) {
        auto r = span_check(N);
        if (!r.ok) return {"q1-span", false, "N=" + std::to_string(N) + " : " + r.witness, 0, 0};
    }
    return {"q1-span", true, "", 0, 0};
}

CheckLine count_index_line(long nmax) {
    for (long n = 1; n <= nmax; ++n)
        if (Int((long)enumerate_index(n).size()) != divisor_sigma(1, n))
            return {"lat-count-index", false, "n=" + std::to_string(n), 0, 0};
    return {"lat-count-index", true, "", 0, 0};
}

CheckLine zeta_line(long cutoff) {
    auto z = zeta_product(3.0, cutoff);
    double dev = std::abs(z.partial_sum - z.product);
    return {"lat-zeta-product", dev <= z.tail_bound,
            dev <= z.tail_bound ? "" : "deviation exceeds tail bound", dev, z.tail_bound};
}

CheckLine omega_line(long nmax) {
    for (long n = 1; n <= nmax; ++n)
        if (omega(n) != Int((long)double_coset_reps(n).size()))
            return {"lat-omega", false, "n=" + std::to_string(n), 0, 0};
    return {"lat-omega", true, "", 0, 0};
}

CheckLine sl2_line(long Nmax) {
    for (long N = 1; N <= Nmax; ++N)
        if (sl2_order(N) != Int(sl2_order_enumerated(N)))
            return {"lat-sl2-order", false, "N=" + std::to_string(N), 0, 0};
    return {"lat-sl2-order", true, "", 0, 0};
}

CheckLine omega_ab_line(long lmax) {
    // closed form: 0 if vb < l; p^va if va < l <= vb; p^{l-1}(p+1) if va >= l
    for (long p : {2L, 3L})
        for (long l = 1; l <= lmax; ++l)
            for (long vb = 0; vb <= l; ++vb)
                for (long va = 0; va <= vb; ++va) {
                    long expect;
                    if (vb < l)
                        expect = 0;
                    else if (va < l)
                        expect = (long)std::llround(std::pow((double)p, (double)va));
                    else {
                        expect = p + 1;
                        for (long i = 1; i < l; ++i) expect *= p;
                    }
                    if (omega_ab(p, l, va, vb) != expect)
                        return {"lat-omega-ab", false,
                                "p=" + std::to_string(p) + " l=" + std::to_string(l) +
                                    " (" + std::to_string(va) + "," + std::to_string(vb) + ")",
                                0, 0};
                }
    return {"lat-omega-ab", true, "", 0, 0};
}

CheckLine hecke_line() {
    auto T2 = GL2Element::hecke_Tn(2);
    bool ok = convolve(T2, T2) == GL2Element::hecke_Tn(4) + Rat(2) * GL2Element::hecke_Tad(2, 2);
    bool ok2 = convolve(T2, GL2Element::hecke_Tn(3)) == GL2Element::hecke_Tn(6);
    if (!ok) return {"gl2-hecke", false, "T2*T2 != T4 + 2 T(2,2)", 0, 0};
    if (!ok2) return {"gl2-hecke", false, "T2*T3 != T6", 0, 0};
    return {"gl2-hecke", true, "", 0, 0};
}

CheckLine gl2_assoc_line(long triples, unsigned seed) {
    std::mt19937 rng(seed);
    auto rnd = [&]() -> GL2Element {
        switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
            case 0: return GL2Element::hecke_Tn(std::uniform_int_distribution<int>(2, 4)(rng));
            case 1: return GL2Element::hecke_Tad(2, std::uniform_int_distribution<int>(1, 2)(rng) * 2);
            case 2: return GL2Element::mu_big(std::uniform_int_distribution<int>(2, 3)(rng));
            case 3: return adjoint(GL2Element::mu_big(std::uniform_int_distribution<int>(2, 3)(rng)));
            case 4: return proj_det(2, 2);
            default: return GL2Element::unit() - Rat(1, 2) * GL2Element::hecke_Tn(2);
        }
    };
    for (long i = 0; i < triples; ++i) {
        auto a = rnd(), b = rnd(), c = rnd();
        if (!(convolve(convolve(a, b), c) == convolve(a, convolve(b, c))))
            return {"gl2-associativity", false, "triple #" + std::to_string(i), 0, 0};
    }
    return {"gl2-associativity", true, std::to_string(triples) + " triples", 0, 0};
}

CheckLine gl2_state_line(long cutoff_e, long cutoff_pi) {
    LevelRho I2{2, {1, 0, 0, 1}};
    auto e01 = kms_indicator_state(
        3.0, I2, [](const std::array<long, 4>& m) { return ind_e(m, 2, 0, 1); }, cutoff_e);
    double dev = std::abs(e01.value - 11.0 / 32);
    if (dev > e01.tail_bound + 1e-12)
        return {"gl2-kms-values", false, "divisibility observable at p=2", dev, e01.tail_bound};
    for (long p : {2L, 3L})
        for (double beta : {2.5, 3.0})
            for (auto [k, l] : std::vector<std::pair<long, long>>{{0, 0}, {0, 1}, {1, 1}}) {
                auto v = kms_indicator_state(
                    beta, LevelRho{p, {1, 0, 0, 1}},
                    [&](const std::array<long, 4>& m) { return ind_proj_p(m, p, k, l); },
                    cutoff_pi);
                double d2 = std::abs(v.value - proba_closed_form(beta, p, k, l));
                if (d2 > v.tail_bound + 1e-12)
                    return {"gl2-kms-values", false,
                            "stratum (" + std::to_string(k) + "," + std::to_string(l) +
                                ") p=" + std::to_string(p) + " beta=" + std::to_string(beta),
                            d2, v.tail_bound};
            }
    double total = 0;
    for (long l = 0; l <= 40; ++l)
        for (long k = 0; k <= l; ++k) total += proba_closed_form(3.0, 2, k, l);
    if (std::abs(total - 1.0) > 1e-9)
        return {"gl2-kms-values", false, "stratum probabilities do not sum to 1",
                std::abs(total - 1.0), 1e-9};
    return {"gl2-kms-values", true, "", dev, e01.tail_bound};
}

CheckLine sigma_line() {
    for (long p : {2L, 3L, 5L}) {
        auto r = sigma_recursion_check(p, 6);
        if (!r.ok) return {"gl2-sigma-recursion", false, r.witness, 0, 0};
    }
    return {"gl2-sigma-recursion", true, "", 0, 0};
}

CheckLine equi_line(long cutoff) {
    double prev = 1e300;
    for (double beta : {2.5, 2.2, 2.1}) {
        auto e = equi_distribution(2, beta, cutoff);
        if (e.max_dev >= prev)
            return {"gl2-equidistribution", false,
                    "deviation not decreasing at beta=" + std::to_string(beta), e.max_dev, prev};
        prev = e.max_dev;
    }
    return {"gl2-equidistribution", true, "", prev, 0};
}

CheckLine mf_exact_line(long order_w, long order_j) {
    for (unsigned m = 4; m <= 8; ++m) {
        auto r = wealg_check(m, order_w);
        if (!r.ok) return {"mf-exact-series", false, "weight algebra m=" + std::to_string(m), 0, 0};
    }
    auto e4 = ek_series(4, order_w);
    if (!agree_to(ek_series(8, order_w), Rat(3, 7) * (e4 * e4), order_w))
        return {"mf-exact-series", false, "e8 relation", 0, 0};
    if (!agree_to(nu_series(4, order_j), Rat(-5) * e4, order_j))
        return {"mf-exact-series", false, "nu4", 0, 0};
    if (!agree_to(nu_series(6, order_j), Rat(-14) * ek_series(6, order_j), order_j))
        return {"mf-exact-series", false, "nu6", 0, 0};
    if (!agree_to(nu_series(8, order_j), Rat(45, 7) * (e4 * e4), order_j))
        return {"mf-exact-series", false, "nu8", 0, 0};
    auto w = weierstrass_data(order_j);
    if (!agree_to(w.c * w.c * ek_series(4, order_j),
                  Rat(1, 5) * (w.j * (w.j - QExpansion::monomial(1, 0, Cyclo(1728), order_j))),
                  order_j - 2))
        return {"mf-exact-series", false, "c^2 e4 identity", 0, 0};
    {
        auto jm = w.j - QExpansion::monomial(1, 0, Cyclo(1728), order_j);
        if (!agree_to(w.c * w.c * w.c * ek_series(6, order_j),
                      Rat(-2, 35) * (w.j * jm * jm), order_j - 3))
            return {"mf-exact-series", false, "c^3 e6 identity", 0, 0};
    }
    {
        // P2 = X^2 - j(j-1728); P3 = X^3 - (9/5) J X + (4/5) J (j-1728), J = j(j-1728)
        RPoly j = RPoly::x();
        RPoly J = j * (j - RPoly(1728));
        JPoly P2expect(std::vector<RPoly>{RPoly() - J, RPoly(), RPoly(1)});
        if (!(pn_poly(2) == P2expect)) return {"mf-exact-series", false, "P2", 0, 0};
        JPoly P3expect(std::vector<RPoly>{Rat(4, 5) * (J * (j - RPoly(1728))),
                                          RPoly() - Rat(9, 5) * J, RPoly(), RPoly(1)});
        if (!(pn_poly(3) == P3expect)) return {"mf-exact-series", false, "P3", 0, 0};
    }
    return {"mf-exact-series", true, "", 0, 0};
}

CheckLine wp_oracle_line(double tol) {
    double worst = 0;
    const std::vector<std::pair<double, double>> zs = {
        {0.3, 0.2}, {0.1, 0.45}, {-0.25, 0.33}, {0.47, -0.29}};
    for (cplx tau : tau_samples())
        for (auto [x, y] : zs) {
            cplx z = x + y * tau;
            worst = std::max(worst, std::abs(wp_numeric(z, tau) - wp_lattice_oracle(z, tau, 60)));
        }
    return {"mf-wp-oracle", worst <= tol, worst <= tol ? "" : "q-series vs lattice sum", worst, tol};
}

CheckLine weight_covariance_line(double tol) {
    // X_a(g rho, g tau) = (c tau + d)^2 X_a(rho, tau) for g in the modular group
    const std::vector<std::array<long, 4>> gs = {
        {1, 1, 0, 1}, {0, -1, 1, 0}, {1, 0, 1, 1}, {2, 1, 1, 1}, {1, -1, 2, -1}};
    long N = 4;
    LevelRho rho{N, {1, 1, 0, 1}};
    double worst = 0;
    for (const auto& g : gs)
        for (cplx tau : tau_samples())
            for (const QModZ& a1 : {QModZ(1, 4), QModZ(1, 2)})
                for (const QModZ& a2 : {QModZ(0, 1), QModZ(3, 4)}) {
                    auto md = [&](long v) { return ((v % N) + N) % N; };
                    LevelRho grho{N,
                                  {md(g[0] * rho.r[0] + g[1] * rho.r[2]),
                                   md(g[0] * rho.r[1] + g[1] * rho.r[3]),
                                   md(g[2] * rho.r[0] + g[3] * rho.r[2]),
                                   md(g[2] * rho.r[1] + g[3] * rho.r[3])}};
                    cplx gtau = ((double)g[0] * tau + (double)g[1]) /
                                ((double)g[2] * tau + (double)g[3]);
                    cplx jfac = (double)g[2] * tau + (double)g[3];
                    cplx lhs = Xa_numeric(a1, a2, grho, gtau);
                    cplx rhs = jfac * jfac * Xa_numeric(a1, a2, rho, tau);
                    worst = std::max(worst, std::abs(lhs - rhs));
                }
    return {"mf-weight-covariance", worst <= tol, worst <= tol ? "" : "covariance breach",
            worst, tol};
}

CheckLine div11_line(double tol) {
    const std::vector<std::array<long, 4>> strata = {
        {1, 0, 0, 1}, {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {1, 1, 1, 1}};
    double worst = 0;
    for (const auto& r : strata) {
        auto rep = div11_check(2, LevelRho{2, r}, tol);
        worst = std::max(worst, rep.max_dev);
        if (!rep.ok)
            return {"mf-division-weight2", false, "stratum rho=" + std::to_string(r[0]) +
                        std::to_string(r[1]) + std::to_string(r[2]) + std::to_string(r[3]),
                    rep.max_dev, tol};
    }
    return {"mf-division-weight2", true, "", worst, tol};
}

// faithful-implementation view: the two stated normalizations must fail as
// documented, and the corrected multiplier must satisfy the identity
CheckLine omega_division_impl_line() {
    auto rep = omega_division_check(2, 2, 1e-6);
    bool ok = !rep.a_ok && !rep.b_ok && rep.corrected_ok;
    std::ostringstream os;
    os << "stated-normalization deviations " << rep.dev_a << " / " << rep.dev_b
       << ", corrected multiplier deviation " << rep.dev_corrected;
    return {"mf-division-weight2k-impl", ok, os.str(), rep.dev_corrected, 1e-6};
}

CheckLine E2ka_paths_line(double tol) {
    double worst = 0;
    LevelRho rho{4, {1, 1, 0, 3}};
    for (cplx tau : tau_samples())
        for (unsigned k : {2u, 3u})
            for (const QModZ& a1 : {QModZ(1, 4), QModZ(0, 1)})
                for (const QModZ& a2 : {QModZ(1, 2), QModZ(3, 4)})
                    worst = std::max(worst, std::abs(E2ka_numeric(k, a1, a2, rho, tau) -
                                                     E2ka_recursion(k, a1, a2, rho, tau)));
    return {"mf-eisenstein-paths", worst <= tol, worst <= tol ? "" : "sum vs recursion",
            worst, tol};
}

CheckLine galois_cov_line(double tol) {
    for (long N : {3L, 4L})
        for (auto alpha : std::vector<std::array<long, 4>>{{1, 1, 0, 1}, {2, 0, 0, 1}, {1, 0, 1, 1}}) {
            long det = alpha[0] * alpha[3] - alpha[1] * alpha[2];
            if (lgcd(((det % N) + N) % N, N) != 1) continue;
            auto rep = galois_covariance_check(N, alpha, tol);
            if (!rep.ok)
                return {"gl2-galois-covariance", false, "N=" + std::to_string(N), rep.max_dev, tol};
        }
    return {"gl2-galois-covariance", true, "", 0, tol};
}

}  // namespace

Suite verify_numkit(const VerifyOptions& opt) {
    Suite s{"numkit", {}};
    // Bernoulli-type coefficients against known values
    s.add("gamma-values",
          gamma_k(2) == Rat(-1, 12) && gamma_k(4) == Rat(1, 720) && gamma_k(3) == Rat(0) &&
              bernoulli_pos(1) == Rat(1, 6) && bernoulli_pos(2) == Rat(1, 30) &&
              bernoulli_pos(3) == Rat(1, 42));
    s.add("lambda-values", lambda_k(2) == Rat(-1, 4) && lambda_k(4) == Rat(1, 48));
    {
        bool ok = true;
        long nmax = opt.quick ? 200 : 1000;
        for (long n = 1; n <= nmax && ok; ++n) {
            Rat direct = 0;
            for (long d : divisors(n)) direct += Rat(moebius(d)) * rpow(Rat(n / d), 2);
            ok = f_j(2, n) == direct;
        }
        s.add("moebius-f_j", ok);
    }
    {
        auto e4 = ek_series(4, 20);
        bool ok = agree_to(e4 * e4.inverse(), QExpansion::monomial(1, 0, Cyclo(1), 20), 20);
        Cyclo z = Cyclo::zeta_pow(12, 5);
        ok = ok && z * z.inverse() == Cyclo(1) && z.galois(5).galois(5) == z;
        s.add("series-and-cyclotomic-arith", ok);
    }
    {
        auto z = zeta_product(3.0, opt.quick ? 500 : 2000);
        double dev = std::abs(z.partial_sum - z.product);
        s.add("zeta-sigma-sum", dev <= z.tail_bound, "", dev, z.tail_bound);
    }
    return s;
}

Suite verify_bc(const VerifyOptions& opt) {
    Suite s{"bc_system", {}};
    s.checks.push_back(bc_oracle_line(opt.quick ? 3 : 5));
    {
        std::mt19937 rng(opt.seed);
        auto pool = monomial_pool(4);
        std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
        bool ok = true;
        long trials = opt.quick ? 100 : 1000;
        for (long i = 0; i < trials && ok; ++i) {
            BCElement a(pool[pick(rng)]), b(pool[pick(rng)]), c(pool[pick(rng)]);
            ok = bc_product(bc_product(a, b), c) == bc_product(a, bc_product(b, c));
        }
        s.add("product-associativity", ok, std::to_string(trials) + " triples");
    }
    s.checks.push_back(bc_kms_glue_line());
    s.checks.push_back(bc_kms_formal_line(opt.quick ? 10 : 30));
    {
        auto pool = monomial_pool(opt.quick ? 2 : 4);
        bool ok = true;
        std::string wit;
        for (const auto& x : pool)
            for (const auto& y : pool)
                if (ok) {
                    auto r = kms_eigen_check(3.0, BCElement(x), BCElement(y));
                    if (!r.ok) { ok = false; wit = mono_pair_str(x, y); }
                }
        s.add("kms-eigen-pairs", ok, wit);
    }
    s.checks.push_back(bc_intertwine_line(opt.quick ? 8 : 16));
    s.checks.push_back(phase_line(opt.quick ? 6 : 12, {2, 3}, 12));
    return s;
}

Suite verify_qlat1(const VerifyOptions& opt) {
    Suite s{"qlat1d", {}};
    {
        bool ok = true;
        for (long N = 2; N <= (opt.quick ? 6 : 10) && ok; ++N) ok = check_moebius_div(N).ok;
        s.add("q1-moebius-div", ok);
    }
    s.checks.push_back(div_rel_line(opt.quick ? 4 : 8, 5));
    s.checks.push_back(div1_line(opt.quick ? 3 : 6, 4, opt.quick ? 4 : 8));
    {
        auto r = pi2_identity();
        s.add("q1-pi2-identity", r.ok, r.witness);
    }
    s.checks.push_back(span_line(opt.quick ? std::vector<long>{2, 3} : std::vector<long>{2, 3, 4, 8}));
    return s;
}

Suite verify_lat2(const VerifyOptions& opt) {
    Suite s{"lat2d", {}};
    s.checks.push_back(count_index_line(opt.quick ? 100 : 500));
    {
        // meet against brute-force membership on a sample of HNF pairs
        bool ok = true;
        for (const auto& L1 : enumerate_index(4))
            for (const auto& L2 : enumerate_index(6))
                if (ok) {
                    Sublattice M = meet(L1, L2);
                    for (long x = 0; x <= 12 && ok; ++x)
                        for (long y = -12; y <= 12 && ok; ++y)
                            ok = M.contains(x, y) == (L1.contains(x, y) && L2.contains(x, y));
                }
        s.add("lat-meet-membership", ok);
    }
    {
        bool ok = true;
        for (long N = 1; N <= 4 && ok; ++N) {
            auto sn = enumerate_SN(N);
            long direct = 0;
            for (long n : divisors(N * N))
                for (const auto& L : enumerate_index(n))
                    if (L.contains(N, 0) && L.contains(0, N)) ++direct;
            ok = (long)sn.size() == direct;
        }
        s.add("lat-SN-enumeration", ok);
    }
    s.checks.push_back(zeta_line(opt.quick ? 2000 : 10000));
    s.checks.push_back(omega_line(opt.quick ? 30 : 50));
    s.checks.push_back(sl2_line(opt.quick ? 5 : 6));
    s.checks.push_back(omega_ab_line(opt.quick ? 2 : 3));
    {
        // partial isometry calculus: mu(g,L)* mu(g,L) fixes L; associativity sample
        bool ok = true;
        try {
            Mat2 g{Rat(1, 2), Rat(0), Rat(0), Rat(1)};
            MuSymbol m = mu_make(g, hnf(2, 0, 0, 1));
            MuSymbol mm = mu_product(mu_adjoint(m), m);
            ok = mm.g == Mat2::identity() && mm.L == hnf(2, 0, 0, 1);
        } catch (const std::exception&) {
            ok = false;
        }
        s.add("lat-mu-calculus", ok);
    }
    return s;
}

Suite verify_modforms(const VerifyOptions& opt) {
    Suite s{"modforms", {}};
    s.checks.push_back(mf_exact_line(opt.quick ? 30 : 50, 30));
    s.checks.push_back(wp_oracle_line(1e-8));
    {
        // Fricke functions: periodicity and evenness of the underlying wp
        double worst = 0;
        for (cplx tau : tau_samples()) {
            cplx z = 0.3 + 0.2 * tau;
            worst = std::max(worst, std::abs(wp_numeric(z + 1.0, tau) - wp_numeric(z, tau)));
            worst = std::max(worst, std::abs(wp_numeric(-z, tau) - wp_numeric(z, tau)));
            worst = std::max(worst, std::abs(fricke_numeric(Rat(1, 3), Rat(1, 2), tau) -
                                             fricke_numeric(Rat(-1, 3), Rat(-1, 2), tau)));
        }
        s.add("mf-wp-symmetries", worst <= 1e-9, "", worst, 1e-9);
    }
    s.checks.push_back(weight_covariance_line(1e-8));
    s.checks.push_back(E2ka_paths_line(1e-8));
    {
        // eta-cocycle: diagonal series vs numeric, and unimodular transport
        double worst = 0;
        for (cplx tau : tau_samples()) {
            cplx direct = mu_L_numeric(hnf(1, 0, 0, 2), tau);
            cplx series = mu_L_series(2, 40).eval_q(std::exp(cplx(0, 2 * std::numbers::pi) * tau));
            worst = std::max(worst, std::abs(direct - series));
            worst = std::max(worst, std::abs(mu_L_numeric(hnf(2, 0, 1, 1), tau) -
                                             mu_L_numeric(hnf_of_vectors({{2, 1}, {0, 1}}), tau)));
        }
        s.add("mf-eta-cocycle", worst <= 1e-8, "", worst, 1e-8);
    }
    s.checks.push_back(div11_line(1e-8));
    s.checks.push_back(omega_division_impl_line());
    return s;
}

Suite verify_gl2(const VerifyOptions& opt) {
    Suite s{"gl2_system", {}};
    s.checks.push_back(hecke_line());
    s.checks.push_back(gl2_assoc_line(opt.quick ? 20 : 100, opt.seed));
    {
        bool ok = true;
        for (long n : {2L, 3L}) ok = ok && inner_check(n, GL2Element::hecke_Tn(2)).ok;
        ok = ok && inner_check(2, proj_det(2, 2)).ok;
        auto T2 = GL2Element::hecke_Tn(2);
        ok = ok && adjoint(adjoint(T2)) == T2;
        ok = ok && adjoint(convolve(T2, GL2Element::hecke_Tn(3))) ==
                       convolve(adjoint(GL2Element::hecke_Tn(3)), adjoint(T2));
        s.add("gl2-star-algebra", ok);
    }
    {
        bool ok = proj_p_smith_table(2, 0, 1, 16) == proj_p_table(2, 0, 1, 16) &&
                  proj_p_smith_table(2, 1, 1, 16) == proj_p_table(2, 1, 1, 16);
        std::mt19937 rng(opt.seed);
        std::uniform_int_distribution<long> d(-40, 40);
        for (int i = 0; i < 200 && ok; ++i) {
            std::array<long, 4> m{d(rng), d(rng), d(rng), d(rng)};
            if (m[0] * m[3] - m[1] * m[2] == 0) continue;
            for (long p : {2L, 3L})
                for (long k = 0; k <= 1; ++k)
                    for (long l = k; l <= 2; ++l)
                        ok = ok && ind_proj_p(m, p, k, l) == ind_proj_p_smith(m, p, k, l);
        }
        s.add("gl2-projection-forms", ok);
    }
    s.checks.push_back(gl2_state_line(opt.quick ? 2000 : 10000, opt.quick ? 1000 : 3000));
    s.checks.push_back(sigma_line());
    s.checks.push_back(equi_line(opt.quick ? 2000 : 10000));
    s.checks.push_back(galois_cov_line(1e-8));
    {
        auto f = proj_det(2, 2);
        bool ok = theta_endo({2, 0, 0, 1}, theta_endo({1, 1, 0, 2}, f)) ==
                  theta_endo({2, 2, 0, 2}, f);
        ok = ok && theta_endo({2, 0, 0, 2}, GL2Element::unit()) == proj_scal(2, 2);
        // at level 2 the shear has order 2, so applying it twice is the identity
        ok = ok && symmetry_right({1, 1, 0, 1}, symmetry_right({1, 1, 0, 1}, f)) == f;
        s.add("gl2-endomorphisms", ok);
    }
    return s;
}

std::vector<Suite> verify_all(const VerifyOptions& opt) {
    return {verify_numkit(opt), verify_bc(opt),       verify_qlat1(opt),
            verify_lat2(opt),   verify_modforms(opt), verify_gl2(opt)};
}

Suite acceptance_suite() {
    Suite s{"acceptance", {}};

    {  // 1: normal-form product vs groupoid convolution
        auto line = bc_oracle_line(6);
        line.id = "01-bc-product-oracle";
        s.checks.push_back(line);
    }
    {  // 2: KMS gluing and formal low-temperature values
        auto glue = bc_kms_glue_line();
        auto formal = bc_kms_formal_line(30);
        s.add("02-bc-kms-gluing", glue.pass && formal.pass,
              glue.pass ? formal.witness : glue.witness, glue.residual, glue.tolerance);
    }
    {  // 3: eigenvector form of the KMS condition, exact
        auto line = bc_eigen_line(6);
        line.id = "03-bc-kms-eigen";
        s.checks.push_back(line);
    }
    {  // 4: Galois action intertwines the extremal states
        auto line = bc_intertwine_line(24);
        line.id = "04-bc-galois-intertwine";
        s.checks.push_back(line);
    }
    {  // 5: division relations and spanning
        auto a = div_rel_line(8, 5);
        auto b = div1_line(6, 4, 8);
        auto c = pi2_identity();
        auto d = span_line({2, 3, 4, 8});
        bool ok = a.pass && b.pass && c.ok && d.pass;
        std::string wit = !a.pass ? a.witness : !b.pass ? b.witness : !c.ok ? c.witness : d.witness;
        s.add("05-division-relations", ok, ok ? "" : wit);
    }
    {  // 6: counting identities
        auto a = count_index_line(500);
        auto z = zeta_line(10000);
        auto o = omega_line(50);
        auto l = sl2_line(6);
        auto w = omega_ab_line(3);
        bool ok = a.pass && z.pass && o.pass && l.pass && w.pass;
        std::string wit = !a.pass ? a.witness : !z.pass ? z.witness
                          : !o.pass ? o.witness : !l.pass ? l.witness : w.witness;
        s.add("06-counting", ok, ok ? "" : wit, z.residual, z.tolerance);
    }
    {  // 7: Hecke structure constants and associativity
        auto h = hecke_line();
        auto a = gl2_assoc_line(100, 20260823);
        s.add("07-gl2-hecke", h.pass && a.pass, h.pass ? (a.pass ? "" : a.witness) : h.witness);
    }
    {  // 8: low-temperature state values
        auto v = gl2_state_line(10000, 3000);
        auto r = sigma_line();
        s.add("08-gl2-kms", v.pass && r.pass, v.pass ? r.witness : v.witness, v.residual,
              v.tolerance);
    }
    {  // 9: equidistribution trend
        auto line = equi_line(10000);
        line.id = "09-gl2-equidistribution";
        s.checks.push_back(line);
    }
    {  // 10: exact modular-form identities
        auto line = mf_exact_line(50, 30);
        line.id = "10-mf-exact-series";
        s.checks.push_back(line);
    }
    {  // 11: numeric Eisenstein layer; the weight-2k division identity must hold
       //     under one of the two stated normalizations — the recorded
       //     discrepancy (corrected multiplier needed) fails this gate by design
        auto wp = wp_oracle_line(1e-8);
        auto cov = weight_covariance_line(1e-8);
        auto dv = div11_line(1e-8);
        auto om = omega_division_check(2, 2, 1e-6);
        bool stated_ok = om.a_ok || om.b_ok;
        bool ok = wp.pass && cov.pass && dv.pass && stated_ok;
        std::ostringstream wit;
        if (!wp.pass) wit << wp.witness;
        else if (!cov.pass) wit << cov.witness;
        else if (!dv.pass) wit << dv.witness;
        else if (!stated_ok)
            wit << "documented discrepancy: stated weight-2k multiplier fails ("
                << "dev " << om.dev_a << " / " << om.dev_b
                << "); corrected multiplier N^{2k}/Det^{k+1} holds (dev " << om.dev_corrected
                << ")";
        s.add("11-numeric-eisenstein", ok, wit.str(),
              std::max({wp.residual, cov.residual, dv.residual}), 1e-6);
    }
    {  // 12: phase states
        auto line = phase_line(12, {2, 3}, 12);
        line.id = "12-phase-states";
        s.checks.push_back(line);
    }
    return s;
}

}  // namespace qlat
