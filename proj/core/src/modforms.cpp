#include "qlat/modforms.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include "qlat/arith.hpp"

namespace qlat {

namespace {

constexpr double PI = std::numbers::pi;
const cplx IU(0.0, 1.0);

Rat factorial(unsigned n) {
    Rat r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

Rat binom2(unsigned n) {  // C(n, 2)
    return Rat((long)n * (n - 1), 2);
}

long egcd(long x, long y, long& u, long& v) {
    if (y == 0) {
        u = x >= 0 ? 1 : -1;
        v = 0;
        return std::abs(x);
    }
    long u1, v1;
    long g = egcd(y, x % y, u1, v1);
    u = v1;
    v = u1 - (x / y) * v1;
    return g;
}

}  // namespace

QExpansion ek_series(unsigned k, long order) {
    if (k < 2 || k % 2 != 0) throw std::domain_error("ek_series: k must be even >= 2");
    std::vector<Cyclo> c(order + 1, Cyclo(0));
    c[0] = Cyclo(rpow(Rat(2), k) / factorial(k) * bernoulli_pos(k / 2));
    Rat tail = rpow(Rat(2), k + 1) / factorial(k - 1);
    if ((k / 2) % 2 == 1) tail = -tail;
    for (long n = 1; n <= order; ++n) c[n] = Cyclo(tail * Rat(divisor_sigma(k - 1, n)));
    return QExpansion(1, 0, std::move(c));
}

CheckReport wealg_check(unsigned m, long order) {
    if (m < 4) throw std::domain_error("wealg_check: need m >= 4");
    QExpansion lhs = Rat((long)(m - 3) * (4 * (long)m * m - 1), 3) * ek_series(2 * m, order);
    QExpansion rhs = QExpansion::zero(1, order);
    for (unsigned r = 2; r <= m - 2; ++r)
        rhs = rhs + Rat((2 * (long)r - 1) * (2 * (long)(m - r) - 1)) *
                        (ek_series(2 * r, order) * ek_series(2 * (m - r), order));
    bool ok = agree_to(lhs, rhs, order);
    return {ok, ok ? "" : "weight " + std::to_string(2 * m) + " recursion mismatch"};
}

WeierstrassData weierstrass_data(long order) {
    long M = order + 2;
    QExpansion e4 = ek_series(4, M), e6 = ek_series(6, M);
    WeierstrassData w;
    w.g2 = Rat(60) * e4;
    w.g3 = Rat(140) * e6;
    w.delta = w.g2.pow(3) - Rat(27) * (w.g3 * w.g3);
    QExpansion dinv = w.delta.inverse();
    w.j = Rat(1728) * (w.g2.pow(3) * dinv);
    w.c = Rat(-128 * 243) * (w.g2 * w.g3 * dinv);  // -2^7 3^5
    return w;
}

QExpansion nu_series(unsigned twok, long order) {
    if (twok < 2 || twok % 2 != 0) throw std::domain_error("nu_series: even weight >= 2");
    if (twok == 2) return ek_series(2, order);
    unsigned m = twok / 2;
    QExpansion out = (Rat(1) - binom2(2 * m)) * ek_series(2 * m, order);
    for (unsigned k = 1; k + 2 <= m; ++k)
        out = out - Rat(2 * (long)k + 1) *
                        (ek_series(2 * k + 2, order) *
                         (nu_series(2 * (m - k - 1), order) - ek_series(2 * (m - k - 1), order)));
    return out;
}

std::vector<std::tuple<unsigned, unsigned, Rat>> e46_poly(unsigned m) {
    if (m < 2) throw std::domain_error("e46_poly: need m >= 2");
    using Key = std::pair<unsigned, unsigned>;
    static std::map<unsigned, std::map<Key, Rat>> cache;
    std::function<const std::map<Key, Rat>&(unsigned)> get = [&](unsigned mm) -> const std::map<Key, Rat>& {
        auto it = cache.find(mm);
        if (it != cache.end()) return it->second;
        std::map<Key, Rat> out;
        if (mm == 2) {
            out[{1, 0}] = 1;
        } else if (mm == 3) {
            out[{0, 1}] = 1;
        } else {
            Rat scale = Rat(3) / Rat((long)(mm - 3) * (4 * (long)mm * mm - 1));
            for (unsigned r = 2; r <= mm - 2; ++r) {
                Rat f = scale * Rat((2 * (long)r - 1) * (2 * (long)(mm - r) - 1));
                for (auto& [ka, va] : get(r))
                    for (auto& [kb, vb] : get(mm - r))
                        out[{ka.first + kb.first, ka.second + kb.second}] += f * va * vb;
            }
        }
        return cache[mm] = out;
    };
    std::vector<std::tuple<unsigned, unsigned, Rat>> v;
    for (auto& [key, val] : get(m))
        if (val != 0) v.emplace_back(key.first, key.second, val);
    return v;
}

namespace {

// chat_{2m} = c^m e_{2m} as a polynomial in j (m >= 2), via c^2 e_4 and c^3 e_6
RPoly chat_poly(unsigned m) {
    // A = (1/5) j (j - 1728), B = -(2/35) j (j - 1728)^2
    RPoly j = RPoly::x();
    RPoly jm = j - RPoly::constant(Rat(1728));
    RPoly A = Rat(1, 5) * (j * jm);
    RPoly B = Rat(-2, 35) * (j * (jm * jm));
    RPoly out;
    for (auto& [al, be, v] : e46_poly(m)) {
        RPoly t = RPoly::constant(v);
        for (unsigned i = 0; i < al; ++i) t = t * A;
        for (unsigned i = 0; i < be; ++i) t = t * B;
        out = out + t;
    }
    return out;
}

}  // namespace

JPoly pn_poly(unsigned n) {
    if (n == 0) throw std::domain_error("pn_poly: n >= 1");
    // R_1 = X; R_m = X R_{m-1} - C(2m,2) chat_{2m} - sum (2k+1) chat_{2k+2} R_{m-k-1}
    std::vector<JPoly> R(n + 1);
    R[1] = JPoly::x();
    for (unsigned m = 2; m <= n; ++m) {
        JPoly r = JPoly::x() * R[m - 1] - JPoly::constant(binom2(2 * m) * chat_poly(m));
        for (unsigned k = 1; k + 1 <= m - 1; ++k)
            r = r - JPoly::constant(Rat(2 * (long)k + 1) * chat_poly(k + 1)) * R[m - k - 1];
        R[m] = r;
    }
    if (n == 1) return R[1];
    return R[n] + JPoly::constant(chat_poly(n));
}

std::vector<cplx> tau_samples() {
    return {cplx(0.1, 1.2), cplx(-0.37, 0.9), cplx(0.25, 2.0)};
}

namespace {

const long NUM_ORDER = 64;

const std::vector<double>& series_dcoeffs(const QExpansion& f, std::map<long, std::vector<double>>& cache,
                                          long key) {
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<double> v(NUM_ORDER + 1);
    for (long n = 0; n <= NUM_ORDER; ++n) v[n] = to_double(f.coeff(n).rational_value());
    return cache[key] = v;
}

const std::vector<double>& ek_dcoeffs(unsigned k) {
    static std::map<long, std::vector<double>> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    return series_dcoeffs(ek_series(k, NUM_ORDER), cache, k);
}

const std::vector<double>& nu_dcoeffs(unsigned twok) {
    static std::map<long, std::vector<double>> cache;
    auto it = cache.find(twok);
    if (it != cache.end()) return it->second;
    return series_dcoeffs(nu_series(twok, NUM_ORDER), cache, twok);
}

cplx horner_q(const std::vector<double>& c, cplx q) {
    cplx r = 0;
    for (size_t i = c.size(); i-- > 0;) r = r * q + c[i];
    return r;
}

cplx q_of(cplx tau) { return std::exp(2.0 * PI * IU * tau); }

}  // namespace

cplx ek_eval(unsigned k, cplx tau) { return horner_q(ek_dcoeffs(k), q_of(tau)); }

cplx nu_eval(unsigned twok, cplx tau) { return horner_q(nu_dcoeffs(twok), q_of(tau)); }

cplx j_eval(cplx tau) {
    cplx g2 = 60.0 * ek_eval(4, tau), g3 = 140.0 * ek_eval(6, tau);
    cplx d = g2 * g2 * g2 - 27.0 * g3 * g3;
    return 1728.0 * g2 * g2 * g2 / d;
}

cplx c_eval(cplx tau) {
    cplx g2 = 60.0 * ek_eval(4, tau), g3 = 140.0 * ek_eval(6, tau);
    cplx d = g2 * g2 * g2 - 27.0 * g3 * g3;
    return -128.0 * 243.0 * g2 * g3 / d;
}

namespace {

// shift z by lattice points of Z + tau Z into the fundamental cell
cplx reduce_z(cplx z, cplx tau) {
    double y = z.imag() / tau.imag();
    z -= (double)std::llround(y) * tau;
    z -= (double)std::llround(z.real());
    return z;
}

}  // namespace

cplx wp_numeric(cplx z, cplx tau) {
    z = reduce_z(z, tau);
    cplx q = q_of(tau), u = std::exp(2.0 * PI * IU * z);
    cplx one(1.0, 0.0);
    cplx s = 1.0 / 12.0 + u / ((one - u) * (one - u));
    cplx qn = one;
    for (long n = 1; n <= NUM_ORDER; ++n) {
        qn *= q;
        cplx a = qn * u, b = qn / u;
        s += a / ((one - a) * (one - a)) + b / ((one - b) * (one - b)) -
             2.0 * qn / ((one - qn) * (one - qn));
    }
    return -4.0 * PI * PI * s;  // (2 pi i)^2 = -4 pi^2
}

cplx wp_lattice_oracle(cplx z, cplx tau, long box) {
    z = reduce_z(z, tau);
    cplx s = 1.0 / (z * z);
    cplx s4 = 0, s6 = 0, s8 = 0;
    for (long m = -box; m <= box; ++m)
        for (long n = -box; n <= box; ++n) {
            if (m == 0 && n == 0) continue;
            cplx w = (double)m + (double)n * tau;
            cplx iw2 = 1.0 / (w * w);
            s += 1.0 / ((z - w) * (z - w)) - iw2;
            cplx iw4 = iw2 * iw2;
            s4 += iw4;
            s6 += iw4 * iw2;
            s8 += iw4 * iw4;
        }
    double p2 = PI * PI, p4 = p2 * p2, p6 = p4 * p2, p8 = p4 * p4;
    s += 3.0 * z * z * (p4 * ek_eval(4, tau) - s4);
    s += 5.0 * z * z * z * z * (p6 * ek_eval(6, tau) - s6);
    s += 7.0 * std::pow(z, 6) * (p8 * ek_eval(8, tau) - s8);
    return s;
}

cplx fricke_numeric(const Rat& v1, const Rat& v2, cplx tau) {
    if (rat_is_int(v1) && rat_is_int(v2)) return 0;
    cplx lam = to_double(v1) * tau + to_double(v2);
    return c_eval(tau) * wp_numeric(lam, tau) / (PI * PI);
}

std::pair<Rat, Rat> phi_label(const QModZ& a1, const QModZ& a2, const LevelRho& rho) {
    QModZ r1 = rho.r[0] * a1 + rho.r[1] * a2;
    QModZ r2 = rho.r[2] * a1 + rho.r[3] * a2;
    return {r1.to_rat(), r2.to_rat()};
}

cplx Xa_numeric(const QModZ& a1, const QModZ& a2, const LevelRho& rho, cplx tau) {
    auto [r1, r2] = phi_label(a1, a2, rho);
    if (rat_is_int(r1) && rat_is_int(r2)) return 0;
    cplx z = to_double(r1) - tau * to_double(r2);
    return wp_numeric(z, tau) / (PI * PI);
}

cplx E2ka_numeric(unsigned k, const QModZ& a1, const QModZ& a2, const LevelRho& rho, cplx tau) {
    if (k < 2) throw std::domain_error("E2ka_numeric: need k >= 2");
    auto [r1, r2] = phi_label(a1, a2, rho);
    if (rat_is_int(r1) && rat_is_int(r2)) return nu_eval(2 * k, tau);
    // w = alpha + beta tau reduced into the fundamental cell
    double alpha = to_double(r1), beta = -to_double(r2);
    alpha -= std::llround(alpha);
    beta -= std::llround(beta);
    cplx w = alpha + beta * tau;
    const long box = 36;
    cplx s = 0;
    std::array<cplx, 4> sb{0, 0, 0, 0};  // box sums of w^{-2k-2j}, j = 0..3
    for (long m = -box; m <= box; ++m)
        for (long n = -box; n <= box; ++n) {
            cplx om = (double)m + (double)n * tau;
            s += std::pow(w + om, -2.0 * (double)k);
            if (m == 0 && n == 0) continue;
            cplx base = std::pow(om, -2.0 * (double)k);
            cplx iw2 = 1.0 / (om * om);
            for (int j = 0; j < 4; ++j) {
                sb[j] += base;
                base *= iw2;
            }
        }
    // tail via the full-lattice sums G_{2k+2j} = pi^{2k+2j} e_{2k+2j}
    cplx w2 = w * w;
    cplx wpow = 1.0;
    for (int j = 0; j < 4; ++j) {
        unsigned wt = 2 * k + 2 * (unsigned)j;
        double bin = 1.0;  // C(2j + 2k - 1, 2k - 1)
        for (unsigned i = 1; i <= 2 * (unsigned)j; ++i)
            bin *= (double)(2 * k - 1 + i) / (double)i;
        s += bin * wpow * (std::pow(PI, (double)wt) * ek_eval(wt, tau) - sb[j]);
        wpow *= w2;
    }
    return s * std::pow(PI, -2.0 * (double)k);
}

cplx E2ka_recursion(unsigned k, const QModZ& a1, const QModZ& a2, const LevelRho& rho, cplx tau) {
    auto [r1, r2] = phi_label(a1, a2, rho);
    if (rat_is_int(r1) && rat_is_int(r2)) return nu_eval(2 * k, tau);
    cplx X = Xa_numeric(a1, a2, rho, tau);
    std::vector<cplx> E(k + 1);
    E[1] = X + ek_eval(2, tau);
    for (unsigned m = 2; m <= k; ++m) {
        cplx v = X * (E[m - 1] - ek_eval(2 * m - 2, tau)) +
                 (1.0 - to_double(binom2(2 * m))) * ek_eval(2 * m, tau);
        for (unsigned kk = 1; kk + 2 <= m; ++kk)
            v -= (double)(2 * kk + 1) * ek_eval(2 * kk + 2, tau) *
                 (E[m - kk - 1] - ek_eval(2 * (m - kk - 1), tau));
        E[m] = v;
    }
    return E[k];
}

QExpansion mu_L_series(long n, long order) {
    QExpansion e2 = ek_series(2, order);
    return (Rat(n) * e2.subs_qn(n)).truncated(order) - e2;
}

SmithSL2 smith_sl2(std::array<long, 4> M) {
    if (M[0] * M[3] - M[1] * M[2] == 0) throw std::domain_error("smith_sl2: singular");
    std::array<long, 4> U{1, 0, 0, 1}, V{1, 0, 0, 1};
    auto lmul = [&](std::array<long, 4> E) {
        auto mul = [&](std::array<long, 4>& A) {
            A = {E[0] * A[0] + E[1] * A[2], E[0] * A[1] + E[1] * A[3],
                 E[2] * A[0] + E[3] * A[2], E[2] * A[1] + E[3] * A[3]};
        };
        mul(M);
        mul(U);
    };
    auto rmul = [&](std::array<long, 4> E) {
        auto mul = [&](std::array<long, 4>& A) {
            A = {A[0] * E[0] + A[1] * E[2], A[0] * E[1] + A[1] * E[3],
                 A[2] * E[0] + A[3] * E[2], A[2] * E[1] + A[3] * E[3]};
        };
        mul(M);
        mul(V);
    };
    while (true) {
        while (M[2] != 0 || M[1] != 0) {
            // plain shears when the pivot divides the target, so the generic
            // egcd step always shrinks |M[0]| and the loop terminates
            if (M[2] != 0) {
                if (M[0] != 0 && M[2] % M[0] == 0) {
                    lmul({1, 0, -M[2] / M[0], 1});
                } else {
                    long u, v;
                    long g = egcd(M[0], M[2], u, v);
                    lmul({u, v, -M[2] / g, M[0] / g});
                }
            }
            if (M[1] != 0) {
                if (M[0] != 0 && M[1] % M[0] == 0) {
                    rmul({1, -M[1] / M[0], 0, 1});
                } else {
                    long u, v;
                    long g = egcd(M[0], M[1], u, v);
                    rmul({u, -M[1] / g, v, M[0] / g});
                }
            }
        }
        if (M[0] < 0) lmul({-1, 0, 0, -1});
        if (M[3] % M[0] == 0) break;
        rmul({1, 0, 1, 1});  // mix the columns and reduce again
    }
    return {U, V, M[0], M[3]};
}

cplx mu_L_numeric(const Sublattice& L, cplx tau) {
    SmithSL2 s = smith_sl2({L.a, 0, L.b, L.d});
    long n = s.d2 / s.d1;
    // L = U^{-1} diag(d1, d1 n) Z^2, so the value is the diagonal one slashed by U
    cplx jf = (double)s.U[2] * tau + (double)s.U[3];
    cplx ut = ((double)s.U[0] * tau + (double)s.U[1]) / jf;
    cplx diag = (double)n * ek_eval(2, (double)n * ut) - ek_eval(2, ut);
    return diag / (jf * jf);
}

NumCheckReport div11_check(long N, const LevelRho& rho, double tol) {
    Sublattice L = hnf_of_vectors(
        {{rho.r[0], rho.r[2]}, {rho.r[1], rho.r[3]}, {N, 0}, {0, N}});
    NumCheckReport rep;
    for (cplx tau : tau_samples()) {
        cplx lhs = 0;
        for (long i = 0; i < N; ++i)
            for (long j = 0; j < N; ++j)
                lhs += Xa_numeric(QModZ(i, N), QModZ(j, N), rho, tau);
        cplx rhs = (double)(N * N) * mu_L_numeric(L, tau);
        double dev = std::abs(lhs - rhs);
        if (dev > rep.max_dev) rep.max_dev = dev;
    }
    rep.ok = rep.max_dev <= tol;
    if (!rep.ok) {
        std::ostringstream os;
        os << "stratum " << L.str() << " deviation " << rep.max_dev;
        rep.witness = os.str();
    }
    return rep;
}

OmegaDivisionReport omega_division_check(long N, unsigned k, double tol) {
    OmegaDivisionReport rep;
    std::ostringstream os;
    for (const Sublattice& L : enumerate_SN(N)) {
        std::array<long, 4> Mm{L.a, 0, L.b, L.d};
        SmithSL2 sm = smith_sl2(Mm);
        long d = sm.d1, n = sm.d2 / sm.d1;
        double Det = (double)(L.a * L.d);
        LevelRho rho{N, {((Mm[0] % N) + N) % N, ((Mm[1] % N) + N) % N,
                         ((Mm[2] % N) + N) % N, ((Mm[3] % N) + N) % N}};
        double lead = std::pow((double)N, 2.0 * (double)k) * (double)(d * d) *
                      std::pow((double)n, (double)k + 1.0);
        double stratum_dev = 0;
        for (cplx tau : tau_samples()) {
            cplx lhs = 0;
            for (long i = 0; i < N; ++i)
                for (long j = 0; j < N; ++j)
                    lhs += E2ka_numeric(k, QModZ(i, N), QModZ(j, N), rho, tau);
            // m^{-1} = adj(m)/Det for m = [[a,0],[b,d]]
            cplx jinv = ((double)-L.b * tau + (double)L.a) / Det;
            cplx minv_tau = ((double)L.d * tau) / ((double)-L.b * tau + (double)L.a);
            cplx base = std::pow(jinv, -2.0 * (double)k) * ek_eval(2 * k, minv_tau);
            cplx second = Det * (ek_eval(2 * k, tau) - nu_eval(2 * k, tau));
            cplx rhs_a = lead * std::pow(1.0 / Det, (double)k) * base - second;
            cplx rhs_b = lead * base - second;
            cplx rhs_c = std::pow((double)N, 2.0 * (double)k) *
                             std::pow(Det, -((double)k + 1.0)) * base -
                         second;
            rep.dev_a = std::max(rep.dev_a, std::abs(lhs - rhs_a));
            rep.dev_b = std::max(rep.dev_b, std::abs(lhs - rhs_b));
            double dc = std::abs(lhs - rhs_c);
            rep.dev_corrected = std::max(rep.dev_corrected, dc);
            stratum_dev = std::max(stratum_dev, dc);
        }
        os << L.str() << ":" << stratum_dev << " ";
    }
    rep.a_ok = rep.dev_a <= tol;
    rep.b_ok = rep.dev_b <= tol;
    rep.corrected_ok = rep.dev_corrected <= tol;
    rep.witness = os.str();
    return rep;
}

}  // namespace qlat
