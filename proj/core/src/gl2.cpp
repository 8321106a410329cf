#include "qlat/gl2.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include "qlat/arith.hpp"
#include "qlat/zeta.hpp"

namespace qlat {

namespace {

long mod_pos(long x, long m) {
    long r = x % m;
    return r < 0 ? r + m : r;
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

long rat_long(const Rat& x) { return (long)num(x).convert_to<long long>(); }

long den_long(const Rat& x) { return (long)den(x).convert_to<long long>(); }

inline long idx4(long r0, long r1, long r2, long r3, long N) {
    return ((r0 * N + r1) * N + r2) * N + r3;
}

inline std::array<long, 4> decode4(long i, long N) {
    std::array<long, 4> r;
    r[3] = i % N;
    i /= N;
    r[2] = i % N;
    i /= N;
    r[1] = i % N;
    r[0] = i / N;
    return r;
}

// g rho integral, for g = (1/t)[[A,B],[0,D]] and rho given mod a multiple of t
bool coset_valid(const CosetKey& g, const std::array<long, 4>& rho) {
    if (g.t == 1) return true;
    return (g.A * rho[0] + g.B * rho[2]) % g.t == 0 &&
           (g.A * rho[1] + g.B * rho[3]) % g.t == 0 && (g.D * rho[2]) % g.t == 0 &&
           (g.D * rho[3]) % g.t == 0;
}

}  // namespace

std::string CosetKey::str() const {
    std::ostringstream os;
    os << "(1/" << t << ")[[" << A << "," << B << "],[0," << D << "]]";
    return os.str();
}

CosetKey canonical_coset(const Mat2& g) {
    if (!(g.det() > 0)) throw std::domain_error("canonical_coset: det <= 0");
    long t = llcm(llcm(den_long(g.m00), den_long(g.m01)),
                  llcm(den_long(g.m10), den_long(g.m11)));
    long M00 = rat_long(g.m00 * t), M01 = rat_long(g.m01 * t);
    long M10 = rat_long(g.m10 * t), M11 = rat_long(g.m11 * t);
    if (M10 != 0) {
        long u, v;
        long g0 = egcd(M00, M10, u, v);
        long n00 = u * M00 + v * M10, n01 = u * M01 + v * M11;
        long n10 = -(M10 / g0) * M00 + (M00 / g0) * M10;
        long n11 = -(M10 / g0) * M01 + (M00 / g0) * M11;
        M00 = n00;
        M01 = n01;
        M10 = n10;
        M11 = n11;
    } else if (M00 < 0) {
        M00 = -M00;
        M01 = -M01;
        M11 = -M11;
    }
    if (M10 != 0 || M00 <= 0 || M11 <= 0)
        throw std::logic_error("canonical_coset: reduction failed");
    return {t, M00, mod_pos(M01, M11), M11};
}

void GL2Element::prune() {
    for (auto it = t_.begin(); it != t_.end();) {
        bool zero = std::all_of(it->second.begin(), it->second.end(),
                                [](const Rat& v) { return v == 0; });
        it = zero ? t_.erase(it) : ++it;
    }
}

void GL2Element::insert_masked(const CosetKey& g, std::vector<Rat> tab) {
    if (N_ % g.t != 0) throw std::logic_error("GL2Element: coset denominator vs level");
    long M = N_ * N_ * N_ * N_;
    if ((long)tab.size() != M) throw std::logic_error("GL2Element: bad table size");
    for (long i = 0; i < M; ++i)
        if (tab[i] != 0 && !coset_valid(g, decode4(i, N_))) tab[i] = 0;
    auto [it, fresh] = t_.emplace(g, std::vector<Rat>());
    if (fresh)
        it->second = std::move(tab);
    else
        for (long i = 0; i < M; ++i) it->second[i] += tab[i];
}

GL2Element GL2Element::zero(long N) {
    GL2Element f;
    f.N_ = N;
    return f;
}

GL2Element GL2Element::from_table(long N, const CosetKey& g, std::vector<Rat> tab) {
    GL2Element f;
    f.N_ = llcm(N, g.t);
    if ((long)tab.size() != N * N * N * N)
        throw std::domain_error("from_table: bad table size");
    long M = f.N_ * f.N_ * f.N_ * f.N_;
    std::vector<Rat> full(M);
    for (long i = 0; i < M; ++i) {
        auto r = decode4(i, f.N_);
        full[i] = tab[idx4(r[0] % N, r[1] % N, r[2] % N, r[3] % N, N)];
    }
    f.insert_masked(g, std::move(full));
    f.prune();
    return f;
}

GL2Element GL2Element::unit() { return from_table(1, CosetKey{1, 1, 0, 1}, {Rat(1)}); }

GL2Element GL2Element::mu_big(long n) {
    if (n <= 0) throw std::domain_error("mu_big: n >= 1");
    return from_table(1, CosetKey{1, n, 0, n}, {Rat(1)});
}

GL2Element GL2Element::hecke_Tad(long a, long d) {
    if (a <= 0 || d % a != 0) throw std::domain_error("hecke_Tad: need a | d, a > 0");
    GL2Element f = zero(1);
    for (auto [A, B, D] : double_coset_reps(d / a))
        f.t_[CosetKey{1, a * A, a * B, a * D}] = {Rat(1)};
    return f;
}

GL2Element GL2Element::hecke_Tn(long n) {
    if (n <= 0) throw std::domain_error("hecke_Tn: n >= 1");
    GL2Element f = zero(1);
    for (long A : divisors(n)) {
        long D = n / A;
        for (long B = 0; B < D; ++B) f.t_[CosetKey{1, A, B, D}] = {Rat(1)};
    }
    return f;
}

GL2Element GL2Element::promoted(long M) const {
    if (M == N_) return *this;
    if (M % N_ != 0) throw std::domain_error("promoted: bad level");
    GL2Element f = zero(M);
    long sz = M * M * M * M;
    for (auto& [g, tab] : t_) {
        std::vector<Rat> full(sz);
        for (long i = 0; i < sz; ++i) {
            auto r = decode4(i, M);
            full[i] = tab[idx4(r[0] % N_, r[1] % N_, r[2] % N_, r[3] % N_, N_)];
        }
        f.insert_masked(g, std::move(full));
    }
    return f;
}

Rat GL2Element::value(const CosetKey& g, const std::array<long, 4>& rho) const {
    auto it = t_.find(g);
    if (it == t_.end()) return 0;
    std::array<long, 4> r;
    for (int i = 0; i < 4; ++i) r[i] = mod_pos(rho[i], N_);
    if (!coset_valid(g, r)) return 0;
    return it->second[idx4(r[0], r[1], r[2], r[3], N_)];
}

Rat GL2Element::sup_abs() const {
    Rat m = 0;
    for (auto& [g, tab] : t_)
        for (auto& v : tab) {
            Rat a = v < 0 ? Rat(-v) : v;
            if (a > m) m = a;
        }
    return m;
}

GL2Element operator+(const GL2Element& a, const GL2Element& b) {
    long L = llcm(a.N_, b.N_);
    GL2Element x = a.promoted(L), y = b.promoted(L);
    for (auto& [g, tab] : y.t_) {
        auto [it, fresh] = x.t_.emplace(g, tab);
        if (!fresh)
            for (size_t i = 0; i < tab.size(); ++i) it->second[i] += tab[i];
    }
    x.prune();
    return x;
}

GL2Element operator-(const GL2Element& a, const GL2Element& b) {
    return a + (Rat(-1) * b);
}

GL2Element operator*(const Rat& s, const GL2Element& a) {
    GL2Element x = a;
    for (auto& [g, tab] : x.t_)
        for (auto& v : tab) v = s * v;
    x.prune();
    return x;
}

bool operator==(const GL2Element& a, const GL2Element& b) {
    GL2Element d = a - b;
    return d.t_.empty();
}

std::string GL2Element::str() const {
    std::ostringstream os;
    os << "level " << N_ << ", " << t_.size() << " cosets";
    for (auto& [g, tab] : t_) {
        os << "\n  " << g.str() << " :";
        long shown = 0;
        for (size_t i = 0; i < tab.size() && shown < 8; ++i)
            if (tab[i] != 0) {
                os << " [" << i << "]=" << rat_str(tab[i]);
                ++shown;
            }
    }
    return os.str();
}

GL2Element convolve(const GL2Element& f1, const GL2Element& f2) {
    struct Job {
        const CosetKey* g;
        const std::vector<Rat>* gt;
        const CosetKey* h;
        const std::vector<Rat>* ht;
        CosetKey out;
    };
    long L = f2.N_;
    std::vector<Job> jobs;
    for (auto& [h, ht] : f2.t_) {
        L = llcm(L, h.t * f1.N_);
        for (auto& [g, gt] : f1.t_) {
            CosetKey out = canonical_coset(g.mat() * h.mat());
            L = llcm(L, out.t);
            jobs.push_back({&g, &gt, &h, &ht, out});
        }
    }
    GL2Element res = GL2Element::zero(L);
    long sz = L * L * L * L;
    long N1 = f1.N_, N2 = f2.N_;
    for (auto& jb : jobs) {
        auto it = res.t_.emplace(jb.out, std::vector<Rat>(sz)).first;
        std::vector<Rat>& acc = it->second;
        long th = jb.h->t, hA = jb.h->A, hB = jb.h->B, hD = jb.h->D;
        for (long i = 0; i < sz; ++i) {
            auto r = decode4(i, L);
            long e00 = hA * r[0] + hB * r[2], e01 = hA * r[1] + hB * r[3];
            long e10 = hD * r[2], e11 = hD * r[3];
            if (e00 % th || e01 % th || e10 % th || e11 % th) continue;
            const Rat& hv =
                (*jb.ht)[idx4(r[0] % N2, r[1] % N2, r[2] % N2, r[3] % N2, N2)];
            if (hv == 0) continue;
            const Rat& gv = (*jb.gt)[idx4(mod_pos(e00 / th, N1), mod_pos(e01 / th, N1),
                                          mod_pos(e10 / th, N1), mod_pos(e11 / th, N1), N1)];
            if (gv == 0) continue;
            acc[i] += gv * hv;
        }
    }
    // mask each output coset against its own integrality domain
    for (auto& [g, tab] : res.t_)
        for (long i = 0; i < sz; ++i)
            if (tab[i] != 0 && !coset_valid(g, decode4(i, L))) tab[i] = 0;
    res.prune();
    return res;
}

GL2Element adjoint(const GL2Element& f) {
    // f*(Q, rho) = conj f(Q^{-1}, Q rho).  The support of f* in the first
    // argument is the union of the double cosets of the inverses of the stored
    // cosets; for each output coset Q the source coset is canonical(Q^{-1}),
    // which need not be the inverse of any single stored key.  Enumerate
    // candidate Q's by matching elementary divisors within each double coset.
    struct Job {
        CosetKey out;
        const std::vector<Rat>* src;
    };
    std::map<CosetKey, Job> jobs;
    long L = 1;
    for (auto& [g, tab] : f.t_) {
        (void)tab;
        Mat2 inv = g.mat().inverse();
        long s = llcm(llcm(den_long(inv.m00), den_long(inv.m01)),
                      llcm(den_long(inv.m10), den_long(inv.m11)));
        std::array<long, 4> Mi{rat_long(inv.m00 * s), rat_long(inv.m01 * s),
                               rat_long(inv.m10 * s), rat_long(inv.m11 * s)};
        long dM = Mi[0] * Mi[3] - Mi[1] * Mi[2];
        long c1 = lgcd(lgcd(std::abs(Mi[0]), std::abs(Mi[1])),
                       lgcd(std::abs(Mi[2]), std::abs(Mi[3])));
        for (long A : divisors(dM)) {
            long D = dM / A;
            for (long B = 0; B < D; ++B) {
                if (lgcd(A, lgcd(B, D)) != c1) continue;  // same double coset
                CosetKey out = canonical_coset(Mat2{Rat(A, s), Rat(B, s), Rat(0), Rat(D, s)});
                if (jobs.count(out)) continue;
                CosetKey src = canonical_coset(out.mat().inverse());
                auto it = f.t_.find(src);
                if (it == f.t_.end()) continue;
                jobs.emplace(out, Job{out, &it->second});
                L = llcm(L, out.t * f.N_);
            }
        }
    }
    GL2Element res = GL2Element::zero(L);
    long sz = L * L * L * L, N = f.N_;
    for (auto& [key, jb] : jobs) {
        std::vector<Rat> acc(sz);
        long t = key.t, qA = key.A, qB = key.B, qD = key.D;
        for (long i = 0; i < sz; ++i) {
            auto r = decode4(i, L);
            long e00 = qA * r[0] + qB * r[2], e01 = qA * r[1] + qB * r[3];
            long e10 = qD * r[2], e11 = qD * r[3];
            if (e00 % t || e01 % t || e10 % t || e11 % t) continue;
            acc[i] = (*jb.src)[idx4(mod_pos(e00 / t, N), mod_pos(e01 / t, N),
                                    mod_pos(e10 / t, N), mod_pos(e11 / t, N), N)];
        }
        res.insert_masked(key, std::move(acc));
    }
    res.prune();
    return res;
}

GL2Element theta_endo(const std::array<long, 4>& m, const GL2Element& f) {
    long Det = m[0] * m[3] - m[1] * m[2];
    if (Det <= 0) throw std::domain_error("theta_endo: det <= 0");
    std::array<long, 4> adj{m[3], -m[1], -m[2], m[0]};
    long L = f.N_ * Det;
    GL2Element res = GL2Element::zero(L);
    long sz = L * L * L * L, N = f.N_;
    for (auto& [g, tab] : f.t_) {
        std::vector<Rat> acc(sz);
        for (long i = 0; i < sz; ++i) {
            auto r = decode4(i, L);
            long e00 = adj[0] * r[0] + adj[1] * r[2], e01 = adj[0] * r[1] + adj[1] * r[3];
            long e10 = adj[2] * r[0] + adj[3] * r[2], e11 = adj[2] * r[1] + adj[3] * r[3];
            if (mod_pos(e00, Det) || mod_pos(e01, Det) || mod_pos(e10, Det) ||
                mod_pos(e11, Det))
                continue;
            long f00 = e00 / Det, f01 = e01 / Det, f10 = e10 / Det, f11 = e11 / Det;
            acc[i] = tab[idx4(mod_pos(f00, N), mod_pos(f01, N), mod_pos(f10, N),
                              mod_pos(f11, N), N)];
        }
        res.insert_masked(g, std::move(acc));
    }
    res.prune();
    return res;
}

GL2Element symmetry_right(const std::array<long, 4>& gamma, const GL2Element& f) {
    long N = f.N_;
    if (mod_pos(gamma[0] * gamma[3] - gamma[1] * gamma[2], N) != 1 % N)
        throw std::domain_error("symmetry_right: det != 1 mod level");
    GL2Element res = GL2Element::zero(N);
    long sz = N * N * N * N;
    for (auto& [g, tab] : f.t_) {
        std::vector<Rat> acc(sz);
        for (long i = 0; i < sz; ++i) {
            auto r = decode4(i, N);
            long s00 = mod_pos(r[0] * gamma[0] + r[1] * gamma[2], N);
            long s01 = mod_pos(r[0] * gamma[1] + r[1] * gamma[3], N);
            long s10 = mod_pos(r[2] * gamma[0] + r[3] * gamma[2], N);
            long s11 = mod_pos(r[2] * gamma[1] + r[3] * gamma[3], N);
            acc[i] = tab[idx4(s00, s01, s10, s11, N)];
        }
        res.insert_masked(g, std::move(acc));
    }
    res.prune();
    return res;
}

CheckReport inner_check(long n, const GL2Element& f) {
    GL2Element lhs = convolve(convolve(GL2Element::mu_big(n), f),
                              adjoint(GL2Element::mu_big(n)));
    GL2Element rhs = theta_endo({n, 0, 0, n}, f);
    bool ok = lhs == rhs;
    return {ok, ok ? "" : "inner endomorphism mismatch at n=" + std::to_string(n)};
}

namespace {

// shared Gibbs loop: callback(m, weight) over triangular reps, det <= cutoff
template <class F>
void gibbs_sum(double beta, long cutoff, F&& cb) {
    for (long A = 1; A <= cutoff; ++A)
        for (long D = 1; A * D <= cutoff; ++D) {
            double w = std::pow((double)(A * D), -beta);
            for (long B = 0; B < D; ++B) cb(A, B, D, w);
        }
}

}  // namespace

GL2StateValue kms_state_eval(double beta, const LevelRho& l, const GL2Element& f,
                             long cutoff) {
    if (beta <= 2) throw std::domain_error("kms_state_eval: need beta > 2");
    long N = f.level();
    if (l.N % N != 0) throw std::domain_error("kms_state_eval: level mismatch");
    auto it = f.data().find(CosetKey{1, 1, 0, 1});
    double Z = zeta_em(beta) * zeta_em(beta - 1.0);
    if (it == f.data().end()) return {0.0, 0.0};
    std::vector<double> dtab(it->second.size());
    double sup = 0;
    for (size_t i = 0; i < dtab.size(); ++i) {
        dtab[i] = to_double(it->second[i]);
        sup = std::max(sup, std::abs(dtab[i]));
    }
    const auto& q = l.r;
    double s = 0;
    gibbs_sum(beta, cutoff, [&](long A, long B, long D, double w) {
        long r00 = mod_pos(A * q[0] + B * q[2], N), r01 = mod_pos(A * q[1] + B * q[3], N);
        long r10 = mod_pos(D * q[2], N), r11 = mod_pos(D * q[3], N);
        s += w * dtab[idx4(r00, r01, r10, r11, N)];
    });
    return {s / Z, sup * sigma_tail_bound(beta, cutoff) / Z};
}

GL2StateValue kms_indicator_state(double beta, const LevelRho& l,
                                  const std::function<bool(const std::array<long, 4>&)>& ind,
                                  long cutoff) {
    if (beta <= 2) throw std::domain_error("kms_indicator_state: need beta > 2");
    const auto& q = l.r;
    double Z = zeta_em(beta) * zeta_em(beta - 1.0);
    double s = 0;
    gibbs_sum(beta, cutoff, [&](long A, long B, long D, double w) {
        std::array<long, 4> m{A * q[0] + B * q[2], A * q[1] + B * q[3], D * q[2],
                              D * q[3]};
        if (ind(m)) s += w;
    });
    return {s / Z, sigma_tail_bound(beta, cutoff) / Z};
}

bool ind_scal_div(const std::array<long, 4>& m, long n) {
    return m[0] % n == 0 && m[1] % n == 0 && m[2] % n == 0 && m[3] % n == 0;
}

bool ind_det_div(const std::array<long, 4>& m, long n) {
    return (m[0] * m[3] - m[1] * m[2]) % n == 0;
}

std::pair<long, long> divisor_valuations(const std::array<long, 4>& m, long p) {
    long det = m[0] * m[3] - m[1] * m[2];
    if (det == 0) throw std::domain_error("divisor_valuations: singular matrix");
    long g = 0;
    for (long v : m) g = lgcd(g, v);
    long v1 = valuation(g, p);
    long v2 = valuation(std::abs(det), p) - v1;
    return {v1, v2};
}

bool ind_e(const std::array<long, 4>& m, long p, long i, long j) {
    auto [v1, v2] = divisor_valuations(m, p);
    return v1 >= i && v2 >= j;
}

bool ind_proj_p(const std::array<long, 4>& m, long p, long k, long l) {
    long det = std::abs(m[0] * m[3] - m[1] * m[2]);
    long g = 0;
    for (long v : m) g = lgcd(g, v);
    return valuation(g, p) == k && valuation(det, p) == k + l;
}

bool ind_proj_p_smith(const std::array<long, 4>& m, long p, long k, long l) {
    int s = (int)ind_e(m, p, k, l) - (int)ind_e(m, p, k + 1, l) -
            (int)ind_e(m, p, k, l + 1) + (int)ind_e(m, p, k + 1, l + 1);
    return s == 1;
}

namespace {

std::vector<Rat> indicator_table(long N, const std::function<bool(const std::array<long, 4>&)>& ind) {
    long sz = N * N * N * N;
    std::vector<Rat> tab(sz);
    for (long i = 0; i < sz; ++i)
        if (ind(decode4(i, N))) tab[i] = 1;
    return tab;
}

// capped elementary-divisor test from a residue matrix mod p^c
bool residue_e(const std::array<long, 4>& r, long p, long c, long pc, long i, long j) {
    long g = 0;
    for (long v : r) g = lgcd(g, v);
    long v1 = g == 0 ? c : std::min(valuation(g, p), c);
    if (v1 < i) return false;
    if (v1 >= j) return true;
    long det = mod_pos(r[0] * r[3] - r[1] * r[2], pc);
    long vd = det == 0 ? c : valuation(det, p);
    if (vd < c) return vd - v1 >= j;
    if (v1 + j <= c) return true;
    throw std::domain_error("residue_e: level too small to decide");
}

}  // namespace

GL2Element proj_scal(long n, long N) {
    if (N % n != 0) throw std::domain_error("proj_scal: need n | N");
    return GL2Element::from_table(
        N, CosetKey{1, 1, 0, 1},
        indicator_table(N, [n](const std::array<long, 4>& r) { return ind_scal_div(r, n); }));
}

GL2Element proj_det(long n, long N) {
    if (N % n != 0) throw std::domain_error("proj_det: need n | N");
    return GL2Element::from_table(
        N, CosetKey{1, 1, 0, 1},
        indicator_table(N, [n](const std::array<long, 4>& r) { return ind_det_div(r, n); }));
}

GL2Element proj_p_table(long p, long k, long l, long N) {
    long c = valuation(N, p);
    long pc = 1;
    for (long i = 0; i < c; ++i) pc *= p;
    if (pc != N || c < k + l + 1)
        throw std::domain_error("proj_p_table: need N = p^c, c >= k+l+1");
    return GL2Element::from_table(
        N, CosetKey{1, 1, 0, 1}, indicator_table(N, [=](const std::array<long, 4>& r) {
            long g = 0;
            for (long v : r) g = lgcd(g, v);
            long v1 = g == 0 ? c : std::min(valuation(g, p), c);
            if (v1 != k) return false;
            long det = mod_pos(r[0] * r[3] - r[1] * r[2], pc);
            long vd = det == 0 ? c : valuation(det, p);
            return vd == k + l;
        }));
}

GL2Element proj_p_smith_table(long p, long k, long l, long N) {
    long c = valuation(N, p);
    long pc = 1;
    for (long i = 0; i < c; ++i) pc *= p;
    if (pc != N) throw std::domain_error("proj_p_smith_table: need N = p^c");
    return GL2Element::from_table(
        N, CosetKey{1, 1, 0, 1}, indicator_table(N, [=](const std::array<long, 4>& r) {
            int s = (int)residue_e(r, p, c, pc, k, l) - (int)residue_e(r, p, c, pc, k + 1, l) -
                    (int)residue_e(r, p, c, pc, k, l + 1) +
                    (int)residue_e(r, p, c, pc, k + 1, l + 1);
            return s == 1;
        }));
}

double proba_closed_form(double beta, long p, long k, long l) {
    if (k < 0 || l < k) throw std::domain_error("proba_closed_form: need 0 <= k <= l");
    double dp = (double)p;
    double pb = std::pow(dp, -beta);
    if (k == l)
        return std::pow(dp, -2.0 * l * beta) * (1.0 - pb) * (1.0 - std::pow(dp, 1.0 - beta));
    return std::pow(dp, -(double)(k + l) * beta) * std::pow(dp, (double)(l - k)) *
           (1.0 + 1.0 / dp) * (1.0 - pb) * (1.0 - std::pow(dp, 1.0 - beta));
}

namespace {

RatFunc rf_pow(const RatFunc& x, long e) {
    RatFunc r = RatFunc::constant(1);
    for (long i = 0; i < e; ++i) r = r * x;
    return r;
}

}  // namespace

RatFunc sigma_closed_form(long p, long l) {
    RatFunc x = RatFunc::x();
    RatFunc a = RatFunc(RPoly(std::vector<Rat>{Rat(1 + p), Rat(-(1 + p))}),
                        RPoly(std::vector<Rat>{Rat(p), Rat(-1)}));
    Rat pl = rpow(Rat(p), l);
    return a * RatFunc::constant(pl) * rf_pow(x, l) +
           (RatFunc::constant(1) - a) * rf_pow(x, 2 * l);
}

CheckReport sigma_recursion_check(long p, long lmax) {
    RatFunc x = RatFunc::x();
    std::vector<RatFunc> sig(lmax + 1);
    sig[0] = RatFunc::constant(1);
    for (long l = 1; l <= lmax; ++l) {
        Rat pl = rpow(Rat(p), l);
        RatFunc v = RatFunc::constant(pl * Rat(p + 1, p)) * (rf_pow(x, l) - rf_pow(x, 2 * l));
        for (long k = 1; k <= l - 1; ++k)
            v = v - RatFunc::constant(rpow(Rat(p), k)) * rf_pow(x, 2 * k) * sig[l - k];
        for (long k = 0; k <= l - 1; ++k)
            v = v + RatFunc::constant(rpow(Rat(p), k)) * rf_pow(x, 2 * k + 2) * sig[l - k - 1];
        sig[l] = v;
        if (!(sig[l] == sigma_closed_form(p, l)))
            return {false, "stratum weight mismatch at p=" + std::to_string(p) +
                               ", l=" + std::to_string(l)};
    }
    return {true, ""};
}

EquiResult equi_distribution(long N, double beta, long cutoff) {
    long sz = N * N * N * N;
    std::vector<std::array<long, 4>> sl2;
    for (long i = 0; i < sz; ++i) {
        auto g = decode4(i, N);
        if (mod_pos(g[0] * g[3] - g[1] * g[2], N) == 1 % N) sl2.push_back(g);
    }
    std::vector<double> wr(sz, 0.0);
    gibbs_sum(beta, cutoff, [&](long A, long B, long D, double w) {
        wr[idx4(A % N, B % N, 0, D % N, N)] += w;
    });
    EquiResult res;
    res.dist.assign(sz, 0.0);
    double inv = 1.0 / (double)sl2.size();
    for (long y = 0; y < sz; ++y) {
        if (wr[y] == 0) continue;
        auto ry = decode4(y, N);
        for (auto& g : sl2) {
            long x00 = mod_pos(g[0] * ry[0] + g[1] * ry[2], N);
            long x01 = mod_pos(g[0] * ry[1] + g[1] * ry[3], N);
            long x10 = mod_pos(g[2] * ry[0] + g[3] * ry[2], N);
            long x11 = mod_pos(g[2] * ry[1] + g[3] * ry[3], N);
            res.dist[idx4(x00, x01, x10, x11, N)] += wr[y] * inv;
        }
    }
    double total = 0;
    for (double v : res.dist) total += v;
    for (double& v : res.dist) v /= total;
    double target = 1.0 / (double)sz;
    for (double v : res.dist) res.max_dev = std::max(res.max_dev, std::abs(v - target));
    return res;
}

NumCheckReport galois_covariance_check(long N, const std::array<long, 4>& alpha,
                                       double tol) {
    if (lgcd(mod_pos(alpha[0] * alpha[3] - alpha[1] * alpha[2], N), N) != 1)
        throw std::domain_error("galois_covariance_check: det not a unit mod N");
    NumCheckReport rep;
    LevelRho rho{N, {mod_pos(alpha[0], N), mod_pos(alpha[1], N), mod_pos(alpha[2], N),
                     mod_pos(alpha[3], N)}};
    for (cplx tau : tau_samples())
        for (long i = 0; i < N; ++i)
            for (long j = 0; j < N; ++j) {
                QModZ a1(i, N), a2(j, N);
                cplx lhs = Xa_numeric(a1, a2, rho, tau);
                // transported label (v1, v2) -> (a3 v1 - a2 v2, -a1 v1 + a0 v2)
                QModZ v1 = QModZ(-j, N), v2 = a1;
                QModZ w1 = alpha[3] * v1 - alpha[2] * v2;
                QModZ w2 = -(alpha[1] * v1) + alpha[0] * v2;
                cplx rhs = 0;
                if (!(w1.is_zero() && w2.is_zero())) {
                    cplx z = w2.to_rat().convert_to<double>() +
                             tau * w1.to_rat().convert_to<double>();
                    rhs = wp_numeric(z, tau) / (std::numbers::pi * std::numbers::pi);
                }
                rep.max_dev = std::max(rep.max_dev, std::abs(lhs - rhs));
            }
    rep.ok = rep.max_dev <= tol;
    if (!rep.ok) rep.witness = "deviation " + std::to_string(rep.max_dev);
    return rep;
}

}  // namespace qlat
