#include "qlat/lat2.hpp"

#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include "qlat/arith.hpp"

namespace qlat {

namespace {

// g = u*x + v*y
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

long mod_pos(long x, long m) {
    long r = x % m;
    return r < 0 ? r + m : r;
}

}  // namespace

bool Sublattice::contains(long x, long y) const {
    if (x % a != 0) return false;
    return mod_pos(y - (x / a) * b, d) == 0;
}

std::string Sublattice::str() const {
    std::ostringstream os;
    os << "[(" << a << "," << b << "),(0," << d << ")]";
    return os.str();
}

Sublattice hnf_of_vectors(const std::vector<std::pair<long, long>>& vs) {
    // combine to a single vector (a, y1) with a = gcd of x-coordinates
    long ax = 0, ay = 0;
    std::vector<long> ys;  // y-coordinates of x == 0 remainders
    for (auto [x, y] : vs) {
        if (ax == 0) {
            if (x != 0) { ax = x; ay = y; }
            else ys.push_back(y);
            continue;
        }
        long u, v;
        long g = egcd(ax, x, u, v);
        long ny = u * ay + v * y;
        // complementary combination has zero x-coordinate
        ys.push_back((x / g) * ay - (ax / g) * y);
        ax = g;
        ay = ny;
    }
    if (ax == 0) throw std::domain_error("hnf_of_vectors: rank-deficient input");
    if (ax < 0) { ax = -ax; ay = -ay; }
    long d = 0;
    for (long y : ys) d = std::gcd(d, y);
    if (d == 0) throw std::domain_error("hnf_of_vectors: rank-deficient input");
    return Sublattice{ax, mod_pos(ay, d), d};
}

Sublattice hnf(long m00, long m01, long m10, long m11) {
    if (m00 * m11 - m01 * m10 == 0) throw std::domain_error("hnf: singular matrix");
    return hnf_of_vectors({{m00, m10}, {m01, m11}});
}

Sublattice meet(const Sublattice& L1, const Sublattice& L2) {
    long A = std::lcm(L1.a, L2.a);
    long g = std::gcd(L1.d, L2.d);
    long t = mod_pos((A / L1.a) * L1.b - (A / L2.a) * L2.b, g);
    long k0 = t == 0 ? 1 : g / std::gcd(t, g);
    long x0 = k0 * A;
    long r1 = mod_pos((x0 / L1.a) * L1.b, L1.d);
    long r2 = mod_pos((x0 / L2.a) * L2.b, L2.d);
    // CRT: y == r1 (d1), y == r2 (d2); solvable by the choice of k0
    long g2 = std::gcd(L1.d, L2.d);
    if ((r2 - r1) % g2 != 0) throw std::logic_error("meet: inconsistent congruences");
    long m2 = L2.d / g2;
    long u, v;
    egcd(L1.d / g2, m2, u, v);
    long k = mod_pos(((r2 - r1) / g2) % m2 * u, m2);
    long D = std::lcm(L1.d, L2.d);
    long y0 = mod_pos(r1 + L1.d * k, D);
    return Sublattice{x0, y0, D};
}

std::vector<Sublattice> enumerate_index(long n) {
    std::vector<Sublattice> out;
    for (long a : divisors(n)) {
        long d = n / a;
        for (long b = 0; b < d; ++b) out.push_back({a, b, d});
    }
    return out;
}

std::vector<Sublattice> enumerate_SN(long N) {
    std::vector<Sublattice> out;
    for (long a : divisors(N))
        for (long d : divisors(N))
            for (long b = 0; b < d; ++b)
                if ((N / a) * b % d == 0) out.push_back({a, b, d});
    return out;
}

Mat2 Mat2::inverse() const {
    Rat D = det();
    if (D == 0) throw std::domain_error("Mat2: singular");
    return {m11 / D, -m01 / D, -m10 / D, m00 / D};
}

bool Mat2::is_integral() const {
    return rat_is_int(m00) && rat_is_int(m01) && rat_is_int(m10) && rat_is_int(m11);
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
            x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
}

std::string Mat2::str() const {
    return "[[" + rat_str(m00) + "," + rat_str(m01) + "],[" + rat_str(m10) + "," +
           rat_str(m11) + "]]";
}

namespace {

// image vectors of the canonical basis of L under a rational matrix
std::array<std::pair<Rat, Rat>, 2> image_basis(const Mat2& g, const Sublattice& L) {
    return {{{g.m00 * L.a + g.m01 * L.b, g.m10 * L.a + g.m11 * L.b},
             {g.m01 * L.d, g.m11 * L.d}}};
}

bool integral_image(const Mat2& g, const Sublattice& L) {
    for (auto& [x, y] : image_basis(g, L))
        if (!rat_is_int(x) || !rat_is_int(y)) return false;
    return true;
}

}  // namespace

MuSymbol mu_make(const Mat2& g, const Sublattice& L) {
    if (!(g.det() > 0)) throw std::domain_error("mu_make: det(g) <= 0");
    if (!integral_image(g, L)) throw std::domain_error("mu_make: g(L) not integral");
    return {g, L};
}

MuSymbol mu_product(const MuSymbol& x, const MuSymbol& y) {
    // mu(g1,L1) mu(g2,L2) = mu(g1 g2, g2^{-1}(L1) /\ L2)
    Mat2 h = y.g.inverse();
    auto vb = image_basis(h, x.L);
    Int t = 1;
    for (auto& [vx, vy] : vb) t = llcm((long)t.convert_to<long long>(),
                                       (long)(den(vx) * den(vy)).convert_to<long long>());
    long tl = (long)t.convert_to<long long>();
    std::vector<std::pair<long, long>> cols;
    for (auto& [vx, vy] : vb)
        cols.push_back({(long)num(vx * tl).convert_to<long long>(),
                        (long)num(vy * tl).convert_to<long long>()});
    Sublattice A = hnf_of_vectors(cols);
    Sublattice tL2{tl * y.L.a, tl * y.L.b, tl * y.L.d};
    Sublattice M = meet(A, tL2);
    if (M.a % tl != 0 || M.b % tl != 0 || M.d % tl != 0)
        throw std::logic_error("mu_product: intersection not integral");
    Sublattice Lr{M.a / tl, M.b / tl, M.d / tl};
    return mu_make(x.g * y.g, Lr);
}

MuSymbol mu_adjoint(const MuSymbol& x) {
    // mu(g,L)* = mu(g^{-1}, g(L))
    auto vb = image_basis(x.g, x.L);
    std::vector<std::pair<long, long>> cols;
    for (auto& [vx, vy] : vb)
        cols.push_back({(long)num(vx).convert_to<long long>(),
                        (long)num(vy).convert_to<long long>()});
    return mu_make(x.g.inverse(), hnf_of_vectors(cols));
}

std::vector<std::array<long, 3>> double_coset_reps(long n) {
    std::vector<std::array<long, 3>> out;
    for (long a : divisors(n)) {
        long d = n / a;
        for (long b = 0; b < d; ++b)
            if (std::gcd(std::gcd(a, b), d) == 1) out.push_back({a, b, d});
    }
    return out;
}

Int omega(long n) {
    Rat v(n);
    for (long p : prime_divisors(n)) v *= Rat(p + 1, p);
    return num(v);
}

long omega_ab(long p, long l, long va, long vb) {
    if (va < 0 || va > vb) throw std::domain_error("omega_ab: need 0 <= va <= vb");
    long count = 0;
    for (long x = 0; x <= l; ++x) {
        long q = 1;
        for (long i = 0; i < l - x; ++i) q *= p;
        for (long s = 0; s < q; ++s) {
            // primitivity of [[p^x, s],[0, p^{l-x}]]
            if (x > 0 && l - x > 0 && s % p == 0) continue;
            if (x > 0 && x < l && s == 0) continue;
            // integrality of (1/p^l) [[p^x, s],[0,p^{l-x}]] diag(p^va, p^vb)
            if (x + va < l) continue;
            if (x > vb) continue;
            if (s != 0 && valuation(s, p) + vb < l) continue;
            ++count;
        }
    }
    return count;
}

Int sl2_order(long N) {
    Rat v = rpow(Rat(N), 3);
    for (long p : prime_divisors(N)) v *= Rat(p * p - 1, p * p);
    return num(v);
}

long sl2_order_enumerated(long N) {
    long count = 0;
    for (long a = 0; a < N; ++a)
        for (long b = 0; b < N; ++b)
            for (long c = 0; c < N; ++c)
                for (long d = 0; d < N; ++d)
                    if (mod_pos(a * d - b * c, N) == 1 % N) ++count;
    return count;
}

}  // namespace qlat
