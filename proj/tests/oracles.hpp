#pragma once

// Brute-force and dense reference implementations. Nothing here calls into
// the library: every answer is recomputed from first principles so the tests
// compare two independent routes.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using cd = std::complex<double>;
using Vec = std::vector<cd>;
using Mat = std::vector<Vec>;

inline u64 gcd(u64 a, u64 b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

inline u64 mod(long long a, u64 m) {
    const auto mm = static_cast<long long>(m);
    return static_cast<u64>(((a % mm) + mm) % mm);
}

/// (prime, exponent) pairs by plain trial division.
inline std::vector<std::pair<u64, unsigned>> factor(u64 n) {
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 p = 2; p * p <= n; ++p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/// Scans [0, m) for the inverse.
inline u64 inverse(u64 a, u64 m) {
    for (u64 x = 0; x < m; ++x)
        if ((a % m) * x % m == 1 % m) return x;
    return 0;
}

inline std::vector<u64> unit_roots(u64 M) {
    std::vector<u64> out;
    for (u64 x = 0; x < M; ++x)
        if (x * x % M == 1 % M) out.push_back(x);
    return out;
}

/// (d, M/d) with d <= M/d and gcd 1, by scanning every d.
inline std::vector<std::pair<u64, u64>> coprime_splits(u64 M) {
    std::vector<std::pair<u64, u64>> out;
    for (u64 d = 1; d * d <= M; ++d)
        if (M % d == 0 && gcd(d, M / d) == 1) out.emplace_back(d, M / d);
    return out;
}

inline cd omega(u64 M, long long e) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(mod(e, M)) / static_cast<double>(M);
    return {std::cos(a), std::sin(a)};
}

inline Mat zeros(u64 n) { return Mat(n, Vec(n)); }

/// tau(d): diagonal with entries omega_d^x.
inline Mat tau(u64 M, u64 d) {
    Mat m = zeros(M);
    for (u64 x = 0; x < M; ++x) m[x][x] = omega(d, static_cast<long long>(x));
    return m;
}

/// T(s)|x> = |x - s>.
inline Mat shift(u64 M, long long s) {
    Mat m = zeros(M);
    for (u64 x = 0; x < M; ++x) m[mod(static_cast<long long>(x) - s, M)][x] = 1.0;
    return m;
}

inline Mat mul(const Mat& a, const Mat& b) {
    const auto n = a.size();
    Mat c = zeros(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline Vec mul(const Mat& a, const Vec& v) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

inline double diff(const Mat& a, const Mat& b) {
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
    return worst;
}

inline double diff(const Vec& a, const Vec& b) {
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

inline bool is_identity(const Mat& a, double tol = 1e-9) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (std::abs(a[i][j] - (i == j ? cd{1.0} : cd{})) > tol) return false;
    return true;
}

/// Smallest p >= 1 with a^p = 1, by repeated multiplication.
inline u64 period(const Mat& a, u64 limit) {
    Mat p = a;
    for (u64 n = 1; n <= limit; ++n) {
        if (is_identity(p)) return n;
        p = mul(p, a);
    }
    return 0;
}

/// The c in [0, M) with AB = omega^c BA, or -1 when none works.
inline long long commutator(const Mat& a, const Mat& b, u64 M) {
    const Mat ab = mul(a, b), ba = mul(b, a);
    for (u64 c = 0; c < M; ++c) {
        Mat s = ba;
        for (auto& row : s)
            for (auto& v : row) v *= omega(M, static_cast<long long>(c));
        if (diff(ab, s) < 1e-9) return static_cast<long long>(c);
    }
    return -1;
}

inline cd inner(const Vec& a, const Vec& b) {
    cd s{};
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

inline Vec position(u64 M, u64 x) {
    Vec v(M);
    v[x] = 1.0;
    return v;
}

inline Vec momentum(u64 M, u64 k) {
    Vec v(M);
    for (u64 x = 0; x < M; ++x) v[x] = omega(M, static_cast<long long>(k * x)) / std::sqrt(double(M));
    return v;
}

/// Split data recomputed by scanning for inverses.
struct Split {
    u64 M1, M2, M, e1, e2;
    Split(u64 a, u64 b) : M1(a), M2(b), M(a * b) {
        e1 = inverse(M2 % M1, M1) * M2 % M;  // N1 L1
        e2 = inverse(M1 % M2, M2) * M1 % M;  // N2 L2
    }
};

inline Vec kq(const Split& s, u64 k, u64 q) {
    Vec v(s.M);
    for (u64 t = 0; t < s.M1; ++t)
        v[(q * s.e2 + t * s.e1) % s.M] = omega(s.M1, static_cast<long long>(k * t)) / std::sqrt(double(s.M1));
    return v;
}

inline Vec KQ(const Split& s, u64 K, u64 Q) {
    Vec v(s.M);
    for (u64 t = 0; t < s.M2; ++t)
        v[(Q * s.e1 + t * s.e2) % s.M] = omega(s.M2, static_cast<long long>(K * t)) / std::sqrt(double(s.M2));
    return v;
}

inline Vec q1q2(const Split& s, u64 q1, u64 q2) { return position(s.M, (q1 * s.e1 + q2 * s.e2) % s.M); }

inline Vec k1k2(const Split& s, u64 k1, u64 k2) { return momentum(s.M, (k1 * s.M2 + k2 * s.M1) % s.M); }

}  // namespace oracle
