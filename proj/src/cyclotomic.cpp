#include "schwinger/cyclotomic.hpp"

#include <algorithm>
#include <unordered_map>

#include "schwinger/errors.hpp"

namespace schwinger {

namespace {

// Exact division num / den for monic den; throws if the remainder is nonzero.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
    const std::size_t dn = den.size() - 1;
    IntPoly q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        const std::int64_t c = num[i];
        q[i - dn] = c;
        if (c == 0) continue;
        for (std::size_t k = 0; k <= dn; ++k) num[i - dn + k] -= c * den[k];
    }
    for (std::size_t i = 0; i < dn; ++i) {
        if (num[i] != 0) throw Error("cyclotomic: inexact polynomial division");
    }
    return q;
}

}  // namespace

const IntPoly& cyclotomic_polynomial(std::uint64_t n) {
    if (n == 0) throw InvalidArgument("cyclotomic_polynomial: n must be positive");
    thread_local std::unordered_map<std::uint64_t, IntPoly> cache;
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    IntPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (std::uint64_t d = 1; d < n; ++d) {
        if (n % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
    }
    return cache.emplace(n, std::move(p)).first->second;
}

IntPoly reduce_cyclotomic(const IntPoly& coeffs, std::uint64_t n) {
    const IntPoly& phi = cyclotomic_polynomial(n);
    const std::size_t deg = phi.size() - 1;

    IntPoly r(n, 0);
    for (std::size_t e = 0; e < coeffs.size(); ++e) r[e % n] += coeffs[e];
    // Phi_n is monic, so each leading term is eliminated by subtracting a
    // shifted multiple.
    for (std::size_t i = n; i-- > deg;) {
        const std::int64_t c = r[i];
        if (c == 0) continue;
        for (std::size_t k = 0; k <= deg; ++k) r[i - deg + k] -= c * phi[k];
    }
    r.resize(deg);
    return r;
}

bool is_zero_in_cyclotomic_ring(const IntPoly& coeffs, std::uint64_t n) {
    const IntPoly r = reduce_cyclotomic(coeffs, n);
    return std::all_of(r.begin(), r.end(), [](std::int64_t c) { return c == 0; });
}

}  // namespace schwinger
