#include "schwinger/numtheory.hpp"

#include <algorithm>
#include <string>

#include "schwinger/errors.hpp"

namespace schwinger {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    a %= m;
    b %= m;
    return a >= m - b ? a - (m - b) : a + b;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    a %= m;
    b %= m;
    return a >= b ? a - b : m - (b - a);
}

std::uint64_t reduce(std::int64_t a, std::uint64_t m) {
    if (a >= 0) return static_cast<std::uint64_t>(a) % m;
    // -(a + 1) avoids overflow at INT64_MIN.
    const std::uint64_t neg = (static_cast<std::uint64_t>(-(a + 1)) + 1) % m;
    return neg == 0 ? 0 : m - neg;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
    if (m == 0) throw InvalidArgument("mod_inverse: modulus must be positive");
    if (m == 1) return 0;
    a %= m;
    // Extended Euclid on (a, m) tracking the coefficient of a.
    __int128 old_r = a, r = m;
    __int128 old_s = 1, s = 0;
    while (r != 0) {
        const __int128 q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
    }
    if (old_r != 1) {
        throw NoInverse("mod_inverse: " + std::to_string(a) + " has no inverse modulo " +
                        std::to_string(m));
    }
    __int128 inv = old_s % static_cast<__int128>(m);
    if (inv < 0) inv += m;
    return static_cast<std::uint64_t>(inv);
}

std::vector<std::uint64_t> Factorization::moduli() const {
    std::vector<std::uint64_t> out;
    out.reserve(constituents_.size());
    for (const auto& c : constituents_) out.push_back(c.power);
    return out;
}

Factorization factorize(std::uint64_t M) {
    if (M == 0) throw InvalidArgument("factorize: M must be positive");
    if (M > kMaxModulus) throw InvalidArgument("factorize: M exceeds 2^63 - 1");

    Factorization f;
    f.modulus_ = M;
    std::uint64_t rest = M;

    auto take = [&](std::uint64_t p) {
        if (rest % p != 0) return;
        Constituent c;
        c.prime = p;
        c.power = 1;
        while (rest % p == 0) {
            rest /= p;
            c.power *= p;
            ++c.exponent;
        }
        f.constituents_.push_back(c);
    };

    take(2);
    take(3);
    take(5);
    // Residues mod 30 coprime to 30, as gaps starting from 7.
    static constexpr std::uint64_t kGaps[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    std::uint64_t p = 7;
    for (std::size_t i = 0; p <= rest / p; p += kGaps[i++ & 7]) take(p);
    if (rest > 1) take(rest);

    for (auto& c : f.constituents_) {
        c.cofactor = M / c.power;
        c.inverse = mod_inverse(c.cofactor, c.power);
    }
    return f;
}

BiFactorization::BiFactorization(std::uint64_t m1, std::uint64_t m2) : m1_(m1), m2_(m2) {
    if (m1 == 0 || m2 == 0) throw InvalidArgument("bi-factorization factors must be positive");
    if (m1 > kMaxModulus / m2) throw InvalidArgument("bi-factorization product exceeds 2^63 - 1");
    if (gcd(m1, m2) != 1) {
        throw NotCoprime("split " + std::to_string(m1) + "*" + std::to_string(m2) +
                         " is not coprime: gcd(M1, M2) must be 1");
    }
    n1_ = mod_inverse(l1(), m1_);
    n2_ = mod_inverse(l2(), m2_);
}

BiFactorization BiFactorization::canonical() const { return is_canonical() ? *this : swapped(); }

std::uint64_t crt_solve(std::span<const std::pair<std::uint64_t, std::uint64_t>> congruences) {
    std::uint64_t M = 1;
    for (std::size_t i = 0; i < congruences.size(); ++i) {
        const auto m = congruences[i].second;
        if (m == 0) throw InvalidArgument("crt_solve: moduli must be positive");
        for (std::size_t j = 0; j < i; ++j) {
            if (gcd(m, congruences[j].second) != 1) {
                throw NotCoprime("crt_solve: moduli " + std::to_string(congruences[j].second) +
                                 " and " + std::to_string(m) + " are not coprime");
            }
        }
        if (M > kMaxModulus / m) throw InvalidArgument("crt_solve: modulus product exceeds 2^63 - 1");
        M *= m;
    }
    std::uint64_t x = 0;
    for (const auto& [r, m] : congruences) {
        const std::uint64_t L = M / m;
        const std::uint64_t N = mod_inverse(L, m);
        x = add_mod(x, mul_mod(mul_mod(r % m, N, M), L, M), M);
    }
    return M == 1 ? 0 : x;
}

std::vector<BiFactorization> enumerate_bifactorizations(const Factorization& f) {
    const std::uint64_t M = f.modulus();
    const std::size_t n = f.size();
    if (n <= 1) return {BiFactorization(1, M)};

    std::vector<BiFactorization> out;
    // The last constituent always sits in the second factor; the other n-1
    // choose sides freely, which visits each unordered split once.
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    out.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::uint64_t m1 = 1;
        for (std::size_t j = 0; j + 1 < n; ++j) {
            if (mask >> j & 1) m1 *= f[j].power;
        }
        out.push_back(BiFactorization(m1, M / m1).canonical());
    }
    std::sort(out.begin(), out.end(),
              [](const BiFactorization& a, const BiFactorization& b) { return a.m1() < b.m1(); });
    return out;
}

std::uint64_t chi(const Factorization& f) {
    return f.size() <= 1 ? 1 : std::uint64_t{1} << (f.size() - 1);
}

bool UnitRoot::is_sign_root(const Factorization& f) const {
    for (std::size_t j = 0; j < f.size(); ++j) {
        const auto m = f[j].power;
        const auto q = sign_pattern[j];
        if (q != 1 % m && q != m - 1) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_power_unit_roots(std::uint64_t prime, unsigned exponent) {
    std::uint64_t m = 1;
    for (unsigned i = 0; i < exponent; ++i) m *= prime;
    if (prime != 2) return {1, m - 1};
    if (exponent == 1) return {1};
    if (exponent == 2) return {1, 3};
    const std::uint64_t half = m / 2;
    return {1, half - 1, half + 1, m - 1};
}

std::vector<UnitRoot> unit_square_roots(const Factorization& f) {
    const std::uint64_t M = f.modulus();
    if (f.size() == 0) return {UnitRoot{0, {}}};

    std::vector<std::vector<std::uint64_t>> local;
    local.reserve(f.size());
    for (const auto& c : f.constituents()) local.push_back(prime_power_unit_roots(c.prime, c.exponent));

    std::vector<UnitRoot> out;
    std::vector<std::size_t> digit(f.size(), 0);
    while (true) {
        UnitRoot root;
        root.sign_pattern.resize(f.size());
        std::uint64_t x = 0;
        for (std::size_t j = 0; j < f.size(); ++j) {
            const auto q = local[j][digit[j]];
            root.sign_pattern[j] = q;
            x = add_mod(x, mul_mod(q, f[j].idempotent(M), M), M);
        }
        root.value = x;
        out.push_back(std::move(root));

        std::size_t j = 0;
        while (j < f.size() && ++digit[j] == local[j].size()) digit[j++] = 0;
        if (j == f.size()) break;
    }
    std::sort(out.begin(), out.end(),
              [](const UnitRoot& a, const UnitRoot& b) { return a.value < b.value; });
    return out;
}

BiFactorization root_to_bifactorization(const UnitRoot& root, const Factorization& f) {
    if (root.sign_pattern.size() != f.size()) {
        throw InvalidArgument("root_to_bifactorization: sign pattern does not match factorization");
    }
    if (!root.is_sign_root(f)) {
        throw NotSignRoot("root " + std::to_string(root.value) + " modulo " +
                          std::to_string(f.modulus()) + " is not +-1 on every constituent");
    }
    std::uint64_t plus = 1;
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (root.sign_pattern[j] == 1 % f[j].power) plus *= f[j].power;
    }
    return BiFactorization(plus, f.modulus() / plus);
}

}  // namespace schwinger
