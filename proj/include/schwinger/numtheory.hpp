#pragma once

// Integer machinery behind the factorized representations: prime-power
// decomposition, modular inverses, the Chinese Remainder Theorem, coprime
// bi-factorizations and the square roots of unity modulo M.
//
// Residues are stored in [0, m). The largest supported modulus is 2^63 - 1.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace schwinger {

inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 63) - 1;

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

/// Reduces a signed integer into [0, m).
std::uint64_t reduce(std::int64_t a, std::uint64_t m);

/// Inverse of a modulo m in [0, m). For m == 1 the result is 0.
/// Throws NoInverse when gcd(a mod m, m) != 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

/// One prime-power constituent m = p^n of M with L = M/m and N = L^{-1} mod m.
struct Constituent {
    std::uint64_t prime = 0;
    unsigned exponent = 0;
    std::uint64_t power = 0;     // m_j
    std::uint64_t cofactor = 0;  // L_j
    std::uint64_t inverse = 0;   // N_j

    /// N_j * L_j mod M, the CRT idempotent for this constituent.
    std::uint64_t idempotent(std::uint64_t M) const { return mul_mod(inverse, cofactor, M); }

    friend bool operator==(const Constituent&, const Constituent&) = default;
};

class Factorization {
public:
    Factorization() = default;

    std::uint64_t modulus() const { return modulus_; }
    std::span<const Constituent> constituents() const { return constituents_; }
    std::size_t size() const { return constituents_.size(); }
    const Constituent& operator[](std::size_t j) const { return constituents_[j]; }

    /// Prime-power moduli m_1, ..., m_N in increasing prime order.
    std::vector<std::uint64_t> moduli() const;

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    friend Factorization factorize(std::uint64_t M);

    std::uint64_t modulus_ = 1;
    std::vector<Constituent> constituents_;
};

/// Trial division with a 2,3,5 wheel. Throws InvalidArgument for M == 0 or
/// M > kMaxModulus.
Factorization factorize(std::uint64_t M);

/// An ordered split M = M1 * M2 with gcd(M1, M2) == 1.
///
/// Enumeration produces the canonical order M1 <= M2; root_to_bifactorization
/// and the basis builders accept either order since the kq construction is not
/// symmetric in the two factors.
class BiFactorization {
public:
    /// Throws NotCoprime when gcd(m1, m2) != 1 and InvalidArgument on zero or
    /// overflowing factors.
    BiFactorization(std::uint64_t m1, std::uint64_t m2);

    std::uint64_t modulus() const { return m1_ * m2_; }
    std::uint64_t m1() const { return m1_; }
    std::uint64_t m2() const { return m2_; }
    std::uint64_t l1() const { return m2_; }
    std::uint64_t l2() const { return m1_; }
    std::uint64_t n1() const { return n1_; }
    std::uint64_t n2() const { return n2_; }
    /// N1 L1 mod M: congruent to 1 mod M1 and 0 mod M2.
    std::uint64_t e1() const { return mul_mod(n1_, l1(), modulus()); }
    /// N2 L2 mod M: congruent to 0 mod M1 and 1 mod M2.
    std::uint64_t e2() const { return mul_mod(n2_, l2(), modulus()); }

    bool is_canonical() const { return m1_ <= m2_; }
    BiFactorization canonical() const;
    BiFactorization swapped() const { return {m2_, m1_}; }

    friend bool operator==(const BiFactorization&, const BiFactorization&) = default;

private:
    std::uint64_t m1_;
    std::uint64_t m2_;
    std::uint64_t n1_;
    std::uint64_t n2_;
};

/// Solves x = r_j (mod m_j) for pairwise coprime m_j as sum r_j N_j L_j mod M.
/// An empty list yields 0 modulo 1. Throws NotCoprime or InvalidArgument.
std::uint64_t crt_solve(std::span<const std::pair<std::uint64_t, std::uint64_t>> congruences);

/// All 2^{N-1} coprime splits, canonical order, sorted by M1. For N <= 1 only
/// the trivial split (1, M).
std::vector<BiFactorization> enumerate_bifactorizations(const Factorization& f);

/// Number of coprime bi-factorizations, 2^{N-1} (1 for M == 1).
std::uint64_t chi(const Factorization& f);

/// A solution of a^2 = 1 (mod M) together with its residue modulo every
/// prime-power constituent.
struct UnitRoot {
    std::uint64_t value = 0;
    std::vector<std::uint64_t> sign_pattern;

    /// Every residue is +1 or -1 modulo its constituent.
    bool is_sign_root(const Factorization& f) const;

    friend bool operator==(const UnitRoot&, const UnitRoot&) = default;
};

/// Square roots of 1 modulo a single prime power p^n, sorted.
std::vector<std::uint64_t> prime_power_unit_roots(std::uint64_t prime, unsigned exponent);

/// All roots of x^2 = 1 (mod M) by CRT over the constituents, sorted by value.
/// Includes the non-sign roots that appear when 8 | M.
std::vector<UnitRoot> unit_square_roots(const Factorization& f);

/// M1 collects the constituents where the root is +1, M2 those where it is -1.
/// A constituent m = 2 (where +1 == -1) is assigned to M1.
/// Throws NotSignRoot for roots whose pattern is not all +-1.
BiFactorization root_to_bifactorization(const UnitRoot& root, const Factorization& f);

}  // namespace schwinger
