#pragma once

// Exact arithmetic for M-th roots of unity and monomial operators.
//
// Every phase lives in the single exponent group Z_M: the sub-period phase
// exp(2 pi i / m_j) is written omega_M^{L_j}. A monomial operator A on C^M acts
// as A|x> = omega_M^{phase(x)} |perm(x)>.

#include <complex>
#include <cstdint>
#include <vector>

namespace schwinger {

/// omega_M^e = exp(2 pi i e / M), with 0 <= e < M.
class PhaseExp {
public:
    PhaseExp() = default;
    PhaseExp(std::uint64_t modulus, std::int64_t exponent);

    std::uint64_t modulus() const { return modulus_; }
    std::uint64_t exponent() const { return exponent_; }

    std::complex<double> value() const;

    PhaseExp operator+(const PhaseExp& o) const;
    PhaseExp operator-(const PhaseExp& o) const;
    PhaseExp operator-() const;
    PhaseExp operator*(std::int64_t n) const;

    friend bool operator==(const PhaseExp&, const PhaseExp&) = default;

private:
    std::uint64_t modulus_ = 1;
    std::uint64_t exponent_ = 0;
};

/// exp(2 pi i e / M) evaluated with the exponent reduced first.
std::complex<double> root_of_unity(std::uint64_t M, std::uint64_t e);

inline constexpr std::uint64_t kMaxOperatorDimension = (std::uint64_t{1} << 31) - 1;

class MonomialOperator {
public:
    using Index = std::uint32_t;

    /// Validates that perm is a bijection on [0, M) and reduces the phases.
    MonomialOperator(std::uint64_t M, std::vector<Index> perm, std::vector<Index> phase);

    static MonomialOperator identity(std::uint64_t M);

    std::uint64_t dimension() const { return perm_.size(); }
    Index image(std::uint64_t x) const { return perm_[x]; }
    PhaseExp phase(std::uint64_t x) const { return PhaseExp(dimension(), phase_[x]); }
    const std::vector<Index>& perm() const { return perm_; }
    const std::vector<Index>& phases() const { return phase_; }

    bool is_identity() const;

    friend bool operator==(const MonomialOperator&, const MonomialOperator&) = default;

private:
    struct Unchecked {};
    MonomialOperator(Unchecked, std::vector<Index> perm, std::vector<Index> phase)
        : perm_(std::move(perm)), phase_(std::move(phase)) {}

    friend MonomialOperator compose(const MonomialOperator&, const MonomialOperator&);
    friend MonomialOperator inverse(const MonomialOperator&);
    friend MonomialOperator make_tau(std::uint64_t, std::uint64_t);
    friend MonomialOperator make_shift(std::uint64_t, std::int64_t);

    std::vector<Index> perm_;
    std::vector<Index> phase_;
};

/// tau(d) = exp(2 pi i x / d) for d | M: diagonal with phase x * (M/d).
/// tau(M) is the clock operator U.
MonomialOperator make_tau(std::uint64_t M, std::uint64_t d);

/// T(s) = exp(i p s): |x> -> |x - s>. T(1) is the shift operator V.
MonomialOperator make_shift(std::uint64_t M, std::int64_t s);

/// Operator product A * B (B acts first).
MonomialOperator compose(const MonomialOperator& a, const MonomialOperator& b);

MonomialOperator inverse(const MonomialOperator& a);

/// A^n by repeated squaring; negative n gives powers of the inverse.
MonomialOperator power(const MonomialOperator& a, std::int64_t n);

/// Smallest n >= 1 with A^n = 1. Each permutation cycle of length l whose
/// phases sum to P contributes l * M / gcd(P, M); the period is their lcm.
std::uint64_t period(const MonomialOperator& a);

/// The exponent c with A B = B A omega_M^c. Throws NotCentral when the group
/// commutator is not a scalar and DimensionMismatch on unequal dimensions.
PhaseExp commutation_exponent(const MonomialOperator& a, const MonomialOperator& b);

}  // namespace schwinger
