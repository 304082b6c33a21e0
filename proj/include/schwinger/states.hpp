#pragma once

// Flat-phase states: unit vectors whose nonzero amplitudes share the magnitude
// 1/sqrt(|support|) and differ only by M-th roots of unity. Every state that
// appears in the factorized representations has this form, which keeps
// operator application and overlaps exact.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "schwinger/phase_algebra.hpp"

namespace schwinger {

class FlatPhaseState {
public:
    struct Entry {
        std::uint64_t position;
        std::uint64_t exponent;

        friend bool operator==(const Entry&, const Entry&) = default;
    };

    /// Entries may come in any order; positions must be distinct and < M and
    /// the list must be non-empty. Exponents are reduced modulo M.
    FlatPhaseState(std::uint64_t M, std::vector<Entry> entries);

    std::uint64_t dimension() const { return dimension_; }
    std::size_t support_size() const { return entries_.size(); }
    /// Sorted by position.
    std::span<const Entry> entries() const { return entries_; }
    std::vector<std::uint64_t> support() const;

    /// Exponent at a position, or nullopt outside the support.
    std::optional<PhaseExp> phase_at(std::uint64_t x) const;

    /// The complex amplitude <x|state>.
    std::complex<double> amplitude(std::uint64_t x) const;

    /// Representative with zero phase at the smallest support position.
    FlatPhaseState canonical() const;

    /// Multiplies every amplitude by omega_M^e.
    FlatPhaseState with_global_phase(std::uint64_t e) const;

    /// Exact equality of support and exponents.
    friend bool operator==(const FlatPhaseState&, const FlatPhaseState&) = default;

private:
    std::uint64_t dimension_;
    std::vector<Entry> entries_;
};

bool equal_up_to_global_phase(const FlatPhaseState& a, const FlatPhaseState& b);

/// |x>: eigenstate of the clock operator with eigenvalue omega_M^x.
FlatPhaseState position_state(std::uint64_t M, std::uint64_t x);

/// |k> = M^{-1/2} sum_x omega_M^{k x} |x>: eigenstate of the shift with
/// eigenvalue omega_M^k.
FlatPhaseState momentum_state(std::uint64_t M, std::uint64_t k);

/// <a|b> = (|supp a| |supp b|)^{-1/2} sum over the common support of
/// omega_M^{e_b(x) - e_a(x)}.
///
/// `exact` is present when the sum collapses to coefficient * omega_M^phase
/// with a positive integer coefficient, so that
///   <a|b> = coefficient * omega_M^phase / sqrt(denominator).
/// `exact_zero` is decided in Z[omega_M] without rounding.
struct Overlap {
    struct Term {
        std::uint64_t coefficient;
        PhaseExp phase;

        friend bool operator==(const Term&, const Term&) = default;
    };

    std::complex<double> value;
    std::uint64_t denominator = 1;
    std::size_t common_support = 0;
    bool exact_zero = false;
    std::optional<Term> exact;

    double magnitude() const { return std::abs(value); }

    /// magnitude^2 == num / den, checked with integer arithmetic. Requires an
    /// exact representation (or exact zero).
    bool magnitude_squared_equals(std::uint64_t num, std::uint64_t den) const;
};

Overlap overlap(const FlatPhaseState& a, const FlatPhaseState& b);

/// A state with a position -> entry index for constant-time lookups; O(M)
/// memory. Used when one state meets many others. Keeps a reference.
class IndexedState {
public:
    explicit IndexedState(const FlatPhaseState& s);
    const FlatPhaseState& state() const { return *state_; }
    const FlatPhaseState::Entry* find(std::uint64_t x) const {
        const auto i = slot_[x];
        return i < 0 ? nullptr : &state_->entries()[static_cast<std::size_t>(i)];
    }

private:
    const FlatPhaseState* state_;
    std::vector<std::int32_t> slot_;
};

/// Same result as overlap(a, b.state()).
Overlap overlap(const FlatPhaseState& a, const IndexedState& b);
Overlap overlap(const IndexedState& a, const FlatPhaseState& b);

FlatPhaseState apply(const MonomialOperator& op, const FlatPhaseState& s);

/// The exponent e with op * s == omega_M^e * s, or nullopt when s is not an
/// eigenstate. Decided exactly.
std::optional<PhaseExp> is_eigenstate(const MonomialOperator& op, const FlatPhaseState& s);

}  // namespace schwinger
