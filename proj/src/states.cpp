#include "schwinger/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "schwinger/cyclotomic.hpp"
#include "schwinger/errors.hpp"
#include "schwinger/numtheory.hpp"

namespace schwinger {

FlatPhaseState::FlatPhaseState(std::uint64_t M, std::vector<Entry> entries)
    : dimension_(M), entries_(std::move(entries)) {
    if (M == 0) throw InvalidArgument("FlatPhaseState: dimension must be positive");
    if (entries_.empty()) throw InvalidArgument("FlatPhaseState: support must be non-empty");
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.position < b.position; });
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].position >= M) {
            throw InvalidArgument("FlatPhaseState: position " + std::to_string(entries_[i].position) +
                                  " out of range for M = " + std::to_string(M));
        }
        if (i > 0 && entries_[i].position == entries_[i - 1].position) {
            throw InvalidArgument("FlatPhaseState: duplicate position " +
                                  std::to_string(entries_[i].position));
        }
        entries_[i].exponent %= M;
    }
}

std::vector<std::uint64_t> FlatPhaseState::support() const {
    std::vector<std::uint64_t> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.position);
    return out;
}

namespace {

const FlatPhaseState::Entry* find_entry(std::span<const FlatPhaseState::Entry> entries, std::uint64_t x) {
    auto it = std::lower_bound(entries.begin(), entries.end(), x,
                               [](const FlatPhaseState::Entry& e, std::uint64_t v) { return e.position < v; });
    if (it == entries.end() || it->position != x) return nullptr;
    return &*it;
}

}  // namespace

std::optional<PhaseExp> FlatPhaseState::phase_at(std::uint64_t x) const {
    const Entry* e = find_entry(entries_, x);
    if (e == nullptr) return std::nullopt;
    return PhaseExp(dimension_, static_cast<std::int64_t>(e->exponent));
}

std::complex<double> FlatPhaseState::amplitude(std::uint64_t x) const {
    const Entry* e = find_entry(entries_, x);
    if (e == nullptr) return {0.0, 0.0};
    return root_of_unity(dimension_, e->exponent) / std::sqrt(static_cast<double>(entries_.size()));
}

FlatPhaseState FlatPhaseState::canonical() const {
    return with_global_phase(sub_mod(0, entries_.front().exponent, dimension_));
}

FlatPhaseState FlatPhaseState::with_global_phase(std::uint64_t e) const {
    FlatPhaseState out = *this;
    for (auto& entry : out.entries_) entry.exponent = add_mod(entry.exponent, e, dimension_);
    return out;
}

bool equal_up_to_global_phase(const FlatPhaseState& a, const FlatPhaseState& b) {
    return a.canonical() == b.canonical();
}

FlatPhaseState position_state(std::uint64_t M, std::uint64_t x) {
    if (x >= M) {
        throw InvalidArgument("position_state: x = " + std::to_string(x) + " outside [0, " +
                              std::to_string(M) + ")");
    }
    return FlatPhaseState(M, {{x, 0}});
}

FlatPhaseState momentum_state(std::uint64_t M, std::uint64_t k) {
    if (k >= M) {
        throw InvalidArgument("momentum_state: k = " + std::to_string(k) + " outside [0, " +
                              std::to_string(M) + ")");
    }
    std::vector<FlatPhaseState::Entry> entries(M);
    for (std::uint64_t x = 0; x < M; ++x) entries[x] = {x, mul_mod(k, x, M)};
    return FlatPhaseState(M, std::move(entries));
}

bool Overlap::magnitude_squared_equals(std::uint64_t num, std::uint64_t den) const {
    if (exact_zero) return num == 0;
    if (!exact) throw Error("Overlap: no exact representation available");
    const unsigned __int128 c = exact->coefficient;
    return c * c * den == static_cast<unsigned __int128>(num) * denominator;
}

namespace {

template <class Lookup>
Overlap overlap_core(std::uint64_t M, std::uint64_t denominator, std::span<const FlatPhaseState::Entry> small,
                     Lookup lookup, bool a_small) {

    Overlap out;
    out.denominator = denominator;

    // Walk one support and look positions up in the other. The first pass
    // only counts; the common case (one shared phase difference) needs
    // nothing more.
    auto diff_at = [&](const FlatPhaseState::Entry& e, const FlatPhaseState::Entry& other) {
        return a_small ? sub_mod(other.exponent, e.exponent, M) : sub_mod(e.exponent, other.exponent, M);
    };
    std::uint64_t d0 = 0;
    std::uint64_t g = M;
    for (const auto& e : small) {
        const auto* other = lookup(e.position);
        if (other == nullptr) continue;
        const auto d = diff_at(e, *other);
        if (out.common_support++ == 0) d0 = d;
        else g = gcd(g, sub_mod(d, d0, M));
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(out.denominator));

    if (out.common_support == 0) {
        out.exact_zero = true;
        return out;
    }
    if (g == M) {
        out.exact = Overlap::Term{out.common_support, PhaseExp(M, static_cast<std::int64_t>(d0))};
        out.value = static_cast<double>(out.common_support) * root_of_unity(M, d0) * scale;
        return out;
    }

    // All exponents lie in d0 + g Z, so the sum is omega_M^{d0} times an
    // element of Z[omega_n] with n = M / g.
    const std::uint64_t n = M / g;
    IntPoly poly(n, 0);
    for (const auto& e : small) {
        const auto* other = lookup(e.position);
        if (other != nullptr) ++poly[sub_mod(diff_at(e, *other), d0, M) / g];
    }
    if (is_zero_in_cyclotomic_ring(poly, n)) {
        out.exact_zero = true;
        return out;
    }
    std::complex<double> sum{0.0, 0.0};
    for (std::uint64_t i = 0; i < n; ++i) {
        if (poly[i] != 0) sum += static_cast<double>(poly[i]) * root_of_unity(M, add_mod(d0, i * g, M));
    }
    out.value = sum * scale;

    const double mag = std::abs(sum);
    const double c = std::round(mag);
    if (c >= 1.0 && std::abs(mag - c) < 1e-6) {
        double turns = std::arg(sum) / (2.0 * std::numbers::pi);
        const auto e = reduce(static_cast<std::int64_t>(std::llround(turns * static_cast<double>(M))), M);
        const std::uint64_t shift = sub_mod(e, d0, M);
        if (shift % g == 0) {
            IntPoly residual = poly;
            residual[shift / g] -= static_cast<std::int64_t>(c);
            if (is_zero_in_cyclotomic_ring(residual, n)) {
                out.exact = Overlap::Term{static_cast<std::uint64_t>(c), PhaseExp(M, static_cast<std::int64_t>(e))};
            }
        }
    }
    return out;
}

}  // namespace

Overlap overlap(const FlatPhaseState& a, const FlatPhaseState& b) {
    const std::uint64_t M = a.dimension();
    if (b.dimension() != M) throw DimensionMismatch("overlap: state dimensions differ");
    const auto denominator = static_cast<std::uint64_t>(a.support_size()) * b.support_size();
    const bool a_small = a.support_size() <= b.support_size();
    const auto large = a_small ? b.entries() : a.entries();
    return overlap_core(M, denominator, a_small ? a.entries() : b.entries(),
                        [large](std::uint64_t x) { return find_entry(large, x); }, a_small);
}

IndexedState::IndexedState(const FlatPhaseState& s) : state_(&s), slot_(s.dimension(), -1) {
    const auto es = s.entries();
    for (std::size_t i = 0; i < es.size(); ++i) slot_[es[i].position] = static_cast<std::int32_t>(i);
}

Overlap overlap(const FlatPhaseState& a, const IndexedState& b) {
    const std::uint64_t M = a.dimension();
    if (b.state().dimension() != M) throw DimensionMismatch("overlap: state dimensions differ");
    const auto denominator = static_cast<std::uint64_t>(a.support_size()) * b.state().support_size();
    return overlap_core(M, denominator, a.entries(), [&b](std::uint64_t x) { return b.find(x); }, true);
}

Overlap overlap(const IndexedState& a, const FlatPhaseState& b) {
    const std::uint64_t M = b.dimension();
    if (a.state().dimension() != M) throw DimensionMismatch("overlap: state dimensions differ");
    const auto denominator = static_cast<std::uint64_t>(a.state().support_size()) * b.support_size();
    return overlap_core(M, denominator, b.entries(), [&a](std::uint64_t x) { return a.find(x); }, false);
}

FlatPhaseState apply(const MonomialOperator& op, const FlatPhaseState& s) {
    const std::uint64_t M = s.dimension();
    if (op.dimension() != M) throw DimensionMismatch("apply: operator and state dimensions differ");
    std::vector<FlatPhaseState::Entry> entries;
    entries.reserve(s.support_size());
    for (const auto& e : s.entries()) {
        entries.push_back({op.image(e.position), add_mod(e.exponent, op.phases()[e.position], M)});
    }
    return FlatPhaseState(M, std::move(entries));
}

std::optional<PhaseExp> is_eigenstate(const MonomialOperator& op, const FlatPhaseState& s) {
    const FlatPhaseState image = apply(op, s);
    const auto lhs = image.entries();
    const auto rhs = s.entries();
    const std::uint64_t M = s.dimension();
    const std::uint64_t e = sub_mod(lhs.front().exponent, rhs.front().exponent, M);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs[i].position != rhs[i].position) return std::nullopt;
        if (sub_mod(lhs[i].exponent, rhs[i].exponent, M) != e) return std::nullopt;
    }
    return PhaseExp(M, static_cast<std::int64_t>(e));
}

}  // namespace schwinger
