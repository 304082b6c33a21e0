#include "schwinger/phase_algebra.hpp"

#include <cmath>
#include <vector>
#include <numbers>
#include <numeric>
#include <string>

#include "schwinger/errors.hpp"
#include "schwinger/numtheory.hpp"

namespace schwinger {

PhaseExp::PhaseExp(std::uint64_t modulus, std::int64_t exponent)
    : modulus_(modulus), exponent_(0) {
    if (modulus == 0) throw InvalidArgument("PhaseExp: modulus must be positive");
    exponent_ = reduce(exponent, modulus);
}

std::complex<double> PhaseExp::value() const { return root_of_unity(modulus_, exponent_); }

PhaseExp PhaseExp::operator+(const PhaseExp& o) const {
    if (modulus_ != o.modulus_) throw DimensionMismatch("PhaseExp: moduli differ");
    PhaseExp r = *this;
    r.exponent_ = add_mod(exponent_, o.exponent_, modulus_);
    return r;
}

PhaseExp PhaseExp::operator-(const PhaseExp& o) const {
    if (modulus_ != o.modulus_) throw DimensionMismatch("PhaseExp: moduli differ");
    PhaseExp r = *this;
    r.exponent_ = sub_mod(exponent_, o.exponent_, modulus_);
    return r;
}

PhaseExp PhaseExp::operator-() const {
    PhaseExp r = *this;
    r.exponent_ = sub_mod(0, exponent_, modulus_);
    return r;
}

PhaseExp PhaseExp::operator*(std::int64_t n) const {
    PhaseExp r = *this;
    r.exponent_ = mul_mod(exponent_, reduce(n, modulus_), modulus_);
    return r;
}

namespace {

std::complex<double> compute_root(std::uint64_t M, std::uint64_t e) {
    if (e == 0) return {1.0, 0.0};
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(M);
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

std::complex<double> root_of_unity(std::uint64_t M, std::uint64_t e) {
    e %= M;
    // Table of the last modulus seen on this thread; same values as computing
    // them directly.
    constexpr std::uint64_t kCacheLimit = 1u << 16;
    thread_local std::uint64_t cached_M = 0;
    thread_local std::vector<std::complex<double>> cache;
    if (M > kCacheLimit) return compute_root(M, e);
    if (cached_M != M) {
        cache.resize(M);
        for (std::uint64_t i = 0; i < M; ++i) cache[i] = compute_root(M, i);
        cached_M = M;
    }
    return cache[e];
}

namespace {

void check_dimension(std::uint64_t M) {
    if (M == 0 || M > kMaxOperatorDimension) {
        throw InvalidArgument("operator dimension must lie in [1, 2^31 - 1], got " + std::to_string(M));
    }
}

}  // namespace

MonomialOperator::MonomialOperator(std::uint64_t M, std::vector<Index> perm, std::vector<Index> phase)
    : perm_(std::move(perm)), phase_(std::move(phase)) {
    check_dimension(M);
    if (perm_.size() != M || phase_.size() != M) {
        throw DimensionMismatch("MonomialOperator: permutation and phase tables must have length M");
    }
    std::vector<bool> seen(M, false);
    for (auto y : perm_) {
        if (y >= M || seen[y]) throw InvalidArgument("MonomialOperator: perm is not a bijection");
        seen[y] = true;
    }
    for (auto& e : phase_) e = static_cast<Index>(e % M);
}

MonomialOperator MonomialOperator::identity(std::uint64_t M) {
    check_dimension(M);
    std::vector<Index> perm(M);
    std::iota(perm.begin(), perm.end(), Index{0});
    return {Unchecked{}, std::move(perm), std::vector<Index>(M, 0)};
}

bool MonomialOperator::is_identity() const {
    for (std::size_t x = 0; x < perm_.size(); ++x) {
        if (perm_[x] != x || phase_[x] != 0) return false;
    }
    return true;
}

MonomialOperator make_tau(std::uint64_t M, std::uint64_t d) {
    check_dimension(M);
    if (d == 0 || M % d != 0) {
        throw InvalidArgument("make_tau: " + std::to_string(d) + " does not divide " + std::to_string(M));
    }
    const std::uint64_t step = M / d;
    std::vector<MonomialOperator::Index> perm(M), phase(M);
    for (std::uint64_t x = 0; x < M; ++x) {
        perm[x] = static_cast<MonomialOperator::Index>(x);
        phase[x] = static_cast<MonomialOperator::Index>(mul_mod(x, step, M));
    }
    return {MonomialOperator::Unchecked{}, std::move(perm), std::move(phase)};
}

MonomialOperator make_shift(std::uint64_t M, std::int64_t s) {
    check_dimension(M);
    const std::uint64_t r = reduce(s, M);
    std::vector<MonomialOperator::Index> perm(M);
    for (std::uint64_t x = 0; x < M; ++x) perm[x] = static_cast<MonomialOperator::Index>(sub_mod(x, r, M));
    return {MonomialOperator::Unchecked{}, std::move(perm), std::vector<MonomialOperator::Index>(M, 0)};
}

MonomialOperator compose(const MonomialOperator& a, const MonomialOperator& b) {
    const std::uint64_t M = a.dimension();
    if (b.dimension() != M) throw DimensionMismatch("compose: operator dimensions differ");
    std::vector<MonomialOperator::Index> perm(M), phase(M);
    for (std::uint64_t x = 0; x < M; ++x) {
        const auto y = b.perm_[x];
        perm[x] = a.perm_[y];
        phase[x] = static_cast<MonomialOperator::Index>(add_mod(b.phase_[x], a.phase_[y], M));
    }
    return {MonomialOperator::Unchecked{}, std::move(perm), std::move(phase)};
}

MonomialOperator inverse(const MonomialOperator& a) {
    const std::uint64_t M = a.dimension();
    std::vector<MonomialOperator::Index> perm(M), phase(M);
    for (std::uint64_t x = 0; x < M; ++x) {
        const auto y = a.perm_[x];
        perm[y] = static_cast<MonomialOperator::Index>(x);
        phase[y] = static_cast<MonomialOperator::Index>(sub_mod(0, a.phase_[x], M));
    }
    return {MonomialOperator::Unchecked{}, std::move(perm), std::move(phase)};
}

MonomialOperator power(const MonomialOperator& a, std::int64_t n) {
    MonomialOperator base = n < 0 ? inverse(a) : a;
    // Magnitude computed without negating INT64_MIN.
    std::uint64_t k = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    MonomialOperator result = MonomialOperator::identity(a.dimension());
    while (k != 0) {
        if (k & 1) result = compose(result, base);
        k >>= 1;
        if (k != 0) base = compose(base, base);
    }
    return result;
}

std::uint64_t period(const MonomialOperator& a) {
    const std::uint64_t M = a.dimension();
    std::vector<bool> visited(M, false);
    std::uint64_t result = 1;
    for (std::uint64_t start = 0; start < M; ++start) {
        if (visited[start]) continue;
        std::uint64_t length = 0;
        std::uint64_t total = 0;
        std::uint64_t x = start;
        do {
            visited[x] = true;
            total = add_mod(total, a.phases()[x], M);
            x = a.image(x);
            ++length;
        } while (x != start);
        const std::uint64_t cycle_order = length * (M / gcd(total, M));
        const std::uint64_t g = gcd(result, cycle_order);
        const std::uint64_t factor = cycle_order / g;
        if (result > kMaxModulus / factor) throw InvalidArgument("period: order exceeds 2^63 - 1");
        result *= factor;
    }
    return result;
}

PhaseExp commutation_exponent(const MonomialOperator& a, const MonomialOperator& b) {
    const std::uint64_t M = a.dimension();
    if (b.dimension() != M) throw DimensionMismatch("commutation_exponent: operator dimensions differ");
    const MonomialOperator ab = compose(a, b);
    const MonomialOperator ba = compose(b, a);
    if (ab.perm() != ba.perm()) {
        throw NotCentral("commutation_exponent: permutations of AB and BA differ");
    }
    const std::uint64_t c = sub_mod(ab.phases()[0], ba.phases()[0], M);
    for (std::uint64_t x = 1; x < M; ++x) {
        if (sub_mod(ab.phases()[x], ba.phases()[x], M) != c) {
            throw NotCentral("commutation_exponent: commutator phase differs at position " +
                             std::to_string(x));
        }
    }
    return PhaseExp(M, static_cast<std::int64_t>(c));
}

}  // namespace schwinger
