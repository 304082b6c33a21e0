#include <doctest.h>

#include "oracles.hpp"
#include "schwinger/errors.hpp"
#include "schwinger/phase_algebra.hpp"
#include "schwinger/representations.hpp"
#include "schwinger/states.hpp"

using namespace schwinger;

namespace {

oracle::Vec to_dense(const FlatPhaseState& s) {
    oracle::Vec v(s.dimension());
    for (const auto& e : s.entries())
        v[e.position] = oracle::omega(s.dimension(), e.exponent) / std::sqrt(double(s.support_size()));
    return v;
}

oracle::Mat to_dense(const MonomialOperator& op) {
    const auto M = op.dimension();
    auto m = oracle::zeros(M);
    for (std::uint64_t x = 0; x < M; ++x) m[op.image(x)][x] = oracle::omega(M, op.phase(x).exponent());
    return m;
}

}  // namespace

TEST_CASE("state validation") {
    CHECK_THROWS_AS(FlatPhaseState(4, {}), InvalidArgument);
    CHECK_THROWS_AS(FlatPhaseState(4, {{1, 0}, {1, 2}}), InvalidArgument);
    CHECK_THROWS_AS(FlatPhaseState(4, {{4, 0}}), InvalidArgument);
    const FlatPhaseState s(4, {{3, 5}, {0, 2}});
    CHECK(s.support() == std::vector<std::uint64_t>{0, 3});
    CHECK(s.phase_at(3)->exponent() == 1);
    CHECK_FALSE(s.phase_at(1).has_value());
    CHECK(s.canonical() == FlatPhaseState(4, {{0, 0}, {3, 3}}));
    CHECK(equal_up_to_global_phase(s, s.with_global_phase(3)));
    CHECK_FALSE(s == s.with_global_phase(3));
}

TEST_CASE("position and momentum overlaps are exact") {
    for (std::uint64_t M : {1, 2, 5, 6, 12}) {
        for (std::uint64_t x = 0; x < M; ++x) {
            for (std::uint64_t k = 0; k < M; ++k) {
                const auto o = overlap(position_state(M, x), momentum_state(M, k));
                REQUIRE(o.exact);
                CHECK(o.exact->coefficient == 1);
                CHECK(o.denominator == M);
                CHECK(o.exact->phase.exponent() == k * x % M);
                CHECK(std::abs(o.value - oracle::inner(oracle::position(M, x), oracle::momentum(M, k))) < 1e-12);
            }
            for (std::uint64_t k2 = 0; k2 < M; ++k2) {
                const auto o = overlap(momentum_state(M, x), momentum_state(M, k2));
                CHECK(o.exact_zero == (x != k2));
                if (x == k2) CHECK(o.magnitude_squared_equals(1, 1));
            }
        }
    }
}

TEST_CASE("overlap that is neither zero nor a single term") {
    const std::uint64_t M = 6;
    const FlatPhaseState a(M, {{0, 0}, {1, 0}});
    const auto b = momentum_state(M, 1);
    const auto o = overlap(a, b);
    CHECK_FALSE(o.exact_zero);
    CHECK(std::abs(o.value - oracle::inner(to_dense(a), to_dense(b))) < 1e-12);
    // 1 + w_6 = sqrt(3) w_12 is not an integer multiple of a sixth root.
    CHECK_FALSE(o.exact.has_value());
}

TEST_CASE("apply matches dense multiplication") {
    const std::uint64_t M = 12;
    const auto op = compose(make_tau(M, 4), make_shift(M, 5));
    for (std::uint64_t k = 0; k < M; ++k) {
        const auto s = momentum_state(M, k);
        CHECK(oracle::diff(to_dense(apply(op, s)), oracle::mul(to_dense(op), to_dense(s))) < 1e-12);
    }
    CHECK_THROWS_AS(apply(make_tau(6, 6), momentum_state(4, 0)), DimensionMismatch);
}

TEST_CASE("eigenstates are detected exactly") {
    for (std::uint64_t M : {1, 4, 9, 15}) {
        const auto U = make_tau(M, M);
        const auto V = make_shift(M, 1);
        for (std::uint64_t x = 0; x < M; ++x) {
            CHECK(is_eigenstate(U, position_state(M, x))->exponent() == x);
            CHECK(is_eigenstate(V, momentum_state(M, x))->exponent() == x);
            if (M > 1) CHECK_FALSE(is_eigenstate(V, position_state(M, x)).has_value());
        }
    }
}

TEST_CASE("indexed overlaps match plain overlaps") {
    const auto kq = build_kq_basis(BiFactorization(4, 9));
    const auto k1k2 = build_k1k2_basis(BiFactorization(4, 9));
    for (std::uint64_t i = 0; i < 36; i += 5)
        for (std::uint64_t j = 0; j < 36; j += 7) {
            const auto a = kq.state_at(i), b = k1k2.state_at(j);
            const auto plain = overlap(a, b);
            for (const auto& o : {overlap(IndexedState(a), b), overlap(a, IndexedState(b))}) {
                CHECK(o.common_support == plain.common_support);
                CHECK(o.exact_zero == plain.exact_zero);
                CHECK(o.exact == plain.exact);
                CHECK(std::abs(o.value - plain.value) < 1e-14);
            }
        }
}
