#include <doctest.h>

#include <json.hpp>

#include "oracles.hpp"
#include "schwinger/errors.hpp"
#include "schwinger/representations.hpp"

using namespace schwinger;

namespace {

oracle::Vec to_dense(const FlatPhaseState& s) {
    oracle::Vec v(s.dimension());
    for (const auto& e : s.entries())
        v[e.position] = oracle::omega(s.dimension(), e.exponent) / std::sqrt(double(s.support_size()));
    return v;
}

const std::uint64_t kModuli[] = {6, 10, 12, 15, 30};

}  // namespace

TEST_CASE("kq state at M = 6") {
    const auto b = build_kq_basis(BiFactorization(2, 3));
    const auto s = b.state({1, 1});
    REQUIRE(s.support_size() == 2);
    CHECK(s.entries()[0] == FlatPhaseState::Entry{1, 3});
    CHECK(s.entries()[1] == FlatPhaseState::Entry{4, 0});
}

TEST_CASE("split bases match the dense oracle constructions") {
    for (auto M : kModuli) {
        for (const auto& c : enumerate_bifactorizations(factorize(M))) {
            for (const auto& bi : {c, c.swapped()}) {
                const oracle::Split os(bi.m1(), bi.m2());
                const auto kq = build_kq_basis(bi);
                const auto KQ = build_conjugate_kq_basis(bi);
                const auto qq = build_q1q2_basis(bi);
                const auto kk = build_k1k2_basis(bi);
                CHECK(kq.scheme() == std::vector<std::uint64_t>{bi.m1(), bi.m2()});
                CHECK(KQ.scheme() == std::vector<std::uint64_t>{bi.m2(), bi.m1()});
                for (std::uint64_t i = 0; i < M; ++i) {
                    auto l = kq.label(i);
                    CHECK(oracle::diff(to_dense(kq.state(l)), oracle::kq(os, l[0], l[1])) < 1e-12);
                    l = KQ.label(i);
                    CHECK(oracle::diff(to_dense(KQ.state(l)), oracle::KQ(os, l[0], l[1])) < 1e-12);
                    l = qq.label(i);
                    CHECK(oracle::diff(to_dense(qq.state(l)), oracle::q1q2(os, l[0], l[1])) < 1e-12);
                    l = kk.label(i);
                    CHECK(oracle::diff(to_dense(kk.state(l)), oracle::k1k2(os, l[0], l[1])) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("closed-form overlaps against dense inner products") {
    for (auto M : kModuli) {
        for (const auto& c : enumerate_bifactorizations(factorize(M))) {
            for (const auto& bi : {c, c.swapped()}) {
                const oracle::Split os(bi.m1(), bi.m2());
                const double mag = 1.0 / std::sqrt(double(M));
                for (std::uint64_t k = 0; k < bi.m1(); ++k)
                    for (std::uint64_t q = 0; q < bi.m2(); ++q)
                        for (std::uint64_t K = 0; K < bi.m2(); ++K)
                            for (std::uint64_t Q = 0; Q < bi.m1(); ++Q) {
                                const auto d = oracle::inner(oracle::kq(os, k, q), oracle::KQ(os, K, Q));
                                const auto e = kq_overlap_exponent(bi, k, q, K, Q);
                                CHECK(std::abs(d - mag * oracle::omega(M, e)) < 1e-9);
                            }
                for (std::uint64_t q1 = 0; q1 < bi.m1(); ++q1)
                    for (std::uint64_t q2 = 0; q2 < bi.m2(); ++q2)
                        for (std::uint64_t k1 = 0; k1 < bi.m1(); ++k1)
                            for (std::uint64_t k2 = 0; k2 < bi.m2(); ++k2) {
                                const auto d = oracle::inner(oracle::q1q2(os, q1, q2), oracle::k1k2(os, k1, k2));
                                const auto e = q1q2_overlap_exponent(bi, q1, q2, k1, k2);
                                CHECK(std::abs(d - mag * oracle::omega(M, e)) < 1e-9);
                            }
            }
        }
    }
}

TEST_CASE("kq overlap exponents, frozen from the dense oracle") {
    const BiFactorization bi(2, 3);
    // <k,q|K,Q> exponent = K q M1 - k Q M2 mod 6.
    CHECK(kq_overlap_exponent(bi, 0, 0, 0, 0) == 0);
    CHECK(kq_overlap_exponent(bi, 1, 1, 1, 1) == 5);
    CHECK(kq_overlap_exponent(bi, 1, 2, 2, 1) == 5);
    CHECK(kq_overlap_exponent(bi, 0, 2, 2, 0) == 2);
    CHECK(q1q2_overlap_exponent(bi, 1, 1, 1, 1) == 5);
    CHECK(q1q2_overlap_exponent(bi, 1, 2, 1, 2) == 5);
}

TEST_CASE("complete bases and the overlap orientation") {
    for (std::uint64_t M : {5, 12, 30, 60}) {
        const auto f = factorize(M);
        const auto P = build_complete_basis(f, BasisKind::CompletePosition);
        const auto K = build_complete_basis(f, BasisKind::CompleteMomentum);
        CHECK(P.scheme() == f.moduli());
        const CrtLabelMap map(f);
        for (std::uint64_t i = 0; i < M; ++i) {
            const auto q = P.label(i);
            CHECK(to_dense(P.state(q)) == oracle::position(M, map.backward(q)));
            for (std::uint64_t j = 0; j < M; ++j) {
                const auto k = K.label(j);
                std::uint64_t p = 0;
                for (std::size_t s = 0; s < k.size(); ++s) p += k[s] * f[s].cofactor;
                const auto d = oracle::inner(oracle::position(M, map.backward(q)), oracle::momentum(M, p % M));
                const auto e = complete_overlap_exponent(f, q, k);
                CHECK(std::abs(d - oracle::omega(M, e) / std::sqrt(double(M))) < 1e-9);
            }
        }
    }
    // A single constituent: the complete basis is the position basis.
    const auto five = build_complete_basis(factorize(5), BasisKind::CompletePosition);
    for (std::uint64_t x = 0; x < 5; ++x) CHECK(five.state({x}) == position_state(5, x));
    const auto one = build_complete_basis(factorize(1), BasisKind::CompletePosition);
    CHECK(one.dimension() == 1);
    CHECK(one.label(0).empty());
}

TEST_CASE("labels round-trip") {
    const auto b = build_kq_basis(BiFactorization(3, 5));
    for (std::uint64_t i = 0; i < 15; ++i) CHECK(b.index(b.label(i)) == i);
    CHECK(b.label(1) == Label{0, 1});
    CHECK_THROWS_AS(b.state({3, 0}), InvalidArgument);
    CHECK_THROWS_AS(b.state({0}), InvalidArgument);
    CHECK_THROWS_AS(build_basis(BasisKind::KQ, 12, std::nullopt), InvalidArgument);
    CHECK_THROWS_AS(build_basis(BasisKind::KQ, 12, BiFactorization(2, 3)), Error);
}

TEST_CASE("crt label map") {
    const CrtLabelMap map(std::vector<std::uint64_t>{8, 9, 5});
    CHECK(map.modulus() == 360);
    CHECK(map.forward(77) == Label{5, 5, 2});
    CHECK(map.backward({5, 5, 2}) == 77);
    CHECK(map.backward({1, 1, 1}) == 1);
    CHECK_THROWS_AS(CrtLabelMap(std::vector<std::uint64_t>{4, 6}), NotCoprime);
}

TEST_CASE("basis kind names") {
    for (auto k : {BasisKind::Position, BasisKind::Momentum, BasisKind::KQ, BasisKind::ConjugateKQ, BasisKind::Q1Q2,
                   BasisKind::K1K2, BasisKind::CompletePosition, BasisKind::CompleteMomentum}) {
        CHECK(parse_basis_kind(to_string(k)) == k);
    }
    CHECK_FALSE(parse_basis_kind("kQ").has_value());
}

TEST_CASE("json round trip in both index bases") {
    const auto table = materialize(build_kq_basis(BiFactorization(2, 3)));
    for (int base : {0, 1}) {
        const auto text = basis_to_json(table, base);
        CHECK(basis_from_json(text) == table);
    }
    const auto j = nlohmann::json::parse(basis_to_json(table, 1));
    CHECK(j["M"] == 6);
    CHECK(j["scheme"] == nlohmann::json::array({2, 3}));
    CHECK(j["states"].size() == 6);
    // Label (0,0) prints as (2,3) in 1-based form and position 0 as 6; entries
    // keep the internal position order.
    CHECK(j["states"][0]["label"] == nlohmann::json::array({2, 3}));
    CHECK(j["states"][0]["support"] == nlohmann::json::array({6, 3}));
    CHECK_THROWS_AS(basis_from_json("{\"M\": 6}"), Error);
}

TEST_CASE("localization at M = 15") {
    const auto r = localization_demo(BiFactorization(3, 5));
    CHECK(r.delta_structure_exact);
    CHECK(r.psi.support_size() == 5);
    const auto kk = build_k1k2_basis(BiFactorization(3, 5));
    for (std::uint64_t i = 0; i < 15; ++i) {
        const auto l = kk.label(i);
        const auto& o = r.k_side[i];
        if (l[1] == 0) {
            CHECK(o.magnitude_squared_equals(1, 3));
            CHECK(std::abs(o.magnitude() - 1 / std::sqrt(3.0)) < 1e-12);
        } else {
            CHECK(o.exact_zero);
        }
    }
    CHECK(localization_demo(BiFactorization(1, 7)).delta_structure_exact);
}
