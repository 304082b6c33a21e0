#include <doctest.h>

#include "oracles.hpp"
#include "schwinger/errors.hpp"
#include "schwinger/kernels.hpp"

using namespace schwinger;

namespace {

bool same(const Overlap& a, const Overlap& b) {
    return a.value == b.value && a.denominator == b.denominator && a.common_support == b.common_support &&
           a.exact_zero == b.exact_zero && a.exact == b.exact;
}

}  // namespace

TEST_CASE("serial and parallel overlap tables agree exactly") {
    for (std::uint64_t M : {1, 6, 12, 30, 60}) {
        const auto f = factorize(M);
        const auto bi = enumerate_bifactorizations(f).back();
        const std::pair<LabeledBasis, LabeledBasis> pairs[] = {
            {build_kq_basis(bi), build_conjugate_kq_basis(bi)},
            {build_q1q2_basis(bi), build_k1k2_basis(bi)},
            {build_complete_basis(f, BasisKind::CompletePosition), build_complete_basis(f, BasisKind::CompleteMomentum)},
            {build_momentum_basis(M), build_kq_basis(bi.swapped())},
        };
        for (const auto& [bra, ket] : pairs) {
            const auto s = kernels::serial::overlap_table(bra, ket);
            const auto p = kernels::parallel::overlap_table(bra, ket);
            REQUIRE(s.entries.size() == p.entries.size());
            for (std::size_t i = 0; i < s.entries.size(); ++i) CHECK(same(s.entries[i], p.entries[i]));

            const auto ds = kernels::serial::dense_overlap_table(bra, ket);
            const auto dp = kernels::parallel::dense_overlap_table(bra, ket);
            CHECK(dense::max_abs_diff(ds, dp) == 0.0);
            for (std::size_t i = 0; i < M; ++i)
                for (std::size_t j = 0; j < M; ++j) CHECK(std::abs(ds(i, j) - s.at(i, j).value) < 1e-12);
        }
    }
}

TEST_CASE("state kernels agree") {
    const auto b = build_kq_basis(BiFactorization(5, 7));
    CHECK(kernels::serial::states(b) == kernels::parallel::states(b));
    const auto vs = kernels::serial::dense_states(b);
    const auto vp = kernels::parallel::dense_states(b);
    for (std::size_t i = 0; i < vs.size(); ++i) CHECK(vs[i] == vp[i]);
}

TEST_CASE("unit root counts") {
    const auto s = kernels::serial::unit_root_counts(2000);
    const auto p = kernels::parallel::unit_root_counts(2000);
    CHECK(s == p);
    for (std::uint64_t M = 1; M <= 2000; ++M) CHECK(s[M] == oracle::unit_roots(M).size());
    CHECK(kernels::parallel::count_unit_roots(105) == 8);
    CHECK(kernels::serial::count_unit_roots(24) == 8);
}

TEST_CASE("gram deviation") {
    const auto b = build_momentum_basis(64);
    CHECK(kernels::gram_deviation(kernels::parallel::dense_overlap_table(b, b)) < 1e-12);
    CHECK_THROWS_AS(kernels::serial::overlap_table(build_position_basis(5000), build_position_basis(5000)), Error);
    CHECK_THROWS_AS(kernels::serial::overlap_table(build_position_basis(4), build_position_basis(5)), Error);
}
