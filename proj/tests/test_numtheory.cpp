#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "schwinger/errors.hpp"
#include "schwinger/numtheory.hpp"

using namespace schwinger;

TEST_CASE("modular helpers agree with scanning") {
    for (std::uint64_t m = 1; m <= 60; ++m) {
        for (std::uint64_t a = 0; a < m; ++a) {
            if (gcd(a, m) == 1) CHECK(mod_inverse(a, m) == oracle::inverse(a, m));
            else CHECK_THROWS_AS(mod_inverse(a, m), NoInverse);
        }
    }
    CHECK(reduce(-1, 7) == 6);
    CHECK(reduce(-14, 7) == 0);
    CHECK(mul_mod(kMaxModulus - 1, kMaxModulus - 1, kMaxModulus) == 1);
    CHECK(sub_mod(2, 5, 7) == 4);
}

TEST_CASE("factorize 105") {
    const auto f = factorize(105);
    REQUIRE(f.size() == 3);
    const std::uint64_t want[3][3] = {{3, 35, 2}, {5, 21, 1}, {7, 15, 1}};
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(f[j].power == want[j][0]);
        CHECK(f[j].cofactor == want[j][1]);
        CHECK(f[j].inverse == want[j][2]);
    }
}

TEST_CASE("factorize edge cases") {
    CHECK(factorize(1).size() == 0);
    CHECK(factorize(1).modulus() == 1);
    CHECK(factorize(2310).size() == 5);
    CHECK(factorize(360).moduli() == std::vector<std::uint64_t>{8, 9, 5});
    CHECK(factorize(1024).moduli() == std::vector<std::uint64_t>{1024});
    CHECK_THROWS_AS(factorize(0), InvalidArgument);
    CHECK_THROWS_AS(factorize(kMaxModulus + 1), InvalidArgument);
    CHECK(factorize(2147483647).moduli() == std::vector<std::uint64_t>{2147483647});
    CHECK(factorize(1000003ULL * 1000033ULL).moduli() == std::vector<std::uint64_t>{1000003, 1000033});
}

TEST_CASE("factorize matches trial division") {
    for (std::uint64_t M = 1; M <= 5000; ++M) {
        const auto f = factorize(M);
        const auto ref = oracle::factor(M);
        REQUIRE(f.size() == ref.size());
        for (std::size_t j = 0; j < ref.size(); ++j) {
            CHECK(f[j].prime == ref[j].first);
            CHECK(f[j].exponent == ref[j].second);
            CHECK(f[j].cofactor * f[j].power == M);
            CHECK(f[j].inverse == oracle::inverse(f[j].cofactor % f[j].power, f[j].power));
        }
    }
}

TEST_CASE("crt_solve") {
    const std::pair<std::uint64_t, std::uint64_t> a[] = {{1, 3}, {1, 5}, {6, 7}};
    const std::pair<std::uint64_t, std::uint64_t> b[] = {{1, 3}, {4, 5}, {6, 7}};
    CHECK(crt_solve(a) == 76);
    CHECK(crt_solve(b) == 34);
    CHECK(crt_solve({}) == 0);
    const std::pair<std::uint64_t, std::uint64_t> bad[] = {{1, 4}, {1, 6}};
    CHECK_THROWS_AS(crt_solve(bad), NotCoprime);
}

TEST_CASE("bifactorization accessors") {
    const BiFactorization bi(3, 5);
    CHECK(bi.l1() == 5);
    CHECK(bi.l2() == 3);
    CHECK(bi.n1() == 2);
    CHECK(bi.n2() == 2);
    CHECK(bi.e1() == 10);
    CHECK(bi.e2() == 6);
    CHECK(bi.swapped() == BiFactorization(5, 3));
    CHECK(BiFactorization(5, 3).canonical() == bi);
    CHECK_THROWS_AS(BiFactorization(2, 6), NotCoprime);
    CHECK_THROWS_AS(BiFactorization(0, 6), InvalidArgument);
    const BiFactorization trivial(1, 1);
    CHECK(trivial.e1() == 0);
    CHECK(trivial.e2() == 0);
}

TEST_CASE("coprime splits match divisor scan") {
    for (std::uint64_t M = 1; M <= 3000; ++M) {
        const auto f = factorize(M);
        const auto splits = enumerate_bifactorizations(f);
        std::vector<std::pair<std::uint64_t, std::uint64_t>> got;
        for (const auto& bi : splits) got.emplace_back(bi.m1(), bi.m2());
        CHECK(got == oracle::coprime_splits(M));
        CHECK(chi(f) == splits.size());
    }
    const auto s12 = enumerate_bifactorizations(factorize(12));
    REQUIRE(s12.size() == 2);
    CHECK(s12[0] == BiFactorization(1, 12));
    CHECK(s12[1] == BiFactorization(3, 4));
}

TEST_CASE("unit roots match scanning") {
    for (std::uint64_t M = 1; M <= 3000; ++M) {
        const auto f = factorize(M);
        std::vector<std::uint64_t> got;
        for (const auto& r : unit_square_roots(f)) got.push_back(r.value);
        CHECK(got == oracle::unit_roots(M));
    }
}

TEST_CASE("unit roots at 105 and 24") {
    const auto f = factorize(105);
    std::vector<std::uint64_t> got;
    for (const auto& r : unit_square_roots(f)) got.push_back(r.value);
    CHECK(got == std::vector<std::uint64_t>{1, 29, 34, 41, 64, 71, 76, 104});

    const auto g = factorize(24);
    std::vector<std::uint64_t> exotic;
    for (const auto& r : unit_square_roots(g))
        if (!r.is_sign_root(g)) exotic.push_back(r.value);
    CHECK(exotic == std::vector<std::uint64_t>{5, 11, 13, 19});
}

TEST_CASE("prime power roots") {
    CHECK(prime_power_unit_roots(3, 1) == std::vector<std::uint64_t>{1, 2});
    CHECK(prime_power_unit_roots(2, 1) == std::vector<std::uint64_t>{1});
    CHECK(prime_power_unit_roots(2, 2) == std::vector<std::uint64_t>{1, 3});
    CHECK(prime_power_unit_roots(2, 3) == std::vector<std::uint64_t>{1, 3, 5, 7});
    CHECK(prime_power_unit_roots(2, 5) == std::vector<std::uint64_t>{1, 15, 17, 31});
    CHECK(prime_power_unit_roots(5, 2) == std::vector<std::uint64_t>{1, 24});
}

TEST_CASE("roots map to splits") {
    const auto f = factorize(105);
    auto split_of = [&](std::uint64_t a) {
        for (const auto& r : unit_square_roots(f))
            if (r.value == a) return root_to_bifactorization(r, f);
        FAIL("root not found");
        return BiFactorization(1, 1);
    };
    CHECK(split_of(1) == BiFactorization(105, 1));
    CHECK(split_of(76) == BiFactorization(15, 7));
    CHECK(split_of(34) == BiFactorization(3, 35));
    CHECK(split_of(64) == BiFactorization(21, 5));
    CHECK(split_of(104) == BiFactorization(1, 105));

    const auto g = factorize(24);
    for (const auto& r : unit_square_roots(g)) {
        if (r.is_sign_root(g)) CHECK_NOTHROW(root_to_bifactorization(r, g));
        else CHECK_THROWS_AS(root_to_bifactorization(r, g), NotSignRoot);
    }
}
