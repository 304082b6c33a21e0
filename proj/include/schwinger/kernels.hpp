#pragma once

// Data-parallel kernels behind the verification suite. Each kernel has a
// serial reference in kernels::serial and an OpenMP version in
// kernels::parallel; the two must agree exactly (dense results bitwise, since
// every output element is computed by the same sequence of operations).

#include <cstdint>
#include <vector>

#include "schwinger/dense.hpp"
#include "schwinger/representations.hpp"
#include "schwinger/states.hpp"

namespace schwinger::kernels {

/// Exact overlaps <bra_i|ket_j>, row-major over basis indices.
struct OverlapTable {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Overlap> entries;

    const Overlap& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

namespace serial {

std::vector<FlatPhaseState> states(const LabeledBasis& basis);
std::vector<dense::Vector> dense_states(const LabeledBasis& basis);

OverlapTable overlap_table(const LabeledBasis& bra, const LabeledBasis& ket);
/// Floating-point inner products of the dense state vectors.
dense::Matrix dense_overlap_table(const LabeledBasis& bra, const LabeledBasis& ket);

/// Number of x in [0, M) with x^2 = 1 (mod M), by scanning every residue.
std::uint64_t count_unit_roots(std::uint64_t M);
/// count_unit_roots(M) for M = 1..max_M; index 0 is unused.
std::vector<std::uint64_t> unit_root_counts(std::uint64_t max_M);

}  // namespace serial

namespace parallel {

std::vector<FlatPhaseState> states(const LabeledBasis& basis);
std::vector<dense::Vector> dense_states(const LabeledBasis& basis);
OverlapTable overlap_table(const LabeledBasis& bra, const LabeledBasis& ket);
dense::Matrix dense_overlap_table(const LabeledBasis& bra, const LabeledBasis& ket);
std::uint64_t count_unit_roots(std::uint64_t M);
std::vector<std::uint64_t> unit_root_counts(std::uint64_t max_M);

}  // namespace parallel

/// max |G - I| for the dense Gram matrix of a basis.
double gram_deviation(const dense::Matrix& gram);

}  // namespace schwinger::kernels
