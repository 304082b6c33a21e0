#include "schwinger/kernels.hpp"

#include <algorithm>
#include <optional>

#include "schwinger/errors.hpp"
#include "schwinger/numtheory.hpp"

namespace schwinger::kernels {

namespace {

void check_budget(const LabeledBasis& b) {
    if (b.dimension() > kMaxMaterializedDimension) {
        throw InvalidArgument("kernel: M = " + std::to_string(b.dimension()) + " exceeds the materialization cap");
    }
}

void check_pair(const LabeledBasis& bra, const LabeledBasis& ket) {
    if (bra.dimension() != ket.dimension()) throw DimensionMismatch("kernel: basis dimensions differ");
    check_budget(bra);
}

bool is_unit_root(std::uint64_t x, std::uint64_t M) { return mul_mod(x, x, M) == 1 % M; }

// Index whichever side has the larger supports so every lookup walks the
// smaller one in O(1) per position.
bool index_bra(const std::vector<FlatPhaseState>& a, const std::vector<FlatPhaseState>& b) {
    std::uint64_t na = 0, nb = 0;
    for (const auto& s : a) na += s.support_size();
    for (const auto& s : b) nb += s.support_size();
    return na > nb;
}

std::vector<IndexedState> indexed(const std::vector<FlatPhaseState>& v) {
    return {v.begin(), v.end()};
}

using Support = std::vector<std::uint32_t>;

std::vector<Support> nonzeros(const std::vector<dense::Vector>& vs) {
    std::vector<Support> out(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t x = 0; x < vs[i].size(); ++x)
            if (vs[i][x] != dense::Complex{}) out[i].push_back(static_cast<std::uint32_t>(x));
    return out;
}

// dense::inner restricted to the indices where one side is nonzero; the
// skipped terms are exact zeros.
dense::Complex inner_on(const dense::Vector& a, const Support& sa, const dense::Vector& b, const Support& sb) {
    const Support& s = sa.size() <= sb.size() ? sa : sb;
    dense::Complex sum{};
    for (auto x : s) sum += std::conj(a[x]) * b[x];
    return sum;
}

}  // namespace

namespace serial {

std::vector<FlatPhaseState> states(const LabeledBasis& basis) {
    check_budget(basis);
    std::vector<FlatPhaseState> out;
    out.reserve(basis.dimension());
    for (std::uint64_t i = 0; i < basis.dimension(); ++i) out.push_back(basis.state_at(i));
    return out;
}

std::vector<dense::Vector> dense_states(const LabeledBasis& basis) {
    check_budget(basis);
    std::vector<dense::Vector> out;
    out.reserve(basis.dimension());
    for (std::uint64_t i = 0; i < basis.dimension(); ++i) out.push_back(dense::to_vector(basis.state_at(i)));
    return out;
}

OverlapTable overlap_table(const LabeledBasis& bra, const LabeledBasis& ket) {
    check_pair(bra, ket);
    const auto a = states(bra);
    const auto b = states(ket);
    OverlapTable t{a.size(), b.size(), {}};
    t.entries.reserve(a.size() * b.size());
    if (index_bra(a, b)) {
        const auto ia = indexed(a);
        for (const auto& sa : ia)
            for (const auto& sb : b) t.entries.push_back(overlap(sa, sb));
    } else {
        const auto ib = indexed(b);
        for (const auto& sa : a)
            for (const auto& sb : ib) t.entries.push_back(overlap(sa, sb));
    }
    return t;
}

dense::Matrix dense_overlap_table(const LabeledBasis& bra, const LabeledBasis& ket) {
    check_pair(bra, ket);
    const auto a = dense_states(bra);
    const auto b = dense_states(ket);
    const auto sa = nonzeros(a), sb = nonzeros(b);
    dense::Matrix m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = inner_on(a[i], sa[i], b[j], sb[j]);
    }
    return m;
}

std::uint64_t count_unit_roots(std::uint64_t M) {
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < M; ++x) count += is_unit_root(x, M);
    return count;
}

std::vector<std::uint64_t> unit_root_counts(std::uint64_t max_M) {
    std::vector<std::uint64_t> out(max_M + 1, 0);
    for (std::uint64_t M = 1; M <= max_M; ++M) out[M] = count_unit_roots(M);
    return out;
}

}  // namespace serial

namespace parallel {

std::vector<FlatPhaseState> states(const LabeledBasis& basis) {
    check_budget(basis);
    const auto n = static_cast<std::int64_t>(basis.dimension());
    std::vector<std::optional<FlatPhaseState>> slots(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) slots[i] = basis.state_at(static_cast<std::uint64_t>(i));
    std::vector<FlatPhaseState> out;
    out.reserve(n);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

std::vector<dense::Vector> dense_states(const LabeledBasis& basis) {
    check_budget(basis);
    const auto n = static_cast<std::int64_t>(basis.dimension());
    std::vector<dense::Vector> out(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) out[i] = dense::to_vector(basis.state_at(static_cast<std::uint64_t>(i)));
    return out;
}

OverlapTable overlap_table(const LabeledBasis& bra, const LabeledBasis& ket) {
    check_pair(bra, ket);
    const auto a = states(bra);
    const auto b = states(ket);
    OverlapTable t{a.size(), b.size(), std::vector<Overlap>(a.size() * b.size())};
    const auto rows = static_cast<std::int64_t>(a.size());
    if (index_bra(a, b)) {
        const auto ia = indexed(a);
#pragma omp parallel for schedule(dynamic, 4)
        for (std::int64_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < b.size(); ++j) t.entries[i * t.cols + j] = overlap(ia[i], b[j]);
    } else {
        const auto ib = indexed(b);
#pragma omp parallel for schedule(dynamic, 4)
        for (std::int64_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < b.size(); ++j) t.entries[i * t.cols + j] = overlap(a[i], ib[j]);
    }
    return t;
}

dense::Matrix dense_overlap_table(const LabeledBasis& bra, const LabeledBasis& ket) {
    check_pair(bra, ket);
    const auto a = dense_states(bra);
    const auto b = dense_states(ket);
    const auto sa = nonzeros(a), sb = nonzeros(b);
    dense::Matrix m(a.size());
    const auto rows = static_cast<std::int64_t>(a.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = inner_on(a[i], sa[i], b[j], sb[j]);
    }
    return m;
}

std::uint64_t count_unit_roots(std::uint64_t M) {
    std::uint64_t count = 0;
    const auto n = static_cast<std::int64_t>(M);
#pragma omp parallel for reduction(+ : count) schedule(static)
    for (std::int64_t x = 0; x < n; ++x) count += is_unit_root(static_cast<std::uint64_t>(x), M);
    return count;
}

std::vector<std::uint64_t> unit_root_counts(std::uint64_t max_M) {
    std::vector<std::uint64_t> out(max_M + 1, 0);
    const auto n = static_cast<std::int64_t>(max_M);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t M = 1; M <= n; ++M) out[M] = serial::count_unit_roots(static_cast<std::uint64_t>(M));
    return out;
}

}  // namespace parallel

double gram_deviation(const dense::Matrix& gram) {
    double worst = 0.0;
    for (std::size_t i = 0; i < gram.size(); ++i) {
        for (std::size_t j = 0; j < gram.size(); ++j) {
            const dense::Complex target = i == j ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(gram(i, j) - target));
        }
    }
    return worst;
}

}  // namespace schwinger::kernels
