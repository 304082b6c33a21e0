#include "schwinger/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "schwinger/errors.hpp"

namespace schwinger::dense {

namespace {

Complex expi(double turns) {
    const double a = 2.0 * std::numbers::pi * turns;
    return {std::cos(a), std::sin(a)};
}

std::size_t wrap(std::int64_t v, std::size_t n) {
    const auto m = static_cast<std::int64_t>(n);
    return static_cast<std::size_t>(((v % m) + m) % m);
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix tau(std::uint64_t M, std::uint64_t d) {
    if (d == 0 || M % d != 0) throw InvalidArgument("dense::tau: d must divide M");
    Matrix m(M);
    for (std::uint64_t x = 0; x < M; ++x) m(x, x) = expi(static_cast<double>(x % d) / static_cast<double>(d));
    return m;
}

Matrix shift(std::uint64_t M, std::int64_t s) {
    Matrix m(M);
    for (std::uint64_t x = 0; x < M; ++x) m(wrap(static_cast<std::int64_t>(x) - s % static_cast<std::int64_t>(M), M), x) = 1.0;
    return m;
}

Matrix to_matrix(const MonomialOperator& op) {
    const std::uint64_t M = op.dimension();
    Matrix m(M);
    for (std::uint64_t x = 0; x < M; ++x) m(op.image(x), x) = op.phase(x).value();
    return m;
}

Vector to_vector(const FlatPhaseState& s) {
    Vector v(s.dimension());
    const double norm = 1.0 / std::sqrt(static_cast<double>(s.support_size()));
    for (const auto& e : s.entries()) {
        v[e.position] = expi(static_cast<double>(e.exponent) / static_cast<double>(s.dimension())) * norm;
    }
    return v;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw DimensionMismatch("dense::multiply: sizes differ");
    Matrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

Vector multiply(const Matrix& a, const Vector& v) {
    const std::size_t n = a.size();
    if (v.size() != n) throw DimensionMismatch("dense::multiply: sizes differ");
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out[i] += a(i, j) * v[j];
    }
    return out;
}

Complex inner(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dense::inner: sizes differ");
    Complex sum{};
    for (std::size_t i = 0; i < a.size(); ++i) sum += std::conj(a[i]) * b[i];
    return sum;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dense::max_abs_diff: sizes differ");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    }
    return worst;
}

double max_abs_diff(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dense::max_abs_diff: sizes differ");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace schwinger::dense
