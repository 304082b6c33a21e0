#pragma once

// Dense complex realizations used as an independent floating-point oracle for
// the exact operator and state arithmetic. Matrices are square, row-major.

#include <complex>
#include <cstdint>
#include <vector>

#include "schwinger/phase_algebra.hpp"
#include "schwinger/states.hpp"

namespace schwinger::dense {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

class Matrix {
public:
    explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}

    static Matrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

private:
    std::size_t n_;
    std::vector<Complex> data_;
};

/// Budget above which dense checks are skipped.
inline constexpr std::uint64_t kDefaultMaxDense = 4096;

/// exp(2 pi i x / d) built directly from its definition.
Matrix tau(std::uint64_t M, std::uint64_t d);
/// exp(i p s): the matrix with <x - s|T|x> = 1.
Matrix shift(std::uint64_t M, std::int64_t s);

Matrix to_matrix(const MonomialOperator& op);
Vector to_vector(const FlatPhaseState& s);

Matrix multiply(const Matrix& a, const Matrix& b);
Vector multiply(const Matrix& a, const Vector& v);
/// Conjugate-linear in the first argument.
Complex inner(const Vector& a, const Vector& b);

double max_abs_diff(const Matrix& a, const Matrix& b);
double max_abs_diff(const Vector& a, const Vector& b);

}  // namespace schwinger::dense
