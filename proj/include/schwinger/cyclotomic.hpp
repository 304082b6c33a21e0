#pragma once

// Exact arithmetic in Z[omega_n] for sums of n-th roots of unity.
//
// An element sum_e c_e omega_n^e is held as its coefficient vector of length n
// and reduced modulo the cyclotomic polynomial Phi_n, which gives a canonical
// form: the element is zero iff the reduced vector is zero.

#include <cstdint>
#include <vector>

namespace schwinger {

using IntPoly = std::vector<std::int64_t>;

/// Coefficients of Phi_n, lowest degree first. Computed by exact division of
/// x^n - 1 by Phi_d for the proper divisors d; cached per thread.
const IntPoly& cyclotomic_polynomial(std::uint64_t n);

/// Reduces sum_e coeffs[e] x^e modulo Phi_n. coeffs.size() may be any length;
/// exponents are read modulo n first. The result has length phi(n).
IntPoly reduce_cyclotomic(const IntPoly& coeffs, std::uint64_t n);

/// Whether sum_e coeffs[e] omega_n^e == 0 exactly.
bool is_zero_in_cyclotomic_ring(const IntPoly& coeffs, std::uint64_t n);

}  // namespace schwinger
