#pragma once

#include <random>

#include "lielat/normal_forms.hpp"

namespace lielat {

using Rng = std::mt19937_64;

/// Random p-adic unit with a few non-trivial digits.
PadicScalar random_unit(Rng& rng, const PrimeContext& ctx);

/// Random integer matrix with entries in [-bound, bound] and unit determinant.
Mat random_unimodular(Rng& rng, const PrimeContext& ctx, int n = 3, long bound = 4);

/// Random symmetric matrix with entries r * p^k, |r| <= 40, k <= max_k, and
/// determinant of valuation below half the precision.
Mat random_symmetric_nondegenerate(Rng& rng, const PrimeContext& ctx, int max_k = 2);

/// Random integer 3x3 matrix with entries r * p^k, |r| <= 40, k <= max_k.
Mat random_integral(Rng& rng, const PrimeContext& ctx, int rows, int cols, int max_k = 2);

/// Subalgebra generated by a random full-rank sublattice of the algebra with
/// structure matrix A, in column Hermite form.
Mat random_subalgebra(Rng& rng, const Mat& A, int max_k = 2);

}  // namespace lielat
