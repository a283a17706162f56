#include "lielat/random.hpp"

#include "lielat/lattice.hpp"

namespace lielat {
namespace {

long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

PadicScalar random_entry(Rng& rng, const PrimeContext& ctx, int max_k) {
  const long r = uniform(rng, -40, 40);
  return PadicScalar::from_integer(r, ctx).shifted(uniform(rng, 0, max_k));
}

}  // namespace

PadicScalar random_unit(Rng& rng, const PrimeContext& ctx) {
  while (true) {
    const long v = uniform(rng, -1000000, 1000000);
    if (v % ctx.p() != 0) return PadicScalar::from_integer(v, ctx);
  }
}

Mat random_unimodular(Rng& rng, const PrimeContext& ctx, int n, long bound) {
  while (true) {
    Mat V(ctx, n, n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) V(r, c) = PadicScalar::from_integer(uniform(rng, -bound, bound), ctx);
    }
    const PadicScalar d = det(V);
    if (!d.is_zero() && d.valuation() == 0) return V;
  }
}

Mat random_integral(Rng& rng, const PrimeContext& ctx, int rows, int cols, int max_k) {
  Mat M(ctx, rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) M(r, c) = random_entry(rng, ctx, max_k);
  }
  return M;
}

Mat random_symmetric_nondegenerate(Rng& rng, const PrimeContext& ctx, int max_k) {
  while (true) {
    Mat A(ctx, 3, 3);
    for (int r = 0; r < 3; ++r) {
      for (int c = r; c < 3; ++c) {
        A(r, c) = random_entry(rng, ctx, max_k);
        A(c, r) = A(r, c);
      }
    }
    const PadicScalar d = det(A);
    if (!d.is_zero() && 2 * d.valuation() < ctx.precision()) return A;
  }
}

Mat random_subalgebra(Rng& rng, const Mat& A, int max_k) {
  const PrimeContext& ctx = A.context();
  Mat U;
  do {
    U = random_integral(rng, ctx, 3, 3, max_k);
  } while (det(U).is_zero());
  U = hnf_columns(U).H;
  while (true) {
    const Mat closed = hnf_columns(U.hconcat(U * change_of_basis(A, U))).H;
    if (closed == U) return U;
    U = closed;
  }
}

}  // namespace lielat
