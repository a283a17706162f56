#include "lielat/lattice.hpp"

#include <algorithm>

namespace lielat {
namespace {

Mat column_of(const Coords& v) {
  Mat m(*v[0].context(), 3, 1);
  for (int i = 0; i < 3; ++i) m(i, 0) = v[static_cast<std::size_t>(i)];
  return m;
}

Coords coords_of(const Mat& m) {
  return {m(0, 0), m(1, 0), m(2, 0)};
}

Coords unit_vector(const PrimeContext& ctx, int i) {
  Coords v{PadicScalar::zero(ctx), PadicScalar::zero(ctx), PadicScalar::zero(ctx)};
  v[static_cast<std::size_t>(i)] = PadicScalar::from_integer(1, ctx);
  return v;
}

Coords add(const Coords& a, const Coords& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

}  // namespace

Algebra::Algebra(Mat A) : A_(std::move(A)) {
  if (A_.rows() != 3 || A_.cols() != 3) throw Error(ErrorKind::InvalidInput, "structure matrix must be 3x3");
  if (!A_.is_integral()) {
    throw Error(ErrorKind::InvalidInput, "structure matrix entries must lie in Z_p");
  }
}

BracketTable BracketTable::from_structure_matrix(const Mat& A) {
  BracketTable t;
  t.ctx_ = &A.context();
  t.n_ = 3;
  // Pairs in order (0,1), (0,2), (1,2).
  Mat c01 = A.column(2);
  Mat c02 = A.column(1).scaled(PadicScalar::from_integer(-1, A.context()));
  Mat c12 = A.column(0);
  t.table_ = {c01, c02, c12};
  return t;
}

BracketTable BracketTable::abelian(const PrimeContext& ctx, int n) {
  BracketTable t;
  t.ctx_ = &ctx;
  t.n_ = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) t.table_.emplace_back(ctx, n, 1);
  }
  return t;
}

BracketTable BracketTable::two_dim(const PrimeContext& ctx, Valuation s) {
  BracketTable t = abelian(ctx, 2);
  if (s != kInfinity) t.table_[0](0, 0) = PadicScalar::power_of_p(s, ctx);
  return t;
}

const Mat& BracketTable::basis_bracket(int i, int j) const {
  if (i >= j) throw Error(ErrorKind::InvalidInput, "basis_bracket expects i < j");
  // Index of pair (i, j) in lexicographic order.
  int idx = 0;
  for (int a = 0; a < i; ++a) idx += n_ - 1 - a;
  idx += j - i - 1;
  return table_[static_cast<std::size_t>(idx)];
}

Mat BracketTable::bracket(const Mat& x, const Mat& y) const {
  Mat out(*ctx_, n_, 1);
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      PadicScalar c = x(i, 0) * y(j, 0) - x(j, 0) * y(i, 0);
      if (c.is_zero()) continue;
      out = out + basis_bracket(i, j).scaled(c);
    }
  }
  return out;
}

Coords bracket(const Algebra& alg, const Coords& x, const Coords& y) {
  Coords cross{x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
  return coords_of(alg.matrix() * column_of(cross));
}

Coords jacobiator(const Algebra& alg) {
  const PrimeContext& ctx = alg.context();
  const Coords e0 = unit_vector(ctx, 0);
  const Coords e1 = unit_vector(ctx, 1);
  const Coords e2 = unit_vector(ctx, 2);
  Coords j = bracket(alg, bracket(alg, e0, e1), e2);
  j = add(j, bracket(alg, bracket(alg, e2, e0), e1));
  j = add(j, bracket(alg, bracket(alg, e1, e2), e0));
  return j;
}

Coords jacobiator_from_antisymmetric_part(const Algebra& alg) {
  const Mat& A = alg.matrix();
  const Mat S = A - A.transpose();
  const Coords v{S(1, 2), S(2, 0), S(0, 1)};
  return coords_of(A * column_of(v));
}

bool is_zero(const Coords& v) {
  return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

bool is_lie(const Algebra& alg) { return is_zero(jacobiator(alg)); }

bool is_unsolvable(const Algebra& alg) {
  PadicScalar d = det(alg.matrix());
  if (d.is_zero()) return false;
  if (d.valuation() >= alg.context().precision()) {
    throw Error(ErrorKind::PrecisionLoss, "determinant vanishing undecidable at this precision");
  }
  return true;
}

Mat change_of_basis(const Mat& A, const Mat& U) {
  PadicScalar d = det(U);
  if (d.is_zero()) throw Error(ErrorKind::Degenerate, "basis change matrix is singular");
  Mat adj = adjugate(U);
  return (adj * A * adj.transpose()).scaled(d.inverse());
}

Sublattice Sublattice::from_generators(const Mat& generators) {
  HermiteForm h = hnf_columns(generators);
  if (h.rank < generators.rows()) throw Error(ErrorKind::Degenerate, "generators do not span a full-rank sublattice");
  return Sublattice{h.H};
}

Valuation Sublattice::index_exponent() const { return lielat::index_exponent(U); }

SubalgebraCheck is_subalgebra(const Algebra& alg, const Mat& U) {
  SubalgebraCheck out;
  out.B = change_of_basis(alg.matrix(), U);
  out.is_subalgebra = out.B.is_integral();
  if (out.is_subalgebra) out.induced.emplace(out.B);
  return out;
}

bool SInvariants::all_finite() const {
  return std::all_of(s.begin(), s.end(), [](Valuation v) { return v != kInfinity; });
}

SInvariants s_invariants(const Mat& A) {
  SmithForm f = snf(A);
  SInvariants out;
  for (int i = 0; i < 3; ++i) out.s[static_cast<std::size_t>(i)] = f.divisors[static_cast<std::size_t>(i)];
  return out;
}

Valuation ext_add(Valuation a, Valuation b) {
  if (a == kInfinity || b == kInfinity) return kInfinity;
  return a + b;
}

Valuation ext_mul(Valuation k, Valuation a) {
  if (k == 0) return 0;
  if (a == kInfinity) return kInfinity;
  return k * a;
}

std::array<Valuation, 3> lcs_exponents(const std::array<Valuation, 3>& s, Valuation n) {
  if (n < 0) throw Error(ErrorKind::InvalidInput, "lower central series index must be >= 0");
  if (n == 0) return {0, 0, 0};
  const Valuation s0 = s[0], s1 = s[1], s2 = s[2];
  if (n % 2 == 1) {
    const Valuation m = n / 2;
    return {ext_add(ext_mul(m + 1, s0), ext_mul(m, s1)),
            ext_add(ext_mul(m, s0), ext_mul(m + 1, s1)),
            ext_add(ext_add(ext_mul(m, s0), ext_mul(m, s1)), s2)};
  }
  const Valuation m = n / 2;
  return {ext_add(ext_mul(m, s0), ext_mul(m, s1)),
          ext_add(ext_mul(m, s0), ext_mul(m, s1)),
          ext_add(ext_add(ext_mul(m, s0), ext_mul(m - 1, s1)), s2)};
}

IndexPair index_and_commutator_index(const Algebra& alg, const Mat& U) {
  if (!is_unsolvable(alg)) throw Error(ErrorKind::PreconditionViolated, "ambient algebra must be unsolvable");
  SubalgebraCheck sub = is_subalgebra(alg, U);
  if (!sub.is_subalgebra) throw Error(ErrorKind::NotSubalgebra, "sublattice is not closed under the bracket");
  IndexPair out;
  out.index = index_exponent(U);
  Valuation ll = 0;
  for (Valuation d : snf(alg.matrix()).divisors) ll += d;
  Valuation mm = 0;
  for (Valuation d : snf(U * sub.B).divisors) mm += d;
  out.commutator_index = mm - ll;
  if (out.commutator_index != 2 * out.index) {
    throw Error(ErrorKind::PathDisagreement, "commutator index is not the square of the index");
  }
  return out;
}

Mat bracket_span(const BracketTable& t, const Mat& J) {
  const int n = t.dim();
  const PrimeContext& ctx = t.context();
  Mat out(ctx, n, 0);
  for (int i = 0; i < n; ++i) {
    Mat e(ctx, n, 1);
    e(i, 0) = PadicScalar::from_integer(1, ctx);
    for (int k = 0; k < J.cols(); ++k) out = out.hconcat(t.bracket(e, J.column(k)));
  }
  return out;
}

bool is_ideal(const BracketTable& t, const Mat& J) {
  return column_span_contains(J, bracket_span(t, J));
}

}  // namespace lielat
