#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lielat/normal_forms.hpp"

namespace lielat {

using Coords = std::array<PadicScalar, 3>;

/// 3-dimensional antisymmetric Z_p-algebra given by its structure matrix:
/// [x1,x2], [x2,x0], [x0,x1] are the columns 0, 1, 2 of A.
class Algebra {
 public:
  /// A must be 3x3 with integral entries.
  explicit Algebra(Mat A);

  const Mat& matrix() const { return A_; }
  const PrimeContext& context() const { return A_.context(); }

 private:
  Mat A_;
};

/// Bracket table of a small algebra of any dimension: entry (i, j), i < j,
/// holds [e_i, e_j] as an n x 1 column.
class BracketTable {
 public:
  static BracketTable from_structure_matrix(const Mat& A);
  static BracketTable from_algebra(const Algebra& alg) { return from_structure_matrix(alg.matrix()); }
  /// Abelian algebra of dimension n.
  static BracketTable abelian(const PrimeContext& ctx, int n);
  /// Two-dimensional algebra with [x, y] = p^s x; s = kInfinity gives the abelian one.
  static BracketTable two_dim(const PrimeContext& ctx, Valuation s);

  int dim() const { return n_; }
  const PrimeContext& context() const { return *ctx_; }
  /// x, y are n x 1 columns.
  Mat bracket(const Mat& x, const Mat& y) const;
  const Mat& basis_bracket(int i, int j) const;

 private:
  const PrimeContext* ctx_ = nullptr;
  int n_ = 0;
  std::vector<Mat> table_;
};

Coords bracket(const Algebra& alg, const Coords& x, const Coords& y);

/// J(e0,e1,e2) = [[e0,e1],e2] + [[e2,e0],e1] + [[e1,e2],e0].
Coords jacobiator(const Algebra& alg);
/// Same quantity via J_j = sum_l v_l A_jl where A - A^T encodes v.
Coords jacobiator_from_antisymmetric_part(const Algebra& alg);
bool is_zero(const Coords& v);

bool is_lie(const Algebra& alg);
/// det(A) != 0. Throws PrecisionLoss if a nonzero det sits beyond the window.
bool is_unsolvable(const Algebra& alg);

/// det(U) U^{-1} A U^{-T}, over Q_p. Throws Degenerate.
Mat change_of_basis(const Mat& A, const Mat& U);

/// Full-rank sublattice; the generator matrix is kept in column Hermite form.
struct Sublattice {
  Mat U;
  static Sublattice from_generators(const Mat& generators);
  Valuation index_exponent() const;
};

struct SubalgebraCheck {
  bool is_subalgebra = false;
  /// Matrix of the bracket on M in the basis given by M's generators.
  Mat B;
  std::optional<Algebra> induced;
};

SubalgebraCheck is_subalgebra(const Algebra& alg, const Mat& U);

struct SInvariants {
  std::array<Valuation, 3> s{};
  bool all_finite() const;
  friend bool operator==(const SInvariants&, const SInvariants&) = default;
};

SInvariants s_invariants(const Mat& A);
inline SInvariants s_invariants(const Algebra& alg) { return s_invariants(alg.matrix()); }

/// Saturating arithmetic on N u {infinity}; 0 * infinity = 0.
Valuation ext_add(Valuation a, Valuation b);
Valuation ext_mul(Valuation k, Valuation a);

/// Exponents of the lower central series term gamma_n relative to a well
/// diagonalizing basis with diagonal valuations s. gamma_0 = L, gamma_1 = [L,L].
std::array<Valuation, 3> lcs_exponents(const std::array<Valuation, 3>& s, Valuation n);

struct IndexPair {
  Valuation index = 0;
  Valuation commutator_index = 0;
};

/// v_p([L:M]) and v_p([[L,L]:[M,M]]); the latter is computed from Smith forms
/// and checked against twice the former.
IndexPair index_and_commutator_index(const Algebra& alg, const Mat& U);

/// Span of the brackets [L, J] (in L-coordinates) for a full-rank J.
Mat bracket_span(const BracketTable& t, const Mat& J);
/// [L, J] within J.
bool is_ideal(const BracketTable& t, const Mat& J);

}  // namespace lielat
