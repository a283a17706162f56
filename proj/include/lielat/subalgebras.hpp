#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lielat/lattice.hpp"

namespace lielat {

/// Label of an index-p submodule: (), (e) or (e,f) with digits in 0..p-1.
struct XiSymbol {
  enum class Shape { Empty, Single, Pair };
  Shape shape = Shape::Empty;
  long e = 0;
  long f = 0;

  /// 0, 1 or 2: which basis vector the submodule shrinks, up to the
  /// triangular correction.
  int class_index() const;
  std::string to_string() const;
  friend bool operator==(const XiSymbol&, const XiSymbol&) = default;
};

/// All 1 + p + p^2 symbols: (), then (e), then (e,f), each in lexicographic order.
std::vector<XiSymbol> all_xi_symbols(long p);

/// Columns generate the submodule: () -> diag(p,1,1);
/// (e) -> [[1,0,0],[e,p,0],[0,0,1]]; (e,f) -> [[1,0,0],[0,1,0],[e,f,p]].
Mat u_xi(const XiSymbol& xi, const PrimeContext& ctx);

struct SubalgebraReport {
  XiSymbol xi;
  Mat U;
  bool is_subalgebra = false;
  Mat B;
  std::optional<SInvariants> sub_s_invariants;
};

std::vector<SubalgebraReport> enumerate_index_p(const Algebra& alg);

/// Closed form of change_of_basis(A, u_xi(xi)) for diagonal A. Throws NotDiagonal.
Mat b_xi(const Mat& A, const XiSymbol& xi);

struct NssViolation {
  /// 0: v(e^2 a0 + a1) != v(a0); 1: v(e^2 a0 + f^2 a1 + a2) != v(a0);
  /// 2: v(f^2 a1 + a2) != v(a1).
  int condition = 0;
  long e = 0;
  long f = 0;
};

/// First violated valuation condition on a diagonal, sorted structure matrix,
/// or nullopt when all hold. Throws NotDiagonal.
std::optional<NssViolation> nss_violation(const Mat& A);
inline bool nss_condition(const Mat& A) { return !nss_violation(A).has_value(); }

/// Shifted s-invariants of the subalgebra of class i, sorted. Throws
/// NotSubalgebra when s_i = 0.
SInvariants sub_s_invariants_predicted(const SInvariants& s, int i);

/// Compares [M,M] + p^{s_i} M with p[L,L] + p^{s_i} L through Hermite forms.
/// Throws PreconditionViolated unless A is diagonal, sorted, satisfies the
/// valuation conditions and M = L^xi is a subalgebra.
bool key_identity_check(const Algebra& alg, const XiSymbol& xi);

/// Hermite-normalized index-p^2 sublattices, obtained as two index-p steps.
std::vector<Mat> index_p2_sublattices(const PrimeContext& ctx);

}  // namespace lielat
