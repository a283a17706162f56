#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lielat/lattice.hpp"

namespace lielat {

/// Complete isomorphism invariant of an unsolvable 3-dimensional Lie lattice.
///   family 1: s0 < s1 < s2, matrix diag(p^s0, rho^e1 p^s1, rho^e2 p^s2)
///   family 2: s0 = s1 < s2, matrix diag(p^s0, -rho^e1 p^s0, p^s2)
///   family 3: s0 < s1 = s2, matrix diag(p^s0, p^s1, -rho^e2 p^s1)
///   family 4: s0 = s1 = s2, matrix p^s0 * I
struct CanonicalForm {
  long p = 0;
  int family = 0;
  std::array<Valuation, 3> s{};
  std::optional<int> eps1;
  std::optional<int> eps2;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  std::string to_string() const;
};

/// Throws InvalidCanonicalForm.
void validate(const CanonicalForm& cf);

Mat canonical_matrix(const CanonicalForm& cf, const PrimeContext& ctx);

struct CanonicalResult {
  CanonicalForm form;
  Mat matrix;
};

/// Throws NotLie, Degenerate, PrecisionLoss.
CanonicalResult canonical_form(const Algebra& alg);

/// Unimodular U with change_of_basis(A, U) equal to the canonical matrix.
Mat canonical_basis(const Algebra& alg);

struct EtaBreakdown {
  int discriminant_valuation_parity = 0;
  int epsilon_invariant = 0;
  /// Through the discriminant and Hilbert symbols.
  int eta = 0;
  /// Through the closed formula in the diagonal valuations and square classes.
  int eta_formula = 0;
};

/// Symmetric non-degenerate matrix over Q_p. Throws Degenerate,
/// PathDisagreement if the two computations differ.
EtaBreakdown eta(const Mat& A);
inline EtaBreakdown eta(const Algebra& alg) { return eta(alg.matrix()); }

/// Closed-form value of eta on the canonical representative.
int eta_of_canonical(const CanonicalForm& cf, int delta);

enum class QpType { SL2, SL1D };
const char* to_string(QpType t);
QpType qp_type(const Algebra& alg);

bool is_isomorphic(const Algebra& a, const Algebra& b);

/// Every canonical form with all s-invariants <= max_s.
std::vector<CanonicalForm> enumerate_canonical_forms(long p, Valuation max_s);

}  // namespace lielat
