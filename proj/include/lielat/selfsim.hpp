#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lielat/classify.hpp"

namespace lielat {

/// phi: M -> L, M = span(domain_U columns). Column j of phi is the image of
/// the j-th column of domain_U; everything is in L-coordinates.
struct VirtualEndomorphism {
  BracketTable ambient;
  Mat domain_U;
  Mat phi;

  Valuation index_exponent() const { return lielat::index_exponent(domain_U); }
};

enum class Decision { Yes, No };

Decision decide_index_p(const CanonicalForm& cf);

struct SelfSimReport {
  CanonicalForm form;
  int eta = 0;
  bool index_p_self_similar = false;
  /// sigma >= p^sigma_lower.
  Valuation sigma_lower = 0;
  /// sigma <= p^sigma_upper; nullopt means the upper bound is conjecturally infinite.
  std::optional<Valuation> sigma_upper;
  /// Row of the estimate table (1..9), 0 when no row applies.
  int table_row = 0;
  /// Exponents (k0,k1,k2) of the witness subalgebra diag(p^k) in the canonical basis.
  std::optional<std::array<Valuation, 3>> witness_exponents;
  /// In canonical-basis coordinates of L.
  std::optional<VirtualEndomorphism> certificate;
  std::optional<std::string> obstruction_note;
  bool conjecture_flag = false;
};

/// Rows of the estimate table whose side conditions hold for cf; empty for eta = 1.
std::vector<int> matching_table_rows(const CanonicalForm& cf, int delta);

/// Throws InvalidCanonicalForm.
SelfSimReport sigma_bounds(const CanonicalForm& cf, const PrimeContext& ctx);

struct SimpleVe {
  VirtualEndomorphism ve;
  /// Basis change T from the algebra's coordinates to the prepared basis in
  /// which the bracket matrix is [[a,0,0],[0,0,b],[0,b,0]].
  Mat prepared_basis;
};

/// Index-p simple virtual endomorphism in the algebra's own coordinates.
/// Throws NotIndexPSelfSimilar.
SimpleVe construct_simple_ve(const Algebra& alg);

/// Throws NotSubalgebra when the domain is not closed under the bracket.
bool is_morphism(const VirtualEndomorphism& ve);

/// D[0] = L, D[n+1] = {x in M : phi(x) in D[n]}, each in column Hermite form.
std::vector<Mat> domain_chain(const VirtualEndomorphism& ve, int depth);

struct RegularityResult {
  bool regular = true;
  /// phi(D[n+1]) is not contained in D[n+1] at every computed level.
  bool escape = true;
  std::vector<Valuation> index_steps;
};

RegularityResult regularity_check(const VirtualEndomorphism& ve, int depth);

/// Full-rank phi-invariant ideal J inside M with [L:J] = p^1..p^K, searched
/// inside D[K]; nullopt when none exists within the bound.
std::optional<Mat> invariant_ideal_search(const VirtualEndomorphism& ve, int K, unsigned threads = 0);

bool residually_nilpotent(const SInvariants& s);

/// dim 1: phi(a) = p^{-k} a on p^k Z_p. dim 2, [x,y] = p^s x: s infinite swaps
/// p^k x -> y, y -> x; s finite fixes p^k x -> x, y -> y.
VirtualEndomorphism lowdim_simple_ve(int dim, Valuation s, Valuation k, const PrimeContext& ctx);

/// Every column-Hermite sublattice of Z_p^n with index p^j.
std::vector<Mat> hermite_sublattices(const PrimeContext& ctx, int n, Valuation j);

}  // namespace lielat
