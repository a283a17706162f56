#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lielat/selfsim.hpp"

namespace lielat {

enum class NamedKind {
  Sl2,
  Sl2Congruence,
  Sl2Sylow,
  GammaSl2Sylow,
  Sl1Delta,
  Sl1Congruence,
  L1,
  L2,
  L3,
  L4,
  Dim1,
  Dim2,
};

struct NamedLattice {
  NamedKind kind = NamedKind::Sl2;
  /// Kind-specific parameters: k for the congruence and gamma families,
  /// (s0,s1,s2,e1,e2) / (s0,s2,e1) / (s0,s1,e2) / (s0) for L1..L4, s for dim2.
  std::vector<Valuation> params;

  std::string name() const;
  bool is_three_dimensional() const { return kind != NamedKind::Dim1 && kind != NamedKind::Dim2; }
};

/// "sl2", "sl2_congruence", "sl2_sylow", "gamma_sl2_sylow", "sl1_delta",
/// "sl1_congruence", "L1".."L4", "dim1", "dim2". Throws InvalidParameters.
NamedLattice make_named(const std::string& name, const std::vector<Valuation>& params);

/// Structure matrix in the standard basis of the named lattice.
/// Throws InvalidParameters for dim1/dim2 and bad parameters.
Algebra named_matrix(const NamedLattice& named, const PrimeContext& ctx);

/// Bracket table for any named lattice, including dim1 and dim2.
BracketTable named_bracket(const NamedLattice& named, const PrimeContext& ctx);

/// Basis of gamma_n of the Sylow lattice, in Sylow-lattice coordinates.
Mat gamma_sylow_basis(const PrimeContext& ctx, Valuation n);

struct GroupReport {
  CanonicalForm form;
  /// e.g. "G2(1,3,1)"; empty when no group on the list corresponds.
  std::string group_name;
  bool residually_nilpotent = false;
  /// Middle s-invariant, the one deciding residual nilpotence.
  Valuation s1 = 0;
  /// Group naming needs p >= 5.
  bool naming_applicable = false;
  SelfSimReport self_similarity;
  std::string index_transfer_note;
  std::vector<std::string> statements;
  bool conjecture_flag = false;
};

/// Throws UnsupportedPrime for p = 2 and the classification errors.
GroupReport group_report(const Algebra& alg);

struct NormalSubgroupVerdict {
  /// Least k with gamma_k inside I.
  Valuation k = 0;
  /// v_p([I : gamma_k]), 0 or 1.
  Valuation index_over_gamma = 0;
  /// 1 for index p, 2 for index p^2.
  Valuation sigma_exponent = 1;
};

/// I is given by generators in Sylow-lattice coordinates. Throws NotAnIdeal.
NormalSubgroupVerdict normal_subgroup_sigma(const PrimeContext& ctx, const Mat& ideal_generators);

}  // namespace lielat
