#include "lielat/catalog.hpp"

#include <map>
#include <sstream>

namespace lielat {
namespace {

struct KindInfo {
  NamedKind kind;
  std::size_t params;
};

const std::map<std::string, KindInfo>& kinds() {
  static const std::map<std::string, KindInfo> table{
      {"sl2", {NamedKind::Sl2, 0}},
      {"sl2_congruence", {NamedKind::Sl2Congruence, 1}},
      {"sl2_sylow", {NamedKind::Sl2Sylow, 0}},
      {"gamma_sl2_sylow", {NamedKind::GammaSl2Sylow, 1}},
      {"sl1_delta", {NamedKind::Sl1Delta, 0}},
      {"sl1_congruence", {NamedKind::Sl1Congruence, 1}},
      {"L1", {NamedKind::L1, 5}},
      {"L2", {NamedKind::L2, 3}},
      {"L3", {NamedKind::L3, 3}},
      {"L4", {NamedKind::L4, 1}},
      {"dim1", {NamedKind::Dim1, 0}},
      {"dim2", {NamedKind::Dim2, 1}},
  };
  return table;
}

[[noreturn]] void bad(const std::string& why) { throw Error(ErrorKind::InvalidParameters, why); }

Mat sl2_matrix(const PrimeContext& ctx) { return Mat::from_integers(ctx, 3, 3, {1, 0, 0, 0, 0, 2, 0, 2, 0}); }

Mat sylow_matrix(const PrimeContext& ctx) {
  const long p = ctx.p();
  return change_of_basis(sl2_matrix(ctx), Mat::from_integers(ctx, 3, 3, {p, 0, 0, 0, 1, 0, 0, 0, p}));
}

Mat sl1_matrix(const PrimeContext& ctx) {
  return Mat::from_integers(ctx, 3, 3, {-1, 0, 0, 0, ctx.rho(), 0, 0, 0, ctx.p()});
}

Mat diag_powers(const PrimeContext& ctx, Valuation a, Valuation b, Valuation c) {
  return Mat::diagonal({PadicScalar::power_of_p(a, ctx), PadicScalar::power_of_p(b, ctx), PadicScalar::power_of_p(c, ctx)});
}

CanonicalForm literal_form(const NamedLattice& n, long p) {
  const auto& v = n.params;
  CanonicalForm cf;
  cf.p = p;
  switch (n.kind) {
    case NamedKind::L1:
      cf.family = 1;
      cf.s = {v[0], v[1], v[2]};
      cf.eps1 = static_cast<int>(v[3]);
      cf.eps2 = static_cast<int>(v[4]);
      break;
    case NamedKind::L2:
      cf.family = 2;
      cf.s = {v[0], v[0], v[1]};
      cf.eps1 = static_cast<int>(v[2]);
      break;
    case NamedKind::L3:
      cf.family = 3;
      cf.s = {v[0], v[1], v[1]};
      cf.eps2 = static_cast<int>(v[2]);
      break;
    default:
      cf.family = 4;
      cf.s = {v[0], v[0], v[0]};
      break;
  }
  return cf;
}

}  // namespace

std::string NamedLattice::name() const {
  std::string base;
  for (const auto& [key, info] : kinds()) {
    if (info.kind == kind) base = key;
  }
  if (params.empty()) return base;
  std::ostringstream os;
  os << base << "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) os << ",";
    if (params[i] == kInfinity) {
      os << "inf";
    } else {
      os << params[i];
    }
  }
  os << ")";
  return os.str();
}

NamedLattice make_named(const std::string& name, const std::vector<Valuation>& params) {
  auto it = kinds().find(name);
  if (it == kinds().end()) bad("unknown lattice name '" + name + "'");
  if (params.size() != it->second.params) {
    bad(name + " takes " + std::to_string(it->second.params) + " parameter(s)");
  }
  NamedLattice n{it->second.kind, params};
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (params[i] < 0) bad("parameters must be non-negative");
    if (params[i] == kInfinity && n.kind != NamedKind::Dim2) bad("only dim2 accepts an infinite parameter");
  }
  const auto& v = params;
  auto bit = [&](std::size_t i) {
    if (v[i] != 0 && v[i] != 1) bad("epsilon parameters must be 0 or 1");
  };
  switch (n.kind) {
    case NamedKind::L1:
      if (!(v[0] < v[1] && v[1] < v[2])) bad("L1 needs s0 < s1 < s2");
      bit(3);
      bit(4);
      break;
    case NamedKind::L2:
      if (!(v[0] < v[1])) bad("L2 needs s0 < s2");
      bit(2);
      break;
    case NamedKind::L3:
      if (!(v[0] < v[1])) bad("L3 needs s0 < s1");
      bit(2);
      break;
    default:
      break;
  }
  return n;
}

Mat gamma_sylow_basis(const PrimeContext& ctx, Valuation n) {
  const Algebra sylow(sylow_matrix(ctx));
  const Mat Z = canonical_basis(sylow);
  const SInvariants s = s_invariants(sylow);
  const auto e = lcs_exponents(s.s, n);
  return Z * diag_powers(ctx, e[0], e[1], e[2]);
}

Algebra named_matrix(const NamedLattice& named, const PrimeContext& ctx) {
  const long p = ctx.p();
  switch (named.kind) {
    case NamedKind::Sl2: return Algebra(sl2_matrix(ctx));
    case NamedKind::Sl2Congruence:
      return Algebra(sl2_matrix(ctx).scaled(PadicScalar::power_of_p(named.params[0], ctx)));
    case NamedKind::Sl2Sylow: return Algebra(sylow_matrix(ctx));
    case NamedKind::GammaSl2Sylow:
      return Algebra(change_of_basis(sylow_matrix(ctx), gamma_sylow_basis(ctx, named.params[0])));
    case NamedKind::Sl1Delta: return Algebra(sl1_matrix(ctx));
    case NamedKind::Sl1Congruence: {
      const Valuation n = named.params[0];
      const Valuation m = n / 2;
      const Mat U = n % 2 == 0 ? diag_powers(ctx, m, m, m) : diag_powers(ctx, m, m, m + 1);
      return Algebra(change_of_basis(sl1_matrix(ctx), U));
    }
    case NamedKind::L1:
    case NamedKind::L2:
    case NamedKind::L3:
    case NamedKind::L4: return Algebra(canonical_matrix(literal_form(named, p), ctx));
    case NamedKind::Dim1:
    case NamedKind::Dim2: break;
  }
  bad(named.name() + " is not three-dimensional");
}

BracketTable named_bracket(const NamedLattice& named, const PrimeContext& ctx) {
  if (named.kind == NamedKind::Dim1) return BracketTable::abelian(ctx, 1);
  if (named.kind == NamedKind::Dim2) return BracketTable::two_dim(ctx, named.params[0]);
  return BracketTable::from_algebra(named_matrix(named, ctx));
}

GroupReport group_report(const Algebra& alg) {
  const PrimeContext& ctx = alg.context();
  const long p = ctx.p();
  const CanonicalForm cf = canonical_form(alg).form;
  GroupReport r;
  r.form = cf;
  r.s1 = cf.s[1];
  r.residually_nilpotent = residually_nilpotent(SInvariants{cf.s});
  r.naming_applicable = p >= 5;
  r.self_similarity = sigma_bounds(cf, ctx);
  r.index_transfer_note =
      "for a saturable torsion-free pro-p group G with Lie lattice L_G and open subgroup D, "
      "[G:D] = [L_G:L_D]; G is self-similar of index p^k if and only if L_G is";

  const bool index_p = r.self_similarity.index_p_self_similar;
  if (!r.residually_nilpotent) {
    r.statements.push_back("s1 = 0: not residually nilpotent, so no torsion-free pro-p group on the list has this lattice");
  } else if (!r.naming_applicable) {
    r.statements.push_back("group naming requires p >= 5");
  } else {
    std::ostringstream os;
    const auto& s = cf.s;
    switch (cf.family) {
      case 1: os << "G1(" << s[0] << "," << s[1] << "," << s[2] << "," << *cf.eps1 << "," << *cf.eps2 << ")"; break;
      case 2: os << "G2(" << s[0] << "," << s[2] << "," << *cf.eps1 << ")"; break;
      case 3: os << "G3(" << s[0] << "," << s[1] << "," << *cf.eps2 << ")"; break;
      default: os << "G4(" << s[0] << ")"; break;
    }
    r.group_name = os.str();
    r.statements.push_back(r.group_name + (index_p ? " is self-similar of index p" : " is not self-similar of index p"));
  }

  if (r.self_similarity.eta == 0) {
    r.statements.push_back("Q_p-Lie algebra is sl2(Q_p)");
    if (p >= 5) {
      r.statements.push_back("every open subgroup of the Sylow pro-p subgroup of SL2(Z_p) is self-similar");
      r.statements.push_back("the Sylow pro-p subgroup of SL2(Z_p) and its lower central series terms are self-similar of index p");
      r.statements.push_back("every non-trivial closed normal subgroup of the Sylow pro-p subgroup of SL2(Z_p) is self-similar of index p or p^2");
    }
    r.statements.push_back("every open subgroup of SL2^1(Z_p) is self-similar");
    r.statements.push_back("the congruence subgroups SL2^k(Z_p), k >= 1, are self-similar of index p");
  } else {
    r.statements.push_back("Q_p-Lie algebra is sl1(D_p)");
    if (p >= 5) r.statements.push_back("no open subgroup of SL1^1(D_p) is self-similar of index p");
    r.statements.push_back("no open subgroup of SL1^2(D_p) is self-similar of index p");
    r.statements.push_back("conjectured, not asserted: no open subgroup of SL1^1(D_p) (p >= 5) or SL1^2(D_p) (p >= 3) is self-similar");
    r.conjecture_flag = true;
  }
  return r;
}

NormalSubgroupVerdict normal_subgroup_sigma(const PrimeContext& ctx, const Mat& ideal_generators) {
  const Algebra sylow(sylow_matrix(ctx));
  const BracketTable table = BracketTable::from_algebra(sylow);
  const HermiteForm h = hnf_columns(ideal_generators);
  if (h.rank < 3) throw Error(ErrorKind::NotAnIdeal, "a non-zero ideal must have full rank");
  const Mat& I = h.H;
  if (!is_ideal(table, I)) throw Error(ErrorKind::NotAnIdeal, "sublattice is not an ideal");

  NormalSubgroupVerdict v;
  const Valuation limit = 2 * ctx.precision();
  while (!column_span_contains(I, gamma_sylow_basis(ctx, v.k))) {
    if (++v.k > limit) throw Error(ErrorKind::PrecisionLoss, "ideal too deep for the precision window");
  }
  const Mat gk = gamma_sylow_basis(ctx, v.k);
  v.index_over_gamma = index_exponent(gk) - index_exponent(I);
  if (v.k > 0 && !column_span_contains(gamma_sylow_basis(ctx, v.k - 1), I)) {
    throw Error(ErrorKind::PathDisagreement, "ideal is not sandwiched between consecutive lower central terms");
  }
  if (v.index_over_gamma > 1) {
    throw Error(ErrorKind::PathDisagreement, "ideal has index above p over the lower central term");
  }
  const SubalgebraCheck sub = is_subalgebra(sylow, I);
  const CanonicalForm cf = canonical_form(*sub.induced).form;
  v.sigma_exponent = decide_index_p(cf) == Decision::Yes ? 1 : 2;
  return v;
}

}  // namespace lielat
