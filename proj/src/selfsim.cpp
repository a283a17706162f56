#include "lielat/selfsim.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace lielat {
namespace {

int mod2(Valuation v) { return static_cast<int>(((v % 2) + 2) % 2); }

Mat diag_powers(const PrimeContext& ctx, const std::vector<Valuation>& exps) {
  std::vector<PadicScalar> d;
  for (Valuation e : exps) d.push_back(PadicScalar::power_of_p(e, ctx));
  return Mat::diagonal(d);
}

// Basis change from the canonical matrix to diag(a, c, -c).
Mat hyperbolic_preparation(const CanonicalForm& cf, const Mat& C) {
  const PrimeContext& ctx = C.context();
  switch (cf.family) {
    case 3: return Mat::identity(ctx, 3);
    case 2: return Mat::from_integers(ctx, 3, 3, {0, 1, 0, 0, 0, 1, 1, 0, 0});
    case 4: {
      const PadicScalar minus_one = PadicScalar::from_integer(-1, ctx);
      Diagonalization m = cassels_move(C.scaled(minus_one), 0, 1, minus_one);
      return inverse(m.V).transpose().scaled(minus_one * det(m.V));
    }
    default: throw Error(ErrorKind::NotIndexPSelfSimilar, "no index-p construction for family 1");
  }
}

bool is_hyperbolic_form(const Mat& H) {
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const bool on_pattern = (r == 0 && c == 0) || (r == 1 && c == 2) || (r == 2 && c == 1);
      if (on_pattern == H(r, c).is_zero()) return false;
    }
  }
  return H(1, 2) == H(2, 1);
}

// Image of the J columns under phi; J must lie in M.
Mat apply_phi(const VirtualEndomorphism& ve, const Mat& Uinv, const Mat& J) {
  return ve.phi * (Uinv * J);
}

}  // namespace

Decision decide_index_p(const CanonicalForm& cf) {
  validate(cf);
  switch (cf.family) {
    case 1: return Decision::No;
    case 2: return *cf.eps1 == 0 ? Decision::Yes : Decision::No;
    case 3: return *cf.eps2 == 0 ? Decision::Yes : Decision::No;
    default: return Decision::Yes;
  }
}

std::vector<int> matching_table_rows(const CanonicalForm& cf, int delta) {
  validate(cf);
  const Valuation s0 = cf.s[0], s1 = cf.s[1], s2 = cf.s[2];
  const bool q01 = mod2(s0) == mod2(s1);
  const bool q12 = mod2(s1) == mod2(s2);
  const bool q02 = mod2(s0) == mod2(s2);
  const int e1 = cf.eps1.value_or(0);
  const int e2 = cf.eps2.value_or(0);
  std::vector<int> rows;
  auto add = [&](int row, bool pred) {
    if (pred) rows.push_back(row);
  };
  add(1, cf.family == 4);
  add(2, cf.family == 3 && e2 == 0);
  add(3, cf.family == 3 && e2 == 1 && q01);
  add(4, cf.family == 2 && e1 == 0);
  add(5, cf.family == 2 && e1 == 1 && q02);
  add(6, cf.family == 1 && q01 && q12);
  add(7, cf.family == 1 && q01 && !q12 && mod2(e1 + delta) == 0);
  add(8, cf.family == 1 && q12 && !q01 && mod2(e1 + e2 + delta) == 0);
  add(9, cf.family == 1 && q02 && !q01 && mod2(e2 + delta) == 0);
  return rows;
}

namespace {

std::array<Valuation, 3> witness_for_row(int row, const std::array<Valuation, 3>& s) {
  const Valuation s0 = s[0], s1 = s[1], s2 = s[2];
  switch (row) {
    case 3: return {0, (s1 - s0) / 2, (s1 - s0) / 2};
    case 5: return {0, 0, (s2 - s0) / 2};
    case 6: return {0, (s1 - s0) / 2, (s2 - s0) / 2};
    case 7: return {0, (s1 - s0) / 2, 0};
    case 8: return {0, 0, (s2 - s1) / 2};
    case 9: return {0, 0, (s2 - s0) / 2};
    default: throw Error(ErrorKind::InvalidInput, "row has no witness subalgebra");
  }
}

Valuation row_upper_bound(int row, const std::array<Valuation, 3>& s) {
  const Valuation s0 = s[0], s1 = s[1], s2 = s[2];
  switch (row) {
    case 3: return s1 - s0 + 1;
    case 5: return (s2 - s0) / 2 + 1;
    case 6: return (s1 - s0) / 2 + (s2 - s0) / 2 + 1;
    case 7: return (s1 - s0) / 2 + 1;
    case 8: return (s2 - s1) / 2 + 1;
    case 9: return (s2 - s0) / 2 + 1;
    default: return 1;
  }
}

}  // namespace

SelfSimReport sigma_bounds(const CanonicalForm& cf, const PrimeContext& ctx) {
  validate(cf);
  if (cf.p != ctx.p()) throw Error(ErrorKind::InvalidCanonicalForm, "canonical form belongs to another prime");
  const Mat C = canonical_matrix(cf, ctx);
  const Algebra L(C);
  SelfSimReport r;
  r.form = cf;
  r.eta = eta(C).eta;
  if (r.eta != eta_of_canonical(cf, ctx.delta())) {
    throw Error(ErrorKind::PathDisagreement, "eta of the canonical matrix disagrees with the closed formula");
  }
  const std::vector<int> rows = matching_table_rows(cf, ctx.delta());
  if (r.eta == 0 && rows.size() != 1) {
    throw Error(ErrorKind::PathDisagreement, "estimate table rows do not partition the eta = 0 forms");
  }

  if (decide_index_p(cf) == Decision::Yes) {
    r.index_p_self_similar = true;
    r.sigma_lower = 1;
    r.sigma_upper = 1;
    r.table_row = rows.front();
    r.certificate = construct_simple_ve(L).ve;
    return r;
  }

  r.sigma_lower = 2;
  if (r.eta == 1) {
    r.conjecture_flag = true;
    r.obstruction_note =
        "Q_p-form is sl1(D_p): no open sublattice is self-similar of index p; "
        "conjecturally not self-similar at any index";
    return r;
  }
  r.obstruction_note =
      "the canonical basis meets the valuation conditions forcing "
      "[M,M] + p^{s_i}M = p[L,L] + p^{s_i}L for every index-p subalgebra M, "
      "so no simple virtual endomorphism of index p exists";
  r.table_row = rows.front();
  const auto k = witness_for_row(r.table_row, cf.s);
  r.witness_exponents = k;
  const Mat UM = diag_powers(ctx, {k[0], k[1], k[2]});
  const SubalgebraCheck sub = is_subalgebra(L, UM);
  if (!sub.is_subalgebra) throw Error(ErrorKind::PathDisagreement, "witness sublattice is not a subalgebra");
  const SimpleVe inner = construct_simple_ve(*sub.induced);
  VirtualEndomorphism ve{BracketTable::from_structure_matrix(C), UM * inner.ve.domain_U, UM * inner.ve.phi};
  r.sigma_upper = index_exponent(UM) + 1;
  if (*r.sigma_upper != row_upper_bound(r.table_row, cf.s)) {
    throw Error(ErrorKind::PathDisagreement, "witness index does not match the row bound");
  }
  r.certificate = std::move(ve);
  return r;
}

SimpleVe construct_simple_ve(const Algebra& alg) {
  const PrimeContext& ctx = alg.context();
  const CanonicalResult cr = canonical_form(alg);
  if (decide_index_p(cr.form) == Decision::No) {
    throw Error(ErrorKind::NotIndexPSelfSimilar, "algebra " + cr.form.to_string() + " is not self-similar of index p");
  }
  const Mat Uc = canonical_basis(alg);
  const Mat prep = hyperbolic_preparation(cr.form, cr.matrix);
  const Mat Uh = Mat::from_integers(ctx, 3, 3, {2, 0, 0, 0, 1, 1, 0, -1, 1});
  const Mat T = Uc * prep * Uh;
  if (!is_hyperbolic_form(change_of_basis(alg.matrix(), T))) {
    throw Error(ErrorKind::PathDisagreement, "preparation did not reach the hyperbolic form");
  }
  SimpleVe out{VirtualEndomorphism{BracketTable::from_algebra(alg), T * diag_powers(ctx, {0, 1, 0}),
                                   T * diag_powers(ctx, {0, 0, 1})},
               T};
  return out;
}

bool is_morphism(const VirtualEndomorphism& ve) {
  const int n = ve.ambient.dim();
  const Mat& U = ve.domain_U;
  const Mat Uinv = inverse(U);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Mat br = ve.ambient.bracket(U.column(i), U.column(j));
      const Mat coeff = Uinv * br;
      if (!coeff.is_integral()) throw Error(ErrorKind::NotSubalgebra, "domain is not closed under the bracket");
      if (!(ve.phi * coeff == ve.ambient.bracket(ve.phi.column(i), ve.phi.column(j)))) return false;
    }
  }
  return true;
}

std::vector<Mat> domain_chain(const VirtualEndomorphism& ve, int depth) {
  if (depth < 0) throw Error(ErrorKind::InvalidInput, "depth must be >= 0");
  const PrimeContext& ctx = ve.ambient.context();
  const int n = ve.ambient.dim();
  std::vector<Mat> chain{Mat::identity(ctx, n)};
  for (int k = 0; k < depth; ++k) {
    const Mat G = inverse(chain.back()) * ve.phi;
    const SmithForm sf = snf(G);
    std::vector<Valuation> exps;
    for (Valuation d : sf.divisors) exps.push_back(d == kInfinity ? 0 : std::max<Valuation>(0, -d));
    const Mat next = ve.domain_U * sf.Q * diag_powers(ctx, exps);
    chain.push_back(hnf_columns(next).H);
  }
  return chain;
}

RegularityResult regularity_check(const VirtualEndomorphism& ve, int depth) {
  RegularityResult r;
  const std::vector<Mat> chain = domain_chain(ve, depth);
  const Mat Uinv = inverse(ve.domain_U);
  for (int k = 0; k < depth; ++k) {
    const Valuation step = index_exponent(chain[static_cast<std::size_t>(k + 1)]) - index_exponent(chain[static_cast<std::size_t>(k)]);
    r.index_steps.push_back(step);
    if (step != 1) r.regular = false;
    const Mat& D = chain[static_cast<std::size_t>(k + 1)];
    if (column_span_contains(D, apply_phi(ve, Uinv, D))) r.escape = false;
  }
  return r;
}

std::vector<Mat> hermite_sublattices(const PrimeContext& ctx, int n, Valuation j) {
  std::vector<Mat> out;
  std::vector<Valuation> d(static_cast<std::size_t>(n), 0);
  std::function<void(int, Valuation)> split = [&](int i, Valuation left) {
    if (i == n - 1) {
      d[static_cast<std::size_t>(i)] = left;
      // Free entries: rows r < c, residues mod p^{d_r}.
      Mat H = diag_powers(ctx, d);
      std::vector<std::pair<int, int>> slots;
      for (int c = 0; c < n; ++c) {
        for (int r = 0; r < c; ++r) {
          if (d[static_cast<std::size_t>(r)] > 0) slots.emplace_back(r, c);
        }
      }
      std::function<void(std::size_t)> fill = [&](std::size_t idx) {
        if (idx == slots.size()) {
          out.push_back(H);
          return;
        }
        const auto [r, c] = slots[idx];
        const mpz_class bound = ctx.pow_p(d[static_cast<std::size_t>(r)]);
        for (mpz_class v = 0; v < bound; ++v) {
          H(r, c) = PadicScalar::from_integer(v, ctx);
          fill(idx + 1);
        }
        H(r, c) = PadicScalar::zero(ctx);
      };
      fill(0);
      return;
    }
    for (Valuation v = 0; v <= left; ++v) {
      d[static_cast<std::size_t>(i)] = v;
      split(i + 1, left - v);
    }
  };
  split(0, j);
  return out;
}

std::optional<Mat> invariant_ideal_search(const VirtualEndomorphism& ve, int K, unsigned threads) {
  if (K < 1) throw Error(ErrorKind::InvalidInput, "search bound must be >= 1");
  const PrimeContext& ctx = ve.ambient.context();
  const int n = ve.ambient.dim();
  const std::vector<Mat> chain = domain_chain(ve, K);
  const Mat& DK = chain.back();
  const Valuation base = index_exponent(DK);
  const Mat Uinv = inverse(ve.domain_U);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  auto accepts = [&](const Mat& H) {
    const Mat J = hnf_columns(DK * H).H;
    if (!column_span_contains(ve.domain_U, J)) return false;
    if (!is_ideal(ve.ambient, J)) return false;
    return column_span_contains(J, apply_phi(ve, Uinv, J));
  };

  for (Valuation j = std::max<Valuation>(1, base); j <= K; ++j) {
    const std::vector<Mat> candidates = hermite_sublattices(ctx, n, j - base);
    const std::size_t total = candidates.size();
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, total / 64)));
    std::vector<std::size_t> first(workers, total);
    auto scan = [&](unsigned w) {
      for (std::size_t i = w; i < total; i += workers) {
        if (i >= first[w] ) break;
        if (accepts(candidates[i])) {
          first[w] = i;
          break;
        }
      }
    };
    if (workers <= 1) {
      scan(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
      for (auto& t : pool) t.join();
    }
    const std::size_t best = *std::min_element(first.begin(), first.end());
    if (best < total) return hnf_columns(DK * candidates[best]).H;
  }
  return std::nullopt;
}

bool residually_nilpotent(const SInvariants& s) { return s.s[1] >= 1; }

VirtualEndomorphism lowdim_simple_ve(int dim, Valuation s, Valuation k, const PrimeContext& ctx) {
  if (k < 1) throw Error(ErrorKind::InvalidParameters, "index exponent must be >= 1");
  if (dim == 1) {
    return VirtualEndomorphism{BracketTable::abelian(ctx, 1), diag_powers(ctx, {k}), Mat::identity(ctx, 1)};
  }
  if (dim != 2) throw Error(ErrorKind::InvalidParameters, "dimension must be 1 or 2");
  if (s != kInfinity && s < 0) throw Error(ErrorKind::InvalidParameters, "s must be >= 0");
  Mat phi = s == kInfinity ? Mat::from_integers(ctx, 2, 2, {0, 1, 1, 0}) : Mat::identity(ctx, 2);
  return VirtualEndomorphism{BracketTable::two_dim(ctx, s), diag_powers(ctx, {k, 0}), phi};
}

}  // namespace lielat
