#include "lielat/classify.hpp"

#include <sstream>

namespace lielat {
namespace {

int mod2(Valuation v) { return static_cast<int>(((v % 2) + 2) % 2); }

PadicScalar unit_of(const PadicScalar& x) {
  return PadicScalar::from_parts(x.unit(), 0, *x.context(), x.relative_precision());
}

struct Normalization {
  CanonicalForm form;
  Diagonalization diag;
};

Normalization normalize(const Algebra& alg) {
  const Mat& A = alg.matrix();
  const PrimeContext& ctx = alg.context();
  if (!is_lie(alg)) throw Error(ErrorKind::NotLie, "bracket does not satisfy the Jacobi identity");
  if (det(A).is_zero()) throw Error(ErrorKind::Degenerate, "algebra is solvable (degenerate structure matrix)");
  if (!A.is_symmetric()) throw Error(ErrorKind::NotLie, "structure matrix is not symmetric");

  Normalization out{CanonicalForm{}, congruent_diagonalize(A)};
  const Mat& D = out.diag.D;
  std::array<int, 3> chi{};
  for (int i = 0; i < 3; ++i) {
    const Valuation v = D(i, i).valuation();
    if (2 * v >= ctx.precision()) {
      throw Error(ErrorKind::PrecisionLoss, "diagonal valuation " + std::to_string(v) + " is outside half the precision window");
    }
    out.form.s[static_cast<std::size_t>(i)] = v;
    chi[static_cast<std::size_t>(i)] = square_class(D(i, i)).chi;
  }
  CanonicalForm& cf = out.form;
  cf.p = ctx.p();
  const auto& s = cf.s;
  const int delta = ctx.delta();
  if (s[0] < s[1] && s[1] < s[2]) {
    cf.family = 1;
    cf.eps1 = chi[1] ^ chi[0];
    cf.eps2 = chi[2] ^ chi[0];
  } else if (s[0] == s[1] && s[1] < s[2]) {
    cf.family = 2;
    cf.eps1 = delta ^ chi[0] ^ chi[1];
  } else if (s[0] < s[1] && s[1] == s[2]) {
    cf.family = 3;
    cf.eps2 = delta ^ chi[1] ^ chi[2];
  } else {
    cf.family = 4;
  }
  return out;
}

}  // namespace

std::string CanonicalForm::to_string() const {
  std::ostringstream os;
  os << "L" << family << "(";
  switch (family) {
    case 1: os << s[0] << "," << s[1] << "," << s[2] << "," << eps1.value_or(0) << "," << eps2.value_or(0); break;
    case 2: os << s[0] << "," << s[2] << "," << eps1.value_or(0); break;
    case 3: os << s[0] << "," << s[1] << "," << eps2.value_or(0); break;
    default: os << s[0]; break;
  }
  os << ")";
  return os.str();
}

void validate(const CanonicalForm& cf) {
  auto fail = [&](const std::string& why) { throw Error(ErrorKind::InvalidCanonicalForm, why); };
  const auto& s = cf.s;
  if (s[0] < 0 || s[0] == kInfinity || s[1] == kInfinity || s[2] == kInfinity) fail("s-invariants must be finite and non-negative");
  auto bit = [](const std::optional<int>& e) { return e.has_value() && (*e == 0 || *e == 1); };
  switch (cf.family) {
    case 1:
      if (!(s[0] < s[1] && s[1] < s[2])) fail("family 1 needs s0 < s1 < s2");
      if (!bit(cf.eps1) || !bit(cf.eps2)) fail("family 1 needs eps1 and eps2 in {0,1}");
      break;
    case 2:
      if (!(s[0] == s[1] && s[1] < s[2])) fail("family 2 needs s0 = s1 < s2");
      if (!bit(cf.eps1) || cf.eps2.has_value()) fail("family 2 carries eps1 only");
      break;
    case 3:
      if (!(s[0] < s[1] && s[1] == s[2])) fail("family 3 needs s0 < s1 = s2");
      if (cf.eps1.has_value() || !bit(cf.eps2)) fail("family 3 carries eps2 only");
      break;
    case 4:
      if (!(s[0] == s[1] && s[1] == s[2])) fail("family 4 needs s0 = s1 = s2");
      if (cf.eps1.has_value() || cf.eps2.has_value()) fail("family 4 carries no eps");
      break;
    default:
      fail("family must be 1, 2, 3 or 4");
  }
}

Mat canonical_matrix(const CanonicalForm& cf, const PrimeContext& ctx) {
  validate(cf);
  const auto pw = [&](Valuation k) { return PadicScalar::power_of_p(k, ctx); };
  const PadicScalar rho = PadicScalar::from_integer(ctx.rho(), ctx);
  const PadicScalar one = PadicScalar::from_integer(1, ctx);
  const PadicScalar minus_one = PadicScalar::from_integer(-1, ctx);
  const auto rho_pow = [&](int e) { return e ? rho : one; };
  const auto& s = cf.s;
  switch (cf.family) {
    case 1: return Mat::diagonal({pw(s[0]), rho_pow(*cf.eps1) * pw(s[1]), rho_pow(*cf.eps2) * pw(s[2])});
    case 2: return Mat::diagonal({pw(s[0]), minus_one * rho_pow(*cf.eps1) * pw(s[0]), pw(s[2])});
    case 3: return Mat::diagonal({pw(s[0]), pw(s[1]), minus_one * rho_pow(*cf.eps2) * pw(s[1])});
    default: return Mat::diagonal({pw(s[0]), pw(s[0]), pw(s[0])});
  }
}

CanonicalResult canonical_form(const Algebra& alg) {
  Normalization n = normalize(alg);
  return CanonicalResult{n.form, canonical_matrix(n.form, alg.context())};
}

Mat canonical_basis(const Algebra& alg) {
  const PrimeContext& ctx = alg.context();
  Normalization n = normalize(alg);
  const Mat C = canonical_matrix(n.form, ctx);
  if (alg.matrix() == C) return Mat::identity(ctx, 3);
  Mat D = n.diag.D;
  Mat V = n.diag.V;
  const auto u = [&](int i) { return unit_of(D(i, i)); };

  // Global unit c: the canonical target is reached from c * V^T A V.
  PadicScalar c;
  switch (n.form.family) {
    case 2: c = u(2).inverse(); break;
    case 4: c = u(0) * u(1) * u(2); break;
    default: c = u(0).inverse(); break;
  }
  D = D.scaled(c);
  auto move = [&](int i, int j) {
    Diagonalization m = cassels_move(D, i, j, u(i));
    D = m.D;
    V = V * m.V;
  };
  switch (n.form.family) {
    case 2: move(0, 1); break;
    case 3: move(1, 2); break;
    case 4: move(0, 1); move(1, 2); break;
    default: break;
  }
  Mat S = Mat::identity(ctx, 3);
  for (int i = 0; i < 3; ++i) S(i, i) = sqrt(C(i, i) / D(i, i));
  V = V * S;

  Mat U = inverse(V).transpose().scaled(c * det(V));
  if (!(change_of_basis(alg.matrix(), U) == C)) {
    throw Error(ErrorKind::PathDisagreement, "canonical basis does not reproduce the canonical matrix");
  }
  return U;
}

EtaBreakdown eta(const Mat& A) {
  if (!A.is_square() || A.rows() != 3) throw Error(ErrorKind::InvalidInput, "eta needs a 3x3 matrix");
  const PrimeContext& ctx = A.context();
  const int delta = ctx.delta();
  const PadicScalar d = det(A);
  if (d.is_zero()) throw Error(ErrorKind::Degenerate, "matrix is degenerate");
  const Diagonalization dg = congruent_diagonalize(A);
  const Mat& D = dg.D;

  EtaBreakdown out;
  out.discriminant_valuation_parity = mod2(d.valuation());
  int e = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) e += hilbert_additive(D(i, i), D(j, j));
  }
  out.epsilon_invariant = e % 2;
  out.eta = (delta * out.discriminant_valuation_parity + out.epsilon_invariant) % 2;

  std::array<int, 3> s{};
  std::array<int, 3> eps{};
  for (int i = 0; i < 3; ++i) {
    s[static_cast<std::size_t>(i)] = mod2(D(i, i).valuation());
    eps[static_cast<std::size_t>(i)] = square_class(D(i, i)).chi;
  }
  int f = delta * (s[0] + s[1] + s[2] + s[0] * s[1] + s[0] * s[2] + s[1] * s[2]);
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      f += eps[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)] +
           eps[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(i)];
    }
  }
  out.eta_formula = f % 2;
  if (out.eta != out.eta_formula) {
    throw Error(ErrorKind::PathDisagreement, "eta computations disagree");
  }
  return out;
}

int eta_of_canonical(const CanonicalForm& cf, int delta) {
  validate(cf);
  const Valuation s0 = cf.s[0], s1 = cf.s[1], s2 = cf.s[2];
  switch (cf.family) {
    case 1: {
      const Valuation e1 = *cf.eps1, e2 = *cf.eps2;
      return mod2(delta * (s0 + s1 + s2 + s0 * s1 + s0 * s2 + s1 * s2) + (e1 + e2) * s0 + e2 * s1 + e1 * s2);
    }
    case 2: return mod2(*cf.eps1 * (s0 + s2));
    case 3: return mod2(*cf.eps2 * (s0 + s1));
    default: return 0;
  }
}

const char* to_string(QpType t) { return t == QpType::SL2 ? "sl2" : "sl1d"; }

QpType qp_type(const Algebra& alg) {
  if (!is_lie(alg)) throw Error(ErrorKind::NotLie, "bracket does not satisfy the Jacobi identity");
  return eta(alg).eta == 0 ? QpType::SL2 : QpType::SL1D;
}

bool is_isomorphic(const Algebra& a, const Algebra& b) {
  if (a.context().p() != b.context().p()) throw Error(ErrorKind::InvalidInput, "algebras over different primes");
  return canonical_form(a).form == canonical_form(b).form;
}

std::vector<CanonicalForm> enumerate_canonical_forms(long p, Valuation max_s) {
  std::vector<CanonicalForm> out;
  for (Valuation s0 = 0; s0 <= max_s; ++s0) {
    out.push_back(CanonicalForm{p, 4, {s0, s0, s0}, std::nullopt, std::nullopt});
    for (Valuation s2 = s0 + 1; s2 <= max_s; ++s2) {
      for (int e = 0; e < 2; ++e) {
        out.push_back(CanonicalForm{p, 2, {s0, s0, s2}, e, std::nullopt});
        out.push_back(CanonicalForm{p, 3, {s0, s2, s2}, std::nullopt, e});
      }
    }
    for (Valuation s1 = s0 + 1; s1 <= max_s; ++s1) {
      for (Valuation s2 = s1 + 1; s2 <= max_s; ++s2) {
        for (int e1 = 0; e1 < 2; ++e1) {
          for (int e2 = 0; e2 < 2; ++e2) out.push_back(CanonicalForm{p, 1, {s0, s1, s2}, e1, e2});
        }
      }
    }
  }
  return out;
}

}  // namespace lielat
