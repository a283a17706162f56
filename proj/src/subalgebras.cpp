#include "lielat/subalgebras.hpp"

#include <algorithm>
#include <set>

namespace lielat {

int XiSymbol::class_index() const {
  switch (shape) {
    case Shape::Empty: return 0;
    case Shape::Single: return e != 0 ? 0 : 1;
    case Shape::Pair:
      if (e != 0) return 0;
      return f != 0 ? 1 : 2;
  }
  return 0;
}

std::string XiSymbol::to_string() const {
  switch (shape) {
    case Shape::Empty: return "()";
    case Shape::Single: return "(" + std::to_string(e) + ")";
    case Shape::Pair: return "(" + std::to_string(e) + "," + std::to_string(f) + ")";
  }
  return "()";
}

std::vector<XiSymbol> all_xi_symbols(long p) {
  std::vector<XiSymbol> out;
  out.push_back(XiSymbol{});
  for (long e = 0; e < p; ++e) out.push_back(XiSymbol{XiSymbol::Shape::Single, e, 0});
  for (long e = 0; e < p; ++e) {
    for (long f = 0; f < p; ++f) out.push_back(XiSymbol{XiSymbol::Shape::Pair, e, f});
  }
  return out;
}

Mat u_xi(const XiSymbol& xi, const PrimeContext& ctx) {
  const long p = ctx.p();
  if (xi.e < 0 || xi.e >= p || xi.f < 0 || xi.f >= p) {
    throw Error(ErrorKind::InvalidInput, "symbol digits must lie in 0..p-1");
  }
  switch (xi.shape) {
    case XiSymbol::Shape::Empty: return Mat::from_integers(ctx, 3, 3, {p, 0, 0, 0, 1, 0, 0, 0, 1});
    case XiSymbol::Shape::Single: return Mat::from_integers(ctx, 3, 3, {1, 0, 0, xi.e, p, 0, 0, 0, 1});
    case XiSymbol::Shape::Pair: return Mat::from_integers(ctx, 3, 3, {1, 0, 0, 0, 1, 0, xi.e, xi.f, p});
  }
  throw Error(ErrorKind::InvalidInput, "unknown symbol shape");
}

std::vector<SubalgebraReport> enumerate_index_p(const Algebra& alg) {
  const PrimeContext& ctx = alg.context();
  std::vector<SubalgebraReport> out;
  for (const XiSymbol& xi : all_xi_symbols(ctx.p())) {
    SubalgebraReport r;
    r.xi = xi;
    r.U = u_xi(xi, ctx);
    SubalgebraCheck check = is_subalgebra(alg, r.U);
    r.is_subalgebra = check.is_subalgebra;
    r.B = check.B;
    if (r.is_subalgebra && !det(r.B).is_zero()) r.sub_s_invariants = s_invariants(r.B);
    out.push_back(std::move(r));
  }
  return out;
}

Mat b_xi(const Mat& A, const XiSymbol& xi) {
  if (!A.is_diagonal() || A.rows() != 3) throw Error(ErrorKind::NotDiagonal, "b_xi needs a diagonal 3x3 matrix");
  const PrimeContext& ctx = A.context();
  const PadicScalar p = PadicScalar::power_of_p(1, ctx);
  const PadicScalar pinv = PadicScalar::power_of_p(-1, ctx);
  const PadicScalar e = PadicScalar::from_integer(xi.e, ctx);
  const PadicScalar f = PadicScalar::from_integer(xi.f, ctx);
  const PadicScalar a0 = A(0, 0), a1 = A(1, 1), a2 = A(2, 2);
  Mat B(ctx, 3, 3);
  switch (xi.shape) {
    case XiSymbol::Shape::Empty:
      B(0, 0) = pinv * a0;
      B(1, 1) = p * a1;
      B(2, 2) = p * a2;
      break;
    case XiSymbol::Shape::Single:
      B(0, 0) = p * a0;
      B(0, 1) = -(e * a0);
      B(1, 0) = -(e * a0);
      B(1, 1) = pinv * (e * e * a0 + a1);
      B(2, 2) = p * a2;
      break;
    case XiSymbol::Shape::Pair:
      B(0, 0) = p * a0;
      B(0, 2) = -(e * a0);
      B(1, 1) = p * a1;
      B(1, 2) = -(f * a1);
      B(2, 0) = -(e * a0);
      B(2, 1) = -(f * a1);
      B(2, 2) = pinv * (e * e * a0 + f * f * a1 + a2);
      break;
  }
  return B;
}

std::optional<NssViolation> nss_violation(const Mat& A) {
  if (!A.is_diagonal() || A.rows() != 3) throw Error(ErrorKind::NotDiagonal, "condition needs a diagonal 3x3 matrix");
  const PrimeContext& ctx = A.context();
  const long p = ctx.p();
  const PadicScalar a0 = A(0, 0), a1 = A(1, 1), a2 = A(2, 2);
  auto sq = [&](long x) { return PadicScalar::from_integer(x * x, ctx); };
  for (long e = 1; e < p; ++e) {
    if ((sq(e) * a0 + a1).valuation() != a0.valuation()) return NssViolation{0, e, 0};
  }
  for (long e = 1; e < p; ++e) {
    for (long f = 0; f < p; ++f) {
      if ((sq(e) * a0 + sq(f) * a1 + a2).valuation() != a0.valuation()) return NssViolation{1, e, f};
    }
  }
  for (long f = 1; f < p; ++f) {
    if ((sq(f) * a1 + a2).valuation() != a1.valuation()) return NssViolation{2, 0, f};
  }
  return std::nullopt;
}

SInvariants sub_s_invariants_predicted(const SInvariants& s, int i) {
  if (i < 0 || i > 2) throw Error(ErrorKind::InvalidInput, "class index must be 0, 1 or 2");
  if (s.s[static_cast<std::size_t>(i)] < 1) {
    throw Error(ErrorKind::NotSubalgebra, "s_" + std::to_string(i) + " = 0: the submodule is not a subalgebra");
  }
  SInvariants out;
  for (int k = 0; k < 3; ++k) out.s[static_cast<std::size_t>(k)] = ext_add(s.s[static_cast<std::size_t>(k)], k == i ? -1 : 1);
  std::sort(out.s.begin(), out.s.end());
  return out;
}

bool key_identity_check(const Algebra& alg, const XiSymbol& xi) {
  const Mat& A = alg.matrix();
  const PrimeContext& ctx = alg.context();
  if (!A.is_diagonal()) throw Error(ErrorKind::PreconditionViolated, "basis is not diagonalizing");
  for (int i = 0; i < 3; ++i) {
    if (A(i, i).is_zero()) throw Error(ErrorKind::PreconditionViolated, "algebra is solvable");
  }
  if (A(0, 0).valuation() > A(1, 1).valuation() || A(1, 1).valuation() > A(2, 2).valuation()) {
    throw Error(ErrorKind::PreconditionViolated, "diagonal valuations are not sorted");
  }
  if (auto v = nss_violation(A)) {
    throw Error(ErrorKind::PreconditionViolated, "valuation condition " + std::to_string(v->condition) + " fails");
  }
  const Mat U = u_xi(xi, ctx);
  const SubalgebraCheck check = is_subalgebra(alg, U);
  if (!check.is_subalgebra) throw Error(ErrorKind::PreconditionViolated, "L^" + xi.to_string() + " is not a subalgebra");
  const int i = xi.class_index();
  const PadicScalar ps = PadicScalar::power_of_p(A(i, i).valuation(), ctx);
  const Mat lhs = (U * check.B).hconcat(U.scaled(ps));
  const Mat rhs = A.scaled(PadicScalar::power_of_p(1, ctx)).hconcat(Mat::identity(ctx, 3).scaled(ps));
  return hnf_columns(lhs).H == hnf_columns(rhs).H;
}

std::vector<Mat> index_p2_sublattices(const PrimeContext& ctx) {
  std::vector<Mat> out;
  std::set<std::string> seen;
  const auto symbols = all_xi_symbols(ctx.p());
  for (const XiSymbol& a : symbols) {
    const Mat Ua = u_xi(a, ctx);
    for (const XiSymbol& b : symbols) {
      Mat H = hnf_columns(Ua * u_xi(b, ctx)).H;
      if (seen.insert(H.to_string()).second) out.push_back(std::move(H));
    }
  }
  return out;
}

}  // namespace lielat
