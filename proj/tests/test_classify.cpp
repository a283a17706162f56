#include <doctest.h>

#include "helpers.hpp"
#include "lielat/classify.hpp"
#include "lielat/random.hpp"

using namespace lielat;
using testing_helpers::diag;
using testing_helpers::M;

TEST_CASE("canonical form of sl2") {
  for (long p : {3L, 5L, 7L}) {
    const PrimeContext& ctx = PrimeContext::get(p);
    const CanonicalResult r = canonical_form(Algebra(M(ctx, "1,0,0;0,0,2;0,2,0")));
    CHECK(r.form.family == 4);
    CHECK(r.form.s == std::array<Valuation, 3>{0, 0, 0});
    CHECK(r.matrix == Mat::identity(ctx, 3));
  }
}

TEST_CASE("canonical form of the sl1 basis matrices") {
  for (long p : {3L, 5L, 7L, 11L}) {
    const PrimeContext& ctx = PrimeContext::get(p);
    const long r = ctx.rho();
    const CanonicalResult a = canonical_form(Algebra(diag(ctx, {-1, r, p})));
    CHECK(a.form.family == 2);
    CHECK(a.form.s == std::array<Valuation, 3>{0, 0, 1});
    CHECK(a.form.eps1 == 1);
    CHECK(a.matrix == diag(ctx, {1, -r, p}));
    for (long m = 0; m <= 2; ++m) {
      const long pm = m == 0 ? 1 : (m == 1 ? p : p * p);
      const CanonicalResult b = canonical_form(Algebra(diag(ctx, {-pm * p, r * pm * p, pm})));
      CHECK(b.form.family == 3);
      CHECK(b.form.s[0] == m);
      CHECK(b.form.s[1] == m + 1);
      CHECK(b.form.eps2 == 1);
      CHECK(b.matrix == diag(ctx, {pm, pm * p, -r * pm * p}));
    }
  }
}

TEST_CASE("canonical basis realizes the canonical matrix") {
  Rng rng(3);
  for (long p : {3L, 5L, 7L}) {
    const PrimeContext& ctx = PrimeContext::get(p);
    for (int t = 0; t < 40; ++t) {
      const Algebra alg(random_symmetric_nondegenerate(rng, ctx));
      const Mat U = canonical_basis(alg);
      CHECK(det(U).valuation() == 0);
      CHECK(change_of_basis(alg.matrix(), U) == canonical_form(alg).matrix);
    }
  }
}

TEST_CASE("canonical form errors") {
  const PrimeContext& ctx = PrimeContext::get(3);
  auto kind = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidInput;
  };
  CHECK(kind([&] { canonical_form(Algebra(M(ctx, "0,1,0;0,0,0;0,0,1"))); }) == ErrorKind::NotLie);
  CHECK(kind([&] { canonical_form(Algebra(diag(ctx, {1, 1, 0}))); }) == ErrorKind::Degenerate);
  CanonicalForm bad{3, 1, {0, 0, 1}, 0, 0};
  CHECK_THROWS_AS(validate(bad), Error);
  CanonicalForm bad2{3, 4, {1, 1, 1}, 1, std::nullopt};
  CHECK_THROWS_AS(validate(bad2), Error);
}

TEST_CASE("eta values") {
  for (long p : {3L, 5L, 7L, 11L}) {
    const PrimeContext& ctx = PrimeContext::get(p);
    const long r = ctx.rho();
    CHECK(eta(diag(ctx, {1, 1, 1})).eta == 0);
    CHECK(eta(diag(ctx, {1, -r, p})).eta == 1);
    for (int e1 = 0; e1 <= 1; ++e1) {
      for (long s0 : {0L, 1L}) {
        for (long s2 : {s0 + 1, s0 + 2}) {
          const long ps0 = s0 == 0 ? 1 : p;
          const long ps2 = s2 == 1 ? p : (s2 == 2 ? p * p : p * p * p);
          const long u = e1 ? r : 1;
          CHECK(eta(diag(ctx, {ps0, -u * ps0, ps2})).eta == (e1 * (s0 + s2)) % 2);
        }
      }
    }
  }
}

TEST_CASE("eta closed forms match both computations on every canonical representative") {
  for (long p : {3L, 5L, 7L}) {
    const PrimeContext& ctx = PrimeContext::get(p);
    for (const CanonicalForm& cf : enumerate_canonical_forms(p, 3)) {
      const EtaBreakdown e = eta(canonical_matrix(cf, ctx));
      CHECK(e.eta == e.eta_formula);
      CHECK(e.eta == eta_of_canonical(cf, ctx.delta()));
    }
  }
}

TEST_CASE("Q_p type") {
  const PrimeContext& ctx = PrimeContext::get(5);
  CHECK(qp_type(Algebra(M(ctx, "1,0,0;0,0,2;0,2,0"))) == QpType::SL2);
  CHECK(qp_type(Algebra(diag(ctx, {1, -2, 5}))) == QpType::SL1D);
  CHECK(qp_type(Algebra(diag(ctx, {1, 5, -5}))) == QpType::SL2);
  CHECK(std::string(to_string(QpType::SL1D)) == "sl1d");
}

TEST_CASE("isomorphism") {
  Rng rng(21);
  for (long p : {3L, 5L}) {
    const PrimeContext& ctx = PrimeContext::get(p);
    CHECK_FALSE(is_isomorphic(Algebra(diag(ctx, {1, p, -p})), Algebra(diag(ctx, {1, p, -ctx.rho() * p}))));
    for (int t = 0; t < 20; ++t) {
      const Mat A = random_symmetric_nondegenerate(rng, ctx);
      const Mat V = random_unimodular(rng, ctx);
      const Mat B = (V.transpose() * A * V).scaled(random_unit(rng, ctx));
      CHECK(is_isomorphic(Algebra(A), Algebra(B)));
      CHECK(is_isomorphic(Algebra(A), Algebra(A)));
    }
  }
}

TEST_CASE("enumerated canonical forms round trip and are pairwise distinct") {
  for (long p : {3L, 5L}) {
    const PrimeContext& ctx = PrimeContext::get(p);
    const auto forms = enumerate_canonical_forms(p, 3);
    for (std::size_t i = 0; i < forms.size(); ++i) {
      CHECK(canonical_form(Algebra(canonical_matrix(forms[i], ctx))).form == forms[i]);
      for (std::size_t j = i + 1; j < forms.size(); ++j) CHECK_FALSE(forms[i] == forms[j]);
    }
  }
}

TEST_CASE("canonical form labels") {
  CanonicalForm cf{5, 2, {0, 0, 1}, 1, std::nullopt};
  CHECK(cf.to_string() == "L2(0,1,1)");
  CanonicalForm l4{5, 4, {2, 2, 2}, std::nullopt, std::nullopt};
  CHECK(l4.to_string() == "L4(2)");
}
