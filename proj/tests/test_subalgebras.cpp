#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "lielat/subalgebras.hpp"

using namespace lielat;
using testing_helpers::diag;
using testing_helpers::S;

TEST_CASE("xi symbols and their classes") {
  const auto xs = all_xi_symbols(3);
  CHECK(xs.size() == 13);
  CHECK(xs[0].shape == XiSymbol::Shape::Empty);
  CHECK(xs[0].class_index() == 0);
  CHECK(XiSymbol{XiSymbol::Shape::Single, 0, 0}.class_index() == 1);
  CHECK(XiSymbol{XiSymbol::Shape::Single, 2, 0}.class_index() == 0);
  CHECK(XiSymbol{XiSymbol::Shape::Pair, 0, 1}.class_index() == 1);
  CHECK(XiSymbol{XiSymbol::Shape::Pair, 1, 0}.class_index() == 0);
  CHECK(XiSymbol{XiSymbol::Shape::Pair, 0, 0}.class_index() == 2);
  CHECK(XiSymbol{XiSymbol::Shape::Pair, 1, 2}.to_string() == "(1,2)");
}

TEST_CASE("u_xi matrices span distinct index-p sublattices") {
  for (long p : {3L, 5L}) {
    const PrimeContext& ctx = PrimeContext::get(p);
    std::set<std::string> seen;
    for (const XiSymbol& xi : all_xi_symbols(p)) {
      const Mat U = u_xi(xi, ctx);
      CHECK(index_exponent(U) == 1);
      seen.insert(hnf_columns(U).H.to_string());
    }
    CHECK(seen.size() == static_cast<std::size_t>(1 + p + p * p));
  }
}

TEST_CASE("b_xi closed forms equal the change of basis") {
  for (long p : {3L, 5L, 7L}) {
    const PrimeContext& ctx = PrimeContext::get(p);
    for (const Mat& A : {diag(ctx, {1, p, -p}), diag(ctx, {2, 3 * p, p * p}), diag(ctx, {p, -ctx.rho() * p, p * p * p})}) {
      for (const XiSymbol& xi : all_xi_symbols(p)) {
        CHECK(b_xi(A, xi) == change_of_basis(A, u_xi(xi, ctx)));
      }
    }
  }
  const PrimeContext& ctx = PrimeContext::get(3);
  CHECK_THROWS_AS(b_xi(Mat::parse("1,1,0;1,1,0;0,0,1", ctx), XiSymbol{}), Error);
}

TEST_CASE("b_xi for the empty symbol and for (0)") {
  const PrimeContext& ctx = PrimeContext::get(5);
  const Mat A = diag(ctx, {2, 3, 7});
  CHECK(b_xi(A, XiSymbol{}) == Mat::diagonal({PadicScalar::from_rational(2, 5, ctx), S(15, ctx), S(35, ctx)}));
  const Mat B = b_xi(diag(ctx, {1, 5, -5}), XiSymbol{XiSymbol::Shape::Single, 0, 0});
  CHECK(B(1, 0).is_zero());
  CHECK(B(1, 1) == S(1, ctx));
}

TEST_CASE("index-p enumeration") {
  for (long p : {3L, 5L}) {
    const PrimeContext& ctx = PrimeContext::get(p);
    const auto reports = enumerate_index_p(Algebra(diag(ctx, {p, p, p})));
    CHECK(reports.size() == static_cast<std::size_t>(1 + p + p * p));
    for (const auto& r : reports) CHECK(r.is_subalgebra);
  }
  const PrimeContext& ctx = PrimeContext::get(3);
  const auto reports = enumerate_index_p(Algebra(diag(ctx, {1, 3, -3})));
  CHECK(reports.size() == 13);
  for (const auto& r : reports) {
    // Only class 1 and 2 subalgebras exist when s0 = 0 and s1 = s2 = 1.
    if (r.is_subalgebra) CHECK(r.xi.class_index() != 0);
  }
}

TEST_CASE("valuation conditions") {
  const PrimeContext& ctx = PrimeContext::get(5);
  CHECK(nss_condition(diag(ctx, {1, 5, 25})));
  CHECK(nss_condition(diag(ctx, {1, -2, 5})));
  const auto v = nss_violation(diag(ctx, {1, -1, 5}));
  REQUIRE(v.has_value());
  CHECK(v->condition == 0);
  CHECK(v->e * v->e % 5 == 1);
  CHECK_THROWS_AS(nss_violation(Mat::parse("1,1,0;1,1,0;0,0,1", ctx)), Error);
}

TEST_CASE("predicted subalgebra s-invariants") {
  CHECK(sub_s_invariants_predicted(SInvariants{{1, 2, 3}}, 0).s == std::array<Valuation, 3>{0, 3, 4});
  CHECK(sub_s_invariants_predicted(SInvariants{{1, 2, 3}}, 2).s == std::array<Valuation, 3>{2, 2, 3});
  CHECK(sub_s_invariants_predicted(SInvariants{{1, 2, 3}}, 1).s == std::array<Valuation, 3>{1, 2, 4});
  CHECK_THROWS_AS(sub_s_invariants_predicted(SInvariants{{0, 1, 1}}, 0), Error);
}

TEST_CASE("measured subalgebra s-invariants follow the prediction") {
  for (long p : {3L, 5L}) {
    const PrimeContext& ctx = PrimeContext::get(p);
    for (const Mat& A : {diag(ctx, {p, ctx.rho() * p * p, ctx.rho() * p * p * p}), diag(ctx, {1, -ctx.rho(), p}),
                         diag(ctx, {p, -ctx.rho() * p, p * p * p}), diag(ctx, {1, p, -ctx.rho() * p})}) {
      REQUIRE(nss_condition(A));
      const SInvariants s = s_invariants(A);
      for (const auto& r : enumerate_index_p(Algebra(A))) {
        const int i = r.xi.class_index();
        CHECK(r.is_subalgebra == (s.s[static_cast<std::size_t>(i)] >= 1));
        if (r.is_subalgebra) CHECK(*r.sub_s_invariants == sub_s_invariants_predicted(s, i));
      }
    }
  }
}

TEST_CASE("commutator identity on subalgebras of bases meeting the valuation conditions") {
  for (long p : {3L, 5L}) {
    const PrimeContext& ctx = PrimeContext::get(p);
    const Algebra a(diag(ctx, {p, ctx.rho() * p * p, ctx.rho() * p * p * p}));
    for (const auto& r : enumerate_index_p(a)) {
      if (r.is_subalgebra) CHECK(key_identity_check(a, r.xi));
    }
    const Algebra b(diag(ctx, {p, -ctx.rho() * p, p * p * p}));
    for (const auto& r : enumerate_index_p(b)) {
      if (r.is_subalgebra && r.xi.class_index() == 0) CHECK(key_identity_check(b, r.xi));
    }
  }
  const PrimeContext& ctx = PrimeContext::get(5);
  try {
    key_identity_check(Algebra(diag(ctx, {5, -5, 25})), XiSymbol{});
    FAIL("expected PreconditionViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionViolated);
  }
}

TEST_CASE("index-p^2 sublattices") {
  // Z_p^3 has (p^2+p+1)(p^2+1) sublattices of index p^2.
  for (long p : {3L, 5L}) {
    const PrimeContext& ctx = PrimeContext::get(p);
    const auto all = index_p2_sublattices(ctx);
    const long expected = (p * p + p + 1) * (p * p + 1);
    CHECK(static_cast<long>(all.size()) == expected);
    for (const Mat& U : all) CHECK(index_exponent(U) == 2);
  }
}

TEST_CASE("b_xi agrees with the change of basis on random diagonal matrices") {
  std::mt19937_64 rng(17);
  for (long p : {3L, 5L}) {
    const PrimeContext& ctx = PrimeContext::get(p);
    const auto symbols = all_xi_symbols(p);
    for (int t = 0; t < 100; ++t) {
      std::vector<PadicScalar> d;
      for (int i = 0; i < 3; ++i) {
        long v = 0;
        while (v == 0) v = std::uniform_int_distribution<long>(-50, 50)(rng);
        d.push_back(PadicScalar::from_integer(v, ctx).shifted(std::uniform_int_distribution<int>(0, 3)(rng)));
      }
      const Mat A = Mat::diagonal(d);
      // One symbol of each shape per matrix.
      const XiSymbol picks[] = {symbols[0], symbols[1 + static_cast<std::size_t>(t % p)],
                                symbols[static_cast<std::size_t>(1 + p + (t * 7) % (p * p))]};
      for (const XiSymbol& xi : picks) CHECK(b_xi(A, xi) == change_of_basis(A, u_xi(xi, ctx)));
    }
  }
}

TEST_CASE("every random index-p sublattice is one of the enumerated ones") {
  std::mt19937_64 rng(23);
  for (long p : {3L, 5L}) {
    const PrimeContext& ctx = PrimeContext::get(p);
    std::set<std::string> known;
    for (const XiSymbol& xi : all_xi_symbols(p)) known.insert(hnf_columns(u_xi(xi, ctx)).H.to_string());
    int hits = 0;
    while (hits < 50) {
      Mat U(ctx, 3, 3);
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) U(r, c) = PadicScalar::from_integer(std::uniform_int_distribution<long>(-9, 9)(rng), ctx);
      }
      const PadicScalar d = det(U);
      if (d.is_zero() || d.valuation() != 1) continue;
      ++hits;
      CHECK(known.count(hnf_columns(U).H.to_string()) == 1);
    }
  }
}
