#include <doctest.h>

#include "helpers.hpp"
#include "lielat/random.hpp"
#include "oracles.hpp"

using namespace lielat;
using testing_helpers::diag;
using testing_helpers::M;

TEST_CASE("matrix literal parsing") {
  const PrimeContext& ctx = PrimeContext::get(5);
  const Mat A = M(ctx, "1,0,0;0,0,2;0,2,0");
  CHECK(A.rows() == 3);
  CHECK(A(1, 2) == PadicScalar::from_integer(2, ctx));
  CHECK(A.is_symmetric());
  CHECK_FALSE(A.is_diagonal());
  CHECK_THROWS_AS(M(ctx, "1,2;3"), Error);
  CHECK_THROWS_AS(M(ctx, ""), Error);
  CHECK(M(ctx, "1/5,0;0,1").min_valuation() == -1);
}

TEST_CASE("determinant, adjugate and inverse") {
  const PrimeContext& ctx = PrimeContext::get(7);
  const Mat A = M(ctx, "2,1,0;1,3,1;0,1,4");
  CHECK(det(A) == PadicScalar::from_integer(18, ctx));
  CHECK(A * inverse(A) == Mat::identity(ctx, 3));
  CHECK(A * adjugate(A) == Mat::identity(ctx, 3).scaled(det(A)));
  CHECK_THROWS_AS(inverse(diag(ctx, {1, 1, 0})), Error);
}

TEST_CASE("hnf of simple generator sets") {
  const PrimeContext& ctx = PrimeContext::get(3);
  const HermiteForm id = hnf_columns(Mat::identity(ctx, 3));
  CHECK(id.rank == 3);
  CHECK(id.H == Mat::identity(ctx, 3));
  const HermiteForm joint = hnf_columns(diag(ctx, {3, 1, 1}).hconcat(diag(ctx, {1, 3, 3})));
  CHECK(joint.H == Mat::identity(ctx, 3));
  CHECK(hnf_columns(diag(ctx, {3, 3, 3})).H == diag(ctx, {3, 3, 3}));
  CHECK(hnf_columns(diag(ctx, {1, 1, 0})).rank == 2);
}

TEST_CASE("joint span of diag(p,1,1) and diag(1,p,p) contains every basis vector") {
  const oracle::IMat g{{3, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 3, 0}, {0, 0, 1, 0, 0, 3}};
  const auto span = oracle::span_mod(g, 9);
  CHECK(span[81]);  // e0
  CHECK(span[9]);   // e1
  CHECK(span[1]);   // e2
}

TEST_CASE("hnf is unchanged by unimodular column operations") {
  Rng rng(11);
  for (long p : {3L, 5L, 7L}) {
    const PrimeContext& ctx = PrimeContext::get(p);
    for (int t = 0; t < 30; ++t) {
      const Mat G = random_integral(rng, ctx, 3, 3);
      if (det(G).is_zero()) continue;
      const Mat V = random_unimodular(rng, ctx);
      CHECK(hnf_columns(G).H == hnf_columns(G * V).H);
      CHECK(index_exponent(hnf_columns(G).H) == det(G).valuation());
    }
  }
}

TEST_CASE("smith divisors") {
  const PrimeContext& ctx = PrimeContext::get(5);
  CHECK(snf(diag(ctx, {1, 5, -5})).divisors == std::vector<Valuation>{0, 1, 1});
  CHECK(snf(M(ctx, "1,0,0;0,0,2;0,2,0")).divisors == std::vector<Valuation>{0, 0, 0});
  CHECK(snf(diag(ctx, {125, 5, 25})).divisors == std::vector<Valuation>{1, 2, 3});
  CHECK(snf(diag(ctx, {1, 0, 5})).divisors == std::vector<Valuation>{0, 1, kInfinity});
  const Mat A = M(ctx, "5,10,0;1,2,25;0,5,5");
  const SmithForm sf = snf(A);
  Mat D(ctx, 3, 3);
  for (int i = 0; i < 3; ++i) D(i, i) = PadicScalar::power_of_p(sf.divisors[static_cast<std::size_t>(i)], ctx);
  CHECK(sf.P * A * sf.Q == D);
  CHECK(det(sf.P).valuation() == 0);
  CHECK(det(sf.Q).valuation() == 0);
}

TEST_CASE("smith form accepts negative valuations") {
  const PrimeContext& ctx = PrimeContext::get(3);
  CHECK(snf(M(ctx, "1/3,0,0;0,3,0;0,0,1")).divisors == std::vector<Valuation>{-1, 0, 1});
}

TEST_CASE("congruent diagonalization") {
  const PrimeContext& ctx = PrimeContext::get(5);
  const Mat D0 = diag(ctx, {25, 1, 5});
  const Diagonalization d0 = congruent_diagonalize(D0);
  CHECK(d0.D == diag(ctx, {1, 5, 25}));

  const Mat A = M(ctx, "1,0,0;0,0,2;0,2,0");
  const Diagonalization d = congruent_diagonalize(A);
  CHECK(d.D.is_diagonal());
  CHECK(d.V.transpose() * A * d.V == d.D);
  CHECK(det(d.V).valuation() == 0);
  PadicScalar prod = PadicScalar::from_integer(1, ctx);
  for (int i = 0; i < 3; ++i) {
    CHECK(d.D(i, i).valuation() == 0);
    prod *= d.D(i, i);
  }
  CHECK(square_class(prod) == square_class(PadicScalar::from_integer(-1, ctx)));

  CHECK_THROWS_AS(congruent_diagonalize(M(ctx, "1,2,0;0,1,0;0,0,1")), Error);
  CHECK_THROWS_AS(congruent_diagonalize(diag(ctx, {1, 1, 0})), Error);
}

TEST_CASE("hyperbolic block diagonalizes to discriminant -1, checked by brute force mod p^2") {
  for (long p : {3L, 5L, 7L}) {
    const PrimeContext& ctx = PrimeContext::get(p);
    const Mat A = M(ctx, p == 3 ? "0,1,0;1,0,0;0,0,3" : (p == 5 ? "0,1,0;1,0,0;0,0,5" : "0,1,0;1,0,0;0,0,7"));
    const Diagonalization d = congruent_diagonalize(A);
    CHECK(d.D(0, 0).valuation() == 0);
    CHECK(d.D(1, 1).valuation() == 0);
    CHECK(d.D(2, 2).valuation() == 1);
    const PadicScalar u01 = d.D(0, 0) * d.D(1, 1);
    CHECK(square_class(u01) == square_class(PadicScalar::from_integer(-1, ctx)));
    // Oracle: the hyperbolic plane x*y represents every class; a diagonal
    // form a x^2 + b y^2 is congruent to it mod p^2 only if -ab is a square.
    const std::int64_t m = p * p;
    bool found = false;
    for (std::int64_t a = 1; a < m && !found; ++a) {
      if (a % p == 0) continue;
      for (std::int64_t b = 1; b < m && !found; ++b) {
        if (b % p == 0) continue;
        // Search V = [[x,z],[y,w]] with V^T H V = diag(a,b), H = [[0,1],[1,0]].
        for (std::int64_t x = 0; x < p && !found; ++x) {
          for (std::int64_t y = 0; y < p && !found; ++y) {
            for (std::int64_t z = 0; z < p && !found; ++z) {
              for (std::int64_t w = 0; w < p && !found; ++w) {
                if (oracle::mod(x * w - y * z, p) == 0) continue;
                if (oracle::mod(2 * x * y - a, p) == 0 && oracle::mod(2 * z * w - b, p) == 0 &&
                    oracle::mod(x * w + y * z, p) == 0) {
                  CHECK(oracle::is_square_mod(-a * b, p));
                  found = true;
                }
              }
            }
          }
        }
      }
    }
    CHECK(found);
  }
}

TEST_CASE("cassels move preserves the form and moves the factor") {
  for (long p : {3L, 5L, 7L, 11L}) {
    const PrimeContext& ctx = PrimeContext::get(p);
    const long r = ctx.rho();
    const Mat D = diag(ctx, {r * p, r * r * p, 1});
    const PadicScalar u = PadicScalar::from_integer(r, ctx);
    const Diagonalization m = cassels_move(D, 0, 1, u);
    CHECK(m.D(0, 0) == PadicScalar::from_integer(p, ctx));
    CHECK(m.D(1, 1) == PadicScalar::from_integer(r * r * r * p, ctx));
    CHECK(m.V.transpose() * D * m.V == m.D);
    CHECK(det(m.V).valuation() == 0);

    const Diagonalization sq = cassels_move(D, 0, 1, PadicScalar::from_integer(4, ctx));
    for (int i = 0; i < 3; ++i) CHECK(square_class(sq.D(i, i)) == square_class(D(i, i)));
  }
  const PrimeContext& ctx = PrimeContext::get(5);
  CHECK_THROWS_AS(cassels_move(diag(ctx, {1, 5, 1}), 0, 1, PadicScalar::from_integer(2, ctx)), Error);
  CHECK_THROWS_AS(cassels_move(M(ctx, "1,1,0;1,1,0;0,0,1"), 0, 1, PadicScalar::from_integer(2, ctx)), Error);
}

TEST_CASE("column span containment") {
  const PrimeContext& ctx = PrimeContext::get(3);
  CHECK(column_span_contains(Mat::identity(ctx, 3), diag(ctx, {3, 1, 9})));
  CHECK_FALSE(column_span_contains(diag(ctx, {3, 1, 1}), Mat::identity(ctx, 3)));
  CHECK(index_exponent(diag(ctx, {3, 9, 1})) == 3);
}
